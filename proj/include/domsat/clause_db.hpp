#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "domsat/literal.hpp"

namespace domsat {

using ClauseRef = std::uint32_t;
inline constexpr ClauseRef kClauseRefUndef = 0xFFFFFFFFu;

/**
 * A stored clause together with its relevance metadata.
 *
 * For learnt clauses, lbd is the number of distinct decision levels spanned
 * by the clause when it was derived (kept as the minimum over later
 * recomputations) and activity is the conflict-analysis involvement score.
 */
struct Clause {
    std::vector<Lit> lits;
    double activity = 0.0;
    std::uint32_t lbd = 0;
    bool learnt = false;
    bool dead = false;

    int size() const { return static_cast<int>(lits.size()); }

    /// Short or low-lbd clauses are exempt from every deletion strategy.
    bool is_protected() const { return size() <= 2 || lbd <= 2; }

    /// Deletable by a reduction pass (protection aside, locking is the
    /// caller's concern).
    bool reduction_eligible() const { return size() > 2 && lbd > 2; }
};

/**
 * Owner of all clauses: the problem clauses (never removed) and the learnt
 * set, which reduction strategies shrink. Slots of removed learnt clauses are
 * recycled, so a ClauseRef stays valid as long as its clause is alive.
 */
class ClauseDatabase {
  public:
    ClauseRef add_original(std::vector<Lit> lits);
    ClauseRef add_learnt(std::vector<Lit> lits, std::uint32_t lbd);

    Clause& operator[](ClauseRef ref) { return store_[ref]; }
    const Clause& operator[](ClauseRef ref) const { return store_[ref]; }

    std::span<const ClauseRef> originals() const { return originals_; }
    const std::vector<ClauseRef>& learnts() const { return learnts_; }
    std::vector<ClauseRef>& learnts() { return learnts_; }

    std::size_t num_learnts() const { return learnts_.size(); }

    /// Marks the clause dead and recycles its slot. The caller must have
    /// removed it from learnts() (reduction passes compact in bulk).
    void release(ClauseRef ref);

    /// Marks dead + erases from the learnt list; for one-off removals.
    void remove_learnt(ClauseRef ref);

    // CVSIDS state (see bump_clause_activity / decay_clause_activity).
    double activity_increment = 1.0;
    double activity_decay = 0.999;

  private:
    ClauseRef allocate(Clause clause);

    std::vector<Clause> store_;
    std::vector<ClauseRef> originals_;
    std::vector<ClauseRef> learnts_;
    std::vector<ClauseRef> free_;
};

} // namespace domsat
