#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domsat/clause_db.hpp"

namespace domsat {

/**
 * Clause relevance measures.
 *
 * SIZE and LBD prefer smaller values; CVSIDS (clause activity) prefers larger
 * ones. Every comparison in the dominance algebra goes through prefer(), so
 * the direction is encoded in exactly one place.
 */
enum class MeasureId { Size, Lbd, Cvsids };

constexpr bool smaller_preferred(MeasureId m) { return m != MeasureId::Cvsids; }

const char* measure_name(MeasureId m);

/// Parses "size" / "lbd" / "cvsids"; throws std::invalid_argument otherwise.
MeasureId measure_from_name(const std::string& name);

/**
 * An ordered, duplicate-free set of measures. Dominance and the compromise
 * degree are always taken with respect to such a set.
 */
class MeasureSet {
  public:
    MeasureSet(std::initializer_list<MeasureId> ids);
    explicit MeasureSet(std::vector<MeasureId> ids);

    /// {SIZE, LBD, CVSIDS} — the default combination.
    static MeasureSet all();

    std::size_t size() const { return ids_.size(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    MeasureId operator[](std::size_t i) const { return ids_[i]; }

    std::string to_string() const; // comma-separated names

    bool operator==(const MeasureSet&) const = default;

  private:
    void validate() const;
    std::vector<MeasureId> ids_;
};

/// Raw measure values of one clause.
struct MeasureVector {
    int size = 1;
    int lbd = 1;
    double activity = 0.0;

    double raw(MeasureId m) const;

    bool operator==(const MeasureVector&) const = default;
};

MeasureVector measures_of(const Clause& clause);

enum class Preference { FirstPreferred, SecondPreferred, Tie };

/// Compares two raw values of measure m. Equality is exact: activities are
/// sums of identical increments, so no epsilon is involved.
Preference prefer(MeasureId m, double a, double b);

/// u is at least as preferred as v on every measure of the set.
bool dominates_weak(const MeasureVector& u, const MeasureVector& v, const MeasureSet& measures);

/// Weak dominance plus strict preference on at least one measure.
bool dominates_strict(const MeasureVector& u, const MeasureVector& v, const MeasureSet& measures);

/**
 * Normalization into [0,1], oriented so that smaller is always preferred:
 *   SIZE   -> size / num_vars
 *   LBD    -> lbd / num_vars
 *   CVSIDS -> 1 / activity, clamped to 1; activity 0 maps to 1 (worst).
 *
 * Requires num_vars >= size (clauses never repeat variables). Dominance
 * checks always use raw values; normalization only feeds deg_comp.
 */
double normalized_component(const MeasureVector& v, MeasureId m, int num_vars);

/// Components aligned with the MeasureSet handed to normalize().
struct NormalizedVector {
    std::vector<double> values;
};

NormalizedVector normalize(const MeasureVector& v, int num_vars, const MeasureSet& measures);

/// Mean of the normalized components: the degree of compromise between the
/// measures' assessments. Lies in [0,1] whenever all activities are >= 1.
double deg_comp(const MeasureVector& v, int num_vars, const MeasureSet& measures);

/**
 * CVSIDS bookkeeping: bumping adds the current increment to the clause's
 * activity, rescaling all learnt activities (and the increment) by 1e-100
 * once any activity passes 1e100; decay grows the increment by
 * 1/activity_decay so later bumps weigh more.
 */
void bump_clause_activity(ClauseDatabase& db, ClauseRef ref);
void decay_clause_activity(ClauseDatabase& db);

} // namespace domsat
