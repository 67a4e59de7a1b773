#include "domsat/clause_db.hpp"

#include <algorithm>
#include <cassert>

namespace domsat {

ClauseRef ClauseDatabase::allocate(Clause clause) {
    if (!free_.empty()) {
        ClauseRef ref = free_.back();
        free_.pop_back();
        store_[ref] = std::move(clause);
        return ref;
    }
    store_.push_back(std::move(clause));
    return static_cast<ClauseRef>(store_.size() - 1);
}

ClauseRef ClauseDatabase::add_original(std::vector<Lit> lits) {
    Clause c;
    c.lits = std::move(lits);
    ClauseRef ref = allocate(std::move(c));
    originals_.push_back(ref);
    return ref;
}

ClauseRef ClauseDatabase::add_learnt(std::vector<Lit> lits, std::uint32_t lbd) {
    Clause c;
    c.lits = std::move(lits);
    c.learnt = true;
    c.lbd = lbd;
    assert(lbd >= 1 && lbd <= c.lits.size());
    ClauseRef ref = allocate(std::move(c));
    learnts_.push_back(ref);
    return ref;
}

void ClauseDatabase::release(ClauseRef ref) {
    Clause& c = store_[ref];
    assert(c.learnt && !c.dead);
    c.dead = true;
    c.lits.clear();
    c.lits.shrink_to_fit();
    free_.push_back(ref);
}

void ClauseDatabase::remove_learnt(ClauseRef ref) {
    auto it = std::find(learnts_.begin(), learnts_.end(), ref);
    assert(it != learnts_.end());
    learnts_.erase(it);
    release(ref);
}

} // namespace domsat
