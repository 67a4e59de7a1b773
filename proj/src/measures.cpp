#include "domsat/measures.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace domsat {

const char* measure_name(MeasureId m) {
    switch (m) {
    case MeasureId::Size:
        return "size";
    case MeasureId::Lbd:
        return "lbd";
    case MeasureId::Cvsids:
        return "cvsids";
    }
    return "?";
}

MeasureId measure_from_name(const std::string& name) {
    if (name == "size")
        return MeasureId::Size;
    if (name == "lbd")
        return MeasureId::Lbd;
    if (name == "cvsids")
        return MeasureId::Cvsids;
    throw std::invalid_argument("unknown measure '" + name + "'");
}

MeasureSet::MeasureSet(std::initializer_list<MeasureId> ids) : ids_(ids) { validate(); }

MeasureSet::MeasureSet(std::vector<MeasureId> ids) : ids_(std::move(ids)) { validate(); }

void MeasureSet::validate() const {
    if (ids_.empty())
        throw std::invalid_argument("measure set must not be empty");
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (std::size_t j = i + 1; j < ids_.size(); ++j)
            if (ids_[i] == ids_[j])
                throw std::invalid_argument("duplicate measure in set");
}

MeasureSet MeasureSet::all() { return {MeasureId::Size, MeasureId::Lbd, MeasureId::Cvsids}; }

std::string MeasureSet::to_string() const {
    std::string out;
    for (MeasureId m : ids_) {
        if (!out.empty())
            out += ',';
        out += measure_name(m);
    }
    return out;
}

double MeasureVector::raw(MeasureId m) const {
    switch (m) {
    case MeasureId::Size:
        return static_cast<double>(size);
    case MeasureId::Lbd:
        return static_cast<double>(lbd);
    case MeasureId::Cvsids:
        return activity;
    }
    return 0.0;
}

MeasureVector measures_of(const Clause& clause) {
    assert(clause.learnt);
    return MeasureVector{clause.size(), static_cast<int>(clause.lbd), clause.activity};
}

Preference prefer(MeasureId m, double a, double b) {
    if (a == b)
        return Preference::Tie;
    const bool first_smaller = a < b;
    if (smaller_preferred(m))
        return first_smaller ? Preference::FirstPreferred : Preference::SecondPreferred;
    return first_smaller ? Preference::SecondPreferred : Preference::FirstPreferred;
}

bool dominates_weak(const MeasureVector& u, const MeasureVector& v, const MeasureSet& measures) {
    for (MeasureId m : measures)
        if (prefer(m, u.raw(m), v.raw(m)) == Preference::SecondPreferred)
            return false;
    return true;
}

bool dominates_strict(const MeasureVector& u, const MeasureVector& v, const MeasureSet& measures) {
    bool strict = false;
    for (MeasureId m : measures) {
        switch (prefer(m, u.raw(m), v.raw(m))) {
        case Preference::SecondPreferred:
            return false;
        case Preference::FirstPreferred:
            strict = true;
            break;
        case Preference::Tie:
            break;
        }
    }
    return strict;
}

double normalized_component(const MeasureVector& v, MeasureId m, int num_vars) {
    assert(num_vars > 0);
    switch (m) {
    case MeasureId::Size:
        assert(v.size >= 1 && v.size <= num_vars);
        return static_cast<double>(v.size) / num_vars;
    case MeasureId::Lbd:
        assert(v.lbd >= 1 && v.lbd <= num_vars);
        return static_cast<double>(v.lbd) / num_vars;
    case MeasureId::Cvsids:
        assert(v.activity >= 0.0);
        if (v.activity <= 0.0)
            return 1.0; // never bumped: worst possible
        return std::min(1.0, 1.0 / v.activity);
    }
    return 1.0;
}

NormalizedVector normalize(const MeasureVector& v, int num_vars, const MeasureSet& measures) {
    NormalizedVector out;
    out.values.reserve(measures.size());
    for (MeasureId m : measures)
        out.values.push_back(normalized_component(v, m, num_vars));
    return out;
}

double deg_comp(const MeasureVector& v, int num_vars, const MeasureSet& measures) {
    double sum = 0.0;
    for (MeasureId m : measures)
        sum += normalized_component(v, m, num_vars);
    return sum / static_cast<double>(measures.size());
}

void bump_clause_activity(ClauseDatabase& db, ClauseRef ref) {
    Clause& c = db[ref];
    assert(c.learnt && !c.dead);
    c.activity += db.activity_increment;
    if (c.activity > 1e100) {
        for (ClauseRef r : db.learnts())
            db[r].activity *= 1e-100;
        db.activity_increment *= 1e-100;
    }
}

void decay_clause_activity(ClauseDatabase& db) {
    db.activity_increment *= 1.0 / db.activity_decay;
}

} // namespace domsat
