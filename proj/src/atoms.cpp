#include "elp/atoms.hpp"

#include <algorithm>

namespace elp {

void AtomSet::normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool AtomSet::contains(AtomIndex a) const {
    return std::binary_search(v_.begin(), v_.end(), a);
}

bool AtomSet::subset_of(const AtomSet& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool AtomSet::intersects(const AtomSet& other) const {
    auto i = v_.begin();
    auto j = other.v_.begin();
    while (i != v_.end() && j != other.v_.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

AtomSet AtomSet::unite(const AtomSet& other) const {
    AtomSet r;
    r.v_.reserve(v_.size() + other.v_.size());
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(r.v_));
    return r;
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
    AtomSet r;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                          std::back_inserter(r.v_));
    return r;
}

AtomSet AtomSet::minus(const AtomSet& other) const {
    AtomSet r;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(r.v_));
    return r;
}

AtomSet AtomSet::with(AtomIndex a) const {
    AtomSet r = *this;
    r.add(a);
    return r;
}

AtomSet AtomSet::without(AtomIndex a) const {
    AtomSet r = *this;
    r.remove(a);
    return r;
}

void AtomSet::add(AtomIndex a) {
    auto it = std::lower_bound(v_.begin(), v_.end(), a);
    if (it == v_.end() || *it != a) v_.insert(it, a);
}

void AtomSet::remove(AtomIndex a) {
    auto it = std::lower_bound(v_.begin(), v_.end(), a);
    if (it != v_.end() && *it == a) v_.erase(it);
}

bool canonical_less(const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
}

void canonicalize(std::vector<AtomSet>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

AtomIndex AtomTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    AtomIndex id = static_cast<AtomIndex>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<AtomIndex> AtomTable::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

} // namespace elp
