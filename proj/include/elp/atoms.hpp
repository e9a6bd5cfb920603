#ifndef ELP_ATOMS_HPP
#define ELP_ATOMS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace elp {

using AtomIndex = std::uint32_t;

/// Finite set of atom indices with canonical (ascending) iteration order.
/// Used for interpretations, rule components, loops and unfounded-set
/// candidates alike.
class AtomSet {
public:
    AtomSet() = default;
    AtomSet(std::initializer_list<AtomIndex> xs) : v_(xs) { normalize(); }

    static AtomSet from_unsorted(std::vector<AtomIndex> xs) {
        AtomSet s;
        s.v_ = std::move(xs);
        s.normalize();
        return s;
    }
    // Caller guarantees xs is sorted and duplicate-free.
    static AtomSet from_sorted(std::vector<AtomIndex> xs) {
        AtomSet s;
        s.v_ = std::move(xs);
        return s;
    }

    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }
    bool is_singleton() const { return v_.size() == 1; }
    AtomIndex front() const { return v_.front(); }

    bool contains(AtomIndex a) const;
    bool subset_of(const AtomSet& other) const;
    bool proper_subset_of(const AtomSet& other) const {
        return size() < other.size() && subset_of(other);
    }
    bool intersects(const AtomSet& other) const;

    AtomSet unite(const AtomSet& other) const;
    AtomSet intersect(const AtomSet& other) const;
    AtomSet minus(const AtomSet& other) const;
    AtomSet with(AtomIndex a) const;
    AtomSet without(AtomIndex a) const;

    void add(AtomIndex a);
    void remove(AtomIndex a);

    std::vector<AtomIndex>::const_iterator begin() const { return v_.begin(); }
    std::vector<AtomIndex>::const_iterator end() const { return v_.end(); }
    const std::vector<AtomIndex>& indices() const { return v_; }

    bool operator==(const AtomSet&) const = default;
    auto operator<=>(const AtomSet&) const = default;

private:
    void normalize();
    std::vector<AtomIndex> v_; // sorted, unique
};

// Order for lists of sets everywhere in the library: cardinality first,
// then lexicographic on ascending indices.
bool canonical_less(const AtomSet& a, const AtomSet& b);

// Sort + dedup a list of sets into canonical order.
void canonicalize(std::vector<AtomSet>& sets);

// Calls f on every subset of base (including the empty set and base
// itself); f returns false to stop early. base must have at most 31
// elements; enumeration guards upstream keep it far below that.
template <typename F>
bool for_each_subset(const AtomSet& base, F&& f) {
    const auto& xs = base.indices();
    const std::uint32_t n = static_cast<std::uint32_t>(xs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<AtomIndex> sub;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) sub.push_back(xs[i]);
        if (!f(AtomSet::from_sorted(std::move(sub)))) return false;
    }
    return true;
}

// Subsets of base in canonical order (ascending cardinality, then
// lexicographic); the empty set is skipped. Stops when f returns false.
template <typename F>
bool for_each_nonempty_subset_canonical(const AtomSet& base, F&& f) {
    const auto& xs = base.indices();
    const std::size_t n = xs.size();
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= n; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::vector<AtomIndex> sub(k);
            for (std::size_t i = 0; i < k; ++i) sub[i] = xs[pick[i]];
            if (!f(AtomSet::from_sorted(std::move(sub)))) return false;
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

/// Bijection between atom names and dense indices; indices are assigned
/// in first-intern order.
class AtomTable {
public:
    AtomIndex intern(std::string_view name);
    std::optional<AtomIndex> find(std::string_view name) const;
    const std::string& name(AtomIndex i) const { return names_.at(i); }
    std::size_t size() const { return names_.size(); }

    bool operator==(const AtomTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomIndex> ids_;
};

} // namespace elp

#endif
