#ifndef ELP_GRAPH_HPP
#define ELP_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elp/errors.hpp"
#include "elp/program.hpp"

namespace elp {

/// Directed graph over atom indices; immutable once populated.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(AtomSet vertices);

    void add_edge(AtomIndex from, AtomIndex to);

    const AtomSet& vertices() const { return verts_; }
    bool has_edge(AtomIndex from, AtomIndex to) const;
    std::size_t edge_count() const;
    /// Edges as sorted (from,to) pairs.
    std::vector<std::pair<AtomIndex, AtomIndex>> edges() const;

    Digraph induced(const AtomSet& sub) const;

    /// Maximal strongly connected vertex sets, ordered by minimum atom
    /// index.
    std::vector<AtomSet> sccs() const;
    /// Nonempty and one SCC spanning all vertices.
    bool strongly_connected() const;

    /// Position of a vertex in ascending-index order.
    std::size_t position(AtomIndex v) const;
    /// SCC id per vertex position.
    std::vector<int> scc_ids() const;

private:
    AtomSet verts_;
    std::vector<std::vector<std::uint32_t>> adj_; // successor positions, sorted
};

/// Positive dependency graph: vertices are the occurring atoms, with an
/// edge from every head atom to every positive body atom of each rule.
Digraph dependency_graph(const Program& p);

std::vector<AtomSet> sccs(const Digraph& g);

/// x is nonempty, occurs in p, and induces a strongly connected
/// subgraph of the dependency graph.
bool is_loop(const Program& p, const AtomSet& x);

/// All loops, canonically ordered. Throws GuardExceeded when the
/// largest SCC of the dependency graph exceeds guard.
std::vector<AtomSet> loops(const Program& p, std::size_t guard = default_guard);

/// SCCs of the dependency graph of p restricted to s: the maximal
/// loops of p contained in s. Ordered by minimum atom index.
std::vector<AtomSet> maximal_loops_within(const Program& p, const AtomSet& s);

/// Fixpoint elementary subgraph (x, EC(x)): starting from no edges,
/// a rule with head∩x = {a} contributes edges (a,b) for b in pos∩x once
/// all of pos∩x lies in one SCC of the graph built so far. Requires
/// x ⊆ atoms(p).
Digraph elementary_subgraph(const Program& p, const AtomSet& x);

std::string to_dot(const Digraph& g, const AtomTable& names);

} // namespace elp

#endif
