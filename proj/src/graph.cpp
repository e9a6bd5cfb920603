#include "elp/graph.hpp"

#include <algorithm>
#include <sstream>

namespace elp {

Digraph::Digraph(AtomSet vertices) : verts_(std::move(vertices)), adj_(verts_.size()) {}

std::size_t Digraph::position(AtomIndex v) const {
    const auto& xs = verts_.indices();
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    return static_cast<std::size_t>(it - xs.begin());
}

void Digraph::add_edge(AtomIndex from, AtomIndex to) {
    if (!verts_.contains(from) || !verts_.contains(to))
        throw PreconditionViolated("Digraph::add_edge: endpoint is not a vertex");
    auto& succ = adj_[position(from)];
    std::uint32_t t = static_cast<std::uint32_t>(position(to));
    auto it = std::lower_bound(succ.begin(), succ.end(), t);
    if (it == succ.end() || *it != t) succ.insert(it, t);
}

bool Digraph::has_edge(AtomIndex from, AtomIndex to) const {
    if (!verts_.contains(from) || !verts_.contains(to)) return false;
    const auto& succ = adj_[position(from)];
    return std::binary_search(succ.begin(), succ.end(),
                              static_cast<std::uint32_t>(position(to)));
}

std::size_t Digraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& succ : adj_) n += succ.size();
    return n;
}

std::vector<std::pair<AtomIndex, AtomIndex>> Digraph::edges() const {
    std::vector<std::pair<AtomIndex, AtomIndex>> out;
    const auto& xs = verts_.indices();
    for (std::size_t i = 0; i < adj_.size(); ++i)
        for (std::uint32_t j : adj_[i]) out.emplace_back(xs[i], xs[j]);
    std::sort(out.begin(), out.end());
    return out;
}

Digraph Digraph::induced(const AtomSet& sub) const {
    Digraph g(verts_.intersect(sub));
    const auto& xs = verts_.indices();
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (!g.verts_.contains(xs[i])) continue;
        for (std::uint32_t j : adj_[i])
            if (g.verts_.contains(xs[j])) g.add_edge(xs[i], xs[j]);
    }
    return g;
}

// Iterative Tarjan; ids are assigned per component in discovery order.
std::vector<int> Digraph::scc_ids() const {
    const std::size_t n = adj_.size();
    std::vector<int> ids(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    int next_index = 0, next_id = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t child;
    };
    std::vector<Frame> frames;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            std::uint32_t v = f.v;
            if (f.child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (f.child < adj_[v].size()) {
                std::uint32_t w = adj_[v][f.child++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    ids[w] = next_id;
                    if (w == v) break;
                }
                ++next_id;
            }
            frames.pop_back();
            if (!frames.empty()) {
                std::uint32_t parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return ids;
}

std::vector<AtomSet> Digraph::sccs() const {
    std::vector<int> ids = scc_ids();
    int count = 0;
    for (int id : ids) count = std::max(count, id + 1);
    std::vector<std::vector<AtomIndex>> groups(count);
    const auto& xs = verts_.indices();
    for (std::size_t i = 0; i < ids.size(); ++i) groups[ids[i]].push_back(xs[i]);
    std::vector<AtomSet> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.push_back(AtomSet::from_unsorted(std::move(g)));
    std::sort(out.begin(), out.end(),
              [](const AtomSet& a, const AtomSet& b) { return a.front() < b.front(); });
    return out;
}

bool Digraph::strongly_connected() const {
    if (verts_.empty()) return false;
    std::vector<int> ids = scc_ids();
    for (int id : ids)
        if (id != 0) return false;
    return true;
}

Digraph dependency_graph(const Program& p) {
    Digraph g(p.atoms());
    for (const Rule& r : p.rules())
        for (AtomIndex a : r.head)
            for (AtomIndex b : r.pos) g.add_edge(a, b);
    return g;
}

std::vector<AtomSet> sccs(const Digraph& g) { return g.sccs(); }

bool is_loop(const Program& p, const AtomSet& x) {
    if (x.empty() || !x.subset_of(p.atoms())) return false;
    return dependency_graph(p).induced(x).strongly_connected();
}

std::vector<AtomSet> loops(const Program& p, std::size_t guard) {
    Digraph dep = dependency_graph(p);
    std::vector<AtomSet> out;
    for (const AtomSet& scc : dep.sccs()) {
        if (scc.size() > guard) throw GuardExceeded("loops", scc.size(), guard);
        for_each_subset(scc, [&](const AtomSet& sub) {
            if (!sub.empty() && dep.induced(sub).strongly_connected()) out.push_back(sub);
            return true;
        });
    }
    canonicalize(out);
    return out;
}

std::vector<AtomSet> maximal_loops_within(const Program& p, const AtomSet& s) {
    return dependency_graph(p).induced(s).sccs();
}

Digraph elementary_subgraph(const Program& p, const AtomSet& x) {
    if (!x.subset_of(p.atoms()))
        throw PreconditionViolated("elementary_subgraph: set must occur in the program");
    Digraph g(x);

    // Rules that can ever contribute: head meets x in exactly one atom
    // and the positive body meets x.
    struct Candidate {
        AtomIndex head;
        std::vector<AtomIndex> body;
    };
    std::vector<Candidate> cands;
    for (const Rule& r : p.rules()) {
        AtomSet hx = r.head.intersect(x);
        if (!hx.is_singleton()) continue;
        AtomSet bx = r.pos.intersect(x);
        if (bx.empty()) continue;
        cands.push_back({hx.front(), {bx.begin(), bx.end()}});
    }

    // Once a rule's body lies in one SCC it stays that way: edges only
    // grow and SCCs only coarsen.
    std::vector<bool> fired(cands.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> ids = g.scc_ids();
        auto id_of = [&](AtomIndex v) { return ids[g.position(v)]; };
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (fired[i]) continue;
            const Candidate& c = cands[i];
            int id = id_of(c.body.front());
            bool same = true;
            for (AtomIndex b : c.body)
                if (id_of(b) != id) {
                    same = false;
                    break;
                }
            if (!same) continue;
            fired[i] = true;
            changed = true;
            for (AtomIndex b : c.body) g.add_edge(c.head, b);
        }
    }
    return g;
}

std::string to_dot(const Digraph& g, const AtomTable& names) {
    std::ostringstream out;
    out << "digraph dependencies {\n";
    for (AtomIndex v : g.vertices()) out << "  \"" << names.name(v) << "\";\n";
    for (const auto& [a, b] : g.edges())
        out << "  \"" << names.name(a) << "\" -> \"" << names.name(b) << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace elp
