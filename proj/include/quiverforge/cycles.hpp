#ifndef QUIVERFORGE_CYCLES_HPP
#define QUIVERFORGE_CYCLES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

// A chordless cycle in canonical form: the vertex sequence starts at the
// vertex of smallest quiver index and runs toward the smaller of its two
// neighbours on the cycle.  Step i joins vertex_seq[i] to vertex_seq[i+1 mod p].
struct Cycle {
    std::vector<std::string> vertex_seq;
    Walk walk;
    bool oriented = false;
    bool chordless = true;
    std::size_t length() const { return walk.steps.size(); }
    std::set<std::string> arrow_set() const {
        std::set<std::string> s;
        for (const auto& st : walk.steps) s.insert(st.arrow);
        return s;
    }
    bool contains_arrow(const std::string& id) const {
        for (const auto& st : walk.steps)
            if (st.arrow == id) return true;
        return false;
    }
    bool operator==(const Cycle&) const = default;
};

namespace detail {

struct UnderlyingGraph {
    std::vector<std::vector<int>> adj;              // sorted neighbour indices
    std::map<std::pair<int, int>, int> edge_arrow;  // (min,max) -> arrow index
    bool has_edge(int u, int v) const {
        return edge_arrow.count({std::min(u, v), std::max(u, v)}) > 0;
    }
};

inline UnderlyingGraph underlying_graph(const Quiver& q) {
    UnderlyingGraph g;
    const int n = static_cast<int>(q.vertex_count());
    g.adj.resize(static_cast<std::size_t>(n));
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& a = q.arrows()[ai];
        const int u = q.vertex_index(a.from);
        const int v = q.vertex_index(a.to);
        const auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (g.edge_arrow.count(key))
            throw PreconditionError(
                "underlying graph is not simple (parallel or opposite arrows between '" +
                a.from + "' and '" + a.to + "')");
        g.edge_arrow[key] = static_cast<int>(ai);
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

inline Cycle cycle_from_vertex_indices(const Quiver& q, const UnderlyingGraph& g,
                                       const std::vector<int>& vs) {
    Cycle c;
    const std::size_t p = vs.size();
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const int u = vs[i];
        const int v = vs[(i + 1) % p];
        const int ai = g.edge_arrow.at({std::min(u, v), std::max(u, v)});
        const Arrow& a = q.arrows()[static_cast<std::size_t>(ai)];
        const int sign = a.from == q.vertices()[static_cast<std::size_t>(u)] ? 1 : -1;
        (sign == 1 ? plus : minus)++;
        c.walk.steps.push_back({a.id, sign});
        c.vertex_seq.push_back(q.vertices()[static_cast<std::size_t>(u)]);
    }
    c.oriented = plus == 0 || minus == 0;
    c.chordless = true;
    return c;
}

} // namespace detail

// Every induced (chordless) cycle of the underlying graph, each reported once
// in canonical form.  Simple paths are grown from their minimum vertex toward
// larger vertices only, and a vertex adjacent to the anchor either closes the
// cycle or is a dead end, so chords never survive.
inline std::vector<Cycle> enumerate_chordless_cycles(const Quiver& q) {
    const ValidationReport rep = validate_cluster_quiver(q);
    if (!rep.simple())
        throw PreconditionError(
            "chordless-cycle analysis requires a quiver without loops, 2-cycles, or "
            "multiple arrows");
    const detail::UnderlyingGraph g = detail::underlying_graph(q);
    const int n = static_cast<int>(q.vertex_count());

    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);

    auto dfs = [&](auto&& self, int anchor) -> void {
        const int u = path.back();
        if (path.size() >= 3 && g.has_edge(u, anchor)) {
            if (path[1] < u) out.push_back(detail::cycle_from_vertex_indices(q, g, path));
            return; // extending past u would leave the chord u-anchor behind
        }
        for (int w : g.adj[static_cast<std::size_t>(u)]) {
            if (w <= anchor || on_path[static_cast<std::size_t>(w)]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                if (g.has_edge(w, path[i])) chord = true;
            if (chord) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = true;
            self(self, anchor);
            on_path[static_cast<std::size_t>(w)] = false;
            path.pop_back();
        }
    };

    for (int anchor = 0; anchor < n; ++anchor) {
        path.assign(1, anchor);
        on_path.assign(static_cast<std::size_t>(n), false);
        on_path[static_cast<std::size_t>(anchor)] = true;
        dfs(dfs, anchor);
    }
    return out;
}

struct CyclicOrientationResult {
    bool cyclically_oriented = false;
    std::optional<Cycle> witness; // a chordless cycle that is not oriented
};

inline CyclicOrientationResult is_cyclically_oriented(const Quiver& q) {
    for (const Cycle& c : enumerate_chordless_cycles(q))
        if (!c.oriented) return {false, c};
    return {true, std::nullopt};
}

namespace detail {

// Arrows of an oriented cycle in composable order a_0, a_1, ... with
// target(a_i) = source(a_{i+1}).
inline std::vector<std::string> directed_arrow_order(const Cycle& c) {
    std::vector<std::string> ids;
    for (const auto& st : c.walk.steps) ids.push_back(st.arrow);
    if (!c.walk.steps.empty() && c.walk.steps.front().sign == -1)
        std::reverse(ids.begin(), ids.end());
    return ids;
}

} // namespace detail

// All shortest directed paths running opposite to the arrow eta: y -> x, i.e.
// the paths delta with eta * delta a chordless cycle.  Lexicographically
// ordered by arrow-id sequence.  Empty exactly when eta lies on no oriented
// cycle.
inline std::vector<Path> antiparallel_shortest_paths(const Quiver& q, const std::string& eta) {
    q.arrow_index(eta);
    const CyclicOrientationResult orient = is_cyclically_oriented(q);
    if (!orient.cyclically_oriented)
        throw PreconditionError("quiver is not cyclically oriented");
    std::vector<Path> deltas;
    for (const Cycle& c : enumerate_chordless_cycles(q)) {
        if (!c.contains_arrow(eta)) continue;
        std::vector<std::string> order = detail::directed_arrow_order(c);
        const auto pos = std::find(order.begin(), order.end(), eta);
        std::rotate(order.begin(), pos, order.end()); // order[0] == eta
        deltas.push_back(Path{std::vector<std::string>(order.begin() + 1, order.end())});
    }
    std::sort(deltas.begin(), deltas.end());

    // distinct shortest antiparallel paths meet only in the endpoints of eta
    const std::string x = q.arrow(eta).to, y = q.arrow(eta).from;
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t j = i + 1; j < deltas.size(); ++j) {
            const auto vi = path_vertices(q, deltas[i]);
            const auto vj = path_vertices(q, deltas[j]);
            std::set<std::string> si(vi.begin(), vi.end()), common;
            for (const auto& v : vj)
                if (si.count(v)) common.insert(v);
            if (common != std::set<std::string>{x, y})
                throw CheckError("antiparallel paths at '" + eta +
                                 "' overlap outside the endpoints");
        }
    return deltas;
}

// Arrows lying on at least one chordless cycle, in quiver insertion order.
inline std::vector<std::string> cyclic_arrows(const Quiver& q) {
    std::set<std::string> on_cycle;
    for (const Cycle& c : enumerate_chordless_cycles(q))
        for (const auto& st : c.walk.steps) on_cycle.insert(st.arrow);
    std::vector<std::string> out;
    for (const auto& a : q.arrows())
        if (on_cycle.count(a.id)) out.push_back(a.id);
    return out;
}

// The decomposition of a connected, cyclically oriented quiver at an anchor
// arrow eta: y -> x: one interior component per shortest antiparallel path,
// their closures (with x, y added back, eta removed), and the residual
// components at x and y.  Every chordless cycle not through eta lives inside
// one of the parts; that containment is verified.
struct ArrowDecomposition {
    std::string eta, x, y;
    std::vector<Path> antiparallel;                       // lex-ordered deltas
    std::vector<std::vector<std::string>> components;     // interior vertex sets
    std::vector<Quiver> component_closures;               // per delta
    Quiver closure_x, closure_y;
    bool closures_xy_equal = false;
};

inline ArrowDecomposition decompose_at_arrow(const Quiver& q, const std::string& eta) {
    if (!is_connected(q)) throw PreconditionError("decomposition requires a connected quiver");
    ArrowDecomposition dec;
    dec.eta = eta;
    dec.x = q.arrow(eta).to;
    dec.y = q.arrow(eta).from;
    dec.antiparallel = antiparallel_shortest_paths(q, eta);
    if (dec.antiparallel.empty())
        throw PreconditionError("arrow '" + eta + "' lies on no oriented cycle");

    std::vector<std::string> rest;
    for (const auto& v : q.vertices())
        if (v != dec.x && v != dec.y) rest.push_back(v);
    const Quiver without_xy = full_subquiver(q, rest);
    const auto groups = connected_components(without_xy);

    auto group_of = [&](const std::string& v) -> int {
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (std::find(groups[g].begin(), groups[g].end(), v) != groups[g].end())
                return static_cast<int>(g);
        return -1;
    };

    std::set<int> delta_groups;
    for (const Path& d : dec.antiparallel) {
        const auto vs = path_vertices(q, d);
        // interior of a length >= 2 path is nonempty and connected
        const int g0 = group_of(vs[1]);
        for (std::size_t i = 1; i + 1 < vs.size(); ++i)
            if (group_of(vs[i]) != g0)
                throw CheckError("interior of an antiparallel path split across components");
        if (!delta_groups.insert(g0).second)
            throw CheckError("two antiparallel paths share an interior component");
        dec.components.push_back(groups[static_cast<std::size_t>(g0)]);
        std::vector<std::string> closure_verts = groups[static_cast<std::size_t>(g0)];
        closure_verts.push_back(dec.x);
        closure_verts.push_back(dec.y);
        dec.component_closures.push_back(
            delete_arrows(full_subquiver(q, closure_verts), {eta}));
    }

    // residual quiver: remove all interior components and the anchor arrow
    std::vector<std::string> residual_verts;
    for (const auto& v : q.vertices()) {
        if (v == dec.x || v == dec.y) {
            residual_verts.push_back(v);
            continue;
        }
        const int g = group_of(v);
        if (!delta_groups.count(g)) residual_verts.push_back(v);
    }
    const Quiver residual = delete_arrows(full_subquiver(q, residual_verts), {eta});
    const auto res_groups = connected_components(residual);
    auto closure_at = [&](const std::string& v) {
        for (const auto& grp : res_groups)
            if (std::find(grp.begin(), grp.end(), v) != grp.end())
                return full_subquiver(residual, grp);
        throw CheckError("residual component lookup failed");
    };
    dec.closure_x = closure_at(dec.x);
    dec.closure_y = closure_at(dec.y);
    dec.closures_xy_equal = dec.closure_x == dec.closure_y;

    // every chordless cycle avoiding eta fits inside a single part
    std::vector<std::set<std::string>> part_vertex_sets;
    for (const Quiver& cl : dec.component_closures)
        part_vertex_sets.emplace_back(cl.vertices().begin(), cl.vertices().end());
    part_vertex_sets.emplace_back(dec.closure_x.vertices().begin(), dec.closure_x.vertices().end());
    part_vertex_sets.emplace_back(dec.closure_y.vertices().begin(), dec.closure_y.vertices().end());
    for (const Cycle& c : enumerate_chordless_cycles(q)) {
        if (c.contains_arrow(eta)) continue;
        bool contained = false;
        for (const auto& part : part_vertex_sets) {
            bool all = true;
            for (const auto& v : c.vertex_seq)
                if (!part.count(v)) {
                    all = false;
                    break;
                }
            if (all) {
                contained = true;
                break;
            }
        }
        if (!contained)
            throw CheckError("a chordless cycle avoiding '" + eta +
                             "' is not contained in any decomposition part");
    }
    return dec;
}

} // namespace quiverforge

#endif
