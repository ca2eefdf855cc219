#ifndef QUIVERFORGE_QUIVER_HPP
#define QUIVERFORGE_QUIVER_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>

namespace quiverforge {

struct Arrow {
    std::string id;
    std::string from;
    std::string to;
    bool operator==(const Arrow&) const = default;
};

// Finite quiver with string-labelled vertices and arrows.  Iteration order is
// insertion order everywhere; all derived output is deterministic in it.
class Quiver {
public:
    Quiver() = default;

    void add_vertex(const std::string& v) {
        if (v.empty()) throw InputError("empty vertex id");
        if (vertex_idx_.count(v)) throw InputError("duplicate vertex id: '" + v + "'");
        vertex_idx_[v] = static_cast<int>(vertices_.size());
        vertices_.push_back(v);
        out_.emplace_back();
        in_.emplace_back();
    }

    void add_arrow(const std::string& id, const std::string& from, const std::string& to) {
        if (id.empty()) throw InputError("empty arrow id");
        if (arrow_idx_.count(id)) throw InputError("duplicate arrow id: '" + id + "'");
        auto f = vertex_idx_.find(from);
        auto t = vertex_idx_.find(to);
        if (f == vertex_idx_.end())
            throw InputError("arrow '" + id + "' starts at unknown vertex '" + from + "'");
        if (t == vertex_idx_.end())
            throw InputError("arrow '" + id + "' ends at unknown vertex '" + to + "'");
        arrow_idx_[id] = static_cast<int>(arrows_.size());
        out_[static_cast<std::size_t>(f->second)].push_back(static_cast<int>(arrows_.size()));
        in_[static_cast<std::size_t>(t->second)].push_back(static_cast<int>(arrows_.size()));
        arrows_.push_back(Arrow{id, from, to});
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    bool has_vertex(const std::string& v) const { return vertex_idx_.count(v) > 0; }
    bool has_arrow(const std::string& id) const { return arrow_idx_.count(id) > 0; }

    int vertex_index(const std::string& v) const {
        auto it = vertex_idx_.find(v);
        if (it == vertex_idx_.end()) throw PreconditionError("unknown vertex: '" + v + "'");
        return it->second;
    }

    int arrow_index(const std::string& id) const {
        auto it = arrow_idx_.find(id);
        if (it == arrow_idx_.end()) throw PreconditionError("unknown arrow: '" + id + "'");
        return it->second;
    }

    const Arrow& arrow(const std::string& id) const {
        return arrows_[static_cast<std::size_t>(arrow_index(id))];
    }

    // Arrow indices leaving / entering a vertex index, in insertion order.
    const std::vector<int>& out_arrows(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_arrows(int v) const { return in_[static_cast<std::size_t>(v)]; }

    int count_arrows(const std::string& from, const std::string& to) const {
        int c = 0;
        for (const auto& a : arrows_)
            if (a.from == from && a.to == to) ++c;
        return c;
    }

    bool operator==(const Quiver& o) const {
        return vertices_ == o.vertices_ && arrows_ == o.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_idx_, arrow_idx_;
    std::vector<std::vector<int>> out_, in_;
};

// A path is the arrow-id sequence in traversal order (source first).  Empty
// sequences only appear internally; public paths have length >= 1.
struct Path {
    std::vector<std::string> arrows;
    std::size_t length() const { return arrows.size(); }
    auto operator<=>(const Path&) const = default;
};

inline bool is_directed_path(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return false;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (!q.has_arrow(p.arrows[i])) return false;
        if (i > 0 && q.arrow(p.arrows[i - 1]).to != q.arrow(p.arrows[i]).from) return false;
    }
    return true;
}

inline std::string path_source(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) throw PreconditionError("empty path has no source");
    return q.arrow(p.arrows.front()).from;
}

inline std::string path_target(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) throw PreconditionError("empty path has no target");
    return q.arrow(p.arrows.back()).to;
}

inline std::vector<std::string> path_vertices(const Quiver& q, const Path& p) {
    if (!is_directed_path(q, p)) throw PreconditionError("not a composable directed path");
    std::vector<std::string> vs{q.arrow(p.arrows.front()).from};
    for (const auto& a : p.arrows) vs.push_back(q.arrow(a).to);
    return vs;
}

// Walks traverse arrows forwards (sign +1) or backwards (sign -1).
struct Step {
    std::string arrow;
    int sign = 1;
    bool operator==(const Step&) const = default;
};

struct Walk {
    std::vector<Step> steps;
    bool operator==(const Walk&) const = default;
};

inline std::vector<std::string> walk_vertices(const Quiver& q, const Walk& w) {
    if (w.steps.empty()) throw PreconditionError("empty walk has no vertex sequence");
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const Step& s = w.steps[i];
        if (s.sign != 1 && s.sign != -1) throw PreconditionError("walk step sign must be +-1");
        const Arrow& a = q.arrow(s.arrow);
        const std::string start = s.sign == 1 ? a.from : a.to;
        const std::string end = s.sign == 1 ? a.to : a.from;
        if (i == 0)
            vs.push_back(start);
        else if (vs.back() != start)
            throw PreconditionError("walk steps are not incident at step " + std::to_string(i));
        vs.push_back(end);
    }
    return vs;
}

// Loops and 2-cycles are structural violations; multiple parallel arrows are
// reported separately because mutation tolerates them while the cycle
// machinery does not.
struct ValidationReport {
    std::vector<std::string> loops;
    std::vector<std::pair<std::string, std::string>> two_cycles;
    struct MultiArrow {
        std::string from, to;
        int count = 0;
    };
    std::vector<MultiArrow> multiple_arrows;
    bool ok() const { return loops.empty() && two_cycles.empty(); }
    bool simple() const { return ok() && multiple_arrows.empty(); }
};

inline ValidationReport validate_cluster_quiver(const Quiver& q) {
    ValidationReport rep;
    std::map<std::pair<std::string, std::string>, int> dir_count;
    for (const auto& a : q.arrows()) {
        if (a.from == a.to) rep.loops.push_back(a.id);
        ++dir_count[{a.from, a.to}];
    }
    std::set<std::pair<std::string, std::string>> seen_pair;
    for (const auto& [key, c] : dir_count) {
        if (c > 1) rep.multiple_arrows.push_back({key.first, key.second, c});
        if (key.first == key.second) continue;
        auto rev = dir_count.find({key.second, key.first});
        if (rev != dir_count.end()) {
            auto unordered = std::minmax(key.first, key.second);
            if (seen_pair.insert({unordered.first, unordered.second}).second)
                rep.two_cycles.push_back({unordered.first, unordered.second});
        }
    }
    return rep;
}

inline Quiver full_subquiver(const Quiver& q, const std::vector<std::string>& verts) {
    std::set<std::string> keep;
    for (const auto& v : verts) {
        q.vertex_index(v); // unknown id -> PreconditionError
        keep.insert(v);
    }
    Quiver sub;
    for (const auto& v : q.vertices())
        if (keep.count(v)) sub.add_vertex(v);
    for (const auto& a : q.arrows())
        if (keep.count(a.from) && keep.count(a.to)) sub.add_arrow(a.id, a.from, a.to);
    return sub;
}

inline Quiver delete_arrows(const Quiver& q, const std::vector<std::string>& ids) {
    std::set<std::string> drop;
    for (const auto& id : ids) {
        q.arrow_index(id);
        drop.insert(id);
    }
    Quiver out;
    for (const auto& v : q.vertices()) out.add_vertex(v);
    for (const auto& a : q.arrows())
        if (!drop.count(a.id)) out.add_arrow(a.id, a.from, a.to);
    return out;
}

inline Quiver kill_vertices(const Quiver& q, const std::vector<std::string>& verts) {
    std::set<std::string> drop;
    for (const auto& v : verts) {
        q.vertex_index(v);
        drop.insert(v);
    }
    std::vector<std::string> keep;
    for (const auto& v : q.vertices())
        if (!drop.count(v)) keep.push_back(v);
    return full_subquiver(q, keep);
}

// A vertex set is convex when every directed path between two of its members
// stays inside it.  Any violation contains a member-to-member path whose
// interior is entirely outside, so it suffices to chase outside chains that
// start at a member and re-enter the set.  Returns an outside vertex of such
// a chain, if any.
inline std::optional<std::string> convexity_violation(const Quiver& q,
                                                      const std::vector<std::string>& verts) {
    const std::size_t n = q.vertex_count();
    std::vector<bool> inside(n, false);
    for (const auto& v : verts) inside[static_cast<std::size_t>(q.vertex_index(v))] = true;

    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t m = 0; m < n; ++m) {
        if (!inside[m]) continue;
        for (int ai : q.out_arrows(static_cast<int>(m))) {
            const std::size_t w =
                static_cast<std::size_t>(q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to));
            if (!inside[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (int ai : q.out_arrows(static_cast<int>(u))) {
            const std::size_t w =
                static_cast<std::size_t>(q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to));
            if (inside[w]) return q.vertices()[u];
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::nullopt;
}

inline bool is_convex(const Quiver& q, const std::vector<std::string>& verts) {
    return !convexity_violation(q, verts).has_value();
}

// Weakly connected components as vertex groups, ordered by smallest vertex
// index, vertices inside each group in quiver order.
inline std::vector<std::vector<std::string>> connected_components(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            auto visit = [&](const std::string& vert) {
                const std::size_t w = static_cast<std::size_t>(q.vertex_index(vert));
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            };
            for (int ai : q.out_arrows(static_cast<int>(u)))
                visit(q.arrows()[static_cast<std::size_t>(ai)].to);
            for (int ai : q.in_arrows(static_cast<int>(u)))
                visit(q.arrows()[static_cast<std::size_t>(ai)].from);
        }
        ++next;
    }
    std::vector<std::vector<std::string>> groups(static_cast<std::size_t>(next));
    for (std::size_t v = 0; v < n; ++v)
        groups[static_cast<std::size_t>(comp[v])].push_back(q.vertices()[v]);
    return groups;
}

inline bool is_connected(const Quiver& q) {
    return q.vertex_count() <= 1 || connected_components(q).size() == 1;
}

inline bool is_acyclic(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<int> color(n, 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s]) continue;
        stack.push_back({s, 0});
        color[s] = 1;
        while (!stack.empty()) {
            auto& [u, k] = stack.back();
            const auto& outs = q.out_arrows(static_cast<int>(u));
            if (k == outs.size()) {
                color[u] = 2;
                stack.pop_back();
                continue;
            }
            const auto& a = q.arrows()[static_cast<std::size_t>(outs[k++])];
            const std::size_t w = static_cast<std::size_t>(q.vertex_index(a.to));
            if (color[w] == 1) return false;
            if (color[w] == 0) {
                color[w] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    return true;
}

// An arrow parallel to a directed path of length >= 2 between its endpoints.
struct BypassWitness {
    std::string arrow;
    Path path;
};

inline std::optional<BypassWitness> find_bypass(const Quiver& q) {
    for (const auto& a : q.arrows()) {
        // DFS over simple directed paths from a.from, avoiding arrow a itself.
        std::vector<std::string> arrows_so_far;
        std::set<std::string> on_path{a.from};
        std::optional<Path> found;
        auto dfs = [&](auto&& self, const std::string& u) -> void {
            if (found) return;
            for (int ai : q.out_arrows(q.vertex_index(u))) {
                const Arrow& e = q.arrows()[static_cast<std::size_t>(ai)];
                if (e.id == a.id) continue;
                if (e.to == a.to && arrows_so_far.size() + 1 >= 2) {
                    arrows_so_far.push_back(e.id);
                    found = Path{arrows_so_far};
                    arrows_so_far.pop_back();
                    return;
                }
                if (on_path.count(e.to) || e.to == a.to) continue;
                on_path.insert(e.to);
                arrows_so_far.push_back(e.id);
                self(self, e.to);
                arrows_so_far.pop_back();
                on_path.erase(e.to);
                if (found) return;
            }
        };
        dfs(dfs, a.from);
        if (found) return BypassWitness{a.id, *found};
    }
    return std::nullopt;
}

// Oriented n-cycle: vertices "1".."n", arrow "a<i>": i -> i+1 (mod n).
inline Quiver make_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle quiver needs at least 3 vertices");
    Quiver q;
    for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i),
                    std::to_string(i % n + 1));
    return q;
}

// Two directed arms x -> ... -> y of lengths m and n glued to a return arrow
// eta: y -> x.  Arm vertices "p1..p<m-1>" and "q1..q<n-1>", arm arrows
// "a1..a<m>" and "b1..b<n>".
inline Quiver make_G(int m, int n) {
    if (m < 2 || n < 2) throw PreconditionError("G(m, n) needs both arms of length >= 2");
    Quiver q;
    q.add_vertex("x");
    q.add_vertex("y");
    for (int i = 1; i < m; ++i) q.add_vertex("p" + std::to_string(i));
    for (int i = 1; i < n; ++i) q.add_vertex("q" + std::to_string(i));
    auto arm = [&](const std::string& arrow_prefix, const std::string& vert_prefix, int len) {
        std::string prev = "x";
        for (int i = 1; i < len; ++i) {
            const std::string v = vert_prefix + std::to_string(i);
            q.add_arrow(arrow_prefix + std::to_string(i), prev, v);
            prev = v;
        }
        q.add_arrow(arrow_prefix + std::to_string(len), prev, "y");
    };
    arm("a", "p", m);
    arm("b", "q", n);
    q.add_arrow("eta", "y", "x");
    return q;
}

} // namespace quiverforge

#endif
