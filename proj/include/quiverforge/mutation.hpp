#ifndef QUIVERFORGE_MUTATION_HPP
#define QUIVERFORGE_MUTATION_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

// Signed adjacency matrix b[i][j] = #(i -> j) - #(j -> i).
inline std::vector<std::vector<int>> signed_adjacency(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (const auto& a : q.arrows()) {
        const auto i = static_cast<std::size_t>(q.vertex_index(a.from));
        const auto j = static_cast<std::size_t>(q.vertex_index(a.to));
        ++b[i][j];
        --b[j][i];
    }
    return b;
}

// Quiver mutation at vertex k: reverse the arrows through k, add one arrow
// i -> j per composable pair i -> k -> j, then cancel opposite pairs,
// earliest-created first.  Reversed arrows keep their id with a '*' suffix;
// created arrows get ids "m<k>_<i>_<j>_<n>".
inline Quiver mutate(const Quiver& q, const std::string& k) {
    const ValidationReport rep = validate_cluster_quiver(q);
    if (!rep.ok()) throw PreconditionError("mutation requires a quiver without loops or 2-cycles");
    const int kv = q.vertex_index(k);

    std::vector<Arrow> pool;
    std::set<std::string> used;
    auto fresh = [&](std::string id) {
        while (used.count(id)) id += "*";
        used.insert(id);
        return id;
    };

    std::vector<const Arrow*> into_k, from_k;
    for (const auto& a : q.arrows()) {
        if (a.to == k) into_k.push_back(&a);
        if (a.from == k) from_k.push_back(&a);
        if (a.to != k && a.from != k) {
            used.insert(a.id);
            pool.push_back(a);
        }
    }
    for (const auto& a : q.arrows())
        if (a.to == k || a.from == k) pool.push_back(Arrow{fresh(a.id + "*"), a.to, a.from});

    std::map<std::pair<std::string, std::string>, int> created_count;
    for (const Arrow* alpha : into_k)
        for (const Arrow* beta : from_k) {
            const std::string i = alpha->from, j = beta->to;
            const int n = ++created_count[{i, j}];
            const std::string id = fresh("m" + k + "_" + i + "_" + j + "_" + std::to_string(n));
            pool.push_back(Arrow{id, i, j});
        }

    // cancel min(#(i->j), #(j->i)) opposite pairs per unordered vertex pair
    std::map<std::pair<std::string, std::string>, int> dir;
    for (const auto& a : pool) ++dir[{a.from, a.to}];
    std::map<std::pair<std::string, std::string>, int> to_cancel;
    for (const auto& [key, c] : dir) {
        auto rev = dir.find({key.second, key.first});
        if (rev != dir.end()) to_cancel[key] = std::min(c, rev->second);
    }
    Quiver out;
    for (const auto& v : q.vertices()) out.add_vertex(v);
    for (const auto& a : pool) {
        auto it = to_cancel.find({a.from, a.to});
        if (it != to_cancel.end() && it->second > 0) {
            --it->second;
            continue;
        }
        out.add_arrow(a.id, a.from, a.to);
    }
    (void)kv;
    return out;
}

struct MutationStep {
    std::string vertex;
    Quiver before;
    Quiver after;
};

inline MutationStep mutate_step(const Quiver& q, const std::string& k) {
    return MutationStep{k, q, mutate(q, k)};
}

} // namespace quiverforge

#endif
