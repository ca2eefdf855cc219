#ifndef QUIVERFORGE_ISOMORPHISM_HPP
#define QUIVERFORGE_ISOMORPHISM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

// Vertex bijection preserving arrow multiplicities in both directions, found
// by backtracking with degree pruning.  Deterministic: the first assignment
// in insertion order wins.  Arrow labels are not matched, only counts.
inline std::optional<std::map<std::string, std::string>>
quiver_isomorphic(const Quiver& a, const Quiver& b, std::size_t max_vertices = 12) {
    if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count())
        return std::nullopt;
    const std::size_t n = a.vertex_count();
    if (n > max_vertices)
        throw PreconditionError("isomorphism search capped at " +
                                std::to_string(max_vertices) + " vertices");

    auto counts = [](const Quiver& q) {
        const std::size_t m = q.vertex_count();
        std::vector<std::vector<int>> c(m, std::vector<int>(m, 0));
        for (const auto& ar : q.arrows())
            ++c[static_cast<std::size_t>(q.vertex_index(ar.from))]
              [static_cast<std::size_t>(q.vertex_index(ar.to))];
        return c;
    };
    const auto ca = counts(a), cb = counts(b);

    auto degrees = [&](const std::vector<std::vector<int>>& c) {
        std::vector<std::pair<int, int>> d(c.size(), {0, 0});
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) {
                d[i].first += c[i][j];
                d[j].second += c[i][j];
            }
        return d;
    };
    const auto da = degrees(ca), db = degrees(cb);
    {
        auto ma = da, mb = db;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return std::nullopt;
    }

    std::vector<int> assign(n, -1);
    std::vector<bool> taken(n, false);
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (taken[cand] || da[i] != db[cand] || ca[i][i] != cb[cand][cand]) continue;
            bool fits = true;
            for (std::size_t u = 0; u < i && fits; ++u) {
                const auto fu = static_cast<std::size_t>(assign[u]);
                fits = ca[u][i] == cb[fu][cand] && ca[i][u] == cb[cand][fu];
            }
            if (!fits) continue;
            assign[i] = static_cast<int>(cand);
            taken[cand] = true;
            if (self(self, i + 1)) return true;
            taken[cand] = false;
            assign[i] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;

    std::map<std::string, std::string> phi;
    for (std::size_t i = 0; i < n; ++i)
        phi[a.vertices()[i]] = b.vertices()[static_cast<std::size_t>(assign[i])];
    return phi;
}

} // namespace quiverforge

#endif
