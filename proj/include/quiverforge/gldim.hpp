#ifndef QUIVERFORGE_GLDIM_HPP
#define QUIVERFORGE_GLDIM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/linalg.hpp>
#include <quiverforge/path_space.hpp>

namespace quiverforge {

namespace detail {

// A right module over the algebra, presented as a submodule of a finite sum
// of right projectives e_{v}A: `summands` lists the projective summands'
// source vertices; `blocks[j]` spans the degree-j part (coordinates are the
// concatenated per-summand basis coordinates of block (summand, j)).
struct RightModule {
    std::vector<int> summands;
    std::vector<RatMatrix> blocks;
};

inline std::size_t block_width(const AlgebraModel& m, const std::vector<int>& summands,
                               int j) {
    std::size_t w = 0;
    for (int s : summands) w += static_cast<std::size_t>(m.dim_idx(s, j));
    return w;
}

inline bool module_zero(const RightModule& mod) {
    for (const auto& b : mod.blocks)
        if (!b.empty()) return false;
    return true;
}

// Right action of the arrow with index `arrow` (from vertex j) on a block-j
// coordinate vector; the result lives in the target vertex block.
inline RatVec act_on_vector(const AlgebraModel& m, const std::vector<int>& summands, int j,
                            const RatVec& v, int arrow) {
    const Quiver& q = m.quiver();
    const int t = q.vertex_index(q.arrows()[static_cast<std::size_t>(arrow)].to);
    RatVec out(block_width(m, summands, t), 0);
    std::size_t off_in = 0, off_out = 0;
    for (int s : summands) {
        const int din = m.dim_idx(s, j), dout = m.dim_idx(s, t);
        for (int b = 0; b < din; ++b) {
            const Rational& c = v[off_in + static_cast<std::size_t>(b)];
            if (c == 0) continue;
            const RatVec& img = m.act(s, j, b, arrow);
            for (int k = 0; k < dout; ++k)
                out[off_out + static_cast<std::size_t>(k)] += c * img[static_cast<std::size_t>(k)];
        }
        off_in += static_cast<std::size_t>(din);
        off_out += static_cast<std::size_t>(dout);
    }
    return out;
}

// Spans of M * rad, block by block.
inline std::vector<RatMatrix> radical_multiples(const AlgebraModel& m,
                                                const RightModule& mod) {
    const Quiver& q = m.quiver();
    const int nv = static_cast<int>(q.vertex_count());
    std::vector<RatMatrix> out(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j)
        for (const RatVec& row : mod.blocks[static_cast<std::size_t>(j)])
            for (int ai : q.out_arrows(j)) {
                const int t = q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to);
                out[static_cast<std::size_t>(t)].push_back(
                    act_on_vector(m, mod.summands, j, row, ai));
            }
    return out;
}

// The radical of the free module over `summands` itself: unit vectors at the
// basis paths of positive length.
inline RightModule radical_of_projective(const AlgebraModel& m, std::vector<int> summands) {
    const int nv = static_cast<int>(m.quiver().vertex_count());
    RightModule mod;
    mod.summands = std::move(summands);
    mod.blocks.resize(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) {
        const std::size_t width = block_width(m, mod.summands, j);
        std::size_t off = 0;
        for (int s : mod.summands) {
            const auto lengths = m.basis_lengths_idx(s, j);
            for (std::size_t b = 0; b < lengths.size(); ++b)
                if (lengths[b] >= 1) {
                    RatVec row(width, 0);
                    row[off + b] = 1;
                    mod.blocks[static_cast<std::size_t>(j)].push_back(std::move(row));
                }
            off += lengths.size();
        }
    }
    return mod;
}

// Minimal projective cover of M and the kernel of the covering map, returned
// as a module over the cover's own summands.
inline RightModule cover_kernel(const AlgebraModel& m, const RightModule& mod) {
    const Quiver& q = m.quiver();
    const int nv = static_cast<int>(q.vertex_count());
    const std::vector<RatMatrix> mrad = radical_multiples(m, mod);

    // top generators: block rows surviving reduction against M * rad
    std::vector<int> summands;
    std::vector<std::pair<int, RatVec>> generators; // (vertex, representative)
    for (int j = 0; j < nv; ++j) {
        RatMatrix base = mrad[static_cast<std::size_t>(j)];
        EchelonForm ef = echelonize(base);
        for (const RatVec& row : mod.blocks[static_cast<std::size_t>(j)]) {
            RatVec red = echelon_reduce(ef, row);
            if (std::all_of(red.begin(), red.end(), [](const Rational& x) { return x == 0; }))
                continue;
            base.push_back(row);
            ef = echelonize(base);
            summands.push_back(j);
            generators.push_back({j, row});
        }
    }

    RightModule ker;
    ker.summands = summands;
    ker.blocks.resize(static_cast<std::size_t>(nv));
    if (summands.empty()) {
        if (!module_zero(mod)) throw CheckError("nonzero module with empty top");
        return ker;
    }

    // the covering map sends the basis path p of cover summand (j, g) to g*p;
    // its blockwise kernel is the next syzygy
    for (int t = 0; t < nv; ++t) {
        RatMatrix images;
        for (std::size_t s = 0; s < summands.size(); ++s) {
            const int j = summands[s];
            const auto paths = m.basis(q.vertices()[static_cast<std::size_t>(j)],
                                       q.vertices()[static_cast<std::size_t>(t)]);
            for (const Path& path : paths) {
                RatVec img = generators[s].second;
                int at = j;
                for (const auto& aid : path.arrows) {
                    const int ai = q.arrow_index(aid);
                    img = act_on_vector(m, mod.summands, at, img, ai);
                    at = q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to);
                }
                images.push_back(std::move(img));
            }
        }
        if (images.empty()) continue;
        if (block_width(m, mod.summands, t) == 0) {
            // the whole cover block maps to zero
            RatMatrix all(images.size(), RatVec(images.size(), 0));
            for (std::size_t k = 0; k < all.size(); ++k) all[k][k] = 1;
            ker.blocks[static_cast<std::size_t>(t)] = std::move(all);
            continue;
        }
        ker.blocks[static_cast<std::size_t>(t)] = rat_nullspace(rat_transpose(images));
    }
    return ker;
}

} // namespace detail

struct GlobalDimensionReport {
    std::optional<int> value;               // empty: not determined within the cap
    std::vector<std::optional<int>> per_simple;
    int cap = 0;
};

// Projective dimension of every simple module via minimal projective
// resolutions, computed blockwise from the path-space model.  Syzygies are
// followed for at most `cap` steps; an unresolved simple leaves its entry
// (and the global value) undetermined.
inline GlobalDimensionReport global_dimension(const AlgebraModel& m, int cap = 4) {
    const Quiver& q = m.quiver();
    const int nv = static_cast<int>(q.vertex_count());
    GlobalDimensionReport rep;
    rep.cap = cap;
    int best = 0;
    bool determined = true;
    for (int i = 0; i < nv; ++i) {
        detail::RightModule syz = detail::radical_of_projective(m, {i});
        std::optional<int> pd;
        if (detail::module_zero(syz)) {
            pd = 0;
        } else {
            for (int k = 1; k <= cap; ++k) {
                syz = detail::cover_kernel(m, syz);
                if (detail::module_zero(syz)) {
                    pd = k;
                    break;
                }
            }
        }
        rep.per_simple.push_back(pd);
        if (!pd)
            determined = false;
        else
            best = std::max(best, *pd);
    }
    if (determined) rep.value = best;
    return rep;
}

} // namespace quiverforge

#endif
