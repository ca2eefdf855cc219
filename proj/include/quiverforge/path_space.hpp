#ifndef QUIVERFORGE_PATH_SPACE_HPP
#define QUIVERFORGE_PATH_SPACE_HPP

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/linalg.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

namespace detail {

// QUIVERFORGE_MAX_PATH_LEN, when set, overrides the computed truncation bound
// for every model that is not given an explicit one.
inline std::optional<int> env_path_length_cap() {
    const char* raw = std::getenv("QUIVERFORGE_MAX_PATH_LEN");
    if (!raw || !*raw) return std::nullopt;
    int value = 0;
    const char* end = raw + std::string_view(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 1)
        throw InputError("QUIVERFORGE_MAX_PATH_LEN must be a positive integer, got '" +
                         std::string(raw) + "'");
    return value;
}

} // namespace detail

// Exact model of the quotient algebra kQ/I on the vertex-pair path spaces
// e_j (kQ/I) e_i, computed degreewise under a truncation that is sound for
// finite-dimensional quotients:
//
//   cutoff  C = |Q_0| * (1 + max term length of any relation)
//   working W = C + max length spread within a single relation
//
// Paths are enumerated up to W, the two-sided span of the relations is
// echelonized with longer paths as leading terms, and the surviving columns
// form the basis.  A surviving path of length >= C means the quotient may be
// infinite-dimensional and the model refuses loudly rather than guess.
class AlgebraModel {
public:
    explicit AlgebraModel(Presentation pres, std::optional<int> max_path_length = {},
                          std::size_t path_budget = 500000)
        : p_(std::move(pres)) {
        validate_presentation(p_);
        const Quiver& q = p_.quiver;
        nv_ = static_cast<int>(q.vertex_count());

        int longest = 0, spread = 0;
        for (const auto& r : p_.relations) {
            int lo = -1, hi = 0;
            for (const auto& t : r.terms) {
                const int len = static_cast<int>(t.path.length());
                hi = std::max(hi, len);
                lo = lo < 0 ? len : std::min(lo, len);
            }
            longest = std::max(longest, hi);
            spread = std::max(spread, hi - (lo < 0 ? hi : lo));
        }
        cutoff_ = max_path_length ? *max_path_length
                                  : detail::env_path_length_cap().value_or(nv_ * (1 + longest));
        if (cutoff_ < 1) throw PreconditionError("path length cutoff must be positive");
        working_ = cutoff_ + spread;

        enumerate_paths(path_budget);
        build_ideal();
        build_mult_tables();
    }

    const Presentation& presentation() const { return p_; }
    const Quiver& quiver() const { return p_.quiver; }
    int cutoff() const { return cutoff_; }
    int working_length() const { return working_; }

    int dim_idx(int i, int j) const {
        return static_cast<int>(bucket(i, j).basis_cols.size());
    }
    int dim(const std::string& i, const std::string& j) const {
        return dim_idx(p_.quiver.vertex_index(i), p_.quiver.vertex_index(j));
    }

    std::vector<Path> basis(const std::string& i, const std::string& j) const {
        const Bucket& b = bucket(p_.quiver.vertex_index(i), p_.quiver.vertex_index(j));
        std::vector<Path> out;
        for (int c : b.basis_cols) out.push_back(to_path(b.paths[static_cast<std::size_t>(c)]));
        return out;
    }

    IntMatrix cartan() const {
        IntMatrix c(static_cast<std::size_t>(nv_), IntVec(static_cast<std::size_t>(nv_), 0));
        for (int i = 0; i < nv_; ++i)
            for (int j = 0; j < nv_; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dim_idx(i, j);
        return c;
    }

    Int total_dimension() const {
        Int t = 0;
        for (int i = 0; i < nv_; ++i)
            for (int j = 0; j < nv_; ++j) t += dim_idx(i, j);
        return t;
    }

    // Coordinates of the class of a directed path over basis(source, target).
    RatVec reduce(const Path& path) const {
        if (!is_directed_path(p_.quiver, path))
            throw PreconditionError("cannot reduce a non-composable path");
        const int i = p_.quiver.vertex_index(path_source(p_.quiver, path));
        const int j = p_.quiver.vertex_index(path_target(p_.quiver, path));
        std::vector<int> seq;
        for (const auto& a : path.arrows) seq.push_back(p_.quiver.arrow_index(a));
        const Bucket& b = bucket(i, j);
        auto it = b.index.find(seq);
        if (it == b.index.end())
            throw PreconditionError("path exceeds the working truncation length");
        RatVec unit(b.paths.size(), 0);
        unit[static_cast<std::size_t>(it->second)] = 1;
        return restrict_to_basis(b, echelon_reduce(b.ideal, std::move(unit)));
    }

    // Basis path lengths of block (i, j); used by radical computations.
    std::vector<int> basis_lengths_idx(int i, int j) const {
        const Bucket& b = bucket(i, j);
        std::vector<int> out;
        for (int c : b.basis_cols)
            out.push_back(static_cast<int>(b.paths[static_cast<std::size_t>(c)].size()));
        return out;
    }

    // Right action of the arrow with quiver index `arrow` (source j) on basis
    // element #b of block (i, j): coordinates over basis(i, target(arrow)).
    const RatVec& act(int i, int j, int b, int arrow) const {
        const auto& outs = p_.quiver.out_arrows(j);
        const auto pos = std::find(outs.begin(), outs.end(), arrow);
        if (pos == outs.end()) throw PreconditionError("arrow does not start at the block target");
        return mult_[key(i, j)][static_cast<std::size_t>(b)]
                    [static_cast<std::size_t>(pos - outs.begin())];
    }

    // Indices of redundant generators: relation k is redundant when it lies in
    // the ideal generated by the other relations plus rad*I + I*rad.  The
    // presentation is minimal iff the list is empty.
    std::vector<std::size_t> non_minimal_generators() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < p_.relations.size(); ++k) {
            const Relation& rel = p_.relations[k];
            const int rs = p_.quiver.vertex_index(relation_source(p_.quiver, rel));
            const int re = p_.quiver.vertex_index(relation_target(p_.quiver, rel));
            const Bucket& b = bucket(rs, re);
            RatMatrix rows;
            for (std::size_t j = 0; j < p_.relations.size(); ++j)
                append_padded_rows(rows, b, rs, re, p_.relations[j], j == k ? 1 : 0);
            const EchelonForm ef = echelonize(std::move(rows));
            RatVec vec(b.paths.size(), 0);
            for (const auto& t : rel.terms) {
                std::vector<int> seq;
                for (const auto& a : t.path.arrows) seq.push_back(p_.quiver.arrow_index(a));
                vec[static_cast<std::size_t>(b.index.at(seq))] += t.coeff;
            }
            vec = echelon_reduce(ef, std::move(vec));
            if (std::all_of(vec.begin(), vec.end(), [](const Rational& x) { return x == 0; }))
                out.push_back(k);
        }
        return out;
    }

private:
    struct Bucket {
        std::vector<std::vector<int>> paths;     // arrow-index sequences, deg-lex
        std::map<std::vector<int>, int> index;
        EchelonForm ideal;
        std::vector<int> basis_cols;             // non-pivot columns, ascending
    };

    Presentation p_;
    int nv_ = 0, cutoff_ = 0, working_ = 0;
    std::vector<Bucket> buckets_;
    std::vector<std::vector<std::vector<RatVec>>> mult_; // [key(i,j)][basis][out-arrow pos]

    std::size_t key(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(nv_) +
               static_cast<std::size_t>(j);
    }
    const Bucket& bucket(int i, int j) const { return buckets_[key(i, j)]; }
    Bucket& bucket(int i, int j) { return buckets_[key(i, j)]; }

    Path to_path(const std::vector<int>& seq) const {
        Path p;
        for (int a : seq) p.arrows.push_back(p_.quiver.arrows()[static_cast<std::size_t>(a)].id);
        return p;
    }

    void enumerate_paths(std::size_t budget) {
        const Quiver& q = p_.quiver;
        buckets_.assign(static_cast<std::size_t>(nv_) * static_cast<std::size_t>(nv_), {});
        std::size_t total = 0;
        for (int s = 0; s < nv_; ++s) {
            // (target, arrow sequence) frontier, extended level by level
            std::vector<std::pair<int, std::vector<int>>> level{{s, {}}};
            bucket(s, s).paths.push_back({});
            ++total;
            for (int len = 1; len <= working_ && !level.empty(); ++len) {
                std::vector<std::pair<int, std::vector<int>>> next;
                for (const auto& [t, seq] : level)
                    for (int ai : q.out_arrows(t)) {
                        std::vector<int> ext = seq;
                        ext.push_back(ai);
                        const int nt = q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to);
                        bucket(s, nt).paths.push_back(ext);
                        if (++total > budget)
                            throw PreconditionError(
                                "path budget exceeded; the quotient looks infinite-dimensional");
                        next.push_back({nt, std::move(ext)});
                    }
                level = std::move(next);
            }
        }
        // deg-lex order on arrow-id sequences, independent of insertion order
        const auto& arrows = p_.quiver.arrows();
        auto deglex = [&](const std::vector<int>& a, const std::vector<int>& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto& x = arrows[static_cast<std::size_t>(a[i])].id;
                const auto& y = arrows[static_cast<std::size_t>(b[i])].id;
                if (x != y) return x < y;
            }
            return false;
        };
        for (auto& b : buckets_) {
            std::sort(b.paths.begin(), b.paths.end(), deglex);
            for (std::size_t c = 0; c < b.paths.size(); ++c)
                b.index[b.paths[c]] = static_cast<int>(c);
        }
    }

    // Rows u * rel * v over bucket(i, j); min_uv = 1 restricts to the radical
    // spans rad*I + I*rad, min_uv = 0 gives the full two-sided span.
    void append_padded_rows(RatMatrix& rows, const Bucket& b, int i, int j,
                            const Relation& rel, int min_uv) const {
        const Quiver& q = p_.quiver;
        const int rs = q.vertex_index(relation_source(q, rel));
        const int re = q.vertex_index(relation_target(q, rel));
        int max_term = 0;
        for (const auto& t : rel.terms)
            max_term = std::max(max_term, static_cast<int>(t.path.length()));
        for (const auto& u : bucket(i, rs).paths)
            for (const auto& v : bucket(re, j).paths) {
                if (static_cast<int>(u.size() + v.size()) < min_uv) continue;
                if (static_cast<int>(u.size()) + max_term + static_cast<int>(v.size()) > working_)
                    continue;
                RatVec row(b.paths.size(), 0);
                for (const auto& t : rel.terms) {
                    std::vector<int> seq = u;
                    for (const auto& a : t.path.arrows) seq.push_back(q.arrow_index(a));
                    seq.insert(seq.end(), v.begin(), v.end());
                    row[static_cast<std::size_t>(b.index.at(seq))] += t.coeff;
                }
                rows.push_back(std::move(row));
            }
    }

    void build_ideal() {
        for (int i = 0; i < nv_; ++i)
            for (int j = 0; j < nv_; ++j) {
                Bucket& b = bucket(i, j);
                RatMatrix rows;
                for (const auto& rel : p_.relations) append_padded_rows(rows, b, i, j, rel, 0);
                // leading term = largest path, so the basis prefers short paths
                std::vector<int> order(b.paths.size());
                for (std::size_t c = 0; c < b.paths.size(); ++c)
                    order[c] = static_cast<int>(b.paths.size() - 1 - c);
                b.ideal = echelonize(std::move(rows), std::move(order));
                std::vector<bool> is_pivot(b.paths.size(), false);
                for (int c : b.ideal.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
                for (std::size_t c = 0; c < b.paths.size(); ++c)
                    if (!is_pivot[c]) {
                        if (static_cast<int>(b.paths[c].size()) >= cutoff_)
                            throw PreconditionError(
                                "a basis path reached the cutoff; the quotient is possibly "
                                "infinite-dimensional");
                        b.basis_cols.push_back(static_cast<int>(c));
                    }
            }
    }

    RatVec restrict_to_basis(const Bucket& b, const RatVec& full) const {
        RatVec out(b.basis_cols.size(), 0);
        for (std::size_t k = 0; k < b.basis_cols.size(); ++k)
            out[k] = full[static_cast<std::size_t>(b.basis_cols[k])];
        return out;
    }

    void build_mult_tables() {
        const Quiver& q = p_.quiver;
        mult_.assign(buckets_.size(), {});
        for (int i = 0; i < nv_; ++i)
            for (int j = 0; j < nv_; ++j) {
                const Bucket& b = bucket(i, j);
                auto& table = mult_[key(i, j)];
                table.resize(b.basis_cols.size());
                for (std::size_t bi = 0; bi < b.basis_cols.size(); ++bi) {
                    const auto& seq = b.paths[static_cast<std::size_t>(b.basis_cols[bi])];
                    for (int ai : q.out_arrows(j)) {
                        const int t =
                            q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to);
                        std::vector<int> ext = seq;
                        ext.push_back(ai);
                        const Bucket& tb = bucket(i, t);
                        RatVec unit(tb.paths.size(), 0);
                        unit[static_cast<std::size_t>(tb.index.at(ext))] = 1;
                        table[bi].push_back(
                            restrict_to_basis(tb, echelon_reduce(tb.ideal, std::move(unit))));
                    }
                }
            }
    }
};

} // namespace quiverforge

#endif
