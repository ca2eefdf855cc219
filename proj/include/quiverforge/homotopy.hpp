#ifndef QUIVERFORGE_HOMOTOPY_HPP
#define QUIVERFORGE_HOMOTOPY_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/linalg.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

namespace detail {

// All directed paths of length <= max_len (including the trivial path at
// every vertex), indexed by (source vertex, arrow-index sequence).
struct PathTable {
    std::vector<std::vector<int>> seqs;
    std::vector<int> src, tgt;
    std::map<std::pair<int, std::vector<int>>, int> index;

    int id_of(int s, const std::vector<int>& seq) const {
        auto it = index.find({s, seq});
        if (it == index.end()) throw CheckError("path table lookup failed");
        return it->second;
    }
};

inline PathTable enumerate_all_paths(const Quiver& q, int max_len, std::size_t budget) {
    PathTable t;
    const int nv = static_cast<int>(q.vertex_count());
    auto add = [&](int s, int e, std::vector<int> seq) {
        const int id = static_cast<int>(t.seqs.size());
        t.index[{s, seq}] = id;
        t.seqs.push_back(std::move(seq));
        t.src.push_back(s);
        t.tgt.push_back(e);
        if (t.seqs.size() > budget)
            throw PreconditionError("path budget exceeded while enumerating homotopy paths");
        return id;
    };
    for (int s = 0; s < nv; ++s) {
        std::vector<int> level{add(s, s, {})};
        for (int len = 1; len <= max_len && !level.empty(); ++len) {
            std::vector<int> next;
            for (int id : level)
                for (int ai : q.out_arrows(t.tgt[static_cast<std::size_t>(id)])) {
                    std::vector<int> ext = t.seqs[static_cast<std::size_t>(id)];
                    ext.push_back(ai);
                    const int e =
                        q.vertex_index(q.arrows()[static_cast<std::size_t>(ai)].to);
                    next.push_back(add(s, e, std::move(ext)));
                }
            level = std::move(next);
        }
    }
    return t;
}

// Union-find where every merge of two classes replays all cross pairs under
// one-arrow pre- and post-composition (iterated, this closes the relation
// under composition with arbitrary common paths within the length bound).
class PathPartition {
public:
    PathPartition(const Quiver& q, const PathTable& t, int max_len)
        : q_(q), t_(t), max_len_(max_len), parent_(t.seqs.size()),
          members_(t.seqs.size()) {
        std::iota(parent_.begin(), parent_.end(), 0);
        for (std::size_t i = 0; i < parent_.size(); ++i)
            members_[i] = {static_cast<int>(i)};
    }

    int find(int a) const {
        while (parent_[static_cast<std::size_t>(a)] != a)
            a = parent_[static_cast<std::size_t>(a)];
        return a;
    }

    void merge(int a, int b) {
        unite(a, b);
        while (!work_.empty()) {
            auto [left, right] = std::move(work_.front());
            work_.pop_front();
            for (int pa : left)
                for (int pb : right) compose_pair(pa, pb);
        }
    }

    std::vector<std::vector<int>> classes() const {
        std::map<int, std::vector<int>> by_root;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            by_root[find(static_cast<int>(i))].push_back(static_cast<int>(i));
        std::vector<std::vector<int>> out;
        for (auto& [root, ids] : by_root) out.push_back(std::move(ids));
        return out;
    }

private:
    const Quiver& q_;
    const PathTable& t_;
    int max_len_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> members_;
    std::deque<std::pair<std::vector<int>, std::vector<int>>> work_;

    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (members_[static_cast<std::size_t>(ra)].size() <
            members_[static_cast<std::size_t>(rb)].size())
            std::swap(ra, rb);
        work_.push_back({members_[static_cast<std::size_t>(ra)],
                         members_[static_cast<std::size_t>(rb)]});
        parent_[static_cast<std::size_t>(rb)] = ra;
        auto& big = members_[static_cast<std::size_t>(ra)];
        auto& small = members_[static_cast<std::size_t>(rb)];
        big.insert(big.end(), small.begin(), small.end());
        small.clear();
        small.shrink_to_fit();
    }

    void compose_pair(int pa, int pb) {
        const auto ia = static_cast<std::size_t>(pa), ib = static_cast<std::size_t>(pb);
        const int longer = static_cast<int>(std::max(t_.seqs[ia].size(), t_.seqs[ib].size()));
        if (longer + 1 > max_len_) return;
        const int s = t_.src[ia], e = t_.tgt[ia];
        for (int ai : q_.in_arrows(s)) {
            const int from = q_.vertex_index(q_.arrows()[static_cast<std::size_t>(ai)].from);
            std::vector<int> ea = {ai}, eb = {ai};
            ea.insert(ea.end(), t_.seqs[ia].begin(), t_.seqs[ia].end());
            eb.insert(eb.end(), t_.seqs[ib].begin(), t_.seqs[ib].end());
            unite(t_.id_of(from, ea), t_.id_of(from, eb));
        }
        for (int ai : q_.out_arrows(e)) {
            std::vector<int> ea = t_.seqs[ia], eb = t_.seqs[ib];
            ea.push_back(ai);
            eb.push_back(ai);
            unite(t_.id_of(s, ea), t_.id_of(s, eb));
        }
    }
};

} // namespace detail

// Partition of the paths x -> y of length <= max_len into homotopy classes:
// the smallest equivalence merging all terms of each relation and stable
// under composition with common paths, within the length bound.  Classes are
// ordered by their least member (length, then arrow ids); so are members.
inline std::vector<std::vector<Path>> homotopy_classes(const Presentation& p,
                                                       const std::string& x,
                                                       const std::string& y, int max_len,
                                                       std::size_t path_budget = 500000) {
    validate_presentation(p);
    const Quiver& q = p.quiver;
    for (const auto& v : {x, y})
        if (!q.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    const int xi = q.vertex_index(x), yi = q.vertex_index(y);
    if (max_len < 0) throw PreconditionError("negative length bound");

    const detail::PathTable table = detail::enumerate_all_paths(q, max_len, path_budget);
    detail::PathPartition part(q, table, max_len);
    for (const auto& r : p.relations) {
        int first = -1;
        for (const auto& t : r.terms) {
            if (static_cast<int>(t.path.length()) > max_len) continue;
            std::vector<int> seq;
            for (const auto& a : t.path.arrows) seq.push_back(q.arrow_index(a));
            const int id = table.id_of(q.vertex_index(path_source(q, t.path)), seq);
            if (first < 0)
                first = id;
            else
                part.merge(first, id);
        }
    }

    auto key = [&](int id) {
        std::vector<std::string> ids;
        for (int ai : table.seqs[static_cast<std::size_t>(id)])
            ids.push_back(q.arrows()[static_cast<std::size_t>(ai)].id);
        return std::make_pair(ids.size(), ids);
    };
    std::vector<std::vector<Path>> out;
    for (const auto& cls : part.classes()) {
        std::vector<int> ids;
        for (int id : cls)
            if (table.src[static_cast<std::size_t>(id)] == xi &&
                table.tgt[static_cast<std::size_t>(id)] == yi)
                ids.push_back(id);
        if (ids.empty()) continue;
        std::sort(ids.begin(), ids.end(),
                  [&](int a, int b) { return key(a) < key(b); });
        std::vector<Path> cl;
        for (int id : ids) {
            Path path;
            for (int ai : table.seqs[static_cast<std::size_t>(id)])
                path.arrows.push_back(q.arrows()[static_cast<std::size_t>(ai)].id);
            cl.push_back(std::move(path));
        }
        out.push_back(std::move(cl));
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<Path>& a, const std::vector<Path>& b) {
                  return std::make_pair(a.front().length(), a.front().arrows) <
                         std::make_pair(b.front().length(), b.front().arrows);
              });
    return out;
}

struct HomologyReport {
    int free_rank = 0;
    std::vector<Int> torsion; // invariant factors > 1, ascending
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// First homology of the presentation: the free abelian group on the arrows of
// a connected quiver, modulo boundaries (equivalently, the free group on the
// fundamental cycles of a spanning tree) and modulo one difference vector per
// pair of parallel paths merged by a relation.  Trivial output certifies
// simple connectedness at the homology level.
inline HomologyReport first_homology(const Presentation& p) {
    validate_presentation(p);
    const Quiver& q = p.quiver;
    if (!is_connected(q)) throw PreconditionError("first homology requires a connected quiver");
    const int nv = static_cast<int>(q.vertex_count());
    const int na = static_cast<int>(q.arrow_count());

    // spanning tree of the underlying graph; t(v) = signed arrow counts of
    // the tree walk from vertex 0 to v
    std::vector<IntVec> tree_walk(static_cast<std::size_t>(nv));
    std::vector<bool> seen(static_cast<std::size_t>(nv), false),
        in_tree(static_cast<std::size_t>(na), false);
    tree_walk[0] = IntVec(static_cast<std::size_t>(na), 0);
    seen[0] = true;
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop_front();
        for (int ai = 0; ai < na; ++ai) {
            const auto& a = q.arrows()[static_cast<std::size_t>(ai)];
            const int from = q.vertex_index(a.from), to = q.vertex_index(a.to);
            int other = -1, sign = 0;
            if (from == v && !seen[static_cast<std::size_t>(to)]) other = to, sign = 1;
            if (to == v && !seen[static_cast<std::size_t>(from)]) other = from, sign = -1;
            if (other < 0) continue;
            in_tree[static_cast<std::size_t>(ai)] = true;
            tree_walk[static_cast<std::size_t>(other)] = tree_walk[static_cast<std::size_t>(v)];
            tree_walk[static_cast<std::size_t>(other)][static_cast<std::size_t>(ai)] += sign;
            seen[static_cast<std::size_t>(other)] = true;
            frontier.push_back(other);
        }
    }

    std::vector<int> loops; // non-tree arrows index the fundamental cycles
    for (int ai = 0; ai < na; ++ai)
        if (!in_tree[static_cast<std::size_t>(ai)]) loops.push_back(ai);
    const int rank = static_cast<int>(loops.size());

    auto arrow_counts = [&](const Path& path) {
        IntVec v(static_cast<std::size_t>(na), 0);
        for (const auto& a : path.arrows) v[static_cast<std::size_t>(q.arrow_index(a))] += 1;
        return v;
    };
    auto loop_vector = [&](int ai) {
        const auto& a = q.arrows()[static_cast<std::size_t>(ai)];
        IntVec v = tree_walk[static_cast<std::size_t>(q.vertex_index(a.from))];
        v[static_cast<std::size_t>(ai)] += 1;
        const IntVec& back = tree_walk[static_cast<std::size_t>(q.vertex_index(a.to))];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= back[k];
        return v;
    };

    IntMatrix rows;
    for (const auto& r : p.relations)
        for (std::size_t t = 1; t < r.terms.size(); ++t) {
            const IntVec d0 = arrow_counts(r.terms[0].path);
            const IntVec dt = arrow_counts(r.terms[t].path);
            IntVec d(static_cast<std::size_t>(na), 0);
            for (std::size_t k = 0; k < d.size(); ++k) d[k] = d0[k] - dt[k];
            // coordinates over the fundamental-cycle basis, then verify that
            // the difference really is the corresponding combination
            IntVec coords(static_cast<std::size_t>(rank), 0);
            IntVec rebuilt(static_cast<std::size_t>(na), 0);
            for (int k = 0; k < rank; ++k) {
                coords[static_cast<std::size_t>(k)] =
                    d[static_cast<std::size_t>(loops[static_cast<std::size_t>(k)])];
                const IntVec lv = loop_vector(loops[static_cast<std::size_t>(k)]);
                for (std::size_t j = 0; j < rebuilt.size(); ++j)
                    rebuilt[j] += coords[static_cast<std::size_t>(k)] * lv[j];
            }
            if (rebuilt != d)
                throw CheckError("parallel-path difference is not a cycle combination");
            rows.push_back(std::move(coords));
        }

    HomologyReport rep;
    if (rows.empty()) {
        rep.free_rank = rank;
        return rep;
    }
    const SmithResult snf = smith_normal_form(rows);
    int nonzero = 0;
    for (const Int& d : snf.diagonal)
        if (d != 0) {
            ++nonzero;
            if (d != 1 && d != -1) rep.torsion.push_back(d < 0 ? -d : d);
        }
    std::sort(rep.torsion.begin(), rep.torsion.end());
    rep.free_rank = rank - nonzero;
    return rep;
}

} // namespace quiverforge

#endif
