#ifndef QUIVERFORGE_PRESENTATION_HPP
#define QUIVERFORGE_PRESENTATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <quiverforge/cycles.hpp>
#include <quiverforge/errors.hpp>
#include <quiverforge/quiver.hpp>
#include <quiverforge/rational.hpp>

namespace quiverforge {

struct RelationTerm {
    Rational coeff;
    Path path;
    bool operator==(const RelationTerm&) const = default;
};

// A linear combination of parallel paths of length >= 2.  Terms are kept in
// lexicographic path order with distinct paths and nonzero coefficients; the
// optional tag names the antiparallel arrow the relation belongs to.
struct Relation {
    std::vector<RelationTerm> terms;
    std::optional<std::string> antiparallel_arrow;
    bool operator==(const Relation&) const = default;
};

inline void canonicalize_relation(Relation& r) {
    std::map<Path, Rational> merged;
    for (const auto& t : r.terms) merged[t.path] += t.coeff;
    r.terms.clear();
    for (auto& [p, c] : merged)
        if (c != 0) r.terms.push_back({c, p});
}

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
};

inline std::string relation_source(const Quiver& q, const Relation& r) {
    if (r.terms.empty()) throw PreconditionError("relation has no terms");
    return path_source(q, r.terms.front().path);
}

inline std::string relation_target(const Quiver& q, const Relation& r) {
    if (r.terms.empty()) throw PreconditionError("relation has no terms");
    return path_target(q, r.terms.front().path);
}

inline void validate_presentation(const Presentation& p) {
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
        const Relation& r = p.relations[k];
        const std::string where = "relation #" + std::to_string(k);
        if (r.terms.empty()) throw InputError(where + " has no terms");
        std::set<Path> seen;
        std::optional<std::pair<std::string, std::string>> ends;
        for (const auto& t : r.terms) {
            if (t.coeff == 0) throw InputError(where + " has a zero coefficient");
            if (t.path.length() < 2) throw InputError(where + " has a term of length < 2");
            if (!is_directed_path(p.quiver, t.path))
                throw InputError(where + " has a non-composable term");
            if (!seen.insert(t.path).second)
                throw InputError(where + " repeats a path");
            const auto e = std::make_pair(path_source(p.quiver, t.path),
                                          path_target(p.quiver, t.path));
            if (ends && *ends != e) throw InputError(where + " mixes endpoints");
            ends = e;
        }
        if (r.antiparallel_arrow && !p.quiver.has_arrow(*r.antiparallel_arrow))
            throw InputError(where + " is tagged with an unknown arrow");
    }
}

// The canonical presentation of a cyclically oriented quiver: one relation
// per arrow on a chordless cycle, whose terms are all shortest antiparallel
// paths with coefficient 1.  Relations follow arrow insertion order.
inline Presentation standard_relations(const Quiver& q) {
    const CyclicOrientationResult orient = is_cyclically_oriented(q);
    if (!orient.cyclically_oriented)
        throw PreconditionError("standard relations require a cyclically oriented quiver");
    Presentation p;
    p.quiver = q;
    const std::vector<std::string> cyc = cyclic_arrows(q);
    const std::set<std::string> cyc_set(cyc.begin(), cyc.end());
    for (const auto& a : q.arrows()) {
        if (!cyc_set.count(a.id)) continue;
        Relation r;
        r.antiparallel_arrow = a.id;
        for (const Path& d : antiparallel_shortest_paths(q, a.id)) r.terms.push_back({1, d});
        p.relations.push_back(std::move(r));
    }
    return p;
}

struct R1R2Report {
    bool ok = false;
    std::vector<std::string> diagnostics;
};

// (R1): the relations biject with the cyclic arrows via "relation at the
// arrow antiparallel to its paths".  (R2): each relation is supported on all
// shortest antiparallel paths of its arrow, with nonzero coefficients.
inline R1R2Report check_R1_R2(const Presentation& p) {
    validate_presentation(p);
    const Quiver& q = p.quiver;
    if (!is_cyclically_oriented(q).cyclically_oriented)
        throw PreconditionError("(R1)/(R2) apply to cyclically oriented quivers only");

    R1R2Report rep;
    auto diag = [&](const std::string& m) { rep.diagnostics.push_back(m); };

    const std::vector<std::string> cyc = cyclic_arrows(q);
    std::map<std::string, std::size_t> matched;
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
        Relation r = p.relations[k];
        canonicalize_relation(r);
        const std::string label = "relation #" + std::to_string(k);
        if (r.terms.empty()) {
            diag(label + ": empty after cancellation");
            continue;
        }
        const std::string s = relation_source(q, r), e = relation_target(q, r);
        std::vector<std::string> anti;
        for (const auto& a : q.arrows())
            if (a.from == e && a.to == s) anti.push_back(a.id);
        if (anti.size() != 1) {
            diag(label + ": no unique antiparallel arrow from '" + e + "' to '" + s + "'");
            continue;
        }
        const std::string eta = anti.front();
        if (r.antiparallel_arrow && *r.antiparallel_arrow != eta)
            diag(label + ": tagged '" + *r.antiparallel_arrow + "' but antiparallel to '" +
                 eta + "'");
        if (matched.count(eta)) {
            diag(label + ": arrow '" + eta + "' already carries relation #" +
                 std::to_string(matched[eta]));
            continue;
        }
        matched[eta] = k;

        std::set<Path> expected;
        for (const Path& d : antiparallel_shortest_paths(q, eta)) expected.insert(d);
        std::set<Path> got;
        for (const auto& t : r.terms) got.insert(t.path);
        for (const Path& d : expected)
            if (!got.count(d)) diag(label + ": support incomplete at '" + eta + "'");
        for (const Path& d : got)
            if (!expected.count(d))
                diag(label + ": term is not a shortest antiparallel path of '" + eta + "'");
    }
    for (const auto& a : cyc)
        if (!matched.count(a)) diag("no relation for cyclic arrow '" + a + "'");

    rep.ok = rep.diagnostics.empty();
    return rep;
}

// Rewrite the relations in the rescaled arrow basis beta |-> f_beta * beta:
// each coefficient is divided by the product of f over the arrows of its
// path.  Missing entries count as 1.
inline Presentation apply_arrow_rescaling(const Presentation& p,
                                          const std::map<std::string, Rational>& f) {
    for (const auto& [id, val] : f) {
        if (!p.quiver.has_arrow(id))
            throw InputError("rescaling names unknown arrow '" + id + "'");
        if (val == 0) throw InputError("rescaling of arrow '" + id + "' is zero");
    }
    Presentation out = p;
    for (auto& r : out.relations)
        for (auto& t : r.terms) {
            Rational prod = 1;
            for (const auto& a : t.path.arrows) {
                auto it = f.find(a);
                if (it != f.end()) prod *= it->second;
            }
            t.coeff /= prod;
        }
    return out;
}

// Divide each relation by the coefficient of its lexicographically first term.
inline Presentation clear_relation_scalars(Presentation p) {
    for (auto& r : p.relations) {
        canonicalize_relation(r);
        if (r.terms.empty()) continue;
        const Rational lead = r.terms.front().coeff;
        for (auto& t : r.terms) t.coeff /= lead;
    }
    return p;
}

// Order-insensitive comparison of canonical forms over the same quiver.
inline bool presentations_equal(const Presentation& a, const Presentation& b) {
    if (!(a.quiver == b.quiver)) return false;
    auto key = [](const Relation& r) {
        std::vector<std::pair<Path, Rational>> k;
        for (const auto& t : r.terms) k.emplace_back(t.path, t.coeff);
        return std::make_pair(r.antiparallel_arrow.value_or(""), k);
    };
    auto canon = [&](const Presentation& p) {
        std::vector<Relation> rs = p.relations;
        for (auto& r : rs) canonicalize_relation(r);
        std::sort(rs.begin(), rs.end(),
                  [&](const Relation& x, const Relation& y) { return key(x) < key(y); });
        return rs;
    };
    return canon(a) == canon(b);
}

} // namespace quiverforge

#endif
