#ifndef QUIVERFORGE_NORMALIZE_HPP
#define QUIVERFORGE_NORMALIZE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <quiverforge/cuts.hpp>
#include <quiverforge/cycles.hpp>
#include <quiverforge/errors.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

struct NormalizationResult {
    Presentation standard;                     // the all-ones presentation
    std::map<std::string, Rational> rescaling; // one entry per arrow
};

namespace detail {

// the antiparallel arrow of a relation, recomputed from its endpoints
inline std::string relation_arrow(const Quiver& q, const Relation& r) {
    const std::string s = relation_source(q, r), e = relation_target(q, r);
    for (const auto& a : q.arrows())
        if (a.from == e && a.to == s) return a.id;
    throw CheckError("relation has no antiparallel arrow");
}

} // namespace detail

// Rescale the arrow basis so that all relation coefficients become 1.  Each
// round takes the least (arrow, term path) whose cleared coefficient differs
// from 1 and absorbs that coefficient into the arrows of a cut of the term's
// decomposition part; this fixes the chosen coefficient and provably leaves
// every other cleared coefficient unchanged.  The accumulated rescaling is
// verified against the original presentation before returning.
inline NormalizationResult normalize_coefficients(const Presentation& p) {
    const R1R2Report structure = check_R1_R2(p);
    if (!structure.ok) {
        std::string why = "relations do not have standard support:";
        for (const auto& d : structure.diagnostics) why += " " + d + ";";
        throw PreconditionError(why);
    }
    const Quiver& q = p.quiver;

    std::map<std::string, Rational> f;
    for (const auto& a : q.arrows()) f[a.id] = 1;

    std::size_t total_terms = 0;
    for (const auto& r : p.relations) total_terms += r.terms.size();

    Presentation cur = clear_relation_scalars(p);
    for (std::size_t round = 0; round <= total_terms; ++round) {
        // least (arrow, path) with a coefficient other than 1
        std::optional<std::tuple<std::string, Path, Rational>> target;
        for (const auto& r : cur.relations) {
            const std::string eta = detail::relation_arrow(q, r);
            for (const auto& t : r.terms) {
                if (t.coeff == 1) continue;
                if (!target || std::make_pair(eta, t.path) <
                                   std::make_pair(std::get<0>(*target), std::get<1>(*target)))
                    target = {eta, t.path, t.coeff};
            }
        }
        if (!target) {
            NormalizationResult res;
            res.standard = standard_relations(q);
            res.rescaling = std::move(f);
            const Presentation check = clear_relation_scalars(apply_arrow_rescaling(p, res.rescaling));
            for (const auto& r : check.relations)
                for (const auto& t : r.terms)
                    if (t.coeff != 1)
                        throw CheckError("rescaling verification left a coefficient not 1");
            return res;
        }

        const auto& [eta, phi, lambda] = *target;
        const ArrowDecomposition dec = decompose_at_arrow(q, eta);
        std::size_t part = dec.antiparallel.size();
        for (std::size_t i = 0; i < dec.antiparallel.size(); ++i)
            if (dec.antiparallel[i] == phi) part = i;
        if (part == dec.antiparallel.size())
            throw CheckError("term path is not an antiparallel path of its arrow");

        // cut of the part through the term's first arrow, avoiding its tail
        const Quiver& closure = dec.component_closures[part];
        const std::string& alpha = phi.arrows.front();
        AdmissibleCut sigma{alpha};
        const std::set<std::string> avoid(phi.arrows.begin() + 1, phi.arrows.end());
        std::set<std::string> keep;
        const auto cyc = cyclic_arrows(closure);
        if (std::find(cyc.begin(), cyc.end(), alpha) != cyc.end()) keep.insert(alpha);
        const auto sub = detail::constrained_first_cut(closure, keep, avoid);
        if (!sub) throw CheckError("no rescaling cut for the part at '" + alpha + "'");
        sigma.insert(sub->begin(), sub->end());
        std::size_t on_phi = 0;
        for (const auto& a : phi.arrows) on_phi += sigma.count(a);
        if (on_phi != 1)
            throw CheckError("rescaling cut meets the term path more than once");

        std::map<std::string, Rational> g;
        for (const auto& b : sigma) {
            g[b] = lambda;
            f[b] *= lambda;
        }
        cur = clear_relation_scalars(apply_arrow_rescaling(cur, g));
    }
    throw CheckError("coefficient normalization did not terminate");
}

} // namespace quiverforge

#endif
