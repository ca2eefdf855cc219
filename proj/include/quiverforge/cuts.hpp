#ifndef QUIVERFORGE_CUTS_HPP
#define QUIVERFORGE_CUTS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <quiverforge/cycles.hpp>
#include <quiverforge/errors.hpp>
#include <quiverforge/gldim.hpp>
#include <quiverforge/homotopy.hpp>
#include <quiverforge/path_space.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

using AdmissibleCut = std::set<std::string>;

// A cut must pick exactly one arrow of every oriented chordless cycle and
// contain nothing else.  Returns a failure description, or nothing when the
// set is admissible.
inline std::optional<std::string> cut_violation(const Quiver& q, const AdmissibleCut& cut) {
    for (const auto& a : cut)
        if (!q.has_arrow(a)) throw InputError("cut names unknown arrow '" + a + "'");
    const auto cycles = enumerate_chordless_cycles(q);
    std::set<std::string> on_oriented;
    for (const Cycle& c : cycles) {
        if (!c.oriented) continue;
        int hits = 0;
        for (const auto& st : c.walk.steps) {
            on_oriented.insert(st.arrow);
            if (cut.count(st.arrow)) ++hits;
        }
        if (hits != 1) {
            std::string cyc;
            for (const auto& v : c.vertex_seq) cyc += (cyc.empty() ? "" : ",") + v;
            return "cycle (" + cyc + ") contains " + std::to_string(hits) +
                   " cut arrows instead of 1";
        }
    }
    for (const auto& a : cut)
        if (!on_oriented.count(a))
            return "arrow '" + a + "' lies on no oriented chordless cycle";
    return {};
}

inline bool is_admissible_cut(const Quiver& q, const AdmissibleCut& cut) {
    return !cut_violation(q, cut);
}

namespace detail {

// Exact-cover backtracking over the oriented chordless cycles: repeatedly
// take an uncovered cycle with the fewest usable arrows and branch on them.
// `forced_in` arrows are chosen up front (each must lie on a cycle),
// `forced_out` arrows are never chosen; `first_only` stops at the first
// solution.
inline void cover_cycles(const Quiver& q, bool first_only,
                         const std::set<std::string>& forced_in,
                         const std::set<std::string>& forced_out,
                         std::vector<AdmissibleCut>& out) {
    std::vector<std::vector<std::string>> cycles;
    for (const Cycle& c : enumerate_chordless_cycles(q)) {
        if (!c.oriented)
            throw PreconditionError("cuts require a cyclically oriented quiver");
        std::vector<std::string> arrows;
        for (const auto& st : c.walk.steps) arrows.push_back(st.arrow);
        cycles.push_back(std::move(arrows));
    }
    std::map<std::string, std::vector<std::size_t>> cycles_of;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci)
        for (const auto& a : cycles[ci]) cycles_of[a].push_back(ci);

    std::vector<bool> covered(cycles.size(), false);
    std::set<std::string> chosen;
    std::set<std::string> blocked = forced_out;

    for (const auto& a : forced_in) {
        if (blocked.count(a)) return;
        if (cycles_of.find(a) == cycles_of.end()) return;
        for (std::size_t ci : cycles_of[a]) {
            if (covered[ci]) return; // two forced arrows on one cycle
            covered[ci] = true;
            for (const auto& b : cycles[ci])
                if (b != a) blocked.insert(b);
        }
        chosen.insert(a);
    }
    for (const auto& a : chosen)
        if (blocked.count(a)) return; // forced arrows block each other

    auto rec = [&](auto&& self) -> bool {
        std::size_t pick = cycles.size();
        std::size_t best = static_cast<std::size_t>(-1);
        for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
            if (covered[ci]) continue;
            std::size_t usable = 0;
            for (const auto& a : cycles[ci])
                if (!blocked.count(a)) ++usable;
            if (usable < best) {
                best = usable;
                pick = ci;
            }
        }
        if (pick == cycles.size()) {
            out.push_back(AdmissibleCut(chosen.begin(), chosen.end()));
            return first_only;
        }
        if (best == 0) return false;
        for (const auto& a : cycles[pick]) {
            if (blocked.count(a)) continue;
            std::vector<std::size_t> newly;
            for (std::size_t ci : cycles_of[a])
                if (!covered[ci]) {
                    covered[ci] = true;
                    newly.push_back(ci);
                }
            std::vector<std::string> newly_blocked;
            for (std::size_t ci : newly)
                for (const auto& b : cycles[ci])
                    if (b != a && !blocked.count(b)) {
                        blocked.insert(b);
                        newly_blocked.push_back(b);
                    }
            chosen.insert(a);
            const bool stop = self(self);
            chosen.erase(a);
            for (const auto& b : newly_blocked) blocked.erase(b);
            for (std::size_t ci : newly) covered[ci] = false;
            if (stop) return true;
        }
        return false;
    };
    rec(rec);
}

inline std::optional<AdmissibleCut> constrained_first_cut(
    const Quiver& q, const std::set<std::string>& forced_in,
    const std::set<std::string>& forced_out) {
    std::vector<AdmissibleCut> out;
    cover_cycles(q, true, forced_in, forced_out, out);
    if (out.empty()) return {};
    return out.front();
}

inline AdmissibleCut first_admissible_cut(const Quiver& q) {
    const auto cut = constrained_first_cut(q, {}, {});
    if (!cut) throw CheckError("no admissible cut exists");
    return *cut;
}

} // namespace detail

// All admissible cuts, sorted lexicographically as arrow-id sets.
inline std::vector<AdmissibleCut> enumerate_admissible_cuts(const Quiver& q) {
    if (!is_cyclically_oriented(q).cyclically_oriented)
        throw PreconditionError("cuts require a cyclically oriented quiver");
    std::vector<AdmissibleCut> out;
    detail::cover_cycles(q, false, {}, {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

// A cut through a prescribed arrow, built constructively: close a chordless
// cycle through the arrow, anchor at that cycle's last arrow, take the first
// arrow of every antiparallel path, and complete each decomposition part with
// a cut that avoids the remainder of its antiparallel path (otherwise the
// anchored cycles would be covered twice).  The result is re-checked against
// the invariant.
inline AdmissibleCut cut_containing(const Quiver& q, const std::string& alpha) {
    if (!q.has_arrow(alpha)) throw InputError("unknown arrow '" + alpha + "'");
    if (!is_cyclically_oriented(q).cyclically_oriented)
        throw PreconditionError("cuts require a cyclically oriented quiver");
    if (!is_connected(q)) throw PreconditionError("cut construction requires a connected quiver");

    // the lexicographically least oriented chordless cycle through alpha,
    // rotated to start with alpha
    std::optional<std::vector<std::string>> best;
    for (const Cycle& c : enumerate_chordless_cycles(q)) {
        if (!c.oriented || !c.contains_arrow(alpha)) continue;
        std::vector<std::string> order = detail::directed_arrow_order(c);
        const auto pos = std::find(order.begin(), order.end(), alpha);
        std::rotate(order.begin(), pos, order.end());
        if (!best || order < *best) best = order;
    }
    if (!best)
        throw PreconditionError("arrow '" + alpha + "' lies on no oriented cycle");

    const std::string eta = best->back();
    const ArrowDecomposition dec = decompose_at_arrow(q, eta);

    AdmissibleCut cut;
    auto absorb = [&](const AdmissibleCut& part) { cut.insert(part.begin(), part.end()); };
    for (std::size_t i = 0; i < dec.antiparallel.size(); ++i) {
        const auto& delta = dec.antiparallel[i].arrows;
        const Quiver& closure = dec.component_closures[i];
        cut.insert(delta.front());
        const std::set<std::string> avoid(delta.begin() + 1, delta.end());
        std::set<std::string> keep;
        const auto cyc = cyclic_arrows(closure);
        if (std::find(cyc.begin(), cyc.end(), delta.front()) != cyc.end())
            keep.insert(delta.front());
        const auto sub = detail::constrained_first_cut(closure, keep, avoid);
        if (!sub)
            throw CheckError("no completion for the part at '" + delta.front() + "'");
        absorb(*sub);
    }
    absorb(detail::first_admissible_cut(dec.closure_x));
    if (!dec.closures_xy_equal) absorb(detail::first_admissible_cut(dec.closure_y));

    if (const auto why = cut_violation(q, cut))
        throw CheckError("constructed cut through '" + alpha + "' is not admissible: " + *why);
    if (!cut.count(alpha)) throw CheckError("constructed cut lost the prescribed arrow");
    return cut;
}

// Quotient of the standard presentation by a cut: delete the cut arrows; the
// relations of the cut arrows survive unchanged, all others die.  Both facts
// are verified term by term instead of being assumed.
inline Presentation quotient_by_cut(const Presentation& p, const AdmissibleCut& cut) {
    const Presentation standard = standard_relations(p.quiver);
    if (!presentations_equal(p, standard))
        throw PreconditionError("quotients are taken of the standard presentation");
    if (const auto why = cut_violation(p.quiver, cut))
        throw PreconditionError("not an admissible cut: " + *why);

    Presentation out;
    out.quiver = delete_arrows(p.quiver, std::vector<std::string>(cut.begin(), cut.end()));
    for (const Relation& r : standard.relations) {
        const bool keep = cut.count(*r.antiparallel_arrow) != 0;
        for (const auto& t : r.terms) {
            bool hits_cut = false;
            for (const auto& a : t.path.arrows)
                if (cut.count(a)) hits_cut = true;
            if (keep && hits_cut)
                throw CheckError("a surviving relation runs through a cut arrow");
            if (!keep && !hits_cut)
                throw CheckError("a dropped relation has a term avoiding the cut");
        }
        if (keep) out.relations.push_back(Relation{r.terms, std::nullopt});
    }
    validate_presentation(out);
    return out;
}

struct CutQuotientReport {
    bool acyclic = false;
    std::optional<BypassWitness> bypass;
    bool homology_trivial_on_convex = false;
    std::optional<std::string> homology_witness; // vertex set of a failing subquiver
    std::optional<int> gldim;
    int gldim_cap = 4;
    bool ok() const {
        return acyclic && !bypass && homology_trivial_on_convex && gldim && *gldim <= 2;
    }
};

// Structural guarantees of cut quotients, checked rather than assumed:
// acyclic quiver, no bypass, trivial first homology on every connected convex
// full subquiver, and global dimension at most 2.
inline CutQuotientReport verify_cut_quotient(const Presentation& p,
                                             std::optional<int> max_path_length = {}) {
    validate_presentation(p);
    const Quiver& q = p.quiver;
    if (q.vertex_count() > 20)
        throw PreconditionError("convex-subquiver sweep is limited to 20 vertices");

    CutQuotientReport rep;
    rep.acyclic = is_acyclic(q);
    rep.bypass = find_bypass(q);

    rep.homology_trivial_on_convex = true;
    const auto& verts = q.vertices();
    const std::size_t n = verts.size();
    for (std::size_t mask = 1; mask < (static_cast<std::size_t>(1) << n); ++mask) {
        std::vector<std::string> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (static_cast<std::size_t>(1) << i)) subset.push_back(verts[i]);
        const Quiver sub = full_subquiver(q, subset);
        if (!is_connected(sub) || convexity_violation(q, subset)) continue;
        Presentation sp;
        sp.quiver = sub;
        std::set<std::string> in_sub(subset.begin(), subset.end());
        for (const Relation& r : p.relations)
            if (in_sub.count(relation_source(q, r)) && in_sub.count(relation_target(q, r)))
                sp.relations.push_back(Relation{r.terms, std::nullopt});
        if (!first_homology(sp).trivial()) {
            rep.homology_trivial_on_convex = false;
            std::string w;
            for (const auto& v : subset) w += (w.empty() ? "" : ",") + v;
            rep.homology_witness = w;
            break;
        }
    }

    const AlgebraModel model(p, max_path_length);
    rep.gldim = global_dimension(model).value;
    return rep;
}

} // namespace quiverforge

#endif
