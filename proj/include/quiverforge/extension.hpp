#ifndef QUIVERFORGE_EXTENSION_HPP
#define QUIVERFORGE_EXTENSION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <quiverforge/cuts.hpp>
#include <quiverforge/cycles.hpp>
#include <quiverforge/errors.hpp>
#include <quiverforge/isomorphism.hpp>
#include <quiverforge/path_space.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

// The quiver of the trivial extension by one antiparallel arrow per relation.
// When the extended quiver is cyclically oriented, its canonical relations
// are reconstructed alongside; otherwise scope_note says why they are not.
struct ExtensionResult {
    Quiver extended;
    std::vector<std::string> new_arrows; // parallel to the input relations
    std::optional<Presentation> reconstructed;
    std::optional<Cycle> scope_witness; // a non-oriented chordless cycle
    std::string scope_note;
    bool in_theorem_scope() const { return reconstructed.has_value(); }
};

inline ExtensionResult relation_extension_quiver(const Presentation& a,
                                                 bool allow_cyclic_input = false) {
    validate_presentation(a);
    if (!is_acyclic(a.quiver) && !allow_cyclic_input)
        throw PreconditionError("relation extension expects an acyclic quiver "
                                "unless cyclic input is explicitly allowed");
    if (!a.relations.empty()) {
        const AlgebraModel model(a);
        const auto redundant = model.non_minimal_generators();
        if (!redundant.empty())
            throw PreconditionError("relation #" + std::to_string(redundant.front()) +
                                    " is redundant; the generators must be minimal");
    }

    ExtensionResult res;
    res.extended = a.quiver;
    int counter = 0;
    for (const auto& r : a.relations) {
        std::string id = "ext" + std::to_string(counter++);
        while (res.extended.has_arrow(id)) id = "ext" + std::to_string(counter++);
        res.extended.add_arrow(id, relation_target(a.quiver, r), relation_source(a.quiver, r));
        res.new_arrows.push_back(id);
    }

    if (!validate_cluster_quiver(res.extended).simple()) {
        res.scope_note = "the extended quiver has loops, 2-cycles, or parallel arrows";
        return res;
    }
    const CyclicOrientationResult orient = is_cyclically_oriented(res.extended);
    if (!orient.cyclically_oriented) {
        res.scope_witness = orient.witness;
        res.scope_note = "the extended quiver is not cyclically oriented";
        return res;
    }
    res.reconstructed = standard_relations(res.extended);
    return res;
}

namespace detail {

// arrow transport induced by a vertex isomorphism of simple quivers
inline std::map<std::string, std::string>
induced_arrow_map(const Quiver& a, const Quiver& b,
                  const std::map<std::string, std::string>& phi) {
    std::map<std::string, std::string> m;
    for (const auto& ar : a.arrows()) {
        const std::string &from = phi.at(ar.from), &to = phi.at(ar.to);
        std::optional<std::string> hit;
        for (const auto& br : b.arrows())
            if (br.from == from && br.to == to) {
                if (hit)
                    throw PreconditionError("arrow transport is ambiguous between parallel arrows");
                hit = br.id;
            }
        if (!hit) throw CheckError("vertex map does not transport arrow '" + ar.id + "'");
        m[ar.id] = *hit;
    }
    return m;
}

inline Presentation transport_presentation(const Presentation& p, const Quiver& target,
                                           const std::map<std::string, std::string>& arrow_map) {
    Presentation out;
    out.quiver = target;
    for (const auto& r : p.relations) {
        Relation nr;
        if (r.antiparallel_arrow) nr.antiparallel_arrow = arrow_map.at(*r.antiparallel_arrow);
        for (const auto& t : r.terms) {
            Path np;
            for (const auto& ar : t.path.arrows) np.arrows.push_back(arrow_map.at(ar));
            nr.terms.push_back({t.coeff, np});
        }
        out.relations.push_back(std::move(nr));
    }
    return out;
}

} // namespace detail

struct CutTheoremCase {
    AdmissibleCut cut;
    bool quiver_matches = false;
    bool relations_match = false;
    bool pass() const { return quiver_matches && relations_match; }
};

struct CutTheoremReport {
    std::vector<CutTheoremCase> cases;
    bool all_pass() const {
        return std::all_of(cases.begin(), cases.end(),
                           [](const CutTheoremCase& c) { return c.pass(); });
    }
};

// Round trip over every admissible cut: quotient the canonical relations by
// the cut, extend the quotient back, and demand the original quiver together
// with its canonical relations reappears up to isomorphism.
inline CutTheoremReport check_cut_theorem(const Quiver& q) {
    const Presentation standard = standard_relations(q);
    const AlgebraModel base(standard); // rejects possibly infinite-dimensional input

    CutTheoremReport rep;
    for (const AdmissibleCut& cut : enumerate_admissible_cuts(q)) {
        CutTheoremCase c;
        c.cut = cut;
        const Presentation a = quotient_by_cut(standard, cut);
        const ExtensionResult ext = relation_extension_quiver(a);
        const auto phi = quiver_isomorphic(ext.extended, q);
        c.quiver_matches = phi.has_value();
        if (phi && ext.reconstructed) {
            const auto arrow_map = detail::induced_arrow_map(ext.extended, q, *phi);
            const Presentation transported =
                detail::transport_presentation(*ext.reconstructed, q, arrow_map);
            c.relations_match = presentations_equal(transported, standard);
        }
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

struct SplitExtensionReport {
    Int subalgebra_dimension = 0;
    Int extension_dimension = 0;
    bool identity_on_basis = false;
};

// Realize the inclusion of the quotient algebra into the extension algebra
// and the projection killing the cut arrows, and verify that the composite
// fixes every basis path of the quotient.
inline SplitExtensionReport split_extension_maps(const Presentation& a,
                                                 const AdmissibleCut& cut) {
    const ExtensionResult ext = relation_extension_quiver(a);
    if (!ext.reconstructed)
        throw PreconditionError("split-extension maps need a cyclically oriented extension: " +
                                ext.scope_note);
    const Presentation& ctilde = *ext.reconstructed;
    const Presentation back = quotient_by_cut(ctilde, cut);
    if (!presentations_equal(back, a))
        throw PreconditionError(
            "the presentation is not the quotient of its extension by the given cut");

    const AlgebraModel ma(a), mc(ctilde);
    SplitExtensionReport rep;
    rep.subalgebra_dimension = ma.total_dimension();
    rep.extension_dimension = mc.total_dimension();

    bool ok = true;
    for (const auto& i : a.quiver.vertices())
        for (const auto& j : a.quiver.vertices()) {
            const std::vector<Path> basis_a = ma.basis(i, j);
            const std::vector<Path> basis_c = mc.basis(i, j);
            for (std::size_t n = 0; n < basis_a.size(); ++n) {
                if (basis_a[n].arrows.empty()) continue; // vertices are fixed by both maps
                const RatVec up = mc.reduce(basis_a[n]);
                if (up.size() != basis_c.size())
                    throw CheckError("dimension mismatch between the block bases");
                RatVec down(basis_a.size(), 0);
                for (std::size_t k = 0; k < up.size(); ++k) {
                    if (up[k] == 0) continue;
                    const Path& b = basis_c[k];
                    if (std::any_of(b.arrows.begin(), b.arrows.end(),
                                    [&](const std::string& ar) { return cut.count(ar) != 0; }))
                        continue;
                    const RatVec red = ma.reduce(b);
                    if (red.size() != down.size())
                        throw CheckError("dimension mismatch during verification");
                    for (std::size_t t = 0; t < down.size(); ++t) down[t] += up[k] * red[t];
                }
                for (std::size_t t = 0; t < down.size(); ++t)
                    if (down[t] != (t == n ? 1 : 0)) ok = false;
            }
        }
    rep.identity_on_basis = ok;
    return rep;
}

} // namespace quiverforge

#endif
