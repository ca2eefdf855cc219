#include <catch2/catch_amalgamated.hpp>

#include <quiverforge/cuts.hpp>
#include <quiverforge/path_space.hpp>
#include <quiverforge/presentation.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace quiverforge;

namespace {

// reference enumeration: try every subset of arrows against the definition
std::vector<AdmissibleCut> all_cuts_by_subset(const Quiver& q) {
    const auto& arrows = q.arrows();
    std::vector<AdmissibleCut> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << arrows.size()); ++mask) {
        AdmissibleCut cut;
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (mask & (std::size_t(1) << i)) cut.insert(arrows[i].id);
        if (is_admissible_cut(q, cut)) out.push_back(cut);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Quiver double_arrow_quiver() {
    Quiver q;
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("alpha1", "1", "2");
    q.add_arrow("alpha2", "1", "2");
    q.add_arrow("beta1", "2", "3");
    q.add_arrow("beta2", "2", "3");
    q.add_arrow("gamma1", "3", "1");
    return q;
}

Quiver pendant_triangle() {
    Quiver q = make_cycle(3);
    q.add_vertex("4");
    q.add_arrow("z", "1", "4");
    return q;
}

} // namespace

TEST_CASE("admissibility definition") {
    const Quiver q = make_cycle(3);
    CHECK(is_admissible_cut(q, {"a1"}));
    CHECK(is_admissible_cut(q, {"a2"}));
    CHECK_FALSE(is_admissible_cut(q, {}));
    CHECK_FALSE(is_admissible_cut(q, {"a1", "a2"}));
    CHECK(cut_violation(q, {"a1", "a2"}).value().find("2 cut arrows") != std::string::npos);
    CHECK_THROWS_AS(is_admissible_cut(q, {"zz"}), InputError);

    const Quiver g = make_G(3, 2);
    CHECK(is_admissible_cut(g, {"eta"}));
    CHECK(is_admissible_cut(g, {"a1", "b2"}));
    CHECK_FALSE(is_admissible_cut(g, {"eta", "a1"}));
    CHECK(cut_violation(g, {"a1"}).value().find("0 cut arrows") != std::string::npos);

    // arrows off every oriented chordless cycle may not appear
    const Quiver t = pendant_triangle();
    CHECK(is_admissible_cut(t, {"a1"}));
    CHECK(cut_violation(t, {"a1", "z"}).value().find("no oriented chordless cycle") !=
          std::string::npos);
}

TEST_CASE("acyclic quivers admit exactly the empty cut") {
    Quiver q;
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    CHECK(is_admissible_cut(q, {}));
    CHECK(enumerate_admissible_cuts(q) == std::vector<AdmissibleCut>{{}});
}

TEST_CASE("cut enumeration matches the subset oracle") {
    for (int n = 3; n <= 5; ++n) {
        const Quiver q = make_cycle(n);
        const auto cuts = enumerate_admissible_cuts(q);
        CHECK(cuts == all_cuts_by_subset(q));
        CHECK(cuts.size() == static_cast<std::size_t>(n));
    }
    for (const Quiver& q : {make_G(2, 2), make_G(3, 2), make_G(3, 3), pendant_triangle()}) {
        CHECK(enumerate_admissible_cuts(q) == all_cuts_by_subset(q));
    }
}

TEST_CASE("cut counts of the glued-arm quivers") {
    // G(m, n) has the shared return arrow or one free pick per arm
    CHECK(enumerate_admissible_cuts(make_G(2, 2)).size() == 5);
    CHECK(enumerate_admissible_cuts(make_G(3, 2)).size() == 7);
    CHECK(enumerate_admissible_cuts(make_G(3, 3)).size() == 10);

    // the pendant arrow never appears in a cut
    const auto cuts = enumerate_admissible_cuts(pendant_triangle());
    CHECK(cuts == std::vector<AdmissibleCut>{{"a1"}, {"a2"}, {"a3"}});
}

TEST_CASE("cycle analysis limits carry over to cuts") {
    CHECK_THROWS_AS(enumerate_admissible_cuts(double_arrow_quiver()), PreconditionError);
    CHECK_THROWS_AS(is_admissible_cut(double_arrow_quiver(), {"gamma1"}), PreconditionError);
}

TEST_CASE("cut enumeration needs a cyclically oriented quiver") {
    Quiver q; // non-oriented triangle
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "1", "3");
    q.add_arrow("c", "3", "2");
    CHECK_THROWS_AS(enumerate_admissible_cuts(q), PreconditionError);
    CHECK_THROWS_AS(cut_containing(q, "a"), PreconditionError);
}

TEST_CASE("a cut through every prescribed arrow") {
    for (const Quiver& q :
         {make_cycle(3), make_cycle(5), make_G(2, 2), make_G(3, 2), make_G(3, 3),
          pendant_triangle()}) {
        const auto all = enumerate_admissible_cuts(q);
        std::set<std::string> cyclic;
        for (const auto& a : cyclic_arrows(q)) cyclic.insert(a);
        for (const auto& a : q.arrows()) {
            if (!cyclic.count(a.id)) continue;
            const AdmissibleCut cut = cut_containing(q, a.id);
            CHECK(cut.count(a.id) == 1);
            CHECK(std::find(all.begin(), all.end(), cut) != all.end());
        }
    }
}

TEST_CASE("cut through chosen arrows of the basic quivers") {
    CHECK(cut_containing(make_cycle(4), "a2") == AdmissibleCut{"a2"});
    CHECK(cut_containing(make_G(2, 2), "eta") == AdmissibleCut{"eta"});
    const AdmissibleCut arm = cut_containing(make_G(2, 2), "a1");
    CHECK(arm.size() == 2);
    CHECK(arm.count("a1") == 1);
    CHECK((arm.count("b1") + arm.count("b2")) == 1);
}

TEST_CASE("cut through an arrow off all cycles is rejected") {
    CHECK_THROWS_AS(cut_containing(pendant_triangle(), "z"), PreconditionError);
    CHECK_THROWS_AS(cut_containing(make_cycle(3), "zz"), InputError);
}

TEST_CASE("quotient of a cycle by one arrow") {
    Presentation p = standard_relations(make_cycle(3));
    const Presentation a = quotient_by_cut(p, {"a3"});
    CHECK(a.quiver.arrow_count() == 2);
    CHECK(is_acyclic(a.quiver));
    REQUIRE(a.relations.size() == 1);
    REQUIRE(a.relations[0].terms.size() == 1);
    CHECK(a.relations[0].terms[0].path == Path{{"a1", "a2"}});
    CHECK_FALSE(a.relations[0].antiparallel_arrow.has_value());
    validate_presentation(a);

    CHECK_THROWS_AS(quotient_by_cut(p, {"a1", "a2"}), PreconditionError);
    Presentation wrong = p;
    wrong.relations.pop_back();
    CHECK_THROWS_AS(quotient_by_cut(wrong, {"a3"}), PreconditionError);
}

TEST_CASE("quotient of the two-arm quiver by the return arrow") {
    const Presentation p = standard_relations(make_G(2, 2));
    const Presentation a = quotient_by_cut(p, {"eta"});
    CHECK(a.quiver.arrow_count() == 4);
    REQUIRE(a.relations.size() == 1);
    CHECK(a.relations[0].terms.size() == 2); // the commuting square survives
    const Presentation b = quotient_by_cut(p, {"a1", "b2"});
    CHECK(b.relations.size() == 2); // one surviving zero relation per arm arrow
    for (const auto& r : b.relations) CHECK(r.terms.size() == 1);
}

TEST_CASE("every cut quotient is acyclic, bypass-free, and homology-trivial") {
    for (const Quiver& q :
         {make_cycle(3), make_cycle(4), make_cycle(5), make_G(2, 2), make_G(3, 2)}) {
        const Presentation p = standard_relations(q);
        for (const AdmissibleCut& cut : enumerate_admissible_cuts(q)) {
            const Presentation a = quotient_by_cut(p, cut);
            const CutQuotientReport rep = verify_cut_quotient(a);
            CHECK(rep.acyclic);
            CHECK_FALSE(rep.bypass.has_value());
            CHECK(rep.homology_trivial_on_convex);
            REQUIRE(rep.gldim.has_value());
            CHECK(*rep.gldim >= 2);
            CHECK(*rep.gldim <= 3);
        }
    }
}

TEST_CASE("global dimension of quotients depends on the cut") {
    // single-relation quotients of cycles resolve in two steps
    for (int n = 3; n <= 5; ++n) {
        const Presentation p = standard_relations(make_cycle(n));
        for (const AdmissibleCut& cut : enumerate_admissible_cuts(make_cycle(n)))
            CHECK(verify_cut_quotient(quotient_by_cut(p, cut)).gldim == 2);
    }

    // the two-arm quiver: cutting both arms at the same end keeps dimension 2,
    // cutting at opposite ends chains the two zero relations head-to-tail
    // (…a2·eta = 0 and eta·b1 = 0…) and pushes one simple out to three steps
    const Presentation g = standard_relations(make_G(2, 2));
    auto gldim_of = [&](const AdmissibleCut& cut) {
        return verify_cut_quotient(quotient_by_cut(g, cut)).gldim;
    };
    CHECK(gldim_of({"eta"}) == 2);
    CHECK(gldim_of({"a1", "b1"}) == 2);
    CHECK(gldim_of({"a2", "b2"}) == 2);
    CHECK(gldim_of({"a1", "b2"}) == 3);
    CHECK(gldim_of({"a2", "b1"}) == 3);
    CHECK(verify_cut_quotient(quotient_by_cut(g, {"eta"})).ok());
    CHECK_FALSE(verify_cut_quotient(quotient_by_cut(g, {"a1", "b2"})).ok());
}

TEST_CASE("the structural checks can fail") {
    // a bypass: direct arrow next to a length-two detour, no relations
    Presentation bypass;
    for (const char* v : {"1", "2", "3"}) bypass.quiver.add_vertex(v);
    bypass.quiver.add_arrow("a", "1", "2");
    bypass.quiver.add_arrow("b", "2", "3");
    bypass.quiver.add_arrow("s", "1", "3");
    const CutQuotientReport rep = verify_cut_quotient(bypass);
    CHECK(rep.acyclic);
    CHECK(rep.bypass.has_value());
    CHECK(rep.bypass->arrow == "s");
    CHECK_FALSE(rep.homology_trivial_on_convex); // the triangle is convex here
    CHECK(rep.homology_witness.has_value());
    CHECK_FALSE(rep.ok());

    // a cyclic input
    Presentation cyc = standard_relations(make_cycle(3));
    const CutQuotientReport crep = verify_cut_quotient(cyc);
    CHECK_FALSE(crep.acyclic);
    CHECK_FALSE(crep.ok());
}
