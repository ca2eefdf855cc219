#include <catch2/catch_amalgamated.hpp>

#include <quiverforge/quiver.hpp>

using namespace quiverforge;

namespace {

Quiver triangle() {
    Quiver q;
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    q.add_arrow("c", "3", "1");
    return q;
}

} // namespace

TEST_CASE("quiver construction guards") {
    Quiver q;
    q.add_vertex("1");
    CHECK_THROWS_AS(q.add_vertex("1"), InputError);
    CHECK_THROWS_AS(q.add_vertex(""), InputError);
    CHECK_THROWS_AS(q.add_arrow("a", "1", "2"), InputError);
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    CHECK_THROWS_AS(q.add_arrow("a", "2", "1"), InputError);
    CHECK(q.has_arrow("a"));
    CHECK(q.count_arrows("1", "2") == 1);
    CHECK_THROWS_AS(q.vertex_index("9"), PreconditionError);
    CHECK_THROWS_AS(q.arrow_index("z"), PreconditionError);
}

TEST_CASE("validation distinguishes violations from flags") {
    CHECK(validate_cluster_quiver(triangle()).simple());

    Quiver loops;
    loops.add_vertex("1");
    loops.add_arrow("l", "1", "1");
    const auto rep = validate_cluster_quiver(loops);
    CHECK(rep.loops == std::vector<std::string>{"l"});
    CHECK(!rep.ok());

    Quiver two;
    two.add_vertex("1");
    two.add_vertex("2");
    two.add_arrow("a", "1", "2");
    two.add_arrow("b", "2", "1");
    const auto rep2 = validate_cluster_quiver(two);
    CHECK(!rep2.ok());
    REQUIRE(rep2.two_cycles.size() == 1);
    CHECK(rep2.two_cycles[0] == std::pair<std::string, std::string>{"1", "2"});

    // double arrow: flagged but still fine for mutation
    Quiver dbl;
    dbl.add_vertex("1");
    dbl.add_vertex("2");
    dbl.add_arrow("a1", "1", "2");
    dbl.add_arrow("a2", "1", "2");
    const auto rep3 = validate_cluster_quiver(dbl);
    CHECK(rep3.ok());
    CHECK(!rep3.simple());
    REQUIRE(rep3.multiple_arrows.size() == 1);
    CHECK(rep3.multiple_arrows[0].count == 2);
}

TEST_CASE("paths and walks") {
    const Quiver q = triangle();
    const Path p{{"a", "b"}};
    CHECK(is_directed_path(q, p));
    CHECK(path_source(q, p) == "1");
    CHECK(path_target(q, p) == "3");
    CHECK(path_vertices(q, p) == std::vector<std::string>{"1", "2", "3"});
    CHECK(!is_directed_path(q, Path{{"b", "a"}}));
    CHECK(!is_directed_path(q, Path{{}}));

    const Walk w{{{"c", -1}, {"b", -1}}};
    CHECK(walk_vertices(q, w) == std::vector<std::string>{"1", "3", "2"});
    CHECK(walk_vertices(q, Walk{{{"a", 1}, {"b", 1}}}) ==
          std::vector<std::string>{"1", "2", "3"});
    CHECK_THROWS_AS(walk_vertices(q, Walk{{{"a", 1}, {"a", 1}}}), PreconditionError);
    CHECK_THROWS_AS(walk_vertices(q, Walk{{{"a", 3}}}), PreconditionError);
}

TEST_CASE("subquiver surgery") {
    const Quiver q = triangle();
    const Quiver sub = full_subquiver(q, {"1", "2"});
    CHECK(sub.vertices() == std::vector<std::string>{"1", "2"});
    REQUIRE(sub.arrow_count() == 1);
    CHECK(sub.arrows()[0].id == "a");
    CHECK_THROWS_AS(full_subquiver(q, {"9"}), PreconditionError);

    const Quiver del = delete_arrows(q, {"b"});
    CHECK(del.arrow_count() == 2);
    CHECK(del.vertex_count() == 3);
    CHECK_THROWS_AS(delete_arrows(q, {"zz"}), PreconditionError);

    const Quiver killed = kill_vertices(q, {"2"});
    CHECK(killed.vertices() == std::vector<std::string>{"1", "3"});
    REQUIRE(killed.arrow_count() == 1);
    CHECK(killed.arrows()[0].id == "c");
}

TEST_CASE("kill interior vertex of one arm of G(3,2)") {
    const Quiver g = make_G(3, 2);
    const Quiver killed = kill_vertices(g, {"p1"});
    CHECK(killed.vertices() == std::vector<std::string>{"x", "y", "p2", "q1"});
    std::vector<std::string> ids;
    for (const auto& a : killed.arrows()) ids.push_back(a.id);
    CHECK(ids == std::vector<std::string>{"a3", "b1", "b2", "eta"});
}

TEST_CASE("convexity") {
    // path 1 -> 2 -> 3: {1, 3} is not convex, witness 2
    Quiver line;
    for (const char* v : {"1", "2", "3"}) line.add_vertex(v);
    line.add_arrow("a", "1", "2");
    line.add_arrow("b", "2", "3");
    CHECK(is_convex(line, {"1", "2", "3"}));
    CHECK(is_convex(line, {"1", "2"}));
    CHECK(!is_convex(line, {"1", "3"}));
    CHECK(convexity_violation(line, {"1", "3"}) == std::optional<std::string>{"2"});
    CHECK(is_convex(line, {"2"}));
    CHECK(is_convex(line, {}));
}

TEST_CASE("components and acyclicity") {
    Quiver q;
    for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "4", "3");
    const auto comps = connected_components(q);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::string>{"1", "2"});
    CHECK(comps[1] == std::vector<std::string>{"3", "4"});
    CHECK(!is_connected(q));
    CHECK(is_connected(triangle()));
    CHECK(is_acyclic(q));
    CHECK(!is_acyclic(triangle()));
    CHECK(is_connected(Quiver{}));
}

TEST_CASE("bypass detection") {
    CHECK(!find_bypass(triangle()).has_value());

    Quiver q;
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("long1", "1", "2");
    q.add_arrow("long2", "2", "3");
    q.add_arrow("shortcut", "1", "3");
    const auto w = find_bypass(q);
    REQUIRE(w.has_value());
    CHECK(w->arrow == "shortcut");
    CHECK(w->path.arrows == std::vector<std::string>{"long1", "long2"});

    // a parallel arrow alone is not a bypass
    Quiver dbl;
    dbl.add_vertex("1");
    dbl.add_vertex("2");
    dbl.add_arrow("a1", "1", "2");
    dbl.add_arrow("a2", "1", "2");
    CHECK(!find_bypass(dbl).has_value());
}

TEST_CASE("cycle and G-shape builders") {
    const Quiver c4 = make_cycle(4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.arrow_count() == 4);
    CHECK(c4.arrow("a4").from == "4");
    CHECK(c4.arrow("a4").to == "1");
    CHECK_THROWS_AS(make_cycle(2), PreconditionError);

    const Quiver g = make_G(3, 2);
    CHECK(g.vertex_count() == 5);
    CHECK(g.arrow_count() == 6);
    CHECK(g.arrow("a1").from == "x");
    CHECK(g.arrow("a3").to == "y");
    CHECK(g.arrow("b2").to == "y");
    CHECK(g.arrow("eta").from == "y");
    CHECK(g.arrow("eta").to == "x");
    CHECK_THROWS_AS(make_G(1, 2), PreconditionError);
}
