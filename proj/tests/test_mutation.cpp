#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <quiverforge/isomorphism.hpp>
#include <quiverforge/mutation.hpp>
#include <quiverforge/quiver.hpp>

using namespace quiverforge;

namespace {

Quiver double_arrow_quiver() {
    Quiver q;
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("alpha1", "1", "2");
    q.add_arrow("alpha2", "1", "2");
    q.add_arrow("beta1", "2", "3");
    q.add_arrow("beta2", "2", "3");
    q.add_arrow("gamma1", "1", "3");
    return q;
}

// Matrix mutation of the signed adjacency matrix: the arrow-level operation
// must transport to it exactly.
std::vector<std::vector<int>> matrix_mutate(std::vector<std::vector<int>> b, std::size_t k) {
    const std::size_t n = b.size();
    std::vector<std::vector<int>> out = b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k)
                out[i][j] = -b[i][j];
            else
                out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
        }
    return out;
}

void check_against_matrix_oracle(const Quiver& q) {
    for (const auto& v : q.vertices()) {
        const Quiver m = mutate(q, v);
        CHECK(signed_adjacency(m) ==
              matrix_mutate(signed_adjacency(q), static_cast<std::size_t>(q.vertex_index(v))));
        // involution at the matrix level
        CHECK(signed_adjacency(mutate(m, v)) == signed_adjacency(q));
    }
}

} // namespace

TEST_CASE("mutation agrees with matrix mutation") {
    check_against_matrix_oracle(make_cycle(3));
    check_against_matrix_oracle(make_cycle(4));
    check_against_matrix_oracle(make_G(2, 2));
    check_against_matrix_oracle(make_G(3, 2));
    check_against_matrix_oracle(double_arrow_quiver());

    Quiver line;
    for (const char* v : {"1", "2", "3"}) line.add_vertex(v);
    line.add_arrow("a", "1", "2");
    line.add_arrow("b", "2", "3");
    check_against_matrix_oracle(line);
}

TEST_CASE("mutating the double-arrow quiver at 2 creates five parallel arrows") {
    const Quiver m = mutate(double_arrow_quiver(), "2");
    CHECK(m.arrow_count() == 9);
    CHECK(m.count_arrows("1", "3") == 5);
    CHECK(m.count_arrows("2", "1") == 2);
    CHECK(m.count_arrows("3", "2") == 2);
    CHECK(m.has_arrow("alpha1*"));
    CHECK(m.has_arrow("beta2*"));
    CHECK(m.has_arrow("m2_1_3_1"));
    CHECK(m.has_arrow("m2_1_3_4"));
    CHECK(m.has_arrow("gamma1"));
}

TEST_CASE("mutation of an oriented triangle cancels the composite") {
    const Quiver m = mutate(make_cycle(3), "1");
    CHECK(m.arrow_count() == 2);
    CHECK(m.count_arrows("1", "3") == 1);
    CHECK(m.count_arrows("2", "1") == 1);
    CHECK(is_acyclic(m));

    const Quiver m2 = mutate(make_cycle(3), "2");
    CHECK(m2.arrow_count() == 2);
    CHECK(m2.count_arrows("2", "1") == 1);
    CHECK(m2.count_arrows("3", "2") == 1);
}

TEST_CASE("mutation preconditions") {
    Quiver loop;
    loop.add_vertex("1");
    loop.add_arrow("l", "1", "1");
    CHECK_THROWS_AS(mutate(loop, "1"), PreconditionError);

    Quiver two;
    two.add_vertex("1");
    two.add_vertex("2");
    two.add_arrow("a", "1", "2");
    two.add_arrow("b", "2", "1");
    CHECK_THROWS_AS(mutate(two, "1"), PreconditionError);

    CHECK_THROWS_AS(mutate(make_cycle(3), "9"), PreconditionError);
}

TEST_CASE("mutate_step keeps before and after") {
    const auto step = mutate_step(make_cycle(3), "1");
    CHECK(step.vertex == "1");
    CHECK(step.before == make_cycle(3));
    CHECK(step.after == mutate(make_cycle(3), "1"));
}

TEST_CASE("quiver isomorphism") {
    // relabelled oriented triangle
    Quiver t2;
    for (const char* v : {"u", "v", "w"}) t2.add_vertex(v);
    t2.add_arrow("x", "v", "w");
    t2.add_arrow("y", "w", "u");
    t2.add_arrow("z", "u", "v");
    const auto phi = quiver_isomorphic(make_cycle(3), t2);
    REQUIRE(phi.has_value());
    // transported arrow counts must match
    const Quiver c3 = make_cycle(3);
    for (const auto& a : c3.arrows())
        CHECK(t2.count_arrows(phi->at(a.from), phi->at(a.to)) == c3.count_arrows(a.from, a.to));

    CHECK(!quiver_isomorphic(make_cycle(3), make_cycle(4)).has_value());

    // same degree counts, different direction structure
    Quiver p1;
    for (const char* v : {"1", "2", "3"}) p1.add_vertex(v);
    p1.add_arrow("a", "1", "2");
    p1.add_arrow("b", "2", "3");
    Quiver p2;
    for (const char* v : {"1", "2", "3"}) p2.add_vertex(v);
    p2.add_arrow("a", "1", "2");
    p2.add_arrow("b", "3", "2");
    CHECK(!quiver_isomorphic(p1, p2).has_value());

    Quiver big1, big2;
    for (int i = 0; i < 13; ++i) {
        big1.add_vertex(std::to_string(i));
        big2.add_vertex(std::to_string(i));
    }
    CHECK_THROWS_AS(quiver_isomorphic(big1, big2), PreconditionError);
}
