#include <catch2/catch_amalgamated.hpp>

#include <quiverforge/fixtures.hpp>
#include <quiverforge/json_io.hpp>

#include <string>
#include <vector>

using namespace quiverforge;

TEST_CASE("every fixture round-trips through serialization unchanged") {
    for (const Fixture& f : fixture_catalog()) {
        INFO(f.name);
        if (f.quiver_only) {
            const Json doc = quiver_to_json(f.quiver());
            CHECK(quiver_from_json(doc) == f.quiver());
            CHECK(quiver_to_json(quiver_from_json(doc)).dump(2) == doc.dump(2));
        } else {
            const Json doc = presentation_to_json(f.presentation);
            const Presentation back = presentation_from_json(doc);
            CHECK(back.quiver == f.presentation.quiver);
            CHECK(back.relations == f.presentation.relations);
            CHECK(presentation_to_json(back).dump(2) == doc.dump(2));
        }
    }
}

TEST_CASE("rational literals round-trip and reject junk") {
    for (const char* text : {"0", "7", "-3", "5/3", "-5/3", "12345678901234567890/7"}) {
        INFO(text);
        CHECK(format_rational(parse_rational(text)) == text);
    }
    CHECK(format_rational(parse_rational("4/6")) == "2/3");
    CHECK(format_rational(parse_rational("3/-6")) == "-1/2");
    CHECK(format_rational(parse_rational("+4")) == "4");

    for (const char* text : {"", "a", "1.5", "--2", "1/", "/2", "1/0", "1 / 2", "0x3"}) {
        INFO(text);
        CHECK_THROWS_AS(parse_rational(text), InputError);
    }
}

TEST_CASE("a plain quiver document reads as a relation-free presentation") {
    const Json doc = quiver_to_json(make_cycle(3));
    const Presentation p = presentation_from_json(doc);
    CHECK(p.quiver == make_cycle(3));
    CHECK(p.relations.empty());
}

TEST_CASE("relation tags and term order survive the round trip") {
    const Presentation p = standard_relations(make_G(2, 2));
    const Presentation back = presentation_from_json(presentation_to_json(p));
    REQUIRE(back.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        CHECK(back.relations[i].antiparallel_arrow == p.relations[i].antiparallel_arrow);
        CHECK(back.relations[i].terms == p.relations[i].terms);
    }
}

TEST_CASE("malformed documents raise input errors with field context") {
    auto parse_quiver = [](const std::string& text) {
        return quiver_from_json(detail::parse_json_text(text));
    };
    auto parse_pres = [](const std::string& text) {
        return presentation_from_json(detail::parse_json_text(text));
    };

    CHECK_THROWS_AS(detail::parse_json_text("{"), InputError);
    CHECK_THROWS_AS(detail::parse_json_text(""), InputError);
    CHECK_THROWS_AS(parse_quiver("[]"), InputError);
    CHECK_THROWS_AS(parse_quiver("{\"arrows\": []}"), InputError);
    CHECK_THROWS_AS(parse_quiver("{\"vertices\": \"1\", \"arrows\": []}"), InputError);
    CHECK_THROWS_AS(parse_quiver("{\"vertices\": [1], \"arrows\": []}"), InputError);
    CHECK_THROWS_AS(parse_quiver("{\"vertices\": [\"1\"], \"arrows\": [{}]}"), InputError);
    CHECK_THROWS_AS(
        parse_quiver("{\"vertices\": [\"1\", \"1\"], \"arrows\": []}"), InputError);
    CHECK_THROWS_AS(parse_quiver("{\"vertices\": [\"1\"], \"arrows\": "
                                 "[{\"id\": \"a\", \"from\": \"1\", \"to\": \"9\"}]}"),
                    InputError);

    const std::string quiver_part =
        "\"vertices\": [\"1\", \"2\", \"3\"], \"arrows\": ["
        "{\"id\": \"a\", \"from\": \"1\", \"to\": \"2\"},"
        "{\"id\": \"b\", \"from\": \"2\", \"to\": \"3\"}]";
    CHECK_THROWS_AS(parse_pres("{" + quiver_part + ", \"relations\": [{}]}"), InputError);
    CHECK_THROWS_AS(parse_pres("{" + quiver_part +
                               ", \"relations\": [{\"terms\": [{\"coeff\": \"x\", "
                               "\"path\": [\"a\", \"b\"]}]}]}"),
                    InputError);
    CHECK_THROWS_AS(parse_pres("{" + quiver_part +
                               ", \"relations\": [{\"terms\": [{\"coeff\": \"0\", "
                               "\"path\": [\"a\", \"b\"]}]}]}"),
                    InputError);
    CHECK_THROWS_AS(parse_pres("{" + quiver_part +
                               ", \"relations\": [{\"terms\": [{\"coeff\": \"1\", "
                               "\"path\": [\"b\", \"a\"]}]}]}"),
                    InputError);

    // well-formed control sample for the shape above
    const Presentation ok = parse_pres(
        "{" + quiver_part +
        ", \"relations\": [{\"terms\": [{\"coeff\": \"1\", \"path\": [\"a\", \"b\"]}]}]}");
    CHECK(ok.relations.size() == 1);
}
