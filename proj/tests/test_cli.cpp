#include <catch2/catch_amalgamated.hpp>

#include <quiverforge/cli_app.hpp>
#include <quiverforge/fixtures.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace quiverforge;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
    Json error_json() const { return Json::parse(err); }
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("cli output is deterministic across reruns") {
    const std::vector<std::vector<std::string>> calls = {
        {"relations", "--fixture", "G22"},
        {"classify", "--fixture", "example13-C"},
        {"cuts", "--fixture", "C4", "--enumerate"},
        {"fixtures"},
        {"dot", "--fixture", "D4"},
    };
    for (const auto& args : calls) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
        CHECK(a.out.back() == '\n');
    }
}

TEST_CASE("cyclic-check reports orientation with a witness on failure") {
    const CliResult yes = run({"cyclic-check", "--fixture", "G22"});
    REQUIRE(yes.code == 0);
    CHECK(yes.json()["cyclically_oriented"] == true);
    CHECK(yes.json()["witness"].is_null());

    // the shared extension quiver of the example13 pair has a non-oriented triangle
    const Quiver kite = relation_extension_quiver(fixture("example13-B").presentation).extended;
    const CliResult no = run({"cyclic-check", "--input", "-"}, quiver_to_json(kite).dump());
    REQUIRE(no.code == 0);
    CHECK(no.json()["cyclically_oriented"] == false);
    const Json witness = no.json()["witness"];
    REQUIRE(witness.is_object());
    CHECK(witness["oriented"] == false);
    CHECK(witness["chordless"] == true);
    CHECK(witness["vertices"].size() == 3);
}

TEST_CASE("check-theorem round-trips every cut of a five-cycle") {
    const CliResult r = run({"check-theorem", "--fixture", "C5"});
    REQUIRE(r.code == 0);
    const Json doc = r.json();
    CHECK(doc["all_pass"] == true);
    REQUIRE(doc["cases"].size() == 5);
    for (const Json& c : doc["cases"]) {
        CHECK(c["pass"] == true);
        CHECK(c["quiver_matches"] == true);
        CHECK(c["relations_match"] == true);
        CHECK(c["cut"].size() == 1);
    }
}

TEST_CASE("mutation at the middle vertex of the double arrow creates five parallel arrows") {
    const CliResult r = run({"mutate", "--fixture", "double-arrow", "--vertex", "2"});
    REQUIRE(r.code == 0);
    const Json doc = r.json();
    int one_to_three = 0;
    for (const Json& a : doc["arrows"])
        if (a["from"] == "1" && a["to"] == "3") ++one_to_three;
    CHECK(one_to_three == 5);
    CHECK(doc["arrows"].size() == 9);
}

TEST_CASE("fixtures lists the whole catalog with inline values") {
    const CliResult r = run({"fixtures"});
    REQUIRE(r.code == 0);
    const Json doc = r.json();
    REQUIRE(doc["fixtures"].size() == fixture_catalog().size());
    bool saw_b = false, saw_c3 = false;
    for (const Json& f : doc["fixtures"]) {
        if (f["name"] == "example13-B") {
            saw_b = true;
            CHECK(f["kind"] == "presentation");
            const Json rel = f["value"]["relations"][0];
            CHECK(rel["terms"][0]["path"] == Json::array({"phi", "gamma"}));
        }
        if (f["name"] == "C3") {
            saw_c3 = true;
            CHECK(f["kind"] == "quiver");
            CHECK(f["value"] == quiver_to_json(make_cycle(3)));
        }
    }
    CHECK(saw_b);
    CHECK(saw_c3);
}

TEST_CASE("cuts subcommand enumerates, picks, and verifies quotients") {
    const CliResult all = run({"cuts", "--fixture", "G22", "--enumerate"});
    REQUIRE(all.code == 0);
    CHECK(all.json()["cuts"].size() == 5);

    const CliResult one = run({"cuts", "--fixture", "G22", "--containing", "a1"});
    REQUIRE(one.code == 0);
    const Json cut = one.json()["cut"];
    CHECK(std::find(cut.begin(), cut.end(), Json("a1")) != cut.end());

    const CliResult q = run({"cuts", "--fixture", "G22", "--quotient", "eta"});
    REQUIRE(q.code == 0);
    CHECK(q.json()["report"]["ok"] == true);
    CHECK(q.json()["report"]["acyclic"] == true);
    // only the relation antiparallel to the cut arrow survives: the square commutes
    CHECK(q.json()["presentation"]["relations"].size() == 1);
    CHECK(q.json()["presentation"]["relations"][0]["terms"].size() == 2);

    const CliResult bad = run({"cuts", "--fixture", "G22", "--quotient", "a1,a2"});
    CHECK(bad.code == 2);
    CHECK(bad.error_json()["error"] == "precondition");
}

TEST_CASE("classify reports the frozen invariants of the example13 pair") {
    const CliResult c = run({"classify", "--fixture", "example13-C"});
    REQUIRE(c.code == 0);
    CHECK(c.json()["definiteness"] == "positive_definite");
    CHECK(c.json()["type"] == "D4");
    CHECK(c.json()["roots"] == 24);
    CHECK(c.json()["coxeter_polynomial"] == Json::array({1, 0, 2, 0, 1}));

    const CliResult b = run({"classify", "--fixture", "example13-B"});
    REQUIRE(b.code == 0);
    CHECK(b.json()["definiteness"] == "positive_semidefinite");
    CHECK(b.json()["corank"] == 1);
    CHECK(b.json()["type"] == "none");
    CHECK(b.json()["diagnostic"] == "corank-one radical vector is not strictly positive");
    CHECK(b.json()["coxeter_polynomial"] == Json::array({1, -1, 0, -1, 1}));
}

TEST_CASE("stdin, file, and fixture inputs are interchangeable") {
    const std::string doc = quiver_to_json(make_G(2, 2)).dump();
    const CliResult from_stdin = run({"validate", "--input", "-"}, doc);
    REQUIRE(from_stdin.code == 0);
    CHECK(from_stdin.json()["ok"] == true);
    CHECK(from_stdin.json()["simple"] == true);

    const std::string path = "/tmp/quiverforge_cli_test_quiver.json";
    {
        std::ofstream f(path);
        f << doc;
    }
    const CliResult from_file = run({"validate", "--input", path});
    REQUIRE(from_file.code == 0);
    CHECK(from_file.out == from_stdin.out);

    const CliResult from_fixture = run({"validate", "--fixture", "G22"});
    REQUIRE(from_fixture.code == 0);
    CHECK(from_fixture.out == from_stdin.out);
}

TEST_CASE("dot output is a well-formed digraph") {
    const CliResult r = run({"dot", "--fixture", "C3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("digraph quiver {", 0) == 0);
    CHECK(r.out.find("\"1\" -> \"2\" [label=\"a1\"];") != std::string::npos);
    CHECK(r.out.find("\"3\" -> \"1\" [label=\"a3\"];") != std::string::npos);

    const CliResult m = run({"mutate", "--fixture", "C3", "--vertex", "2", "--format", "dot"});
    REQUIRE(m.code == 0);
    CHECK(m.out.rfind("digraph quiver {", 0) == 0);
}

TEST_CASE("malformed invocations and inputs exit with code 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({"cyclic-check"}).code == 1);                                    // no input at all
    CHECK(run({"cyclic-check", "--fixture", "nope"}).code == 1);               // unknown fixture
    CHECK(run({"cyclic-check", "--fixture", "C3", "--input", "-"}).code == 1); // both sources
    CHECK(run({"cyclic-check", "--input", "/no/such/file.json"}).code == 1);
    CHECK(run({"cyclic-check", "--input", "-"}, "{not json").code == 1);
    CHECK(run({"mutate", "--fixture", "C3"}).code == 1);                       // --vertex required
    CHECK(run({"mutate", "--fixture", "C3", "--vertex", "9"}).code == 1);      // unknown vertex
    CHECK(run({"classify", "--fixture", "A3", "--format", "dot"}).code == 1);  // non-quiver output
    CHECK(run({"cuts", "--fixture", "G22", "--quotient", "zz"}).code == 1);    // unknown arrow
    CHECK(run({"relations", "--fixture", "G22", "--bogus"}).code == 1);

    const CliResult r = run({"cyclic-check", "--input", "-"}, "{not json");
    CHECK(r.out.empty());
    CHECK(r.error_json()["error"] == "input");
    CHECK(r.error_json()["detail"].is_string());
}

TEST_CASE("out-of-scope but well-formed requests exit with code 2") {
    // a bare cyclic quiver has no admissible presentation to classify
    const CliResult cyc = run({"classify", "--fixture", "C3"});
    CHECK(cyc.code == 2);
    CHECK(cyc.error_json()["error"] == "precondition");

    // relation extension requires an acyclic source
    const CliResult ext = run({"extend", "--input", "-"}, quiver_to_json(make_cycle(3)).dump());
    CHECK(ext.code == 2);

    // standard relations need a simple quiver
    const CliResult rel = run({"relations", "--fixture", "double-arrow"});
    CHECK(rel.code == 2);
}

TEST_CASE("the path length cap from the environment is honored and validated") {
    REQUIRE(setenv("QUIVERFORGE_MAX_PATH_LEN", "1", 1) == 0);
    const CliResult capped = run({"check-theorem", "--fixture", "C3"});
    CHECK(capped.code == 2);

    REQUIRE(setenv("QUIVERFORGE_MAX_PATH_LEN", "banana", 1) == 0);
    const CliResult junk = run({"check-theorem", "--fixture", "C3"});
    CHECK(junk.code == 1);
    CHECK(junk.error_json()["error"] == "input");

    REQUIRE(unsetenv("QUIVERFORGE_MAX_PATH_LEN") == 0);
    const CliResult clear = run({"check-theorem", "--fixture", "C3"});
    CHECK(clear.code == 0);
    CHECK(clear.json()["all_pass"] == true);
}

TEST_CASE("help requests succeed") {
    const CliResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("validate") != std::string::npos);
    CHECK(top.out.find("classify") != std::string::npos);

    const CliResult sub = run({"cuts", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--quotient") != std::string::npos);
}
