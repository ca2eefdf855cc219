#ifndef QUIVERFORGE_CLI_APP_HPP
#define QUIVERFORGE_CLI_APP_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <quiverforge/cuts.hpp>
#include <quiverforge/cycles.hpp>
#include <quiverforge/dot.hpp>
#include <quiverforge/errors.hpp>
#include <quiverforge/extension.hpp>
#include <quiverforge/fixtures.hpp>
#include <quiverforge/forms.hpp>
#include <quiverforge/json_io.hpp>
#include <quiverforge/mutation.hpp>
#include <quiverforge/normalize.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

namespace cli {

inline Json cycle_to_json(const Cycle& c) {
    Json walk = Json::array();
    for (const Step& s : c.walk.steps)
        walk.push_back({{"arrow", s.arrow}, {"forward", s.sign == 1}});
    return {{"vertices", c.vertex_seq},
            {"walk", walk},
            {"oriented", c.oriented},
            {"chordless", c.chordless}};
}

inline Json cut_to_json(const AdmissibleCut& cut) {
    return Json(std::vector<std::string>(cut.begin(), cut.end()));
}

inline Json validation_to_json(const ValidationReport& rep) {
    Json two_cycles = Json::array();
    for (const auto& [a, b] : rep.two_cycles) two_cycles.push_back({a, b});
    Json multi = Json::array();
    for (const auto& m : rep.multiple_arrows)
        multi.push_back({{"from", m.from}, {"to", m.to}, {"count", m.count}});
    return {{"loops", rep.loops},
            {"two_cycles", two_cycles},
            {"multiple_arrows", multi},
            {"ok", rep.ok()},
            {"simple", rep.simple()}};
}

inline Json extension_to_json(const ExtensionResult& ext) {
    Json doc{{"extended", quiver_to_json(ext.extended)},
             {"new_arrows", ext.new_arrows},
             {"in_scope", ext.in_theorem_scope()}};
    doc["reconstructed"] =
        ext.reconstructed ? presentation_to_json(*ext.reconstructed) : Json(nullptr);
    doc["scope_note"] = ext.scope_note;
    doc["scope_witness"] = ext.scope_witness ? cycle_to_json(*ext.scope_witness) : Json(nullptr);
    return doc;
}

inline Json theorem_report_to_json(const CutTheoremReport& rep) {
    Json cases = Json::array();
    for (const CutTheoremCase& c : rep.cases)
        cases.push_back({{"cut", cut_to_json(c.cut)},
                         {"quiver_matches", c.quiver_matches},
                         {"relations_match", c.relations_match},
                         {"pass", c.pass()}});
    return {{"cases", cases}, {"all_pass", rep.all_pass()}};
}

inline Json quotient_report_to_json(const CutQuotientReport& rep) {
    Json doc{{"acyclic", rep.acyclic},
             {"homology_trivial_on_convex", rep.homology_trivial_on_convex},
             {"gldim_cap", rep.gldim_cap},
             {"ok", rep.ok()}};
    doc["bypass"] = rep.bypass ? Json{{"arrow", rep.bypass->arrow},
                                      {"path", rep.bypass->path.arrows}}
                               : Json(nullptr);
    doc["homology_witness"] = rep.homology_witness ? Json(*rep.homology_witness) : Json(nullptr);
    doc["gldim"] = rep.gldim ? Json(*rep.gldim) : Json(nullptr);
    return doc;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (const IntVec& r : m) {
        Json row = Json::array();
        for (const Int& v : r) row.push_back(v.convert_to<long long>());
        rows.push_back(row);
    }
    return rows;
}

inline Json classify_to_json(const Presentation& p) {
    const SymmetricForm f = euler_symmetrized(p);
    const char* definiteness = f.classification == FormClass::positive_definite
                                   ? "positive_definite"
                                   : f.classification == FormClass::positive_semidefinite
                                         ? "positive_semidefinite"
                                         : "indefinite";
    Json doc{{"cartan", int_matrix_to_json(cartan_matrix(p))},
             {"definiteness", definiteness},
             {"corank", f.corank}};

    bool unit = true;
    for (std::size_t i = 0; i < f.matrix.size(); ++i)
        if (f.matrix[i][i] != 2) unit = false;
    doc["roots"] =
        f.positive_definite() && unit ? Json(count_roots(f)) : Json(nullptr);

    TypeLabel label;
    if (is_acyclic(p.quiver)) {
        label = classify_type(p);
    } else {
        label.diagnostic = "type classification requires an acyclic quiver";
    }
    doc["type"] = label.name();
    if (!label.diagnostic.empty()) doc["diagnostic"] = label.diagnostic;

    Json cox = Json::array();
    for (const Int& c : coxeter_polynomial(p)) cox.push_back(c.convert_to<long long>());
    doc["coxeter_polynomial"] = cox;
    return doc;
}

struct Options {
    std::string input;
    std::string fixture;
    std::string format = "json";
    std::string vertex;
    std::string containing;
    std::string quotient;
    bool enumerate = false;
    bool quotient_given = false;
};

inline Json load_document(const Options& opt, std::istream& in) {
    if (!opt.fixture.empty() && !opt.input.empty())
        throw InputError("give either --input or --fixture, not both");
    if (!opt.fixture.empty()) {
        const Fixture& f = fixture(opt.fixture);
        return f.quiver_only ? quiver_to_json(f.quiver()) : presentation_to_json(f.presentation);
    }
    if (opt.input.empty()) throw InputError("no input: use --input <path|-> or --fixture <name>");
    if (opt.input == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return detail::parse_json_text(buf.str());
    }
    std::ifstream file(opt.input);
    if (!file) throw InputError("cannot read input file '" + opt.input + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return detail::parse_json_text(buf.str());
}

inline AdmissibleCut parse_cut_list(const Quiver& q, const std::string& text) {
    AdmissibleCut cut;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        if (!q.has_arrow(item)) throw InputError("cut names unknown arrow '" + item + "'");
        cut.insert(item);
    }
    return cut;
}

} // namespace cli

// Single dispatch point used by both the binary and the tests.  Exit codes:
// 0 success, 1 malformed input or usage, 2 the operation refused the input or
// failed its own verification.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    cli::Options opt;

    CLI::App app{"exact toolkit for presentations of cluster-tilted quiver algebras"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "JSON document: file path, or '-' for stdin");
        sub->add_option("--fixture", opt.fixture, "named input from the fixture catalog");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "dot"}));
        return sub;
    };

    add_io(app.add_subcommand("validate", "structural checks: loops, 2-cycles, parallel arrows"));
    add_io(app.add_subcommand("cycles", "list the chordless cycles of a quiver"));
    add_io(app.add_subcommand("cyclic-check",
                              "decide whether every chordless cycle is oriented"));
    add_io(app.add_subcommand("relations",
                              "canonical relations of a cyclically oriented quiver"));
    add_io(app.add_subcommand("normalize",
                              "rescale arrows so every relation coefficient is 1"));
    CLI::App* cuts_cmd = add_io(app.add_subcommand("cuts", "admissible cut operations"));
    cuts_cmd->add_flag("--enumerate", opt.enumerate, "list every admissible cut (default)");
    cuts_cmd->add_option("--containing", opt.containing, "one cut through the given arrow");
    CLI::Option* quotient_opt = cuts_cmd->add_option(
        "--quotient", opt.quotient, "comma-separated cut: quotient algebra plus checks");
    add_io(app.add_subcommand("extend", "one new arrow per relation, and the round trip back"));
    add_io(app.add_subcommand("check-theorem",
                              "quotient-extend round trip over every admissible cut"));
    CLI::App* mutate_cmd = add_io(app.add_subcommand("mutate", "quiver mutation at a vertex"));
    mutate_cmd->add_option("--vertex", opt.vertex, "vertex to mutate at")->required();
    add_io(app.add_subcommand("classify",
                              "Cartan matrix, form definiteness, type label, Coxeter polynomial"));
    app.add_subcommand("fixtures", "print the built-in input catalog");
    add_io(app.add_subcommand("dot", "emit the quiver in DOT format"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "usage"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    }
    opt.quotient_given = quotient_opt->count() > 0;

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "fixtures") {
            Json list = Json::array();
            for (const Fixture& f : fixture_catalog())
                list.push_back({{"name", f.name},
                                {"note", f.note},
                                {"kind", f.quiver_only ? "quiver" : "presentation"},
                                {"value", f.quiver_only
                                              ? quiver_to_json(f.quiver())
                                              : presentation_to_json(f.presentation)}});
            out << Json{{"fixtures", list}}.dump(2) << "\n";
            return 0;
        }

        const Json doc = cli::load_document(opt, in);
        if (opt.format == "dot" && cmd != "dot" && cmd != "mutate")
            throw InputError("--format dot is only available for quiver-valued output");

        Json result;
        std::string text;
        if (cmd == "validate") {
            result = cli::validation_to_json(validate_cluster_quiver(quiver_from_json(doc)));
        } else if (cmd == "cycles") {
            Json cycles = Json::array();
            for (const Cycle& c : enumerate_chordless_cycles(quiver_from_json(doc)))
                cycles.push_back(cli::cycle_to_json(c));
            result = Json{{"cycles", cycles}};
        } else if (cmd == "cyclic-check") {
            const CyclicOrientationResult r = is_cyclically_oriented(quiver_from_json(doc));
            result = Json{{"cyclically_oriented", r.cyclically_oriented}};
            result["witness"] = r.witness ? cli::cycle_to_json(*r.witness) : Json(nullptr);
        } else if (cmd == "relations") {
            result = presentation_to_json(standard_relations(quiver_from_json(doc)));
        } else if (cmd == "normalize") {
            const NormalizationResult r = normalize_coefficients(presentation_from_json(doc));
            Json rescaling = Json::object();
            for (const auto& [arrow, value] : r.rescaling)
                rescaling[arrow] = format_rational(value);
            result = Json{{"standard", presentation_to_json(r.standard)},
                          {"rescaling", rescaling}};
        } else if (cmd == "cuts") {
            const Quiver q = quiver_from_json(doc);
            const int modes = (opt.enumerate ? 1 : 0) + (opt.containing.empty() ? 0 : 1) +
                              (opt.quotient_given ? 1 : 0);
            if (modes > 1)
                throw InputError("choose one of --enumerate, --containing, --quotient");
            if (!opt.containing.empty()) {
                if (!q.has_arrow(opt.containing))
                    throw InputError("unknown arrow '" + opt.containing + "'");
                result = Json{{"cut", cli::cut_to_json(cut_containing(q, opt.containing))}};
            } else if (opt.quotient_given) {
                const AdmissibleCut cut = cli::parse_cut_list(q, opt.quotient);
                const Presentation quotient = quotient_by_cut(standard_relations(q), cut);
                result = Json{{"presentation", presentation_to_json(quotient)},
                              {"report", cli::quotient_report_to_json(
                                             verify_cut_quotient(quotient))}};
            } else {
                Json cuts = Json::array();
                for (const AdmissibleCut& c : enumerate_admissible_cuts(q))
                    cuts.push_back(cli::cut_to_json(c));
                result = Json{{"cuts", cuts}};
            }
        } else if (cmd == "extend") {
            result = cli::extension_to_json(
                relation_extension_quiver(presentation_from_json(doc)));
        } else if (cmd == "check-theorem") {
            result = cli::theorem_report_to_json(check_cut_theorem(quiver_from_json(doc)));
        } else if (cmd == "mutate") {
            const Quiver q = quiver_from_json(doc);
            if (!q.has_vertex(opt.vertex))
                throw InputError("unknown vertex '" + opt.vertex + "'");
            const Quiver m = mutate(q, opt.vertex);
            if (opt.format == "dot")
                text = quiver_to_dot(m);
            else
                result = quiver_to_json(m);
        } else if (cmd == "classify") {
            result = cli::classify_to_json(presentation_from_json(doc));
        } else if (cmd == "dot") {
            text = quiver_to_dot(quiver_from_json(doc));
        }

        if (!text.empty())
            out << text;
        else
            out << result.dump(2) << "\n";
        return 0;
    } catch (const InputError& e) {
        err << Json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << Json{{"error", "precondition"}, {"detail", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const CheckError& e) {
        err << Json{{"error", "check"}, {"detail", e.what()}}.dump(2) << "\n";
        return 2;
    }
}

inline int run_cli(const std::vector<std::string>& args) {
    return run_cli(args, std::cin, std::cout, std::cerr);
}

} // namespace quiverforge

#endif
