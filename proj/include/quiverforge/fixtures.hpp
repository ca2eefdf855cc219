#ifndef QUIVERFORGE_FIXTURES_HPP
#define QUIVERFORGE_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

// A named ready-made input.  quiver_only fixtures carry no relations and are
// meant for operations that take a bare quiver; the rest are presentations
// (hereditary ones simply have an empty relation list but are still meant to
// be read as algebras).
struct Fixture {
    std::string name;
    std::string note;
    Presentation presentation;
    bool quiver_only = false;

    const Quiver& quiver() const { return presentation.quiver; }
};

namespace detail {

inline Quiver line_quiver(int n) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (int i = 1; i < n; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
    return q;
}

// hub vertex "c" plus n spokes "1".."n", every spoke pointing at the hub
inline Quiver star_quiver(int n) {
    Quiver q;
    q.add_vertex("c");
    for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        q.add_arrow("x" + std::to_string(i), std::to_string(i), "c");
    return q;
}

inline Relation zero_relation(std::vector<std::string> arrows) {
    return Relation{{{Rational(1), Path{std::move(arrows)}}}, {}};
}

} // namespace detail

inline const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> catalog = [] {
        std::vector<Fixture> fs;
        auto quiver_fixture = [&](const std::string& name, const std::string& note, Quiver q) {
            Presentation p;
            p.quiver = std::move(q);
            fs.push_back(Fixture{name, note, std::move(p), true});
        };
        auto algebra_fixture = [&](const std::string& name, const std::string& note,
                                   Presentation p) {
            fs.push_back(Fixture{name, note, std::move(p), false});
        };

        for (int n : {3, 4, 5})
            quiver_fixture("C" + std::to_string(n), "oriented " + std::to_string(n) + "-cycle",
                           make_cycle(n));
        quiver_fixture("G22", "two length-2 arms x -> y closed by the return arrow eta",
                       make_G(2, 2));
        quiver_fixture("G32", "arms of lengths 3 and 2 from x to y closed by the return arrow eta",
                       make_G(3, 2));

        {
            Quiver q;
            for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
            q.add_arrow("alpha1", "1", "2");
            q.add_arrow("alpha2", "1", "2");
            q.add_arrow("beta1", "2", "3");
            q.add_arrow("beta2", "2", "3");
            q.add_arrow("gamma1", "1", "3");
            quiver_fixture("double-arrow",
                           "doubled arrows 1 => 2 => 3 plus a diagonal; mutating at 2 "
                           "produces five parallel arrows 1 -> 3",
                           std::move(q));
        }

        {
            Quiver q;
            for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
            q.add_arrow("alpha", "1", "2");
            q.add_arrow("beta", "1", "3");
            q.add_arrow("gamma", "3", "2");
            q.add_arrow("phi", "4", "3");
            Presentation p;
            p.quiver = std::move(q);
            p.relations.push_back(detail::zero_relation({"phi", "gamma"}));
            algebra_fixture("example13-B",
                            "triangle 1,2,3 with a tail 4 -> 3 and the zero relation "
                            "gamma.phi; shares its extension quiver with example13-C",
                            std::move(p));
        }
        {
            Quiver q;
            for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
            q.add_arrow("alpha", "1", "2");
            q.add_arrow("beta", "1", "3");
            q.add_arrow("phi", "4", "3");
            q.add_arrow("eta", "2", "4");
            Presentation p;
            p.quiver = std::move(q);
            p.relations.push_back(detail::zero_relation({"eta", "phi"}));
            algebra_fixture("example13-C",
                            "path quiver through 2 -> 4 -> 3 with the zero relation "
                            "phi.eta; shares its extension quiver with example13-B",
                            std::move(p));
        }

        {
            Quiver q;
            q.add_vertex("x");
            q.add_vertex("y");
            q.add_vertex("p1");
            q.add_vertex("q1");
            q.add_arrow("a1", "x", "p1");
            q.add_arrow("a2", "p1", "y");
            q.add_arrow("b1", "x", "q1");
            q.add_arrow("b2", "q1", "y");
            Presentation p;
            p.quiver = std::move(q);
            p.relations.push_back(Relation{{{Rational(1), Path{{"a1", "a2"}}},
                                            {Rational(-1), Path{{"b1", "b2"}}}},
                                           {}});
            algebra_fixture("commutative-square",
                            "two length-2 paths x -> y identified by a commutativity relation",
                            std::move(p));
        }

        for (int n : {2, 3, 4, 5}) {
            Presentation p;
            p.quiver = detail::line_quiver(n);
            algebra_fixture("A" + std::to_string(n),
                            "hereditary line on " + std::to_string(n) + " vertices",
                            std::move(p));
        }
        {
            Presentation p;
            p.quiver = detail::star_quiver(3);
            algebra_fixture("D4", "hereditary three-spoke star", std::move(p));
        }
        {
            Quiver q;
            for (const char* v : {"1", "2", "3", "4", "5"}) q.add_vertex(v);
            q.add_arrow("x1", "1", "3");
            q.add_arrow("x2", "2", "3");
            q.add_arrow("x3", "3", "4");
            q.add_arrow("x4", "4", "5");
            Presentation p;
            p.quiver = std::move(q);
            algebra_fixture("D5", "hereditary fork: two tines joined to a line", std::move(p));
        }
        {
            Quiver q = detail::line_quiver(5);
            q.add_vertex("6");
            q.add_arrow("x5", "6", "3");
            Presentation p;
            p.quiver = std::move(q);
            algebra_fixture("E6", "hereditary five-vertex line with a branch at the middle",
                            std::move(p));
        }
        {
            Presentation p;
            p.quiver = detail::star_quiver(4);
            algebra_fixture("Dtilde4", "hereditary four-spoke star", std::move(p));
        }

        return fs;
    }();
    return catalog;
}

inline const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixture_catalog())
        if (f.name == name) return f;
    throw InputError("unknown fixture: " + name);
}

} // namespace quiverforge

#endif
