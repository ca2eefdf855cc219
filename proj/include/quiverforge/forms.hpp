#ifndef QUIVERFORGE_FORMS_HPP
#define QUIVERFORGE_FORMS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <quiverforge/errors.hpp>
#include <quiverforge/linalg.hpp>
#include <quiverforge/path_space.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>

namespace quiverforge {

// entry (i, j) = number of independent paths i -> j in the quotient algebra
inline IntMatrix cartan_matrix(const Presentation& a) { return AlgebraModel(a).cartan(); }

enum class FormClass { positive_definite, positive_semidefinite, indefinite };

struct SymmetricForm {
    RatMatrix matrix;
    FormClass classification = FormClass::indefinite;
    int corank = 0;              // kernel dimension
    std::vector<RatVec> radical; // kernel basis, populated when semidefinite
    bool positive_definite() const { return classification == FormClass::positive_definite; }
};

inline SymmetricForm classify_symmetric_form(RatMatrix m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) throw PreconditionError("form matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw PreconditionError("form matrix is not symmetric");
    }
    const Inertia in = symmetric_inertia(m);
    SymmetricForm f;
    f.matrix = std::move(m);
    f.corank = in.zero;
    if (in.negative > 0) {
        f.classification = FormClass::indefinite;
        return f;
    }
    f.classification =
        in.zero == 0 ? FormClass::positive_definite : FormClass::positive_semidefinite;
    if (f.classification == FormClass::positive_definite) {
        for (const Rational& mi : leading_principal_minors(f.matrix))
            if (mi <= 0) throw CheckError("inertia and leading minors disagree");
    } else {
        f.radical = rat_nullspace(f.matrix);
        if (static_cast<int>(f.radical.size()) != f.corank)
            throw CheckError("radical dimension disagrees with the inertia corank");
    }
    return f;
}

// symmetrization E + E^T of the Euler matrix E = transpose of the inverse
// Cartan matrix; the quadratic form is q(x) = x (E + E^T) x^T / 2
inline SymmetricForm euler_symmetrized(const Presentation& a) {
    const IntMatrix c = cartan_matrix(a);
    const auto inv = rat_inverse(rat_from_int(c));
    if (!inv) throw PreconditionError("singular Cartan matrix: infinite global dimension suspected");
    const RatMatrix e = rat_transpose(*inv);
    RatMatrix sym = e;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) sym[i][j] += e[j][i];
    return classify_symmetric_form(std::move(sym));
}

// Number of integer vectors with q(x) = 1 inside the box |x_i| <= 6, counted
// by descending-coordinate search over the diagonalized form: with
// q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2, fixing the tail coordinates
// makes every later summand known, so branches exceeding the budget die early.
inline long long count_roots(const SymmetricForm& f) {
    if (!f.positive_definite())
        throw PreconditionError("root counting requires a positive definite form");
    const std::size_t n = f.matrix.size();
    RatMatrix s = f.matrix;
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i][i] != 2) throw PreconditionError("root counting requires a unit form");
        for (std::size_t j = 0; j < n; ++j) s[i][j] /= 2;
    }

    RatVec d(n);
    RatMatrix u = rat_identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = s[k][k];
        if (d[k] <= 0) throw CheckError("positive definite form produced a non-positive pivot");
        for (std::size_t j = k + 1; j < n; ++j) u[k][j] = s[k][j] / d[k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) s[i][j] -= s[k][i] * s[k][j] / d[k];
    }

    std::vector<Int> x(n, 0);
    long long count = 0;
    auto descend = [&](auto&& self, std::size_t level, const Rational& budget) -> void {
        if (level == 0) {
            if (budget == 0) ++count;
            return;
        }
        const std::size_t i = level - 1;
        Rational shift = 0;
        for (std::size_t j = i + 1; j < n; ++j) shift += u[i][j] * Rational(x[j]);
        for (int v = -6; v <= 6; ++v) {
            const Rational inner = Rational(v) + shift;
            const Rational term = d[i] * inner * inner;
            if (term > budget) continue;
            x[i] = v;
            self(self, i, budget - term);
        }
        x[i] = 0;
    };
    descend(descend, n, 1);
    return count;
}

struct TypeLabel {
    std::string family = "none"; // A, D, E, Atilde, Dtilde, Etilde, or none
    int rank = 0;
    std::string diagnostic; // set when no family applies
    bool is_none() const { return family == "none"; }
    std::string name() const { return is_none() ? "none" : family + std::to_string(rank); }
};

namespace detail {

// at fixed vertex count the root count pins down the Dynkin family
inline std::optional<std::pair<std::string, int>> dynkin_from_roots(std::size_t n,
                                                                    long long roots) {
    const auto nn = static_cast<long long>(n);
    if (roots == nn * (nn + 1)) return {{"A", static_cast<int>(n)}};
    if (n >= 4 && roots == 2 * nn * (nn - 1)) return {{"D", static_cast<int>(n)}};
    if (n == 6 && roots == 72) return {{"E", 6}};
    if (n == 7 && roots == 126) return {{"E", 7}};
    if (n == 8 && roots == 240) return {{"E", 8}};
    return std::nullopt;
}

// the multiset of entries of the primitive radical vector of an affine form
inline std::optional<std::string> affine_family_from_delta(const std::vector<Int>& sorted) {
    const std::size_t n = sorted.size();
    if (std::all_of(sorted.begin(), sorted.end(), [](const Int& v) { return v == 1; }))
        return "Atilde";
    if (n >= 5 && std::count(sorted.begin(), sorted.end(), Int(1)) == 4 &&
        std::all_of(sorted.begin() + 4, sorted.end(), [](const Int& v) { return v == 2; }))
        return "Dtilde";
    if (n == 7 && sorted == std::vector<Int>{1, 1, 1, 2, 2, 2, 3}) return "Etilde";
    if (n == 8 && sorted == std::vector<Int>{1, 1, 2, 2, 2, 3, 3, 4}) return "Etilde";
    if (n == 9 && sorted == std::vector<Int>{1, 2, 2, 3, 3, 4, 4, 5, 6}) return "Etilde";
    return std::nullopt;
}

} // namespace detail

// Dynkin label for a positive definite symmetrized Euler form (by root
// count), extended Dynkin label for the corank-one semidefinite case (by the
// entry multiset of the primitive radical vector delta, cross-checked against
// the Dynkin label of the form with one delta = 1 vertex deleted).
inline TypeLabel classify_type(const Presentation& a) {
    if (!is_acyclic(a.quiver))
        throw PreconditionError("type classification requires an acyclic quiver");
    const SymmetricForm f = euler_symmetrized(a);
    const std::size_t n = f.matrix.size();
    TypeLabel t;

    if (f.positive_definite()) {
        const long long roots = count_roots(f);
        if (const auto fam = detail::dynkin_from_roots(n, roots)) {
            t.family = fam->first;
            t.rank = fam->second;
        } else {
            t.diagnostic = "positive definite, but the root count " + std::to_string(roots) +
                           " matches no Dynkin family at " + std::to_string(n) + " vertices";
        }
        return t;
    }

    if (f.classification == FormClass::positive_semidefinite && f.corank == 1) {
        IntVec delta = primitive_integer(f.radical.front());
        Int total = 0;
        for (const Int& v : delta) total += v;
        if (total < 0)
            for (Int& v : delta) v = -v;
        if (std::any_of(delta.begin(), delta.end(), [](const Int& v) { return v <= 0; })) {
            t.diagnostic = "corank-one radical vector is not strictly positive";
            return t;
        }
        std::vector<Int> sorted = delta;
        std::sort(sorted.begin(), sorted.end());
        const auto fam = detail::affine_family_from_delta(sorted);
        if (!fam) {
            t.diagnostic = "corank-one radical entries match no extended Dynkin family";
            return t;
        }
        t.family = *fam;
        t.rank = static_cast<int>(n) - 1;

        // deleting a vertex with delta = 1 must leave the finite counterpart
        std::size_t drop = n;
        for (std::size_t i = 0; i < n && drop == n; ++i)
            if (delta[i] == 1) drop = i;
        RatMatrix sub(n - 1, RatVec(n - 1));
        for (std::size_t i = 0, si = 0; i < n; ++i) {
            if (i == drop) continue;
            for (std::size_t j = 0, sj = 0; j < n; ++j) {
                if (j == drop) continue;
                sub[si][sj++] = f.matrix[i][j];
            }
            ++si;
        }
        const SymmetricForm g = classify_symmetric_form(std::move(sub));
        if (!g.positive_definite())
            throw CheckError("deleting a radical-one vertex did not leave a definite form");
        const auto finite = detail::dynkin_from_roots(n - 1, count_roots(g));
        if (!finite || t.family != finite->first + "tilde")
            throw CheckError("affine label disagrees with the deleted-vertex subform");
        return t;
    }

    t.diagnostic = f.classification == FormClass::indefinite
                       ? "the symmetrized Euler form is indefinite"
                       : "positive semidefinite of corank " + std::to_string(f.corank);
    return t;
}

struct CompanionReport {
    std::size_t patterns = 0;
    bool any_positive_definite = false;
    bool any_semidefinite_corank_one = false;
    std::optional<IntMatrix> definite_example;
    std::optional<IntMatrix> semidefinite_example;
};

// All symmetric integer matrices with diagonal 2 and off-diagonal supported
// on the edges of q with entries of absolute value 1: one sign per arrow,
// enumerated by bitmask in arrow order (clear bit = -1).  Reports whether any
// choice is positive definite and whether any is semidefinite of corank one.
inline CompanionReport quasi_cartan_companions(const Quiver& q) {
    if (!validate_cluster_quiver(q).simple())
        throw PreconditionError(
            "companion search needs a quiver without loops, 2-cycles, or parallel arrows");
    const std::size_t m = q.arrow_count();
    if (m > 20) throw PreconditionError("companion sign enumeration capped at 20 arrows");
    const std::size_t n = q.vertex_count();

    CompanionReport rep;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        ++rep.patterns;
        IntMatrix mtx = int_identity(n);
        for (std::size_t i = 0; i < n; ++i) mtx[i][i] = 2;
        for (std::size_t k = 0; k < m; ++k) {
            const Arrow& ar = q.arrows()[k];
            const Int sign = (mask >> k) & 1 ? 1 : -1;
            const auto i = static_cast<std::size_t>(q.vertex_index(ar.from));
            const auto j = static_cast<std::size_t>(q.vertex_index(ar.to));
            mtx[i][j] = sign;
            mtx[j][i] = sign;
        }

        if (!rep.any_positive_definite) {
            const auto minors = leading_principal_minors(rat_from_int(mtx));
            if (std::all_of(minors.begin(), minors.end(),
                            [](const Rational& v) { return v > 0; })) {
                rep.any_positive_definite = true;
                rep.definite_example = mtx;
            }
        }
        if (!rep.any_semidefinite_corank_one) {
            const SymmetricForm f = classify_symmetric_form(rat_from_int(mtx));
            if (f.classification == FormClass::positive_semidefinite && f.corank == 1) {
                rep.any_semidefinite_corank_one = true;
                rep.semidefinite_example = mtx;
            }
        }
        if (rep.any_positive_definite && rep.any_semidefinite_corank_one) break;
    }
    return rep;
}

// Characteristic polynomial of the Coxeter matrix -C^{-1} C^T, ascending
// coefficients; the result always clears to integers.
inline IntVec coxeter_polynomial(const Presentation& a) {
    const IntMatrix c = cartan_matrix(a);
    const auto inv = rat_inverse(rat_from_int(c));
    if (!inv) throw PreconditionError("singular Cartan matrix: infinite global dimension suspected");
    RatMatrix phi = rat_mul(*inv, rat_transpose(rat_from_int(c)));
    for (auto& row : phi)
        for (auto& v : row) v = -v;
    IntVec out;
    for (const Rational& coeff : char_poly(phi)) {
        if (boost::multiprecision::denominator(coeff) != 1)
            throw CheckError("Coxeter polynomial has a non-integer coefficient");
        out.push_back(boost::multiprecision::numerator(coeff));
    }
    return out;
}

} // namespace quiverforge

#endif
