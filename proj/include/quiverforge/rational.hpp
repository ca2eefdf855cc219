#ifndef QUIVERFORGE_RATIONAL_HPP
#define QUIVERFORGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include <quiverforge/errors.hpp>

namespace quiverforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with an optional sign on p (and on q, though emitters
// never produce one there).  Rejects anything else, including q == 0.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw InputError("invalid rational literal: '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view part) -> Int {
        if (part.empty()) fail();
        std::size_t i = 0;
        const bool neg = part[0] == '-';
        if (part[0] == '+' || part[0] == '-') i = 1;
        if (i == part.size()) fail();
        for (std::size_t k = i; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) fail();
        const Int magnitude(std::string(part.substr(i)));
        return neg ? Int(-magnitude) : magnitude;
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// Canonical emission: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string format_rational(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace quiverforge

#endif
