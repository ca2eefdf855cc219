#ifndef QUIVERFORGE_DOT_HPP
#define QUIVERFORGE_DOT_HPP

#include <string>

#include <quiverforge/quiver.hpp>

namespace quiverforge {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

// One node per vertex and one labelled edge per arrow, in insertion order.
inline std::string quiver_to_dot(const Quiver& q) {
    std::string out = "digraph quiver {\n";
    for (const std::string& v : q.vertices()) out += "  " + detail::dot_quote(v) + ";\n";
    for (const Arrow& a : q.arrows())
        out += "  " + detail::dot_quote(a.from) + " -> " + detail::dot_quote(a.to) +
               " [label=" + detail::dot_quote(a.id) + "];\n";
    out += "}\n";
    return out;
}

} // namespace quiverforge

#endif
