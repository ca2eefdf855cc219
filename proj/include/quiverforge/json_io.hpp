#ifndef QUIVERFORGE_JSON_IO_HPP
#define QUIVERFORGE_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <quiverforge/errors.hpp>
#include <quiverforge/presentation.hpp>
#include <quiverforge/quiver.hpp>
#include <quiverforge/rational.hpp>

namespace quiverforge {

using Json = nlohmann::json;

namespace detail {

inline Json parse_json_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw InputError("invalid JSON");
    return doc;
}

inline const Json& json_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::string json_string(const Json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline const Json& json_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    return j;
}

} // namespace detail

inline Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const Json& j) {
    Quiver q;
    for (const Json& v : detail::json_array(detail::json_field(j, "vertices"), "'vertices'"))
        q.add_vertex(detail::json_string(v, "vertex"));
    for (const Json& a : detail::json_array(detail::json_field(j, "arrows"), "'arrows'"))
        q.add_arrow(detail::json_string(detail::json_field(a, "id"), "arrow id"),
                    detail::json_string(detail::json_field(a, "from"), "arrow source"),
                    detail::json_string(detail::json_field(a, "to"), "arrow target"));
    return q;
}

inline Json relation_to_json(const Relation& r) {
    Json terms = Json::array();
    for (const RelationTerm& t : r.terms)
        terms.push_back({{"coeff", format_rational(t.coeff)}, {"path", t.path.arrows}});
    Json out{{"terms", terms}};
    if (r.antiparallel_arrow) out["arrow"] = *r.antiparallel_arrow;
    return out;
}

inline Json relations_to_json(const std::vector<Relation>& rs) {
    Json out = Json::array();
    for (const Relation& r : rs) out.push_back(relation_to_json(r));
    return out;
}

inline Relation relation_from_json(const Json& j) {
    Relation r;
    for (const Json& t : detail::json_array(detail::json_field(j, "terms"), "'terms'")) {
        RelationTerm term;
        term.coeff =
            parse_rational(detail::json_string(detail::json_field(t, "coeff"), "coefficient"));
        for (const Json& a : detail::json_array(detail::json_field(t, "path"), "'path'"))
            term.path.arrows.push_back(detail::json_string(a, "path entry"));
        r.terms.push_back(std::move(term));
    }
    if (j.contains("arrow"))
        r.antiparallel_arrow = detail::json_string(j.at("arrow"), "relation arrow tag");
    return r;
}

// One flat document: the quiver fields plus a "relations" array (absent or
// empty both mean a relation-free presentation).
inline Json presentation_to_json(const Presentation& p) {
    Json doc = quiver_to_json(p.quiver);
    doc["relations"] = relations_to_json(p.relations);
    return doc;
}

inline Presentation presentation_from_json(const Json& j) {
    Presentation p;
    p.quiver = quiver_from_json(j);
    if (j.contains("relations"))
        for (const Json& r : detail::json_array(j.at("relations"), "'relations'"))
            p.relations.push_back(relation_from_json(r));
    validate_presentation(p);
    return p;
}

} // namespace quiverforge

#endif
