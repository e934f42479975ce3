#pragma once

/**
 * @file serialize.hpp
 * @brief Canonical JSON forms. Entries are strings so that big integers and
 * fractions survive unchanged; keys come out sorted.
 */

#include <natprod/matpoly.hpp>

#include <json.hpp>

namespace natprod {

using Json = nlohmann::json;

inline Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"domain", m.domain().name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Json to_json(const SupportMask& mask) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < mask.shape().rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < mask.shape().cols; ++c) row.push_back(mask.test(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return Json{{"rows", mask.shape().rows}, {"cols", mask.shape().cols}, {"mask", std::move(rows)}};
}

inline Json to_json(const SuperMatrix& s) {
    Json j = to_json(s.base());
    j["row_cuts"] = s.ptype().row_cuts();
    j["col_cuts"] = s.ptype().col_cuts();
    return j;
}

inline Json to_json(const MatPoly& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json coeff = p.ptype() ? to_json(SuperMatrix(c, *p.ptype())) : to_json(c);
        terms.push_back(Json{{"deg", k}, {"coeff", std::move(coeff)}});
    }
    Json j{{"shape", Json{{"rows", p.shape().rows}, {"cols", p.shape().cols}}},
           {"domain", p.domain().name()},
           {"terms", std::move(terms)}};
    if (p.ptype()) {
        j["row_cuts"] = p.ptype()->row_cuts();
        j["col_cuts"] = p.ptype()->col_cuts();
    }
    return j;
}

inline Json to_json(const RootSet& rs) {
    Json roots = Json::array();
    for (const auto& r : rs.roots) roots.push_back(to_json(r));
    Json j{{"roots", std::move(roots)}, {"more_sign_combinations", rs.more_sign_combinations}};
    j["reason"] = rs.reason ? Json(std::string(to_string(*rs.reason))) : Json(nullptr);
    j["component"] = rs.component ? Json(*rs.component + 1) : Json(nullptr);
    return j;
}

namespace detail {

inline std::size_t json_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) fail(ErrorKind::ParseError, std::string("JSON field '") + key + "' must be a nonnegative integer");
    return j[key].get<std::size_t>();
}

inline std::set<std::size_t> json_cuts(const Json& j, const char* key) {
    std::set<std::size_t> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) fail(ErrorKind::ParseError, std::string("JSON field '") + key + "' must be an array");
    for (const auto& v : j[key]) {
        if (!v.is_number_unsigned()) fail(ErrorKind::ParseError, std::string("JSON field '") + key + "' holds a non-integer");
        out.insert(v.get<std::size_t>());
    }
    return out;
}

inline Json json_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("JSON object lacks '") + key + "'");
    return j[key];
}

} // namespace detail

inline Matrix matrix_from_json(const Json& j) {
    const DomainTag d = DomainTag::parse(detail::json_field(j, "domain").get<std::string>());
    const Shape s{detail::json_size(j, "rows"), detail::json_size(j, "cols")};
    const Json& rows = detail::json_field(j, "entries");
    if (!rows.is_array() || rows.size() != s.rows) fail(ErrorKind::ParseError, "JSON 'entries' must hold one array per row");
    std::vector<Scalar> e;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != s.cols) fail(ErrorKind::ParseError, "JSON row length does not match 'cols'");
        for (const auto& v : row) {
            if (v.is_string())
                e.push_back(parse_scalar(v.get<std::string>(), d));
            else if (v.is_number_integer())
                e.emplace_back(d, BigRat(v.get<long long>()));
            else
                fail(ErrorKind::ParseError, "JSON entries must be strings or integers");
        }
    }
    return Matrix(s, d, std::move(e));
}

inline SuperMatrix super_from_json(const Json& j) {
    Matrix m = matrix_from_json(j);
    const Shape s = m.shape();
    return SuperMatrix(std::move(m), PartitionType(s, detail::json_cuts(j, "row_cuts"), detail::json_cuts(j, "col_cuts")));
}

inline MatPoly poly_from_json(const Json& j) {
    const Json shape = detail::json_field(j, "shape");
    const Shape s{detail::json_size(shape, "rows"), detail::json_size(shape, "cols")};
    const DomainTag d = DomainTag::parse(detail::json_field(j, "domain").get<std::string>());
    std::optional<PartitionType> pt;
    if (j.contains("row_cuts") || j.contains("col_cuts"))
        pt = PartitionType(s, detail::json_cuts(j, "row_cuts"), detail::json_cuts(j, "col_cuts"));
    MatPoly p(s, d, pt);
    for (const auto& t : detail::json_field(j, "terms")) {
        const std::size_t k = detail::json_size(t, "deg");
        p.add_term(k, matrix_from_json(detail::json_field(t, "coeff")));
    }
    return p;
}

} // namespace natprod
