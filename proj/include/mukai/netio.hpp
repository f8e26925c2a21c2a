#pragma once

// JSON files for nets and sections.
//
// Net file:
//   { "field": "Q" | {"p": 101},
//     "forms": [ 3 x (7 x 7 array of integers or "num/den" strings) ],
//     "metadata": { ... }            optional, carried through untouched }
//
// Section file: "field" as above, an optional "genus", and one of
//   "form":  6 x 6 skew matrix                          (genus 9)
//   "terms": [ {"indices": [i, j, k], "value": c}, ...]  (genus 10, 1-based)
//   "forms": as in a net file                            (genus 12)

#include "mukai/models.hpp"
#include "mukai/nets.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mukai::netio {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json field_to_json(Field f) {
    if (f.is_rational()) return "Q";
    return json{{"p", f.modulus()}};
}

inline Field field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.contains("p") && j.at("p").is_number_integer() && j.at("p").get<std::int64_t>() > 0) {
        try {
            return Field::prime(j.at("p").get<std::uint64_t>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("field must be \"Q\" or {\"p\": prime}");
}

/// Integers that fit in 64 bits are written as JSON numbers, everything else
/// as a canonical "num/den" string.
inline json scalar_to_json(const Scalar& s) {
    if (!s.field().is_rational()) return s.residue();
    const mpq_class& q = s.rational_value();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

inline Scalar scalar_from_json(const json& j, Field f) {
    try {
        if (j.is_number_integer()) {
            if (j.is_number_unsigned()) return Scalar::parse(std::to_string(j.get<std::uint64_t>()), f);
            return Scalar::parse(std::to_string(j.get<std::int64_t>()), f);
        }
        if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("entries must be integers or \"num/den\" strings, got " + j.dump());
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, std::size_t n, Field f) {
    if (!j.is_array() || j.size() != n) throw ParseError("expected a " + std::to_string(n) + " x " + std::to_string(n) + " array");
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != n) throw ParseError("row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t k = 0; k < n; ++k) m.set(i, k, scalar_from_json(row[k], f));
    }
    return m;
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

struct NetFile {
    nets::SkewNet net;
    json metadata = json::object();
};

inline nets::SkewNet net_from_json_forms(const json& doc, Field f) {
    if (!doc.contains("forms")) throw ParseError("missing \"forms\"");
    const json& forms = doc.at("forms");
    if (!forms.is_array() || forms.size() != 3) throw ParseError("\"forms\" must hold exactly three matrices");
    std::array<Matrix, 3> ms{matrix_from_json(forms[0], 7, f), matrix_from_json(forms[1], 7, f), matrix_from_json(forms[2], 7, f)};
    try {
        return nets::SkewNet(std::move(ms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline NetFile net_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("net file must be a JSON object");
    if (!doc.contains("field")) throw ParseError("missing \"field\"");
    const Field f = field_from_json(doc.at("field"));
    NetFile out{net_from_json_forms(doc, f)};
    if (doc.contains("metadata")) out.metadata = doc.at("metadata");
    return out;
}

inline json net_to_json(const nets::SkewNet& net, const json& metadata = json::object()) {
    json forms = json::array();
    for (const auto& m : net.forms()) forms.push_back(matrix_to_json(m));
    json doc{{"field", field_to_json(net.field())}, {"forms", forms}};
    if (!metadata.empty()) doc["metadata"] = metadata;
    return doc;
}

inline NetFile read_net(const std::string& path) { return net_from_json(read_file(path)); }

inline models::Section section_from_json(const json& doc, std::optional<int> genus = std::nullopt) {
    if (!doc.is_object()) throw ParseError("section file must be a JSON object");
    if (!doc.contains("field")) throw ParseError("missing \"field\"");
    const Field f = field_from_json(doc.at("field"));
    int g = 0;
    if (doc.contains("genus")) {
        if (!doc.at("genus").is_number_integer()) throw ParseError("\"genus\" must be an integer");
        g = doc.at("genus").get<int>();
        if (genus && *genus != g) throw ParseError("file is for genus " + std::to_string(g));
    } else if (genus) {
        g = *genus;
    } else {
        throw ParseError("genus is neither in the file nor given");
    }
    switch (g) {
    case 9: {
        if (!doc.contains("form")) throw ParseError("genus 9 section needs \"form\"");
        const Matrix m = matrix_from_json(doc.at("form"), 6, f);
        if (!m.is_skew_symmetric()) throw ParseError("genus 9 form is not skew-symmetric");
        for (std::size_t i = 0; i < 6; ++i)
            if (!m(i, i).is_zero()) throw ParseError("genus 9 form has a nonzero diagonal");
        return models::Section::two_form(exterior::MultiVector::from_skew_matrix(m));
    }
    case 10: {
        if (!doc.contains("terms") || !doc.at("terms").is_array()) throw ParseError("genus 10 section needs \"terms\"");
        exterior::MultiVector w(7, 3, f);
        for (const auto& t : doc.at("terms")) {
            if (!t.is_object() || !t.contains("indices") || !t.contains("value")) throw ParseError("bad term " + t.dump());
            const json& idx = t.at("indices");
            if (!idx.is_array() || idx.size() != 3) throw ParseError("a term needs three indices");
            std::vector<unsigned> ii;
            for (const auto& x : idx) {
                if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > 7) throw ParseError("indices run over 1..7");
                ii.push_back(static_cast<unsigned>(x.get<int>() - 1));
            }
            try {
                w = w + scalar_from_json(t.at("value"), f) * exterior::MultiVector::basis(7, ii, f);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        return models::Section::three_form(std::move(w));
    }
    case 12: return models::Section::net(net_from_json_forms(doc, f));
    default: throw ParseError("no section notion in genus " + std::to_string(g));
    }
}

inline json section_to_json(const models::Section& s) {
    json doc{{"genus", s.genus()}, {"field", field_to_json(s.field())}};
    switch (s.genus()) {
    case 9: doc["form"] = matrix_to_json(exterior::skew_matrix(s.form())); break;
    case 10: {
        json terms = json::array();
        for (const auto& [mask, c] : s.form().terms()) {
            json idx = json::array();
            for (unsigned i = 0; i < 7; ++i)
                if (mask & (1u << i)) idx.push_back(i + 1);
            terms.push_back({{"indices", idx}, {"value", scalar_to_json(c)}});
        }
        doc["terms"] = terms;
        break;
    }
    case 12: doc["forms"] = net_to_json(s.skew_net())["forms"]; break;
    }
    return doc;
}

} // namespace mukai::netio
