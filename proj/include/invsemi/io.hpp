#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "invsemi/function.hpp"
#include "invsemi/report.hpp"
#include "invsemi/representation.hpp"
#include "invsemi/semigroup.hpp"

// File formats. All documents are JSON; keys are emitted in sorted order so
// that a fixed input always serializes to identical bytes.
//
//   semigroup       {"name": str?, "elements": [str]?, "table": [[int]], "star": [int]?}
//   function        {"semigroup": str, "values": [[re,im], ...] | [re, ...]}
//   representation  {"semigroup": str, "dim": int, "matrices": [[[[re,im], ...]], ...]}
//   check report    {"check": str, "verdict": bool, "spectrum": [float],
//                    "witness": [[re,im], ...]?, "constant": float?, "tolerance": float}

namespace invsemi {

using json = nlohmann::json;

namespace detail {

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j, const char* where) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw ParseError(std::string(where) + ": expected a number or [re, im] pair");
}

inline json vector_to_json(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

} // namespace detail

inline json semigroup_to_json(const InverseSemigroup& s) {
    json j;
    if (!s.name().empty()) j["name"] = s.name();
    if (s.has_names()) j["elements"] = s.names();
    json table = json::array();
    for (int i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.size(); ++k) row.push_back(s.product(i, k));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["star"] = s.star_vector();
    return j;
}

/// Parse and validate a semigroup document. Shape problems (ragged table,
/// out-of-range entries, wrong field types) throw ParseError; a well-formed
/// table that is not an inverse semigroup throws ValidationError.
inline SemigroupPtr semigroup_from_json(const json& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
        throw ParseError("semigroup document: missing \"table\" array");
    const auto& jt = j["table"];
    const int n = static_cast<int>(jt.size());
    if (n == 0) throw ParseError("semigroup document: empty table");
    std::vector<std::vector<int>> table(n);
    for (int i = 0; i < n; ++i) {
        if (!jt[i].is_array() || static_cast<int>(jt[i].size()) != n)
            throw ParseError("semigroup document: table is ragged at row " + std::to_string(i));
        for (const auto& e : jt[i]) {
            if (!e.is_number_integer())
                throw ParseError("semigroup document: non-integer table entry");
            const int v = e.get<int>();
            if (v < 0 || v >= n)
                throw ParseError("semigroup document: table entry " + std::to_string(v) +
                                 " out of range");
            table[i].push_back(v);
        }
    }
    std::optional<std::vector<int>> star;
    if (j.contains("star")) {
        if (!j["star"].is_array() || static_cast<int>(j["star"].size()) != n)
            throw ParseError("semigroup document: star must list one index per element");
        std::vector<int> sv;
        for (const auto& e : j["star"]) {
            if (!e.is_number_integer()) throw ParseError("semigroup document: non-integer star entry");
            const int v = e.get<int>();
            if (v < 0 || v >= n) throw ParseError("semigroup document: star entry out of range");
            sv.push_back(v);
        }
        star = std::move(sv);
    }
    std::vector<std::string> names;
    if (j.contains("elements")) {
        if (!j["elements"].is_array() || static_cast<int>(j["elements"].size()) != n)
            throw ParseError("semigroup document: elements must list one label per element");
        for (const auto& e : j["elements"]) names.push_back(e.get<std::string>());
    }
    std::string name = j.value("name", std::string{});
    return InverseSemigroup::validate_table(std::move(table), std::move(star), std::move(names),
                                            std::move(name));
}

inline json function_to_json(const SFunction& f) {
    json j;
    j["semigroup"] = f.base()->name();
    j["values"] = detail::vector_to_json(f.values());
    return j;
}

/// Parse a function document against a given base semigroup. The document's
/// "semigroup" label must agree with the base's name when both are present.
inline SFunction function_from_json(const json& j, SemigroupPtr base) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw ParseError("function document: missing \"values\" array");
    const std::string label = j.value("semigroup", std::string{});
    if (!label.empty() && !base->name().empty() && label != base->name())
        throw BaseMismatch("function document names semigroup \"" + label +
                           "\" but was loaded against \"" + base->name() + "\"");
    const auto& jv = j["values"];
    if (static_cast<int>(jv.size()) != base->size())
        throw BaseMismatch("function document has " + std::to_string(jv.size()) +
                           " values for a semigroup of size " + std::to_string(base->size()));
    Eigen::VectorXcd v(base->size());
    for (int i = 0; i < base->size(); ++i)
        v(i) = detail::complex_from_json(jv[i], "function document value");
    return SFunction(std::move(base), std::move(v));
}

inline json representation_to_json(const Representation& pi) {
    json j;
    j["semigroup"] = pi.base()->name();
    j["dim"] = pi.dim();
    json mats = json::array();
    for (int x = 0; x < pi.base()->size(); ++x) {
        json rows = json::array();
        for (int r = 0; r < pi.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < pi.dim(); ++c)
                row.push_back(detail::complex_to_json(pi.matrix(x)(r, c)));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
    return j;
}

inline Representation representation_from_json(const json& j, SemigroupPtr base) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("matrices"))
        throw ParseError("representation document: missing \"dim\" or \"matrices\"");
    const std::string label = j.value("semigroup", std::string{});
    if (!label.empty() && !base->name().empty() && label != base->name())
        throw BaseMismatch("representation document names semigroup \"" + label + "\"");
    const int dim = j["dim"].get<int>();
    if (dim <= 0) throw ParseError("representation document: dim must be positive");
    const auto& jm = j["matrices"];
    if (!jm.is_array() || static_cast<int>(jm.size()) != base->size())
        throw BaseMismatch("representation document must hold one matrix per element");
    std::vector<Eigen::MatrixXcd> mats;
    for (const auto& m : jm) {
        if (!m.is_array() || static_cast<int>(m.size()) != dim)
            throw ParseError("representation document: matrix row count != dim");
        Eigen::MatrixXcd mat(dim, dim);
        for (int r = 0; r < dim; ++r) {
            if (!m[r].is_array() || static_cast<int>(m[r].size()) != dim)
                throw ParseError("representation document: matrix column count != dim");
            for (int c = 0; c < dim; ++c)
                mat(r, c) = detail::complex_from_json(m[r][c], "representation entry");
        }
        mats.push_back(std::move(mat));
    }
    return Representation(std::move(base), std::move(mats));
}

inline json report_to_json(const CheckReport& r) {
    json j;
    j["check"] = r.check;
    j["verdict"] = r.verdict;
    j["spectrum"] = r.spectrum;
    if (r.witness) j["witness"] = detail::vector_to_json(*r.witness);
    if (r.constant) j["constant"] = *r.constant;
    j["tolerance"] = r.tolerance;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

inline SemigroupPtr load_semigroup(const std::string& path) {
    return semigroup_from_json(load_json(path));
}

inline SFunction load_function(const std::string& path, SemigroupPtr base) {
    return function_from_json(load_json(path), std::move(base));
}

} // namespace invsemi
