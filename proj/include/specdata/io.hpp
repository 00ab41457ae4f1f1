#ifndef SPECDATA_IO_HPP
#define SPECDATA_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "specdata/expr.hpp"
#include "specdata/families.hpp"
#include "specdata/field.hpp"
#include "specdata/symtensor.hpp"
#include "specdata/tuples.hpp"
#include "specdata/zero_cycle.hpp"

namespace specdata {

using nlohmann::json;

inline json field_to_json(const FieldDesc& field) {
    if (field.rational) return json("Q");
    return json{{"Fp", field.p}};
}

inline FieldDesc field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldDesc::Q();
        throw BadInputError("unknown field descriptor '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("Fp")) return FieldDesc::prime(j.at("Fp").get<long long>());
    throw BadInputError("field must be \"Q\" or {\"Fp\": p}");
}

inline json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw BadInputError("malformed JSON in '" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw BadInputError("cannot write '" + path + "'");
    out << text;
}

namespace detail {

template <class T>
T json_get(const json& j, const std::string& key, const std::string& what) {
    if (!j.contains(key)) throw BadInputError(what + ": missing field \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw BadInputError(what + ": bad field \"" + key + "\": " + e.what());
    }
}

}  // namespace detail

template <class K>
json tuple_to_json(const MatrixTuple<K>& t, const FieldDesc& field) {
    json thetas = json::array();
    for (const auto& m : t.thetas) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) rows.push_back(to_string_adl(m(i, j)));
        thetas.push_back(rows);
    }
    return json{{"field", field_to_json(field)}, {"n", t.n}, {"d", t.d}, {"thetas", thetas}};
}

template <class K>
MatrixTuple<K> tuple_from_json(const json& j, const FieldDesc& field) {
    const int n = detail::json_get<int>(j, "n", "tuple");
    const int d = detail::json_get<int>(j, "d", "tuple");
    if (n < 1 || d < 1) throw BadInputError("tuple: n and d must be positive");
    if (!field.rational && field.p <= n)
        throw BadInputError("tuple: prime modulus " + std::to_string(field.p) +
                            " must exceed n = " + std::to_string(n));
    if (!j.contains("thetas") || !j.at("thetas").is_array() || static_cast<int>(j.at("thetas").size()) != d)
        throw BadInputError("tuple: \"thetas\" must be an array of d matrices");
    std::vector<DenseMatrix<K>> thetas;
    for (int m = 0; m < d; ++m) {
        const json& rows = j.at("thetas").at(static_cast<std::size_t>(m));
        if (!rows.is_array() || static_cast<int>(rows.size()) != n * n)
            throw BadInputError("tuple: theta " + std::to_string(m + 1) + " must hold " + std::to_string(n * n) +
                                " row-major entries");
        DenseMatrix<K> mat(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const json& cell = rows.at(static_cast<std::size_t>(i * n + k));
                if (!cell.is_string())
                    throw BadInputError("tuple: theta " + std::to_string(m + 1) + " entry (" + std::to_string(i + 1) +
                                        "," + std::to_string(k + 1) + ") must be a scalar string");
                mat(i, k) = parse_scalar<K>(cell.get<std::string>(), field);
            }
        thetas.push_back(std::move(mat));
    }
    return MatrixTuple<K>(n, d, std::move(thetas));
}

template <class K>
json cycle_to_json(const ZeroCycle<K>& a, const FieldDesc& field) {
    json entries = json::array();
    for (const auto& e : a.entries()) {
        json point = json::array();
        for (const K& c : e.point) point.push_back(to_string_adl(c));
        entries.push_back(json{{"point", point}, {"mult", e.mult}});
    }
    return json{{"field", field_to_json(field)}, {"entries", entries}};
}

template <class K>
ZeroCycle<K> cycle_from_json(const json& j, const FieldDesc& field) {
    if (!j.contains("entries") || !j.at("entries").is_array() || j.at("entries").empty())
        throw BadInputError("cycle: \"entries\" must be a nonempty array");
    std::vector<CyclePoint<K>> entries;
    for (const json& e : j.at("entries")) {
        if (!e.contains("point") || !e.at("point").is_array())
            throw BadInputError("cycle: each entry needs a \"point\" array");
        CyclePoint<K> cp;
        for (const json& c : e.at("point")) {
            if (!c.is_string()) throw BadInputError("cycle: point coordinates must be scalar strings");
            cp.point.push_back(parse_scalar<K>(c.get<std::string>(), field));
        }
        cp.mult = detail::json_get<int>(e, "mult", "cycle entry");
        entries.push_back(std::move(cp));
    }
    return ZeroCycle<K>(std::move(entries));
}

/// SymTensor wire format: a list of (exponent vector, scalar string) pairs in
/// lexicographic order.
template <class K>
json symtensor_to_json(const SymTensor<K>& t) {
    json terms = json::array();
    for (const auto& [e, v] : t.terms()) terms.push_back(json::array({json(e), json(to_string_adl(v))}));
    return json{{"dim", t.dim()}, {"degree", t.degree()}, {"terms", terms}};
}

template <class K>
SymTensor<K> symtensor_from_json(const json& j, const FieldDesc& field) {
    const int dim = detail::json_get<int>(j, "dim", "tensor");
    const int degree = detail::json_get<int>(j, "degree", "tensor");
    SymTensor<K> t(dim, degree);
    if (!j.contains("terms") || !j.at("terms").is_array()) throw BadInputError("tensor: missing \"terms\" array");
    for (const json& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 2) throw BadInputError("tensor: terms are [exponents, scalar] pairs");
        t.add_term(term.at(0).get<std::vector<int>>(), parse_scalar<K>(term.at(1).get<std::string>(), field));
    }
    return t;
}

template <class Coords>
json coords_to_json(const Coords& c, const FieldDesc& field, const std::string& kind) {
    json tensors = json::array();
    for (const auto& t : c.tensors) tensors.push_back(symtensor_to_json(t));
    return json{{"field", field_to_json(field)}, {"kind", kind}, {"n", c.n}, {"d", c.dim}, {"tensors", tensors}};
}

template <class K, class Coords>
Coords coords_from_json(const json& j, const FieldDesc& field) {
    Coords c;
    c.n = detail::json_get<int>(j, "n", "coords");
    c.dim = detail::json_get<int>(j, "d", "coords");
    if (!field.rational && field.p <= c.n)
        throw BadInputError("coords: prime modulus must exceed n for the Newton conversion");
    if (!j.contains("tensors") || static_cast<int>(j.at("tensors").size()) != c.n)
        throw BadInputError("coords: \"tensors\" must hold n tensors");
    for (const json& t : j.at("tensors")) c.tensors.push_back(symtensor_from_json<K>(t, field));
    for (int i = 1; i <= c.n; ++i) {
        const auto& t = c.tensors[static_cast<std::size_t>(i - 1)];
        if (t.degree() != i || t.dim() != c.dim) throw BadInputError("coords: tensor " + std::to_string(i) + " has wrong degree or dimension");
    }
    return c;
}

/// Family files mirror tuple files with polynomial entry strings in s.
template <class K>
json family_to_json(const PolyMatrixTuple<K>& t, const FieldDesc& field) {
    json thetas = json::array();
    for (const auto& m : t.thetas) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) rows.push_back(m(i, j).to_string());
        thetas.push_back(rows);
    }
    return json{{"field", field_to_json(field)}, {"n", t.n}, {"d", t.d}, {"thetas", thetas}};
}

template <class K>
PolyMatrixTuple<K> family_from_json(const json& j, const FieldDesc& field) {
    const int n = detail::json_get<int>(j, "n", "family");
    const int d = detail::json_get<int>(j, "d", "family");
    if (n < 1 || d < 1) throw BadInputError("family: n and d must be positive");
    if (!field.rational && field.p <= n)
        throw BadInputError("family: prime modulus must exceed n");
    if (!j.contains("thetas") || static_cast<int>(j.at("thetas").size()) != d)
        throw BadInputError("family: \"thetas\" must be an array of d matrices");
    std::vector<PolyMatrix<K>> thetas;
    for (int m = 0; m < d; ++m) {
        const json& rows = j.at("thetas").at(static_cast<std::size_t>(m));
        if (static_cast<int>(rows.size()) != n * n)
            throw BadInputError("family: theta " + std::to_string(m + 1) + " must hold " + std::to_string(n * n) +
                                " row-major entries");
        PolyMatrix<K> mat(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                mat(i, k) = parse_unipoly<K>(rows.at(static_cast<std::size_t>(i * n + k)).get<std::string>(), field);
        thetas.push_back(std::move(mat));
    }
    return PolyMatrixTuple<K>(n, d, std::move(thetas));
}

}  // namespace specdata

#endif
