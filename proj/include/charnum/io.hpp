#pragma once

// JSON encodings. Big integers are always written as decimal strings; on
// input both strings and JSON integers are accepted.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "euler.hpp"
#include "integer.hpp"
#include "partition.hpp"
#include "realization.hpp"
#include "symfunc.hpp"

namespace charnum::io {

using json = nlohmann::ordered_json;

inline integer integer_from_json(const json& j)
{
    if (j.is_string())
        return from_decimal(j.get<std::string>());
    if (j.is_number_integer())
        return integer(j.get<long long>());
    if (j.is_number_unsigned())
        return integer(j.get<unsigned long long>());
    throw error("expected an integer (JSON integer or decimal string), got " + j.dump());
}

inline json to_json(const integer& v) { return v.str(); }

inline std::vector<integer> integers_from_json(const json& j)
{
    if (!j.is_array())
        throw error("expected an array of integers, got " + j.dump());
    std::vector<integer> out;
    for (const auto& e : j)
        out.push_back(integer_from_json(e));
    return out;
}

inline json to_json(const std::vector<integer>& v)
{
    json a = json::array();
    for (const auto& e : v)
        a.push_back(e.str());
    return a;
}

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw error("a partition is a JSON array of positive integers, got " + j.dump());
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw error("partition parts must be integers, got " + e.dump());
        parts.push_back(e.get<int>());
    }
    return Partition(std::move(parts));
}

inline json to_json(const std::vector<Partition>& index)
{
    json a = json::array();
    for (const auto& p : index)
        a.push_back(to_json(p));
    return a;
}

inline json to_json(const SigmaPoly& poly)
{
    json a = json::array();
    for (const auto& [e, c] : poly.terms())
        a.push_back({{"exponents", e}, {"coeff", c.str()}});
    return a;
}

inline SigmaPoly sigma_poly_from_json(const json& j)
{
    if (!j.is_array())
        throw error("a sigma polynomial is a JSON array of terms");
    std::size_t vars = 0;
    for (const auto& t : j)
        vars = std::max(vars, t.at("exponents").size());
    SigmaPoly p(vars);
    for (const auto& t : j) {
        auto e = t.at("exponents").get<std::vector<int>>();
        e.resize(vars, 0);
        p.add_term(std::move(e), integer_from_json(t.at("coeff")));
    }
    return p;
}

inline json to_json(const TransitionMatrix& a, bool with_det = true)
{
    json rows = json::array();
    for (std::size_t i = 0; i < a.entries.rows(); ++i)
        rows.push_back(to_json(a.entries.row(i)));
    json j = {{"n", a.n}, {"index", to_json(a.index)}, {"entries", rows}};
    if (with_det)
        j["det"] = det_int(a.entries).str();
    return j;
}

inline TransitionMatrix transition_matrix_from_json(const json& j)
{
    TransitionMatrix a;
    a.n = j.at("n").get<int>();
    a.index = enumerate_partitions(a.n);
    std::vector<Partition> listed;
    for (const auto& p : j.at("index"))
        listed.push_back(partition_from_json(p));
    if (listed != a.index)
        throw error("matrix index is not the canonical partition order for n = " + std::to_string(a.n));
    const auto& rows = j.at("entries");
    a.entries = IntMatrix(a.index.size(), a.index.size());
    if (rows.size() != a.index.size())
        throw error("matrix has the wrong number of rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto row = integers_from_json(rows[i]);
        if (row.size() != a.index.size())
            throw error("matrix row has the wrong length");
        for (std::size_t k = 0; k < row.size(); ++k)
            a.entries(i, k) = row[k];
    }
    return a;
}

inline json to_json(const CharVector& v)
{
    json j = {{"dim", v.dim}, {"basis", basis_name(v.basis)}, {"index", to_json(v.index())}, {"entries", to_json(v.entries)}};
    if (v.formal)
        j["formal"] = true;
    return j;
}

inline CharVector char_vector_from_json(const json& j)
{
    if (!j.is_object())
        throw error("a characteristic vector is a JSON object, got " + j.dump());
    const int dim = j.at("dim").get<int>();
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    if (j.contains("index")) {
        std::vector<Partition> listed;
        for (const auto& p : j.at("index"))
            listed.push_back(partition_from_json(p));
        if (listed != enumerate_partitions(dim))
            throw error("vector index is not the canonical partition order for dimension " + std::to_string(dim));
    }
    return CharVector(dim, basis, integers_from_json(j.at("entries")), j.value("formal", false));
}

inline json to_json(const EmbeddedVariety& x)
{
    json j = to_json(x.svec);
    j["divisibility"] = x.divisibility.str();
    return j;
}

inline EmbeddedVariety embedded_variety_from_json(const json& j)
{
    return EmbeddedVariety(char_vector_from_json(j), integer_from_json(j.at("divisibility")));
}

inline json to_json(const DivisibilityReport& r)
{
    return {{"dim", r.dim},
            {"combination", r.combination},
            {"value", r.value.str()},
            {"modulus", r.modulus.str()},
            {"divisible", r.divisible}};
}

inline json to_json(const GeneratorFamily& f)
{
    json bases = json::array();
    for (int i = 1; i <= f.n(); ++i)
        bases.push_back({{"dim", i},
                         {"plus", to_json(f.base(i, Sign::plus).entries)},
                         {"minus", to_json(f.base(i, Sign::minus).entries)}});
    return {{"n", f.n()}, {"bases", bases}};
}

/// {n, bases:[{dim, plus:[...], minus:[...]}]}; every dimension 1..n must be
/// listed exactly once.
inline GeneratorFamily generator_family_from_json(const json& j)
{
    if (!j.is_object())
        throw error("a generator family is a JSON object");
    const int n = j.at("n").get<int>();
    if (n < 0)
        throw error("generator family needs n >= 0");
    std::vector<std::vector<integer>> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& b : j.at("bases")) {
        const int d = b.at("dim").get<int>();
        if (d < 1 || d > n)
            throw error("generator base dimension " + std::to_string(d) + " outside 1.." + std::to_string(n));
        auto k = static_cast<std::size_t>(d - 1);
        if (seen[k])
            throw error("generator base dimension " + std::to_string(d) + " listed twice");
        seen[k] = true;
        plus[k] = integers_from_json(b.at("plus"));
        minus[k] = integers_from_json(b.at("minus"));
    }
    std::vector<CharVector> pv, mv;
    for (int d = 1; d <= n; ++d) {
        auto k = static_cast<std::size_t>(d - 1);
        if (!seen[k])
            throw error("generator base for dimension " + std::to_string(d) + " is missing");
        pv.emplace_back(d, Basis::s, plus[k]);
        mv.emplace_back(d, Basis::s, minus[k]);
    }
    return GeneratorFamily(n, std::move(pv), std::move(mv), true);
}

inline json to_json(const Recipe& r)
{
    json items = json::array();
    for (const auto& it : r.items)
        items.push_back({{"partition", to_json(it.generator)}, {"sign", sign_name(it.sign)}, {"multiplicity", it.multiplicity.str()}});
    return {{"target", to_json(r.target)},
            {"basis", basis_name(r.target.basis)},
            {"items", items},
            {"realized", to_json(r.realized)},
            {"family", r.user_family ? "user" : "default"},
            {"family_hash", r.family_hash}};
}

inline Recipe recipe_from_json(const json& j)
{
    Recipe r;
    r.target = char_vector_from_json(j.at("target"));
    if (j.contains("basis") && parse_basis(j.at("basis").get<std::string>()) != r.target.basis)
        throw error("recipe basis disagrees with its target");
    for (const auto& it : j.at("items")) {
        RecipeItem item{partition_from_json(it.at("partition")), parse_sign(it.at("sign").get<std::string>()),
                        integer_from_json(it.at("multiplicity"))};
        if (item.multiplicity < 1)
            throw error("recipe multiplicities must be positive");
        r.items.push_back(std::move(item));
    }
    r.realized = char_vector_from_json(j.at("realized"));
    r.family_hash = j.value("family_hash", "");
    r.user_family = j.value("family", "default") == "user";
    return r;
}

inline json to_json(const RationalRealization& r)
{
    json coeffs = json::array();
    for (std::size_t k = 0; k < r.coefficients.size(); ++k) {
        const auto& [p, x] = r.coefficients[k];
        coeffs.push_back({{"partition", to_json(p)}, {"coefficient", x.str()}, {"diagonal", r.diagonal[k].str()}});
    }
    return {{"coefficients", coeffs}, {"all_integer", r.all_integer}};
}

inline json to_json(const StratifiedSpace& s)
{
    json strata = json::array();
    for (const auto& st : s.strata())
        strata.push_back({{"label", st.label}, {"chi_c", st.chi_c.str()}});
    return {{"strata", strata}};
}

inline StratifiedSpace stratified_space_from_json(const json& j)
{
    std::vector<Stratum> strata;
    for (const auto& st : j.at("strata"))
        strata.push_back({st.at("label").get<std::string>(), integer_from_json(st.at("chi_c"))});
    return StratifiedSpace(std::move(strata));
}

inline json to_json(const ConstructibleFunction& f)
{
    json values = json::object();
    for (const auto& [k, v] : f.values)
        values[k] = v.str();
    return {{"values", values}};
}

inline ConstructibleFunction constructible_function_from_json(const json& j)
{
    ConstructibleFunction f;
    for (const auto& [k, v] : j.at("values").items())
        f.values[k] = integer_from_json(v);
    return f;
}

} // namespace charnum::io
