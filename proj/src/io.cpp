#include "superpoisson/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace poisson::io {

using json = nlohmann::ordered_json;

namespace {

int require_dim(const json& j, const char* key) {
    if (!j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<int>();
}

int require_index(const json& v, const std::string& path, int dim) {
    if (!v.is_number_integer())
        throw ParseError(path + ": basis index must be an integer");
    const long long idx = v.get<long long>();
    if (idx < 0 || idx >= dim)
        throw ParseError(path + ": basis index " + std::to_string(idx) + " out of range [0, " +
                         std::to_string(dim) + ")");
    return static_cast<int>(idx);
}

Scalar require_coeff(const json& v, const std::string& path) {
    if (!v.is_string())
        throw ParseError(path + ": coefficient must be a rational string \"p\" or \"p/q\"");
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<StructEntry<Scalar>> parse_products(const json& arr, const std::string& key,
                                                int dim) {
    if (!arr.is_array())
        throw ParseError("field '" + key + "' must be an array of product records");
    std::vector<StructEntry<Scalar>> entries;
    for (size_t n = 0; n < arr.size(); ++n) {
        const std::string path = key + "[" + std::to_string(n) + "]";
        const json& rec = arr[n];
        if (!rec.is_object() || !rec.contains("left") || !rec.contains("right") ||
            !rec.contains("result"))
            throw ParseError(path + ": product records need fields left, right, result");
        const int left = require_index(rec.at("left"), path + ".left", dim);
        const int right = require_index(rec.at("right"), path + ".right", dim);
        const json& result = rec.at("result");
        if (!result.is_array())
            throw ParseError(path + ".result must be an array");
        for (size_t m = 0; m < result.size(); ++m) {
            const std::string rpath = path + ".result[" + std::to_string(m) + "]";
            const json& term = result[m];
            if (!term.is_object() || !term.contains("basis") || !term.contains("coeff"))
                throw ParseError(rpath + ": result terms need fields basis, coeff");
            const int basis = require_index(term.at("basis"), rpath + ".basis", dim);
            const Scalar coeff = require_coeff(term.at("coeff"), rpath + ".coeff");
            if (!coeff.is_zero())
                entries.push_back({left, right, basis, coeff});
        }
    }
    return entries;
}

json products_json(const SuperAlgebra<Scalar>& A) {
    json arr = json::array();
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            json result = json::array();
            for (int k = 0; k < A.dim(); ++k)
                if (!A.c(i, j, k).is_zero())
                    result.push_back(json{{"basis", k}, {"coeff", A.c(i, j, k).str()}});
            if (!result.empty())
                arr.push_back(json{{"left", i}, {"right", j}, {"result", std::move(result)}});
        }
    return arr;
}

} // namespace

Parsed parse_algebra_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("top level must be an object");

    const GradedBasis basis{require_dim(j, "dim_even"), require_dim(j, "dim_odd")};
    const bool has_products = j.contains("products");
    const bool has_pair = j.contains("dot") || j.contains("bracket");
    if (has_products && has_pair)
        throw ParseError("file mixes 'products' with 'dot'/'bracket'");
    if (has_pair) {
        if (!j.contains("dot") || !j.contains("bracket"))
            throw ParseError("pair files need both 'dot' and 'bracket'");
        auto dot = parse_products(j.at("dot"), "dot", basis.dim());
        auto bracket = parse_products(j.at("bracket"), "bracket", basis.dim());
        return PoissonPair{SuperAlgebra<Scalar>(basis, dot), SuperAlgebra<Scalar>(basis, bracket)};
    }
    if (!has_products)
        throw ParseError("missing field 'products' (or 'dot'/'bracket' for a pair file)");
    return SuperAlgebra<Scalar>(basis, parse_products(j.at("products"), "products", basis.dim()));
}

Parsed load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_file(buffer.str());
}

std::string serialize(const SuperAlgebra<Scalar>& A) {
    json j;
    j["dim_even"] = A.basis().dim_even;
    j["dim_odd"] = A.basis().dim_odd;
    j["products"] = products_json(A);
    return j.dump(2) + "\n";
}

std::string serialize(const PoissonPair& pair) {
    json j;
    j["dim_even"] = pair.dot.basis().dim_even;
    j["dim_odd"] = pair.dot.basis().dim_odd;
    j["dot"] = products_json(pair.dot);
    j["bracket"] = products_json(pair.bracket);
    return j.dump(2) + "\n";
}

} // namespace poisson::io
