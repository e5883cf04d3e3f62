// io.hpp
// Versioned JSON structure-constant files.
//
// Every rational is a "p/q" string (q > 0, lowest terms). Tables are
// input-major:
//   m[i][j][k]     coefficient of e_k in e_i·e_j
//   eta[k]         coefficient of e_k in η
//   delta[i][j][k] coefficient of e_j ⊗ e_k in Δ(e_i)
//   eps[i]         ε(e_i)
//   kappa[i][j]    κ(e_i, e_j)
//   phi[i][j]      coefficient of e^j in φ(e_i)
// Keys are written in a fixed order, so emitting is deterministic.

#pragma once

#include "frobalg/zoo.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobalg {

using Json = nlohmann::ordered_json;

inline constexpr int algebra_file_schema_version = 1;

/// Malformed or inconsistent file content.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AlgebraFile {
    std::string name;
    std::vector<std::string> basis_labels;
    FrobeniusPackage package;
};

// ---------------------------------------------------------------- encoding

inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Json to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

inline Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

namespace detail {
/// t[i][j][k] from a (n*n) x n matrix with rows j*n+k and columns i,
/// or from a n x (n*n) matrix with row k and columns i*n+j.
inline Json cube_from_columns(const Matrix& mm, std::size_t n, bool product) {
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < n; ++k)
                row.push_back(to_json(product ? mm(k, i * n + j) : mm(j * n + k, i)));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}
} // namespace detail

inline Json emit_algebra_file(const AlgebraFile& f) {
    const auto& pkg = f.package;
    const Algebra& alg = pkg.algebra;
    const std::size_t n = alg.dim();

    Json j;
    j["schema_version"] = algebra_file_schema_version;
    j["name"] = f.name;
    j["carrier_dim"] = n;
    j["basis_labels"] = f.basis_labels;
    Json meta = Json::object();
    for (const auto& [k, v] : pkg.notes) meta[k] = v;
    j["meta"] = std::move(meta);
    j["m"] = detail::cube_from_columns(alg.m().matrix(), n, true);
    j["eta"] = to_json(alg.eta().matrix().column_vector(0));
    if (pkg.delta_eps) {
        j["delta"] = detail::cube_from_columns(pkg.delta_eps->delta().matrix(), n, false);
        std::vector<Scalar> eps(pkg.delta_eps->eps().matrix().entries().begin(),
                                pkg.delta_eps->eps().matrix().entries().end());
        j["eps"] = to_json(eps);
    }
    if (pkg.pairing) {
        Matrix gram(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) gram(a, b) = (*pkg.pairing)(a, b);
        j["kappa"] = to_json(gram);
    }
    if (pkg.phi_rho) j["phi"] = to_json(pkg.phi_rho->matrix().transpose());
    return j;
}

inline std::string emit_algebra_file_text(const AlgebraFile& f) { return emit_algebra_file(f).dump(2) + "\n"; }

// ---------------------------------------------------------------- decoding

namespace detail {
inline Scalar parse_scalar(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rational must be a \"p/q\" string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline const Json& require(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::vector<Scalar> parse_vector(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw ParseError(where + ": expected an array of length " + std::to_string(n));
    std::vector<Scalar> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(parse_scalar(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline Matrix parse_square(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = parse_vector(j[i], n, where + "[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < n; ++k) out(i, k) = std::move(row[k]);
    }
    return out;
}

inline StructureConstants parse_cube(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " planes");
    StructureConstants out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != n) throw ParseError(w + ": expected " + std::to_string(n) + " rows");
        for (std::size_t k = 0; k < n; ++k) out[i].push_back(parse_vector(j[i][k], n, w + "[" + std::to_string(k) + "]"));
    }
    return out;
}
} // namespace detail

inline AlgebraFile parse_algebra_file(const Json& j) {
    using namespace detail;
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    const Json& ver = require(j, "schema_version");
    if (!ver.is_number_integer() || ver.get<int>() != algebra_file_schema_version)
        throw ParseError("unsupported schema_version");
    const Json& dim = require(j, "carrier_dim");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw ParseError("carrier_dim must be a positive integer");
    const std::size_t n = dim.get<std::size_t>();

    std::string name;
    std::vector<std::string> labels;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("name must be a string");
        name = j.at("name").get<std::string>();
    }
    if (j.contains("basis_labels")) {
        const Json& given = j.at("basis_labels");
        if (!given.is_array() || given.size() != n) throw ParseError("basis_labels must have carrier_dim entries");
        for (const auto& l : given) {
            if (!l.is_string()) throw ParseError("basis_labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }

    const Obj a("A", n);
    Algebra alg = algebra_from_structure_constants(a, parse_cube(require(j, "m"), n, "m"),
                                                   parse_vector(require(j, "eta"), n, "eta"));
    FrobeniusPackage pkg{std::move(alg), std::nullopt, std::nullopt, std::nullopt, {}, {}};

    if (j.contains("meta")) {
        if (!j.at("meta").is_object()) throw ParseError("meta must be an object");
        for (const auto& [k, v] : j.at("meta").items()) {
            if (!v.is_string()) throw ParseError("meta values must be strings");
            pkg.notes[k] = v.get<std::string>();
        }
    }
    if (j.contains("delta") != j.contains("eps")) throw ParseError("delta and eps must appear together");
    if (j.contains("delta")) {
        const StructureConstants d = parse_cube(j.at("delta"), n, "delta");
        Matrix dm(n * n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) dm(p * n + q, i) = d[i][p][q];
        pkg.delta_eps = Coalgebra(a, Mor({a}, {a, a}, std::move(dm)), linear_form(a, parse_vector(j.at("eps"), n, "eps")));
    }
    if (j.contains("kappa")) pkg.pairing = pairing_from_gram(a, parse_square(j.at("kappa"), n, "kappa"));
    if (j.contains("phi")) pkg.phi_rho = Mor({a}, {left_dual(a)}, parse_square(j.at("phi"), n, "phi").transpose());
    return {std::move(name), std::move(labels), std::move(pkg)};
}

inline AlgebraFile parse_algebra_file_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_algebra_file(j);
}

inline AlgebraFile read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_file_text(ss.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace frobalg
