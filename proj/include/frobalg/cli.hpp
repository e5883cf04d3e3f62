// cli.hpp
// The four commands behind the frobalg executable. Each returns its JSON
// report, a human summary and the exit code; the executable only does
// argument parsing and I/O.
//
// Exit codes: 0 success, 1 a requested check failed, 2 bad input or
// parameters. Every report carries "status" and "reason".

#pragma once

#include "frobalg/io.hpp"
#include "frobalg/random.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace frobalg::cli {

inline constexpr int report_schema_version = 1;

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_bad_input = 2 };

struct CommandResult {
    int exit_code = exit_ok;
    Json report;
    std::string summary;
    /// Algebra file produced by convert/generate, with its destination.
    std::optional<std::string> output_text;
    std::optional<std::string> output_path;
};

enum class Presentation { deltaeps, kappa, phi };

inline std::optional<Presentation> parse_presentation(const std::string& s) {
    if (s == "deltaeps") return Presentation::deltaeps;
    if (s == "kappa") return Presentation::kappa;
    if (s == "phi") return Presentation::phi;
    return std::nullopt;
}

inline std::string to_string(Presentation p) {
    switch (p) {
    case Presentation::deltaeps: return "deltaeps";
    case Presentation::kappa: return "kappa";
    case Presentation::phi: return "phi";
    }
    return "?";
}

/// Destination for a produced file: the explicit path, else the file name in
/// $FROBALG_OUT_DIR, else the file name in the working directory.
inline std::string default_output_path(const std::optional<std::string>& explicit_path, const std::string& file_name) {
    if (explicit_path) return *explicit_path;
    if (const char* dir = std::getenv("FROBALG_OUT_DIR"); dir && *dir)
        return (std::filesystem::path(dir) / file_name).string();
    return file_name;
}

namespace detail {

inline Json header(const std::string& command) {
    Json j;
    j["schema_version"] = report_schema_version;
    j["command"] = command;
    j["status"] = "pass";
    j["exit_code"] = 0;
    j["reason"] = "";
    return j;
}

inline CommandResult finish(Json report, int code, const std::string& reason, std::string summary = {}) {
    report["status"] = code == exit_ok ? "pass" : (code == exit_check_failed ? "fail" : "error");
    report["exit_code"] = code;
    report["reason"] = reason;
    if (summary.empty()) summary = report["command"].get<std::string>() + ": " + reason + "\n";
    return {code, std::move(report), std::move(summary), std::nullopt, std::nullopt};
}

inline CommandResult input_error(const std::string& command, const std::string& reason) {
    return finish(header(command), exit_bad_input, reason);
}

inline Json null_basis_json(const std::vector<std::vector<Scalar>>& basis) {
    Json out = Json::array();
    for (const auto& v : basis) out.push_back(to_json(v));
    return out;
}

inline Json axiom_json(const AxiomResult& a) {
    Json j;
    j["name"] = a.name;
    j["pass"] = a.pass;
    j["witness"] = a.difference ? to_json(*a.difference) : Json(nullptr);
    return j;
}

inline Json unit_json(const std::optional<Unit>& u) {
    if (!u) return nullptr;
    Json j;
    j["element"] = to_json(u->element.coefficients());
    j["inverse"] = to_json(u->inverse.coefficients());
    return j;
}

inline Json flag_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline std::string summarize(const Json& report, const std::vector<AxiomResult>& items) {
    std::ostringstream s;
    for (const auto& a : items) s << (a.pass ? "  pass  " : "  FAIL  ") << a.name << "\n";
    s << report["command"].get<std::string>() << ": " << report["status"].get<std::string>() << " ("
      << report["reason"].get<std::string>() << ")\n";
    return s.str();
}

/// Samples `count` unit pairs (g, h) and verifies that the twisted pairing is
/// again Frobenius and that relate_pairings recovers the twist.
inline AxiomResult seeded_twist_check(const Algebra& alg, const Pairing& k, std::uint64_t seed, std::size_t count) {
    SeededRng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const Unit g = random_unit(alg, rng);
        const Unit h = random_unit(alg, rng);
        try {
            const TwistedStructures t = twist_pairing(alg, k, g, h);
            relate_pairings(alg, k, t.kappa);
        } catch (const std::exception&) {
            return {"seeded_twists", false, std::nullopt};
        }
    }
    return {"seeded_twists", true, std::nullopt};
}

} // namespace detail

/// Report for a command line that could not be parsed.
inline CommandResult usage_error(const std::string& reason) { return detail::input_error("usage", reason); }

// ---------------------------------------------------------------- check

struct CheckOptions {
    std::uint64_t seed = default_seed;
    std::size_t samples = 5;
};

inline CommandResult run_check(const std::string& path, const CheckOptions& opts = {}) {
    std::optional<AlgebraFile> loaded;
    try {
        loaded = read_algebra_file(path);
    } catch (const std::exception& e) {
        return detail::input_error("check", e.what());
    }
    AlgebraFile& file = *loaded;
    Json report = detail::header("check");
    report["input"] = path;
    report["seed"] = opts.seed;

    FrobeniusPackage& pkg = file.package;
    Report r;
    try {
        r = analyze(pkg);
    } catch (const std::logic_error& e) {
        return detail::finish(std::move(report), exit_check_failed, e.what());
    }

    std::optional<Pairing> reference;
    if (pkg.pairing) reference = pkg.pairing;
    else if (pkg.delta_eps) reference = Pairing(compose(pkg.delta_eps->eps(), pkg.algebra.m()));
    else if (pkg.phi_rho) reference = pairing_from_phi(pkg.algebra, *pkg.phi_rho);

    Json null_witness = nullptr;
    if (reference) {
        const auto nd = check_nondegenerate(*reference);
        if (!nd.null_witness.empty()) null_witness = detail::null_basis_json(nd.null_witness);
        if (r.ok() && opts.samples > 0) r.items.push_back(detail::seeded_twist_check(pkg.algebra, *reference, opts.seed, opts.samples));
    }

    Json checks = Json::array();
    for (const auto& a : r.items) checks.push_back(detail::axiom_json(a));
    report["checks"] = std::move(checks);
    report["null_witness"] = std::move(null_witness);
    Json flags;
    flags["invariant"] = detail::flag_json(pkg.flags.invariant);
    flags["nondegenerate"] = detail::flag_json(pkg.flags.nondegenerate);
    flags["bimodule_compat"] = detail::flag_json(pkg.flags.bimodule_compat);
    flags["symmetric"] = detail::flag_json(pkg.flags.symmetric);
    report["flags"] = std::move(flags);

    std::string reason = "all checks passed";
    int code = exit_ok;
    for (const auto& a : r.items)
        if (!a.pass) {
            code = exit_check_failed;
            reason = "check failed: " + a.name;
            break;
        }
    report = detail::finish(std::move(report), code, reason).report;
    std::string summary = detail::summarize(report, r.items);
    return {code, std::move(report), std::move(summary), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------- convert

inline CommandResult run_convert(const std::string& path, Presentation from, Presentation to,
                                 const std::optional<std::string>& out = std::nullopt) {
    std::optional<AlgebraFile> loaded;
    try {
        loaded = read_algebra_file(path);
    } catch (const std::exception& e) {
        return detail::input_error("convert", e.what());
    }
    AlgebraFile& file = *loaded;
    Json report = detail::header("convert");
    report["input"] = path;
    report["from"] = to_string(from);
    report["to"] = to_string(to);
    report["null_witness"] = nullptr;

    FrobeniusPackage& pkg = file.package;
    const Algebra& alg = pkg.algebra;
    const bool present = (from == Presentation::deltaeps && pkg.delta_eps) ||
                         (from == Presentation::kappa && pkg.pairing) || (from == Presentation::phi && pkg.phi_rho);
    if (!present) return detail::input_error("convert", "input has no " + to_string(from) + " block");
    if (!check_algebra(alg).ok()) return detail::finish(std::move(report), exit_check_failed, "m, eta do not form an algebra");

    Pairing source = [&] {
        switch (from) {
        case Presentation::deltaeps: return Pairing(compose(pkg.delta_eps->eps(), alg.m()));
        case Presentation::kappa: return *pkg.pairing;
        case Presentation::phi: return pairing_from_phi(alg, *pkg.phi_rho);
        }
        return *pkg.pairing;
    }();
    if (from == Presentation::deltaeps) {
        Report co = check_coalgebra(*pkg.delta_eps);
        co.append(check_frobenius_compat(alg, *pkg.delta_eps));
        if (!co.ok()) {
            Json checks = Json::array();
            for (const auto& a : co.items) checks.push_back(detail::axiom_json(a));
            report["checks"] = std::move(checks);
            return detail::finish(std::move(report), exit_check_failed, "(delta, eps) is not a Frobenius coalgebra");
        }
    }
    if (!check_invariance(alg, source)) {
        report["invariance_defect"] = to_json(invariance_defect(alg, source));
        return detail::finish(std::move(report), exit_check_failed, "source pairing is not invariant");
    }
    const auto nd = check_nondegenerate(source);
    if (!nd.nondegenerate) {
        report["null_witness"] = detail::null_basis_json(nd.null_witness);
        return detail::finish(std::move(report), exit_check_failed, "source pairing is degenerate");
    }

    FrobeniusPackage target{alg, std::nullopt, std::nullopt, std::nullopt, {}, pkg.notes};
    switch (to) {
    case Presentation::deltaeps: target.delta_eps = coalgebra_from_pairing(alg, source); break;
    case Presentation::kappa: target.pairing = source; break;
    case Presentation::phi: target.phi_rho = phi_from_pairing(source); break;
    }
    AlgebraFile result{file.name, file.basis_labels, std::move(target)};

    const std::string stem = std::filesystem::path(path).stem().string();
    const std::string dest = default_output_path(out, stem + "." + to_string(to) + ".json");
    report["output"] = dest;
    CommandResult res = detail::finish(std::move(report), exit_ok, "converted " + to_string(from) + " to " + to_string(to));
    res.output_text = emit_algebra_file_text(result);
    res.output_path = dest;
    return res;
}

// ---------------------------------------------------------------- nakayama

struct NakayamaOptions {
    std::uint64_t seed = default_seed;
    std::size_t samples = 20;
    bool symmetrize = false;
};

inline CommandResult run_nakayama(const std::string& path, const NakayamaOptions& opts = {}) {
    std::optional<AlgebraFile> loaded;
    try {
        loaded = read_algebra_file(path);
    } catch (const std::exception& e) {
        return detail::input_error("nakayama", e.what());
    }
    AlgebraFile& file = *loaded;
    Json report = detail::header("nakayama");
    report["input"] = path;
    report["seed"] = opts.seed;

    FrobeniusPackage& pkg = file.package;
    const Algebra& alg = pkg.algebra;
    if (!check_algebra(alg).ok()) return detail::finish(std::move(report), exit_check_failed, "m, eta do not form an algebra");

    std::optional<Pairing> k;
    std::string source;
    if (pkg.pairing) {
        k = pkg.pairing;
        source = "kappa";
    } else if (pkg.delta_eps) {
        k = Pairing(compose(pkg.delta_eps->eps(), alg.m()));
        source = "deltaeps";
    } else if (pkg.phi_rho) {
        k = pairing_from_phi(alg, *pkg.phi_rho);
        source = "phi";
    } else {
        return detail::input_error("nakayama", "input has no Frobenius presentation");
    }
    report["pairing_source"] = source;
    if (!check_invariance(alg, *k)) return detail::finish(std::move(report), exit_check_failed, "pairing is not invariant");
    if (const auto nd = check_nondegenerate(*k); !nd.nondegenerate) {
        report["null_witness"] = detail::null_basis_json(nd.null_witness);
        return detail::finish(std::move(report), exit_check_failed, "pairing is degenerate");
    }

    const NakayamaReport nr = nakayama(alg, *k);
    report["nakayama"] = to_json(nr.naka.matrix());
    report["is_identity"] = nr.is_identity;
    report["is_algebra_morphism"] = nr.is_algebra_morphism;
    report["satisfies_defining_relation"] = nr.satisfies_defining_relation;
    Json inner;
    inner["witness"] = detail::unit_json(nr.inner.witness);
    inner["certified"] = nr.inner.certified;
    inner["solution_space_dim"] = nr.inner.solution_space.size();
    report["inner"] = std::move(inner);

    std::vector<AxiomResult> items{{"defining_relation", nr.satisfies_defining_relation, std::nullopt},
                                   {"unital_algebra_morphism", nr.is_algebra_morphism, std::nullopt}};

    // ℧ for κ ∘ (id ⊗ r_g) must equal ℧ ∘ ad_g.
    SeededRng rng(opts.seed);
    bool twists_ok = true;
    for (std::size_t i = 0; i < opts.samples && twists_ok; ++i) {
        const Unit g = random_unit(alg, rng);
        const Pairing twisted(compose(k->kappa(), tensor(id(alg.carrier()), right_action(alg, g.element))));
        twists_ok = nakayama_automorphism(twisted) == compose(nr.naka, ad(alg, g));
    }
    items.push_back({"twist_rule", twists_ok, std::nullopt});
    Json twist;
    twist["samples"] = opts.samples;
    twist["pass"] = twists_ok;
    report["twist_rule"] = std::move(twist);

    if (opts.symmetrize) {
        const auto sym = symmetrize(alg, *k);
        if (sym) {
            Matrix gram(alg.dim(), alg.dim());
            for (std::size_t a = 0; a < alg.dim(); ++a)
                for (std::size_t b = 0; b < alg.dim(); ++b) gram(a, b) = (*sym)(a, b);
            report["symmetrized_kappa"] = to_json(gram);
        } else {
            report["symmetrized_kappa"] = nullptr;
        }
    }

    int code = exit_ok;
    std::string reason = nr.is_identity ? "pairing is symmetric"
                         : nr.inner.witness ? "Nakayama automorphism is inner"
                         : nr.inner.certified ? "Nakayama automorphism is not inner"
                                              : "no inner witness found (search not exhaustive)";
    for (const auto& a : items)
        if (!a.pass) {
            code = exit_check_failed;
            reason = "check failed: " + a.name;
            break;
        }
    report = detail::finish(std::move(report), code, reason).report;
    std::string summary = detail::summarize(report, items);
    return {code, std::move(report), std::move(summary), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------- generate

struct GenerateParams {
    std::string kind;                       // unit | matrix | group | quantum_plane | canonical_dual
    std::size_t n = 2;                      // matrix size
    std::optional<std::vector<std::string>> twist_diag;   // matrix: κ_u with u = diag(...)
    std::optional<std::size_t> cyclic;      // group
    std::optional<std::size_t> symmetric;   // group
    std::optional<std::string> table_path;  // group: JSON Cayley table
    std::string q = "2";                    // quantum_plane
    std::size_t dim = 2;                    // canonical_dual
};

namespace detail {

inline CayleyTable read_cayley_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("Cayley table must be an array of rows");
    CayleyTable t;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("Cayley table must be an array of rows");
        auto& r = t.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_unsigned()) throw ParseError("Cayley table entries must be non-negative integers");
            r.push_back(v.get<std::size_t>());
        }
    }
    return t;
}

inline AlgebraFile generate_file(const GenerateParams& p) {
    std::string name;
    std::vector<std::string> labels;
    std::optional<FrobeniusPackage> pkg_out;
    if (p.kind == "unit") {
        name = "unit";
        labels = {"1"};
        pkg_out = unit_algebra();
    } else if (p.kind == "matrix") {
        if (p.n == 0) throw std::invalid_argument("--n must be positive");
        FrobeniusPackage pkg = matrix_algebra(p.n);
        for (std::size_t i = 1; i <= p.n; ++i)
            for (std::size_t j = 1; j <= p.n; ++j)
                labels.push_back("E" + std::to_string(i) + (p.n > 9 ? "," : "") + std::to_string(j));
        name = "M" + std::to_string(p.n);
        if (p.twist_diag) {
            if (p.twist_diag->size() != p.n) throw std::invalid_argument("--twist-diag needs n entries");
            Matrix u(p.n, p.n);
            for (std::size_t i = 0; i < p.n; ++i) u(i, i) = Scalar::parse((*p.twist_diag)[i]);
            if (determinant(u).is_zero()) throw std::invalid_argument("--twist-diag entries must be nonzero");
            pkg.pairing = matrix_twisted_pairing(p.n, u);
            pkg.delta_eps.reset();
            std::string diag;
            for (std::size_t i = 0; i < p.n; ++i) diag += (i ? "," : "") + u(i, i).to_string();
            pkg.notes["twist_diag"] = diag;
            name += "_twisted";
        }
        pkg_out = std::move(pkg);
    } else if (p.kind == "group") {
        const int given = int(p.cyclic.has_value()) + int(p.symmetric.has_value()) + int(p.table_path.has_value());
        if (given != 1) throw std::invalid_argument("group: give exactly one of --cyclic, --symmetric, --table");
        if (p.cyclic) {
            const std::size_t n = *p.cyclic;
            name = "Q[Z" + std::to_string(n) + "]";
            pkg_out = group_algebra(cyclic_group_table(n), "QZ" + std::to_string(n));
            for (std::size_t i = 0; i < n; ++i) labels.push_back("g^" + std::to_string(i));
        } else if (p.symmetric) {
            const std::size_t k = *p.symmetric;
            if (k > 5) throw std::invalid_argument("--symmetric is limited to degree 5");
            name = "Q[S" + std::to_string(k) + "]";
            pkg_out = group_algebra(symmetric_group_table(k), "QS" + std::to_string(k));
            std::vector<std::size_t> perm(k);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                std::string label;
                for (auto v : perm) label += std::to_string(v);
                labels.push_back(label);
            } while (std::next_permutation(perm.begin(), perm.end()));
        } else {
            const CayleyTable t = read_cayley_table(*p.table_path);
            name = "Q[G]";
            pkg_out = group_algebra(t, "QG");
            for (std::size_t i = 0; i < t.size(); ++i) labels.push_back("g" + std::to_string(i));
        }
    } else if (p.kind == "quantum_plane") {
        const Scalar q = Scalar::parse(p.q);
        if (q.is_zero()) throw std::invalid_argument("quantum_plane: q must be nonzero");
        name = "Lambda_" + q.to_short_string();
        labels = {"1", "x", "y", "xy"};
        pkg_out = quantum_plane(q);
    } else if (p.kind == "canonical_dual") {
        if (p.dim == 0) throw std::invalid_argument("--dim must be positive");
        name = "canonical_dual_" + std::to_string(p.dim);
        pkg_out = canonical_dual_frobenius(p.dim);
        for (std::size_t i = 0; i < p.dim; ++i)
            for (std::size_t j = 0; j < p.dim; ++j) labels.push_back("x" + std::to_string(i) + "*x^" + std::to_string(j));
    } else {
        throw std::invalid_argument("unknown kind \"" + p.kind + "\"");
    }
    return {std::move(name), std::move(labels), std::move(*pkg_out)};
}

inline std::string file_stem(std::string name) {
    for (char& c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) c = '_';
    return name;
}

} // namespace detail

inline CommandResult run_generate(const GenerateParams& p, const std::optional<std::string>& out = std::nullopt) {
    std::optional<AlgebraFile> generated;
    try {
        generated = detail::generate_file(p);
    } catch (const std::exception& e) {
        return detail::input_error("generate", e.what());
    }
    const AlgebraFile& f = *generated;
    Json report = detail::header("generate");
    report["kind"] = p.kind;
    report["name"] = f.name;
    report["carrier_dim"] = f.package.algebra.dim();
    const std::string dest = default_output_path(out, detail::file_stem(f.name) + ".json");
    report["output"] = dest;
    CommandResult res = detail::finish(std::move(report), exit_ok, "generated " + f.name);
    res.output_text = emit_algebra_file_text(f);
    res.output_path = dest;
    return res;
}

// ---------------------------------------------------------------- text form

/// One "key: value" line per scalar report field, nested values as compact JSON.
inline std::string report_as_text(const Json& report) {
    std::ostringstream s;
    for (const auto& [k, v] : report.items()) s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return s.str();
}

} // namespace frobalg::cli
