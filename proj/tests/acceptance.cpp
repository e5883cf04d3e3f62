#include "frobalg/frobalg.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace frobalg;
namespace fs = std::filesystem;

namespace {

/// Collects failures for one criterion; the first few are printed.
struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

bool run_criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Tally&)>& body) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << limit_seconds << " s";
        t.failures.push_back(os.str());
    }
    const bool pass = t.failures.empty();
    std::printf("[%s] AC%d %s (%zu checks, %.2f s)\n", pass ? "PASS" : "FAIL", number, title.c_str(), t.checks, secs);
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::printf("       %s\n", t.failures[i].c_str());
    return pass;
}

Pairing suite_pairing(const FrobeniusPackage& pkg) { return kappa_from_counit(pkg.algebra, *pkg.delta_eps); }

// ---------------------------------------------------------------- AC1

void duality_suite(Tally& t) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const Obj u("U", n);
        t.expect(check_zigzag(u).all(), "zig-zag, dim " + std::to_string(n));
        const auto s = check_evaluation_sovereignty(u);
        t.expect(s.wee_equals_eew && s.duals_agree, "evaluation sovereignty, dim " + std::to_string(n));
    }
    SeededRng rng(101);
    for (int i = 0; i < 50; ++i) {
        const auto a = static_cast<std::size_t>(rng.uniform(1, 8)), b = static_cast<std::size_t>(rng.uniform(1, 8));
        const Obj u("U", a), v("V", b);
        const Mor f(Shape{u}, Shape{v}, random_matrix(rng, b, a, 4, 3));
        t.expect(transpose_left(f) == transpose_right(f), "left and right transposes, sample " + std::to_string(i));
        const Mor w(Shape{u}, Shape{left_dual(v)}, random_matrix(rng, b, a, 4, 3));
        t.expect(eew(wee(w)) == w, "eew∘wee, sample " + std::to_string(i));
    }
}

// ---------------------------------------------------------------- AC2

void equivalence_suite(Tally& t) {
    const auto suite = standard_suite();
    t.expect(suite.size() == 12, "suite has 12 packages");
    for (const auto& [name, pkg] : suite) {
        const Algebra& alg = pkg.algebra;
        const Pairing k = suite_pairing(pkg);
        t.expect(check_invariance(alg, k), name + ": κ_ε invariant");
        t.expect(check_nondegenerate(k).nondegenerate, name + ": κ_ε non-degenerate");
        const Coalgebra c = coalgebra_from_pairing(alg, k);
        t.expect(check_coalgebra(c).ok(), name + ": (Δ_κ, ε_κ) coalgebra");
        t.expect(check_frobenius_compat(alg, c).ok(), name + ": (Δ_κ, ε_κ) Frobenius-compatible");
        t.expect(c.delta() == pkg.delta_eps->delta() && c.eps() == pkg.delta_eps->eps(), name + ": ε -> κ -> (Δ, ε)");
        const Mor phi = phi_from_pairing(k);
        const Pairing kphi = pairing_from_phi(alg, phi);
        t.expect(kphi.phi_l() == phi, name + ": Φ_{κ_φ,l} = φ");
        t.expect(kphi == k, name + ": κ -> Φ -> κ");
        t.expect(kappa_from_counit(alg, c) == k, name + ": κ -> ε -> κ");
    }
}

// ---------------------------------------------------------------- AC3

void symmetric_suite(Tally& t) {
    SeededRng rng(303);
    for (const auto& [name, pkg] : standard_suite()) {
        const Algebra& alg = pkg.algebra;
        const Pairing k0 = suite_pairing(pkg);
        std::vector<Pairing> ks{k0};
        for (int i = 0; i < 20; ++i)
            ks.push_back(twist_pairing(alg, k0, random_unit(alg, rng), random_unit(alg, rng)).kappa);
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const Pairing& k = ks[i];
            const bool by_nakayama = nakayama_endo_from_counit(alg, coalgebra_from_pairing(alg, k)).is_identity();
            const bool by_pairing = check_symmetric(k);
            const bool by_phi = check_symmetric_phi(k.phi_l(), alg);
            t.expect(by_nakayama == by_pairing && by_pairing == by_phi,
                     name + ": symmetry checks disagree on pairing " + std::to_string(i));
        }
    }
}

// ---------------------------------------------------------------- AC4

void nakayama_suite(Tally& t) {
    SeededRng rng(404);
    for (const auto& [name, pkg] : standard_suite()) {
        const Algebra& alg = pkg.algebra;
        const Pairing k = suite_pairing(pkg);
        const Mor naka = nakayama_automorphism(k);
        t.expect(check_nakayama_relation(k, naka), name + ": (a) defining relation");
        t.expect(is_unital_algebra_morphism(alg, naka), name + ": (b) unital algebra morphism");
        for (int i = 0; i < 20; ++i) {
            const Unit g = random_unit(alg, rng);
            const Pairing kg(compose(k.kappa(), tensor(id(alg.carrier()), right_action(alg, g.element))));
            t.expect(nakayama_automorphism(kg) == compose(naka, ad(alg, g)), name + ": (c) ℧' = ℧∘ad_g, sample " +
                                                                                std::to_string(i));
        }
    }

    const Algebra m2 = matrix_algebra_only(2);
    const Matrix u{{1, 0}, {0, 2}};
    const Pairing ku = matrix_twisted_pairing(2, u);
    const NakayamaReport r = nakayama(m2, ku);
    t.expect(!r.is_identity, "(d) ℧ for κ_u is not the identity");
    t.expect(r.inner.witness.has_value(), "(d) ℧ for κ_u is inner");
    if (r.inner.witness) t.expect(ad(m2, *r.inner.witness) == r.naka, "(d) ad of the witness reproduces ℧");
    const auto sym = symmetrize(m2, ku);
    t.expect(sym.has_value() && check_symmetric(*sym), "(d) symmetrized pairing is symmetric");

    const FrobeniusPackage l2 = quantum_plane(Scalar(2));
    const NakayamaReport rq = nakayama(l2.algebra, suite_pairing(l2));
    t.expect(!rq.is_identity, "(e) ℧ on Λ_2 is not the identity");
    t.expect(!rq.inner.witness && rq.inner.certified, "(e) non-innerness on Λ_2 is certified");
}

// ---------------------------------------------------------------- AC5

void separability(Tally& t) {
    const FrobeniusPackage m2 = matrix_algebra(2);
    const Algebra& alg = m2.algebra;
    // tr(ab) gives m∘e = 2η; doubling the pairing halves e.
    const Pairing scaled(compose(Mor::scalar(Scalar(2)), m2.pairing->kappa()));
    const Mor e = separability_idempotent(alg, scaled);
    t.expect(compose(alg.m(), e) == alg.eta(), "M2: m∘e = η");
    t.expect(heart(alg, e, e) == e, "M2: e ♥ e = e");
    t.expect(check_idempotent_invariance(alg, e), "M2: e invariant");
    for (const auto& [name, pkg] : standard_suite())
        t.expect(check_idempotent_invariance(pkg.algebra, separability_idempotent(pkg.algebra, suite_pairing(pkg))),
                 name + ": e invariant");
}

// ---------------------------------------------------------------- AC6

void twist_closure(Tally& t) {
    SeededRng rng(606);
    for (const auto& [name, pkg] : standard_suite()) {
        const Algebra& alg = pkg.algebra;
        const Obj& a = alg.carrier();
        const Pairing k = suite_pairing(pkg);
        for (int i = 0; i < 10; ++i) {
            const std::string tag = name + ", pair " + std::to_string(i);
            const Unit g = random_unit(alg, rng), h = random_unit(alg, rng);
            const TwistedStructures tw = twist_pairing(alg, k, g, h);
            t.expect(check_invariance(alg, tw.kappa), tag + ": twisted κ invariant");
            t.expect(check_nondegenerate(tw.kappa).nondegenerate, tag + ": twisted κ non-degenerate");
            const PairingRelation rel = relate_pairings(alg, k, tw.kappa);
            t.expect(compose(k.kappa(), tensor(id(a), right_action(alg, rel.g.element))) == tw.kappa.kappa(),
                     tag + ": κ∘(id⊗r_g) multiply-back");
            t.expect(compose(k.kappa(), tensor(left_action(alg, rel.h.element), id(a))) == tw.kappa.kappa(),
                     tag + ": κ∘(l_h⊗id) multiply-back");
            t.expect(convolve(alg, rel.g.element, rel.g.inverse).vec == alg.eta(), tag + ": connecting g is a unit");
            t.expect(rel.h_is_nakayama_image, tag + ": h = ℧(g)");
        }
    }
}

// ---------------------------------------------------------------- AC7

struct Run {
    int code;
    std::string out;
};

Run run_binary(const std::string& args, const fs::path& cwd) {
    const std::string cmd =
        "cd '" + cwd.string() + "' && FROBALG_OUT_DIR= '" + std::string(FROBALG_CLI_PATH) + "' " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs the pipeline in `dir` and returns every byte it produced, in order.
std::string pipeline(Tally& t, const fs::path& dir) {
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> steps{
        {"generate", "generate quantum_plane --q 2 --out l2.json"},
        {"check", "check l2.json --seed 7 --out check.json"},
        {"convert", "convert l2.json --from deltaeps --to kappa --out l2.kappa.json"},
        {"nakayama", "nakayama l2.kappa.json --seed 7 --out nakayama.json"},
    };
    std::string bytes;
    for (const auto& [label, args] : steps) {
        const Run r = run_binary(args, dir);
        t.expect(r.code == 0, label + " exited " + std::to_string(r.code));
        bytes += "$ " + args + "\n" + r.out;
    }
    for (const char* f : {"l2.json", "check.json", "l2.kappa.json", "nakayama.json"}) {
        t.expect(fs::exists(dir / f), std::string(f) + " written");
        bytes += std::string("# ") + f + "\n" + slurp(dir / f);
    }
    return bytes;
}

void cli_pipeline(Tally& t) {
    const fs::path root = fs::temp_directory_path() / ("frobalg_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const std::string first = pipeline(t, root / "run1");
    const std::string second = pipeline(t, root / "run2");
    t.expect(first == second, "pipeline output differs between runs");
    t.expect(slurp(root / "run1" / "nakayama.json").find("\"is_identity\": false") != std::string::npos,
             "nakayama report shows ℧ ≠ id");
    std::error_code ec;
    fs::remove_all(root, ec);
}

} // namespace

int main() {
    bool ok = true;
    ok &= run_criterion(1, "duality suite", 5, duality_suite);
    ok &= run_criterion(2, "equivalence suite", 30, equivalence_suite);
    ok &= run_criterion(3, "symmetric suite", 0, symmetric_suite);
    ok &= run_criterion(4, "Nakayama suite", 0, nakayama_suite);
    ok &= run_criterion(5, "separability", 0, separability);
    ok &= run_criterion(6, "twist closure", 0, twist_closure);
    ok &= run_criterion(7, "CLI pipeline on Lambda_2", 0, cli_pipeline);
    std::printf("%s\n", ok ? "ALL ACCEPTANCE CRITERIA PASS" : "SOME ACCEPTANCE CRITERIA FAIL");
    return ok ? 0 : 1;
}
