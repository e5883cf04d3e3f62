// nakayama.hpp
// Convolution monoid Hom(1, A), units, regular actions, inner automorphisms,
// Nakayama automorphisms and the relation between two Frobenius pairings.

#pragma once

#include "frobalg/frobenius.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace frobalg {

/// An element of A∘ = Hom(1, A).
struct PointElement {
    Mor vec;

    [[nodiscard]] std::vector<Scalar> coefficients() const { return vec.matrix().column_vector(0); }
    friend bool operator==(const PointElement&, const PointElement&) = default;
};

inline PointElement point(const Algebra& alg, const std::vector<Scalar>& coeffs) {
    if (coeffs.size() != alg.dim()) throw std::invalid_argument("point: coefficient count does not match dim A");
    return {Mor({}, {alg.carrier()}, Matrix::column(coeffs))};
}

inline PointElement unit_point(const Algebra& alg) { return {alg.eta()}; }

namespace detail {
inline void require_point(const Algebra& alg, const PointElement& a, const char* who) {
    if (!a.vec.dom().empty() || a.vec.cod() != Shape{alg.carrier()})
        throw std::invalid_argument(std::string(who) + ": element is not in Hom(1, A)");
}
} // namespace detail

/// m∘(a, b) = m ∘ (a ⊗ b)
inline PointElement convolve(const Algebra& alg, const PointElement& a, const PointElement& b) {
    detail::require_point(alg, a, "convolve");
    detail::require_point(alg, b, "convolve");
    return {compose(alg.m(), tensor(a.vec, b.vec))};
}

/// l_a = m ∘ (a ⊗ id_A)
inline Mor left_action(const Algebra& alg, const PointElement& a) {
    detail::require_point(alg, a, "left_action");
    return compose(alg.m(), tensor(a.vec, id(alg.carrier())));
}

/// r_a = m ∘ (id_A ⊗ a)
inline Mor right_action(const Algebra& alg, const PointElement& a) {
    detail::require_point(alg, a, "right_action");
    return compose(alg.m(), tensor(id(alg.carrier()), a.vec));
}

struct Unit {
    PointElement element;
    PointElement inverse;
};

struct NotAUnit {
    std::size_t rank = 0;     // rank of l_a
    std::size_t defect = 0;   // dim A - rank
};

/// Solves l_a(x) = η exactly and confirms x is a two-sided inverse.
inline std::variant<Unit, NotAUnit> try_invert_unit(const Algebra& alg, const PointElement& a) {
    const Mor la = left_action(alg, a);
    auto x = solve(la.matrix(), alg.eta().matrix());
    const std::size_t rk = rank(la.matrix());
    if (!x || rk < alg.dim()) return NotAUnit{rk, alg.dim() - rk};
    PointElement inv{Mor({}, {alg.carrier()}, std::move(*x))};
    if (convolve(alg, a, inv).vec != alg.eta() || convolve(alg, inv, a).vec != alg.eta())
        return NotAUnit{rk, alg.dim() - rk};
    return Unit{a, std::move(inv)};
}

/// Throws std::domain_error when `a` is not invertible.
inline Unit make_unit(const Algebra& alg, const PointElement& a) {
    auto r = try_invert_unit(alg, a);
    if (auto* u = std::get_if<Unit>(&r)) return std::move(*u);
    throw std::domain_error("make_unit: element is not invertible (rank defect " +
                            std::to_string(std::get<NotAUnit>(r).defect) + ")");
}

inline Unit inverse(const Unit& g) { return {g.inverse, g.element}; }

/// m∘(g, h) as a unit.
inline Unit unit_product(const Algebra& alg, const Unit& g, const Unit& h) {
    return {convolve(alg, g.element, h.element), convolve(alg, h.inverse, g.inverse)};
}

/// ad_g = l_{g^{-1}} ∘ r_g. The other factorization r_g ∘ l_{g^{-1}} is
/// computed too; a mismatch throws std::logic_error.
inline Mor ad(const Algebra& alg, const Unit& g) {
    const Mor lgi = left_action(alg, g.inverse);
    const Mor rg = right_action(alg, g.element);
    Mor out = compose(lgi, rg);
    if (out != compose(rg, lgi)) throw std::logic_error("ad: l_{g^-1} and r_g do not commute");
    return out;
}

/// ω ∘ m = m ∘ (ω ⊗ ω) and ω ∘ η = η.
inline bool is_unital_algebra_morphism(const Algebra& alg, const Mor& omega) {
    return compose(omega, alg.m()) == compose(alg.m(), tensor(omega, omega)) && compose(omega, alg.eta()) == alg.eta();
}

inline bool is_algebra_automorphism(const Algebra& alg, const Mor& omega) {
    if (omega.dom() != Shape{alg.carrier()} || omega.cod() != Shape{alg.carrier()}) return false;
    return is_unital_algebra_morphism(alg, omega) && rank(omega.matrix()) == alg.dim();
}

// ---------------------------------------------------------------- innerness

struct InnerResult {
    std::optional<Unit> witness;                       // ω = ad_witness
    std::vector<std::vector<Scalar>> solution_space;   // basis of {g : l_g ∘ ω = r_g}
    bool certified = false;   // witness found, or non-existence proved
};

struct InnerSearchOptions {
    /// Largest grid {0..dim A}^k that is enumerated exhaustively; within this
    /// bound a negative answer is a proof.
    std::size_t certification_grid_limit = 50000;
    /// Points tried on {-2..2}^k when the certification grid is too large.
    std::size_t fallback_points = 5000;
};

namespace detail {
inline PointElement combine(const Algebra& alg, const std::vector<std::vector<Scalar>>& basis,
                            const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> v(alg.dim());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coeffs[b].is_zero()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i].add_product(coeffs[b], basis[b][i]);
    }
    return point(alg, v);
}

/// Visits every vector of {lo..hi}^k in lexicographic order until `visit`
/// returns true or `budget` points have been seen. Returns whether it stopped
/// early.
template <typename Visit>
bool enumerate_grid(std::size_t k, long lo, long hi, std::size_t budget, Visit&& visit) {
    std::vector<long> digits(k, lo);
    for (std::size_t seen = 0; seen < budget; ++seen) {
        std::vector<Scalar> coeffs(digits.begin(), digits.end());
        if (visit(coeffs)) return true;
        std::size_t pos = 0;
        while (pos < k && digits[pos] == hi) digits[pos++] = lo;
        if (pos == k) return false;
        ++digits[pos];
    }
    return false;
}
} // namespace detail

/// Decides whether ω = ad_g for some unit g. The condition is linear in g,
/// l_g ∘ ω = r_g, so its solutions form a subspace S. Units in S are the
/// points where det(l_g) ≠ 0, a polynomial of degree ≤ dim A in the
/// coordinates of S; it vanishes identically iff it vanishes on the grid
/// {0..dim A}^dim S. When that grid fits the limit the answer is certified,
/// otherwise a bounded search is made and a miss is left uncertified.
inline InnerResult is_inner(const Algebra& alg, const Mor& omega, const InnerSearchOptions& opts = {}) {
    if (!is_algebra_automorphism(alg, omega))
        throw std::domain_error("is_inner: ω is not a unital algebra automorphism");
    const std::size_t n = alg.dim();

    // Column g_k of the system: (e_k·ω(e_x) - e_x·e_k) for every basis e_x.
    Matrix system(n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> ek(n);
        ek[k] = 1;
        const PointElement gk = point(alg, ek);
        const Matrix diff = compose(left_action(alg, gk), omega).matrix() - right_action(alg, gk).matrix();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t x = 0; x < n; ++x) system(i * n + x, k) = diff(i, x);
    }

    InnerResult out;
    out.solution_space = null_space(system);
    const auto& basis = out.solution_space;
    const std::size_t dim_s = basis.size();

    auto accept = [&](const PointElement& g) {
        auto r = try_invert_unit(alg, g);
        if (auto* u = std::get_if<Unit>(&r)) {
            out.witness = std::move(*u);
            out.certified = true;
            return true;
        }
        return false;
    };

    if (dim_s == 0) {
        out.certified = true;
        return out;
    }
    for (const auto& v : basis)
        if (accept(point(alg, v))) return out;
    if (mat_mul(system, alg.eta().matrix()).is_zero() && accept(unit_point(alg))) return out;

    auto probe = [&](const std::vector<Scalar>& coeffs) {
        const PointElement g = detail::combine(alg, basis, coeffs);
        if (determinant(left_action(alg, g).matrix()).is_zero()) return false;
        return accept(g);
    };

    double grid = 1;
    for (std::size_t i = 0; i < dim_s; ++i) grid *= static_cast<double>(n + 1);
    if (grid <= static_cast<double>(opts.certification_grid_limit)) {
        if (detail::enumerate_grid(dim_s, 0, static_cast<long>(n), opts.certification_grid_limit, probe)) return out;
        out.certified = true;   // det(l_g) vanishes on S, so S holds no unit
        return out;
    }
    detail::enumerate_grid(dim_s, -2, 2, opts.fallback_points, probe);
    return out;
}

// ---------------------------------------------------------------- Nakayama

/// ℧_κ = Φ_κ,r^{-1} ∘ Φ_κ,l. Throws std::domain_error on a degenerate pairing.
inline Mor nakayama_automorphism(const Pairing& k) {
    const auto nd = check_nondegenerate(k);
    if (!nd.nondegenerate) throw std::domain_error("nakayama: pairing is degenerate");
    return compose(*nd.phi_r_inverse, k.phi_l());
}

/// κ ∘ (℧ ⊗ id_A) equals the cycled pairing d_A ∘ (id ⊗ κ ⊗ id) ∘ (b̃_A ⊗ id ⊗ id).
inline bool check_nakayama_relation(const Pairing& k, const Mor& naka) {
    return compose(k.kappa(), tensor(naka, id(k.carrier()))) == cycled_pairing(k);
}

struct NakayamaReport {
    Mor naka;
    bool is_identity = false;
    bool is_algebra_morphism = false;
    bool satisfies_defining_relation = false;
    InnerResult inner;

    [[nodiscard]] const std::optional<Unit>& inner_witness() const { return inner.witness; }
};

inline NakayamaReport nakayama(const Algebra& alg, const Pairing& k, const InnerSearchOptions& opts = {}) {
    detail::require_frobenius_pairing(alg, k, "nakayama");
    NakayamaReport r;
    r.naka = nakayama_automorphism(k);
    r.is_identity = r.naka.is_identity();
    r.is_algebra_morphism = is_unital_algebra_morphism(alg, r.naka);
    r.satisfies_defining_relation = check_nakayama_relation(k, r.naka);
    if (r.is_algebra_morphism) r.inner = is_inner(alg, r.naka, opts);
    return r;
}

// ---------------------------------------------------------------- two pairings

struct PairingRelation {
    Unit g;          // κ' = κ ∘ (id_A ⊗ r_g)
    Unit h;          // κ' = κ ∘ (l_h ⊗ id_A)
    Mor sigma_l;     // Φ_κ',l = Φ_κ,l ∘ σ_l,  σ_l = r_g
    Mor sigma_r;     // Φ_κ',r = Φ_κ,r ∘ σ_r,  σ_r = l_h
    bool h_is_nakayama_image = false;   // h = ℧_κ ∘ g
};

/// Relates two invariant non-degenerate pairings on the same algebra.
/// Throws std::logic_error if a multiply-back check fails.
inline PairingRelation relate_pairings(const Algebra& alg, const Pairing& k, const Pairing& k2) {
    if (k.carrier() != k2.carrier()) throw std::invalid_argument("relate_pairings: pairings live on different carriers");
    const auto nd = detail::require_frobenius_pairing(alg, k, "relate_pairings");
    detail::require_frobenius_pairing(alg, k2, "relate_pairings");
    const Obj& a = alg.carrier();
    const Mor ida = id(a);

    Mor sigma_l = compose(*nd.phi_l_inverse, k2.phi_l());
    Mor sigma_r = compose(*nd.phi_r_inverse, k2.phi_r());
    const PointElement g{compose(sigma_l, alg.eta())};
    const PointElement h{compose(sigma_r, alg.eta())};

    if (right_action(alg, g) != sigma_l || left_action(alg, h) != sigma_r)
        throw std::logic_error("relate_pairings: σ is not a regular action");
    if (compose(k.kappa(), tensor(ida, right_action(alg, g))) != k2.kappa() ||
        compose(k.kappa(), tensor(left_action(alg, h), ida)) != k2.kappa())
        throw std::logic_error("relate_pairings: multiply-back check failed");

    PairingRelation out{make_unit(alg, g), make_unit(alg, h), std::move(sigma_l), std::move(sigma_r), false};
    out.h_is_nakayama_image = compose(nakayama_automorphism(k), g.vec) == h.vec;
    return out;
}

/// κ' = κ ∘ (l_{h^{-1}} ⊗ id_A) where ℧_κ = ad_h; then ℧_κ' = id. Returns
/// nullopt when no such h is found.
inline std::optional<Pairing> symmetrize(const Algebra& alg, const Pairing& k, const InnerSearchOptions& opts = {}) {
    detail::require_frobenius_pairing(alg, k, "symmetrize");
    const InnerResult inner = is_inner(alg, nakayama_automorphism(k), opts);
    if (!inner.witness) return std::nullopt;
    Pairing out(compose(k.kappa(), tensor(left_action(alg, inner.witness->inverse), id(alg.carrier()))));
    if (!nakayama_automorphism(out).is_identity()) throw std::logic_error("symmetrize: result is not symmetric");
    return out;
}

// ---------------------------------------------------------------- separability

/// e = (Φ_κ,l^{-1} ⊗ id_A) ∘ b̃_A ∈ Hom(1, A⊗A).
inline Mor separability_idempotent(const Algebra& alg, const Pairing& k) {
    const auto nd = check_nondegenerate(k);
    if (alg.carrier() != k.carrier()) throw std::invalid_argument("separability_idempotent: carrier mismatch");
    if (!nd.nondegenerate) throw std::domain_error("separability_idempotent: pairing is degenerate");
    const Obj& a = alg.carrier();
    return compose(tensor(*nd.phi_l_inverse, id(a)), coev_tilde(a));
}

/// (m ⊗ id) ∘ (id ⊗ e) = (id ⊗ m) ∘ (e ⊗ id)
inline bool check_idempotent_invariance(const Algebra& alg, const Mor& e) {
    const Mor ida = id(alg.carrier());
    return compose(tensor(alg.m(), ida), tensor(ida, e)) == compose(tensor(ida, alg.m()), tensor(e, ida));
}

/// f ♥ g = (m ⊗ m) ∘ (id_A ⊗ g ⊗ id_A) ∘ f on Hom(1, A⊗A).
inline Mor heart(const Algebra& alg, const Mor& f, const Mor& g) {
    const Shape aa{alg.carrier(), alg.carrier()};
    if (!f.dom().empty() || f.cod() != aa || !g.dom().empty() || g.cod() != aa)
        throw std::invalid_argument("heart: arguments must lie in Hom(1, A⊗A)");
    const Mor ida = id(alg.carrier());
    return compose(tensor(alg.m(), alg.m()), tensor(ida, g, ida), f);
}

// ---------------------------------------------------------------- twisting

struct TwistedStructures {
    Pairing kappa;   // κ ∘ (l_g ⊗ r_h)
    Mor eps;         // ε_κ ∘ r_h ∘ l_g, so that ε' ∘ m = κ'
    Mor phi;         // Φ_κ,l ∘ r_{h·℧^{-1}(g)} = Φ_κ',l
};

/// Twists a Frobenius pairing by two units and re-validates the result.
inline TwistedStructures twist_pairing(const Algebra& alg, const Pairing& k, const Unit& g, const Unit& h) {
    detail::require_frobenius_pairing(alg, k, "twist_pairing");
    const Obj& a = alg.carrier();
    Pairing twisted(compose(k.kappa(), tensor(left_action(alg, g.element), right_action(alg, h.element))));

    const Mor eps = compose(k.kappa(), tensor(id(a), alg.eta()));
    Mor eps_twisted = compose(eps, right_action(alg, h.element), left_action(alg, g.element));

    const Mor naka_inv = invert(nakayama_automorphism(k));
    const PointElement shift = convolve(alg, h.element, PointElement{compose(naka_inv, g.element.vec)});
    Mor phi_twisted = compose(k.phi_l(), right_action(alg, shift));

    if (!check_invariance(alg, twisted) || !check_nondegenerate(twisted).nondegenerate)
        throw std::logic_error("twist_pairing: twisted pairing is not a Frobenius structure");
    if (compose(eps_twisted, alg.m()) != twisted.kappa() || phi_twisted != twisted.phi_l())
        throw std::logic_error("twist_pairing: companion structures disagree");
    return {std::move(twisted), std::move(eps_twisted), std::move(phi_twisted)};
}

} // namespace frobalg
