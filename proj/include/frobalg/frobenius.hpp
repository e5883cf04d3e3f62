// frobenius.hpp
// Conversions among the three Frobenius presentations of an algebra
// (counit/coproduct, invariant pairing, module isomorphism A -> ^∨A) and
// the corresponding symmetry tests.

#pragma once

#include "frobalg/structures.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace frobalg {

struct PackageFlags {
    std::optional<bool> invariant;
    std::optional<bool> nondegenerate;
    std::optional<bool> bimodule_compat;
    std::optional<bool> symmetric;
};

/// An algebra with any subset of the three Frobenius presentations.
struct FrobeniusPackage {
    Algebra algebra;
    std::optional<Coalgebra> delta_eps;
    std::optional<Pairing> pairing;
    std::optional<Mor> phi_rho;
    PackageFlags flags;
    std::map<std::string, std::string> notes;
};

// ---------------------------------------------------------------- (Δ,ε) -> κ

/// κ_ε = ε ∘ m. Throws std::domain_error unless (Δ, ε) is a coalgebra whose
/// coproduct is an A-bimodule morphism.
inline Pairing kappa_from_counit(const Algebra& alg, const Coalgebra& c) {
    if (!check_coalgebra(c).ok()) throw std::domain_error("kappa_from_counit: (Δ, ε) is not a coalgebra");
    if (!check_frobenius_compat(alg, c).ok())
        throw std::domain_error("kappa_from_counit: Δ is not a bimodule morphism");
    return Pairing(compose(c.eps(), alg.m()));
}

/// Inverses of Φ_κε,l and Φ_κε,r written through the coproduct:
///   Φ_l^{-1} = (id_A ⊗ d̃_A) ∘ ((Δ∘η) ⊗ id_^∨A),
///   Φ_r^{-1} = (d_A ⊗ id_A) ∘ (id_A^∨ ⊗ (Δ∘η)).
inline std::pair<Mor, Mor> phi_inverses_from_coproduct(const Algebra& alg, const Coalgebra& c) {
    const Obj& a = alg.carrier();
    const Mor casimir = compose(c.delta(), alg.eta());
    Mor l = compose(tensor(id(a), ev_tilde(a)), tensor(casimir, id(left_dual(a))));
    Mor r = compose(tensor(ev(a), id(a)), tensor(id(right_dual(a)), casimir));
    return {std::move(l), std::move(r)};
}

// ---------------------------------------------------------------- κ -> (Δ,ε)

namespace detail {
inline NondegeneracyResult require_frobenius_pairing(const Algebra& alg, const Pairing& k, const char* who) {
    if (alg.carrier() != k.carrier()) throw std::invalid_argument(std::string(who) + ": carrier mismatch");
    if (!check_invariance(alg, k)) throw std::domain_error(std::string(who) + ": pairing is not invariant");
    auto nd = check_nondegenerate(k);
    if (!nd.nondegenerate) throw std::domain_error(std::string(who) + ": pairing is degenerate");
    return nd;
}
} // namespace detail

/// Δ_κ = (id_A ⊗ m) ∘ (id_A ⊗ Φ_κ,r^{-1} ⊗ id_A) ∘ (b_A ⊗ id_A),  ε_κ = κ ∘ (id_A ⊗ η).
inline Coalgebra coalgebra_from_pairing(const Algebra& alg, const Pairing& k) {
    const auto nd = detail::require_frobenius_pairing(alg, k, "coalgebra_from_pairing");
    const Obj& a = alg.carrier();
    const Mor ida = id(a);
    Mor delta = compose(tensor(ida, alg.m()), tensor(ida, *nd.phi_r_inverse, ida), tensor(coev(a), ida));
    Mor eps = compose(k.kappa(), tensor(ida, alg.eta()));
    return Coalgebra(a, std::move(delta), std::move(eps));
}

/// Three expressions for Δ_κ that agree for invariant non-degenerate κ:
///   [0] (id ⊗ m) ∘ (id ⊗ Φ_r^{-1} ⊗ id) ∘ (b_A ⊗ id)
///   [1] (m ⊗ id) ∘ (id ⊗ id ⊗ Φ_r^{-1}) ∘ (id ⊗ b_A)
///   [2] (m ⊗ id) ∘ (id ⊗ Φ_l^{-1} ⊗ id) ∘ (id ⊗ b̃_A)
inline std::array<Mor, 3> coproduct_descriptions(const Algebra& alg, const Pairing& k) {
    const auto nd = detail::require_frobenius_pairing(alg, k, "coproduct_descriptions");
    const Obj& a = alg.carrier();
    const Mor ida = id(a);
    return {compose(tensor(ida, alg.m()), tensor(ida, *nd.phi_r_inverse, ida), tensor(coev(a), ida)),
            compose(tensor(alg.m(), ida), tensor(ida, ida, *nd.phi_r_inverse), tensor(ida, coev(a))),
            compose(tensor(alg.m(), ida), tensor(ida, *nd.phi_l_inverse, ida), tensor(ida, coev_tilde(a)))};
}

/// Four expressions for ε_κ:
///   κ ∘ (id ⊗ η),  κ ∘ (η ⊗ id),  d̃_A ∘ (id ⊗ Φ_l∘η),  d_A ∘ ((Φ_r∘η) ⊗ id).
inline std::array<Mor, 4> counit_descriptions(const Algebra& alg, const Pairing& k) {
    const Obj& a = alg.carrier();
    const Mor ida = id(a);
    return {compose(k.kappa(), tensor(ida, alg.eta())), compose(k.kappa(), tensor(alg.eta(), ida)),
            compose(ev_tilde(a), tensor(ida, compose(k.phi_l(), alg.eta()))),
            compose(ev(a), tensor(compose(k.phi_r(), alg.eta()), ida))};
}

// ---------------------------------------------------------------- κ <-> Φ

/// κ_φ = d̃_A ∘ (id_A ⊗ φ) for φ : A -> ^∨A.
inline Pairing pairing_from_phi(const Algebra& alg, const Mor& phi) {
    const Obj& a = alg.carrier();
    if (phi.dom() != Shape{a} || phi.cod() != Shape{left_dual(a)})
        throw std::invalid_argument("pairing_from_phi: expected A -> ^∨A, got " + to_string(phi.dom()) + " -> " +
                                    to_string(phi.cod()));
    return Pairing(compose(ev_tilde(a), tensor(id(a), phi)));
}

/// Φ_κ,l. Throws std::logic_error if Φ_κ,r = wee(Φ_κ,l) fails.
inline Mor phi_from_pairing(const Pairing& k) {
    if (wee(k.phi_l()) != k.phi_r()) throw std::logic_error("phi_from_pairing: Φ_κ,r differs from wee(Φ_κ,l)");
    return k.phi_l();
}

// ---------------------------------------------------------------- symmetry

/// d_A ∘ (id_^∨A ⊗ κ ⊗ id_A) ∘ (b̃_A ⊗ id_A ⊗ id_A): the pairing with its
/// arguments cycled through the duality.
inline Mor cycled_pairing(const Pairing& k) {
    const Obj& a = k.carrier();
    const Mor ida = id(a);
    return compose(ev(a), tensor(id(left_dual(a)), k.kappa(), ida), tensor(coev_tilde(a), ida, ida));
}

/// Mirror image of `cycled_pairing`:
/// d̃_A ∘ (id_A ⊗ κ ⊗ id_A^∨) ∘ (id_A ⊗ id_A ⊗ b_A).
inline Mor cycled_pairing_mirror(const Pairing& k) {
    const Obj& a = k.carrier();
    const Mor ida = id(a);
    return compose(ev_tilde(a), tensor(ida, k.kappa(), id(right_dual(a))), tensor(ida, ida, coev(a)));
}

/// κ is symmetric: cycled_pairing(κ) = κ. The mirrored form is evaluated as
/// well; a disagreement throws std::logic_error.
inline bool check_symmetric(const Pairing& k) {
    const bool primary = cycled_pairing(k) == k.kappa();
    const bool mirror = cycled_pairing_mirror(k) == k.kappa();
    if (primary != mirror) throw std::logic_error("check_symmetric: the two symmetry forms disagree");
    return primary;
}

/// φ : A -> ^∨A = A^∨ is both a left- and right-module map iff wee(φ) = φ.
inline bool check_symmetric_phi(const Mor& phi, const Algebra& alg) {
    const Obj& a = alg.carrier();
    if (phi.dom() != Shape{a} || phi.cod() != Shape{left_dual(a)})
        throw std::invalid_argument("check_symmetric_phi: expected A -> ^∨A");
    return wee(phi) == phi;
}

/// ℧_ε = (d_A ⊗ id_A) ∘ [id_A^∨ ⊗ (Δ∘η∘ε∘m)] ∘ (b̃_A ⊗ id_A).
inline Mor nakayama_endo_from_counit(const Algebra& alg, const Coalgebra& c) {
    if (!check_frobenius_compat(alg, c).ok())
        throw std::domain_error("nakayama_endo_from_counit: Δ is not a bimodule morphism");
    const Obj& a = alg.carrier();
    const Mor ida = id(a);
    const Mor inner = compose(c.delta(), alg.eta(), c.eps(), alg.m());
    return compose(tensor(ev(a), ida), tensor(id(right_dual(a)), inner), tensor(coev_tilde(a), ida));
}

/// Whether ε ∘ m is a symmetric pairing (the extra ambialgebra condition);
/// reported only, never required.
inline bool counit_trace_is_symmetric(const Algebra& alg, const Coalgebra& c) {
    return check_symmetric(Pairing(compose(c.eps(), alg.m())));
}

// ---------------------------------------------------------------- packages

/// Validates every presentation present in `pkg`, checks that present
/// presentations agree under the conversions, and fills in the flags.
inline Report analyze(FrobeniusPackage& pkg) {
    const Algebra& alg = pkg.algebra;
    Report r = check_algebra(alg);

    std::optional<Pairing> reference;
    if (pkg.delta_eps) {
        Report co = check_coalgebra(*pkg.delta_eps);
        Report compat = check_frobenius_compat(alg, *pkg.delta_eps);
        pkg.flags.bimodule_compat = co.ok() && compat.ok();
        r.append(co);
        r.append(compat);
        reference = Pairing(compose(pkg.delta_eps->eps(), alg.m()));
    }
    if (pkg.pairing) {
        if (reference) r.add("pairing_matches_counit", pkg.pairing->kappa(), reference->kappa());
        reference = *pkg.pairing;
    }
    if (pkg.phi_rho) {
        Pairing from_phi = pairing_from_phi(alg, *pkg.phi_rho);
        if (reference) r.add("phi_matches_pairing", from_phi.kappa(), reference->kappa());
        else reference = std::move(from_phi);
    }
    if (reference) {
        const bool inv = check_invariance(alg, *reference);
        const bool nd = check_nondegenerate(*reference).nondegenerate;
        pkg.flags.invariant = inv;
        pkg.flags.nondegenerate = nd;
        r.items.push_back({"pairing_invariant", inv, inv ? std::nullopt : std::optional(invariance_defect(alg, *reference))});
        r.items.push_back({"pairing_nondegenerate", nd, std::nullopt});
        pkg.flags.symmetric = check_symmetric(*reference);
    }
    return r;
}

/// Fills in the missing presentations from whichever one is present
/// (counit first, then pairing, then Φ). Throws std::domain_error when the
/// source presentation is not a Frobenius structure.
inline FrobeniusPackage complete(FrobeniusPackage pkg) {
    const Algebra& alg = pkg.algebra;
    if (!pkg.pairing) {
        if (pkg.delta_eps) pkg.pairing = kappa_from_counit(alg, *pkg.delta_eps);
        else if (pkg.phi_rho) pkg.pairing = pairing_from_phi(alg, *pkg.phi_rho);
        else throw std::domain_error("complete: package carries no Frobenius presentation");
    }
    if (!pkg.delta_eps) pkg.delta_eps = coalgebra_from_pairing(alg, *pkg.pairing);
    if (!pkg.phi_rho) pkg.phi_rho = phi_from_pairing(*pkg.pairing);
    analyze(pkg);
    return pkg;
}

} // namespace frobalg
