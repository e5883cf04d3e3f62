// structures.hpp
// Algebras, coalgebras, pairings and module actions over a carrier object,
// with exact checkers that report the difference matrix of every failed axiom.

#pragma once

#include "frobalg/finvect.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobalg {

struct AxiomResult {
    std::string name;
    bool pass = false;
    std::optional<Matrix> difference;   // lhs - rhs, present only on failure
};

struct Report {
    std::vector<AxiomResult> items;
    std::optional<std::uint64_t> seed;

    [[nodiscard]] bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    [[nodiscard]] const AxiomResult* find(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }

    void add(std::string name, const Mor& lhs, const Mor& rhs) {
        AxiomResult r{std::move(name), lhs == rhs, std::nullopt};
        if (!r.pass) r.difference = lhs.matrix() - rhs.matrix();
        items.push_back(std::move(r));
    }
    void append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
};

/// (A, m, η). Shapes are validated on construction; the axioms are not.
class Algebra {
public:
    Algebra(Obj carrier, Mor m, Mor eta) : carrier_(std::move(carrier)), m_(std::move(m)), eta_(std::move(eta)) {
        if (m_.dom() != Shape{carrier_, carrier_} || m_.cod() != Shape{carrier_})
            throw std::invalid_argument("Algebra: product must be A⊗A -> A");
        if (!eta_.dom().empty() || eta_.cod() != Shape{carrier_})
            throw std::invalid_argument("Algebra: unit must be 1 -> A");
    }

    [[nodiscard]] const Obj& carrier() const { return carrier_; }
    [[nodiscard]] const Mor& m() const { return m_; }
    [[nodiscard]] const Mor& eta() const { return eta_; }
    [[nodiscard]] std::size_t dim() const { return carrier_.dim(); }

private:
    Obj carrier_;
    Mor m_;
    Mor eta_;
};

/// (C, Δ, ε)
class Coalgebra {
public:
    Coalgebra(Obj carrier, Mor delta, Mor eps)
        : carrier_(std::move(carrier)), delta_(std::move(delta)), eps_(std::move(eps)) {
        if (delta_.dom() != Shape{carrier_} || delta_.cod() != Shape{carrier_, carrier_})
            throw std::invalid_argument("Coalgebra: coproduct must be C -> C⊗C");
        if (eps_.dom() != Shape{carrier_} || !eps_.cod().empty())
            throw std::invalid_argument("Coalgebra: counit must be C -> 1");
    }

    [[nodiscard]] const Obj& carrier() const { return carrier_; }
    [[nodiscard]] const Mor& delta() const { return delta_; }
    [[nodiscard]] const Mor& eps() const { return eps_; }

    friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

private:
    Obj carrier_;
    Mor delta_;
    Mor eps_;
};

/// κ : A⊗A -> 1 together with its two induced maps
///   Φ_κ,l = (id_^∨A ⊗ κ) ∘ (b̃_A ⊗ id_A) : A -> ^∨A
///   Φ_κ,r = (κ ⊗ id_A^∨) ∘ (id_A ⊗ b_A) : A -> A^∨
class Pairing {
public:
    explicit Pairing(Mor kappa) : kappa_(std::move(kappa)) {
        if (kappa_.dom().size() != 2 || kappa_.dom()[0] != kappa_.dom()[1] || !kappa_.cod().empty())
            throw std::invalid_argument("Pairing: expected A⊗A -> 1, got " + to_string(kappa_.dom()) + " -> " +
                                        to_string(kappa_.cod()));
        const Obj& a = kappa_.dom()[0];
        phi_l_ = compose(tensor(id(left_dual(a)), kappa_), tensor(coev_tilde(a), id(a)));
        phi_r_ = compose(tensor(kappa_, id(right_dual(a))), tensor(id(a), coev(a)));
    }

    [[nodiscard]] const Obj& carrier() const { return kappa_.dom()[0]; }
    [[nodiscard]] const Mor& kappa() const { return kappa_; }
    [[nodiscard]] const Mor& phi_l() const { return phi_l_; }
    [[nodiscard]] const Mor& phi_r() const { return phi_r_; }

    /// κ(e_i, e_j)
    [[nodiscard]] Scalar operator()(std::size_t i, std::size_t j) const {
        return kappa_.matrix()(0, i * carrier().dim() + j);
    }

    friend bool operator==(const Pairing& a, const Pairing& b) { return a.kappa_ == b.kappa_; }

private:
    Mor kappa_;
    Mor phi_l_;
    Mor phi_r_;
};

/// Pairing from its Gram matrix G[i][j] = κ(e_i, e_j).
inline Pairing pairing_from_gram(const Obj& a, const Matrix& gram) {
    const std::size_t n = a.dim();
    if (gram.rows() != n || gram.cols() != n) throw std::invalid_argument("pairing_from_gram: wrong Gram shape");
    Matrix row(1, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) row(0, i * n + j) = gram(i, j);
    return Pairing(Mor({a, a}, {}, std::move(row)));
}

enum class Side { left, right };

// ---------------------------------------------------------------- checkers

inline Report check_algebra(const Algebra& alg) {
    const Mor& m = alg.m();
    const Mor ida = id(alg.carrier());
    Report r;
    r.add("associativity", compose(m, tensor(m, ida)), compose(m, tensor(ida, m)));
    r.add("left_unit", compose(m, tensor(alg.eta(), ida)), ida);
    r.add("right_unit", compose(m, tensor(ida, alg.eta())), ida);
    return r;
}

inline Report check_coalgebra(const Coalgebra& c) {
    const Mor& d = c.delta();
    const Mor idc = id(c.carrier());
    Report r;
    r.add("coassociativity", compose(tensor(d, idc), d), compose(tensor(idc, d), d));
    r.add("left_counit", compose(tensor(c.eps(), idc), d), idc);
    r.add("right_counit", compose(tensor(idc, c.eps()), d), idc);
    return r;
}

/// Δ is a morphism of A-bimodules:
///   (id ⊗ m) ∘ (Δ ⊗ id) = Δ ∘ m = (m ⊗ id) ∘ (id ⊗ Δ).
inline Report check_frobenius_compat(const Algebra& alg, const Coalgebra& c) {
    if (alg.carrier() != c.carrier()) throw std::invalid_argument("check_frobenius_compat: carrier mismatch");
    const Mor ida = id(alg.carrier());
    const Mor dm = compose(c.delta(), alg.m());
    Report r;
    r.add("delta_right_module", compose(tensor(ida, alg.m()), tensor(c.delta(), ida)), dm);
    r.add("delta_left_module", compose(tensor(alg.m(), ida), tensor(ida, c.delta())), dm);
    return r;
}

/// κ ∘ (m ⊗ id) - κ ∘ (id ⊗ m)
inline Matrix invariance_defect(const Algebra& alg, const Pairing& k) {
    if (alg.carrier() != k.carrier()) throw std::invalid_argument("check_invariance: carrier mismatch");
    const Mor ida = id(alg.carrier());
    return compose(k.kappa(), tensor(alg.m(), ida)).matrix() - compose(k.kappa(), tensor(ida, alg.m())).matrix();
}

inline bool check_invariance(const Algebra& alg, const Pairing& k) { return invariance_defect(alg, k).is_zero(); }

struct NondegeneracyResult {
    bool nondegenerate = false;
    std::optional<Mor> phi_l_inverse;
    std::optional<Mor> phi_r_inverse;
    std::vector<std::vector<Scalar>> null_witness;   // kernel of Φ_κ,l when degenerate
};

/// Φ_κ,l invertible. Throws std::logic_error if Φ_κ,l and Φ_κ,r disagree about
/// invertibility, which would contradict κ = d̃_A ∘ (id ⊗ Φ_κ,l) = d_A ∘ (Φ_κ,r ⊗ id).
inline NondegeneracyResult check_nondegenerate(const Pairing& k) {
    NondegeneracyResult out;
    auto l = solve_or_invert(k.phi_l().matrix());
    auto r = solve_or_invert(k.phi_r().matrix());
    if (std::holds_alternative<Matrix>(l) != std::holds_alternative<Matrix>(r))
        throw std::logic_error("check_nondegenerate: Φ_κ,l and Φ_κ,r disagree on invertibility");
    if (auto* li = std::get_if<Matrix>(&l)) {
        out.nondegenerate = true;
        out.phi_l_inverse = Mor(k.phi_l().cod(), k.phi_l().dom(), std::move(*li));
        out.phi_r_inverse = Mor(k.phi_r().cod(), k.phi_r().dom(), std::get<Matrix>(std::move(r)));
    } else {
        out.null_witness = std::get<SingularReport>(l).null_basis;
    }
    return out;
}

/// d_A ∘ (Φ_κ,r ⊗ id_A) = κ = d̃_A ∘ (id_A ⊗ Φ_κ,l)
inline Report check_pairing_factorizations(const Pairing& k) {
    const Obj& a = k.carrier();
    Report r;
    r.add("kappa_via_phi_r", compose(ev(a), tensor(k.phi_r(), id(a))), k.kappa());
    r.add("kappa_via_phi_l", compose(ev_tilde(a), tensor(id(a), k.phi_l())), k.kappa());
    return r;
}

/// For non-degenerate κ:
///   (Φ_κ,l ⊗ Φ_κ,r^{-1}) ∘ b_A = b̃_A,
///   d_A ∘ (Φ_κ,r ⊗ Φ_κ,l^{-1}) = d̃_A,
///   d_A ∘ (id_A^∨ ⊗ Φ_κ,l^{-1}) = d̃_A ∘ (Φ_κ,r^{-1} ⊗ id_^∨A),
/// and the opposite form d̃_A ∘ (Φ_κ,r^{-1} ⊗ Φ_κ,l) = d_A.
inline Report check_dual_basis_identities(const Pairing& k) {
    const auto nd = check_nondegenerate(k);
    if (!nd.nondegenerate) throw std::domain_error("check_dual_basis_identities: pairing is degenerate");
    const Obj& a = k.carrier();
    const Mor& li = *nd.phi_l_inverse;
    const Mor& ri = *nd.phi_r_inverse;
    Report r;
    r.add("coev_transport", compose(tensor(k.phi_l(), ri), coev(a)), coev_tilde(a));
    r.add("ev_transport", compose(ev(a), tensor(k.phi_r(), li)), ev_tilde(a));
    r.add("ev_inverse_transport", compose(ev(a), tensor(id(right_dual(a)), li)),
          compose(ev_tilde(a), tensor(ri, id(left_dual(a)))));
    r.add("ev_transport_opposite", compose(ev_tilde(a), tensor(ri, k.phi_l())), ev(a));
    return r;
}

// ---------------------------------------------------------------- modules

/// A left action A⊗M -> M or right action M⊗A -> M. The module axioms are
/// checked on construction and a failure throws std::invalid_argument.
class ModuleAction {
public:
    ModuleAction(Algebra alg, Obj carrier, Mor action, Side side)
        : alg_(std::move(alg)), carrier_(std::move(carrier)), action_(std::move(action)), side_(side) {
        const Shape dom = side_ == Side::left ? Shape{alg_.carrier(), carrier_} : Shape{carrier_, alg_.carrier()};
        if (action_.dom() != dom || action_.cod() != Shape{carrier_})
            throw std::invalid_argument("ModuleAction: action has shape " + to_string(action_.dom()) + " -> " +
                                        to_string(action_.cod()));
        const Report r = check_axioms();
        if (!r.ok()) throw std::invalid_argument("ModuleAction: module axioms fail");
    }

    [[nodiscard]] const Algebra& algebra() const { return alg_; }
    [[nodiscard]] const Obj& carrier() const { return carrier_; }
    [[nodiscard]] const Mor& action() const { return action_; }
    [[nodiscard]] Side side() const { return side_; }

    [[nodiscard]] Report check_axioms() const {
        const Mor ida = id(alg_.carrier());
        const Mor idm = id(carrier_);
        Report r;
        if (side_ == Side::left) {
            r.add("module_associativity", compose(action_, tensor(alg_.m(), idm)),
                  compose(action_, tensor(ida, action_)));
            r.add("module_unit", compose(action_, tensor(alg_.eta(), idm)), idm);
        } else {
            r.add("module_associativity", compose(action_, tensor(idm, alg_.m())),
                  compose(action_, tensor(action_, ida)));
            r.add("module_unit", compose(action_, tensor(idm, alg_.eta())), idm);
        }
        return r;
    }

private:
    Algebra alg_;
    Obj carrier_;
    Mor action_;
    Side side_;
};

inline ModuleAction regular_module(const Algebra& alg, Side side) {
    return ModuleAction(alg, alg.carrier(), alg.m(), side);
}

/// ρ : A ⊗ ^∨A -> ^∨A,  ρ = (id_^∨A ⊗ d̃_A) ∘ (id_^∨A ⊗ m ⊗ id_^∨A) ∘ (b̃_A ⊗ id_A ⊗ id_^∨A)
/// ρ̄ : A^∨ ⊗ A -> A^∨, ρ̄ = (d_A ⊗ id_A^∨) ∘ (id_A^∨ ⊗ m ⊗ id_A^∨) ∘ (id_A^∨ ⊗ id_A ⊗ b_A)
inline std::pair<ModuleAction, ModuleAction> dual_actions(const Algebra& alg) {
    const Obj& a = alg.carrier();
    const Obj la = left_dual(a), ra = right_dual(a);
    const Mor ida = id(a);
    Mor rho = compose(tensor(id(la), ev_tilde(a)), tensor(id(la), alg.m(), id(la)),
                      tensor(coev_tilde(a), ida, id(la)));
    Mor rho_bar = compose(tensor(ev(a), id(ra)), tensor(id(ra), alg.m(), id(ra)), tensor(id(ra), ida, coev(a)));
    return {ModuleAction(alg, la, std::move(rho), Side::left), ModuleAction(alg, ra, std::move(rho_bar), Side::right)};
}

/// f : M -> N intertwines the two actions (same algebra and side).
inline bool check_module_morphism(const Mor& f, const ModuleAction& from, const ModuleAction& to) {
    if (from.side() != to.side()) throw std::invalid_argument("check_module_morphism: sides differ");
    if (from.algebra().carrier() != to.algebra().carrier())
        throw std::invalid_argument("check_module_morphism: algebras differ");
    if (f.dom() != Shape{from.carrier()} || f.cod() != Shape{to.carrier()})
        throw std::invalid_argument("check_module_morphism: morphism shape does not match modules");
    const Mor ida = id(from.algebra().carrier());
    const Mor lhs = compose(f, from.action());
    const Mor rhs = from.side() == Side::left ? compose(to.action(), tensor(ida, f))
                                              : compose(to.action(), tensor(f, ida));
    return lhs == rhs;
}

} // namespace frobalg
