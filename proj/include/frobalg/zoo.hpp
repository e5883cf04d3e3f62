// zoo.hpp
// Deterministic example algebras with their Frobenius data.
//
// Structure constants and coproducts here are written down at the index
// level (products of basis elements, explicit Casimir elements) rather than
// derived through the conversion routines, so that the conversions can be
// checked against them.

#pragma once

#include "frobalg/nakayama.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobalg {

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Dense table m[i][j] = coefficients of e_i·e_j.
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

inline Algebra algebra_from_structure_constants(const Obj& a, const StructureConstants& m,
                                                const std::vector<Scalar>& eta) {
    const std::size_t n = a.dim();
    if (m.size() != n || eta.size() != n) throw std::invalid_argument("structure constants: wrong dimension");
    Matrix mm(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("structure constants: wrong dimension");
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j].size() != n) throw std::invalid_argument("structure constants: wrong dimension");
            for (std::size_t k = 0; k < n; ++k) mm(k, i * n + j) = m[i][j][k];
        }
    }
    return Algebra(a, Mor({a, a}, {a}, std::move(mm)), Mor({}, {a}, Matrix::column(eta)));
}

/// Δ(e_a) = Σ c' ⊗ c''·e_a for a Casimir element c = Σ c' ⊗ c'' given as a
/// dim²-vector, evaluated directly on structure constants.
inline Mor coproduct_from_casimir(const Algebra& alg, const std::vector<Scalar>& casimir) {
    const std::size_t n = alg.dim();
    const Matrix& m = alg.m().matrix();
    Matrix d(n * n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = casimir[i * n + j];
                if (c.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) d(i * n + k, a).add_product(c, m(k, j * n + a));
            }
    return Mor({alg.carrier()}, {alg.carrier(), alg.carrier()}, std::move(d));
}

inline Mor linear_form(const Obj& a, const std::vector<Scalar>& values) {
    return Mor({a}, {}, Matrix::row(values));
}

// ---------------------------------------------------------------- unit algebra

inline FrobeniusPackage unit_algebra() {
    const Obj a("k", 1);
    Algebra alg = algebra_from_structure_constants(a, {{{1}}}, {1});
    Coalgebra co(a, Mor({a}, {a, a}, Matrix{{1}}), linear_form(a, {1}));
    Pairing k = pairing_from_gram(a, Matrix{{1}});
    return {std::move(alg), std::move(co), std::move(k), std::nullopt, {}, {{"kind", "unit"}}};
}

// ---------------------------------------------------------------- matrix algebras

/// Basis E_ij at index i*n + j.
inline Algebra matrix_algebra_only(std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix_algebra: n must be positive");
    const std::size_t d = n * n;
    const Obj a("M" + std::to_string(n), d);
    StructureConstants m(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) m[i * n + j][j * n + l][i * n + l] = 1;
    std::vector<Scalar> eta(d);
    for (std::size_t i = 0; i < n; ++i) eta[i * n + i] = 1;
    return algebra_from_structure_constants(a, m, eta);
}

/// Square matrix as an element of M_n.
inline PointElement matrix_point(const Algebra& mn, const Matrix& x) {
    const std::size_t n = x.rows();
    if (!x.is_square() || n * n != mn.dim()) throw std::invalid_argument("matrix_point: size mismatch");
    std::vector<Scalar> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = x(i, j);
    return point(mn, v);
}

/// κ_u(a, b) = tr(u·a·b); u = identity gives the trace pairing.
inline Pairing matrix_twisted_pairing(std::size_t n, const Matrix& u) {
    if (u.rows() != n || u.cols() != n) throw std::invalid_argument("matrix_twisted_pairing: u must be n x n");
    const std::size_t d = n * n;
    Matrix gram(d, d);
    // tr(u E_ij E_kl) = δ_jk u_li
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) gram(i * n + j, j * n + l) = u(l, i);
    return pairing_from_gram(Obj("M" + std::to_string(n), d), gram);
}

/// M_n with ε = trace, κ = trace pairing and Δ(a) = Σ E_ij ⊗ E_ji·a.
inline FrobeniusPackage matrix_algebra(std::size_t n) {
    Algebra alg = matrix_algebra_only(n);
    const std::size_t d = n * n;
    std::vector<Scalar> casimir(d * d), trace(d);
    for (std::size_t i = 0; i < n; ++i) {
        trace[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j) casimir[(i * n + j) * d + (j * n + i)] = 1;
    }
    Coalgebra co(alg.carrier(), coproduct_from_casimir(alg, casimir), linear_form(alg.carrier(), trace));
    Pairing k = matrix_twisted_pairing(n, Matrix::identity(n));
    return {std::move(alg), std::move(co), std::move(k), std::nullopt, {}, {{"kind", "matrix"}, {"n", std::to_string(n)}}};
}

// ---------------------------------------------------------------- group algebras

/// Identity index of a valid group table; throws std::invalid_argument if the
/// table is not a group (closure, identity, inverses, associativity).
inline std::size_t validate_cayley_table(const CayleyTable& t) {
    const std::size_t n = t.size();
    if (n == 0) throw std::invalid_argument("Cayley table is empty");
    for (const auto& row : t) {
        if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
        for (auto v : row)
            if (v >= n) throw std::invalid_argument("Cayley table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = t[i][j] == j && t[j][i] == j;
        if (ok) e = i;
    }
    if (!e) throw std::invalid_argument("Cayley table has no identity element");
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n && !has_inverse; ++j) has_inverse = t[i][j] == *e && t[j][i] == *e;
        if (!has_inverse) throw std::invalid_argument("Cayley table: element " + std::to_string(i) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) throw std::invalid_argument("Cayley table is not associative");
    return *e;
}

inline CayleyTable cyclic_group_table(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic_group_table: order must be positive");
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

/// S_k with elements in lexicographic order of their one-line notation
/// (identity first) and product (σ·τ)(i) = σ(τ(i)).
inline CayleyTable symmetric_group_table(std::size_t k) {
    if (k == 0) throw std::invalid_argument("symmetric_group_table: degree must be positive");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    CayleyTable t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<std::size_t> c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
    return t;
}

/// ℚ[G] with ε = coefficient of the identity, κ(g, h) = δ_{gh=e} and
/// Δ(x) = Σ_g g ⊗ g^{-1}·x.
inline FrobeniusPackage group_algebra(const CayleyTable& t, const std::string& label = "QG") {
    const std::size_t e = validate_cayley_table(t);
    const std::size_t n = t.size();
    const Obj a(label, n);
    StructureConstants m(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j][t[i][j]] = 1;
    std::vector<Scalar> eta(n);
    eta[e] = 1;
    Algebra alg = algebra_from_structure_constants(a, m, eta);

    Matrix gram(n, n);
    std::vector<Scalar> casimir(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (t[g][h] == e) {
                gram(g, h) = 1;
                casimir[g * n + h] = 1;
            }
    Coalgebra co(a, coproduct_from_casimir(alg, casimir), linear_form(a, eta));
    Pairing k = pairing_from_gram(a, gram);
    return {std::move(alg), std::move(co), std::move(k), std::nullopt, {}, {{"kind", "group"}, {"order", std::to_string(n)}}};
}

// ---------------------------------------------------------------- quantum plane

/// Λ_q: basis (1, x, y, xy) with x² = y² = 0 and y·x = q·x·y, ε = coefficient
/// of xy. The coproduct uses the Casimir 1⊗xy + x⊗y/q + y⊗x + xy⊗1.
inline FrobeniusPackage quantum_plane(const Scalar& q) {
    if (q.is_zero()) throw std::invalid_argument("quantum_plane: q must be nonzero");
    const Obj a("Lambda_q=" + q.to_short_string(), 4);
    enum { one = 0, x = 1, y = 2, xy = 3 };
    StructureConstants m(4, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4)));
    for (int b = 0; b < 4; ++b) {
        m[one][b][b] = 1;
        m[b][one][b] = 1;
    }
    m[x][y][xy] = 1;
    m[y][x][xy] = q;
    Algebra alg = algebra_from_structure_constants(a, m, {1, 0, 0, 0});

    std::vector<Scalar> casimir(16);
    casimir[one * 4 + xy] = 1;
    casimir[x * 4 + y] = Scalar(1) / q;
    casimir[y * 4 + x] = 1;
    casimir[xy * 4 + one] = 1;
    Coalgebra co(a, coproduct_from_casimir(alg, casimir), linear_form(a, {0, 0, 0, 1}));
    return {std::move(alg), std::move(co), std::nullopt, std::nullopt, {}, {{"kind", "quantum_plane"}, {"q", q.to_string()}}};
}

// ---------------------------------------------------------------- X ⊗ X^∨

/// The algebra on X ⊗ X^∨ built from (co)evaluations:
///   m = id_X ⊗ d_X ⊗ id_X^∨,  η = b_X,  Δ = id_X ⊗ b̃_X ⊗ id_X^∨,  ε = d̃_X.
/// If (ε ⊗ id) ∘ Δ comes out as λ·id, ε is divided by λ; λ is recorded in
/// notes["counit_scale"].
inline FrobeniusPackage canonical_dual_frobenius(std::size_t dim_x) {
    if (dim_x == 0) throw std::invalid_argument("canonical_dual_frobenius: dim X must be positive");
    const Obj xo("X", dim_x);
    const Obj xd = xo.dual();
    const Shape pair{xo, xd};

    const Mor m = tensor(id(xo), ev(xo), id(xd));
    const Mor eta = coev(xo);
    const Mor delta = tensor(id(xo), coev_tilde(xo), id(xd));
    Mor eps = ev_tilde(xo);

    const Mor counit_check = compose(tensor(eps, id(pair)), delta);
    const Scalar scale = counit_check.matrix()(0, 0);
    if (scale.is_zero() || counit_check.matrix() != scale * Matrix::identity(dim_x * dim_x))
        throw std::logic_error("canonical_dual_frobenius: counit law fails by more than a scalar");
    if (!scale.is_one()) eps = Mor(eps.dom(), eps.cod(), (Scalar(1) / scale) * eps.matrix());

    const Obj c("XXv" + std::to_string(dim_x), dim_x * dim_x);
    Algebra alg(c, m.reinterpret({c, c}, {c}), eta.reinterpret({}, {c}));
    Coalgebra co(c, delta.reinterpret({c}, {c, c}), eps.reinterpret({c}, {}));
    return {std::move(alg), std::move(co), std::nullopt, std::nullopt, {},
            {{"kind", "canonical_dual"}, {"dim_x", std::to_string(dim_x)}, {"counit_scale", scale.to_string()}}};
}

// ---------------------------------------------------------------- suite

struct NamedPackage {
    std::string name;
    FrobeniusPackage package;
};

/// Every example the acceptance and property suites run over.
inline std::vector<NamedPackage> standard_suite() {
    std::vector<NamedPackage> out;
    out.push_back({"unit", unit_algebra()});
    out.push_back({"M2", matrix_algebra(2)});
    out.push_back({"M3", matrix_algebra(3)});
    out.push_back({"Q[Z2]", group_algebra(cyclic_group_table(2), "QZ2")});
    out.push_back({"Q[S3]", group_algebra(symmetric_group_table(3), "QS3")});
    for (const Scalar& q : {Scalar(-2), Scalar(1, 2), Scalar(1), Scalar(2)})
        out.push_back({"Lambda_q=" + q.to_short_string(), quantum_plane(q)});
    for (std::size_t d = 1; d <= 3; ++d) out.push_back({"canonical_dual_" + std::to_string(d), canonical_dual_frobenius(d)});
    return out;
}

} // namespace frobalg
