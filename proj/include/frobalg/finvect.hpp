// finvect.hpp
// Strict sovereign monoidal category of finite-dimensional rational spaces.
//
// Objects carry a chosen basis e_i; the dual carries the dual basis e^i and
// the left and right duals coincide (^∨U = U^∨). Tensor products are flat
// ordered lists of objects with the unit dropped. A morphism between two such
// lists is a matrix of shape (∏ cod dims) x (∏ dom dims), where the basis of a
// tensor product is ordered lexicographically (first factor most significant),
// matching `kron`.
//
// Evaluation and coevaluation morphisms, with the naming used throughout:
//
//   coev(U)       = b_U : 1 -> U ⊗ U^∨,   b_U = Σ e_i ⊗ e^i
//   ev(U)         = d_U : U^∨ ⊗ U -> 1,   d_U(e^i ⊗ e_j) = δ_ij
//   coev_tilde(U) = b̃_U : 1 -> ^∨U ⊗ U,  b̃_U = Σ e^i ⊗ e_i
//   ev_tilde(U)   = d̃_U : U ⊗ ^∨U -> 1,  d̃_U(e_i ⊗ e^j) = δ_ij
//
// The tilde pair belongs to the left dual ^∨U and the plain pair to the
// right dual U^∨; ev_left/coev_left and ev_right/coev_right are aliases.

#pragma once

#include "frobalg/elimination.hpp"
#include "frobalg/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobalg {

class Obj {
public:
    static constexpr const char* unit_label = "1";

    Obj() = default;
    Obj(std::string label, std::size_t dim) : label_(std::move(label)), dim_(dim) {
        if (dim_ == 0) throw std::invalid_argument("Obj: dimension must be positive");
        if (label_ == unit_label) throw std::invalid_argument("Obj: label \"1\" is reserved for the tensor unit");
        if (label_.empty()) throw std::invalid_argument("Obj: empty label");
    }

    static Obj unit() {
        Obj u;
        u.label_ = unit_label;
        u.dim_ = 1;
        return u;
    }

    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] bool is_dual() const { return dual_; }
    [[nodiscard]] bool is_unit() const { return label_ == unit_label; }

    /// Dual with the dual basis. The unit is self-dual and dual(dual(U)) == U.
    [[nodiscard]] Obj dual() const {
        if (is_unit()) return *this;
        Obj d = *this;
        d.dual_ = !dual_;
        return d;
    }

    [[nodiscard]] std::string name() const { return dual_ ? label_ + "^v" : label_; }

    friend bool operator==(const Obj&, const Obj&) = default;

private:
    std::string label_ = unit_label;
    std::size_t dim_ = 1;
    bool dual_ = false;
};

inline Obj left_dual(const Obj& u) { return u.dual(); }
inline Obj right_dual(const Obj& u) { return u.dual(); }

using Shape = std::vector<Obj>;

inline Shape normalize(Shape s) {
    std::erase_if(s, [](const Obj& o) { return o.is_unit(); });
    return s;
}

inline Shape concat(const Shape& a, const Shape& b) {
    Shape out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalize(std::move(out));
}

inline std::size_t total_dim(const Shape& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1},
                           [](std::size_t acc, const Obj& o) { return acc * o.dim(); });
}

inline std::string to_string(const Shape& s) {
    if (s.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "⊗" : "") + s[i].name();
    return out;
}

class Mor {
public:
    Mor() = default;
    Mor(Shape dom, Shape cod, Matrix matrix)
        : dom_(normalize(std::move(dom))), cod_(normalize(std::move(cod))), matrix_(std::move(matrix)) {
        if (matrix_.rows() != total_dim(cod_) || matrix_.cols() != total_dim(dom_))
            throw std::invalid_argument("Mor: matrix is " + std::to_string(matrix_.rows()) + "x" +
                                        std::to_string(matrix_.cols()) + " but " + to_string(dom_) + " -> " +
                                        to_string(cod_) + " needs " + std::to_string(total_dim(cod_)) + "x" +
                                        std::to_string(total_dim(dom_)));
    }

    static Mor identity(const Shape& s) { return Mor(s, s, Matrix::identity(total_dim(s))); }

    /// The 1 -> 1 morphism given by a scalar.
    static Mor scalar(const Scalar& s) { return Mor({}, {}, Matrix{{s}}); }

    [[nodiscard]] const Shape& dom() const { return dom_; }
    [[nodiscard]] const Shape& cod() const { return cod_; }
    [[nodiscard]] const Matrix& matrix() const { return matrix_; }

    /// Same matrix viewed between other shapes of equal total dimension.
    [[nodiscard]] Mor reinterpret(Shape dom, Shape cod) const { return Mor(std::move(dom), std::move(cod), matrix_); }

    [[nodiscard]] bool is_endo() const { return dom_ == cod_; }
    [[nodiscard]] bool is_identity() const { return is_endo() && matrix_.is_identity(); }

    friend bool operator==(const Mor&, const Mor&) = default;

private:
    Shape dom_;
    Shape cod_;
    Matrix matrix_;
};

inline Mor id(const Obj& u) { return Mor::identity({u}); }
inline Mor id(const Shape& s) { return Mor::identity(s); }

/// g ∘ f; the shapes must agree object by object.
inline Mor compose(const Mor& g, const Mor& f) {
    if (f.cod() != g.dom())
        throw std::invalid_argument("compose: codomain " + to_string(f.cod()) + " does not match domain " +
                                    to_string(g.dom()));
    return Mor(f.dom(), g.cod(), mat_mul(g.matrix(), f.matrix()));
}

/// compose(h, g, f) = h ∘ g ∘ f
template <typename... Rest>
Mor compose(const Mor& g, const Mor& f, const Rest&... rest) {
    return compose(g, compose(f, rest...));
}

inline Mor tensor(const Mor& f, const Mor& g) {
    return Mor(concat(f.dom(), g.dom()), concat(f.cod(), g.cod()), kron(f.matrix(), g.matrix()));
}

template <typename... Rest>
Mor tensor(const Mor& f, const Mor& g, const Rest&... rest) {
    return tensor(tensor(f, g), rest...);
}

namespace detail {
inline Matrix pairing_vector(std::size_t n, bool as_row) {
    Matrix v = as_row ? Matrix(1, n * n) : Matrix(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) (as_row ? v(0, i * n + i) : v(i * n + i, 0)) = 1;
    return v;
}
} // namespace detail

/// b_U : 1 -> U ⊗ U^∨
inline Mor coev(const Obj& u) { return Mor({}, {u, u.dual()}, detail::pairing_vector(u.dim(), false)); }
/// d_U : U^∨ ⊗ U -> 1
inline Mor ev(const Obj& u) { return Mor({u.dual(), u}, {}, detail::pairing_vector(u.dim(), true)); }
/// b̃_U : 1 -> ^∨U ⊗ U
inline Mor coev_tilde(const Obj& u) { return Mor({}, {left_dual(u), u}, detail::pairing_vector(u.dim(), false)); }
/// d̃_U : U ⊗ ^∨U -> 1
inline Mor ev_tilde(const Obj& u) { return Mor({u, left_dual(u)}, {}, detail::pairing_vector(u.dim(), true)); }

inline Mor coev_left(const Obj& u) { return coev_tilde(u); }
inline Mor ev_left(const Obj& u) { return ev_tilde(u); }
inline Mor coev_right(const Obj& u) { return coev(u); }
inline Mor ev_right(const Obj& u) { return ev(u); }

struct ZigzagResult {
    bool right_on_u = false;      // (id_U ⊗ d_U) ∘ (b_U ⊗ id_U) = id_U
    bool right_on_dual = false;   // (d_U ⊗ id_U^∨) ∘ (id_U^∨ ⊗ b_U) = id_U^∨
    bool left_on_u = false;       // (d̃_U ⊗ id_U) ∘ (id_U ⊗ b̃_U) = id_U
    bool left_on_dual = false;    // (id_^∨U ⊗ d̃_U) ∘ (b̃_U ⊗ id_^∨U) = id_^∨U
    [[nodiscard]] bool all() const { return right_on_u && right_on_dual && left_on_u && left_on_dual; }
};

inline ZigzagResult check_zigzag(const Obj& u) {
    const Obj ud = u.dual();
    ZigzagResult r;
    r.right_on_u = compose(tensor(id(u), ev(u)), tensor(coev(u), id(u))).is_identity();
    r.right_on_dual = compose(tensor(ev(u), id(ud)), tensor(id(ud), coev(u))).is_identity();
    r.left_on_u = compose(tensor(ev_tilde(u), id(u)), tensor(id(u), coev_tilde(u))).is_identity();
    r.left_on_dual = compose(tensor(id(ud), ev_tilde(u)), tensor(coev_tilde(u), id(ud))).is_identity();
    return r;
}

namespace detail {
inline const Obj& single(const Shape& s, const char* what) {
    if (s.size() != 1) throw std::invalid_argument(std::string(what) + ": expected a single object, got " + to_string(s));
    return s.front();
}
} // namespace detail

/// ^∨f : ^∨V -> ^∨U for f : U -> V,
/// (id_^∨U ⊗ d̃_V) ∘ (id_^∨U ⊗ f ⊗ id_^∨V) ∘ (b̃_U ⊗ id_^∨V).
inline Mor transpose_left(const Mor& f) {
    const Obj& u = detail::single(f.dom(), "transpose_left");
    const Obj& v = detail::single(f.cod(), "transpose_left");
    const Obj lu = left_dual(u), lv = left_dual(v);
    return compose(tensor(id(lu), ev_tilde(v)), tensor(id(lu), f, id(lv)), tensor(coev_tilde(u), id(lv)));
}

/// f^∨ : V^∨ -> U^∨ for f : U -> V,
/// (d_V ⊗ id_U^∨) ∘ (id_V^∨ ⊗ f ⊗ id_U^∨) ∘ (id_V^∨ ⊗ b_U).
inline Mor transpose_right(const Mor& f) {
    const Obj& u = detail::single(f.dom(), "transpose_right");
    const Obj& v = detail::single(f.cod(), "transpose_right");
    const Obj ru = right_dual(u), rv = right_dual(v);
    return compose(tensor(ev(v), id(ru)), tensor(id(rv), f, id(ru)), tensor(id(rv), coev(u)));
}

/// For f : U -> ^∨V,
/// wee(f) = (d̃_V ⊗ id_U^∨) ∘ (id_V ⊗ f ⊗ id_U^∨) ∘ (id_V ⊗ b_U) : V -> U^∨.
inline Mor wee(const Mor& f) {
    const Obj& u = detail::single(f.dom(), "wee");
    const Obj v = detail::single(f.cod(), "wee").dual();
    const Obj ru = right_dual(u);
    return compose(tensor(ev_tilde(v), id(ru)), tensor(id(v), f, id(ru)), tensor(id(v), coev(u)));
}

/// For f : U -> V^∨,
/// eew(f) = (id_^∨U ⊗ d_V) ∘ (id_^∨U ⊗ f ⊗ id_V) ∘ (b̃_U ⊗ id_V) : V -> ^∨U.
inline Mor eew(const Mor& f) {
    const Obj& u = detail::single(f.dom(), "eew");
    const Obj v = detail::single(f.cod(), "eew").dual();
    const Obj lu = left_dual(u);
    return compose(tensor(id(lu), ev(v)), tensor(id(lu), f, id(v)), tensor(coev_tilde(u), id(v)));
}

/// (wee f)^{-1} = (d_U ⊗ id_V) ∘ (id_U^∨ ⊗ f^{-1} ⊗ id_V) ∘ (id_U^∨ ⊗ b̃_V),
/// built from f^{-1}. Throws std::domain_error if f is not invertible.
inline Mor wee_inverse(const Mor& f) {
    const Obj& u = detail::single(f.dom(), "wee_inverse");
    const Obj v = detail::single(f.cod(), "wee_inverse").dual();
    const Mor f_inv(f.cod(), f.dom(), inverse(f.matrix()));
    const Obj ru = right_dual(u);
    return compose(tensor(ev(u), id(v)), tensor(id(ru), f_inv, id(v)), tensor(id(ru), coev_tilde(v)));
}

/// Inverse of an endomorphism or isomorphism between single objects.
inline Mor invert(const Mor& f) { return Mor(f.cod(), f.dom(), inverse(f.matrix())); }

/// The two equalities obtained by applying sovereignty to the (co)evaluations:
/// wee(id) = eew(id) and (eew id)^∨ = ^∨(wee id), for id = id_^∨U.
struct EvaluationSovereignty {
    bool wee_equals_eew = false;
    bool duals_agree = false;
};

inline EvaluationSovereignty check_evaluation_sovereignty(const Obj& u) {
    const Mor g = id(left_dual(u));
    const Mor w = wee(g);
    const Mor e = eew(g);
    return {w == e, transpose_right(e) == transpose_left(w)};
}

} // namespace frobalg
