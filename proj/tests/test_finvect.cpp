#include "frobalg/random.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace frobalg;

namespace {

Mor random_mor(SeededRng& rng, Shape dom, Shape cod) {
    const std::size_t r = total_dim(cod), c = total_dim(dom);
    return Mor(std::move(dom), std::move(cod), random_matrix(rng, r, c, 4, 2));
}

} // namespace

TEST_CASE("objects, duals and the tensor unit") {
    const Obj u("U", 3);
    CHECK(u.dual().dual() == u);
    CHECK(u.dual().dim() == 3);
    CHECK(u.dual() != u);
    CHECK(left_dual(u) == right_dual(u));
    CHECK(Obj::unit().dim() == 1);
    CHECK_THROWS_AS(Obj("1", 2), std::invalid_argument);
    CHECK(normalize({Obj::unit(), u, Obj::unit()}) == Shape{u});
}

TEST_CASE("compose checks shapes and associates") {
    SeededRng rng;
    const Obj u("U", 3);
    const Mor f = random_mor(rng, {u}, {u}), g = random_mor(rng, {u}, {u}), h = random_mor(rng, {u}, {u});
    CHECK(compose(id(u), f) == f);
    CHECK(compose(compose(h, g), f) == compose(h, compose(g, f)));
    CHECK(compose(h, g, f) == compose(h, compose(g, f)));
    CHECK_THROWS_AS(compose(f, id(Obj("V", 3))), std::invalid_argument);
    // Same total dimension is not enough: shapes must agree object by object.
    const Obj v2("V", 2), w3("W", 3);
    CHECK_THROWS_AS(compose(id(Shape{w3, v2}), id(Shape{v2, w3})), std::invalid_argument);
}

TEST_CASE("tensor: strict unit, identities, interchange law") {
    SeededRng rng(2);
    const Obj u("U", 2), v("V", 3);
    const Mor f = random_mor(rng, {u}, {v});
    CHECK(tensor(f, id(Obj::unit())) == f);
    CHECK(tensor(id(u), id(v)) == id(Shape{u, v}));
    for (int t = 0; t < 10; ++t) {
        const Mor f1 = random_mor(rng, {v}, {u}), f2 = random_mor(rng, {u}, {v});
        const Mor g1 = random_mor(rng, {u}, {v, u}), g2 = random_mor(rng, {v}, {u});
        CHECK(compose(tensor(f1, g1), tensor(f2, g2)) == tensor(compose(f1, f2), compose(g1, g2)));
    }
}

TEST_CASE("evaluations against the dual-basis formulas") {
    const Obj u("U", 3);
    // d_U(e^i ⊗ e_j) = δ_ij: row vector with ones at i*n+i.
    const Mor d = ev(u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(d.matrix()(0, i * 3 + j) == Scalar(i == j ? 1 : 0));
    CHECK(coev(u).matrix() == d.matrix().transpose());
    CHECK(ev_tilde(u).matrix() == d.matrix());
    CHECK(coev_tilde(u).matrix() == d.matrix().transpose());
    CHECK(ev(u).dom() == Shape{u.dual(), u});
    CHECK(ev_tilde(u).dom() == Shape{u, left_dual(u)});

    // The closed loop d ∘ (swap) ∘ b is the trace of the identity.
    const Obj u4("U", 4);
    const Mor loop = compose(ev_tilde(u4), coev(u4));
    CHECK(loop.matrix() == Matrix{{4}});

    const Obj one("L", 1);
    for (const Mor& m : {ev(one), coev(one), ev_tilde(one), coev_tilde(one)}) CHECK(m.matrix() == Matrix{{1}});
}

TEST_CASE("zig-zag identities for dims 1..8") {
    for (std::size_t n = 1; n <= 8; ++n) CHECK(check_zigzag(Obj("U", n)).all());
    // Spelled out once.
    const Obj u("U", 3);
    CHECK(compose(tensor(ev(u), id(u.dual())), tensor(id(u.dual()), coev(u))) == id(u.dual()));
}

TEST_CASE("transposes: identity, anti-homomorphism, left equals right") {
    SeededRng rng(4);
    const Obj u("U", 3), v("V", 2), w("W", 4);
    CHECK(transpose_left(id(u)) == id(left_dual(u)));
    const Mor f = random_mor(rng, {u}, {v}), g = random_mor(rng, {v}, {w});
    CHECK(transpose_right(compose(g, f)) == compose(transpose_right(f), transpose_right(g)));
    CHECK(transpose_left(compose(g, f)) == compose(transpose_left(f), transpose_left(g)));
    CHECK(transpose_left(f) == transpose_right(f));
    CHECK(transpose_left(f).matrix() == f.matrix().transpose());
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = 1; b <= 5; ++b) {
            const Mor h = random_mor(rng, {Obj("P", a)}, {Obj("R", b)});
            CHECK(transpose_left(h) == transpose_right(h));
        }
}

TEST_CASE("wee and eew") {
    SeededRng rng(6);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto s = check_evaluation_sovereignty(Obj("U", n));
        CHECK(s.wee_equals_eew);
        CHECK(s.duals_agree);
    }
    for (std::size_t a : {2, 3})
        for (std::size_t b : {2, 3}) {
            const Obj u("U", a), v("V", b);
            const Mor f = random_mor(rng, {u}, {left_dual(v)});
            CHECK(eew(wee(f)) == f);
            CHECK(wee(f) == eew(f));
            CHECK(wee(f).matrix() == f.matrix().transpose());
        }
    const Obj u("U", 3), v("V", 3);
    const Mor f(Shape{u}, Shape{left_dual(v)}, random_invertible_matrix(rng, 3));
    CHECK(compose(wee(f), wee_inverse(f)) == id(right_dual(u)));
    CHECK(compose(wee_inverse(f), wee(f)) == id(v));
    CHECK_THROWS_AS(wee(id(Shape{u, v})), std::invalid_argument);
}
