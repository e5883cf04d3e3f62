// random.hpp
// Seeded generators for randomized property checks. The engine is
// std::mt19937_64 and the bounded draws use plain modular reduction, so a
// seed produces the same stream on every platform.

#pragma once

#include "frobalg/nakayama.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace frobalg {

inline constexpr std::uint64_t default_seed = 1234567;

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed = default_seed) : seed_(seed), engine_(seed) {}

    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("SeededRng::uniform: empty range");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    /// p/q with |p| <= range and 1 <= q <= max_den.
    Scalar rational(long range, long max_den = 1) { return Scalar(uniform(-range, range), uniform(1, max_den)); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

inline Matrix random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, long range = 3, long max_den = 1) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = rng.rational(range, max_den);
    return out;
}

inline Matrix random_invertible_matrix(SeededRng& rng, std::size_t n, long range = 3) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_matrix(rng, n, n, range);
        if (rank(m) == n) return m;
    }
    throw std::runtime_error("random_invertible_matrix: no invertible sample found");
}

inline PointElement random_point(const Algebra& alg, SeededRng& rng, long range = 3) {
    std::vector<Scalar> v(alg.dim());
    for (auto& s : v) s = rng.rational(range);
    return point(alg, v);
}

/// Samples until an invertible element appears.
inline Unit random_unit(const Algebra& alg, SeededRng& rng, long range = 3) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto r = try_invert_unit(alg, random_point(alg, rng, range));
        if (auto* u = std::get_if<Unit>(&r)) return std::move(*u);
    }
    throw std::runtime_error("random_unit: no unit found");
}

} // namespace frobalg
