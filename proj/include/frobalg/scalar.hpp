// scalar.hpp
// Exact rational scalars backed by GMP.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobalg {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : q_(v) {}
    Scalar(long v) : q_(v) {}
    Scalar(long long v) : q_(static_cast<long>(v)) {}
    Scalar(unsigned long v) : q_(v) {}

    /// num/den; throws std::domain_error when den == 0.
    Scalar(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading sign on p). The result is normalized.
    static Scalar parse(std::string_view text) {
        auto bad = [&] {
            return std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
        };
        if (text.empty()) throw bad();
        auto slash = text.find('/');
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
        if (!digits_ok(num, true)) throw bad();
        if (slash != std::string_view::npos && !digits_ok(den, false)) throw bad();

        std::string ns(num);
        if (!ns.empty() && ns.front() == '+') ns.erase(0, 1);
        mpz_class n(ns, 10);
        mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
        if (d == 0) throw std::domain_error("rational \"" + std::string(text) + "\" has zero denominator");
        Scalar out;
        out.q_ = mpq_class(n, d);
        out.q_.canonicalize();
        return out;
    }

    /// Canonical "p/q" form (q > 0, lowest terms; integers keep the "/1").
    [[nodiscard]] std::string to_string() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Short form: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_short_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return to_string();
    }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return q_ == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        q_ /= o.q_;
        return *this;
    }

    /// this += a * b without a temporary Scalar.
    void add_product(const Scalar& a, const Scalar& b) {
        thread_local mpq_class t;
        mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a) { a.q_ = -a.q_; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_short_string(); }

private:
    mpq_class q_;
};

} // namespace frobalg

template <>
struct std::hash<frobalg::Scalar> {
    std::size_t operator()(const frobalg::Scalar& s) const noexcept {
        return std::hash<std::string>{}(s.to_string());
    }
};
