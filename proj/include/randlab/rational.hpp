#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace randlab {

/// Exact arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Every measure, integral and threshold in the library is one
/// of these; nothing is ever rounded.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                        // NOLINT(implicit)
    Rational(int v) : q_(static_cast<long>(v)) {}      // NOLINT(implicit)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses `p/q` or an integer `p`. Decimal notation is rejected.
    static Rational parse(std::string_view text);
    static std::optional<Rational> try_parse(std::string_view text);

    /// 2^k for any integer k, exact.
    static Rational pow2(long k);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    const mpq_class& raw() const { return q_; }

    /// `p/q`, or `p` when the denominator is 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    mpq_class q_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A rational or +infinity. Only pointwise liminf results and Q values carry
/// the infinity marker; step-function values never do.
struct ExtRational {
    std::optional<Rational> value;  // nullopt means +infinity

    static ExtRational infinity() { return {}; }
    static ExtRational finite(Rational r) { return {std::move(r)}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string str() const { return value ? value->str() : "inf"; }

    friend bool operator==(const ExtRational&, const ExtRational&) = default;
    friend bool operator<=(const ExtRational& a, const ExtRational& b) {
        if (b.is_infinite()) return true;
        if (a.is_infinite()) return false;
        return *a.value <= *b.value;
    }
};

}  // namespace randlab
