#include "randlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "randlab/errors.hpp"

namespace randlab {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool is_unsigned_literal(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) return std::nullopt;
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        const std::string_view den = text.substr(slash + 1);
        if (!is_unsigned_literal(den)) return std::nullopt;
        d = mpz_class(std::string(den), 10);
        if (d == 0) return std::nullopt;
    }
    return Rational(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text) {
    if (auto r = try_parse(text)) return *r;
    if (text.find_first_of(".eE") != std::string_view::npos)
        throw InputError("inexact numeric literal '" + std::string(text) +
                         "': write rationals exactly as p/q");
    throw InputError("malformed rational '" + std::string(text) + "': expected p/q or an integer");
}

Rational Rational::pow2(long k) {
    mpz_class p;
    const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return k >= 0 ? Rational(mpq_class(p, 1)) : Rational(mpq_class(1, p));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace randlab
