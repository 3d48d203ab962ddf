#ifndef KWISE_RATIONAL_HPP
#define KWISE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kwise {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. The one scalar type used for every exact quantity in the
/// library; no operation on it ever rounds.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : value_(static_cast<long>(n)) {} // NOLINT
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : value_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    /// Accepts "a/b", an integer string, or a finite decimal such as "0.3"
    /// (parsed exactly, never through binary floating point).
    /// Throws std::invalid_argument on anything else.
    static Rational from_string(std::string_view s);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "a/b" in lowest terms; plain "a" when the value is an integer.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class value_; // canonical at all times
};

Rational abs(const Rational& q);

/// q^e for integer e; e < 0 requires q != 0.
Rational pow(const Rational& q, long e);

/// Largest integer <= q.
mpz_class floor(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace kwise

#endif
