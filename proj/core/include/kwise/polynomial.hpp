#ifndef KWISE_POLYNOMIAL_HPP
#define KWISE_POLYNOMIAL_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree order with no trailing zeros.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(unsigned degree, Rational coeff = Rational(1));
    /// Monic product of (x - r) over the given roots.
    static Polynomial from_roots(std::span<const Rational> roots);
    static Polynomial from_integer_roots(std::span<const long> roots);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const;
    Rational at(long x) const { return (*this)(Rational(x)); }

    /// Coefficients of P(x + c).
    Polynomial shifted(const Rational& c) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    Polynomial operator/(const Rational& s) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Forward difference P(x+1) - P(x), iterated `order` times.
/// Each application lowers the degree by exactly one (or reaches zero).
Polynomial finite_difference(const Polynomial& p, unsigned order = 1);

/// The generalized binomial coefficient as a polynomial in x:
/// C(x - offset, d) = (x-offset)(x-offset-1)...(x-offset-d+1) / d!.
Polynomial choose_poly(unsigned d, const Rational& offset = Rational(0));

/// Coefficients b_j with P(x) = sum_j b_j * x(x-1)...(x-j+1), computed by
/// repeated exact synthetic division by x, x-1, x-2, ...
std::vector<Rational> falling_factorial_coeffs(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace kwise

#endif
