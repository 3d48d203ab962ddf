#include "kwise/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kwise {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(unsigned degree, Rational coeff) {
    Polynomial p;
    if (coeff.is_zero()) return p;
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = std::move(coeff);
    return p;
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial p = constant(Rational(1));
    for (const Rational& r : roots) {
        p = p * Polynomial({-r, Rational(1)});
    }
    return p;
}

Polynomial Polynomial::from_integer_roots(std::span<const long> roots) {
    std::vector<Rational> rs(roots.begin(), roots.end());
    return from_roots(rs);
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    if (coeffs_.empty() || c.is_zero()) return *this;
    // in-place Taylor shift: repeated synthetic multiplication by (x + c)
    std::vector<Rational> a = coeffs_;
    const size_t n = a.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t j = n - 1; j >= i + 1; --j) {
            a[j - 1] += c * a[j];
        }
    }
    return Polynomial(std::move(a));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    std::vector<Rational> out;
    out.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) out.push_back(s * c);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator/(const Rational& s) const {
    if (s.is_zero()) throw std::domain_error("division of polynomial by zero");
    return (Rational(1) / s) * (*this);
}

Polynomial finite_difference(const Polynomial& p, unsigned order) {
    Polynomial out = p;
    for (unsigned i = 0; i < order; ++i) {
        out = out.shifted(Rational(1)) - out;
    }
    return out;
}

Polynomial choose_poly(unsigned d, const Rational& offset) {
    Polynomial p = Polynomial::constant(Rational(1));
    Rational dfact(1);
    for (unsigned i = 0; i < d; ++i) {
        p = p * Polynomial({-(offset + Rational(static_cast<long>(i))), Rational(1)});
        dfact *= Rational(static_cast<long>(i + 1));
    }
    return p / dfact;
}

std::vector<Rational> falling_factorial_coeffs(const Polynomial& p) {
    std::vector<Rational> out;
    if (p.is_zero()) return out;
    std::vector<Rational> cur = p.coeffs();
    long c = 0;
    while (!cur.empty()) {
        // synthetic division of cur by (x - c): quotient q, remainder r
        const size_t n = cur.size();
        std::vector<Rational> q(n > 1 ? n - 1 : 0, Rational(0));
        Rational carry = cur.back();
        for (size_t j = n - 1; j > 0; --j) {
            q[j - 1] = carry;
            carry = cur[j - 1] + Rational(c) * carry;
        }
        out.push_back(carry); // remainder = coefficient of x(x-1)...(x-c+1)
        cur = std::move(q);
        ++c;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

} // namespace kwise
