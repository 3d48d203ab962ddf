#include "kwise/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace kwise {

namespace {

mpz_class parse_integer(std::string_view s, const char* context) {
    if (s.empty()) throw std::invalid_argument(std::string("empty ") + context);
    size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign without digits");
    for (size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw std::invalid_argument("invalid digit in '" + std::string(s) + "'");
        }
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    if (value_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), "numerator");
        mpz_class den = parse_integer(s.substr(slash + 1), "denominator");
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("trailing decimal point in '" + std::string(s) + "'");
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("invalid decimal '" + std::string(s) + "'");
            }
        }
        bool negative = !whole.empty() && whole[0] == '-';
        mpz_class whole_part = whole.empty() || whole == "+" || whole == "-"
                                   ? mpz_class(0)
                                   : parse_integer(whole, "integer part");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class frac_part(std::string(frac), 10);
        mpz_class num = ::abs(whole_part) * scale + frac_part;
        if (negative) num = -num;
        return Rational(num, scale);
    }
    return Rational(parse_integer(s, "integer"), mpz_class(1));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

Rational abs(const Rational& q) {
    return q.sign() < 0 ? -q : q;
}

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q.is_zero()) throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / q, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

mpz_class floor(const Rational& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace kwise
