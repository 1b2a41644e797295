#include "goldbach/rational.hpp"

#include <stdexcept>
#include <utility>

namespace goldbach {

namespace {

mpz_class to_mpz(std::int64_t v) {
    // mpz_class has no portable int64 constructor on every platform; go through the string form.
    return mpz_class(std::to_string(v), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
    value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
    Rational r;
    r.value_ = std::move(value);
    r.value_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    const std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    mpz_class n, d;
    if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
    if (d == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    }
    return from_mpq(mpq_class(n, d));
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

Rational Rational::abs() const { return from_mpq(::abs(value_)); }

std::string Rational::to_string() const { return numerator_string() + "/" + denominator_string(); }

std::string Rational::to_fixed(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

    const mpz_class magnitude = ::abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    mpz_class quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), magnitude.get_mpz_t(), den.get_mpz_t());

    const int half = cmp(mpz_class(remainder * 2), den);
    if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()) != 0)) {
        quotient += 1;
    }

    std::string body = quotient.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    if (digits > 0) {
        body.insert(body.size() - digits, ".");
    }
    const bool negative = sgn(value_) < 0 && quotient != 0;
    return negative ? "-" + body : body;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational::from_mpq(a.value_ + b.value_); }
Rational operator-(const Rational& a, const Rational& b) { return Rational::from_mpq(a.value_ - b.value_); }
Rational operator*(const Rational& a, const Rational& b) { return Rational::from_mpq(a.value_ * b.value_); }
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    return Rational::from_mpq(a.value_ / b.value_);
}

Rational Rational::operator-() const { return from_mpq(-value_); }

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

}  // namespace goldbach
