#pragma once

// Exact fraction in lowest terms, backed by GMP's mpq_class.
// Decimal output is produced from the exact value, never from a double.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace goldbach {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT: implicit from integers is intended
    Rational(std::int64_t numerator, std::int64_t denominator);

    static Rational from_mpq(mpq_class value);
    // Accepts "a/b" or "a"; throws std::invalid_argument on malformed text or zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& mpq() const { return value_; }
    std::string numerator_string() const;
    std::string denominator_string() const;

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    Rational abs() const;

    // "num/den" in lowest terms; integers still carry "/1".
    std::string to_string() const;
    // Fixed-point decimal with `digits` fractional digits, round-half-even.
    std::string to_fixed(unsigned digits = 6) const;
    double to_double() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

}  // namespace goldbach
