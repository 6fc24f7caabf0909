#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stickcut {

/// Exact rational number in canonical form: den > 0 and gcd(|num|, den) = 1.
/// Canonical form is restored after every operation, so equality is
/// structural and values can be deduplicated and counted by comparing parts.
/// There is no floating-point path anywhere; ordering is decided by
/// cross-multiplication of the (arbitrary-precision) parts.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}

    Rational(mpz_class num) : num_(std::move(num)), den_(1) {}

    /// Throws std::domain_error if den == 0. The sign ends up on the
    /// numerator regardless of how it was distributed in the input.
    Rational(mpz_class num, mpz_class den);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error if b == 0.
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  private:
    void canonicalize();

    mpz_class num_;
    mpz_class den_;  // > 0
};

/// Three-way comparison as a plain function (same total order as <=>).
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    return a <=> b;
}

/// ⌊L/l⌋ computed exactly in integers as ⌊(L.num·l.den)/(L.den·l.num)⌋.
/// Requires L >= 0 and l > 0; throws std::domain_error otherwise, and
/// std::overflow_error if the quotient does not fit 64 bits.
std::uint64_t floor_quot(const Rational& big, const Rational& small);

/// ⌈L/l⌉, same contract as floor_quot. ceil_quot - floor_quot is 0 or 1,
/// and 0 exactly when l divides L.
std::uint64_t ceil_quot(const Rational& big, const Rational& small);

/// True iff L/l is a (nonnegative) integer. Requires L >= 0, l > 0.
bool is_integer_multiple(const Rational& big, const Rational& small);

/// Canonical text form: "a" for integers, "a/b" otherwise, base 10,
/// minus sign (if any) on the numerator.
std::string to_string(const Rational& r);

/// Parses "a" or "a/b": optional leading '-' on a, digits only, b > 0.
/// No whitespace, no '+', no empty parts. The value is canonicalized, so
/// "6/4" parses fine and re-serializes as "3/2".
/// Throws std::invalid_argument on any violation.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stickcut
