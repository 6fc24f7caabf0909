#include "stickcut/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace stickcut {

namespace {

std::uint64_t to_u64(const mpz_class& z) {
    if (sgn(z) < 0 || !z.fits_ulong_p()) {
        throw std::overflow_error("quotient does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(z.get_ui());
}

void require_quotient_domain(const Rational& big, const Rational& small, const char* op) {
    if (big.is_negative()) {
        throw std::domain_error(std::string(op) + ": negative dividend");
    }
    if (!small.is_positive()) {
        throw std::domain_error(std::string(op) + ": divisor must be positive");
    }
}

}  // namespace

void Rational::canonicalize() {
    if (den_ == 0) {
        throw std::domain_error("zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) {
        den_ = 1;
    }
}

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so a <=> b follows the cross products.
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::uint64_t floor_quot(const Rational& big, const Rational& small) {
    require_quotient_domain(big, small, "floor_quot");
    mpz_class q;
    const mpz_class a = big.num() * small.den();
    const mpz_class b = big.den() * small.num();
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return to_u64(q);
}

std::uint64_t ceil_quot(const Rational& big, const Rational& small) {
    require_quotient_domain(big, small, "ceil_quot");
    mpz_class q;
    const mpz_class a = big.num() * small.den();
    const mpz_class b = big.den() * small.num();
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return to_u64(q);
}

bool is_integer_multiple(const Rational& big, const Rational& small) {
    require_quotient_domain(big, small, "is_integer_multiple");
    const mpz_class a = big.num() * small.den();
    const mpz_class b = big.den() * small.num();
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

std::string to_string(const Rational& r) {
    if (r.is_integer()) {
        return r.num().get_str();
    }
    return r.num().get_str() + "/" + r.den().get_str();
}

Rational parse_rational(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (const char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };

    std::string_view num_part = text;
    std::string_view den_part;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }

    bool negative = false;
    if (!num_part.empty() && num_part.front() == '-') {
        negative = true;
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part)) {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }

    mpz_class num(std::string(num_part), 10);
    if (negative) {
        num = -num;
    }
    if (den_part.data() == nullptr) {
        return Rational(std::move(num));
    }
    if (!all_digits(den_part)) {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class den(std::string(den_part), 10);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << to_string(r);
}

}  // namespace stickcut
