#pragma once

#include <cstdint>
#include <exception>
#include <stdexcept>

#include <gmpxx.h>

namespace congruent::detail {

/// Raised when a Q64 result does not fit in 64 bits even after reduction.
struct Overflow : std::exception {
    const char* what() const noexcept override { return "64-bit rational overflow"; }
};

/// Rational with 64-bit numerator and positive 64-bit denominator, not kept
/// reduced. Intermediates are 128-bit; a result is reduced only when it would
/// not fit, and Overflow is thrown if it still does not. Callers fall back to
/// mpq_class on Overflow, so a Q64 result is always exact.
class Q64 {
public:
    using wide = __int128;

    constexpr Q64() noexcept = default;
    constexpr Q64(std::int64_t n) noexcept : num_(n) {}  // NOLINT(google-explicit-constructor)

    explicit Q64(const mpq_class& r) {
        if (!mpz_fits_slong_p(r.get_num_mpz_t()) || !mpz_fits_slong_p(r.get_den_mpz_t()))
            throw Overflow{};
        num_ = mpz_get_si(r.get_num_mpz_t());
        den_ = mpz_get_si(r.get_den_mpz_t());
    }

    static Q64 make(wide n, wide d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (!fits(n) || !fits(d)) {
            const wide g = gcd(n < 0 ? -n : n, d);
            n /= g;
            d /= g;
            if (!fits(n) || !fits(d)) throw Overflow{};
        }
        Q64 q;
        q.num_ = static_cast<std::int64_t>(n);
        q.den_ = static_cast<std::int64_t>(d);
        return q;
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    mpq_class to_rational() const {
        mpq_class r(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
        r.canonicalize();
        return r;
    }

    friend int sgn(const Q64& q) noexcept { return (q.num_ > 0) - (q.num_ < 0); }

    Q64 operator-() const { return make(-static_cast<wide>(num_), den_); }

    friend Q64 operator+(const Q64& a, const Q64& b) {
        if (a.den_ == b.den_) return make(static_cast<wide>(a.num_) + b.num_, a.den_);
        return make(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                    static_cast<wide>(a.den_) * b.den_);
    }
    friend Q64 operator-(const Q64& a, const Q64& b) { return a + (-b); }
    friend Q64 operator*(const Q64& a, const Q64& b) {
        if (b.den_ == 1 && a.den_ == 1) return make(static_cast<wide>(a.num_) * b.num_, 1);
        return make(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
    }
    friend Q64 operator/(const Q64& a, const Q64& b) {
        if (b.num_ == 0) throw std::domain_error("Q64 division by zero");
        return make(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
    }

    friend bool operator==(const Q64& a, const Q64& b) noexcept {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return static_cast<wide>(a.num_) * b.den_ == static_cast<wide>(b.num_) * a.den_;
    }
    friend bool operator<(const Q64& a, const Q64& b) noexcept {
        if (a.den_ == b.den_) return a.num_ < b.num_;
        return static_cast<wide>(a.num_) * b.den_ < static_cast<wide>(b.num_) * a.den_;
    }
    friend bool operator>(const Q64& a, const Q64& b) noexcept { return b < a; }
    friend bool operator<=(const Q64& a, const Q64& b) noexcept { return !(b < a); }
    friend bool operator>=(const Q64& a, const Q64& b) noexcept { return !(a < b); }

private:
    static constexpr bool fits(wide v) noexcept {
        return v >= static_cast<wide>(INT64_MIN) && v <= static_cast<wide>(INT64_MAX);
    }
    static wide gcd(wide a, wide b) noexcept {
        while (b != 0) {
            wide t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace congruent::detail
