#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace congruent {

using Int = mpz_class;
using Rational = mpq_class;

/// num/den reduced, denominator positive. Throws UsageError on a zero denominator.
Rational make_rational(const Int& num, const Int& den);

/// True when r is stored in lowest terms with a positive denominator.
bool is_canonical(const Rational& r);

/// Dense integer polynomial; coefficient i multiplies z^i. Trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs);
    Poly(std::initializer_list<long> coeffs);

    /// c·z^power
    static Poly monomial(Int c, std::size_t power);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of z^i; zero past the degree.
    Int coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    /// Drops every term of degree > max_degree.
    Poly truncated(std::size_t max_degree) const;

    /// z^deg · p(1/z); reverses coefficients of a degree-`deg` polynomial.
    Poly reciprocal(std::size_t deg) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human-readable form, e.g. "1 - 3z + z^2".
    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Quotient and remainder of a by b over the integers. Throws ExactnessError
/// if some step needs a non-integral quotient coefficient, UsageError if b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// t_k = sum_i coefficients[i-1] · t_{k-i} for i = 1..order, applied to every
/// index past the supplied prefix. initial_terms[0] is the term at start_index.
struct RecurrenceSpec {
    std::vector<Int> coefficients;
    std::vector<Int> initial_terms;
    long start_index = 1;

    std::size_t order() const noexcept { return coefficients.size(); }
};

/// The first K terms (t_start .. t_{start+K-1}).
std::vector<Int> recurrence_eval(const RecurrenceSpec& spec, long K);

/// Coefficients of z^1 .. z^K in numerator/denominator as a formal power series.
std::vector<Int> series_expand(const Poly& numerator, const Poly& denominator, long K);

using IntMatrix = std::vector<std::vector<Int>>;

/// det(xI - M) via Berkowitz's division-free algorithm. Coefficient i multiplies x^i.
Poly charpoly(const IntMatrix& matrix);

}  // namespace congruent
