#include "congruent/exactnum.hpp"

#include <algorithm>
#include <sstream>

#include "congruent/errors.hpp"

namespace congruent {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_canonical(const Rational& r) {
    if (sgn(r.get_den()) <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1;
}

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::monomial(Int c, std::size_t power) {
    std::vector<Int> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

Poly Poly::truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    return Poly(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

Poly Poly::reciprocal(std::size_t deg) const {
    std::vector<Int> v(deg + 1);
    for (std::size_t i = 0; i < coeffs_.size() && i <= deg; ++i) v[deg - i] = coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    std::vector<Int> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    if (rem.size() <= db) return {Poly{}, a};
    std::vector<Int> quot(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), bc[db].get_mpz_t()))
            throw ExactnessError("polynomial division leaves the integers");
        Int q = rem[i] / bc[db];
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::vector<Int> recurrence_eval(const RecurrenceSpec& spec, long K) {
    if (K < 1) throw UsageError("recurrence_eval needs K >= 1");
    const std::size_t order = spec.order();
    if (order == 0) throw SpecError("recurrence of order zero");
    if (spec.initial_terms.size() < order)
        throw SpecError("prefix has " + std::to_string(spec.initial_terms.size()) +
                        " terms, recurrence needs " + std::to_string(order));
    const auto n = static_cast<std::size_t>(K);
    std::vector<Int> t;
    t.reserve(n);
    for (std::size_t i = 0; i < n && i < spec.initial_terms.size(); ++i)
        t.push_back(spec.initial_terms[i]);
    while (t.size() < n) {
        Int next = 0;
        const std::size_t k = t.size();
        for (std::size_t i = 1; i <= order; ++i) {
            const Int& c = spec.coefficients[i - 1];
            if (c != 0) next += c * t[k - i];
        }
        t.push_back(std::move(next));
    }
    return t;
}

std::vector<Int> series_expand(const Poly& numerator, const Poly& denominator, long K) {
    if (K < 1) throw UsageError("series_expand needs K >= 1");
    const Int d0 = denominator.coeff(0);
    if (d0 == 0) throw PoleError("denominator vanishes at z = 0");
    const bool unit = (d0 == 1 || d0 == -1);
    const auto& den = denominator.coeffs();

    std::vector<Int> c(static_cast<std::size_t>(K) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        Int acc = numerator.coeff(k);
        for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc -= den[i] * c[k - i];
        if (unit) {
            c[k] = d0 == 1 ? acc : Int(-acc);
        } else {
            if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
                throw ExactnessError("series coefficient of z^" + std::to_string(k) +
                                     " is not an integer");
            c[k] = acc / d0;
        }
    }
    return {c.begin() + 1, c.end()};
}

// Berkowitz: p_r = T_r p_{r-1}, where T_r is the lower-triangular Toeplitz matrix with
// first column (1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C) for the leading r x r block
// [[A, C], [R, a_rr]]. Coefficients are kept highest degree first until the end.
Poly charpoly(const IntMatrix& matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n) throw UsageError("charpoly needs a square matrix");

    std::vector<Int> p{Int(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t m = r - 1;  // size of leading block A
        std::vector<Int> q(r + 1);
        q[0] = 1;
        q[1] = -matrix[m][m];
        std::vector<Int> v(m);  // A^i C
        for (std::size_t i = 0; i < m; ++i) v[i] = matrix[i][m];
        for (std::size_t i = 0; i + 2 <= r; ++i) {
            Int rv = 0;
            for (std::size_t c = 0; c < m; ++c) rv += matrix[m][c] * v[c];
            q[i + 2] = -rv;
            std::vector<Int> next(m);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) next[a] += matrix[a][b] * v[b];
            v = std::move(next);
        }
        std::vector<Int> np(r + 1);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j <= std::min(i, r - 1); ++j) np[i] += q[i - j] * p[j];
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    return Poly(std::move(p));
}

}  // namespace congruent
