#include "congruent/sequences.hpp"

#include <string>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

Int pow2(long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

Int ipow(long base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), Int(base).get_mpz_t(), e);
    return r;
}

Poly term(long c, std::size_t power) { return Poly::monomial(Int(c), power); }

}  // namespace

std::string SequenceSpec::name() const {
    std::string s = to_string(family) + "(";
    switch (family) {
        case SeqFamily::C: s += "j=" + std::to_string(j) + ",m=" + std::to_string(m) + ","; break;
        case SeqFamily::D: s += "m=" + std::to_string(m) + ","; break;
        default: break;
    }
    return s + "n=" + std::to_string(n) + ")";
}

SequenceSpec spec_a(long n) {
    require(n >= 3, "a-family needs n >= 3");
    SequenceSpec s;
    s.family = SeqFamily::A;
    s.n = n;
    for (long k = 1; k <= n - 1; ++k) s.recurrence.initial_terms.push_back(pow2(k + 1) - 1);
    s.recurrence.coefficients.assign(static_cast<std::size_t>(n - 1), Int(-1));
    s.recurrence.coefficients[0] = 3;

    s.gf_numerator = term(3, 1);
    s.gf_denominator = Poly{1, -3};
    for (long k = 2; k <= n - 1; ++k) {
        s.gf_numerator = s.gf_numerator - term(k, static_cast<std::size_t>(k));
        s.gf_denominator = s.gf_denominator + term(1, static_cast<std::size_t>(k));
    }
    return s;
}

SequenceSpec spec_b(long n) {
    require(n >= 1, "b-family needs n >= 1");
    SequenceSpec s;
    s.family = SeqFamily::B;
    s.n = n;
    auto& prefix = s.recurrence.initial_terms;
    prefix.resize(static_cast<std::size_t>(4 * n));
    for (long k = 1; k <= 2 * n; ++k) {
        prefix[static_cast<std::size_t>(2 * k - 2)] = k <= n ? Int(1) : pow2(k - n - 1) * (2 * k - 1) + 1;
        prefix[static_cast<std::size_t>(2 * k - 1)] = pow2(k + 1) - 1;
    }
    // coefficient of b_{k-2} is 3, of b_{k-2i} (2 <= i <= 2n) is -1
    s.recurrence.coefficients.assign(static_cast<std::size_t>(4 * n), Int(0));
    s.recurrence.coefficients[1] = 3;
    for (long i = 2; i <= 2 * n; ++i) s.recurrence.coefficients[static_cast<std::size_t>(2 * i - 1)] = -1;

    s.gf_numerator = term(1, 1);
    s.gf_denominator = Poly{1, -1};
    for (long k = 2; k <= 2 * n; ++k) {
        const long sign = k % 2 == 0 ? 1 : -1;
        s.gf_numerator = s.gf_numerator + term(sign * k, static_cast<std::size_t>(k));
        s.gf_denominator = s.gf_denominator - term(sign, static_cast<std::size_t>(k));
    }
    return s;
}

SequenceSpec spec_c(long j, long m, long n) {
    require(n >= 2, "c-family needs n >= 2");
    require(2 <= j && j <= 2 * n + 1, "c-family needs 2 <= j <= 2n + 1");
    require(2 <= m && m <= 2 * n + 1, "c-family needs 2 <= m <= 2n + 1");
    SequenceSpec s;
    s.family = SeqFamily::C;
    s.n = n;
    s.m = m;
    s.j = j;
    const long top = 2 * n + 1;
    const long diff = j - m;
    const long q = 2 * n - diff;
    s.recurrence.initial_terms = {Int(top), ipow(top, 2) - 2 * q, ipow(top, 3) - 6 * n * (top - diff)};
    s.recurrence.coefficients = {Int(top), Int(-q), Int(-diff)};
    s.gf_numerator = Poly{0, top, -2 * q, -3 * diff};
    s.gf_denominator = Poly{1, -top, q, diff};
    return s;
}

SequenceSpec spec_d(long m, long n) {
    require(n >= 2, "d-family needs n >= 2");
    require(1 - n <= m && m <= n, "d-family needs 1 - n <= m <= n");
    SequenceSpec s;
    s.family = SeqFamily::D;
    s.n = n;
    s.m = m;
    s.recurrence.initial_terms = {Int(n), Int(n * n + 2 * m)};
    s.recurrence.coefficients = {Int(n), Int(m)};
    s.gf_numerator = Poly{0, n, 2 * m};
    s.gf_denominator = Poly{1, -n, -m};
    return s;
}

Poly s_numerator_as_printed(long n) {
    require(n >= 2, "s-family needs n >= 2");
    Poly p = term(1, 1);
    if (n != 2) p = p - term(2, 2);
    if (n != 3) p = p - term(1, 3);
    for (long k = 5; k <= n - 1; ++k) p = p + term(k - 4, static_cast<std::size_t>(k));
    p = p + term(3 * n - 4, static_cast<std::size_t>(n));
    for (long k = n + 1; k <= 2 * n - 1; ++k) p = p - term(2 * n - k, static_cast<std::size_t>(k));
    return p;
}

SequenceSpec spec_s(long n) {
    require(n >= 2, "s-family needs n >= 2");
    SequenceSpec s;
    s.family = SeqFamily::S;
    s.n = n;
    auto& prefix = s.recurrence.initial_terms;
    for (long k = 1; k <= n - 1; ++k) prefix.emplace_back(1);
    for (long k = n; k <= 2 * n - 1; ++k) prefix.push_back(pow2(k - n) * (2 * k) + 1);
    s.recurrence.coefficients.assign(static_cast<std::size_t>(2 * n - 1), Int(-1));
    s.recurrence.coefficients[0] = 3;

    s.gf_denominator = Poly{1, -3};
    for (long k = 2; k <= 2 * n - 1; ++k) s.gf_denominator = s.gf_denominator + term(1, static_cast<std::size_t>(k));

    if (n <= 3) {
        std::vector<Int> c(prefix.size() + 1);
        for (std::size_t i = 0; i < prefix.size(); ++i) c[i + 1] = prefix[i];
        s.gf_numerator = (Poly(std::move(c)) * s.gf_denominator).truncated(static_cast<std::size_t>(2 * n - 1));
    } else {
        s.gf_numerator = s_numerator_as_printed(n);
    }
    return s;
}

std::vector<Int> seq_a(long n, long K) { return spec_a(n).terms(K); }
std::vector<Int> seq_b(long n, long K) { return spec_b(n).terms(K); }
std::vector<Int> seq_c(long j, long m, long n, long K) { return spec_c(j, m, n).terms(K); }
std::vector<Int> seq_d(long m, long n, long K) { return spec_d(m, n).terms(K); }
std::vector<Int> seq_s(long n, long K) { return spec_s(n).terms(K); }

GeneratingFunction gf_of(const SequenceSpec& spec) { return {spec.gf_numerator, spec.gf_denominator}; }

SequenceSpec make_spec(const SeqParams& p) {
    switch (p.family) {
        case SeqFamily::A: return spec_a(p.n);
        case SeqFamily::B: return spec_b(p.n);
        case SeqFamily::C: return spec_c(p.j, p.m, p.n);
        case SeqFamily::D: return spec_d(p.m, p.n);
        case SeqFamily::S: return spec_s(p.n);
    }
    throw UsageError("unknown sequence family");
}

SeqFamily parse_seq_family(const std::string& tag) {
    if (tag == "a") return SeqFamily::A;
    if (tag == "b") return SeqFamily::B;
    if (tag == "c") return SeqFamily::C;
    if (tag == "d") return SeqFamily::D;
    if (tag == "s") return SeqFamily::S;
    throw UsageError("unknown family '" + tag + "' (expected a, b, c, d or s)");
}

std::string to_string(SeqFamily family) {
    switch (family) {
        case SeqFamily::A: return "a";
        case SeqFamily::B: return "b";
        case SeqFamily::C: return "c";
        case SeqFamily::D: return "d";
        case SeqFamily::S: return "s";
    }
    return "?";
}

}  // namespace congruent
