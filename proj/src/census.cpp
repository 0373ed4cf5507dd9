#include "congruent/census.hpp"

#include <algorithm>
#include <string>

#include "congruent/detail/lap_engine.hpp"
#include "congruent/errors.hpp"

namespace congruent {

namespace {

Int alternating_sum(std::uint64_t m, const std::vector<std::uint64_t>& primes, const TermAccessor& phi) {
    Int total = 0;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t d = m;
        int bits = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                d /= primes[i];
                ++bits;
            }
        }
        if (bits % 2 == 0)
            total += phi(d);
        else
            total -= phi(d);
    }
    return total;
}

void check_m(long m) {
    if (m < 1) throw UsageError("period must be >= 1, got " + std::to_string(m));
}

void check_odd(const PLMap& map) {
    if (map.lo() != -map.hi()) throw UsageError("symmetric census needs a domain symmetric about 0");
    for (const auto& a : map.anchors())
        if (eval(map, -a.x) != -a.y) throw UsageError("symmetric census needs an odd map");
}

template <class S>
std::size_t find_point(const std::vector<S>& pts, const S& y) {
    auto it = std::lower_bound(pts.begin(), pts.end(), y);
    if (it == pts.end() || !(*it == y))
        throw InvariantViolation("orbit left the solution set of f^m(x) = x");
    return static_cast<std::size_t>(it - pts.begin());
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

FactoredInt factorize(std::int64_t m) {
    if (m < 1) throw UsageError("factorize needs m >= 1, got " + std::to_string(m));
    FactoredInt out;
    out.value = static_cast<std::uint64_t>(m);
    std::uint64_t rest = out.value;
    for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    }
    if (rest > 1) out.factors.emplace_back(rest, 1);
    return out;
}

Int phi1(std::uint64_t m, const TermAccessor& phi) {
    if (m < 1) throw UsageError("phi1 needs m >= 1");
    std::vector<std::uint64_t> primes;
    for (auto [p, e] : factorize(static_cast<std::int64_t>(m)).factors) primes.push_back(p);
    return alternating_sum(m, primes, phi);
}

Int phi2(std::uint64_t m, const TermAccessor& psi) {
    if (m < 1) throw UsageError("phi2 needs m >= 1");
    std::vector<std::uint64_t> odd;
    for (auto [p, e] : factorize(static_cast<std::int64_t>(m)).factors)
        if (p != 2) odd.push_back(p);
    if (odd.empty()) return psi(m) - 1;
    return alternating_sum(m, odd, psi);
}

std::vector<CensusReport> verify_congruence(const std::vector<Int>& terms, Operator op, long K) {
    if (K < 1) throw UsageError("verify_congruence needs K >= 1");
    if (terms.size() < static_cast<std::size_t>(K))
        throw UsageError("verify_congruence needs " + std::to_string(K) + " terms");
    const TermAccessor at = [&terms](std::uint64_t k) { return terms.at(k - 1); };
    std::vector<CensusReport> out;
    out.reserve(static_cast<std::size_t>(K));
    for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(K); ++k) {
        CensusReport r;
        r.k = k;
        r.phi_value = terms[k - 1];
        r.operator_value = op == Operator::Phi1 ? phi1(k, at) : phi2(k, at);
        r.modulus = op == Operator::Phi1 ? k : 2 * k;
        mpz_fdiv_q_ui(r.quotient.get_mpz_t(), r.operator_value.get_mpz_t(), r.modulus);
        r.pass = mpz_divisible_ui_p(r.operator_value.get_mpz_t(), r.modulus) != 0;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CensusReport> verify_congruence(const SequenceSpec& spec, Operator op, long K) {
    if (K < 1) throw UsageError("verify_congruence needs K >= 1");
    return verify_congruence(spec.terms(K), op, K);
}

PeriodCensus periodic_census(const PLMap& map, long m, const IterateOptions& opts) {
    check_m(m);
    const std::uint64_t count = detail::with_exact_scalar([&](auto tag) -> std::uint64_t {
        using S = typename decltype(tag)::type;
        detail::LapEngine<S> engine(map);
        const auto pts = detail::collect_solutions(engine, static_cast<int>(m), Sign::Plus, opts.max_pieces,
                                                   opts.degenerate);
        std::vector<bool> seen(pts.size(), false);
        std::vector<std::size_t> orbit;
        std::uint64_t exact = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (seen[i]) continue;
            orbit.assign(1, i);
            S y = engine.eval(pts[i]);
            while (!(y == pts[i])) {
                if (orbit.size() >= static_cast<std::size_t>(m))
                    throw InvariantViolation("solution of f^m(x) = x did not return within m steps");
                orbit.push_back(find_point(pts, y));
                y = engine.eval(y);
            }
            const std::size_t period = orbit.size();
            if (static_cast<std::size_t>(m) % period != 0)
                throw InvariantViolation("least period does not divide m");
            for (std::size_t idx : orbit) seen[idx] = true;
            if (period == static_cast<std::size_t>(m)) exact += period;
        }
        return exact;
    });
    const auto um = static_cast<std::uint64_t>(m);
    if (count % um != 0)
        throw InvariantViolation(std::to_string(count) + " points of least period " + std::to_string(m) +
                                 " do not split into orbits");
    return {Int(static_cast<unsigned long>(count)), Int(static_cast<unsigned long>(count / um))};
}

PeriodCensus symmetric_census(const PLMap& map, long m, const IterateOptions& opts) {
    check_m(m);
    check_odd(map);
    const std::size_t period = 2 * static_cast<std::size_t>(m);
    const std::uint64_t count = detail::with_exact_scalar([&](auto tag) -> std::uint64_t {
        using S = typename decltype(tag)::type;
        detail::LapEngine<S> engine(map);
        const auto pts = detail::collect_solutions(engine, static_cast<int>(m), Sign::Minus, opts.max_pieces,
                                                   opts.degenerate);
        std::uint64_t exact = 0;
        std::vector<S> orbit;
        for (const S& x : pts) {
            orbit.assign(1, x);
            S y = engine.eval(x);
            while (!(y == x) && orbit.size() <= period) {
                orbit.push_back(y);
                y = engine.eval(y);
            }
            if (orbit.size() != period) continue;
            bool symmetric = true;
            for (std::size_t i = 0; i < static_cast<std::size_t>(m) && symmetric; ++i)
                symmetric = orbit[i + static_cast<std::size_t>(m)] == -orbit[i];
            if (symmetric) ++exact;
        }
        return exact;
    });
    if (count % period != 0)
        throw InvariantViolation(std::to_string(count) + " symmetric points of least period " +
                                 std::to_string(period) + " do not split into orbits");
    return {Int(static_cast<unsigned long>(count)), Int(static_cast<unsigned long>(count / period))};
}

std::vector<Int> qrs_sequence(long n, long q, long r, long s, long K) {
    if (n < 2) throw UsageError("qrs explorer needs n >= 2");
    const Int top = 2 * n + 1;
    RecurrenceSpec spec;
    spec.initial_terms = {top, top * top - 2 * q, top * top * top - 6 * r};
    spec.coefficients = {top, Int(-q), Int(-s)};
    return recurrence_eval(spec, K);
}

QrsTriple qrs_for_hjmn(long j, long m, long n) {
    const long diff = j - m;
    return {2 * n - diff, n * (2 * n + 1 - diff), diff};
}

std::vector<QrsFinding> explore_qrs(long n, IntRange q, IntRange r, IntRange s, long K) {
    if (K < 1) throw UsageError("explore_qrs needs K >= 1");
    if (q.lo > q.hi || r.lo > r.hi || s.lo > s.hi) throw UsageError("empty parameter range");
    std::vector<QrsFinding> out;
    for (long qi = q.lo; qi <= q.hi; ++qi) {
        for (long ri = r.lo; ri <= r.hi; ++ri) {
            for (long si = s.lo; si <= s.hi; ++si) {
                QrsFinding f;
                f.triple = {qi, ri, si};
                const auto terms = qrs_sequence(n, qi, ri, si, K);
                for (const auto& rep : verify_congruence(terms, Operator::Phi1, K)) {
                    if (!rep.pass) {
                        f.holds = false;
                        f.first_failure_k = static_cast<long>(rep.k);
                        break;
                    }
                }
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

std::vector<CensusReport> check_phi1_on_s(long n, long K) {
    return verify_congruence(spec_s(n), Operator::Phi1, K);
}

}  // namespace congruent
