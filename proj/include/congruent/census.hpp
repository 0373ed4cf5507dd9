#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "congruent/exactnum.hpp"
#include "congruent/plmap.hpp"
#include "congruent/sequences.hpp"

namespace congruent {

struct FactoredInt {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (prime, exponent), primes ascending
};

bool is_prime(std::uint64_t n);

/// Trial division. Throws UsageError for m < 1.
FactoredInt factorize(std::int64_t m);

/// φ(k) for k >= 1.
using TermAccessor = std::function<Int(std::uint64_t)>;

/// Inclusion-exclusion over the distinct primes p of m:
/// sum over subsets T of (-1)^|T| φ(m / prod T). Φ1(1) = φ(1).
Int phi1(std::uint64_t m, const TermAccessor& phi);

/// ψ(m) - 1 when m is a power of two (m = 1 included); otherwise the same
/// alternating sum taken over the odd primes of m only.
Int phi2(std::uint64_t m, const TermAccessor& psi);

enum class Operator { Phi1, Phi2 };

/// Verification record for one k. pass iff operator_value ≡ 0 (mod modulus);
/// quotient is the floor quotient, which is the orbit count when pass holds.
struct CensusReport {
    std::uint64_t k = 0;
    Int phi_value;
    Int operator_value;
    std::uint64_t modulus = 1;
    Int quotient;
    bool pass = false;
};

/// Φ1 with modulus k, or Φ2 with modulus 2k, for each k = 1..K of the sequence.
std::vector<CensusReport> verify_congruence(const std::vector<Int>& terms, Operator op, long K);
std::vector<CensusReport> verify_congruence(const SequenceSpec& spec, Operator op, long K);

struct PeriodCensus {
    Int count;        // points of exact (symmetric) least period
    Int orbit_count;  // count / m, or count / 2m for symmetric orbits
};

/// Points of least period exactly m, found by walking the orbit of every
/// solution of f^m(x) = x. Throws InfiniteSolutions if that set is infinite
/// and InvariantViolation if the count is not a multiple of m. With
/// Degenerate::Skip only isolated solutions are considered.
PeriodCensus periodic_census(const PLMap& map, long m, const IterateOptions& opts = {});

/// Points of an odd map whose orbit has least period 2m and is its own
/// negation, found among the solutions of f^m(x) = -x.
PeriodCensus symmetric_census(const PLMap& map, long m, const IterateOptions& opts = {});

/// φ(1) = 2n+1, φ(2) = (2n+1)^2 - 2q, φ(3) = (2n+1)^3 - 6r,
/// φ(k) = (2n+1)φ(k-1) - qφ(k-2) - sφ(k-3).
std::vector<Int> qrs_sequence(long n, long q, long r, long s, long K);

struct QrsTriple {
    long q = 0;
    long r = 0;
    long s = 0;
};

/// The (q, r, s) that makes qrs_sequence coincide with c_{j,m,n}.
QrsTriple qrs_for_hjmn(long j, long m, long n);

struct IntRange {
    long lo = 0;
    long hi = 0;  // inclusive
};

struct QrsFinding {
    QrsTriple triple;
    bool holds = true;
    std::optional<long> first_failure_k;
};

/// Φ1(k, φ) ≡ 0 (mod k) for k <= K on every triple in the grid, ordered by q, then r, then s.
std::vector<QrsFinding> explore_qrs(long n, IntRange q, IntRange r, IntRange s, long K);

/// Φ1 with modulus k applied to the s-family, which is only known empirically to pass.
std::vector<CensusReport> check_phi1_on_s(long n, long K);

}  // namespace congruent
