#pragma once

#include <string>
#include <vector>

#include "congruent/exactnum.hpp"

namespace congruent {

enum class SeqFamily { A, B, C, D, S };

/// An integer sequence t_1, t_2, ... given by a closed-form prefix, a linear
/// recurrence past it, and a rational generating function sum t_k z^k.
struct SequenceSpec {
    SeqFamily family = SeqFamily::A;
    long n = 0;
    long m = 0;
    long j = 0;
    RecurrenceSpec recurrence;  // initial_terms is the closed-form prefix
    Poly gf_numerator;
    Poly gf_denominator;

    /// t_1 .. t_K.
    std::vector<Int> terms(long K) const { return recurrence_eval(recurrence, K); }

    /// e.g. "a(n=4)", "c(j=2,m=5,n=2)".
    std::string name() const;
};

// a_{n,k}: 2^{k+1} - 1 for k < n, then a_k = 3a_{k-1} - sum_{i=2}^{n-1} a_{k-i}.
SequenceSpec spec_a(long n);
// b_{n,k}: odd/even closed forms through k = 4n, then b_k = 3b_{k-2} - sum_{i=2}^{2n} b_{k-2i}.
SequenceSpec spec_b(long n);
// c_{j,m,n,k}: closed forms for k <= 3, then a third-order recurrence.
SequenceSpec spec_c(long j, long m, long n);
// d_{m,n,k}: d_1 = n, d_2 = n^2 + 2m, d_k = n d_{k-1} + m d_{k-2}.
SequenceSpec spec_d(long m, long n);
// s_{n,k}: 1 for k < n, 2^{k-n}·2k + 1 for n <= k < 2n, then s_k = 3s_{k-1} - sum_{i=2}^{2n-1} s_{k-i}.
SequenceSpec spec_s(long n);

std::vector<Int> seq_a(long n, long K);
std::vector<Int> seq_b(long n, long K);
std::vector<Int> seq_c(long j, long m, long n, long K);
std::vector<Int> seq_d(long m, long n, long K);
std::vector<Int> seq_s(long n, long K);

struct GeneratingFunction {
    Poly numerator;
    Poly denominator;
};

/// The generating function of the sequence. For the s-family with n = 2 or 3
/// the numerator is computed as the truncation of S(z)·D(z) to degree 2n - 1.
GeneratingFunction gf_of(const SequenceSpec& spec);

/// The s-family numerator z - 2z^2 - z^3 + sum_{k=5}^{n-1} (k-4) z^k + (3n-4) z^n
/// - sum_{k=n+1}^{2n-1} (2n-k) z^k as printed, dropping -2z^2 when n = 2 and
/// -z^3 when n = 3.
Poly s_numerator_as_printed(long n);

struct SeqParams {
    SeqFamily family = SeqFamily::A;
    long n = 0;
    long m = 0;
    long j = 0;
};

SequenceSpec make_spec(const SeqParams& params);

/// "a".."d", "s". Throws UsageError on anything else.
SeqFamily parse_seq_family(const std::string& tag);
std::string to_string(SeqFamily family);

}  // namespace congruent
