#include <vector>

#include <gtest/gtest.h>

#include "congruent/errors.hpp"
#include "congruent/families.hpp"
#include "congruent/sequences.hpp"

using namespace congruent;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<SequenceSpec> sample_specs() {
    std::vector<SequenceSpec> out;
    for (long n = 3; n <= 9; ++n) out.push_back(spec_a(n));
    for (long n = 1; n <= 5; ++n) out.push_back(spec_b(n));
    for (long n = 2; n <= 4; ++n)
        for (long j = 2; j <= 2 * n + 1; ++j)
            for (long m = 2; m <= 2 * n + 1; ++m) out.push_back(spec_c(j, m, n));
    for (long n = 2; n <= 5; ++n)
        for (long m = 1 - n; m <= n; ++m) out.push_back(spec_d(m, n));
    for (long n = 2; n <= 9; ++n) out.push_back(spec_s(n));
    return out;
}

std::vector<Int> oracle(const PLMap& f, long K, Sign sign, Degenerate policy = Degenerate::Throw) {
    IterateOptions opts;
    opts.degenerate = policy;
    return count_solutions_through(f, static_cast<int>(K), sign, opts);
}

}  // namespace

TEST(SeqA, Examples) {
    EXPECT_EQ(seq_a(3, 4), ints({3, 7, 18, 47}));
    EXPECT_EQ(seq_a(4, 3), ints({3, 7, 15}));
    EXPECT_EQ(seq_a(4, 4), ints({3, 7, 15, 35}));
    EXPECT_THROW(seq_a(2, 4), UsageError);
    EXPECT_THROW(seq_a(3, 0), UsageError);
}

TEST(SeqA, ClosedFormPrefix) {
    for (long n = 3; n <= 12; ++n) {
        const auto t = seq_a(n, n - 1);
        for (long k = 1; k <= n - 1; ++k) {
            const Int expect = (Int(1) << static_cast<mp_bitcnt_t>(k + 1)) - 1;
            EXPECT_EQ(t[static_cast<std::size_t>(k - 1)], expect);
        }
    }
}

TEST(SeqB, Examples) {
    EXPECT_EQ(seq_b(1, 5), ints({1, 3, 4, 7, 11}));
    EXPECT_EQ(seq_b(1, 6).back(), 18);
    // Evaluated from the odd/even prefix rules; agrees with the g_2 oracle below.
    EXPECT_EQ(seq_b(2, 8), ints({1, 3, 1, 7, 6, 15, 15, 31}));
    EXPECT_THROW(seq_b(0, 3), UsageError);
}

TEST(SeqC, Examples) {
    EXPECT_EQ(seq_c(2, 5, 2, 3), ints({5, 11, 29}));
    for (long n = 2; n <= 4; ++n)
        for (long j = 2; j <= 2 * n + 1; ++j)
            EXPECT_EQ(seq_c(j, j, n, 2)[1], Int((2 * n + 1) * (2 * n + 1) - 4 * n));
    // Evaluated from the k <= 3 formulas and the recurrence; agrees with the h oracle below.
    EXPECT_EQ(seq_c(3, 2, 2, 4), ints({5, 19, 77, 323}));
    EXPECT_THROW(seq_c(1, 2, 2, 3), UsageError);
    EXPECT_THROW(seq_c(2, 6, 2, 3), UsageError);
    EXPECT_THROW(seq_c(2, 2, 1, 3), UsageError);
}

TEST(SeqC, SwapMapClosedForm) {
    for (long n = 2; n <= 6; ++n) {
        const auto t = seq_c(2, 2 * n + 1, n, 20);
        Int power = 1;
        for (std::size_t k = 0; k < t.size(); ++k) {
            power *= 2 * n - 1;
            EXPECT_EQ(t[k], power + 2) << "n " << n << " k " << k + 1;
            if (k + 1 < t.size()) EXPECT_EQ(t[k + 1], (2 * n - 1) * t[k] - 4 * (n - 1));
        }
    }
}

TEST(SeqD, Examples) {
    EXPECT_EQ(seq_d(1, 2, 4), ints({2, 6, 14, 34}));
    EXPECT_EQ(seq_d(0, 3, 3), ints({3, 9, 27}));
    EXPECT_EQ(seq_d(-1, 2, 4), ints({2, 2, 2, 2}));
    EXPECT_THROW(seq_d(3, 2, 4), UsageError);
    EXPECT_THROW(seq_d(-2, 2, 4), UsageError);
    EXPECT_THROW(seq_d(0, 1, 4), UsageError);
}

TEST(SeqS, Examples) {
    EXPECT_EQ(seq_s(2, 4), ints({1, 5, 13, 33}));
    EXPECT_EQ(seq_s(3, 6), ints({1, 1, 7, 17, 41, 97}));
    EXPECT_EQ(seq_s(2, 1), ints({1}));
    EXPECT_THROW(seq_s(1, 4), UsageError);
}

TEST(GfOf, Examples) {
    const auto a3 = gf_of(spec_a(3));
    EXPECT_EQ(a3.numerator, (Poly{0, 3, -2}));
    EXPECT_EQ(a3.denominator, (Poly{1, -3, 1}));
    const auto d = gf_of(spec_d(1, 2));
    EXPECT_EQ(d.numerator, (Poly{0, 2, 2}));
    EXPECT_EQ(d.denominator, (Poly{1, -2, -1}));
    const auto s2 = gf_of(spec_s(2));
    EXPECT_EQ(s2.denominator, (Poly{1, -3, 1, 1}));
    EXPECT_EQ(s2.numerator, (Poly{0, 1, 2, -1}));
}

TEST(GfOf, ExpansionMatchesTerms) {
    for (const auto& spec : sample_specs()) {
        const auto gf = gf_of(spec);
        EXPECT_EQ(series_expand(gf.numerator, gf.denominator, 50), spec.terms(50)) << spec.name();
    }
}

TEST(GfOf, PrintedSNumerator) {
    // The n = 2 instruction leaves an extra -z^3; the n = 3 one is exact.
    EXPECT_EQ(s_numerator_as_printed(2), (Poly{0, 1, 2, -2}));
    EXPECT_NE(s_numerator_as_printed(2), gf_of(spec_s(2)).numerator);
    EXPECT_EQ(s_numerator_as_printed(3), gf_of(spec_s(3)).numerator);
    for (long n = 4; n <= 12; ++n) EXPECT_EQ(s_numerator_as_printed(n), gf_of(spec_s(n)).numerator);
}

TEST(Oracle, AFamilyOnFMaps) {
    EXPECT_EQ(oracle(make_base_map(), 10, Sign::Plus), seq_a(3, 10));
    for (long n = 4; n <= 7; ++n) EXPECT_EQ(oracle(make_fmn(2, n), 10, Sign::Plus), seq_a(n, 10));
}

TEST(Oracle, BFamilyOnGMaps) {
    for (long n = 1; n <= 4; ++n) EXPECT_EQ(oracle(make_gn(n), 10, Sign::Plus), seq_b(n, 10));
}

TEST(Oracle, CFamilyOnHMaps) {
    for (long n = 2; n <= 3; ++n) {
        const long K = n == 2 ? 10 : 7;
        for (long j = 2; j <= 2 * n + 1; ++j) {
            for (long m = 2; m <= 2 * n + 1; ++m) {
                const bool swaps = j == 2 || m == 2 * n + 1;
                const auto policy = swaps ? Degenerate::Skip : Degenerate::Throw;
                EXPECT_EQ(oracle(make_hjmn(j, m, n), K, Sign::Plus, policy), seq_c(j, m, n, K))
                    << j << "," << m << "," << n;
            }
        }
    }
}

TEST(Oracle, PMapsGiveSAndEvenA) {
    for (long n = 2; n <= 4; ++n) {
        EXPECT_EQ(oracle(make_pn(n), 10, Sign::Minus), seq_s(n, 10)) << "n " << n;
        EXPECT_EQ(oracle(make_pn(n), 10, Sign::Plus), seq_a(2 * n, 10)) << "n " << n;
    }
}

TEST(MakeSpec, ParsesAndNames) {
    EXPECT_EQ(make_spec({parse_seq_family("a"), 4}).name(), "a(n=4)");
    EXPECT_EQ(make_spec({parse_seq_family("c"), 2, 5, 2}).name(), "c(j=2,m=5,n=2)");
    EXPECT_EQ(make_spec({SeqFamily::D, 2, 1}).terms(4), seq_d(1, 2, 4));
    for (auto f : {SeqFamily::A, SeqFamily::B, SeqFamily::C, SeqFamily::D, SeqFamily::S})
        EXPECT_EQ(parse_seq_family(to_string(f)), f);
    EXPECT_THROW(parse_seq_family("e"), UsageError);
}
