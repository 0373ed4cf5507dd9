#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "congruent/detail/q64.hpp"
#include "congruent/errors.hpp"
#include "congruent/families.hpp"
#include "congruent/plmap.hpp"
#include "oracles.hpp"

using namespace congruent;
using congruent::testing::brute_solutions;
using congruent::testing::iterate_eval;
using congruent::testing::random_point;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Random continuous self-map of [0, width] with `laps` laps and anchor
// abscissae on a grid of step 1/den. Needs laps <= width * den.
PLMap random_map(std::mt19937_64& rng, int laps, long width, long den) {
    std::uniform_int_distribution<long> value(0, width * den);
    std::vector<long> xs{0, width * den};
    std::uniform_int_distribution<long> inner(1, width * den - 1);
    while (static_cast<int>(xs.size()) < laps + 1) {
        long x = inner(rng);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<Anchor> a;
    for (long x : xs) a.push_back({q(x, den), q(value(rng), den)});
    return PLMap(std::move(a));
}

std::set<Rational> as_set(const SolutionSet& s) { return {s.points.begin(), s.points.end()}; }

}  // namespace

TEST(PLMap, RejectsMalformedAnchors) {
    EXPECT_THROW(PLMap::from_integers({{1, 1}}), UsageError);
    EXPECT_THROW(PLMap::from_integers({{1, 1}, {1, 1}}), UsageError);
    EXPECT_THROW(PLMap::from_integers({{2, 2}, {1, 1}}), UsageError);
    EXPECT_THROW(PLMap::from_integers({{1, 1}, {2, 3}}), UsageError);
}

TEST(PLMap, EvalInterpolates) {
    const PLMap f = make_fmn(2, 4);
    EXPECT_EQ(eval(f, q(2)), q(1));
    EXPECT_EQ(eval(f, q(3, 2)), q(2));
    EXPECT_EQ(eval(f, q(4)), q(2));
    EXPECT_THROW(eval(f, q(5)), DomainError);
    EXPECT_THROW(eval(f, q(1, 2)), DomainError);
}

TEST(IteratePieces, FirstIterateIsTheLaps) {
    const auto pieces = iterate_pieces(make_gn(1), 1);
    ASSERT_EQ(pieces.size(), 2u);
    EXPECT_EQ(pieces[0], (AffinePiece{q(1), q(2), q(1), q(1)}));
    EXPECT_EQ(pieces[1], (AffinePiece{q(2), q(3), q(-2), q(7)}));
}

TEST(IteratePieces, SecondIterateOfG1) {
    const auto pieces = iterate_pieces(make_gn(1), 2);
    ASSERT_EQ(pieces.size(), 3u);
    EXPECT_EQ(pieces[0], (AffinePiece{q(1), q(2), q(-2), q(5)}));
    EXPECT_EQ(pieces[1], (AffinePiece{q(2), q(5, 2), q(4), q(-7)}));
    EXPECT_EQ(pieces[2], (AffinePiece{q(5, 2), q(3), q(-2), q(8)}));
}

TEST(IteratePieces, TileTheDomainAndAgreeWithRepeatedEval) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const PLMap f = random_map(rng, 2 + trial % 4, 6, 1 + trial % 5);
        for (int k = 1; k <= 5; ++k) {
            const auto pieces = iterate_pieces(f, k);
            ASSERT_FALSE(pieces.empty());
            EXPECT_EQ(pieces.front().lo, f.lo());
            EXPECT_EQ(pieces.back().hi, f.hi());
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                const auto& p = pieces[i];
                ASSERT_LT(p.lo, p.hi);
                if (i > 0) ASSERT_EQ(pieces[i - 1].hi, p.lo);
                EXPECT_EQ(p(p.lo), iterate_eval(f, p.lo, k));
                EXPECT_EQ(p(p.hi), iterate_eval(f, p.hi, k));
                const Rational x = random_point(rng, p.lo, p.hi);
                EXPECT_EQ(p(x), iterate_eval(f, x, k));
            }
        }
    }
}

TEST(CountSolutions, Examples) {
    EXPECT_EQ(count_solutions(make_gn(1), 1, Sign::Plus), 1);
    EXPECT_EQ(count_solutions(make_base_map(), 1, Sign::Plus), 3);
    EXPECT_EQ(count_solutions(make_pn(2), 1, Sign::Minus), 1);
    EXPECT_EQ(count_solutions_through(make_gn(1), 6, Sign::Plus),
              (std::vector<Int>{1, 3, 4, 7, 11, 18}));
}

TEST(CountSolutions, IdentityHasInfinitelyMany) {
    const PLMap id = PLMap::from_integers({{0, 0}, {1, 1}});
    try {
        count_solutions(id, 1, Sign::Plus);
        FAIL() << "expected InfiniteSolutions";
    } catch (const InfiniteSolutions& e) {
        EXPECT_EQ(e.witness_lo(), q(0));
        EXPECT_EQ(e.witness_hi(), q(1));
    }
    const auto s = solution_set(id, 3, Sign::Plus);
    EXPECT_TRUE(s.infinite);
    EXPECT_TRUE(s.points.empty());
    ASSERT_TRUE(s.witness);
    EXPECT_EQ(s.witness->first, q(0));
}

TEST(CountSolutions, MinusNeedsZeroInDomain) {
    EXPECT_THROW(count_solutions(make_gn(1), 1, Sign::Minus), UsageError);
    EXPECT_THROW(count_solutions(make_gn(1), 0, Sign::Plus), UsageError);
}

TEST(CountSolutions, PieceGuard) {
    IterateOptions opts;
    opts.max_pieces = 50;
    EXPECT_THROW(count_solutions(make_gn(3), 10, Sign::Plus, opts), ResourceError);
    EXPECT_THROW(iterate_pieces(make_gn(3), 10, opts), ResourceError);
    EXPECT_NO_THROW(count_solutions(make_gn(3), 2, Sign::Plus, opts));
}

TEST(CountSolutions, SkipDegenerateCountsRemainingCrossings) {
    const PLMap h = make_hjmn(2, 5, 2);
    EXPECT_EQ(count_solutions(h, 1, Sign::Plus), 5);
    EXPECT_THROW(count_solutions(h, 2, Sign::Plus), InfiniteSolutions);
    // h^3 on [1, 2] is h again, so only the even iterates are degenerate.
    EXPECT_EQ(count_solutions(h, 3, Sign::Plus), 29);
    EXPECT_THROW(count_solutions_through(h, 3, Sign::Plus), InfiniteSolutions);
    IterateOptions skip;
    skip.degenerate = Degenerate::Skip;
    EXPECT_EQ(count_solutions_through(h, 3, Sign::Plus, skip), (std::vector<Int>{5, 11, 29}));
}

TEST(SolutionSet, Examples) {
    EXPECT_EQ(solution_set(make_gn(1), 1, Sign::Plus).points, (std::vector<Rational>{q(7, 3)}));
    EXPECT_EQ(solution_set(make_pn(2), 1, Sign::Plus).points,
              (std::vector<Rational>{q(-5, 4), q(0), q(5, 4)}));
    EXPECT_EQ(solution_set(make_pn(2), 1, Sign::Minus).points, (std::vector<Rational>{q(0)}));
}

TEST(SolutionSet, OddMapsAreSymmetric) {
    for (long n = 2; n <= 5; ++n) {
        const PLMap p = make_pn(n);
        for (int k = 1; k <= 4; ++k) {
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                const auto pts = solution_set(p, k, sign).points;
                const std::set<Rational> s(pts.begin(), pts.end());
                EXPECT_TRUE(s.count(q(0)));
                for (const auto& x : pts) EXPECT_TRUE(s.count(Rational(-x)));
            }
        }
    }
}

TEST(SolutionSet, MatchesLapSequenceEnumeration) {
    std::mt19937_64 rng(202);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const PLMap f = random_map(rng, 2 + trial % 3, 4, 1 + trial % 3);
        for (int k = 1; k <= 4; ++k) {
            const auto s = solution_set(f, k, Sign::Plus);
            if (s.infinite) continue;
            EXPECT_EQ(as_set(s), brute_solutions(f, k, 1)) << "trial " << trial << " k " << k;
            EXPECT_EQ(count_solutions(f, k, Sign::Plus), static_cast<long>(s.points.size()));
            for (const auto& x : s.points) EXPECT_EQ(iterate_eval(f, x, k), x);
            ++compared;
        }
    }
    EXPECT_GT(compared, 150);
}

TEST(SolutionSet, UnchangedByCollinearAnchor) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const PLMap f = random_map(rng, 3, 4, 2);
        auto anchors = f.anchors();
        std::uniform_int_distribution<std::size_t> pick(0, anchors.size() - 2);
        const std::size_t i = pick(rng);
        const Rational mid = (anchors[i].x + anchors[i + 1].x) / 2;
        anchors.insert(anchors.begin() + static_cast<std::ptrdiff_t>(i) + 1, Anchor{mid, eval(f, mid)});
        const PLMap g(anchors);
        for (int k = 1; k <= 4; ++k) {
            const auto a = solution_set(f, k, Sign::Plus);
            const auto b = solution_set(g, k, Sign::Plus);
            EXPECT_EQ(a.infinite, b.infinite);
            EXPECT_EQ(a.points, b.points);
        }
    }
}

TEST(SolutionSet, FallsBackToBigRationalsOnOverflow) {
    // A tent map with a peak at a huge-denominator point; its iterates overflow 64 bits.
    const Rational c = make_rational(1'000'000'000'039L, 2'000'000'000'081L);
    const PLMap tent({{q(0), q(0)}, {c, q(1)}, {q(1), q(0)}});
    for (int k = 1; k <= 4; ++k) {
        const auto s = solution_set(tent, k, Sign::Plus);
        ASSERT_FALSE(s.infinite);
        EXPECT_EQ(s.points.size(), std::size_t{1} << k);
        EXPECT_EQ(as_set(s), brute_solutions(tent, k, 1));
        for (const auto& x : s.points) EXPECT_EQ(iterate_eval(tent, x, k), x);
    }
    EXPECT_EQ(count_solutions(tent, 6, Sign::Plus), 64);
}

TEST(Q64, ArithmeticMatchesBigRationals) {
    using detail::Q64;
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = make_rational(num(rng), den(rng));
        const Rational b = make_rational(num(rng), den(rng));
        const Q64 x(a), y(b);
        EXPECT_EQ((x + y).to_rational(), Rational(a + b));
        EXPECT_EQ((x - y).to_rational(), Rational(a - b));
        EXPECT_EQ((x * y).to_rational(), Rational(a * b));
        if (b != 0) EXPECT_EQ((x / y).to_rational(), Rational(a / b));
        EXPECT_EQ(x < y, a < b);
        EXPECT_EQ(x == y, a == b);
        EXPECT_EQ(sgn(x), sgn(a));
    }
}

TEST(Q64, SignalsOverflow) {
    using detail::Q64;
    const Q64 big(Rational(Int("4000000000000000000"), Int(3)));
    EXPECT_THROW(big * big, detail::Overflow);
    EXPECT_THROW(Q64(Rational(Int("100000000000000000000"))), detail::Overflow);
    // products that reduce back into range are fine
    const Q64 r = Q64::make(static_cast<Q64::wide>(1) << 80, static_cast<Q64::wide>(1) << 79);
    EXPECT_EQ(r.to_rational(), q(2));
}

TEST(TransitionMatrix, Examples) {
    EXPECT_EQ(transition_matrix(make_gn(1)), (IntMatrix{{0, 1}, {1, 1}}));
    EXPECT_EQ(transition_matrix(make_base_map()),
              (IntMatrix{{1, 1, 1}, {1, 1, 1}, {0, 1, 1}}));
}

TEST(TransitionMatrix, RejectsNonLatticeMaps) {
    EXPECT_THROW(transition_matrix(PLMap({{q(0), q(0)}, {q(1, 2), q(1)}, {q(1), q(0)}})),
                 NotMarkovError);
    EXPECT_THROW(transition_matrix(PLMap({{q(0), q(1, 2)}, {q(1), q(1)}})), NotMarkovError);
    EXPECT_THROW(transition_matrix(PLMap({{q(1, 2), q(1, 2)}, {q(1), q(1)}})), NotMarkovError);
}

TEST(TransitionMatrix, CharpolyAnnihilatesLucasRecurrence) {
    const Poly chi = charpoly(transition_matrix(make_gn(1)));
    EXPECT_EQ(chi, (Poly{-1, -1, 1}));
    auto [quot, rem] = divmod(Poly{1, 0, -3, 0, 1}, chi);
    EXPECT_TRUE(rem.is_zero());
}
