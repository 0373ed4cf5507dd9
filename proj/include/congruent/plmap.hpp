#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "congruent/exactnum.hpp"

namespace congruent {

struct Anchor {
    Rational x;
    Rational y;

    friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// x -> slope·x + intercept on [lo, hi].
struct AffinePiece {
    Rational lo;
    Rational hi;
    Rational slope;
    Rational intercept;

    Rational operator()(const Rational& x) const { return slope * x + intercept; }
    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Which equation is being solved: f^k(x) = x or f^k(x) = -x.
enum class Sign : int { Plus = 1, Minus = -1 };

/// Continuous piecewise-linear self-map of [x_first, x_last], linear between
/// consecutive anchors. Construction rejects non-increasing abscissae, fewer
/// than two anchors and values outside the interval.
class PLMap {
public:
    explicit PLMap(std::vector<Anchor> anchors);

    /// Convenience for the all-integer maps.
    static PLMap from_integers(const std::vector<std::pair<long, long>>& points);

    const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
    const Rational& lo() const noexcept { return anchors_.front().x; }
    const Rational& hi() const noexcept { return anchors_.back().x; }
    bool contains(const Rational& x) const { return lo() <= x && x <= hi(); }

    /// One affine piece per pair of consecutive anchors.
    std::vector<AffinePiece> laps() const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<Anchor> anchors_;
};

/// f(x) by interpolation between the bracketing anchors. Throws DomainError
/// outside the interval.
Rational eval(const PLMap& map, const Rational& x);

/// What to do with a piece on which f^k(x) = sign·x holds identically.
enum class Degenerate {
    Throw,  // InfiniteSolutions with the piece as witness
    Skip,   // count only the crossings of the other pieces
};

struct IterateOptions {
    /// Refinement aborts with ResourceError once an iterate needs more pieces.
    std::size_t max_pieces = 10'000'000;
    Degenerate degenerate = Degenerate::Throw;
};

/// Affine pieces of f^k tiling the domain, left to right.
std::vector<AffinePiece> iterate_pieces(const PLMap& map, int k, const IterateOptions& opts = {});

/// Number of distinct x with f^k(x) = sign·x. Throws InfiniteSolutions when a
/// whole piece solves the equation and ResourceError past the piece guard.
Int count_solutions(const PLMap& map, int k, Sign sign, const IterateOptions& opts = {});

/// count_solutions for k = 1..K in a single refinement pass; element k-1 is the
/// count for k. Throws InfiniteSolutions if any of those sets is infinite.
std::vector<Int> count_solutions_through(const PLMap& map, int K, Sign sign,
                                         const IterateOptions& opts = {});

struct SolutionSet {
    std::vector<Rational> points;  // ascending, distinct
    bool infinite = false;
    std::optional<std::pair<Rational, Rational>> witness;
};

/// The exact solutions of f^k(x) = sign·x. An interval of solutions is
/// reported through the infinite flag and witness rather than thrown.
SolutionSet solution_set(const PLMap& map, int k, Sign sign, const IterateOptions& opts = {});

/// 0/1 matrix over the unit intervals [i, i+1] of an integer-lattice map:
/// entry (i, j) is 1 iff f([i, i+1]) contains [j, j+1]. Throws NotMarkovError
/// unless the endpoints are integers and f maps every integer to an integer.
IntMatrix transition_matrix(const PLMap& map);

}  // namespace congruent
