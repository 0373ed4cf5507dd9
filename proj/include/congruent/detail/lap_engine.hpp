#pragma once

// Exact refinement of piecewise-linear iterates, templated on the scalar so the
// hot loops can run on Q64 and fall back to mpq_class when 64 bits overflow.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "congruent/detail/q64.hpp"
#include "congruent/errors.hpp"
#include "congruent/plmap.hpp"

namespace congruent::detail {

template <class S>
S from_rational(const Rational& r) {
    if constexpr (std::is_same_v<S, Rational>) {
        return r;
    } else {
        return S(r);
    }
}

inline Rational to_rational(const Rational& r) { return r; }
inline Rational to_rational(const Q64& q) { return q.to_rational(); }

template <class S>
struct Lap {
    S lo;
    S hi;
    S slope;
    S intercept;

    S at(const S& x) const { return S(slope * x) + intercept; }
};

template <class S>
class LapEngine {
public:
    explicit LapEngine(const PLMap& map) {
        for (const auto& p : map.laps())
            laps_.push_back({from_rational<S>(p.lo), from_rational<S>(p.hi),
                             from_rational<S>(p.slope), from_rational<S>(p.intercept)});
        const auto& a = map.anchors();
        for (std::size_t i = 1; i + 1 < a.size(); ++i) breaks_.push_back(from_rational<S>(a[i].x));
    }

    const std::vector<Lap<S>>& laps() const noexcept { return laps_; }
    const S& lo() const noexcept { return laps_.front().lo; }
    const S& hi() const noexcept { return laps_.back().hi; }

    /// Lap containing x; a breakpoint belongs to the lap on its right except at the domain end.
    std::size_t lap_index(const S& x) const {
        auto idx = static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), x) -
                                            breaks_.begin());
        return std::min(idx, laps_.size() - 1);
    }

    S eval(const S& x) const { return laps_[lap_index(x)].at(x); }

    /// Calls emit(Lap) for each piece of f∘p, left to right. The cuts are the
    /// preimages under p of f's breakpoints lying strictly inside p's image.
    template <class Emit>
    void refine(const Lap<S>& p, Emit&& emit) const {
        const int dir = sgn(p.slope);
        if (dir == 0) {
            const Lap<S>& L = laps_[lap_index(p.intercept)];
            emit(Lap<S>{p.lo, p.hi, S(0), L.at(p.intercept)});
            return;
        }
        const S ya = p.at(p.lo);
        const S yb = p.at(p.hi);
        const S& ymin = dir > 0 ? ya : yb;
        const S& ymax = dir > 0 ? yb : ya;
        const auto first = std::upper_bound(breaks_.begin(), breaks_.end(), ymin);
        const auto last = std::lower_bound(breaks_.begin(), breaks_.end(), ymax);
        const auto cuts = static_cast<std::size_t>(last - first);

        // Lap of f hit by the leftmost child, then step by dir.
        std::ptrdiff_t idx = dir > 0 ? first - breaks_.begin() : last - breaks_.begin();
        S x0 = p.lo;
        for (std::size_t t = 0; t <= cuts; ++t) {
            S x1 = p.hi;
            if (t < cuts) {
                const S& y = dir > 0 ? *(first + static_cast<std::ptrdiff_t>(t))
                                     : *(last - 1 - static_cast<std::ptrdiff_t>(t));
                x1 = S(y - p.intercept) / p.slope;
            }
            const Lap<S>& L = laps_[static_cast<std::size_t>(idx)];
            emit(Lap<S>{x0, x1, S(L.slope * p.slope), S(L.slope * p.intercept) + L.intercept});
            x0 = std::move(x1);
            idx += dir;
        }
    }

private:
    std::vector<Lap<S>> laps_;
    std::vector<S> breaks_;
};

/// Depth-first walk over the pieces of f, f^2, ..., f^K. visit(depth, piece)
/// sees the pieces of each iterate in left-to-right order.
template <class S, class Visit>
void walk_iterates(const LapEngine<S>& engine, int K, std::size_t max_pieces, Visit&& visit) {
    std::vector<std::vector<Lap<S>>> scratch(static_cast<std::size_t>(K) + 1);
    std::vector<std::size_t> seen(static_cast<std::size_t>(K) + 1, 0);

    auto rec = [&](auto& self, int depth, const Lap<S>& piece) -> void {
        if (++seen[static_cast<std::size_t>(depth)] > max_pieces)
            throw ResourceError("iterate " + std::to_string(depth) + " needs more than " +
                                std::to_string(max_pieces) + " pieces");
        visit(depth, piece);
        if (depth == K) return;
        auto& kids = scratch[static_cast<std::size_t>(depth)];
        kids.clear();
        engine.refine(piece, [&](Lap<S>&& c) { kids.push_back(std::move(c)); });
        for (const auto& c : kids) self(self, depth + 1, c);
    };
    for (const auto& lap : engine.laps()) rec(rec, 1, lap);
}

/// Solution of slope·x + intercept = sign·x on the piece, if any.
template <class S>
std::optional<S> solve_on(const Lap<S>& p, Sign sign, Degenerate policy) {
    const S target(static_cast<long>(sign));
    if (p.slope == target) {
        if (sgn(p.intercept) == 0 && policy == Degenerate::Throw)
            throw InfiniteSolutions(to_rational(p.lo), to_rational(p.hi));
        return std::nullopt;
    }
    S x = p.intercept / S(target - p.slope);
    if (x < p.lo || p.hi < x) return std::nullopt;
    return x;
}

/// Per-depth solution counts for k = 1..K (index 0 unused). Pieces arrive left
/// to right, so a repeated solution can only equal the previous one at that depth.
/// Skipped degenerate pieces contribute nothing; tiling keeps every other
/// solution off their interiors. Under Degenerate::Throw only depths >= first_checked
/// raise InfiniteSolutions; shallower ones are skipped.
template <class S>
std::vector<std::uint64_t> count_through(const PLMap& map, int K, Sign sign,
                                         const IterateOptions& opts, int first_checked = 1) {
    LapEngine<S> engine(map);
    std::vector<std::optional<S>> last(static_cast<std::size_t>(K) + 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(K) + 1, 0);
    walk_iterates(engine, K, opts.max_pieces, [&](int depth, const Lap<S>& p) {
        const Degenerate policy = depth >= first_checked ? opts.degenerate : Degenerate::Skip;
        auto x = solve_on(p, sign, policy);
        if (!x) return;
        auto& prev = last[static_cast<std::size_t>(depth)];
        if (prev) {
            if (*x == *prev) return;
            if (*x < *prev) throw InvariantViolation("iterate pieces visited out of order");
        }
        prev = std::move(x);
        ++counts[static_cast<std::size_t>(depth)];
    });
    return counts;
}

/// Ascending distinct isolated solutions of f^k(x) = sign·x.
template <class S>
std::vector<S> collect_solutions(const LapEngine<S>& engine, int k, Sign sign,
                                 std::size_t max_pieces, Degenerate policy = Degenerate::Throw) {
    std::vector<S> points;
    walk_iterates(engine, k, max_pieces, [&](int depth, const Lap<S>& p) {
        if (depth != k) return;
        auto x = solve_on(p, sign, policy);
        if (!x) return;
        if (!points.empty()) {
            if (*x == points.back()) return;
            if (*x < points.back()) throw InvariantViolation("iterate pieces visited out of order");
        }
        points.push_back(std::move(*x));
    });
    return points;
}

/// Runs fn with Q64 and, if that overflows, again with mpq_class.
template <class Fn>
decltype(auto) with_exact_scalar(Fn&& fn) {
    try {
        return fn(std::type_identity<Q64>{});
    } catch (const Overflow&) {
        return fn(std::type_identity<Rational>{});
    }
}

}  // namespace congruent::detail
