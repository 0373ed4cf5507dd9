#include "congruent/plmap.hpp"

#include <algorithm>
#include <string>

#include "congruent/detail/lap_engine.hpp"
#include "congruent/errors.hpp"

namespace congruent {

namespace {

void check_k(int k) {
    if (k < 1) throw UsageError("iterate index must be >= 1, got " + std::to_string(k));
}

void check_sign(const PLMap& map, Sign sign) {
    if (sign == Sign::Minus && !map.contains(Rational(0)))
        throw UsageError("f^k(x) = -x needs 0 inside the domain");
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

PLMap::PLMap(std::vector<Anchor> anchors) : anchors_(std::move(anchors)) {
    if (anchors_.size() < 2) throw UsageError("a map needs at least two anchors");
    for (auto& a : anchors_) {
        a.x.canonicalize();
        a.y.canonicalize();
    }
    for (std::size_t i = 1; i < anchors_.size(); ++i)
        if (!(anchors_[i - 1].x < anchors_[i].x))
            throw UsageError("anchor abscissae must be strictly increasing");
    for (const auto& a : anchors_)
        if (!contains(a.y))
            throw UsageError("anchor value " + a.y.get_str() + " leaves the domain [" +
                             lo().get_str() + ", " + hi().get_str() + "]");
}

PLMap PLMap::from_integers(const std::vector<std::pair<long, long>>& points) {
    std::vector<Anchor> a;
    a.reserve(points.size());
    for (auto [x, y] : points) a.push_back({Rational(x), Rational(y)});
    return PLMap(std::move(a));
}

std::vector<AffinePiece> PLMap::laps() const {
    std::vector<AffinePiece> out;
    out.reserve(anchors_.size() - 1);
    for (std::size_t i = 0; i + 1 < anchors_.size(); ++i) {
        const auto& a = anchors_[i];
        const auto& b = anchors_[i + 1];
        Rational slope = (b.y - a.y) / (b.x - a.x);
        Rational intercept = a.y - slope * a.x;
        out.push_back({a.x, b.x, std::move(slope), std::move(intercept)});
    }
    return out;
}

Rational eval(const PLMap& map, const Rational& x) {
    if (!map.contains(x))
        throw DomainError(x.get_str() + " is outside [" + map.lo().get_str() + ", " +
                          map.hi().get_str() + "]");
    const auto& a = map.anchors();
    auto it = std::lower_bound(a.begin(), a.end(), x,
                               [](const Anchor& p, const Rational& v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Anchor& right = *it;
    const Anchor& left = *(it - 1);
    return left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
}

std::vector<AffinePiece> iterate_pieces(const PLMap& map, int k, const IterateOptions& opts) {
    check_k(k);
    return detail::with_exact_scalar([&](auto tag) {
        using S = typename decltype(tag)::type;
        detail::LapEngine<S> engine(map);
        std::vector<AffinePiece> out;
        detail::walk_iterates(engine, k, opts.max_pieces, [&](int depth, const detail::Lap<S>& p) {
            if (depth != k) return;
            out.push_back({detail::to_rational(p.lo), detail::to_rational(p.hi),
                           detail::to_rational(p.slope), detail::to_rational(p.intercept)});
        });
        return out;
    });
}

namespace {

std::vector<std::uint64_t> counts_through(const PLMap& map, int K, Sign sign,
                                          const IterateOptions& opts, int first_checked) {
    check_k(K);
    check_sign(map, sign);
    return detail::with_exact_scalar([&](auto tag) {
        using S = typename decltype(tag)::type;
        return detail::count_through<S>(map, K, sign, opts, first_checked);
    });
}

}  // namespace

std::vector<Int> count_solutions_through(const PLMap& map, int K, Sign sign,
                                         const IterateOptions& opts) {
    const auto counts = counts_through(map, K, sign, opts, 1);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) out.emplace_back(static_cast<unsigned long>(counts[k]));
    return out;
}

Int count_solutions(const PLMap& map, int k, Sign sign, const IterateOptions& opts) {
    return Int(static_cast<unsigned long>(counts_through(map, k, sign, opts, k).back()));
}

SolutionSet solution_set(const PLMap& map, int k, Sign sign, const IterateOptions& opts) {
    check_k(k);
    check_sign(map, sign);
    SolutionSet out;
    try {
        out.points = detail::with_exact_scalar([&](auto tag) {
            using S = typename decltype(tag)::type;
            detail::LapEngine<S> engine(map);
            std::vector<Rational> pts;
            for (const auto& x : detail::collect_solutions(engine, k, sign, opts.max_pieces))
                pts.push_back(detail::to_rational(x));
            return pts;
        });
    } catch (const InfiniteSolutions& e) {
        out.points.clear();
        out.infinite = true;
        out.witness.emplace(e.witness_lo(), e.witness_hi());
    }
    return out;
}

IntMatrix transition_matrix(const PLMap& map) {
    if (!is_integer(map.lo()) || !is_integer(map.hi()))
        throw NotMarkovError("domain endpoints are not integers");
    for (const auto& a : map.anchors())
        if (!is_integer(a.x) || !is_integer(a.y))
            throw NotMarkovError("anchor (" + a.x.get_str() + ", " + a.y.get_str() +
                                 ") is off the integer lattice");
    const long lo = map.lo().get_num().get_si();
    const long hi = map.hi().get_num().get_si();
    const auto n = static_cast<std::size_t>(hi - lo);

    std::vector<Int> values;
    values.reserve(n + 1);
    for (long x = lo; x <= hi; ++x) {
        Rational y = eval(map, Rational(x));
        if (!is_integer(y))
            throw NotMarkovError("f(" + std::to_string(x) + ") = " + y.get_str() +
                                 " is not an integer");
        values.push_back(y.get_num());
    }

    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Int ylo = std::min(values[i], values[i + 1]);
        const Int yhi = std::max(values[i], values[i + 1]);
        for (std::size_t j = 0; j < n; ++j) {
            const Int left = lo + static_cast<long>(j);
            if (ylo <= left && left + 1 <= yhi) m[i][j] = 1;
        }
    }
    return m;
}

}  // namespace congruent
