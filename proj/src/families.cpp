#include "congruent/families.hpp"

#include <map>
#include <string>
#include <vector>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

// Collects prescribed integer values, merging coincident ones.
class AnchorSet {
public:
    void set(long x, long y) {
        auto [it, inserted] = values_.emplace(x, y);
        if (!inserted && it->second != y)
            throw InvariantViolation("conflicting values prescribed at x = " + std::to_string(x));
    }

    PLMap build() const {
        std::vector<std::pair<long, long>> points(values_.begin(), values_.end());
        return PLMap::from_integers(points);
    }

private:
    std::map<long, long> values_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

}  // namespace

PLMap make_base_map() { return PLMap::from_integers({{1, 4}, {2, 1}, {3, 4}, {4, 2}}); }

PLMap make_fmn(long m, long n) {
    require(n >= 4, "f_{m,n} needs n >= 4");
    require(1 < m && m < n - 1, "f_{m,n} needs 1 < m < n - 1");
    AnchorSet a;
    a.set(1, m + 1);
    a.set(2, 1);
    a.set(m, m - 1);
    a.set(m + 1, m + 2);
    a.set(n - 1, n);
    a.set(n, m);
    return a.build();
}

PLMap make_gn(long n) {
    require(n >= 1, "g_n needs n >= 1");
    AnchorSet a;
    a.set(1, n + 1);
    a.set(2, 2 * n + 1);
    a.set(n + 1, n + 2);
    a.set(n + 2, n);
    a.set(2 * n + 1, 1);
    return a.build();
}

PLMap make_hjmn(long j, long m, long n) {
    require(n >= 2, "h_{j,m,n} needs n >= 2");
    require(2 <= j && j <= 2 * n + 1, "h_{j,m,n} needs 2 <= j <= 2n + 1");
    require(2 <= m && m <= 2 * n + 1, "h_{j,m,n} needs 2 <= m <= 2n + 1");
    AnchorSet a;
    a.set(1, j);
    for (long x = 2; x <= 2 * n; x += 2) a.set(x, 1);
    for (long x = 3; x <= 2 * n + 1; x += 2) a.set(x, 2 * n + 2);
    a.set(2 * n + 2, m);
    return a.build();
}

PLMap make_pn(long n) {
    require(n >= 2, "p_n needs n >= 2");
    AnchorSet a;
    a.set(0, 0);
    for (long i = 1; i <= n - 1; ++i) {
        a.set(i, i + 1);
        a.set(-i, -(i + 1));
    }
    a.set(n, -1);
    a.set(-n, 1);
    return a.build();
}

PLMap make_map(const FamilyParams& p) {
    switch (p.family) {
        case MapFamily::Base: return make_base_map();
        case MapFamily::Fmn: return make_fmn(p.m, p.n);
        case MapFamily::Gn: return make_gn(p.n);
        case MapFamily::Hjmn: return make_hjmn(p.j, p.m, p.n);
        case MapFamily::Pn: return make_pn(p.n);
    }
    throw UsageError("unknown map family");
}

MapFamily parse_map_family(const std::string& tag) {
    if (tag == "base2") return MapFamily::Base;
    if (tag == "fmn") return MapFamily::Fmn;
    if (tag == "gn") return MapFamily::Gn;
    if (tag == "hjmn") return MapFamily::Hjmn;
    if (tag == "pn") return MapFamily::Pn;
    throw UsageError("unknown map '" + tag + "' (expected base2, fmn, gn, hjmn or pn)");
}

std::string to_string(MapFamily family) {
    switch (family) {
        case MapFamily::Base: return "base2";
        case MapFamily::Fmn: return "fmn";
        case MapFamily::Gn: return "gn";
        case MapFamily::Hjmn: return "hjmn";
        case MapFamily::Pn: return "pn";
    }
    return "?";
}

}  // namespace congruent
