#pragma once

#include <string>

#include "congruent/plmap.hpp"

namespace congruent {

enum class MapFamily { Base, Fmn, Gn, Hjmn, Pn };

/// Family tag plus whichever of n, m, j it uses.
struct FamilyParams {
    MapFamily family = MapFamily::Base;
    long n = 0;
    long m = 0;
    long j = 0;
};

/// f on [1, 4]: f(1) = f(3) = 4, f(2) = 1, f(4) = 2.
PLMap make_base_map();

/// f_{m,n} on [1, n] for n >= 4, 1 < m < n - 1. Linear across the integers
/// where no value is prescribed.
PLMap make_fmn(long m, long n);

/// g_n on [1, 2n + 1] for n >= 1.
PLMap make_gn(long n);

/// h_{j,m,n} on [1, 2n + 2] for n >= 2 and 2 <= j, m <= 2n + 1.
PLMap make_hjmn(long j, long m, long n);

/// The odd map p_n on [-n, n] for n >= 2.
PLMap make_pn(long n);

PLMap make_map(const FamilyParams& params);

/// "base2", "fmn", "gn", "hjmn", "pn". Throws UsageError on anything else.
MapFamily parse_map_family(const std::string& tag);
std::string to_string(MapFamily family);

}  // namespace congruent
