#pragma once

#include "exm/interval_set.hpp"
#include "exm/report.hpp"

#include <cstdint>

namespace exm {

/// Independent brute-force reference for the covering index on ordered
/// carriers: enumerates half-open window placements over the grid
/// {K endpoint + j*w} (every normalized optimal cover anchors there) and
/// returns the minimum cover size. Exponential in the answer; for small
/// verification cases only.
long long min_cover_enumeration_oracle(const IntervalSet& K, const Rational& w);

/// Seeded property suites of every module, merged into one report. Every
/// randomized case draws from a stream derived from (seed, case index),
/// so the report is byte-identical across runs and thread counts.
CheckReport selftest(std::uint64_t seed, int threads = 1);

}  // namespace exm
