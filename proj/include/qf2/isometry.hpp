#pragma once

#include "qf2/homsearch.hpp"

namespace qf2 {

// Brute-force isometry reference, deliberately independent of the
// backtracking hom search: it scans every square matrix of the right size
// and filters. Used as the oracle the classification invariant is checked
// against. Dimension is capped (2^(n^2) candidates).

inline constexpr int kDefaultIsometryBound = 4;

std::optional<BitMatrix> find_isometry(const QuadSpace& a, const QuadSpace& b,
                                       Exec exec = Exec::parallel,
                                       int bound = kDefaultIsometryBound);

bool is_isometric_bruteforce(const QuadSpace& a, const QuadSpace& b,
                             Exec exec = Exec::parallel,
                             int bound = kDefaultIsometryBound);

// Every isometry a -> b, ordered by the packed row-major matrix encoding.
// With a == b this is the full orthogonal group by exhaustive scan.
std::vector<BitMatrix> all_isometries(const QuadSpace& a, const QuadSpace& b,
                                      Exec exec = Exec::parallel,
                                      int bound = kDefaultIsometryBound);

}  // namespace qf2
