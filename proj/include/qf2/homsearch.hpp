#pragma once

#include <random>

#include "qf2/quadmap.hpp"

namespace qf2 {

// Execution policy for the enumeration kernels. Both variants produce
// identical results in identical order; serial is the reference.
enum class Exec { serial, parallel };

inline constexpr int kDefaultHomBound = 8;

// All morphisms dom -> cod, ordered lexicographically by the tuple of basis
// images (each image read as its numeric encoding). Backtracking over images
// with incremental q/pairing/independence propagation.
std::vector<QuadMap> enumerate_homs(const QuadSpace& dom, const QuadSpace& cod,
                                    Exec exec = Exec::parallel,
                                    int bound = kDefaultHomBound);

// Isometry group of s, same order as enumerate_homs(s, s).
std::vector<QuadMap> orthogonal_group(const QuadSpace& s, Exec exec = Exec::parallel,
                                      int bound = kDefaultHomBound);

// Is there a morphism dom -> cod whose first prefix.size() basis images are
// exactly prefix? The prefix itself is validated, then extended.
bool extension_exists(const QuadSpace& dom, const QuadSpace& cod,
                      const std::vector<BitVec>& prefix);

// One uniformly-backtracked morphism with randomized candidate order, or
// nullopt when Hom(dom, cod) is empty.
std::optional<QuadMap> random_hom(const QuadSpace& dom, const QuadSpace& cod,
                                  std::mt19937_64& rng);

}  // namespace qf2
