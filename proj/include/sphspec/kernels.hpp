#pragma once

// Exact integer kernels.  Weights are scaled by a common denominator so that
// every weight and root of the group has integer coordinates.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sphspec/root_system.hpp"

namespace sphspec::kernels {

using IntVec = std::vector<std::int64_t>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

using IntCharacter = std::unordered_map<IntVec, std::int64_t, IntVecHash>;

struct Geometry {
  int dim = 0;
  std::int64_t scale = 1;
  std::vector<Segment> segments;
  std::vector<IntVec> positive_roots;  // scaled
  std::vector<IntVec> simple_roots;    // scaled
  IntVec two_rho;                      // scaled sum of positive roots

  std::int64_t dot(const IntVec& a, const IntVec& b) const;
  void to_dominant(IntVec& v) const { detail::normalize_dominant(segments, v); }
  bool dominant(const IntVec& v) const { return detail::is_dominant(segments, v); }
};

// Dominant weights with multiplicities, ordered by decreasing <mu, 2rho> and
// then lexicographically decreasing.
struct DominantCharacter {
  std::vector<std::pair<IntVec, std::int64_t>> weights;
};

// Every dominant weight below hw, in the order above.
std::vector<IntVec> dominant_weights_below(const Geometry& g, const IntVec& hw);

DominantCharacter freudenthal_serial(const Geometry& g, const IntVec& hw);
// Same recursion; weights of one <mu, 2rho> layer are independent and are
// computed in an OpenMP loop.
DominantCharacter freudenthal_parallel(const Geometry& g, const IntVec& hw);

// Orbit of a weight under the Weyl group of the identity component.
std::vector<IntVec> weyl_orbit(const Geometry& g, const IntVec& v);

IntCharacter expand(const Geometry& g, const DominantCharacter& dc);

}  // namespace sphspec::kernels
