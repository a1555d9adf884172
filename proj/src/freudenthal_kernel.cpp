#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "sphspec/kernels.hpp"

namespace sphspec::kernels {

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::int64_t Geometry::dot(const IntVec& a, const IntVec& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

namespace {

IntVec add(const IntVec& a, const IntVec& b, std::int64_t k = 1) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

struct Layered {
  std::vector<IntVec> order;
  std::vector<std::size_t> layer_start;  // indices into order; last = order.size()
};

Layered layered_dominant_weights(const Geometry& g, const IntVec& hw) {
  if (!g.dominant(hw)) throw std::invalid_argument("highest weight is not dominant");
  std::unordered_set<IntVec, IntVecHash> seen{hw};
  std::deque<IntVec> queue{hw};
  while (!queue.empty()) {
    IntVec v = std::move(queue.front());
    queue.pop_front();
    for (const IntVec& a : g.positive_roots) {
      IntVec w = add(v, a, -1);
      if (g.dominant(w) && seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  Layered out;
  out.order.assign(seen.begin(), seen.end());
  std::sort(out.order.begin(), out.order.end(), [&](const IntVec& a, const IntVec& b) {
    std::int64_t ha = g.dot(a, g.two_rho), hb = g.dot(b, g.two_rho);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    if (i == 0 || g.dot(out.order[i], g.two_rho) != g.dot(out.order[i - 1], g.two_rho))
      out.layer_start.push_back(i);
  }
  out.layer_start.push_back(out.order.size());
  return out;
}

// One step of Freudenthal's formula; `known` holds all dominant weights of
// strictly higher <., 2rho>.
std::int64_t multiplicity_at(const Geometry& g, const IntVec& hw, const IntVec& mu, const IntCharacter& known) {
  std::int64_t numerator = 0;
  for (const IntVec& a : g.positive_roots) {
    const std::int64_t aa = g.dot(a, a);
    const std::int64_t ma = g.dot(mu, a);
    for (std::int64_t k = 1;; ++k) {
      IntVec nu = add(mu, a, k);
      g.to_dominant(nu);
      auto it = known.find(nu);
      if (it == known.end()) break;
      numerator += (ma + k * aa) * it->second;
    }
  }
  numerator *= 2;
  IntVec diff = add(hw, mu, -1);
  IntVec sum = add(add(hw, mu), g.two_rho);
  const std::int64_t denominator = g.dot(diff, sum);
  if (denominator <= 0 || numerator % denominator != 0)
    throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
  return numerator / denominator;
}

DominantCharacter run(const Geometry& g, const IntVec& hw, bool parallel) {
  Layered lw = layered_dominant_weights(g, hw);
  IntCharacter known;
  known.reserve(lw.order.size() * 2);
  DominantCharacter out;
  out.weights.reserve(lw.order.size());
  std::vector<std::int64_t> mult(lw.order.size(), 0);
  mult[0] = 1;
  known.emplace(lw.order[0], 1);
  for (std::size_t layer = 1; layer + 1 < lw.layer_start.size(); ++layer) {
    const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(lw.layer_start[layer]);
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(lw.layer_start[layer + 1]);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = lo; i < hi; ++i) mult[i] = multiplicity_at(g, hw, lw.order[i], known);
    } else {
      for (std::ptrdiff_t i = lo; i < hi; ++i) mult[i] = multiplicity_at(g, hw, lw.order[i], known);
    }
    for (std::ptrdiff_t i = lo; i < hi; ++i) known.emplace(lw.order[i], mult[i]);
  }
  for (std::size_t i = 0; i < lw.order.size(); ++i) out.weights.emplace_back(lw.order[i], mult[i]);
  return out;
}

}  // namespace

std::vector<IntVec> dominant_weights_below(const Geometry& g, const IntVec& hw) {
  return layered_dominant_weights(g, hw).order;
}

DominantCharacter freudenthal_serial(const Geometry& g, const IntVec& hw) { return run(g, hw, false); }

DominantCharacter freudenthal_parallel(const Geometry& g, const IntVec& hw) { return run(g, hw, true); }

std::vector<IntVec> weyl_orbit(const Geometry& g, const IntVec& v) {
  std::unordered_set<IntVec, IntVecHash> seen{v};
  std::vector<IntVec> out{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const IntVec& a : g.simple_roots) {
      const std::int64_t two_va = 2 * g.dot(out[i], a);
      const std::int64_t aa = g.dot(a, a);
      if (two_va % aa != 0) throw std::logic_error("weight is not in the weight lattice");
      if (two_va == 0) continue;
      IntVec w = add(out[i], a, -two_va / aa);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

IntCharacter expand(const Geometry& g, const DominantCharacter& dc) {
  IntCharacter out;
  for (const auto& [w, m] : dc.weights)
    for (IntVec& x : weyl_orbit(g, w)) out.emplace(std::move(x), m);
  return out;
}

}  // namespace sphspec::kernels
