#include "sphspec/branching.hpp"

#include <mutex>
#include <shared_mutex>

namespace sphspec {

using kernels::IntCharacter;
using kernels::IntVec;

std::int64_t WeightMultiset::total_mass() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

std::int64_t IrrepDecomp::multiplicity(const Weight& hw) const {
  auto it = constituents.find(hw);
  return it == constituents.end() ? 0 : it->second;
}

std::int64_t IrrepDecomp::total_dim() const {
  std::int64_t s = 0;
  for (const auto& [hw, m] : constituents) s += m * weyl_dim(group, hw);
  return s;
}

std::string to_string(const IrrepDecomp& d) {
  std::string out = to_string(d.group) + ":";
  for (const auto& [hw, m] : d.constituents) out += " " + std::to_string(m) + "x" + to_string(hw);
  return out;
}

Weight EmbeddingSpec::restrict(const Weight& w) const {
  if (w.size() != restriction_map.front().size()) throw DomainError("restriction: rank mismatch");
  Weight r = make_weight(subgroup, std::vector<Rational>(restriction_map.size(), 0));
  for (std::size_t i = 0; i < restriction_map.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (restriction_map[i][j] != 0) r.coords[i] += restriction_map[i][j] * w[j];
  return r;
}

namespace {

bool is_o2(const GroupLabel& g) { return g.family == Family::O && g.n == 2; }
bool is_o1(const GroupLabel& g) { return g.family == Family::O && g.n == 1; }

struct MemoKey {
  GroupLabel group;
  IntVec hw;
  bool operator<(const MemoKey& o) const { return group != o.group ? group < o.group : hw < o.hw; }
};

IntCharacter full_character(const RootDatum& rd, const IntVec& hw) {
  return kernels::expand(rd.geometry, *dominant_character(rd.group, from_scaled(rd, hw)));
}

}  // namespace

std::shared_ptr<const kernels::DominantCharacter> dominant_character(const GroupLabel& g, const Weight& hw,
                                                                     Exec exec) {
  if (!in_lattice(g, hw) || !is_dominant(g, hw))
    throw DomainError("weight " + to_string(hw) + " is not a dominant weight of " + to_string(g));
  static std::shared_mutex mu;
  static std::map<MemoKey, std::shared_ptr<const kernels::DominantCharacter>> memo;
  const RootDatum& rd = root_datum(g);
  MemoKey key{g, to_scaled(rd, hw)};
  {
    std::shared_lock lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto dc = std::make_shared<const kernels::DominantCharacter>(
      exec == Exec::parallel ? kernels::freudenthal_parallel(rd.geometry, key.hw)
                             : kernels::freudenthal_serial(rd.geometry, key.hw));
  std::unique_lock lock(mu);
  return memo.emplace(std::move(key), std::move(dc)).first->second;
}

WeightMultiset weight_multiplicities(const GroupLabel& g, const Weight& hw) {
  WeightMultiset wm{g, {}};
  if (is_o2(g)) {
    weyl_dim(g, hw);  // validates
    wm.entries[hw] += 1;
    if (hw[0] != 0) wm.entries[make_weight(g, {-hw[0]})] += 1;
    return wm;
  }
  const RootDatum& rd = root_datum(g);
  for (const auto& [v, m] : full_character(rd, to_scaled(rd, hw))) wm.entries.emplace(from_scaled(rd, v), m);
  return wm;
}

WeightMultiset restrict_weights(const EmbeddingSpec& emb, const WeightMultiset& wm) {
  if (!(wm.group == emb.supergroup))
    throw DomainError("restrict_weights: multiset belongs to " + to_string(wm.group) + ", not " +
                      to_string(emb.supergroup));
  WeightMultiset out{emb.subgroup, {}};
  for (const auto& [w, m] : wm.entries) out.entries[emb.restrict(w)] += m;
  return out;
}

IrrepDecomp decompose(const GroupLabel& g, const WeightMultiset& wm) {
  if (is_o1(g)) throw DomainError("O(1) characters are not determined by torus weights");
  IrrepDecomp out{g, {}};
  if (is_o2(g)) {
    for (const auto& [w, m] : wm.entries) {
      if (w[0] < 0) continue;
      if (w[0] > 0) {
        auto neg = wm.entries.find(make_weight(g, {-w[0]}));
        if (neg == wm.entries.end() || neg->second != m)
          throw NotACharacter("O(2) multiset is not symmetric under a -> -a");
      }
      out.constituents[w] = m;
    }
    return out;
  }
  const RootDatum& rd = root_datum(g);
  const kernels::Geometry& geo = rd.geometry;
  IntCharacter rest;
  for (const auto& [w, m] : wm.entries) {
    if (m < 0) throw NotACharacter("negative multiplicity in input");
    if (m > 0) rest[to_scaled(rd, w)] += m;
  }
  while (!rest.empty()) {
    auto top = rest.begin();
    std::int64_t top_height = geo.dot(top->first, geo.two_rho);
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const std::int64_t h = geo.dot(it->first, geo.two_rho);
      if (h > top_height || (h == top_height && it->first > top->first)) {
        top = it;
        top_height = h;
      }
    }
    const IntVec hw = top->first;
    const std::int64_t mult = top->second;
    if (!geo.dominant(hw))
      throw NotACharacter("maximal weight " + to_string(from_scaled(rd, hw)) + " is not dominant for " + to_string(g));
    out.constituents[from_scaled(rd, hw)] = mult;
    for (const auto& [v, m] : full_character(rd, hw)) {
      auto it = rest.find(v);
      const std::int64_t left = (it == rest.end() ? 0 : it->second) - mult * m;
      if (left < 0)
        throw NotACharacter("negative multiplicity at " + to_string(from_scaled(rd, v)) + " after removing " +
                            to_string(from_scaled(rd, hw)));
      if (left == 0) rest.erase(it);
      else it->second = left;
    }
  }
  return out;
}

IrrepDecomp branch_oracle(const EmbeddingSpec& emb, const Weight& hw) {
  return decompose(emb.subgroup, restrict_weights(emb, weight_multiplicities(emb.supergroup, hw)));
}

}  // namespace sphspec
