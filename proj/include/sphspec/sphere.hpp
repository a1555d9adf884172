#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sphspec/branching.hpp"
#include "sphspec/lie.hpp"
#include "sphspec/realization.hpp"

namespace sphspec {

// Family parameters per realization: a | (b,c) | (d,e) | (x,y) | a | a.
using Params = std::vector<std::int64_t>;

struct OrbitParams {
  std::vector<Rational> values;
  bool operator==(const OrbitParams& o) const { return values == o.values; }
};

struct SpectrumEntry {
  SphereRealization realization;
  Params params;
  Weight highest_weight;
  std::int64_t dim = 0;
  Rational casimir;
  InfChar inf_char;
  OrbitParams orbit;
};

struct SubgroupRepFact {
  SphereRealization realization;
  GroupLabel subgroup;
  Weight highest_weight;
  InfChar inf_char;
};

std::size_t parameter_count(const SphereRealization& r);
// Throws DomainError when params violate the family constraints.
void check_params(const SphereRealization& r, const Params& p);
Weight spherical_highest_weight(const SphereRealization& r, const Params& p);
// The O(N) level a with pi^{O(N)}_a containing the entry: a, b+c, d+e, 2x+y, a, a.
std::int64_t level(const SphereRealization& r, const Params& p);

SpectrumEntry spectrum_entry(const SphereRealization& r, const Params& p);
std::vector<SpectrumEntry> spectrum(const SphereRealization& r, std::int64_t cutoff);
IrrepDecomp branch_rule(const SphereRealization& r, std::int64_t a);
Rational compound_casimir(const SphereRealization& r, const SpectrumEntry& e);

OrbitParams orbit_param(const SphereRealization& r, const Params& p);
Params from_orbit(const SphereRealization& r, const OrbitParams& o);

SubgroupRepFact subgroup_generated_rep(const SphereRealization& r, const SpectrumEntry& e);

// G in O(N), and H in G.
EmbeddingSpec ambient_embedding(const SphereRealization& r);
EmbeddingSpec isotropy_embedding(const SphereRealization& r);

std::vector<std::pair<Rational, std::int64_t>> laplace_spectrum(const SphereRealization& r, std::int64_t cutoff);

}  // namespace sphspec
