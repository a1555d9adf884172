#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphspec/branching.hpp"
#include "sphspec/lie.hpp"
#include "sphspec/realization.hpp"

namespace sphspec {

// Noncompact forms of the sphere realizations.  G2s43 and G2s34 are the two
// split G2 hyperboloids H_{4,3} and H_{3,4} (series 1 and 2).
enum class HypKind { O, U, Sp, Spin81, G2s43, G2s34, Spin34p, GLnR };

struct HypRealization {
  HypKind kind = HypKind::O;
  int p = 0;
  int q = 0;  // for GLnR, p = n and q is unused
};

// O needs p >= 2 and q >= 1; U and Sp need p, q >= 2; GLnR needs n >= 2.
void validate(const HypRealization& r);
std::string to_string(const HypRealization& r);
// Compact realization whose infinitesimal-character family applies.
SphereRealization compact_form(const HypRealization& r);
bool has_discrete_series(const HypRealization& r);

// Irreducible of a compact factor, by its family subscripts.
struct IrrepLabel {
  std::string family;  // "O", "U", "Sp", "SU(2)_long" or "SU(2)_short"
  int n = 0;           // rank index of O(n), U(n), Sp(n); 0 for the SU(2) factors
  std::vector<std::int64_t> params;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

std::string to_string(const IrrepLabel& l);
std::int64_t dim(const IrrepLabel& l);

using KType = std::vector<IrrepLabel>;

struct KTypeSum {
  std::map<KType, std::int64_t> entries;
  // Every K-type of height <= completeness_bound is fully counted; nothing
  // above it is stored.
  std::int64_t completeness_bound = 0;
  std::string height;  // what the bound measures
};

struct CharacterFactor {
  std::string symbol;  // "xi", "det" or "1"
  std::int64_t value = 0;
  friend bool operator==(const CharacterFactor&, const CharacterFactor&) = default;
};

struct ParabolicData {
  std::string name;             // "q_+", "q_0", "q_-"
  std::string levi_template;    // in terms of p, q
  std::string levi;             // evaluated
  std::string lambda_template;  // in terms of x, y, n
  std::string lambda;           // evaluated
  std::vector<CharacterFactor> factors;
};

enum class RangeKind { q_plus, q_zero, q_minus, edge_plus_zero, edge_zero_minus, unclassified };
std::string to_string(RangeKind k);

struct RangeClass {
  RangeKind kind = RangeKind::unclassified;
  std::vector<ParabolicData> parabolics;  // two at an edge, none when unclassified
};

enum class Spin81Case { first, zero, third };

struct Spin81Data {
  Spin81Case hc_case = Spin81Case::third;
  Weight hc_parameter;    // Spin(9) coordinates
  Weight lowest_k_type;   // Spin(8) highest weight
};

struct DiscreteSeriesParam {
  HypRealization realization;
  std::int64_t ell = 0;  // x + y for U and Sp, 2x + y for Spin(8,1)
  std::int64_t x = 0;    // U, Sp, Spin(8,1)
  std::int64_t y = 0;
  int series = 0;  // 1 or 2 for split G2
  std::optional<RangeClass> range;  // U and Sp
  bool reducible = false;
  std::vector<std::string> constituents;  // "irreducible" unless special
  bool restriction_identity = false;      // pi^{O(4,4)}_l restricts irreducibly (Spin(3,4)')
  std::optional<Spin81Data> spin81;
};

// Throws DomainError unless the parameters satisfy the family inequalities.
DiscreteSeriesParam make_param(const HypRealization& r, std::int64_t ell, std::int64_t x = 0, std::int64_t y = 0);
// The full parameter list within |l|, |x|, |y| <= bound (Spin(8,1): y <= bound).
std::vector<DiscreteSeriesParam> ds_params(const HypRealization& r, std::int64_t bound);
InfChar ds_infchar(const DiscreteSeriesParam& p);
KTypeSum ds_ktypes(const DiscreteSeriesParam& p, std::int64_t cutoff);
RangeClass classify_range(const DiscreteSeriesParam& p);

// Harish-Chandra parameter of pi^{Spin(8,1)}_{x,y,sign}; nullopt in the zero band.
std::optional<Weight> spin81_hc_parameter(std::int64_t x, std::int64_t y, int sign, Spin81Case* which = nullptr);

std::vector<Rational> orbit_convert(const DiscreteSeriesParam& p);
DiscreteSeriesParam from_orbit(const HypRealization& r, const std::vector<Rational>& orbit);

struct ContinuousFamily {
  HypRealization realization;
  std::vector<int> epsilons;  // Z/2Z
  std::string nu;             // symbolic, never sampled
};

ContinuousFamily continuous_params(int p, int q);
KTypeSum continuous_ktypes(int p, int q, int epsilon, std::int64_t cutoff);

struct ConsistencyReport {
  bool pass = false;
  std::int64_t bound = 0;  // on the first-factor parameter sum
  std::string first_discrepancy;
  std::map<KType, std::int64_t> o_side;
  std::map<KType, std::int64_t> family_side;
};

// Compares pi^{O(2p,2q)}_l (U) or pi^{O(4p,4q)}_l (Sp) restricted to K with
// the union of the family's K-types.
ConsistencyReport consistency_check(HypKind family, int p, int q, std::int64_t ell, std::int64_t cutoff,
                                    Exec exec = Exec::parallel);

// Per-term dimension comparison of the split G2 K-type formula against the
// O(4,3) / O(3,4) side, for the corrected and the literal reading.
struct G2sDimensionReport {
  bool corrected_ok = true;
  bool literal_ok = true;
  std::string first_literal_mismatch;
};

G2sDimensionReport g2s_dimension_check(int series, std::int64_t ell, std::int64_t cutoff);

}  // namespace sphspec
