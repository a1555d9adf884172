#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sphspec/kernels.hpp"
#include "sphspec/lie.hpp"

namespace sphspec {

struct WeightMultiset {
  GroupLabel group;
  std::map<Weight, std::int64_t> entries;

  std::int64_t total_mass() const;
  bool operator==(const WeightMultiset& o) const { return group == o.group && entries == o.entries; }
};

// Highest weight -> multiplicity.
struct IrrepDecomp {
  GroupLabel group;
  std::map<Weight, std::int64_t> constituents;

  std::int64_t multiplicity(const Weight& hw) const;
  std::int64_t total_dim() const;
  bool operator==(const IrrepDecomp& o) const { return group == o.group && constituents == o.constituents; }
};

std::string to_string(const IrrepDecomp& d);

// Thrown by decompose when the input is not a genuine character.
class NotACharacter : public DomainError {
 public:
  using DomainError::DomainError;
};

struct EmbeddingSpec {
  std::string name;
  GroupLabel subgroup;
  GroupLabel supergroup;
  // Row i gives subgroup coordinate i as a combination of supergroup
  // coordinates; column j is the image of the j-th supergroup basis weight.
  std::vector<std::vector<Rational>> restriction_map;
  Weight defining_highest_weight;       // supergroup representation used to pin the map
  IrrepDecomp defining_decomposition;  // its expected restriction

  Weight restrict(const Weight& w) const;
};

enum class Exec { serial, parallel };

// Memoized dominant-chamber multiplicities.
std::shared_ptr<const kernels::DominantCharacter> dominant_character(const GroupLabel& g, const Weight& hw,
                                                                     Exec exec = Exec::parallel);
WeightMultiset weight_multiplicities(const GroupLabel& g, const Weight& hw);
WeightMultiset restrict_weights(const EmbeddingSpec& emb, const WeightMultiset& wm);
IrrepDecomp decompose(const GroupLabel& g, const WeightMultiset& wm);
IrrepDecomp branch_oracle(const EmbeddingSpec& emb, const Weight& hw);

namespace embeddings {

EmbeddingSpec u_in_o(int n);      // U(n) in O(2n)
EmbeddingSpec sp_in_o(int n);     // Sp(n)xSp(1) in O(4n)
EmbeddingSpec spin9_in_o16();
EmbeddingSpec g2_in_o7();
EmbeddingSpec spin7p_in_o8();
EmbeddingSpec spin7p_in_spin8();
EmbeddingSpec spin8_in_spin9();

// Isotropy subgroups H of the sphere realizations G/H.
EmbeddingSpec o_isotropy(int n);   // O(n-1) in O(n), n >= 3
EmbeddingSpec u_isotropy(int n);   // U(n-1) in U(n)
EmbeddingSpec sp_isotropy(int n);  // Sp(n-1)xSp(1)_diag in Sp(n)xSp(1)
EmbeddingSpec spin7p_in_spin9();
EmbeddingSpec su3_in_g2();
EmbeddingSpec g2_in_spin7p();

std::vector<EmbeddingSpec> catalogue();

}  // namespace embeddings
}  // namespace sphspec
