#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphspec/lie.hpp"
#include "sphspec/realization.hpp"

namespace sphspec {

// Affine family coords = offset + coeff * params of infinitesimal characters
// allowed on a sphere realization.
struct InfCharFamily {
  SphereRealization realization;
  GroupLabel group;
  std::vector<std::string> parameter_names;
  Weight offset;
  std::vector<std::vector<Rational>> coeff;  // [coordinate][parameter]

  std::size_t parameter_count() const { return parameter_names.size(); }
  Weight at(const std::vector<Rational>& params) const;
};

InfCharFamily infchar_family(const SphereRealization& r);

// Parameters placing some element of ic's Weyl orbit on the family; when
// several do, the lexicographically largest parameter vector is returned.
std::optional<std::vector<Rational>> infchar_member(const InfCharFamily& family, const InfChar& ic);

}  // namespace sphspec
