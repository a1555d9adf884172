#pragma once

#include <string>

#include "sphspec/lie.hpp"

namespace sphspec {

// The six compact models of spheres G/H.
enum class SphereKind { O, U, SpSp1, Spin9, G2, Spin7p };

struct SphereRealization {
  SphereKind kind = SphereKind::O;
  int n = 0;  // O(n)/O(n-1), U(n)/U(n-1), Sp(n)xSp(1)/...; unused otherwise
};

// Throws DomainError unless n >= 3 for O and n >= 2 for U and Sp.
void validate(const SphereRealization& r);
GroupLabel group_of(const SphereRealization& r);
std::string to_string(const SphereRealization& r);
SphereKind parse_sphere_kind(const std::string& tag);  // o, u, sp, spin9, g2, spin7p
// N with G/H = S^{N-1}.
int ambient_dimension(const SphereRealization& r);

}  // namespace sphspec
