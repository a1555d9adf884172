#include "sphspec/realization.hpp"

namespace sphspec {

void validate(const SphereRealization& r) {
  if (r.kind == SphereKind::O && r.n < 3) throw DomainError("O(n)/O(n-1) needs n >= 3");
  if ((r.kind == SphereKind::U || r.kind == SphereKind::SpSp1) && r.n < 2)
    throw DomainError(to_string(r) + " needs n >= 2");
}

GroupLabel group_of(const SphereRealization& r) {
  switch (r.kind) {
    case SphereKind::O: return O(r.n);
    case SphereKind::U: return U(r.n);
    case SphereKind::SpSp1: return SpSp1(r.n);
    case SphereKind::Spin9: return group(Family::Spin9);
    case SphereKind::G2: return group(Family::G2);
    case SphereKind::Spin7p: return group(Family::Spin7p);
  }
  throw DomainError("unknown realization");
}

std::string to_string(const SphereRealization& r) {
  const std::string n = std::to_string(r.n), m = std::to_string(r.n - 1);
  switch (r.kind) {
    case SphereKind::O: return "O(" + n + ")/O(" + m + ")";
    case SphereKind::U: return "U(" + n + ")/U(" + m + ")";
    case SphereKind::SpSp1: return "Sp(" + n + ")xSp(1)/Sp(" + m + ")xSp(1)";
    case SphereKind::Spin9: return "Spin(9)/Spin(7)'";
    case SphereKind::G2: return "G2/SU(3)";
    case SphereKind::Spin7p: return "Spin(7)'/G2";
  }
  return "?";
}

SphereKind parse_sphere_kind(const std::string& tag) {
  if (tag == "o") return SphereKind::O;
  if (tag == "u") return SphereKind::U;
  if (tag == "sp") return SphereKind::SpSp1;
  if (tag == "spin9") return SphereKind::Spin9;
  if (tag == "g2") return SphereKind::G2;
  if (tag == "spin7p") return SphereKind::Spin7p;
  throw DomainError("unknown realization tag '" + tag + "'");
}

int ambient_dimension(const SphereRealization& r) {
  switch (r.kind) {
    case SphereKind::O: return r.n;
    case SphereKind::U: return 2 * r.n;
    case SphereKind::SpSp1: return 4 * r.n;
    case SphereKind::Spin9: return 16;
    case SphereKind::G2: return 7;
    case SphereKind::Spin7p: return 8;
  }
  return 0;
}

}  // namespace sphspec
