#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphspec/kernels.hpp"
#include "sphspec/rational.hpp"
#include "sphspec/root_system.hpp"

namespace sphspec {

// Raised for inputs outside an operation's domain (non-dominant weights,
// unsupported groups, invalid realization ranks, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { O, U, Sp, Sp1, SpSp1, Spin7p, Spin8, Spin9, G2, SU3, U1, SO2 };

struct GroupLabel {
  Family family = Family::O;
  int n = 0;  // O(n), U(n), Sp(n), Sp(n)xSp(1); ignored otherwise

  friend auto operator<=>(const GroupLabel&, const GroupLabel&) = default;
};

GroupLabel O(int n);
GroupLabel U(int n);
GroupLabel Sp(int n);
GroupLabel SpSp1(int n);
GroupLabel group(Family f);  // for the unparametrized families

std::string to_string(const GroupLabel& g);

enum class Lattice { integer, half_integer, sum_zero };

struct Weight {
  std::vector<Rational> coords;
  Lattice lattice = Lattice::integer;

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }
};

std::string to_string(const Weight& w);
Rational dot(const Weight& a, const Weight& b);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

struct WeylGenerator {
  std::string name;
  std::vector<std::vector<Rational>> matrix;  // orthogonal, acts on coordinates
  Weight apply(const Weight& w) const;
};

struct RootDatum {
  GroupLabel group;
  int coordinate_count = 0;
  Lattice lattice = Lattice::integer;
  std::int64_t scale = 1;  // common denominator of weights and roots
  std::vector<Segment> segments;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  Weight rho;
  // Generators of the full Weyl group.  For O(2m) this includes the sign
  // change of the last coordinate coming from the second component of O(2m).
  std::vector<WeylGenerator> weyl_generators;
  kernels::Geometry geometry;
};

const RootDatum& root_datum(const GroupLabel& g);

Weight make_weight(const GroupLabel& g, std::vector<Rational> coords);

bool in_lattice(const GroupLabel& g, const Weight& w);
bool is_dominant(const GroupLabel& g, const Weight& w);
// Representative in the closed dominant chamber (identity component).
Weight dominant_form(const GroupLabel& g, const Weight& w);
// Representative of the orbit under the full Weyl group.
Weight canonical_form(const GroupLabel& g, const Weight& w);
// Orbit under the full Weyl group, by closure under the generators.
std::vector<Weight> weyl_orbit(const GroupLabel& g, const Weight& w);

kernels::IntVec to_scaled(const RootDatum& rd, const Weight& w);
Weight from_scaled(const RootDatum& rd, const kernels::IntVec& v);

std::int64_t weyl_dim(const GroupLabel& g, const Weight& hw);
Rational casimir(const GroupLabel& g, const Weight& hw);

// Dimension of pi^{O(n)}_a for n >= 1, including the degenerate n <= 2 cases.
std::int64_t one_row_dim(int n, int a);

struct InfChar {
  Weight representative;
  GroupLabel group;
  bool operator==(const InfChar& o) const;
};

InfChar inf_char(const GroupLabel& g, const Weight& hw);
bool weyl_equivalent(const GroupLabel& g, const Weight& w1, const Weight& w2);

}  // namespace sphspec
