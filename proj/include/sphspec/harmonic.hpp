#pragma once

#include <map>
#include <vector>

#include "sphspec/branching.hpp"
#include "sphspec/rational.hpp"

namespace sphspec::harmonic {

using Exponents = std::vector<int>;

// Exact polynomial in a fixed number of variables.  Zero coefficients are
// never stored.
class Poly {
 public:
  explicit Poly(int variables = 0) : n_(variables) {}
  static Poly monomial(const Exponents& e, const Rational& c = 1);

  int variables() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial; throws unless homogeneous.
  int degree() const;

  void add_term(const Exponents& e, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  std::map<Exponents, Rational> terms_;
};

Poly derivative(const Poly& p, int i);
Poly times_variable(const Poly& p, int i);
Poly laplacian(const Poly& p);
// x_i d/dx_j - x_j d/dx_i
Poly rotation(const Poly& p, int i, int j);
// -sum_{i<j} (x_i d_j - x_j d_i)^2
Poly casimir_operator(const Poly& p);

// Degree-d monomials in n variables, lexicographically decreasing.
std::vector<Exponents> monomials(int n, int degree);

struct LinearMapMatrix {
  std::vector<Exponents> domain;    // degree-a monomials
  std::vector<Exponents> codomain;  // degree-(a-2) monomials
  std::vector<std::vector<Integer>> entries;  // [codomain][domain]
};

LinearMapMatrix laplacian_matrix(int n, int a);

struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::vector<Rational>> kernel;  // one primitive integral vector per free column
};

// Fraction-free (Bareiss) elimination of an integer matrix with `cols` columns.
Elimination eliminate(std::vector<std::vector<Integer>> m, std::size_t cols);

// Kernel of the Laplacian on degree-a polynomials: n <= 8, a <= 4.
std::vector<Poly> harmonic_basis(int n, int a);
std::int64_t harmonic_dim(int n, int a);
// Scalar by which the so(n) Casimir acts on degree-a harmonics: 3 <= n <= 8, a <= 4.
Rational casimir_scalar(int n, int a, Exec exec = Exec::parallel);
// Weights of the SO(2)^{n/2} torus on degree-a harmonics: even n <= 8, a <= 4.
WeightMultiset torus_weights(int n, int a, Exec exec = Exec::parallel);

}  // namespace sphspec::harmonic
