#include <algorithm>

#include "sphspec/branching.hpp"

namespace sphspec::embeddings {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Rational>(cols, 0)); }

// Matrix whose column j is images[j].
Matrix from_columns(const std::vector<std::vector<Rational>>& images) {
  Matrix m = zeros(images.front().size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < images[j].size(); ++i) m[i][j] = images[j][i];
  return m;
}

Matrix compose(const Matrix& outer, const Matrix& inner) {
  Matrix m = zeros(outer.size(), inner.front().size());
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t k = 0; k < inner.size(); ++k)
      for (std::size_t j = 0; j < inner.front().size(); ++j) m[i][j] += outer[i][k] * inner[k][j];
  return m;
}

std::vector<Rational> basis(std::size_t n, std::size_t i, const Rational& c = 1) {
  std::vector<Rational> v(n, 0);
  v[i] = c;
  return v;
}

Weight hw(const GroupLabel& g, std::vector<Rational> c) { return make_weight(g, std::move(c)); }

Weight zero(const GroupLabel& g) { return hw(g, std::vector<Rational>(root_datum(g).coordinate_count, 0)); }

Weight first_unit(const GroupLabel& g) {
  return hw(g, basis(root_datum(g).coordinate_count, 0));
}

IrrepDecomp decomp(const GroupLabel& g, std::initializer_list<Weight> parts) {
  IrrepDecomp d{g, {}};
  for (const Weight& w : parts) d.constituents[w] += 1;
  return d;
}

const Rational h = Q(1, 2);

// Short roots of G2, one from each +- pair; the images of the B3 basis.
Matrix g2_short_root_map() {
  return from_columns({{Q(2, 3), Q(-1, 3), Q(-1, 3)}, {Q(1, 3), Q(-2, 3), Q(1, 3)}, {Q(1, 3), Q(1, 3), Q(-2, 3)}});
}

// Images of e_1..e_4 under Spin(7)' in Spin(8) (or in O(8) through the spin representation).
Matrix spin7p_map() { return from_columns({{h, h, h}, {h, h, -h}, {h, -h, h}, {h, -h, -h}}); }

}  // namespace

EmbeddingSpec u_in_o(int n) {
  EmbeddingSpec e;
  e.name = "U(" + std::to_string(n) + ") in O(" + std::to_string(2 * n) + ")";
  e.subgroup = U(n);
  e.supergroup = O(2 * n);
  e.restriction_map = zeros(n, n);
  for (int i = 0; i < n; ++i) e.restriction_map[i][i] = 1;
  e.defining_highest_weight = first_unit(e.supergroup);
  std::vector<Rational> dual(n, 0);
  dual[n - 1] = -1;
  e.defining_decomposition = decomp(e.subgroup, {first_unit(e.subgroup), hw(e.subgroup, dual)});
  return e;
}

EmbeddingSpec sp_in_o(int n) {
  EmbeddingSpec e;
  e.name = "Sp(" + std::to_string(n) + ")xSp(1) in O(" + std::to_string(4 * n) + ")";
  e.subgroup = SpSp1(n);
  e.supergroup = O(4 * n);
  std::vector<std::vector<Rational>> images;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> plus = basis(n + 1, j), minus = basis(n + 1, j);
    plus[n] = 1;
    minus[n] = -1;
    images.push_back(plus);
    images.push_back(minus);
  }
  e.restriction_map = from_columns(images);
  e.defining_highest_weight = first_unit(e.supergroup);
  std::vector<Rational> d = basis(n + 1, 0);
  d[n] = 1;
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, d)});
  return e;
}

EmbeddingSpec spin9_in_o16() {
  EmbeddingSpec e;
  e.name = "Spin(9) in O(16)";
  e.subgroup = group(Family::Spin9);
  e.supergroup = O(16);
  std::vector<std::vector<Rational>> images;
  for (int s = 0; s < 8; ++s) images.push_back({h, s & 4 ? h : -h, s & 2 ? h : -h, s & 1 ? h : -h});
  e.restriction_map = from_columns(images);
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, {h, h, h, h})});
  return e;
}

EmbeddingSpec g2_in_o7() {
  EmbeddingSpec e;
  e.name = "G2 in O(7)";
  e.subgroup = group(Family::G2);
  e.supergroup = O(7);
  e.restriction_map = g2_short_root_map();
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, {Q(2, 3), Q(-1, 3), Q(-1, 3)})});
  return e;
}

EmbeddingSpec spin7p_in_o8() {
  EmbeddingSpec e;
  e.name = "Spin(7)' in O(8)";
  e.subgroup = group(Family::Spin7p);
  e.supergroup = O(8);
  e.restriction_map = spin7p_map();
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, {h, h, h})});
  return e;
}

EmbeddingSpec spin7p_in_spin8() {
  EmbeddingSpec e = spin7p_in_o8();
  e.name = "Spin(7)' in Spin(8)";
  e.supergroup = group(Family::Spin8);
  e.defining_highest_weight = first_unit(e.supergroup);
  return e;
}

EmbeddingSpec spin8_in_spin9() {
  EmbeddingSpec e;
  e.name = "Spin(8) in Spin(9)";
  e.subgroup = group(Family::Spin8);
  e.supergroup = group(Family::Spin9);
  e.restriction_map = zeros(4, 4);
  for (int i = 0; i < 4; ++i) e.restriction_map[i][i] = 1;
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {first_unit(e.subgroup), zero(e.subgroup)});
  return e;
}

EmbeddingSpec o_isotropy(int n) {
  if (n < 3) throw DomainError("o_isotropy needs n >= 3");
  EmbeddingSpec e;
  e.name = "O(" + std::to_string(n - 1) + ") in O(" + std::to_string(n) + ")";
  e.subgroup = O(n - 1);
  e.supergroup = O(n);
  const int big = n / 2, small = (n - 1) / 2;
  e.restriction_map = zeros(small, big);
  for (int i = 0; i < small; ++i) e.restriction_map[i][i] = 1;
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {first_unit(e.subgroup), zero(e.subgroup)});
  return e;
}

EmbeddingSpec u_isotropy(int n) {
  if (n < 2) throw DomainError("u_isotropy needs n >= 2");
  EmbeddingSpec e;
  e.name = "U(" + std::to_string(n - 1) + ") in U(" + std::to_string(n) + ")";
  e.subgroup = U(n - 1);
  e.supergroup = U(n);
  e.restriction_map = zeros(n - 1, n);
  for (int i = 0; i + 1 < n; ++i) e.restriction_map[i][i + 1] = 1;
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {first_unit(e.subgroup), zero(e.subgroup)});
  return e;
}

EmbeddingSpec sp_isotropy(int n) {
  if (n < 2) throw DomainError("sp_isotropy needs n >= 2");
  EmbeddingSpec e;
  e.name = "Sp(" + std::to_string(n - 1) + ")xSp(1)_diag in Sp(" + std::to_string(n) + ")xSp(1)";
  e.subgroup = SpSp1(n - 1);
  e.supergroup = SpSp1(n);
  // (f_1, ..., f_n | g) -> (f_2, ..., f_n | f_1 + g)
  e.restriction_map = zeros(n, n + 1);
  for (int i = 0; i + 1 < n; ++i) e.restriction_map[i][i + 1] = 1;
  e.restriction_map[n - 1][0] = 1;
  e.restriction_map[n - 1][n] = 1;
  std::vector<Rational> def = basis(n + 1, 0);
  def[n] = 1;
  e.defining_highest_weight = hw(e.supergroup, def);
  std::vector<Rational> a = basis(n, 0), b(n, 0);
  a[n - 1] = 1;
  b[n - 1] = 2;
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, a), hw(e.subgroup, b), zero(e.subgroup)});
  return e;
}

EmbeddingSpec spin7p_in_spin9() {
  EmbeddingSpec e;
  e.name = "Spin(7)' in Spin(9)";
  e.subgroup = group(Family::Spin7p);
  e.supergroup = group(Family::Spin9);
  e.restriction_map = compose(spin7p_in_spin8().restriction_map, spin8_in_spin9().restriction_map);
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, {h, h, h}), zero(e.subgroup)});
  return e;
}

EmbeddingSpec su3_in_g2() {
  EmbeddingSpec e;
  e.name = "SU(3) in G2";
  e.subgroup = group(Family::SU3);
  e.supergroup = group(Family::G2);
  e.restriction_map = zeros(3, 3);
  for (int i = 0; i < 3; ++i) e.restriction_map[i][i] = 1;
  e.defining_highest_weight = hw(e.supergroup, {Q(2, 3), Q(-1, 3), Q(-1, 3)});
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, {Q(2, 3), Q(-1, 3), Q(-1, 3)}),
                                                 hw(e.subgroup, {Q(1, 3), Q(1, 3), Q(-2, 3)}), zero(e.subgroup)});
  return e;
}

EmbeddingSpec g2_in_spin7p() {
  EmbeddingSpec e;
  e.name = "G2 in Spin(7)'";
  e.subgroup = group(Family::G2);
  e.supergroup = group(Family::Spin7p);
  e.restriction_map = g2_short_root_map();
  e.defining_highest_weight = first_unit(e.supergroup);
  e.defining_decomposition = decomp(e.subgroup, {hw(e.subgroup, {Q(2, 3), Q(-1, 3), Q(-1, 3)})});
  return e;
}

std::vector<EmbeddingSpec> catalogue() {
  std::vector<EmbeddingSpec> all;
  for (int n = 2; n <= 4; ++n) all.push_back(u_in_o(n));
  for (int n = 1; n <= 3; ++n) all.push_back(sp_in_o(n));
  all.push_back(spin9_in_o16());
  all.push_back(g2_in_o7());
  all.push_back(spin7p_in_o8());
  all.push_back(spin7p_in_spin8());
  all.push_back(spin8_in_spin9());
  for (int n = 3; n <= 8; ++n) all.push_back(o_isotropy(n));
  for (int n = 2; n <= 4; ++n) all.push_back(u_isotropy(n));
  for (int n = 2; n <= 3; ++n) all.push_back(sp_isotropy(n));
  all.push_back(spin7p_in_spin9());
  all.push_back(su3_in_g2());
  all.push_back(g2_in_spin7p());
  return all;
}

}  // namespace sphspec::embeddings
