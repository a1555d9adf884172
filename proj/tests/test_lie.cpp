#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sphspec/lie.hpp"

using namespace sphspec;

namespace {

Weight W(const GroupLabel& g, std::vector<Rational> c) { return make_weight(g, std::move(c)); }

std::vector<GroupLabel> all_groups() {
  std::vector<GroupLabel> gs;
  for (int n = 1; n <= 10; ++n) gs.push_back(O(n));
  for (int n = 1; n <= 5; ++n) {
    gs.push_back(U(n));
    gs.push_back(Sp(n));
    gs.push_back(SpSp1(n));
  }
  for (Family f : {Family::Sp1, Family::Spin7p, Family::Spin8, Family::Spin9, Family::G2, Family::SU3, Family::U1,
                   Family::SO2})
    gs.push_back(group(f));
  return gs;
}

}  // namespace

TEST_CASE("rho values in standard coordinates") {
  CHECK(root_datum(O(9)).rho + root_datum(O(9)).rho == W(O(9), {7, 5, 3, 1}));
  CHECK(root_datum(O(9)).rho == root_datum(group(Family::Spin9)).rho);
  for (int n = 1; n <= 5; ++n) {
    std::vector<Rational> expect;
    for (int j = n; j >= 1; --j) expect.emplace_back(2 * j);
    CHECK(root_datum(Sp(n)).rho + root_datum(Sp(n)).rho == W(Sp(n), expect));
    std::vector<Rational> u;
    for (int j = 0; j < n; ++j) u.emplace_back(n - 1 - 2 * j);
    CHECK(root_datum(U(n)).rho + root_datum(U(n)).rho == W(U(n), u));
  }
  const Weight g2 = root_datum(group(Family::G2)).rho;
  CHECK(g2 + g2 == W(group(Family::G2), {Q(10, 3), Q(-2, 3), Q(-8, 3)}));
  const Weight s7 = root_datum(group(Family::Spin7p)).rho;
  CHECK(s7 + s7 == W(group(Family::Spin7p), {5, 3, 1}));
}

TEST_CASE("root datum invariants for every supported group") {
  for (const GroupLabel& g : all_groups()) {
    CAPTURE(to_string(g));
    const RootDatum& rd = root_datum(g);
    Weight two_rho{std::vector<Rational>(rd.coordinate_count, 0), rd.lattice};
    for (const Weight& a : rd.positive_roots) two_rho = two_rho + a;
    CHECK(two_rho == rd.rho + rd.rho);
    std::set<Weight> roots;
    for (const Weight& a : rd.positive_roots) {
      roots.insert(a);
      Weight neg = a;
      for (auto& c : neg.coords) c = -c;
      roots.insert(neg);
    }
    for (const WeylGenerator& s : rd.weyl_generators) {
      std::set<Weight> image;
      for (const Weight& a : roots) image.insert(s.apply(a));
      CHECK(image == roots);
      // orthogonality
      for (std::size_t i = 0; i < s.matrix.size(); ++i)
        for (std::size_t j = 0; j < s.matrix.size(); ++j) {
          Rational d = 0;
          for (std::size_t k = 0; k < s.matrix.size(); ++k) d += s.matrix[k][i] * s.matrix[k][j];
          CHECK(d == (i == j ? 1 : 0));
        }
    }
    for (const Weight& a : rd.positive_roots) CHECK(dot(rd.rho, a) > 0);
  }
}

TEST_CASE("G2 Weyl group has order 12 and the chamber matches the generators") {
  const GroupLabel g = group(Family::G2);
  const Weight generic = W(g, {Q(7, 3), Q(-2, 3), Q(-5, 3)});
  const auto orbit = weyl_orbit(g, generic);
  CHECK(orbit.size() == 12);
  int dominant = 0;
  for (const Weight& w : orbit) {
    if (is_dominant(g, w)) ++dominant;
    CHECK(dominant_form(g, w) == dominant_form(g, generic));
  }
  CHECK(dominant == 1);
}

TEST_CASE("orbit sizes of regular elements equal the Weyl group order") {
  CHECK(weyl_orbit(O(5), W(O(5), {Q(3, 2), Q(1, 2)})).size() == 8);
  CHECK(weyl_orbit(O(6), W(O(6), {3, 2, 1})).size() == 48);  // all sign changes for O(6)
  CHECK(weyl_orbit(group(Family::Spin8), W(group(Family::Spin8), {4, 3, 2, 1})).size() == 192);
  CHECK(weyl_orbit(U(4), W(U(4), {3, 2, 1, 0})).size() == 24);
  CHECK(weyl_orbit(SpSp1(2), W(SpSp1(2), {2, 1, 1})).size() == 16);
}

TEST_CASE("dominant_form agrees with a reflection-descent oracle") {
  // Independent normalization: reflect in any simple root with negative pairing until none remain.
  auto descend = [](const GroupLabel& g, Weight w) {
    const RootDatum& rd = root_datum(g);
    for (bool changed = true; changed;) {
      changed = false;
      for (const Weight& a : rd.simple_roots) {
        const Rational p = dot(w, a);
        if (p < 0) {
          const Rational c = 2 * p / dot(a, a);
          for (std::size_t i = 0; i < w.size(); ++i) w.coords[i] -= c * a[i];
          changed = true;
        }
      }
    }
    return w;
  };
  const std::vector<std::pair<GroupLabel, std::vector<Rational>>> cases = {
      {O(7), {-1, 3, -2}},
      {O(8), {-1, 3, -2, 1}},
      {O(8), {-1, 3, -2, 0}},
      {U(4), {-1, 3, -2, 5}},
      {Sp(3), {0, -4, 2}},
      {SpSp1(2), {-1, 2, -3}},
      {group(Family::Spin9), {Q(1, 2), Q(-3, 2), Q(5, 2), Q(-1, 2)}},
      {group(Family::Spin8), {Q(1, 2), Q(-3, 2), Q(5, 2), Q(1, 2)}},
      {group(Family::G2), {Q(-4, 3), Q(5, 3), Q(-1, 3)}},
      {group(Family::SU3), {Q(-4, 3), Q(5, 3), Q(-1, 3)}},
  };
  for (const auto& [g, c] : cases) {
    CAPTURE(to_string(g));
    const Weight w = W(g, c);
    CHECK(dominant_form(g, w) == descend(g, w));
    CHECK(is_dominant(g, dominant_form(g, w)));
  }
}

TEST_CASE("weyl_dim examples") {
  CHECK(weyl_dim(O(4), W(O(4), {1, 0})) == 4);
  CHECK(weyl_dim(U(2), W(U(2), {1, -1})) == 3);
  CHECK(weyl_dim(group(Family::G2), W(group(Family::G2), {Q(2, 3), Q(-1, 3), Q(-1, 3)})) == 7);
  CHECK(weyl_dim(group(Family::Spin9), W(group(Family::Spin9), {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)})) == 16);
  CHECK(weyl_dim(group(Family::Spin7p), W(group(Family::Spin7p), {Q(1, 2), Q(1, 2), Q(1, 2)})) == 8);
  CHECK(weyl_dim(SpSp1(2), W(SpSp1(2), {1, 0, 1})) == 8);
  for (const GroupLabel& g : all_groups()) {
    const RootDatum& rd = root_datum(g);
    CHECK(weyl_dim(g, Weight{std::vector<Rational>(rd.coordinate_count, 0), rd.lattice}) == 1);
  }
  CHECK(one_row_dim(1, 0) == 1);
  CHECK(one_row_dim(1, 1) == 1);
  CHECK(one_row_dim(1, 2) == 0);
  CHECK(one_row_dim(2, 0) == 1);
  CHECK(one_row_dim(2, 5) == 2);
  CHECK(one_row_dim(3, 2) == 5);
}

TEST_CASE("weyl_dim rejects bad input") {
  CHECK_THROWS_AS(weyl_dim(O(4), W(O(4), {0, 1})), DomainError);
  CHECK_THROWS_AS(weyl_dim(U(3), W(U(3), {Q(1, 2), 0, 0})), DomainError);
  CHECK_THROWS_AS(weyl_dim(group(Family::Spin9), W(group(Family::Spin9), {1, Q(1, 2), 0, 0})), DomainError);
  CHECK_THROWS_AS(weyl_dim(group(Family::G2), W(group(Family::G2), {1, 0, 0})), DomainError);
  CHECK_THROWS_AS(weyl_dim(O(5), W(O(5), {1})), DomainError);
}

TEST_CASE("casimir examples") {
  CHECK(casimir(O(4), W(O(4), {2, 0})) == 8);
  CHECK(casimir(U(2), W(U(2), {0, -1})) == 2);
  CHECK(casimir(group(Family::G2), W(group(Family::G2), {Q(2, 3), Q(-1, 3), Q(-1, 3)})) == 4);
  CHECK(casimir(U(3), W(U(3), {0, 0, 0})) == 0);
}

TEST_CASE("inf_char examples") {
  for (int n = 3; n <= 9; ++n) {
    std::vector<Rational> hw(n / 2, 0), expect;
    hw[0] = 4;
    for (int j = 0; j < n / 2; ++j) expect.push_back(Q(n - 2 - 2 * j, 2));
    expect[0] += 4;
    CHECK(inf_char(O(n), W(O(n), hw)).representative == W(O(n), expect));
  }
  const GroupLabel s9 = group(Family::Spin9);
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y) {
      const Weight hw = W(s9, {Q(y, 2) + x, Q(y, 2), Q(y, 2), Q(y, 2)});
      CHECK(inf_char(s9, hw).representative ==
            W(s9, {Q(2 * x + y + 7, 2), Q(y + 5, 2), Q(y + 3, 2), Q(y + 1, 2)}));
    }
  CHECK(inf_char(U(3), W(U(3), {0, 0, 0})).representative == root_datum(U(3)).rho);
}

TEST_CASE("weyl_equivalent examples and properties") {
  CHECK(weyl_equivalent(O(5), W(O(5), {Q(3, 2), Q(1, 2)}), W(O(5), {Q(-1, 2), Q(-3, 2)})));
  CHECK(weyl_equivalent(U(3), W(U(3), {1, 0, 0}), W(U(3), {0, 0, 1})));
  CHECK_FALSE(weyl_equivalent(U(3), W(U(3), {1, 0, 0}), W(U(3), {-1, 0, 0})));
  // Spin(8) distinguishes the two half-spin weights; O(8) does not.
  const GroupLabel s8 = group(Family::Spin8);
  CHECK_FALSE(weyl_equivalent(s8, W(s8, {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)}),
                              W(s8, {Q(1, 2), Q(1, 2), Q(1, 2), Q(-1, 2)})));
  CHECK(weyl_equivalent(O(8), W(O(8), {3, 2, 1, 1}), W(O(8), {3, 2, 1, -1})));
  const GroupLabel g2 = group(Family::G2);
  const Weight w = W(g2, {Q(5, 3), Q(-1, 3), Q(-4, 3)});
  for (const WeylGenerator& s : root_datum(g2).weyl_generators) {
    CHECK(weyl_equivalent(g2, w, s.apply(w)));
    CHECK(weyl_equivalent(g2, s.apply(w), w));
  }
  CHECK_THROWS_AS(weyl_equivalent(U(3), W(U(3), {1, 0, 0}), W(U(2), {1, 0})), DomainError);
  CHECK(inf_char(U(2), W(U(2), {1, 0})) == InfChar{W(U(2), {Q(-1, 2), Q(3, 2)}), U(2)});
}
