#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphspec/infchar_family.hpp"

using namespace sphspec;

namespace {

InfChar ic(const GroupLabel& g, std::vector<Rational> c) { return InfChar{make_weight(g, std::move(c)), g}; }

}  // namespace

TEST_CASE("family templates") {
  const auto o7 = infchar_family({SphereKind::O, 7});
  CHECK(o7.at({5}) == make_weight(O(7), {Rational(5), Q(3, 2), Q(1, 2)}));
  const auto o8 = infchar_family({SphereKind::O, 8});
  CHECK(o8.at({5}) == make_weight(O(8), {Rational(5), 2, 1, 0}));
  const auto u4 = infchar_family({SphereKind::U, 4});
  CHECK(u4.at({3, 2}) == make_weight(U(4), {Rational(3), Q(1, 2), Q(-1, 2), -2}));
  const auto sp3 = infchar_family({SphereKind::SpSp1, 3});
  CHECK(sp3.at({7, 3}) == make_weight(SpSp1(3), {7, 3, 1, 4}));
  const auto g2 = infchar_family({SphereKind::G2, 0});
  CHECK(g2.at({Q(1, 3)}) == make_weight(group(Family::G2), {Q(2, 3), Q(1, 6), Q(-5, 6)}));
  const auto s7 = infchar_family({SphereKind::Spin7p, 0});
  CHECK(s7.at({Q(7, 2)}) == make_weight(group(Family::Spin7p), {Q(9, 2), Q(7, 2), Q(5, 2)}));
}

TEST_CASE("membership examples") {
  const auto o5 = infchar_family({SphereKind::O, 5});
  for (int a = 0; a <= 4; ++a) {
    auto p = infchar_member(o5, ic(O(5), {Q(2 * a + 3, 2), Q(1, 2)}));
    REQUIRE(p);
    CHECK((*p)[0] == Q(2 * a + 3, 2));
  }
  CHECK_FALSE(infchar_member(o5, ic(O(5), {1, 1})));
  const auto s9 = infchar_family({SphereKind::Spin9, 0});
  auto p = infchar_member(s9, ic(group(Family::Spin9), {5, 3, 2, 1}));
  REQUIRE(p);
  CHECK((*p)[0] == 5);
  CHECK((*p)[1] == Q(1, 2));
  // A permuted and sign-changed representative is found too.
  p = infchar_member(s9, ic(group(Family::Spin9), {-2, 1, -5, 3}));
  REQUIRE(p);
  CHECK((*p)[0] == 5);
  CHECK((*p)[1] == Q(1, 2));
  const auto g2 = infchar_family({SphereKind::G2, 0});
  for (int a = 0; a <= 4; ++a) {
    auto q = infchar_member(g2, ic(group(Family::G2), {Q(2 * a + 5, 3), Q(-(a + 1), 3), Q(-(a + 4), 3)}));
    REQUIRE(q);
    CHECK((*q)[0] == Q(2 * a + 5, 6));  // xi = alpha/3 with alpha = a + 5/2
  }
  CHECK(infchar_member(g2, ic(group(Family::G2), {1, 0, -1})));  // xi = 1/2
  CHECK_FALSE(infchar_member(g2, ic(group(Family::G2), {1, 1, -2})));
  CHECK_THROWS_AS(infchar_member(g2, ic(group(Family::Spin7p), {1, 0, -1})), DomainError);
}

TEST_CASE("membership agrees with a search over the whole Weyl orbit") {
  auto brute = [](const InfCharFamily& f, const InfChar& c) {
    std::optional<std::vector<Rational>> best;
    for (const Weight& w : weyl_orbit(f.group, c.representative)) {
      // Solve for the parameters coordinate by coordinate, then confirm.
      std::vector<Rational> p(f.parameter_count());
      std::vector<bool> set(p.size(), false);
      for (std::size_t i = 0; i < w.size(); ++i) {
        int nonzero = 0;
        std::size_t j0 = 0;
        for (std::size_t j = 0; j < p.size(); ++j)
          if (f.coeff[i][j] != 0) ++nonzero, j0 = j;
        if (nonzero == 1 && !set[j0]) {
          p[j0] = (w[i] - f.offset[i]) / f.coeff[i][j0];
          set[j0] = true;
        }
      }
      if (f.at(p) == w && (!best || *best < p)) best = p;
    }
    return best;
  };
  const std::vector<SphereRealization> rs = {{SphereKind::O, 5}, {SphereKind::O, 6}, {SphereKind::U, 3},
                                             {SphereKind::SpSp1, 2}, {SphereKind::Spin9, 0}, {SphereKind::G2, 0},
                                             {SphereKind::Spin7p, 0}};
  for (const auto& r : rs) {
    const auto f = infchar_family(r);
    const int dim = static_cast<int>(f.offset.size());
    for (int s = 0; s < 40; ++s) {
      // Members with rational parameters, then small perturbations of them.
      std::vector<Rational> p(f.parameter_count());
      for (std::size_t j = 0; j < p.size(); ++j) p[j] = Q((7 * s + 3 * static_cast<long>(j)) % 13 - 6, 2);
      Weight w = f.at(p);
      if (s % 2) w.coords[s % dim] += Q(1, 2 + s % 3);
      if (r.kind == SphereKind::G2 && s % 2) w.coords[(s + 1) % dim] -= Q(1, 2 + s % 3);
      const InfChar c{w, f.group};
      INFO(to_string(r), " ", to_string(w));
      CHECK(infchar_member(f, c) == brute(f, c));
    }
  }
}
