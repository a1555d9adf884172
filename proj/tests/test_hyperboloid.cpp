#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphspec/hyperboloid.hpp"
#include <set>

#include "sphspec/infchar_family.hpp"

using namespace sphspec;

namespace {

const HypRealization spin81{HypKind::Spin81, 0, 0};
const HypRealization g2s1{HypKind::G2s43, 0, 0};
const HypRealization g2s2{HypKind::G2s34, 0, 0};
const HypRealization spin34{HypKind::Spin34p, 0, 0};

std::vector<Rational> coords(const InfChar& ic) { return ic.representative.coords; }

}  // namespace

TEST_CASE("discrete series enumeration") {
  const auto o23 = ds_params({HypKind::O, 2, 3}, 3);
  REQUIRE(o23.size() == 5);
  CHECK(o23.front().ell == -1);
  CHECK(o23.back().ell == 3);

  const auto s = ds_params(spin81, 4);
  REQUIRE(s.size() == 4);
  CHECK((s[0].x == -4 && s[0].y == 2));
  CHECK((s[1].x == -4 && s[1].y == 3));
  CHECK((s[2].x == -4 && s[2].y == 4));
  CHECK((s[3].x == -5 && s[3].y == 4));

  const auto g = ds_params(g2s1, 2);
  REQUIRE(g.size() == 5);
  CHECK(g[0].ell == -2);
  CHECK(g[0].reducible);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK_FALSE(g[i].reducible);

  CHECK_THROWS_AS(ds_params({HypKind::U, 1, 2}, 2), DomainError);
  CHECK_THROWS_AS(ds_params({HypKind::O, 1, 2}, 2), DomainError);
  CHECK_THROWS_AS(make_param({HypKind::O, 2, 3}, -2), DomainError);
  CHECK_THROWS_AS(make_param({HypKind::Sp, 2, 2}, 0, -1, 1), DomainError);
  CHECK(ds_params({HypKind::GLnR, 3, 0}, 3).empty());
  CHECK_FALSE(has_discrete_series({HypKind::GLnR, 3, 0}));
}

TEST_CASE("Spin(8,1) parameters") {
  for (std::int64_t y = 0; y <= 10; ++y) {
    std::int64_t expected = 0;
    for (std::int64_t x = -4; 2 * x > -(y + 7); --x) ++expected;
    std::int64_t count = 0;
    for (const auto& d : ds_params(spin81, 10))
      if (d.y == y) {
        ++count;
        CHECK(d.spin81->hc_case == Spin81Case::third);
        CHECK(d.spin81->hc_parameter.coords ==
              std::vector<Rational>{Q(y + 5, 2), Q(y + 3, 2), Q(y + 1, 2), Q(2 * d.x + y + 7, 2)});
      }
    CHECK(count == (y >= 1 ? expected : 0));
    if (y >= 2) CHECK(count == (y + 8) / 2 - 4);
  }
  for (std::int64_t x = -3; x <= -1; ++x) CHECK_FALSE(spin81_hc_parameter(x, 3, 1).has_value());
  Spin81Case c;
  CHECK(spin81_hc_parameter(0, 1, -1, &c)->coords == std::vector<Rational>{4, 3, 2, -1});
  CHECK(c == Spin81Case::first);
  const auto d = make_param(spin81, 0, -5, 4);
  CHECK(d.spin81->lowest_k_type.coords == std::vector<Rational>{2, 2, 2, 1});
}

TEST_CASE("infinitesimal characters") {
  CHECK(coords(ds_infchar(make_param({HypKind::O, 2, 3}, 0))) == std::vector<Rational>{Q(3, 2), Q(1, 2)});
  CHECK(coords(ds_infchar(make_param(spin34, 0))) == std::vector<Rational>{Q(5, 2), Q(3, 2), Q(1, 2)});
  CHECK(coords(ds_infchar(make_param({HypKind::U, 2, 2}, 0, 0, 0))) ==
        std::vector<Rational>{Q(3, 2), Q(1, 2), Q(-1, 2), Q(-3, 2)});
  CHECK(coords(ds_infchar(make_param({HypKind::Sp, 2, 2}, 1, 3, -2))) == std::vector<Rational>{7, 1, 2, 1, 6});
  const std::vector<HypRealization> all = {{HypKind::O, 2, 3}, {HypKind::O, 3, 3}, {HypKind::U, 2, 2},
                                           {HypKind::U, 3, 2}, {HypKind::Sp, 2, 2}, spin81, g2s1, g2s2, spin34};
  for (const auto& r : all) {
    const auto fam = infchar_family(compact_form(r));
    for (const auto& d : ds_params(r, 6)) {
      INFO(to_string(r), " l=", d.ell, " x=", d.x);
      CHECK(infchar_member(fam, ds_infchar(d)).has_value());
    }
  }
}

TEST_CASE("K-types") {
  const auto o22 = ds_ktypes(make_param({HypKind::O, 2, 2}, 0), 2);
  CHECK(o22.entries.size() == 4);
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {4, 2}, {4, 0}})
    CHECK(o22.entries.at({IrrepLabel{"O", 2, {a}}, IrrepLabel{"O", 2, {b}}}) == 1);

  const auto u = ds_ktypes(make_param({HypKind::U, 2, 2}, 0, 0, 0), 0);
  CHECK(u.entries.size() == 1);
  CHECK(u.entries.at({IrrepLabel{"U", 2, {2, 2}}, IrrepLabel{"U", 2, {0, 0}}}) == 1);

  const auto g = ds_ktypes(make_param(g2s2, -2), 0);
  CHECK(g.entries.size() == 1);
  CHECK(g.entries.at({IrrepLabel{"SU(2)_long", 0, {0}}, IrrepLabel{"SU(2)_short", 0, {4}}}) == 1);

  CHECK_THROWS_AS(ds_ktypes(make_param(spin34, 0), 2), DomainError);
  CHECK_THROWS_AS(ds_ktypes(make_param(spin81, 0, -4, 2), 2), DomainError);
}

TEST_CASE("K-type truncation is stable") {
  const std::vector<DiscreteSeriesParam> ps = {
      make_param({HypKind::O, 3, 2}, 1), make_param({HypKind::U, 2, 3}, 1, 3, -2),
      make_param({HypKind::Sp, 2, 2}, 0, 2, -2), make_param(g2s1, 0), make_param(g2s2, -1)};
  for (const auto& d : ps) {
    const auto small = ds_ktypes(d, 2), big = ds_ktypes(d, 4);
    for (const auto& [k, m] : small.entries) CHECK(big.entries.at(k) == m);
  }
}

TEST_CASE("split G2 dimension check") {
  for (std::int64_t l = -2; l <= 2; ++l) {
    const auto r1 = g2s_dimension_check(1, l, 4);
    CHECK(r1.corrected_ok);
    CHECK_FALSE(r1.literal_ok);
    const auto r2 = g2s_dimension_check(2, l, 4);
    CHECK(r2.corrected_ok);
    CHECK_FALSE(r2.literal_ok);
  }
}

TEST_CASE("range classification") {
  const HypRealization u22{HypKind::U, 2, 2}, u32{HypKind::U, 3, 2}, sp22{HypKind::Sp, 2, 2};
  CHECK(classify_range(make_param(u22, 0, 3, -3)).kind == RangeKind::q_plus);
  const auto edge = classify_range(make_param(u32, 0, 2, -2));
  CHECK(edge.kind == RangeKind::edge_plus_zero);
  REQUIRE(edge.parabolics.size() == 2);
  CHECK(edge.parabolics[0].lambda == "xi_{2} (x) xi_{-1} (x) det^{1}");
  CHECK(edge.parabolics[1].lambda == "xi_{2} (x) 1 (x) xi_{2}");
  CHECK(classify_range(make_param(u32, 0, -2, 2)).kind == RangeKind::edge_zero_minus);
  CHECK(classify_range(make_param(u32, 0, -3, 3)).kind == RangeKind::q_minus);
  CHECK(classify_range(make_param(sp22, 0, 0, 0)).kind == RangeKind::unclassified);
  CHECK(classify_range(make_param(sp22, 0, 1, -1)).kind == RangeKind::q_zero);
  CHECK(classify_range(make_param(sp22, 0, 3, -3)).kind == RangeKind::edge_plus_zero);
  CHECK(classify_range(make_param(sp22, 0, 4, -4)).kind == RangeKind::q_plus);
  CHECK_THROWS_AS(classify_range(make_param({HypKind::O, 2, 2}, 0)), DomainError);

  // Edges never occur for even n.
  for (const auto& d : ds_params(u22, 6)) {
    CHECK(d.range->kind != RangeKind::edge_plus_zero);
    CHECK(d.range->kind != RangeKind::edge_zero_minus);
  }
}

TEST_CASE("U family central characters are distinct and Sp parameters are regular") {
  for (std::int64_t l = -2; l <= 3; ++l) {
    std::set<std::int64_t> seen;
    for (const auto& d : ds_params({HypKind::U, 2, 2}, 6))
      if (d.ell == l) CHECK(seen.insert(d.x - d.y).second);
  }
  for (const auto& d : ds_params({HypKind::Sp, 2, 2}, 6)) CHECK(d.x - d.y + 1 > 0);
}

TEST_CASE("orbit conversions") {
  CHECK(orbit_convert(make_param({HypKind::O, 2, 3}, 0)) == std::vector<Rational>{Q(3, 2)});
  CHECK(orbit_convert(make_param({HypKind::Sp, 2, 2}, 0, 0, 0)) == std::vector<Rational>{4, 3});
  CHECK(orbit_convert(make_param(g2s1, -2)) == std::vector<Rational>{Q(1, 2)});
  CHECK(orbit_convert(make_param(spin34, -2)) == std::vector<Rational>{1});
  const std::vector<HypRealization> all = {{HypKind::O, 2, 3}, {HypKind::U, 3, 2}, {HypKind::Sp, 2, 2},
                                           spin81, g2s1, g2s2, spin34};
  for (const auto& r : all)
    for (const auto& d : ds_params(r, 5)) {
      const auto back = from_orbit(r, orbit_convert(d));
      CHECK(back.ell == d.ell);
      CHECK(back.x == d.x);
      CHECK(back.y == d.y);
    }
  // l_orbit > 0 is exactly the discrete series condition.
  CHECK_THROWS_AS(from_orbit({HypKind::O, 2, 3}, {Q(-1, 2)}), DomainError);
  CHECK_THROWS_AS(from_orbit({HypKind::O, 2, 3}, {Q(1, 3)}), DomainError);
}

TEST_CASE("continuous family") {
  const auto fam = continuous_params(3, 2);
  CHECK(fam.epsilons == std::vector<int>{0, 1});
  const auto e0 = continuous_ktypes(3, 2, 0, 1);
  CHECK(e0.entries.size() == 2);
  CHECK(e0.entries.count({IrrepLabel{"O", 3, {0}}, IrrepLabel{"O", 2, {0}}}));
  CHECK(e0.entries.count({IrrepLabel{"O", 3, {1}}, IrrepLabel{"O", 2, {1}}}));
  const auto e1 = continuous_ktypes(3, 2, 1, 1);
  CHECK(e1.entries.size() == 2);
  CHECK(e1.entries.count({IrrepLabel{"O", 3, {0}}, IrrepLabel{"O", 2, {1}}}));
  CHECK(continuous_ktypes(3, 2, 1, 0).entries.empty());
}

TEST_CASE("family consistency") {
  for (std::int64_t l = -2; l <= 2; ++l) {
    const auto u = consistency_check(HypKind::U, 2, 2, l, 6);
    CHECK_MESSAGE(u.pass, u.first_discrepancy);
    CHECK_FALSE(u.o_side.empty());
    const auto sp = consistency_check(HypKind::Sp, 2, 2, l, 6);
    CHECK_MESSAGE(sp.pass, sp.first_discrepancy);
    CHECK_FALSE(sp.o_side.empty());
  }
  CHECK(consistency_check(HypKind::U, 2, 2, 0, 0).pass);
  CHECK(consistency_check(HypKind::U, 3, 2, 1, 4, Exec::serial).pass);
  CHECK(consistency_check(HypKind::Sp, 2, 3, -1, 3, Exec::serial).pass);
}

TEST_CASE("special constituents") {
  const auto a = make_param(g2s1, -2);
  CHECK(a.constituents == std::vector<std::string>{"J_-(H_2;(2,0))", "J(H_2;(1,1))"});
  const auto b = make_param(g2s2, -2);
  CHECK(b.constituents == std::vector<std::string>{"J(H_1;(1,1))"});
  CHECK_FALSE(b.reducible);
  CHECK(make_param(g2s1, 0).constituents == std::vector<std::string>{"irreducible"});
  for (const auto& d : ds_params(spin34, 5)) {
    CHECK(d.constituents == std::vector<std::string>{"irreducible"});
    CHECK(d.restriction_identity);
  }
}

TEST_CASE("serial and parallel consistency reports agree") {
  for (HypKind k : {HypKind::U, HypKind::Sp}) {
    const auto s = consistency_check(k, 2, 2, 1, 4, Exec::serial);
    const auto p = consistency_check(k, 2, 2, 1, 4, Exec::parallel);
    CHECK(s.o_side == p.o_side);
    CHECK(s.family_side == p.family_side);
    CHECK(s.bound == p.bound);
  }
}
