#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphspec/branching.hpp"

using namespace sphspec;

namespace {

Weight W(const GroupLabel& g, std::vector<Rational> c) { return make_weight(g, std::move(c)); }

const Rational h = Q(1, 2);

WeightMultiset multiset(const GroupLabel& g, std::initializer_list<std::vector<Rational>> ws) {
  WeightMultiset m{g, {}};
  for (const auto& c : ws) m.entries[W(g, c)] += 1;
  return m;
}

WeightMultiset character_of(const IrrepDecomp& d) {
  WeightMultiset out{d.group, {}};
  for (const auto& [hw, mult] : d.constituents) {
    const auto wm = weight_multiplicities(d.group, hw);
    for (const auto& [w, m] : wm.entries) out.entries[w] += mult * m;
  }
  return out;
}

std::int64_t fixed_dim(const EmbeddingSpec& emb, const Weight& hw) {
  const auto& rd = root_datum(emb.subgroup);
  return branch_oracle(emb, hw).multiplicity(W(emb.subgroup, std::vector<Rational>(rd.coordinate_count, 0)));
}

Weight one_row(int n, int a) {
  std::vector<Rational> c(n / 2, 0);
  c[0] = a;
  return W(O(n), c);
}

}  // namespace

TEST_CASE("weight multiplicity examples") {
  CHECK(weight_multiplicities(Sp(1), W(Sp(1), {2})) == multiset(Sp(1), {{2}, {0}, {-2}}));
  CHECK(weight_multiplicities(U(3), W(U(3), {1, 1, 0})) ==
        multiset(U(3), {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(weight_multiplicities(O(4), W(O(4), {1, 0})) == multiset(O(4), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  const auto adj = weight_multiplicities(group(Family::G2), W(group(Family::G2), {1, 0, -1}));
  CHECK(adj.total_mass() == 14);
  CHECK(adj.entries.at(W(group(Family::G2), {0, 0, 0})) == 2);
}

TEST_CASE("serial and parallel Freudenthal agree") {
  const std::vector<std::pair<GroupLabel, std::vector<Rational>>> cases = {
      {O(9), {2, 1, 1, 0}}, {O(10), {2, 1, 1, 1, -1}}, {U(5), {2, 1, 0, 0, -2}},
      {SpSp1(3), {2, 1, 0, 3}}, {group(Family::Spin9), {Q(5, 2), Q(3, 2), h, h}},
      {group(Family::G2), {Q(5, 3), Q(-1, 3), Q(-4, 3)}}, {group(Family::Spin8), {2, 1, 1, -1}},
  };
  for (const auto& [g, c] : cases) {
    const RootDatum& rd = root_datum(g);
    const auto hw = to_scaled(rd, W(g, c));
    const auto s = kernels::freudenthal_serial(rd.geometry, hw);
    const auto p = kernels::freudenthal_parallel(rd.geometry, hw);
    CHECK(s.weights == p.weights);
  }
}

TEST_CASE("multisets have the Weyl dimension and are Weyl invariant") {
  const std::vector<std::pair<GroupLabel, std::vector<Rational>>> cases = {
      {O(7), {2, 1, 0}}, {O(8), {1, 1, 1, -1}}, {U(4), {1, 0, 0, -2}}, {SpSp1(2), {2, 1, 1}},
      {group(Family::Spin7p), {Q(3, 2), h, h}}, {group(Family::G2), {Q(4, 3), Q(-2, 3), Q(-2, 3)}},
      {group(Family::Spin9), {Q(3, 2), h, h, h}}, {group(Family::SU3), {Q(4, 3), Q(-2, 3), Q(-2, 3)}},
  };
  for (const auto& [g, c] : cases) {
    const Weight hw = W(g, c);
    const auto wm = weight_multiplicities(g, hw);
    CHECK(wm.total_mass() == weyl_dim(g, hw));
    // The O(2m) sign change only preserves characters whose label ends in 0.
    const bool outer_ok = hw[hw.size() - 1] == 0;
    for (const auto& gen : root_datum(g).weyl_generators) {
      if (gen.name.starts_with("flip") && !outer_ok) continue;
      for (const auto& [w, m] : wm.entries) {
        auto it = wm.entries.find(gen.apply(w));
        REQUIRE(it != wm.entries.end());
        CHECK(it->second == m);
      }
    }
  }
}

TEST_CASE("restriction examples") {
  const auto u2 = embeddings::u_in_o(2);
  CHECK(restrict_weights(u2, weight_multiplicities(O(4), one_row(4, 1))) ==
        multiset(U(2), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));

  const auto g2 = embeddings::g2_in_o7();
  const auto r7 = restrict_weights(g2, weight_multiplicities(O(7), one_row(7, 1)));
  CHECK(r7 == multiset(group(Family::G2), {{0, 0, 0},
                                            {Q(2, 3), Q(-1, 3), Q(-1, 3)},
                                            {Q(-2, 3), Q(1, 3), Q(1, 3)},
                                            {Q(1, 3), Q(-2, 3), Q(1, 3)},
                                            {Q(-1, 3), Q(2, 3), Q(-1, 3)},
                                            {Q(1, 3), Q(1, 3), Q(-2, 3)},
                                            {Q(-1, 3), Q(-1, 3), Q(2, 3)}}));

  const auto sp = embeddings::sp_in_o(2);
  CHECK(restrict_weights(sp, weight_multiplicities(O(8), one_row(8, 1))) ==
        multiset(SpSp1(2), {{1, 0, 1}, {1, 0, -1}, {-1, 0, 1}, {-1, 0, -1},
                            {0, 1, 1}, {0, 1, -1}, {0, -1, 1}, {0, -1, -1}}));

  CHECK_THROWS_AS(restrict_weights(sp, weight_multiplicities(O(7), one_row(7, 1))), DomainError);
}

TEST_CASE("decompose examples") {
  for (const auto& [g, c] : std::vector<std::pair<GroupLabel, std::vector<Rational>>>{
           {O(9), {1, 1, 0, 0}}, {U(3), {2, 0, -1}}, {group(Family::G2), {1, 0, -1}}, {SpSp1(2), {1, 1, 2}}}) {
    const auto d = decompose(g, weight_multiplicities(g, W(g, c)));
    CHECK(d.constituents.size() == 1);
    CHECK(d.multiplicity(W(g, c)) == 1);
  }
  const auto d = branch_oracle(embeddings::u_in_o(2), one_row(4, 1));
  CHECK(d.constituents.size() == 2);
  CHECK(d.multiplicity(W(U(2), {1, 0})) == 1);
  CHECK(d.multiplicity(W(U(2), {0, -1})) == 1);

  const auto g = branch_oracle(embeddings::g2_in_o7(), one_row(7, 1));
  CHECK(g.constituents.size() == 1);
  CHECK(g.multiplicity(W(group(Family::G2), {Q(2, 3), Q(-1, 3), Q(-1, 3)})) == 1);

  CHECK_THROWS_AS(decompose(U(2), multiset(U(2), {{1, 0}})), NotACharacter);
  CHECK_THROWS_AS(decompose(U(2), multiset(U(2), {{1, 0}, {0, 1}, {0, 1}})), NotACharacter);
  CHECK_THROWS_AS(decompose(O(2), multiset(O(2), {{1}})), NotACharacter);
  CHECK(decompose(O(2), multiset(O(2), {{1}, {-1}, {0}})).total_dim() == 3);
}

TEST_CASE("oracle examples for the sphere groups") {
  const auto s9 = branch_oracle(embeddings::spin9_in_o16(), one_row(16, 1));
  CHECK(s9.constituents.size() == 1);
  CHECK(s9.multiplicity(W(group(Family::Spin9), {h, h, h, h})) == 1);

  const auto s7 = branch_oracle(embeddings::spin7p_in_o8(), one_row(8, 2));
  CHECK(s7.constituents.size() == 1);
  CHECK(s7.multiplicity(W(group(Family::Spin7p), {1, 1, 1})) == 1);

  for (int y = 0; y <= 3; ++y) {
    const Rational c = Q(y, 2);
    CHECK(fixed_dim(embeddings::spin7p_in_spin8(), W(group(Family::Spin8), {c, c, c, c})) == 1);
  }
}

TEST_CASE("every catalogue entry reproduces its defining decomposition") {
  for (const auto& emb : embeddings::catalogue()) {
    INFO(emb.name);
    const auto restricted = restrict_weights(emb, weight_multiplicities(emb.supergroup, emb.defining_highest_weight));
    CHECK(restricted == character_of(emb.defining_decomposition));
    CHECK(decompose(emb.subgroup, restricted) == emb.defining_decomposition);
  }
}

TEST_CASE("dimension is conserved by branching") {
  for (const auto& emb : embeddings::catalogue()) {
    if (emb.supergroup == O(16)) continue;
    INFO(emb.name);
    const Weight& d = emb.defining_highest_weight;
    const Weight hw = d + d;
    CHECK(branch_oracle(emb, hw).total_dim() == weyl_dim(emb.supergroup, hw));
  }
}

TEST_CASE("spherical representations have a one-dimensional fixed space") {
  const GroupLabel g2 = group(Family::G2), s7 = group(Family::Spin7p), s9 = group(Family::Spin9);
  for (int n = 4; n <= 7; ++n)
    for (int a = 0; a <= 3; ++a) CHECK(fixed_dim(embeddings::o_isotropy(n), one_row(n, a)) == 1);
  CHECK(fixed_dim(embeddings::o_isotropy(6), W(O(6), {1, 1, 0})) == 0);
  CHECK(fixed_dim(embeddings::o_isotropy(7), W(O(7), {2, 1, 0})) == 0);

  for (int b = 0; b <= 2; ++b)
    for (int c = 0; c <= 2; ++c) CHECK(fixed_dim(embeddings::u_isotropy(3), W(U(3), {b, 0, -c})) == 1);
  for (const std::vector<Rational>& c : std::vector<std::vector<Rational>>{
           {1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 1, -1}, {2, 2, 0}})
    CHECK(fixed_dim(embeddings::u_isotropy(3), W(U(3), c)) == 0);

  for (int d = 0; d <= 2; ++d)
    for (int e = 0; e <= d; ++e)
      CHECK(fixed_dim(embeddings::sp_isotropy(2), W(SpSp1(2), {d, e, d - e})) == 1);
  CHECK(fixed_dim(embeddings::sp_isotropy(2), W(SpSp1(2), {1, 0, 0})) == 0);
  CHECK(fixed_dim(embeddings::sp_isotropy(2), W(SpSp1(2), {1, 1, 2})) == 0);
  CHECK(fixed_dim(embeddings::sp_isotropy(2), W(SpSp1(2), {2, 0, 0})) == 0);

  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      const Rational c = Q(y, 2);
      CHECK(fixed_dim(embeddings::spin7p_in_spin9(), W(s9, {c + x, c, c, c})) == 1);
    }
  CHECK(fixed_dim(embeddings::spin7p_in_spin9(), W(s9, {1, 1, 0, 0})) == 0);
  CHECK(fixed_dim(embeddings::spin7p_in_spin9(), W(s9, {Q(3, 2), Q(3, 2), h, h})) == 0);

  for (int a = 0; a <= 3; ++a) {
    CHECK(fixed_dim(embeddings::su3_in_g2(), W(g2, {Q(2 * a, 3), Q(-a, 3), Q(-a, 3)})) == 1);
    CHECK(fixed_dim(embeddings::g2_in_spin7p(), W(s7, {Q(a, 2), Q(a, 2), Q(a, 2)})) == 1);
  }
  CHECK(fixed_dim(embeddings::su3_in_g2(), W(g2, {1, 0, -1})) == 0);
  CHECK(fixed_dim(embeddings::g2_in_spin7p(), W(s7, {1, 0, 0})) == 0);
  CHECK(fixed_dim(embeddings::g2_in_spin7p(), W(s7, {1, 1, 0})) == 0);
}
