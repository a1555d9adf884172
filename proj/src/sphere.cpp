#include "sphspec/sphere.hpp"

#include <map>

namespace sphspec {

namespace {

Weight W(const GroupLabel& g, std::vector<Rational> c) { return make_weight(g, std::move(c)); }

// Affine shift params -> orbit params, per coordinate.
std::vector<Rational> orbit_shift(const SphereRealization& r) {
  const int n = r.n;
  switch (r.kind) {
    case SphereKind::O: return {Q(n - 2, 2)};
    case SphereKind::U: return {Q(n - 1, 2), Q(n - 1, 2)};
    case SphereKind::SpSp1: return {Rational(n - 1), Rational(n - 2)};
    case SphereKind::Spin9: return {Rational(2), Rational(3)};
    case SphereKind::G2: return {Q(5, 2)};
    case SphereKind::Spin7p: return {Rational(3)};
  }
  throw DomainError("unknown realization");
}

}  // namespace

std::size_t parameter_count(const SphereRealization& r) {
  return r.kind == SphereKind::U || r.kind == SphereKind::SpSp1 || r.kind == SphereKind::Spin9 ? 2 : 1;
}

void check_params(const SphereRealization& r, const Params& p) {
  validate(r);
  if (p.size() != parameter_count(r))
    throw DomainError(to_string(r) + " takes " + std::to_string(parameter_count(r)) + " parameters");
  for (auto v : p)
    if (v < 0) throw DomainError("sphere parameters must be non-negative");
  if (r.kind == SphereKind::SpSp1 && p[0] < p[1]) throw DomainError("Sp parameters need d >= e");
}

Weight spherical_highest_weight(const SphereRealization& r, const Params& p) {
  check_params(r, p);
  const GroupLabel g = group_of(r);
  const int rank = root_datum(g).coordinate_count;
  std::vector<Rational> c(rank, 0);
  switch (r.kind) {
    case SphereKind::O:
      c[0] = p[0];
      break;
    case SphereKind::U:
      c[0] = p[0];
      c[rank - 1] -= p[1];
      break;
    case SphereKind::SpSp1:
      c[0] = p[0];
      c[1] = p[1];
      c[rank - 1] = p[0] - p[1];
      break;
    case SphereKind::Spin9: {
      const Rational half = Q(p[1], 2);
      c = {half + p[0], half, half, half};
      break;
    }
    case SphereKind::G2:
      c = {Q(2 * p[0], 3), Q(-p[0], 3), Q(-p[0], 3)};
      break;
    case SphereKind::Spin7p:
      c = {Q(p[0], 2), Q(p[0], 2), Q(p[0], 2)};
      break;
  }
  return W(g, c);
}

std::int64_t level(const SphereRealization& r, const Params& p) {
  check_params(r, p);
  switch (r.kind) {
    case SphereKind::U:
    case SphereKind::SpSp1: return p[0] + p[1];
    case SphereKind::Spin9: return 2 * p[0] + p[1];
    default: return p[0];
  }
}

SpectrumEntry spectrum_entry(const SphereRealization& r, const Params& p) {
  const GroupLabel g = group_of(r);
  SpectrumEntry e;
  e.realization = r;
  e.params = p;
  e.highest_weight = spherical_highest_weight(r, p);
  e.dim = weyl_dim(g, e.highest_weight);
  e.casimir = casimir(g, e.highest_weight);
  e.inf_char = inf_char(g, e.highest_weight);
  e.orbit = orbit_param(r, p);
  return e;
}

std::vector<SpectrumEntry> spectrum(const SphereRealization& r, std::int64_t cutoff) {
  validate(r);
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  std::vector<SpectrumEntry> out;
  switch (r.kind) {
    case SphereKind::U:
      for (std::int64_t b = 0; b <= cutoff; ++b)
        for (std::int64_t c = 0; b + c <= cutoff; ++c) out.push_back(spectrum_entry(r, {b, c}));
      break;
    case SphereKind::SpSp1:
      for (std::int64_t d = 0; d <= cutoff; ++d)
        for (std::int64_t e = 0; e <= d && d + e <= cutoff; ++e) out.push_back(spectrum_entry(r, {d, e}));
      break;
    case SphereKind::Spin9:
      for (std::int64_t x = 0; 2 * x <= cutoff; ++x)
        for (std::int64_t y = 0; 2 * x + y <= cutoff; ++y) out.push_back(spectrum_entry(r, {x, y}));
      break;
    default:
      for (std::int64_t a = 0; a <= cutoff; ++a) out.push_back(spectrum_entry(r, {a}));
  }
  return out;
}

IrrepDecomp branch_rule(const SphereRealization& r, std::int64_t a) {
  validate(r);
  if (r.kind == SphereKind::O) throw DomainError("branch_rule: O(n) is the ambient group itself");
  if (a < 0) throw DomainError("branch_rule needs a >= 0");
  const GroupLabel g = group_of(r);
  IrrepDecomp out{g, {}};
  auto add = [&](const Params& p) { out.constituents[spherical_highest_weight(r, p)] = 1; };
  switch (r.kind) {
    case SphereKind::U:
      for (std::int64_t b = 0; b <= a; ++b) add({b, a - b});
      break;
    case SphereKind::SpSp1:
      for (std::int64_t e = 0; 2 * e <= a; ++e) add({a - e, e});
      break;
    case SphereKind::Spin9:
      for (std::int64_t x = 0; 2 * x <= a; ++x) add({x, a - 2 * x});
      break;
    default: add({a});
  }
  return out;
}

SubgroupRepFact subgroup_generated_rep(const SphereRealization& r, const SpectrumEntry& e) {
  SubgroupRepFact f;
  f.realization = r;
  switch (r.kind) {
    case SphereKind::U:
      f.subgroup = group(Family::U1);
      f.highest_weight = W(f.subgroup, {Rational(e.params[0] - e.params[1])});
      break;
    case SphereKind::SpSp1: {
      f.subgroup = SpSp1(1);
      const Rational k = e.params[0] - e.params[1];
      f.highest_weight = W(f.subgroup, {k, k});
      break;
    }
    case SphereKind::Spin9: {
      f.subgroup = group(Family::Spin8);
      const Rational c = Q(e.params[1], 2);
      f.highest_weight = W(f.subgroup, {c, c, c, c});
      break;
    }
    default: throw DomainError("subgroup_generated_rep: no subgroup fact for " + to_string(r));
  }
  f.inf_char = inf_char(f.subgroup, f.highest_weight);
  return f;
}

Rational compound_casimir(const SphereRealization& r, const SpectrumEntry& e) {
  if (!(e.realization.kind == r.kind && e.realization.n == r.n))
    throw DomainError("compound_casimir: entry belongs to " + to_string(e.realization));
  switch (r.kind) {
    case SphereKind::O: return e.casimir;
    case SphereKind::U: {
      const auto f = subgroup_generated_rep(r, e);
      return 2 * e.casimir - casimir(f.subgroup, f.highest_weight);
    }
    case SphereKind::SpSp1: {
      // Omega_Sp is the Sp(n) factor; Omega_Sp(1) is the Sp(1) factor.
      const Rational k = e.params[0] - e.params[1];
      const Rational omega_sp1 = casimir(Sp(1), W(Sp(1), {k}));
      const Rational omega_sp = e.casimir - omega_sp1;
      return 2 * omega_sp - omega_sp1;
    }
    case SphereKind::Spin9: {
      const auto f = subgroup_generated_rep(r, e);
      return 4 * e.casimir - 3 * casimir(f.subgroup, f.highest_weight);
    }
    case SphereKind::G2: return Q(3, 2) * e.casimir;
    case SphereKind::Spin7p: return Q(4, 3) * e.casimir;
  }
  throw DomainError("unknown realization");
}

OrbitParams orbit_param(const SphereRealization& r, const Params& p) {
  check_params(r, p);
  const auto shift = orbit_shift(r);
  OrbitParams o;
  for (std::size_t i = 0; i < p.size(); ++i) o.values.push_back(p[i] + shift[i]);
  return o;
}

Params from_orbit(const SphereRealization& r, const OrbitParams& o) {
  validate(r);
  const auto shift = orbit_shift(r);
  if (o.values.size() != shift.size()) throw DomainError("from_orbit: wrong parameter count");
  Params p;
  for (std::size_t i = 0; i < shift.size(); ++i) {
    const Rational v = o.values[i] - shift[i];
    if (!is_integer(v)) throw DomainError("from_orbit: " + to_string(o.values[i]) + " is off the orbit lattice");
    p.push_back(to_int64(v));
  }
  check_params(r, p);
  return p;
}

EmbeddingSpec ambient_embedding(const SphereRealization& r) {
  validate(r);
  switch (r.kind) {
    case SphereKind::U: return embeddings::u_in_o(r.n);
    case SphereKind::SpSp1: return embeddings::sp_in_o(r.n);
    case SphereKind::Spin9: return embeddings::spin9_in_o16();
    case SphereKind::G2: return embeddings::g2_in_o7();
    case SphereKind::Spin7p: return embeddings::spin7p_in_o8();
    case SphereKind::O: break;
  }
  throw DomainError("ambient_embedding: O(n) is the ambient group itself");
}

EmbeddingSpec isotropy_embedding(const SphereRealization& r) {
  validate(r);
  switch (r.kind) {
    case SphereKind::O: return embeddings::o_isotropy(r.n);
    case SphereKind::U: return embeddings::u_isotropy(r.n);
    case SphereKind::SpSp1: return embeddings::sp_isotropy(r.n);
    case SphereKind::Spin9: return embeddings::spin7p_in_spin9();
    case SphereKind::G2: return embeddings::su3_in_g2();
    case SphereKind::Spin7p: return embeddings::g2_in_spin7p();
  }
  throw DomainError("unknown realization");
}

std::vector<std::pair<Rational, std::int64_t>> laplace_spectrum(const SphereRealization& r, std::int64_t cutoff) {
  std::map<Rational, std::int64_t> agg;
  for (const auto& e : spectrum(r, cutoff)) agg[e.casimir] += e.dim;
  return {agg.begin(), agg.end()};
}

}  // namespace sphspec
