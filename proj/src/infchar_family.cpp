#include "sphspec/infchar_family.hpp"

#include <set>

namespace sphspec {

Weight InfCharFamily::at(const std::vector<Rational>& params) const {
  if (params.size() != parameter_count()) throw DomainError("wrong number of family parameters");
  Weight w = offset;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < params.size(); ++j) w.coords[i] += coeff[i][j] * params[j];
  return w;
}

InfCharFamily infchar_family(const SphereRealization& r) {
  validate(r);
  InfCharFamily f;
  f.realization = r;
  f.group = group_of(r);
  const int dim = root_datum(f.group).coordinate_count;
  f.offset = make_weight(f.group, std::vector<Rational>(dim, 0));
  auto params = [&](std::vector<std::string> names) {
    f.parameter_names = std::move(names);
    f.coeff.assign(dim, std::vector<Rational>(f.parameter_names.size(), 0));
  };
  const int n = r.n;
  switch (r.kind) {
    case SphereKind::O:  // (alpha, (n-4)/2, ..., eps/2)
      params({"alpha"});
      f.coeff[0][0] = 1;
      for (int j = 1; j < dim; ++j) f.offset.coords[j] = Q(n - 2 - 2 * j, 2);
      break;
    case SphereKind::U:  // (xi, (n-3)/2, ..., -(n-3)/2, -tau)
      params({"xi", "tau"});
      f.coeff[0][0] = 1;
      f.coeff[dim - 1][1] = -1;
      for (int j = 1; j + 1 < dim; ++j) f.offset.coords[j] = Q(n - 1 - 2 * j, 2);
      break;
    case SphereKind::SpSp1:  // (xi, tau, n-2, ..., 1)(xi - tau)
      params({"xi", "tau"});
      f.coeff[0][0] = 1;
      f.coeff[1][1] = 1;
      for (int j = 2; j < n; ++j) f.offset.coords[j] = n - j;
      f.coeff[n][0] = 1;
      f.coeff[n][1] = -1;
      break;
    case SphereKind::Spin9:  // (xi, tau+5/2, tau+3/2, tau+1/2)
      params({"xi", "tau"});
      f.coeff[0][0] = 1;
      for (int j = 1; j < 4; ++j) {
        f.coeff[j][1] = 1;
        f.offset.coords[j] = Q(7 - 2 * j, 2);
      }
      break;
    case SphereKind::G2:  // (2 xi, 1/2 - xi, -1/2 - xi)
      params({"xi"});
      f.coeff[0][0] = 2;
      f.coeff[1][0] = -1;
      f.coeff[2][0] = -1;
      f.offset.coords[1] = Q(1, 2);
      f.offset.coords[2] = Q(-1, 2);
      break;
    case SphereKind::Spin7p:  // (xi+1, xi, xi-1)
      params({"xi"});
      for (int j = 0; j < 3; ++j) {
        f.coeff[j][0] = 1;
        f.offset.coords[j] = 1 - j;
      }
      break;
  }
  return f;
}

std::optional<std::vector<Rational>> infchar_member(const InfCharFamily& family, const InfChar& ic) {
  if (!(ic.group == family.group)) throw DomainError("family and infinitesimal character belong to different groups");
  // A coordinate carrying exactly one parameter determines that parameter.
  std::vector<std::size_t> pivot(family.parameter_count());
  for (std::size_t j = 0; j < family.parameter_count(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < family.coeff.size() && !found; ++i) {
      bool only_j = family.coeff[i][j] != 0;
      for (std::size_t k = 0; k < family.parameter_count() && only_j; ++k)
        if (k != j && family.coeff[i][k] != 0) only_j = false;
      if (only_j) {
        pivot[j] = i;
        found = true;
      }
    }
    if (!found) throw std::logic_error("family template has no pivot coordinate");
  }
  // The values a coordinate takes over the Weyl orbit: the coordinates of its
  // segment, with signs unless the segment is of type A.
  const RootDatum& rd = root_datum(family.group);
  const Weight& w = ic.representative;
  std::vector<std::set<Rational>> values(w.size());
  std::optional<std::vector<Weight>> orbit;
  for (const Segment& seg : rd.segments) {
    std::set<Rational> v;
    if (seg.type == RootType::G2 || seg.type == RootType::Torus) {
      if (!orbit) orbit = weyl_orbit(family.group, w);
      for (int i = seg.offset; i < seg.offset + seg.size; ++i) {
        std::set<Rational> vi;
        for (const Weight& o : *orbit) vi.insert(o[i]);
        values[i] = vi;
      }
      continue;
    }
    for (int i = seg.offset; i < seg.offset + seg.size; ++i) {
      v.insert(w[i]);
      if (seg.type != RootType::A) v.insert(Rational(-w[i]));
    }
    for (int i = seg.offset; i < seg.offset + seg.size; ++i) values[i] = v;
  }
  std::vector<std::vector<Rational>> candidates(family.parameter_count());
  for (std::size_t j = 0; j < candidates.size(); ++j)
    for (const Rational& v : values[pivot[j]])
      candidates[j].push_back((v - family.offset[pivot[j]]) / family.coeff[pivot[j]][j]);
  std::optional<std::vector<Rational>> best;
  std::vector<std::size_t> idx(candidates.size(), 0);
  for (const auto& c : candidates)
    if (c.empty()) return best;
  while (true) {
    std::vector<Rational> p(candidates.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = candidates[j][idx[j]];
    if ((!best || *best < p) && weyl_equivalent(family.group, family.at(p), w)) best = p;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == candidates[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return best;
}

}  // namespace sphspec
