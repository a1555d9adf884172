#include "sphspec/hyperboloid.hpp"

#include <algorithm>
#include <sstream>

#include "sphspec/infchar_family.hpp"
#include "sphspec/sphere.hpp"

namespace sphspec {

namespace {

using K = KType;

IrrepLabel o_label(int n, std::int64_t a) { return {"O", n, {a}}; }
IrrepLabel u_label(int n, std::int64_t b, std::int64_t c) { return {"U", n, {b, c}}; }
IrrepLabel sp_label(int n, std::int64_t d, std::int64_t e) { return {"Sp", n, {d, e}}; }
IrrepLabel sp1_label(std::int64_t f) { return {"Sp", 1, {f}}; }
IrrepLabel long_label(std::int64_t d) { return {"SU(2)_long", 0, {d}}; }
IrrepLabel short_label(std::int64_t d) { return {"SU(2)_short", 0, {d}}; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

bool even(std::int64_t v) { return v % 2 == 0; }

std::string xi(const std::string& sub) { return "xi_{" + sub + "}"; }

std::string render(const std::vector<CharacterFactor>& f, bool sp) {
  auto one = [](const CharacterFactor& c) {
    if (c.symbol == "1") return std::string("1");
    std::string v = std::to_string(c.value);
    return c.symbol == "det" ? "det^{" + v + "}" : xi(v);
  };
  if (!sp) return one(f[0]) + " (x) " + one(f[1]) + " (x) " + one(f[2]);
  return "[" + one(f[0]) + " (x) " + one(f[1]) + " (x) " + one(f[2]) + "] (x) " + one(f[3]);
}

ParabolicData u_parabolic(int sign, const DiscreteSeriesParam& d) {
  const int p = d.realization.p, q = d.realization.q, n = p + q;
  const std::int64_t x = d.x, y = d.y;
  const std::string U11 = "U(" + std::to_string(p - 1) + "," + std::to_string(q - 1) + ")";
  ParabolicData out;
  if (sign > 0) {
    out.name = "q_+";
    out.levi_template = "U(1)_p x U(1)_q x U(p-1,q-1)";
    out.levi = "U(1)_p x U(1)_q x " + U11;
    out.lambda_template = "xi_x (x) xi_{-(y+n-2)} (x) det^1";
    out.factors = {{"xi", x}, {"xi", -(y + n - 2)}, {"det", 1}};
  } else if (sign == 0) {
    out.name = "q_0";
    out.levi_template = "U(1)_p x U(p-2,q) x U(1)_p";
    out.levi = "U(1)_p x U(" + std::to_string(p - 2) + "," + std::to_string(q) + ") x U(1)_p";
    out.lambda_template = "xi_x (x) 1 (x) xi_{-y}";
    out.factors = {{"xi", x}, {"1", 0}, {"xi", -y}};
  } else {
    out.name = "q_-";
    out.levi_template = "U(p-1,q-1) x U(1)_q x U(1)_p";
    out.levi = U11 + " x U(1)_q x U(1)_p";
    out.lambda_template = "det^{-1} (x) xi_{x+n-2} (x) xi_{-y}";
    out.factors = {{"det", -1}, {"xi", x + n - 2}, {"xi", -y}};
  }
  out.lambda = render(out.factors, false);
  return out;
}

ParabolicData sp_parabolic(int sign, const DiscreteSeriesParam& d) {
  const int p = d.realization.p, q = d.realization.q, n = p + q;
  const std::int64_t x = d.x, y = d.y;
  ParabolicData out;
  if (sign > 0) {
    out.name = "q_+";
    out.levi_template = "[U(1)_p x U(1)_q x Sp(p-1,q-1)] x U(1)";
    out.levi = "[U(1)_p x U(1)_q x Sp(" + std::to_string(p - 1) + "," + std::to_string(q - 1) + ")] x U(1)";
    out.lambda_template = "[xi_x (x) xi_{-(y+2n-2)} (x) 1] (x) xi_{x-y}";
    out.factors = {{"xi", x}, {"xi", -(y + 2 * n - 2)}, {"1", 0}, {"xi", x - y}};
  } else {
    out.name = "q_0";
    out.levi_template = "[U(1)_p x U(1)_p x Sp(p-2,q)] x U(1)";
    out.levi = "[U(1)_p x U(1)_p x Sp(" + std::to_string(p - 2) + "," + std::to_string(q) + ")] x U(1)";
    out.lambda_template = "[xi_x (x) xi_y (x) 1] (x) xi_{x-y}";
    out.factors = {{"xi", x}, {"xi", y}, {"1", 0}, {"xi", x - y}};
  }
  out.lambda = render(out.factors, true);
  return out;
}

void add(std::map<K, std::int64_t>& m, K k, std::int64_t v = 1) { m[std::move(k)] += v; }

// Labels (b,c) in the closed-form branching of pi^{O(2n)}_a to U(n).
std::vector<std::pair<std::int64_t, std::int64_t>> u_pieces(int n, std::int64_t a) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const SphereRealization r{SphereKind::U, n};
  for (const auto& [hw, m] : branch_rule(r, a).constituents)
    out.emplace_back(to_int64(hw[0]), -to_int64(hw[hw.size() - 1]));
  return out;
}

// Labels (d,e) in the closed-form branching of pi^{O(4n)}_a to Sp(n)xSp(1).
std::vector<std::pair<std::int64_t, std::int64_t>> sp_pieces(int n, std::int64_t a) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const SphereRealization r{SphereKind::SpSp1, n};
  for (const auto& [hw, m] : branch_rule(r, a).constituents) out.emplace_back(to_int64(hw[0]), to_int64(hw[1]));
  return out;
}

std::int64_t first_sum(const K& k) { return k.front().params[0] + k.front().params[1]; }

}  // namespace

void validate(const HypRealization& r) {
  switch (r.kind) {
    case HypKind::O:
      if (r.p < 2 || r.q < 1) throw DomainError("O(p,q) hyperboloids need p >= 2 and q >= 1");
      return;
    case HypKind::U:
    case HypKind::Sp:
      if (r.p < 2 || r.q < 2) throw DomainError("U and Sp hyperboloids need p, q >= 2");
      return;
    case HypKind::GLnR:
      if (r.p < 2) throw DomainError("GL(n,R) hyperboloid needs n >= 2");
      return;
    default: return;
  }
}

std::string to_string(const HypRealization& r) {
  const std::string pq = "(" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
  switch (r.kind) {
    case HypKind::O: return "O" + pq + "/O(" + std::to_string(r.p - 1) + "," + std::to_string(r.q) + ")";
    case HypKind::U: return "U" + pq + "/U(" + std::to_string(r.p - 1) + "," + std::to_string(r.q) + ")";
    case HypKind::Sp:
      return "Sp" + pq + "xSp(1)/Sp(" + std::to_string(r.p - 1) + "," + std::to_string(r.q) + ")xSp(1)";
    case HypKind::Spin81: return "Spin(8,1)/Spin(7)'";
    case HypKind::G2s43: return "G2s/SL(3,R)";
    case HypKind::G2s34: return "G2s/SU(2,1)";
    case HypKind::Spin34p: return "Spin(3,4)'/G2s";
    case HypKind::GLnR:
      return "GL(" + std::to_string(r.p) + ",R)/GL(" + std::to_string(r.p - 1) + ",R)";
  }
  return "?";
}

SphereRealization compact_form(const HypRealization& r) {
  validate(r);
  switch (r.kind) {
    case HypKind::O: return {SphereKind::O, r.p + r.q};
    case HypKind::U: return {SphereKind::U, r.p + r.q};
    case HypKind::Sp: return {SphereKind::SpSp1, r.p + r.q};
    case HypKind::Spin81: return {SphereKind::Spin9, 0};
    case HypKind::G2s43:
    case HypKind::G2s34: return {SphereKind::G2, 0};
    case HypKind::Spin34p: return {SphereKind::Spin7p, 0};
    case HypKind::GLnR: return {SphereKind::U, r.p};
  }
  throw DomainError("unknown hyperboloid");
}

bool has_discrete_series(const HypRealization& r) {
  validate(r);
  return r.kind != HypKind::GLnR;
}

std::string to_string(const IrrepLabel& l) {
  std::string g = l.n > 0 ? l.family + "(" + std::to_string(l.n) + ")" : l.family;
  std::string out = g + "_{";
  for (std::size_t i = 0; i < l.params.size(); ++i) out += (i ? "," : "") + std::to_string(l.params[i]);
  return out + "}";
}

std::int64_t dim(const IrrepLabel& l) {
  if (l.family == "O") return one_row_dim(l.n, static_cast<int>(l.params[0]));
  if (l.family == "U") {
    std::vector<Rational> c(l.n, 0);
    c[0] = l.params[0];
    c[l.n - 1] -= l.params[1];
    return weyl_dim(U(l.n), make_weight(U(l.n), c));
  }
  if (l.family == "Sp") {
    if (l.n == 1) return l.params[0] + 1;
    std::vector<Rational> c(l.n, 0);
    c[0] = l.params[0];
    c[1] = l.params[1];
    return weyl_dim(Sp(l.n), make_weight(Sp(l.n), c));
  }
  return l.params[0] + 1;
}

std::string to_string(RangeKind k) {
  switch (k) {
    case RangeKind::q_plus: return "q_plus";
    case RangeKind::q_zero: return "q_zero";
    case RangeKind::q_minus: return "q_minus";
    case RangeKind::edge_plus_zero: return "edge_plus_zero";
    case RangeKind::edge_zero_minus: return "edge_zero_minus";
    case RangeKind::unclassified: return "unclassified";
  }
  return "?";
}

std::optional<Weight> spin81_hc_parameter(std::int64_t x, std::int64_t y, int sign, Spin81Case* which) {
  if (2 * x + y + 7 <= 0) throw DomainError("Spin(8,1) parameters need 2x + y + 7 > 0");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const GroupLabel g = group(Family::Spin9);
  Weight w;
  w.lattice = root_datum(g).lattice;
  const Rational big = Q(2 * x + y + 7, 2);
  if (x >= 0) {
    if (which) *which = Spin81Case::first;
    w.coords = {big, Q(y + 5, 2), Q(y + 3, 2), Q(y + 1, 2) * sign};
    return w;
  }
  if (x > -4) {
    if (which) *which = Spin81Case::zero;
    return std::nullopt;
  }
  if (which) *which = Spin81Case::third;
  w.coords = {Q(y + 5, 2), Q(y + 3, 2), Q(y + 1, 2), big * sign};
  return w;
}

DiscreteSeriesParam make_param(const HypRealization& r, std::int64_t ell, std::int64_t x, std::int64_t y) {
  validate(r);
  DiscreteSeriesParam d;
  d.realization = r;
  d.ell = ell;
  d.constituents = {"irreducible"};
  const int n = r.p + r.q;
  switch (r.kind) {
    case HypKind::O:
      if (2 * ell <= 2 - n) throw DomainError("O(p,q) discrete series need l > (2-p-q)/2");
      break;
    case HypKind::U:
      if (x + y != ell) throw DomainError("U(p,q) parameters need x + y = l");
      if (ell <= -(n - 1)) throw DomainError("U(p,q) discrete series need l > -(n-1)");
      d.x = x;
      d.y = y;
      d.range = classify_range(d);
      break;
    case HypKind::Sp:
      if (x + y != ell) throw DomainError("Sp(p,q) parameters need x + y = l");
      if (x < y) throw DomainError("Sp(p,q) parameters need x >= y");
      if (ell <= -2 * n + 1) throw DomainError("Sp(p,q) discrete series need l > -2n+1");
      d.x = x;
      d.y = y;
      d.range = classify_range(d);
      break;
    case HypKind::Spin81: {
      if (y < 1 || x > -4 || 2 * x <= -(y + 7))
        throw DomainError("Spin(8,1) discrete series need y >= 1 and -4 >= x > -(y+7)/2");
      d.x = x;
      d.y = y;
      d.ell = 2 * x + y;
      Spin81Data s;
      s.hc_parameter = *spin81_hc_parameter(x, y, 1, &s.hc_case);
      const Rational h = Q(y, 2);
      s.lowest_k_type = make_weight(group(Family::Spin8), {h, h, h, h + x + 4});
      d.spin81 = s;
      break;
    }
    case HypKind::G2s43:
    case HypKind::G2s34:
      if (2 * ell + 5 <= 0) throw DomainError("split G2 discrete series need l + 5/2 > 0");
      d.series = r.kind == HypKind::G2s43 ? 1 : 2;
      if (ell == -2 && d.series == 1) {
        d.reducible = true;
        d.constituents = {"J_-(H_2;(2,0))", "J(H_2;(1,1))"};
      } else if (ell == -2) {
        d.constituents = {"J(H_1;(1,1))"};
      }
      break;
    case HypKind::Spin34p:
      if (ell <= -3) throw DomainError("Spin(3,4)' discrete series need l > -3");
      d.restriction_identity = true;
      break;
    case HypKind::GLnR: throw DomainError("GL(n,R)/GL(n-1,R) has no discrete series");
  }
  return d;
}

std::vector<DiscreteSeriesParam> ds_params(const HypRealization& r, std::int64_t bound) {
  validate(r);
  if (bound < 0) throw DomainError("bound must be non-negative");
  std::vector<DiscreteSeriesParam> out;
  const int n = r.p + r.q;
  switch (r.kind) {
    case HypKind::O:
      for (std::int64_t l = -bound; l <= bound; ++l)
        if (2 * l > 2 - n) out.push_back(make_param(r, l));
      break;
    case HypKind::U:
      for (std::int64_t x = -bound; x <= bound; ++x)
        for (std::int64_t y = -bound; y <= bound; ++y)
          if (x + y > -(n - 1)) out.push_back(make_param(r, x + y, x, y));
      break;
    case HypKind::Sp:
      for (std::int64_t x = -bound; x <= bound; ++x)
        for (std::int64_t y = -bound; y <= x; ++y)
          if (x + y > -2 * n + 1) out.push_back(make_param(r, x + y, x, y));
      break;
    case HypKind::Spin81:
      // ceil((y+7)/2) - 4 values of x for each y >= 2, none for y = 1.
      for (std::int64_t y = 1; y <= bound; ++y)
        for (std::int64_t x = -4; 2 * x > -(y + 7); --x) out.push_back(make_param(r, 2 * x + y, x, y));
      break;
    case HypKind::G2s43:
    case HypKind::G2s34:
      for (std::int64_t l = -2; l <= bound; ++l) out.push_back(make_param(r, l));
      break;
    case HypKind::Spin34p:
      for (std::int64_t l = -2; l <= bound; ++l) out.push_back(make_param(r, l));
      break;
    case HypKind::GLnR: break;
  }
  return out;
}

InfChar ds_infchar(const DiscreteSeriesParam& d) {
  const HypRealization& r = d.realization;
  const GroupLabel g = group_of(compact_form(r));
  const RootDatum& rd = root_datum(g);
  Weight w = rd.rho;
  switch (r.kind) {
    case HypKind::O:
      w.coords[0] += d.ell;
      break;
    case HypKind::U:
      w.coords.front() += d.x;
      w.coords.back() -= d.y;
      break;
    case HypKind::Sp:
      w.coords[0] += d.x;
      w.coords[1] += d.y;
      w.coords.back() += d.x - d.y;
      break;
    case HypKind::Spin81: w = d.spin81->hc_parameter; break;
    case HypKind::G2s43:
    case HypKind::G2s34:
      w.coords = {Q(2 * d.ell + 5, 3), Q(-(d.ell + 1), 3), Q(-(d.ell + 4), 3)};
      break;
    case HypKind::Spin34p:
      w.coords = {Q(d.ell + 5, 2), Q(d.ell + 3, 2), Q(d.ell + 1, 2)};
      break;
    case HypKind::GLnR: throw DomainError("GL(n,R)/GL(n-1,R) has no discrete series");
  }
  return InfChar{w, g};
}

RangeClass classify_range(const DiscreteSeriesParam& d) {
  const HypRealization& r = d.realization;
  const int n = r.p + r.q;
  const std::int64_t x = d.x, l = d.ell;
  RangeClass c;
  if (r.kind == HypKind::U) {
    // Compare 2x against 2l + (n-1) and -(n-1).
    const std::int64_t top = 2 * l + (n - 1), bottom = -(n - 1);
    if (2 * x > top) {
      c.kind = RangeKind::q_plus;
      c.parabolics = {u_parabolic(1, d)};
    } else if (2 * x == top) {
      c.kind = RangeKind::edge_plus_zero;
      c.parabolics = {u_parabolic(1, d), u_parabolic(0, d)};
    } else if (2 * x > bottom) {
      c.kind = RangeKind::q_zero;
      c.parabolics = {u_parabolic(0, d)};
    } else if (2 * x == bottom) {
      c.kind = RangeKind::edge_zero_minus;
      c.parabolics = {u_parabolic(0, d), u_parabolic(-1, d)};
    } else {
      c.kind = RangeKind::q_minus;
      c.parabolics = {u_parabolic(-1, d)};
    }
    return c;
  }
  if (r.kind == HypKind::Sp) {
    if (x > l + (n - 1)) {
      c.kind = RangeKind::q_plus;
      c.parabolics = {sp_parabolic(1, d)};
    } else if (2 * x <= l) {
      c.kind = RangeKind::unclassified;
    } else if (x == l + (n - 1)) {
      c.kind = RangeKind::edge_plus_zero;
      c.parabolics = {sp_parabolic(1, d), sp_parabolic(0, d)};
    } else {
      c.kind = RangeKind::q_zero;
      c.parabolics = {sp_parabolic(0, d)};
    }
    return c;
  }
  throw DomainError("classify_range: only U and Sp hyperboloids have range classes");
}

KTypeSum ds_ktypes(const DiscreteSeriesParam& d, std::int64_t cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  const HypRealization& r = d.realization;
  const int p = r.p, q = r.q;
  KTypeSum out;
  out.completeness_bound = cutoff;
  switch (r.kind) {
    case HypKind::O:
      out.height = "m";
      for (std::int64_t m = 0; m <= cutoff; ++m) {
        const std::int64_t a = m + d.ell + q;
        if (a < 0 || one_row_dim(p, static_cast<int>(a)) == 0) continue;
        for (std::int64_t k = 0; 2 * k <= m; ++k)
          if (one_row_dim(q, static_cast<int>(m - 2 * k)) > 0) add(out.entries, {o_label(p, a), o_label(q, m - 2 * k)});
      }
      return out;
    case HypKind::U:
      out.height = "max(r,s)";
      for (std::int64_t rr = 0; rr <= cutoff; ++rr)
        for (std::int64_t s = 0; s <= cutoff; ++s) {
          const std::int64_t b = d.x + q + rr, c = d.y + q + s;
          if (b < 0 || c < 0) continue;
          for (std::int64_t k = 0; k <= std::min(rr, s); ++k)
            add(out.entries, {u_label(p, b, c), u_label(q, s - k, rr - k)});
        }
      return out;
    case HypKind::Sp: {
      out.height = "d+e-(x+y)-4q";
      const std::int64_t f = d.x - d.y;
      for (std::int64_t m = 0; m <= cutoff; ++m) {
        const std::int64_t sum = m + d.ell + 4 * q;
        if (sum < 0) continue;
        for (std::int64_t e = 0; 2 * e <= sum; ++e) {
          const std::int64_t dd = sum - e;
          for (std::int64_t s2 = m; s2 >= 0; s2 -= 2)
            for (std::int64_t e2 = 0; 2 * e2 <= s2; ++e2) {
              const std::int64_t d2 = s2 - e2;
              const std::int64_t u = dd - e, v = d2 - e2;
              if (std::abs(u - v) <= f && f <= u + v && even(u + v - f))
                add(out.entries, {sp_label(p, dd, e), sp_label(q, d2, e2), sp1_label(f)});
            }
        }
      }
      return out;
    }
    case HypKind::G2s43:
      // The long factor carries d, as in the unreduced form of the sum; the
      // index e' printed in the reduced form fails g2s_dimension_check.
      out.height = "d-l-3";
      for (std::int64_t m = 0; m <= cutoff; ++m) {
        const std::int64_t dd = m + d.ell + 3;
        for (std::int64_t e = m; e >= 0; e -= 2)
          for (std::int64_t k = 0; k <= std::min(dd, 2 * e); ++k)
            add(out.entries, {long_label(dd), short_label(dd + 2 * e - 2 * k)});
      }
      return out;
    case HypKind::G2s34: {
      // A K-type (long e', short j) comes from d' <= (j+e')/2; keep those
      // whose every source lies inside the enumerated range.
      out.height = "ceil((long+short)/2)-l-4";
      std::map<K, std::int64_t> all;
      for (std::int64_t m = 0; m <= cutoff; ++m) {
        const std::int64_t d2 = m + d.ell + 4;
        for (std::int64_t e2 = m; e2 >= 0; e2 -= 2)
          for (std::int64_t k = 0; k <= e2; ++k) add(all, {long_label(e2), short_label(2 * d2 + e2 - 2 * k)});
      }
      for (const auto& [kt, mult] : all) {
        const std::int64_t h = ceil_div(kt[0].params[0] + kt[1].params[0], 2) - d.ell - 4;
        if (h <= cutoff) out.entries.emplace(kt, mult);
      }
      return out;
    }
    case HypKind::Spin81:
      throw DomainError("ds_ktypes: only the lowest K-type of Spin(8,1) discrete series is recorded");
    case HypKind::Spin34p: throw DomainError("ds_ktypes: no K-type formula for Spin(3,4)'");
    case HypKind::GLnR: throw DomainError("GL(n,R)/GL(n-1,R) has no discrete series");
  }
  return out;
}

std::vector<Rational> orbit_convert(const DiscreteSeriesParam& d) {
  const int n = d.realization.p + d.realization.q;
  switch (d.realization.kind) {
    case HypKind::O: return {d.ell + Q(n - 2, 2)};
    case HypKind::U: return {d.x + Q(n - 1, 2), d.y + Q(n - 1, 2)};
    case HypKind::Sp: return {Rational(d.x + n), Rational(d.y + n - 1)};
    case HypKind::Spin81: return {Rational(d.x + 2), Rational(d.y + 3)};
    case HypKind::G2s43:
    case HypKind::G2s34: return {d.ell + Q(5, 2)};
    case HypKind::Spin34p: return {Rational(d.ell + 3)};
    case HypKind::GLnR: break;
  }
  throw DomainError("GL(n,R)/GL(n-1,R) has no discrete series");
}

DiscreteSeriesParam from_orbit(const HypRealization& r, const std::vector<Rational>& o) {
  validate(r);
  const int n = r.p + r.q;
  auto integral = [](const Rational& v) {
    if (!is_integer(v)) throw DomainError("orbit parameter " + to_string(v) + " is off the lattice");
    return to_int64(v);
  };
  const std::size_t want = (r.kind == HypKind::U || r.kind == HypKind::Sp || r.kind == HypKind::Spin81) ? 2 : 1;
  if (o.size() != want) throw DomainError("from_orbit: wrong number of orbit parameters");
  switch (r.kind) {
    case HypKind::O: return make_param(r, integral(o[0] - Q(n - 2, 2)));
    case HypKind::U: {
      const std::int64_t x = integral(o[0] - Q(n - 1, 2)), y = integral(o[1] - Q(n - 1, 2));
      return make_param(r, x + y, x, y);
    }
    case HypKind::Sp: {
      const std::int64_t x = integral(o[0] - n), y = integral(o[1] - (n - 1));
      return make_param(r, x + y, x, y);
    }
    case HypKind::Spin81: {
      const std::int64_t x = integral(o[0] - 2), y = integral(o[1] - 3);
      return make_param(r, 2 * x + y, x, y);
    }
    case HypKind::G2s43:
    case HypKind::G2s34: return make_param(r, integral(o[0] - Q(5, 2)));
    case HypKind::Spin34p: return make_param(r, integral(o[0] - 3));
    case HypKind::GLnR: break;
  }
  throw DomainError("GL(n,R)/GL(n-1,R) has no discrete series");
}

ContinuousFamily continuous_params(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("continuous family needs p, q >= 1");
  return ContinuousFamily{{HypKind::O, p, q}, {0, 1}, "i R_{>=0}"};
}

KTypeSum continuous_ktypes(int p, int q, int epsilon, std::int64_t cutoff) {
  if (p < 1 || q < 1) throw DomainError("continuous family needs p, q >= 1");
  if (epsilon != 0 && epsilon != 1) throw DomainError("epsilon must be 0 or 1");
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  KTypeSum out;
  out.completeness_bound = cutoff;
  out.height = "max(m,m')";
  for (std::int64_t m = 0; m <= cutoff; ++m)
    for (std::int64_t m2 = 0; m2 <= cutoff; ++m2) {
      if (!even(m - m2 - epsilon)) continue;
      if (one_row_dim(p, static_cast<int>(m)) == 0 || one_row_dim(q, static_cast<int>(m2)) == 0) continue;
      add(out.entries, {o_label(p, m), o_label(q, m2)});
    }
  return out;
}

ConsistencyReport consistency_check(HypKind family, int p, int q, std::int64_t ell, std::int64_t cutoff, Exec exec) {
  if (family != HypKind::U && family != HypKind::Sp) throw DomainError("consistency_check covers U and Sp only");
  validate(HypRealization{family, p, q});
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  const bool is_u = family == HypKind::U;
  const int n = p + q;
  // Both sides are complete for first-factor parameter sum <= bound.
  const std::int64_t shift = is_u ? 2 * q : 4 * q;
  ConsistencyReport rep;
  rep.bound = ell + shift + cutoff;

  auto o_side = [&] {
    std::map<K, std::int64_t> a;
    for (std::int64_t m = 0; m <= cutoff; ++m) {
      const std::int64_t top = m + ell + shift;
      if (top < 0) continue;
      for (std::int64_t k = 0; 2 * k <= m; ++k) {
        const std::int64_t low = m - 2 * k;
        if (is_u) {
          for (const auto& [b, c] : u_pieces(p, top))
            for (const auto& [b2, c2] : u_pieces(q, low)) add(a, {u_label(p, b, c), u_label(q, b2, c2)});
        } else {
          for (const auto& [d, e] : sp_pieces(p, top))
            for (const auto& [d2, e2] : sp_pieces(q, low)) {
              // Sp(1) x Sp(1) -> Sp(1)_diag by Clebsch-Gordan.
              const std::int64_t u = d - e, v = d2 - e2;
              for (std::int64_t f = std::abs(u - v); f <= u + v; f += 2)
                add(a, {sp_label(p, d, e), sp_label(q, d2, e2), sp1_label(f)});
            }
        }
      }
    }
    return a;
  };
  auto family_side = [&] {
    std::map<K, std::int64_t> b;
    const HypRealization r{family, p, q};
    const bool valid = is_u ? ell > -(n - 1) : ell > -2 * n + 1;
    if (!valid) return b;
    std::int64_t lo, hi;
    if (is_u) {
      lo = -q - cutoff;
      hi = ell + q + cutoff;
    } else {
      lo = ceil_div(ell, 2);
      hi = floor_div(ell + rep.bound + cutoff, 2);
    }
    for (std::int64_t x = lo; x <= hi; ++x) {
      const auto kt = ds_ktypes(make_param(r, ell, x, ell - x), cutoff);
      for (const auto& [k, m] : kt.entries) add(b, k, m);
    }
    return b;
  };

  std::map<K, std::int64_t> a, b;
  if (exec == Exec::parallel) {
#pragma omp parallel sections
    {
#pragma omp section
      a = o_side();
#pragma omp section
      b = family_side();
    }
  } else {
    a = o_side();
    b = family_side();
  }
  for (const auto& [k, m] : a)
    if (first_sum(k) <= rep.bound) rep.o_side.emplace(k, m);
  for (const auto& [k, m] : b)
    if (first_sum(k) <= rep.bound) rep.family_side.emplace(k, m);
  rep.pass = rep.o_side == rep.family_side;
  if (!rep.pass) {
    auto describe = [](const K& k) {
      std::string s;
      for (const auto& l : k) s += (s.empty() ? "" : " (x) ") + to_string(l);
      return s;
    };
    for (const auto& [k, m] : rep.o_side) {
      auto it = rep.family_side.find(k);
      const std::int64_t other = it == rep.family_side.end() ? 0 : it->second;
      if (other != m) {
        rep.first_discrepancy = describe(k) + ": O side " + std::to_string(m) + ", family side " + std::to_string(other);
        break;
      }
    }
    if (rep.first_discrepancy.empty())
      for (const auto& [k, m] : rep.family_side)
        if (!rep.o_side.count(k)) {
          rep.first_discrepancy = describe(k) + ": O side 0, family side " + std::to_string(m);
          break;
        }
  }
  return rep;
}

G2sDimensionReport g2s_dimension_check(int series, std::int64_t ell, std::int64_t cutoff) {
  if (series != 1 && series != 2) throw DomainError("split G2 series is 1 or 2");
  if (2 * ell + 5 <= 0) throw DomainError("split G2 discrete series need l + 5/2 > 0");
  G2sDimensionReport rep;
  auto o4 = [](std::int64_t a) { return (a + 1) * (a + 1); };
  auto o3 = [](std::int64_t a) { return 2 * a + 1; };
  for (std::int64_t m = 0; m <= cutoff; ++m)
    for (std::int64_t e = m; e >= 0; e -= 2) {
      std::int64_t corrected = 0, literal = 0, expected = 0, literal_expected = 0;
      if (series == 1) {
        const std::int64_t d = m + ell + 3;
        expected = literal_expected = o4(d) * o3(e);
        for (std::int64_t k = 0; k <= std::min(d, 2 * e); ++k) {
          corrected += (d + 1) * (d + 2 * e - 2 * k + 1);
          literal += (e + 1) * (d + 2 * e - 2 * k + 1);  // gamma^long_{e'} read as gamma^long_e
        }
      } else {
        const std::int64_t d2 = m + ell + 4;
        expected = o3(d2) * o4(e);
        literal_expected = o3(d2) * o3(e);  // pi^{O(3)}_{e'} as printed
        for (std::int64_t k = 0; k <= e; ++k) corrected += (e + 1) * (2 * d2 + e - 2 * k + 1);
        literal = corrected;
      }
      if (corrected != expected) rep.corrected_ok = false;
      if (literal != literal_expected && rep.literal_ok) {
        rep.literal_ok = false;
        std::ostringstream s;
        s << "m=" << m << " e=" << e << ": K-side " << literal << ", O-side " << literal_expected;
        rep.first_literal_mismatch = s.str();
      }
    }
  return rep;
}

}  // namespace sphspec
