#include "sphspec/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "sphspec/harmonic.hpp"
#include "sphspec/hyperboloid.hpp"
#include "sphspec/infchar_family.hpp"
#include "sphspec/sphere.hpp"

namespace sphspec {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r) {}

  void eq(std::string name, const std::string& expected, const std::string& actual) {
    r_.assertions.push_back({std::move(name), expected, actual, expected == actual});
  }
  void holds(std::string name, bool ok, const std::string& detail = "") {
    r_.assertions.push_back({std::move(name), "true", ok ? "true" : "false" + (detail.empty() ? "" : ": " + detail), ok});
  }

 private:
  VerifyReport& r_;
};

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const Rational& v) { return to_string(v); }

std::string params_str(const Params& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

Rational factorial(int k) {
  Rational f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// Closed-form dimensions and Casimir eigenvalues, written out independently
// of the root-system code.
Rational o_dim(int n, std::int64_t a) {
  Rational num = Rational(a) + Q(n, 2) - 1;
  for (int j = 1; j <= n - 3; ++j) num *= Rational(a + j);
  return num / ((Q(n, 2) - 1) * factorial(n - 3));
}

Rational u_dim(int n, std::int64_t b, std::int64_t c) {
  Rational num = b + c + n - 1;
  for (int j = 1; j <= n - 2; ++j) num *= Rational((b + j) * (c + j));
  return num / ((n - 1) * factorial(n - 2) * factorial(n - 2));
}

Rational sp_dim(int n, std::int64_t d, std::int64_t e) {
  Rational num = Rational((d + e + 2 * n - 1) * (d - e + 1) * (d - e + 1));
  for (int j = 1; j <= 2 * n - 3; ++j) num *= Rational((d + j + 1) * (e + j));
  return num / ((2 * n - 1) * (2 * n - 2) * factorial(2 * n - 3) * factorial(2 * n - 3));
}

Rational spin9_dim(std::int64_t x, std::int64_t y) {
  Rational num = 2 * x + y + 7;
  for (int j = 1; j <= 3; ++j) num *= Rational((x + j) * (y + j + 1) * (y + 2 * j - 1) * (x + y + j + 3));
  return num / (factorial(7) * factorial(6) * Q(1, 2));
}

Rational g2_dim(std::int64_t a) {
  Rational num = 2 * a + 5;
  for (int j = 1; j <= 4; ++j) num *= a + j;
  return num / factorial(5);
}

Rational spin7p_dim(std::int64_t a) {
  Rational num = a + 3;
  for (int j = 1; j <= 5; ++j) num *= a + j;
  return num / (3 * factorial(5));
}

Rational closed_dim(const SphereRealization& r, const Params& p) {
  switch (r.kind) {
    case SphereKind::O: return o_dim(r.n, p[0]);
    case SphereKind::U: return u_dim(r.n, p[0], p[1]);
    case SphereKind::SpSp1: return sp_dim(r.n, p[0], p[1]);
    case SphereKind::Spin9: return spin9_dim(p[0], p[1]);
    case SphereKind::G2: return g2_dim(p[0]);
    case SphereKind::Spin7p: return spin7p_dim(p[0]);
  }
  return 0;
}

Rational closed_casimir(const SphereRealization& r, const Params& p) {
  const std::int64_t n = r.n;
  switch (r.kind) {
    case SphereKind::O: return p[0] * p[0] + (n - 2) * p[0];
    case SphereKind::U: return p[0] * p[0] + p[1] * p[1] + (n - 1) * (p[0] + p[1]);
    case SphereKind::SpSp1: {
      const std::int64_t d = p[0], e = p[1], f = d - e;
      return d * d + e * e + 2 * n * d + 2 * (n - 1) * e + f * f + 2 * f;
    }
    case SphereKind::Spin9: {
      const std::int64_t x = p[0], y = p[1];
      return x * x + y * y + x * y + 8 * y + 7 * x;
    }
    case SphereKind::G2: return Q(2 * (p[0] * p[0] + 5 * p[0]), 3);
    case SphereKind::Spin7p: return Q(3 * (p[0] * p[0] + 6 * p[0]), 4);
  }
  return 0;
}

// Every parameter vector with entries in [0, top] satisfying the family
// constraints.
std::vector<Params> params_box(const SphereRealization& r, std::int64_t top) {
  std::vector<Params> out;
  if (parameter_count(r) == 1) {
    for (std::int64_t a = 0; a <= top; ++a) out.push_back({a});
    return out;
  }
  for (std::int64_t u = 0; u <= top; ++u)
    for (std::int64_t v = 0; v <= top; ++v)
      if (r.kind != SphereKind::SpSp1 || u >= v) out.push_back({u, v});
  return out;
}

std::vector<SphereRealization> closed_form_realizations() {
  std::vector<SphereRealization> out;
  for (int n = 3; n <= 10; ++n) out.push_back({SphereKind::O, n});
  for (int n = 2; n <= 6; ++n) out.push_back({SphereKind::U, n});
  for (int n = 2; n <= 4; ++n) out.push_back({SphereKind::SpSp1, n});
  out.push_back({SphereKind::Spin9, 0});
  out.push_back({SphereKind::G2, 0});
  out.push_back({SphereKind::Spin7p, 0});
  return out;
}

std::vector<SphereRealization> gelfand_realizations() {
  std::vector<SphereRealization> out;
  for (int n = 3; n <= 8; ++n) out.push_back({SphereKind::O, n});
  for (int n = 2; n <= 4; ++n) out.push_back({SphereKind::U, n});
  for (int n = 2; n <= 3; ++n) out.push_back({SphereKind::SpSp1, n});
  out.push_back({SphereKind::Spin9, 0});
  out.push_back({SphereKind::G2, 0});
  out.push_back({SphereKind::Spin7p, 0});
  return out;
}

Weight zero_weight(const GroupLabel& g) {
  return make_weight(g, std::vector<Rational>(root_datum(g).coordinate_count, 0));
}

Weight one_row(int N, std::int64_t a) {
  std::vector<Rational> c(N / 2, 0);
  c[0] = a;
  return make_weight(O(N), c);
}

void table1(Recorder& rec) {
  const SphereRealization u2{SphereKind::U, 2}, o4{SphereKind::O, 4};
  struct URow { std::int64_t b, c, casimir, compound, dim; };
  const std::vector<URow> rows = {{0, 0, 0, 0, 1}, {0, 1, 2, 3, 2},  {1, 0, 2, 3, 2},  {0, 2, 6, 8, 3},
                                  {1, 1, 4, 8, 3}, {2, 0, 6, 8, 3},  {0, 3, 12, 15, 4}, {1, 2, 8, 15, 4},
                                  {2, 1, 8, 15, 4}, {3, 0, 12, 15, 4}};
  auto fmt = [](const std::string& cas, const std::string& comp, const std::string& dim) {
    return "casimir=" + cas + " compound=" + comp + " dim=" + dim;
  };
  for (const URow& w : rows) {
    const auto e = spectrum_entry(u2, {w.b, w.c});
    rec.eq("U(2) b=" + str(w.b) + " c=" + str(w.c), fmt(str(w.casimir), str(w.compound), str(w.dim)),
           fmt(str(e.casimir), str(compound_casimir(u2, e)), str(e.dim)));
  }
  const std::vector<std::array<std::int64_t, 3>> orows = {{0, 0, 1}, {1, 3, 4}, {2, 8, 9}, {3, 15, 16}};
  for (const auto& [a, cas, dim] : orows) {
    const auto e = spectrum_entry(o4, {a});
    rec.eq("O(4) a=" + str(a), "casimir=" + str(cas) + " dim=" + str(dim),
           "casimir=" + str(e.casimir) + " dim=" + str(e.dim));
  }
  std::string agg;
  for (const auto& [ev, m] : laplace_spectrum(o4, 3)) agg += "(" + str(ev) + "," + str(m) + ")";
  rec.eq("O(4) aggregated spectrum", "(0,1)(3,4)(8,9)(15,16)", agg);
  // Each block of U(2) rows with b+c=a carries the O(4) eigenvalue as its
  // compound Casimir and the O(4) dimension as its total dimension.
  std::string expected, actual;
  for (std::int64_t a = 0; a <= 3; ++a) {
    std::set<std::string> comp;
    std::int64_t total = 0;
    for (const URow& w : rows)
      if (w.b + w.c == a) {
        const auto e = spectrum_entry(u2, {w.b, w.c});
        comp.insert(str(compound_casimir(u2, e)));
        total += e.dim;
      }
    const auto o = spectrum_entry(o4, {a});
    expected += "[" + str(o.casimir) + "," + str(o.dim) + "]";
    actual += "[" + (comp.size() == 1 ? *comp.begin() : "mixed") + "," + str(total) + "]";
  }
  rec.eq("U(2) blocks match O(4) rows", expected, actual);
}

void dims(Recorder& rec) {
  for (const auto& r : closed_form_realizations())
    for (const auto& p : params_box(r, 10)) {
      const auto e = spectrum_entry(r, p);
      rec.eq("dim " + to_string(r) + " " + params_str(p), str(closed_dim(r, p)), str(e.dim));
    }
}

void casimirs(Recorder& rec) {
  for (const auto& r : closed_form_realizations()) {
    const std::int64_t N = ambient_dimension(r);
    for (const auto& p : params_box(r, 10)) {
      const auto e = spectrum_entry(r, p);
      const std::string tag = to_string(r) + " " + params_str(p);
      rec.eq("casimir " + tag, str(closed_casimir(r, p)), str(e.casimir));
      const std::int64_t a = level(r, p);
      rec.eq("compound casimir " + tag, str(a * a + (N - 2) * a), str(compound_casimir(r, e)));
    }
  }
}

void branching(Recorder& rec) {
  const std::vector<std::pair<SphereRealization, int>> matrix = {
      {{SphereKind::U, 2}, 5}, {{SphereKind::SpSp1, 2}, 3}, {{SphereKind::G2, 0}, 4},
      {{SphereKind::Spin7p, 0}, 4}, {{SphereKind::Spin9, 0}, 2}};
  for (const auto& [r, top] : matrix) {
    const auto emb = ambient_embedding(r);
    for (int a = 0; a <= top; ++a)
      rec.eq(to_string(emb.supergroup) + " -> " + to_string(emb.subgroup) + " a=" + str(a),
             to_string(branch_rule(r, a)), to_string(branch_oracle(emb, one_row(ambient_dimension(r), a))));
  }
}

// The first `count` dominant weights outside the spherical family, in order
// of coordinate size.
std::vector<Weight> non_family_sample(const SphereRealization& r, std::size_t count) {
  const GroupLabel g = group_of(r);
  const int dim = root_datum(g).coordinate_count;
  std::set<Weight> family;
  for (const auto& e : spectrum(r, 8)) family.insert(e.highest_weight);
  const Rational step = g.family == Family::G2 ? Q(1, 3) : Q(1, 2);
  const int k = g.family == Family::G2 ? 9 : 6;
  std::vector<std::pair<Rational, Weight>> found;
  std::vector<int> idx(dim, -k);
  while (true) {
    std::vector<Rational> c(dim);
    Rational size = 0;
    for (int i = 0; i < dim; ++i) {
      c[i] = step * idx[i];
      size += abs(c[i]);
    }
    const Weight w = make_weight(g, c);
    if (in_lattice(g, w) && is_dominant(g, w) && !family.count(w)) found.emplace_back(size, w);
    int i = 0;
    while (i < dim && ++idx[i] > k) idx[i++] = -k;
    if (i == dim) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  std::vector<Weight> out;
  for (std::size_t i = 0; i < found.size() && out.size() < count; ++i) out.push_back(found[i].second);
  return out;
}

void gelfand(Recorder& rec) {
  for (const auto& r : gelfand_realizations()) {
    const auto emb = isotropy_embedding(r);
    const Weight zero = zero_weight(emb.subgroup);
    for (const auto& p : params_box(r, 3))
      rec.eq("fixed vectors " + to_string(r) + " " + params_str(p), "1",
             str(branch_oracle(emb, spherical_highest_weight(r, p)).multiplicity(zero)));
    // so(3) irreps are all one-row, so O(3)/O(2) has nothing outside the family.
    if (r.kind == SphereKind::O && r.n == 3) continue;
    const auto sample = non_family_sample(r, 5);
    rec.eq("non-family sample size " + to_string(r), "5", str(static_cast<std::int64_t>(sample.size())));
    for (const auto& w : sample)
      rec.eq("fixed vectors " + to_string(r) + " non-family " + to_string(w), "0",
             str(branch_oracle(emb, w).multiplicity(zero)));
  }
}

void oracle(Recorder& rec) {
  for (int n = 3; n <= 7; ++n)
    for (int a = 0; a <= 4; ++a) {
      const std::string tag = "n=" + str(n) + " a=" + str(a);
      rec.eq("harmonic dim " + tag, str(o_dim(n, a)), str(harmonic::harmonic_dim(n, a)));
      rec.eq("harmonic casimir " + tag, str(a * a + (n - 2) * a), str(harmonic::casimir_scalar(n, a)));
    }
  for (int n : {4, 6})
    for (int a = 0; a <= 3; ++a) {
      const auto torus = harmonic::torus_weights(n, a);
      const auto fr = weight_multiplicities(O(n), one_row(n, a));
      rec.holds("torus weights n=" + str(n) + " a=" + str(a), torus == fr,
                "mass " + str(torus.total_mass()) + " vs " + str(fr.total_mass()));
    }
}

std::vector<HypRealization> ds_realizations() {
  return {{HypKind::O, 2, 1},      {HypKind::O, 2, 2},      {HypKind::O, 3, 2},   {HypKind::O, 2, 3},
          {HypKind::O, 4, 3},      {HypKind::O, 4, 4},      {HypKind::U, 2, 2},   {HypKind::U, 3, 2},
          {HypKind::U, 2, 3},      {HypKind::Sp, 2, 2},     {HypKind::Sp, 2, 3},  {HypKind::Spin81, 0, 0},
          {HypKind::G2s43, 0, 0},  {HypKind::G2s34, 0, 0},  {HypKind::Spin34p, 0, 0}};
}

void infchar(Recorder& rec) {
  for (const auto& r : gelfand_realizations()) {
    const auto fam = infchar_family(r);
    const auto box = params_box(r, 6);
    for (const auto& p : box)
      rec.holds("member " + to_string(r) + " " + params_str(p),
                infchar_member(fam, spectrum_entry(r, p).inf_char).has_value());
    // For O(3) and U(2) every coordinate carries a free parameter, so the
    // family is the whole space and nothing can be perturbed off it.
    if ((r.kind == SphereKind::O && r.n == 3) || (r.kind == SphereKind::U && r.n == 2)) continue;
    for (std::size_t k = 1; k <= 5; ++k) {
      InfChar ic = spectrum_entry(r, box[k]).inf_char;
      auto& c = ic.representative.coords;
      for (std::size_t j = 0; j < c.size(); ++j) {
        const std::int64_t dir = r.kind == SphereKind::G2 ? (j == 2 ? -2 : 1) : static_cast<std::int64_t>(j + 1);
        c[j] += Q(dir * static_cast<long>(k), 11);
      }
      rec.holds("perturbed non-member " + to_string(r) + " " + to_string(ic.representative),
                !infchar_member(fam, ic).has_value());
    }
  }
  for (const auto& r : ds_realizations()) {
    const auto fam = infchar_family(compact_form(r));
    for (const auto& d : ds_params(r, 6))
      rec.holds("member " + to_string(r) + " l=" + str(d.ell) + " x=" + str(d.x) + " y=" + str(d.y) +
                    " series=" + str(d.series),
                infchar_member(fam, ds_infchar(d)).has_value());
  }
}

void hyperboloid(Recorder& rec) {
  for (HypKind k : {HypKind::U, HypKind::Sp})
    for (std::int64_t l = -2; l <= 2; ++l) {
      const auto rep = consistency_check(k, 2, 2, l, 6);
      rec.eq(std::string(k == HypKind::U ? "U(2,2)" : "Sp(2,2)") + " l=" + str(l) + " cutoff 6", "PASS",
             rep.pass ? "PASS" : "FAIL " + rep.first_discrepancy);
    }
}

void spin81(Recorder& rec) {
  const HypRealization r{HypKind::Spin81, 0, 0};
  const auto params = ds_params(r, 10);
  for (std::int64_t y = 0; y <= 10; ++y) {
    std::string expected, actual;
    if (y >= 1)
      for (std::int64_t x = -4; 2 * x > -(y + 7); --x) expected += str(x) + " ";
    for (const auto& d : params)
      if (d.y == y) actual += str(d.x) + " ";
    rec.eq("x values for y=" + str(y), expected, actual);
  }
  for (const auto& d : params) {
    const std::int64_t x = d.x, y = d.y;
    const std::vector<Rational> hc = {Q(y + 5, 2), Q(y + 3, 2), Q(y + 1, 2), Q(2 * x + y + 7, 2)};
    rec.eq("HC parameter x=" + str(x) + " y=" + str(y), "third " + to_string(hc),
           std::string(d.spin81 && d.spin81->hc_case == Spin81Case::third ? "third " : "other ") +
               (d.spin81 ? to_string(d.spin81->hc_parameter.coords) : "none"));
  }
  bool band_empty = true;
  for (std::int64_t y = 1; y <= 10; ++y)
    for (std::int64_t x = -3; x <= -1; ++x)
      for (int sign : {1, -1}) band_empty = band_empty && !spin81_hc_parameter(x, y, sign).has_value();
  for (const auto& d : params) band_empty = band_empty && !(d.x > -4 && d.x < 0);
  rec.holds("zero band 0 > x > -4 is empty", band_empty);
}

std::string u_lambda(int sign, std::int64_t x, std::int64_t y, std::int64_t n) {
  auto xi = [](std::int64_t v) { return "xi_{" + std::to_string(v) + "}"; };
  if (sign > 0) return xi(x) + " (x) " + xi(-(y + n - 2)) + " (x) det^{1}";
  if (sign == 0) return xi(x) + " (x) 1 (x) " + xi(-y);
  return "det^{-1} (x) " + xi(x + n - 2) + " (x) " + xi(-y);
}

std::string sp_lambda(int sign, std::int64_t x, std::int64_t y, std::int64_t n) {
  auto xi = [](std::int64_t v) { return "xi_{" + std::to_string(v) + "}"; };
  if (sign > 0) return "[" + xi(x) + " (x) " + xi(-(y + 2 * n - 2)) + " (x) 1] (x) " + xi(x - y);
  return "[" + xi(x) + " (x) " + xi(y) + " (x) 1] (x) " + xi(x - y);
}

std::string describe(const RangeClass& c) {
  std::string s = to_string(c.kind);
  for (const auto& p : c.parabolics) s += " | " + p.name + ": " + p.lambda + " {" + p.lambda_template + "}";
  return s;
}

// Along increasing x the classes follow `order`, and each edge occurs at
// most once.
bool ordered(const HypRealization& r, std::int64_t l, const std::vector<RangeKind>& order) {
  std::vector<std::pair<std::int64_t, RangeKind>> line;
  for (const auto& d : ds_params(r, 10))
    if (d.ell == l) line.emplace_back(d.x, classify_range(d).kind);
  std::sort(line.begin(), line.end());
  std::size_t pos = 0;
  std::map<RangeKind, int> count;
  for (const auto& [x, k] : line) {
    const auto it = std::find(order.begin(), order.end(), k);
    if (it == order.end() || static_cast<std::size_t>(it - order.begin()) < pos) return false;
    pos = static_cast<std::size_t>(it - order.begin());
    ++count[k];
  }
  return count[RangeKind::edge_plus_zero] <= 1 && count[RangeKind::edge_zero_minus] <= 1;
}

void range(Recorder& rec) {
  const std::string u_tpl[3] = {"det^{-1} (x) xi_{x+n-2} (x) xi_{-y}", "xi_x (x) 1 (x) xi_{-y}",
                                "xi_x (x) xi_{-(y+n-2)} (x) det^1"};
  const std::string sp_tpl[2] = {"[xi_x (x) xi_y (x) 1] (x) xi_{x-y}",
                                 "[xi_x (x) xi_{-(y+2n-2)} (x) 1] (x) xi_{x-y}"};
  const HypRealization u32{HypKind::U, 3, 2}, sp22{HypKind::Sp, 2, 2};
  const std::int64_t nu = 5, nsp = 4;
  for (std::int64_t l = -2; l <= 4; ++l) {
    for (const auto& d : ds_params(u32, 10)) {
      if (d.ell != l) continue;
      const std::int64_t x = d.x, y = d.y;
      RangeClass want;
      auto add = [&](int sign, const char* name) {
        want.parabolics.push_back({name, "", "", u_tpl[sign + 1], u_lambda(sign, x, y, nu), {}});
      };
      if (2 * x > 2 * l + nu - 1) {
        want.kind = RangeKind::q_plus;
        add(1, "q_+");
      } else if (2 * x == 2 * l + nu - 1) {
        want.kind = RangeKind::edge_plus_zero;
        add(1, "q_+");
        add(0, "q_0");
      } else if (2 * x < -(nu - 1)) {
        want.kind = RangeKind::q_minus;
        add(-1, "q_-");
      } else if (2 * x == -(nu - 1)) {
        want.kind = RangeKind::edge_zero_minus;
        add(0, "q_0");
        add(-1, "q_-");
      } else {
        want.kind = RangeKind::q_zero;
        add(0, "q_0");
      }
      const RangeClass got = classify_range(d);
      rec.eq("U(3,2) l=" + str(l) + " x=" + str(x), describe(want), describe(got));
    }
    rec.holds("U(3,2) l=" + str(l) + " classes are ordered along the line",
              ordered(u32, l, {RangeKind::q_minus, RangeKind::edge_zero_minus, RangeKind::q_zero,
                               RangeKind::edge_plus_zero, RangeKind::q_plus}));

    for (const auto& d : ds_params(sp22, 10)) {
      if (d.ell != l) continue;
      const std::int64_t x = d.x, y = d.y;
      RangeClass want;
      auto add = [&](int sign, const char* name) {
        want.parabolics.push_back({name, "", "", sp_tpl[sign], sp_lambda(sign, x, y, nsp), {}});
      };
      if (x > l + nsp - 1) {
        want.kind = RangeKind::q_plus;
        add(1, "q_+");
      } else if (x == l + nsp - 1) {
        want.kind = RangeKind::edge_plus_zero;
        add(1, "q_+");
        add(0, "q_0");
      } else if (2 * x > l) {
        want.kind = RangeKind::q_zero;
        add(0, "q_0");
      } else {
        want.kind = RangeKind::unclassified;
      }
      const RangeClass got = classify_range(d);
      rec.eq("Sp(2,2) l=" + str(l) + " x=" + str(x), describe(want), describe(got));
    }
    rec.holds("Sp(2,2) l=" + str(l) + " classes are ordered along the line",
              ordered(sp22, l, {RangeKind::unclassified, RangeKind::q_zero, RangeKind::edge_plus_zero,
                                RangeKind::q_plus}));
  }
}

void reducibility(Recorder& rec) {
  auto labels = [](const DiscreteSeriesParam& d) {
    std::string s = d.reducible ? "reducible:" : "irreducible:";
    for (const auto& c : d.constituents) s += " " + c;
    return s;
  };
  for (const auto& [kind, series] : {std::pair{HypKind::G2s43, 1}, std::pair{HypKind::G2s34, 2}})
    for (const auto& d : ds_params({kind, 0, 0}, 6)) {
      const std::string tag = "G2s series " + str(series) + " l=" + str(d.ell);
      if (series == 1 && d.ell == -2)
        rec.eq(tag, "reducible: J_-(H_2;(2,0)) J(H_2;(1,1))", labels(d));
      else if (series == 2 && d.ell == -2)
        rec.eq(tag, "irreducible: J(H_1;(1,1))", labels(d));
      else
        rec.eq(tag, "irreducible: irreducible", labels(d));
    }
  for (const auto& d : ds_params({HypKind::Spin34p, 0, 0}, 6))
    rec.eq("Spin(3,4)' l=" + str(d.ell), "irreducible: irreducible", labels(d));
}

const std::vector<std::pair<std::string, std::function<void(Recorder&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<void(Recorder&)>>> s = {
      {"table1", table1},   {"dims", dims},     {"casimir", casimirs},       {"branching", branching},
      {"gelfand", gelfand}, {"oracle", oracle}, {"infchar", infchar},        {"hyperboloid", hyperboloid},
      {"spin81", spin81},   {"range", range},   {"reducibility", reducibility}};
  return s;
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(assertions.begin(), assertions.end(), [](const Assertion& a) { return !a.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

VerifyReport run_suite(const std::string& suite) {
  for (const auto& [name, fn] : suites()) {
    if (name != suite) continue;
    VerifyReport report;
    report.suite = name;
    Recorder rec(report);
    try {
      fn(rec);
    } catch (const std::exception& e) {
      report.assertions.push_back({"suite completed", "no exception", e.what(), false});
    }
    return report;
  }
  throw DomainError("unknown verify suite: " + suite);
}

}  // namespace sphspec
