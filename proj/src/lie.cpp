#include "sphspec/lie.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace sphspec {

GroupLabel O(int n) { return {Family::O, n}; }
GroupLabel U(int n) { return {Family::U, n}; }
GroupLabel Sp(int n) { return {Family::Sp, n}; }
GroupLabel SpSp1(int n) { return {Family::SpSp1, n}; }
GroupLabel group(Family f) { return {f, 0}; }

std::string to_string(const GroupLabel& g) {
  const std::string n = std::to_string(g.n);
  switch (g.family) {
    case Family::O: return "O(" + n + ")";
    case Family::U: return "U(" + n + ")";
    case Family::Sp: return "Sp(" + n + ")";
    case Family::Sp1: return "Sp(1)";
    case Family::SpSp1: return "Sp(" + n + ")xSp(1)";
    case Family::Spin7p: return "Spin(7)'";
    case Family::Spin8: return "Spin(8)";
    case Family::Spin9: return "Spin(9)";
    case Family::G2: return "G2";
    case Family::SU3: return "SU(3)";
    case Family::U1: return "U(1)";
    case Family::SO2: return "SO(2)";
  }
  return "?";
}

std::string to_string(const Weight& w) { return to_string(w.coords); }

Rational dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DomainError("weight length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DomainError("weight length mismatch");
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DomainError("weight length mismatch");
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] -= b[i];
  return r;
}

Weight WeylGenerator::apply(const Weight& w) const {
  Weight r = w;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < matrix[i].size(); ++j)
      if (matrix[i][j] != 0) s += matrix[i][j] * w[j];
    r.coords[i] = s;
  }
  return r;
}

namespace {

struct Builder {
  RootDatum& rd;

  Weight unit(int i, const Rational& c = 1) const {
    Weight w{std::vector<Rational>(rd.coordinate_count, 0), rd.lattice};
    w.coords[i] = c;
    return w;
  }

  Weight diff(int i, int j) const { return unit(i) - unit(j); }
  Weight sum(int i, int j) const { return unit(i) + unit(j); }

  Weight short_g2(int o, int k) const {
    // The short roots e_k - (1/3)(1,1,1) up to sign, arranged to be positive.
    Weight w{std::vector<Rational>(rd.coordinate_count, 0), rd.lattice};
    for (int i = 0; i < 3; ++i) w.coords[o + i] = Q(-1, 3);
    w.coords[o + k] += 1;
    if (k != 0)
      for (int i = 0; i < 3; ++i) w.coords[o + i] = -w.coords[o + i];
    return w;
  }

  void add(const Segment& s) {
    const int o = s.offset, m = s.size;
    auto& pos = rd.positive_roots;
    auto& simple = rd.simple_roots;
    switch (s.type) {
      case RootType::A:
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) pos.push_back(diff(o + i, o + j));
        for (int i = 0; i + 1 < m; ++i) simple.push_back(diff(o + i, o + i + 1));
        break;
      case RootType::B:
      case RootType::C:
      case RootType::D:
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            pos.push_back(diff(o + i, o + j));
            pos.push_back(sum(o + i, o + j));
          }
        for (int i = 0; i + 1 < m; ++i) simple.push_back(diff(o + i, o + i + 1));
        if (s.type == RootType::B) {
          for (int i = 0; i < m; ++i) pos.push_back(unit(o + i));
          simple.push_back(unit(o + m - 1));
        } else if (s.type == RootType::C) {
          for (int i = 0; i < m; ++i) pos.push_back(unit(o + i, 2));
          simple.push_back(unit(o + m - 1, 2));
        } else {
          simple.push_back(sum(o + m - 2, o + m - 1));
        }
        break;
      case RootType::G2:
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) pos.push_back(diff(o + i, o + j));
        for (int k = 0; k < 3; ++k) pos.push_back(short_g2(o, k));
        simple.push_back(short_g2(o, 1));
        simple.push_back(diff(o + 1, o + 2));
        break;
      case RootType::Torus:
        break;
    }
  }
};

WeylGenerator reflection(const Weight& a) {
  const std::size_t n = a.size();
  const Rational aa = dot(a, a);
  WeylGenerator g{"s" + to_string(a), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.matrix[i][j] = (i == j ? Rational(1) : Rational(0)) - 2 * a[i] * a[j] / aa;
  return g;
}

WeylGenerator last_sign_change(int n) {
  WeylGenerator g{"flip" + std::to_string(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
  for (int i = 0; i < n; ++i) g.matrix[i][i] = 1;
  g.matrix[n - 1][n - 1] = -1;
  return g;
}

std::unique_ptr<RootDatum> build(const GroupLabel& g) {
  auto rd = std::make_unique<RootDatum>();
  rd->group = g;
  auto need_n = [&](int min) {
    if (g.n < min) throw DomainError("unsupported rank for " + to_string(g));
  };
  std::vector<std::pair<RootType, int>> parts;
  switch (g.family) {
    case Family::O:
      need_n(1);
      if (g.n == 2) parts = {{RootType::Torus, 1}};
      else if (g.n >= 3) parts = {{g.n % 2 ? RootType::B : RootType::D, g.n / 2}};
      break;
    case Family::U: need_n(1); parts = {{RootType::A, g.n}}; break;
    case Family::Sp: need_n(1); parts = {{RootType::C, g.n}}; break;
    case Family::Sp1: parts = {{RootType::C, 1}}; break;
    case Family::SpSp1: need_n(1); parts = {{RootType::C, g.n}, {RootType::C, 1}}; break;
    case Family::Spin7p: parts = {{RootType::B, 3}}; rd->lattice = Lattice::half_integer; break;
    case Family::Spin8: parts = {{RootType::D, 4}}; rd->lattice = Lattice::half_integer; break;
    case Family::Spin9: parts = {{RootType::B, 4}}; rd->lattice = Lattice::half_integer; break;
    case Family::G2: parts = {{RootType::G2, 3}}; rd->lattice = Lattice::sum_zero; break;
    case Family::SU3: parts = {{RootType::A, 3}}; rd->lattice = Lattice::sum_zero; break;
    case Family::U1:
    case Family::SO2: parts = {{RootType::Torus, 1}}; break;
  }
  for (const auto& [type, size] : parts) {
    rd->segments.push_back({type, rd->coordinate_count, size});
    rd->coordinate_count += size;
  }
  rd->scale = rd->lattice == Lattice::half_integer ? 2 : rd->lattice == Lattice::sum_zero ? 3 : 1;
  Builder b{*rd};
  for (const Segment& s : rd->segments) b.add(s);
  rd->rho = Weight{std::vector<Rational>(rd->coordinate_count, 0), rd->lattice};
  for (const Weight& a : rd->positive_roots) rd->rho = rd->rho + a;
  for (Rational& c : rd->rho.coords) c /= 2;
  for (const Weight& a : rd->simple_roots) rd->weyl_generators.push_back(reflection(a));
  if (g.family == Family::O && g.n % 2 == 0) rd->weyl_generators.push_back(last_sign_change(rd->coordinate_count));

  kernels::Geometry& geo = rd->geometry;
  geo.dim = rd->coordinate_count;
  geo.scale = rd->scale;
  geo.segments = rd->segments;
  for (const Weight& a : rd->positive_roots) geo.positive_roots.push_back(to_scaled(*rd, a));
  for (const Weight& a : rd->simple_roots) geo.simple_roots.push_back(to_scaled(*rd, a));
  geo.two_rho = to_scaled(*rd, rd->rho + rd->rho);
  return rd;
}

void check_shape(const GroupLabel& g, const Weight& w) {
  const RootDatum& rd = root_datum(g);
  if (static_cast<int>(w.size()) != rd.coordinate_count)
    throw DomainError("weight " + to_string(w) + " has wrong length for " + to_string(g));
}

void check_highest_weight(const GroupLabel& g, const Weight& hw) {
  check_shape(g, hw);
  if (!in_lattice(g, hw)) throw DomainError("weight " + to_string(hw) + " is not in the weight lattice of " + to_string(g));
  if (g.family == Family::O && g.n == 2 && hw[0] < 0)
    throw DomainError("O(2) highest weight must be non-negative");
  if (!is_dominant(g, hw)) throw DomainError("weight " + to_string(hw) + " is not dominant for " + to_string(g));
}

}  // namespace

const RootDatum& root_datum(const GroupLabel& g) {
  static std::mutex mu;
  static std::map<GroupLabel, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, build(g)).first;
  return *it->second;
}

Weight make_weight(const GroupLabel& g, std::vector<Rational> coords) {
  return Weight{std::move(coords), root_datum(g).lattice};
}

bool in_lattice(const GroupLabel& g, const Weight& w) {
  const RootDatum& rd = root_datum(g);
  if (static_cast<int>(w.size()) != rd.coordinate_count) return false;
  switch (rd.lattice) {
    case Lattice::integer:
      for (const Rational& c : w.coords)
        if (!is_integer(c)) return false;
      return true;
    case Lattice::half_integer: {
      bool all_int = true, all_half = true;
      for (const Rational& c : w.coords) {
        all_int = all_int && is_integer(c);
        all_half = all_half && is_half_odd(c);
      }
      return all_int || all_half;
    }
    case Lattice::sum_zero: {
      Rational s = 0;
      for (const Rational& c : w.coords) s += c;
      if (s != 0) return false;
      for (std::size_t i = 1; i < w.size(); ++i)
        if (!is_integer(w[i] - w[0])) return false;
      return true;
    }
  }
  return false;
}

bool is_dominant(const GroupLabel& g, const Weight& w) {
  check_shape(g, w);
  return detail::is_dominant(root_datum(g).segments, w.coords);
}

Weight dominant_form(const GroupLabel& g, const Weight& w) {
  check_shape(g, w);
  Weight r = w;
  detail::normalize_dominant(root_datum(g).segments, r.coords);
  return r;
}

Weight canonical_form(const GroupLabel& g, const Weight& w) {
  check_shape(g, w);
  if (g.family == Family::O && g.n % 2 == 0) {
    Weight r = w;
    detail::normalize_dominant({{RootType::B, 0, static_cast<int>(w.size())}}, r.coords);
    return r;
  }
  return dominant_form(g, w);
}

std::vector<Weight> weyl_orbit(const GroupLabel& g, const Weight& w) {
  check_shape(g, w);
  const RootDatum& rd = root_datum(g);
  std::set<Weight> seen{w};
  std::vector<Weight> out{w};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const WeylGenerator& s : rd.weyl_generators) {
      Weight x = s.apply(out[i]);
      if (seen.insert(x).second) out.push_back(std::move(x));
    }
  return out;
}

kernels::IntVec to_scaled(const RootDatum& rd, const Weight& w) {
  kernels::IntVec v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational x = w[i] * Rational(rd.scale);
    if (!is_integer(x)) throw DomainError("weight " + to_string(w) + " is not in the lattice of " + to_string(rd.group));
    v[i] = to_int64(x);
  }
  return v;
}

Weight from_scaled(const RootDatum& rd, const kernels::IntVec& v) {
  Weight w{std::vector<Rational>(v.size()), rd.lattice};
  for (std::size_t i = 0; i < v.size(); ++i) w.coords[i] = Q(v[i], rd.scale);
  return w;
}

std::int64_t weyl_dim(const GroupLabel& g, const Weight& hw) {
  check_highest_weight(g, hw);
  if (g.family == Family::O && g.n == 2) return hw[0] == 0 ? 1 : 2;
  const RootDatum& rd = root_datum(g);
  const Weight shifted = hw + rd.rho;
  Rational d = 1;
  for (const Weight& a : rd.positive_roots) d *= dot(shifted, a) / dot(rd.rho, a);
  if (!is_integer(d) || d <= 0) throw std::logic_error("Weyl dimension formula gave " + to_string(d));
  return to_int64(d);
}

Rational casimir(const GroupLabel& g, const Weight& hw) {
  check_highest_weight(g, hw);
  const RootDatum& rd = root_datum(g);
  return dot(hw + rd.rho + rd.rho, hw);
}

std::int64_t one_row_dim(int n, int a) {
  if (n < 1 || a < 0) throw DomainError("one_row_dim needs n >= 1 and a >= 0");
  if (n == 1) return a <= 1 ? 1 : 0;
  std::vector<Rational> c(n / 2, 0);
  c[0] = a;
  return weyl_dim(O(n), make_weight(O(n), c));
}

bool InfChar::operator==(const InfChar& o) const {
  return group == o.group && weyl_equivalent(group, representative, o.representative);
}

InfChar inf_char(const GroupLabel& g, const Weight& hw) {
  check_highest_weight(g, hw);
  return InfChar{hw + root_datum(g).rho, g};
}

bool weyl_equivalent(const GroupLabel& g, const Weight& w1, const Weight& w2) {
  if (w1.size() != w2.size()) throw DomainError("weyl_equivalent: mismatched ranks");
  return canonical_form(g, w1) == canonical_form(g, w2);
}

}  // namespace sphspec
