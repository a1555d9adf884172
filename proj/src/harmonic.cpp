#include "sphspec/harmonic.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <numeric>
#include <stdexcept>

namespace sphspec::harmonic {

namespace {

constexpr int max_variables = 8;
constexpr int max_degree = 4;

void check_caps(int n, int a) {
  if (n < 1 || n > max_variables) throw DomainError("harmonic oracle needs 1 <= n <= 8");
  if (a < 0 || a > max_degree) throw DomainError("harmonic oracle needs 0 <= a <= 4");
}

void monomials_rec(int n, int left, Exponents& cur, int i, std::vector<Exponents>& out) {
  if (i == n - 1) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur[i] = k;
    monomials_rec(n, left - k, cur, i + 1, out);
  }
}

Poly from_vector(const std::vector<Exponents>& basis, const std::vector<Rational>& v, int n) {
  Poly p(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) p.add_term(basis[i], v[i]);
  return p;
}

// Kernel basis of a linear operator restricted to the span of `domain`.
template <class Op>
std::vector<Poly> kernel_of(const std::vector<Exponents>& domain, int n, Op op) {
  std::map<Exponents, std::size_t> row_of;
  std::vector<Poly> images;
  for (const auto& e : domain) {
    images.push_back(op(Poly::monomial(e)));
    for (const auto& [t, c] : images.back().terms()) row_of.emplace(t, 0);
  }
  std::size_t r = 0;
  for (auto& [t, idx] : row_of) idx = r++;
  std::vector<std::vector<Integer>> m(r, std::vector<Integer>(domain.size(), 0));
  for (std::size_t j = 0; j < domain.size(); ++j)
    for (const auto& [t, c] : images[j].terms()) {
      if (c.get_den() != 1) throw std::logic_error("operator matrix is not integral");
      m[row_of[t]][j] = c.get_num();
    }
  std::vector<Poly> out;
  for (const auto& v : eliminate(std::move(m), domain.size()).kernel) out.push_back(from_vector(domain, v, n));
  return out;
}

// Scalar c with q == c p, or nullopt.
std::optional<Rational> eigenvalue(const Poly& p, const Poly& q) {
  const auto& [e, c] = *p.terms().begin();
  auto it = q.terms().find(e);
  const Rational lambda = it == q.terms().end() ? Rational(0) : it->second / c;
  if (!(q == p * lambda)) return std::nullopt;
  return lambda;
}

}  // namespace

Poly Poly::monomial(const Exponents& e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  const int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) throw DomainError("degree of a non-homogeneous polynomial");
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw DomainError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Rational& c) const {
  Poly p(n_);
  if (c == 0) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

Poly derivative(const Poly& p, int i) {
  Poly d(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    d.add_term(f, c * e[i]);
  }
  return d;
}

Poly times_variable(const Poly& p, int i) {
  Poly q(p.variables());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    ++f[i];
    q.add_term(f, c);
  }
  return q;
}

Poly laplacian(const Poly& p) {
  Poly out(p.variables());
  for (int i = 0; i < p.variables(); ++i) out += derivative(derivative(p, i), i);
  return out;
}

Poly rotation(const Poly& p, int i, int j) {
  Poly out = times_variable(derivative(p, j), i);
  out -= times_variable(derivative(p, i), j);
  return out;
}

Poly casimir_operator(const Poly& p) {
  Poly out(p.variables());
  for (int i = 0; i < p.variables(); ++i)
    for (int j = i + 1; j < p.variables(); ++j) out -= rotation(rotation(p, i, j), i, j);
  return out;
}

std::vector<Exponents> monomials(int n, int degree) {
  std::vector<Exponents> out;
  if (degree < 0 || n < 1) return out;
  Exponents cur(n, 0);
  monomials_rec(n, degree, cur, 0, out);
  return out;
}

LinearMapMatrix laplacian_matrix(int n, int a) {
  check_caps(n, a);
  LinearMapMatrix m{monomials(n, a), monomials(n, a - 2), {}};
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t i = 0; i < m.codomain.size(); ++i) row_of[m.codomain[i]] = i;
  m.entries.assign(m.codomain.size(), std::vector<Integer>(m.domain.size(), 0));
  for (std::size_t j = 0; j < m.domain.size(); ++j) {
    const Poly image = laplacian(Poly::monomial(m.domain[j]));
    for (const auto& [e, c] : image.terms()) m.entries[row_of.at(e)][j] = c.get_num();
  }
  return m;
}

Elimination eliminate(std::vector<std::vector<Integer>> m, std::size_t cols) {
  Elimination out;
  const std::size_t rows = m.size();
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t piv = k;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[k], m[piv]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = m[k][col] * m[i][j] - m[i][col] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[k][col];
    out.pivot_columns.push_back(col);
    ++k;
  }
  out.rank = k;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (std::size_t r = out.rank; r-- > 0;) {
      const std::size_t p = out.pivot_columns[r];
      Rational s = 0;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (m[r][j] != 0 && x[j] != 0) s += Rational(m[r][j]) * x[j];
      x[p] = -s / Rational(m[r][p]);
    }
    Integer l = 1, g = 0;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (auto& v : x) {
      v *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    for (auto& v : x) v /= g;
    out.kernel.push_back(std::move(x));
  }
  return out;
}

std::vector<Poly> harmonic_basis(int n, int a) {
  const LinearMapMatrix m = laplacian_matrix(n, a);
  const Elimination el = eliminate(m.entries, m.domain.size());
  if (el.rank != m.codomain.size())
    throw std::logic_error("Laplacian is not surjective onto degree " + std::to_string(a - 2));
  std::vector<Poly> out;
  for (const auto& v : el.kernel) out.push_back(from_vector(m.domain, v, n));
  return out;
}

std::int64_t harmonic_dim(int n, int a) { return static_cast<std::int64_t>(harmonic_basis(n, a).size()); }

Rational casimir_scalar(int n, int a, Exec exec) {
  if (n < 3) throw DomainError("casimir_scalar needs n >= 3");
  const std::vector<Poly> basis = harmonic_basis(n, a);
  std::vector<std::optional<Rational>> scalars(basis.size());
  const long count = static_cast<long>(basis.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) scalars[i] = eigenvalue(basis[i], casimir_operator(basis[i]));
  } else {
    for (long i = 0; i < count; ++i) scalars[i] = eigenvalue(basis[i], casimir_operator(basis[i]));
  }
  for (const auto& s : scalars)
    if (!s || *s != *scalars.front()) throw std::logic_error("Casimir does not act by a scalar on harmonics");
  return *scalars.front();
}

WeightMultiset torus_weights(int n, int a, Exec exec) {
  check_caps(n, a);
  if (n % 2 != 0) throw DomainError("torus_weights needs even n");
  const int m = n / 2;
  // Variables z_1..z_m, zbar_1..zbar_m with z_j = x_{2j-1} + i x_{2j}.  The
  // Laplacian is 4 sum_j d_{z_j} d_{zbar_j}, and the j-th rotation acts on
  // a monomial by i times its weight z_j d_{z_j} - zbar_j d_{zbar_j}.
  auto complex_laplacian = [m](const Poly& p) {
    Poly out(2 * m);
    for (int j = 0; j < m; ++j) out += derivative(derivative(p, j), m + j) * 4;
    return out;
  };
  auto weight_operator = [m](const Poly& p, int j) {
    Poly out = times_variable(derivative(p, j), j);
    out -= times_variable(derivative(p, m + j), m + j);
    return out;
  };
  std::map<std::vector<int>, std::vector<Exponents>> blocks;
  for (const auto& e : monomials(2 * m, a)) {
    std::vector<int> w(m);
    for (int j = 0; j < m; ++j) w[j] = e[j] - e[m + j];
    blocks[w].push_back(e);
  }
  std::vector<std::pair<std::vector<int>, std::vector<Exponents>>> work(blocks.begin(), blocks.end());
  std::vector<std::vector<std::vector<Rational>>> found(work.size());
  auto solve = [&](std::size_t b) {
    for (const Poly& v : kernel_of(work[b].second, 2 * m, complex_laplacian)) {
      std::vector<Rational> w;
      for (int j = 0; j < m; ++j) {
        const auto ev = eigenvalue(v, weight_operator(v, j));
        if (!ev) throw std::logic_error("harmonic block vector is not a torus weight vector");
        w.push_back(*ev);
      }
      found[b].push_back(std::move(w));
    }
  };
  const long count = static_cast<long>(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  auto guarded = [&](long b) {
    try {
      solve(b);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < count; ++b) guarded(b);
  } else {
    for (long b = 0; b < count; ++b) guarded(b);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  WeightMultiset out{O(n), {}};
  for (const auto& ws : found)
    for (const auto& w : ws) out.entries[make_weight(O(n), w)] += 1;
  return out;
}

}  // namespace sphspec::harmonic
