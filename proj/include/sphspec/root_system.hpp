#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace sphspec {

// Simple factors in standard coordinates.  A: roots e_i - e_j over `size`
// coordinates (covers U(n) and SU(3) in sum-zero coordinates); G2: three
// sum-zero coordinates; Torus: no roots.
enum class RootType { A, B, C, D, G2, Torus };

struct Segment {
  RootType type;
  int offset;
  int size;
};

namespace detail {

template <class T>
T absval(const T& x) {
  return x < 0 ? T(-x) : x;
}

// G2 Weyl group: the 6 coordinate permutations times +-1.
template <class T>
bool g2_dominant(const T& a, const T& b, const T& c) {
  (void)a;
  return b <= 0 && b >= c;
}

template <class T>
void g2_normalize(T* v) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int sign : {1, -1}) {
      T a = v[perm[0]], b = v[perm[1]], c = v[perm[2]];
      if (sign < 0) {
        a = -a;
        b = -b;
        c = -c;
      }
      if (g2_dominant(a, b, c)) {
        v[0] = a;
        v[1] = b;
        v[2] = c;
        return;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Brings v into the closed dominant chamber of the identity component's
// Weyl group, one segment at a time.
template <class T>
void normalize_dominant(const std::vector<Segment>& segments, std::vector<T>& v) {
  for (const Segment& s : segments) {
    T* p = v.data() + s.offset;
    switch (s.type) {
      case RootType::A:
        std::sort(p, p + s.size, [](const T& x, const T& y) { return y < x; });
        break;
      case RootType::B:
      case RootType::C:
        for (int i = 0; i < s.size; ++i) p[i] = absval(p[i]);
        std::sort(p, p + s.size, [](const T& x, const T& y) { return y < x; });
        break;
      case RootType::D: {
        int negatives = 0;
        for (int i = 0; i < s.size; ++i) {
          if (p[i] < 0) ++negatives;
          p[i] = absval(p[i]);
        }
        std::sort(p, p + s.size, [](const T& x, const T& y) { return y < x; });
        if (negatives % 2 == 1 && p[s.size - 1] != 0) p[s.size - 1] = -p[s.size - 1];
        break;
      }
      case RootType::G2:
        g2_normalize(p);
        break;
      case RootType::Torus:
        break;
    }
  }
}

template <class T>
bool is_dominant(const std::vector<Segment>& segments, const std::vector<T>& v) {
  for (const Segment& s : segments) {
    const T* p = v.data() + s.offset;
    switch (s.type) {
      case RootType::A:
        for (int i = 0; i + 1 < s.size; ++i)
          if (p[i] < p[i + 1]) return false;
        break;
      case RootType::B:
      case RootType::C:
        for (int i = 0; i + 1 < s.size; ++i)
          if (p[i] < p[i + 1]) return false;
        if (s.size > 0 && p[s.size - 1] < 0) return false;
        break;
      case RootType::D:
        for (int i = 0; i + 1 < s.size; ++i)
          if (p[i] < p[i + 1]) return false;
        if (s.size >= 2 && p[s.size - 2] < absval(p[s.size - 1])) return false;
        break;
      case RootType::G2:
        if (!g2_dominant(p[0], p[1], p[2])) return false;
        break;
      case RootType::Torus:
        break;
    }
  }
  return true;
}

}  // namespace detail
}  // namespace sphspec
