#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond plain data.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Independent face counter: rotation lists are built directly from the
// crossing sequence as cyclic vectors of (neighbour, curve) half-edges.
inline int face_count(const std::vector<int>& order_e, const std::vector<int>& signs) {
  const int n = static_cast<int>(order_e.size());
  struct Half {
    int from, to, curve;
  };
  std::vector<Half> halves;
  std::map<int, std::vector<int>> rotation;  // vertex -> halves ccw
  auto vertex_of_ep = [&](int pos) { return pos == 0 ? 100000 : pos == n + 1 ? 100001 : pos; };
  std::vector<int> e_seq{100002};
  for (int xi : order_e) e_seq.push_back(xi);
  e_seq.push_back(100003);
  std::map<std::pair<int, int>, int> id;
  auto add = [&](int a, int b, int curve) {
    id[{a, b * 2 + curve}] = static_cast<int>(halves.size());
    halves.push_back({a, b, curve});
  };
  for (int i = 0; i <= n; ++i) {
    add(vertex_of_ep(i), vertex_of_ep(i + 1), 1);
    add(vertex_of_ep(i + 1), vertex_of_ep(i), 1);
  }
  for (int i = 0; i + 1 < static_cast<int>(e_seq.size()); ++i) {
    add(e_seq[i], e_seq[i + 1], 0);
    add(e_seq[i + 1], e_seq[i], 0);
  }
  auto half = [&](int a, int b, int curve) { return id.at({a, b * 2 + curve}); };
  for (int v : {100000, 100001, 100002, 100003}) {
    for (int h = 0; h < static_cast<int>(halves.size()); ++h) {
      if (halves[h].from == v) rotation[v] = {h};
    }
  }
  for (int xi = 1; xi <= n; ++xi) {
    const int p = static_cast<int>(std::find(e_seq.begin(), e_seq.end(), xi) - e_seq.begin());
    const int e_out = half(xi, e_seq[p + 1], 0);
    const int e_in = half(xi, e_seq[p - 1], 0);
    const int ep_out = half(xi, vertex_of_ep(xi + 1), 1);
    const int ep_in = half(xi, vertex_of_ep(xi - 1), 1);
    rotation[xi] = signs[xi - 1] > 0 ? std::vector<int>{e_out, ep_out, e_in, ep_in}
                                     : std::vector<int>{e_out, ep_in, e_in, ep_out};
  }
  // The face left of h continues with the clockwise predecessor of the reverse of h at its head.
  auto next = [&](int h) {
    const Half& x = halves[h];
    const int back = half(x.to, x.from, x.curve);
    const auto& rot = rotation.at(x.to);
    const int at = static_cast<int>(std::find(rot.begin(), rot.end(), back) - rot.begin());
    return rot[(at + static_cast<int>(rot.size()) - 1) % rot.size()];
  };
  std::vector<char> seen(halves.size(), 0);
  int faces = 0;
  for (int h = 0; h < static_cast<int>(halves.size()); ++h) {
    if (seen[h]) continue;
    ++faces;
    for (int x = h; !seen[x]; x = next(x)) seen[x] = 1;
  }
  return faces;
}


// Plane encodings by Euler's formula: V = N + 4, E = 2N + 2, one component.
inline bool plane(const std::vector<int>& order_e, const std::vector<int>& signs) {
  const int n = static_cast<int>(order_e.size());
  if (n == 0) return true;
  return (n + 4) - (2 * n + 2) + face_count(order_e, signs) == 2;
}

using Code = std::pair<std::vector<int>, std::vector<int>>;  // order_e, signs by xi

// The 8 images of an encoding, written out case by case.
inline std::vector<Code> images(const Code& c) {
  const int n = static_cast<int>(c.first.size());
  std::vector<Code> out;
  for (int rev_e = 0; rev_e < 2; ++rev_e) {
    for (int rev_ep = 0; rev_ep < 2; ++rev_ep) {
      for (int mirror = 0; mirror < 2; ++mirror) {
        // Walk e in the chosen direction; relabel crossings left to right
        // along the chosen direction of e'.
        std::vector<int> order, signs(n);
        for (int p = 0; p < n; ++p) {
          const int xi = c.first[rev_e ? n - 1 - p : p];
          order.push_back(rev_ep ? n + 1 - xi : xi);
        }
        for (int xi = 1; xi <= n; ++xi) {
          const int flips = rev_e + rev_ep + mirror;
          const int s = c.second[xi - 1] * (flips % 2 ? -1 : 1);
          signs[(rev_ep ? n + 1 - xi : xi) - 1] = s;
        }
        out.emplace_back(order, signs);
      }
    }
  }
  return out;
}

// Number of symmetry classes of plane encodings with n crossings, by brute
// force over all permutations and sign vectors.
inline int brute_force_classes(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::set<Code> seen;
  int classes = 0;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> signs(n);
      for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? 1 : -1;
      if (!plane(order, signs)) continue;
      const Code c{order, signs};
      if (seen.count(c)) continue;
      ++classes;
      for (const Code& img : images(c)) seen.insert(img);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return classes;
}

// Every plane encoding with n crossings.
inline std::set<Code> all_plane(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::set<Code> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> signs(n);
      for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? 1 : -1;
      if (plane(order, signs)) out.emplace(order, signs);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// floor(e * k!) from a bracket [L, U] around e: L a long partial sum of
// 1/s!, U = L + 1/(S! * S) bounding the tail. Returns -1 if the bracket is
// too wide to decide.
template <class Int, class Rational>
Int floor_e_factorial(int k) {
  constexpr int kTerms = 90;
  Rational lower = 0;
  Int s_fact = 1;
  for (int s = 0; s <= kTerms; ++s) {
    if (s > 0) s_fact *= s;
    lower += Rational(1, s_fact);
  }
  const Rational upper = lower + Rational(1, s_fact * kTerms);
  Int kf = 1;
  for (int i = 2; i <= k; ++i) kf *= i;
  const Rational lo = lower * kf, hi = upper * kf;
  const Int flo = numerator(lo) / denominator(lo);
  const Int fhi = numerator(hi) / denominator(hi);
  return flo == fhi ? flo : Int(-1);
}

}  // namespace oracle
