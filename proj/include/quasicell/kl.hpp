#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quasicell/laurent.hpp"
#include "quasicell/perm.hpp"

namespace quasicell {

// Kazhdan-Lusztig data for the Hecke algebra of S_n: the polynomials
// h_{x,y} expressing the KL basis element of y in the standard basis, and
// the mu coefficients (coefficient of v^{-1}).  Elements are indexed in
// (length, window) order; column y stores only the x with h_{x,y} != 0.
struct KLTable {
  int n = 0;
  std::vector<Perm> elements;
  std::vector<int> length_of;
  std::vector<std::vector<std::pair<int, LaurentPoly>>> h;  // per column y, sorted by x
  std::vector<std::vector<std::pair<int, Int>>> mu_of;      // per column y, nonzero mu only

  int size() const { return static_cast<int>(elements.size()); }

  int index(const Perm& p) const {
    auto it = index_.find(p.window());
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }

  const LaurentPoly& h_at(int x, int y) const {
    static const LaurentPoly zero;
    for (const auto& [xi, p] : h[static_cast<size_t>(y)])
      if (xi == x) return p;
    return zero;
  }

  Int mu(int x, int y) const {
    for (const auto& [xi, m] : mu_of[static_cast<size_t>(y)])
      if (xi == x) return m;
    return 0;
  }

  void build_index() {
    index_.clear();
    for (int i = 0; i < size(); ++i) index_[elements[static_cast<size_t>(i)].window()] = i;
  }

private:
  std::map<std::vector<int>, int> index_;
};

// Standard recursion for the KL basis, seeded by the identity and
// underline H_s = H_s + v^{-1}: for a left descent s of w with y = s w,
//   underline H_w = underline H_s underline H_y
//                   - sum over z < y with s z < z of mu(z, y) underline H_z.
inline KLTable compute_kl(int n, int max_rank = 6) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (n > max_rank) throw std::invalid_argument("rank above configured maximum");
  KLTable T;
  T.n = n;
  T.elements = enumerate_permutations(n);
  std::sort(T.elements.begin(), T.elements.end(), [](const Perm& a, const Perm& b) {
    const int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  T.build_index();
  const int N = T.size();
  T.length_of.resize(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) T.length_of[static_cast<size_t>(i)] = T.elements[static_cast<size_t>(i)].length();
  T.h.resize(static_cast<size_t>(N));
  T.mu_of.resize(static_cast<size_t>(N));

  T.h[0].emplace_back(0, LaurentPoly(1));  // identity comes first

  for (int w = 1; w < N; ++w) {
    const Perm& pw = T.elements[static_cast<size_t>(w)];
    const int s = left_descents(pw).front();
    const int y = T.index(apply_s_left(s, pw));

    // expand underline H_s times column y in the standard basis
    std::map<int, LaurentPoly> col;
    for (const auto& [x, c] : T.h[static_cast<size_t>(y)]) {
      const Perm& px = T.elements[static_cast<size_t>(x)];
      const Perm psx = apply_s_left(s, px);
      const int sx = T.index(psx);
      auto& dst = col[sx];
      dst += c;
      LaurentPoly diag = c;
      if (T.length_of[static_cast<size_t>(sx)] > T.length_of[static_cast<size_t>(x)])
        diag.shift_scale(1, -1);  // H_s H_x = H_{sx}; plus v^{-1} H_x
      else
        diag.shift_scale(1, 1);  // H_s H_x = H_{sx} + (v - v^{-1}) H_x; plus v^{-1} H_x
      col[x] += diag;
    }
    for (const auto& [z, muz] : T.mu_of[static_cast<size_t>(y)]) {
      if (!has_left_descent(T.elements[static_cast<size_t>(z)], s)) continue;
      for (const auto& [x, c] : T.h[static_cast<size_t>(z)]) {
        LaurentPoly t = c;
        t.scale(muz);
        col[x] -= t;
      }
    }

    auto& stored = T.h[static_cast<size_t>(w)];
    for (auto& [x, c] : col) {
      if (c.is_zero()) continue;
      const Int m = c.coeff(-1);
      if (m != 0 && x != w) T.mu_of[static_cast<size_t>(w)].emplace_back(x, m);
      stored.emplace_back(x, std::move(c));
    }
  }
  return T;
}

// Expansion of underline H_s times underline H_w in the KL basis:
// (v + v^{-1}) underline H_w when s w < w, otherwise underline H_{sw} plus
// mu(z, w) underline H_z over the z < w with s z < z.
inline std::vector<std::pair<int, LaurentPoly>> underline_s_times_underline_w(const KLTable& T,
                                                                              int s, int w) {
  std::vector<std::pair<int, LaurentPoly>> out;
  const Perm& pw = T.elements[static_cast<size_t>(w)];
  if (has_left_descent(pw, s)) {
    out.emplace_back(w, LaurentPoly::v(1) + LaurentPoly::v(-1));
    return out;
  }
  const int sw = T.index(apply_s_left(s, pw));
  out.emplace_back(sw, LaurentPoly(1));
  for (const auto& [z, muz] : T.mu_of[static_cast<size_t>(w)])
    if (has_left_descent(T.elements[static_cast<size_t>(z)], s)) out.emplace_back(z, LaurentPoly(muz));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace quasicell
