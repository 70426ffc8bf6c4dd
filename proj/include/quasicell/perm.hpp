#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasicell {

// A permutation of [n] in one-line notation, 1-based.  Elements of W = S_n
// and of every carrier set in this library.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : w_(static_cast<size_t>(n)) {
    std::iota(w_.begin(), w_.end(), 1);
  }

  static Perm identity(int n) { return Perm(n); }

  static Perm from_window(std::vector<int> window) {
    const int n = static_cast<int>(window.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int x : window) {
      if (x < 1 || x > n || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("not a permutation window");
      seen[static_cast<size_t>(x)] = true;
    }
    Perm p;
    p.w_ = std::move(window);
    return p;
  }

  // adjacent transposition s_i = (i, i+1), 1 <= i <= n-1
  static Perm adjacent(int n, int i) { return transposition(n, i, i + 1); }

  static Perm transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::invalid_argument("bad transposition");
    Perm p(n);
    std::swap(p.w_[static_cast<size_t>(i) - 1], p.w_[static_cast<size_t>(j) - 1]);
    return p;
  }

  int rank() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& window() const { return w_; }

  Perm inverse() const {
    Perm p;
    p.w_.resize(w_.size());
    for (int i = 1; i <= rank(); ++i) p.w_[static_cast<size_t>((*this)(i)) - 1] = i;
    return p;
  }

  // Coxeter length = inversion count
  int length() const {
    int inv = 0;
    for (size_t i = 0; i < w_.size(); ++i)
      for (size_t j = i + 1; j < w_.size(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }
  bool is_involution() const {
    for (int i = 1; i <= rank(); ++i)
      if ((*this)((*this)(i)) != i) return false;
    return true;
  }
  bool is_fpf_involution() const {
    if (!is_involution()) return false;
    for (int i = 1; i <= rank(); ++i)
      if ((*this)(i) == i) return false;
    return true;
  }

  bool operator==(const Perm& o) const { return w_ == o.w_; }
  bool operator!=(const Perm& o) const { return w_ != o.w_; }
  bool operator<(const Perm& o) const { return w_ < o.w_; }

  // One-line string, "2143".  Comma-separated beyond rank 9.
  std::string str() const {
    std::string out;
    for (size_t i = 0; i < w_.size(); ++i) {
      if (rank() > 9 && i) out += ',';
      out += std::to_string(w_[i]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

private:
  std::vector<int> w_;
};

// (u o w)(i) = u(w(i))
inline Perm compose(const Perm& u, const Perm& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<int> win(static_cast<size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) win[static_cast<size_t>(i) - 1] = u(w(i));
  return Perm::from_window(std::move(win));
}

// l(s_i w) < l(w), i.e. i occurs after i+1 in the window of w
inline bool has_left_descent(const Perm& w, int i) {
  int pos_i = 0, pos_i1 = 0;
  for (int j = 1; j <= w.rank(); ++j) {
    if (w(j) == i) pos_i = j;
    if (w(j) == i + 1) pos_i1 = j;
  }
  return pos_i > pos_i1;
}

inline std::vector<int> left_descents(const Perm& w) {
  std::vector<int> out;
  const Perm inv = w.inverse();
  for (int i = 1; i < w.rank(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

// left-multiply by s_i: swap the values i and i+1 in the window
inline Perm apply_s_left(int i, const Perm& w) {
  std::vector<int> win = w.window();
  for (auto& x : win) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return Perm::from_window(std::move(win));
}

// A reduced word i1,...,ik with w = s_{i1} o s_{i2} o ... o s_{ik}, peeled
// greedily from the left.  Any reduced word is acceptable downstream; the
// module actions are word-independent (tested).
inline std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  for (;;) {
    Perm inv = cur.inverse();
    int desc = 0;
    for (int i = 1; i < cur.rank(); ++i)
      if (inv(i) > inv(i + 1)) {
        desc = i;
        break;
      }
    if (desc == 0) break;
    word.push_back(desc);
    cur = apply_s_left(desc, cur);
  }
  return word;
}

// Bruhat order via the lifting property: for s with sw < w,
// u <= w iff (su <= sw when su < u) and (u <= sw otherwise).
inline bool bruhat_leq(const Perm& u, const Perm& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("rank mismatch in bruhat_leq");
  Perm a = u, b = w;
  for (;;) {
    Perm binv = b.inverse();
    int desc = 0;
    for (int i = 1; i < b.rank(); ++i)
      if (binv(i) > binv(i + 1)) {
        desc = i;
        break;
      }
    if (desc == 0) return a.is_identity();
    if (has_left_descent(a, desc)) a = apply_s_left(desc, a);
    b = apply_s_left(desc, b);
  }
}

// All of S_n in lexicographic order on one-line windows.
inline std::vector<Perm> enumerate_permutations(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  std::vector<int> win(static_cast<size_t>(n));
  std::iota(win.begin(), win.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_window(win));
  } while (std::next_permutation(win.begin(), win.end()));
  return out;
}

// All fixed-point-free involutions of S_n, lexicographic, (n-1)!! of them.
inline std::vector<Perm> enumerate_fpf(int n) {
  if (n < 1 || n % 2 != 0)
    throw std::invalid_argument("fixed-point-free involutions need even rank");
  std::vector<Perm> out;
  // pair the smallest unmatched point with every larger one
  std::vector<int> win(static_cast<size_t>(n), 0);
  auto fill = [&](auto&& self) -> void {
    int i = 0;
    while (i < n && win[static_cast<size_t>(i)] != 0) ++i;
    if (i == n) {
      out.push_back(Perm::from_window(win));
      return;
    }
    for (int j = i + 1; j < n; ++j) {
      if (win[static_cast<size_t>(j)] != 0) continue;
      win[static_cast<size_t>(i)] = j + 1;
      win[static_cast<size_t>(j)] = i + 1;
      self(self);
      win[static_cast<size_t>(i)] = 0;
      win[static_cast<size_t>(j)] = 0;
    }
  };
  fill(fill);
  std::sort(out.begin(), out.end());
  return out;
}

// Longest element of the Young subgroup generated by
// {s_k : k in [1, n-1] \ excluded}: reverses each block between cuts.
inline Perm parabolic_longest(int n, const std::set<int>& excluded) {
  std::vector<int> win(static_cast<size_t>(n));
  int start = 1;
  for (int cut = 1; cut <= n; ++cut) {
    const bool is_cut = (cut == n) || excluded.count(cut);
    if (!is_cut) continue;
    for (int i = start; i <= cut; ++i) win[static_cast<size_t>(i) - 1] = start + cut - i;
    start = cut + 1;
  }
  return Perm::from_window(std::move(win));
}

// Minimal-length fixed-point-free involution of the same Young subgroup:
// (a,a+1)(a+2,a+3)... within each block.  Every block must have even size.
inline Perm parabolic_min_fpf(int n, const std::set<int>& excluded) {
  std::vector<int> win(static_cast<size_t>(n));
  int start = 1;
  for (int cut = 1; cut <= n; ++cut) {
    const bool is_cut = (cut == n) || excluded.count(cut);
    if (!is_cut) continue;
    if ((cut - start + 1) % 2 != 0)
      throw std::invalid_argument("parabolic block of odd size has no fpf involution");
    for (int i = start; i <= cut; i += 2) {
      win[static_cast<size_t>(i) - 1] = i + 1;
      win[static_cast<size_t>(i)] = i;
    }
    start = cut + 1;
  }
  return Perm::from_window(std::move(win));
}

}  // namespace quasicell
