#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasicell/perm.hpp"

namespace quasicell {

// A scaled W-set for W = S_n: carrier, generator and reflection action
// tables, heights, and the Bruhat order on the carrier.  Heights are stored
// doubled (2*ht) so that the half-integer heights of conjugation sets stay
// exact; all height comparisons and differences use these integers.
struct QpSet {
  enum class Family { fpf, regular, conjugacy };

  Family family = Family::regular;
  int rank = 0;                              // W = S_rank
  std::vector<Perm> carrier;                 // sorted by (height, window)
  std::vector<int> twice_ht;
  std::vector<std::vector<int>> gen_act;     // [s-1][x] -> index of s.x
  std::vector<Perm> reflections;             // the n(n-1)/2 transpositions
  std::vector<std::vector<int>> refl_act;    // [t][x] -> index of t.x
  std::vector<std::vector<char>> leq;        // Bruhat order on the carrier

  int size() const { return static_cast<int>(carrier.size()); }
  int gens() const { return rank - 1; }

  int index(const Perm& p) const {
    auto it = index_.find(p.window());
    if (it == index_.end()) throw std::invalid_argument("element not in carrier");
    return it->second;
  }
  bool contains(const Perm& p) const { return index_.count(p.window()) != 0; }

  int act_gen(int s, int x) const { return gen_act[static_cast<size_t>(s) - 1][static_cast<size_t>(x)]; }
  int act_refl(int t, int x) const { return refl_act[static_cast<size_t>(t)][static_cast<size_t>(x)]; }

  bool bruhat(int x, int y) const { return leq[static_cast<size_t>(x)][static_cast<size_t>(y)] != 0; }
  bool bruhat_strict(int x, int y) const { return x != y && bruhat(x, y); }

  // integer height difference ht(x) - ht(y); differences are integral
  // within one carrier even when the heights themselves are halves
  int ht_diff(int x, int y) const {
    const int d = twice_ht[static_cast<size_t>(x)] - twice_ht[static_cast<size_t>(y)];
    if (d % 2 != 0) throw std::logic_error("odd height difference");
    return d / 2;
  }

  bool raises(int s, int x) const { return twice_ht[static_cast<size_t>(act_gen(s, x))] > twice_ht[static_cast<size_t>(x)]; }
  bool lowers(int s, int x) const { return twice_ht[static_cast<size_t>(act_gen(s, x))] < twice_ht[static_cast<size_t>(x)]; }
  bool fixes(int s, int x) const { return act_gen(s, x) == x; }

  // exact height as a display string ("3" or "3/2")
  std::string ht_str(int x) const {
    const int t = twice_ht[static_cast<size_t>(x)];
    if (t % 2 == 0) return std::to_string(t / 2);
    return std::to_string(t) + "/2";
  }

  void build_index() {
    index_.clear();
    for (int i = 0; i < size(); ++i) index_[carrier[static_cast<size_t>(i)].window()] = i;
  }

private:
  std::map<std::vector<int>, int> index_;
};

namespace detail {

// Fills action tables, then the Bruhat order as the transitive closure of
// x < t.x whenever the reflection t raises the height.  The carrier must
// already be sorted by (height, window) with twice_ht aligned.
template <class Action>
inline void finish_qpset(QpSet& X, Action&& act) {
  X.build_index();
  const int m = X.size();
  X.gen_act.assign(static_cast<size_t>(X.gens()), std::vector<int>(static_cast<size_t>(m)));
  for (int s = 1; s <= X.gens(); ++s) {
    const Perm t = Perm::adjacent(X.rank, s);
    for (int i = 0; i < m; ++i)
      X.gen_act[static_cast<size_t>(s) - 1][static_cast<size_t>(i)] = X.index(act(t, X.carrier[static_cast<size_t>(i)]));
  }
  X.reflections.clear();
  for (int i = 1; i <= X.rank; ++i)
    for (int j = i + 1; j <= X.rank; ++j) X.reflections.push_back(Perm::transposition(X.rank, i, j));
  X.refl_act.assign(X.reflections.size(), std::vector<int>(static_cast<size_t>(m)));
  for (size_t t = 0; t < X.reflections.size(); ++t)
    for (int i = 0; i < m; ++i)
      X.refl_act[t][static_cast<size_t>(i)] = X.index(act(X.reflections[t], X.carrier[static_cast<size_t>(i)]));

  X.leq.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  std::vector<std::vector<int>> up(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    X.leq[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (size_t t = 0; t < X.reflections.size(); ++t) {
      const int j = X.refl_act[t][static_cast<size_t>(i)];
      if (X.twice_ht[static_cast<size_t>(j)] > X.twice_ht[static_cast<size_t>(i)])
        up[static_cast<size_t>(i)].push_back(j);
    }
  }
  // closure by DFS from each element
  for (int i = 0; i < m; ++i) {
    std::vector<int> stack = up[static_cast<size_t>(i)];
    while (!stack.empty()) {
      const int j = stack.back();
      stack.pop_back();
      if (X.leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
      X.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
      for (int k : up[static_cast<size_t>(j)]) stack.push_back(k);
    }
  }
}

}  // namespace detail

// Conjugacy class of rep under w.x = w x w^{-1} with ht = l/2.
inline QpSet build_conjugacy_set(int n, const Perm& rep) {
  if (rep.rank() != n) throw std::invalid_argument("rank mismatch");
  QpSet X;
  X.family = QpSet::Family::conjugacy;
  X.rank = n;
  // orbit closure under the generators
  std::map<std::vector<int>, Perm> seen;
  std::vector<Perm> stack{rep};
  seen[rep.window()] = rep;
  while (!stack.empty()) {
    Perm cur = stack.back();
    stack.pop_back();
    for (int s = 1; s < n; ++s) {
      const Perm t = Perm::adjacent(n, s);
      Perm nxt = compose(t, compose(cur, t));
      if (!seen.count(nxt.window())) {
        seen[nxt.window()] = nxt;
        stack.push_back(nxt);
      }
    }
  }
  for (auto& [win, p] : seen) X.carrier.push_back(p);
  std::sort(X.carrier.begin(), X.carrier.end(), [](const Perm& a, const Perm& b) {
    const int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  X.twice_ht.clear();
  for (const Perm& p : X.carrier) X.twice_ht.push_back(p.length());  // 2*(l/2)
  detail::finish_qpset(X, [](const Perm& w, const Perm& x) { return compose(w, compose(x, w.inverse())); });
  return X;
}

// The fixed-point-free involutions of S_n under conjugation, ht = l/2.
inline QpSet build_fpf_set(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("fpf set needs even rank >= 2");
  QpSet X = build_conjugacy_set(n, parabolic_min_fpf(n, {}));
  X.family = QpSet::Family::fpf;
  return X;
}

// W acting on itself by left multiplication, ht = l.
inline QpSet build_regular_set(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  QpSet X;
  X.family = QpSet::Family::regular;
  X.rank = n;
  X.carrier = enumerate_permutations(n);
  std::sort(X.carrier.begin(), X.carrier.end(), [](const Perm& a, const Perm& b) {
    const int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  X.twice_ht.clear();
  for (const Perm& p : X.carrier) X.twice_ht.push_back(2 * p.length());
  detail::finish_qpset(X, [](const Perm& w, const Perm& x) { return compose(w, x); });
  return X;
}

struct QpReport {
  bool holds = true;
  std::vector<std::string> violations;
};

// Exhaustive check of the quasiparabolic axioms:
//   QP1: ht(rx) = ht(x) for a reflection r implies rx = x;
//   QP2: ht(rx) > ht(x) and ht(srx) < ht(sx) implies rx = sx.
inline QpReport check_quasiparabolic(const QpSet& X) {
  QpReport rep;
  const int m = X.size();
  for (size_t t = 0; t < X.reflections.size(); ++t) {
    for (int x = 0; x < m; ++x) {
      const int rx = X.act_refl(static_cast<int>(t), x);
      if (rx != x && X.twice_ht[static_cast<size_t>(rx)] == X.twice_ht[static_cast<size_t>(x)]) {
        rep.holds = false;
        rep.violations.push_back("QP1: r=" + X.reflections[t].str() + " x=" +
                                 X.carrier[static_cast<size_t>(x)].str() + " rx=" +
                                 X.carrier[static_cast<size_t>(rx)].str() + " same height");
      }
    }
  }
  for (size_t t = 0; t < X.reflections.size(); ++t) {
    for (int x = 0; x < m; ++x) {
      const int rx = X.act_refl(static_cast<int>(t), x);
      if (X.twice_ht[static_cast<size_t>(rx)] <= X.twice_ht[static_cast<size_t>(x)]) continue;
      for (int s = 1; s <= X.gens(); ++s) {
        const int sx = X.act_gen(s, x);
        const int srx = X.act_gen(s, rx);
        if (X.twice_ht[static_cast<size_t>(srx)] < X.twice_ht[static_cast<size_t>(sx)] && rx != sx) {
          rep.holds = false;
          rep.violations.push_back("QP2: r=" + X.reflections[t].str() + " x=" +
                                   X.carrier[static_cast<size_t>(x)].str() + " s=s" + std::to_string(s));
        }
      }
    }
  }
  return rep;
}

// x is W-minimal iff no generator lowers it (dually for maximal)
inline std::vector<int> minimal_elements(const QpSet& X) {
  std::vector<int> out;
  for (int x = 0; x < X.size(); ++x) {
    bool minimal = true;
    for (int s = 1; s <= X.gens() && minimal; ++s)
      if (X.lowers(s, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

inline std::vector<int> maximal_elements(const QpSet& X) {
  std::vector<int> out;
  for (int x = 0; x < X.size(); ++x) {
    bool maximal = true;
    for (int s = 1; s <= X.gens() && maximal; ++s)
      if (X.raises(s, x)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

// One w with x = w.x0 and ht(x) = l(w) + ht(x0), by greedy height descent
// from x.  Throws if x cannot be lowered to the given minimal element.
inline Perm transporter(const QpSet& X, int x0, int x) {
  std::vector<int> word;
  int cur = x;
  while (cur != x0) {
    int desc = 0;
    for (int s = 1; s <= X.gens(); ++s)
      if (X.lowers(s, cur)) {
        desc = s;
        break;
      }
    if (desc == 0) throw std::invalid_argument("element not in the orbit of the given minimal element");
    word.push_back(desc);
    cur = X.act_gen(desc, cur);
  }
  // x = s_{word[0]} . (s_{word[1]} . (... . x0)), so w is the product read
  // left to right
  Perm w = Perm::identity(X.rank);
  for (int s : word) w = compose(w, Perm::adjacent(X.rank, s));
  return w;
}

}  // namespace quasicell
