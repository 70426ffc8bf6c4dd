#pragma once

#include <map>

#include "quasicell/laurent.hpp"
#include "quasicell/perm.hpp"
#include "quasicell/qpset.hpp"

namespace quasicell {

// Which of the two deformed permutation modules a computation lives in.
// They differ only in the height-fixed case of the generator action:
// M gets v, N gets -v^{-1}.
enum class ModuleKind { M, N };

inline const char* kind_name(ModuleKind k) { return k == ModuleKind::M ? "m" : "n"; }

// A vector in M(X,ht) or N(X,ht) in standard-basis coordinates, sparse
// over carrier indices.
struct ModuleVector {
  std::map<int, LaurentPoly> coords;

  static ModuleVector basis(int x) {
    ModuleVector v;
    v.coords[x] = LaurentPoly(1);
    return v;
  }

  void add(int x, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coords.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coords.erase(it);
    }
  }

  const LaurentPoly& at(int x) const {
    static const LaurentPoly zero;
    auto it = coords.find(x);
    return it == coords.end() ? zero : it->second;
  }

  bool operator==(const ModuleVector& o) const { return coords == o.coords; }
};

// H_s on the standard basis:
//   raise: M_x -> M_{sx}
//   lower: M_x -> M_{sx} + (v - v^{-1}) M_x
//   fixed: M_x -> v M_x   (N_x -> -v^{-1} N_x)
inline ModuleVector act_Hs(ModuleKind kind, const QpSet& X, int s, const ModuleVector& vec) {
  static const LaurentPoly vm = LaurentPoly::v(1) - LaurentPoly::v(-1);
  ModuleVector out;
  for (const auto& [x, c] : vec.coords) {
    const int sx = X.act_gen(s, x);
    if (sx == x) {
      LaurentPoly t = c;
      if (kind == ModuleKind::M)
        t.shift_scale(1, 1);
      else
        t.shift_scale(-1, -1);
      out.add(x, t);
    } else if (X.twice_ht[static_cast<size_t>(sx)] > X.twice_ht[static_cast<size_t>(x)]) {
      out.add(sx, c);
    } else {
      out.add(sx, c);
      out.add(x, vm * c);
    }
  }
  return out;
}

// H_s^{-1} = H_s + (v^{-1} - v)
inline ModuleVector act_Hs_inverse(ModuleKind kind, const QpSet& X, int s, const ModuleVector& vec) {
  ModuleVector out = act_Hs(kind, X, s, vec);
  const LaurentPoly shift = LaurentPoly::v(-1) - LaurentPoly::v(1);
  for (const auto& [x, c] : vec.coords) out.add(x, shift * c);
  return out;
}

// underline H_s = H_s + v^{-1}
inline ModuleVector act_Hs_kl(ModuleKind kind, const QpSet& X, int s, const ModuleVector& vec) {
  ModuleVector out = act_Hs(kind, X, s, vec);
  for (const auto& [x, c] : vec.coords) {
    LaurentPoly t = c;
    t.shift_scale(1, -1);
    out.add(x, t);
  }
  return out;
}

// H_w along one reduced word of w; the result is word-independent (tested
// via the braid relations).
inline ModuleVector act_Hw(ModuleKind kind, const QpSet& X, const Perm& w, const ModuleVector& vec) {
  if (w.rank() != X.rank) throw std::invalid_argument("rank mismatch in act_Hw");
  const std::vector<int> word = reduced_word(w);
  ModuleVector cur = vec;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_Hs(kind, X, *it, cur);
  return cur;
}

}  // namespace quasicell
