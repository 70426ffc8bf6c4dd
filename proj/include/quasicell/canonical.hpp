#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasicell/hecke_module.hpp"
#include "quasicell/laurent.hpp"
#include "quasicell/poly_matrix.hpp"
#include "quasicell/qpset.hpp"

namespace quasicell {

// Everything attached to one (set, module) pair: the bar-operator matrix r,
// the canonical-basis matrix c (m_{x,y} or n_{x,y}), its inverse (p or q),
// and the mu table.  All matrices are (row, column) = (y, x) for the
// coefficient of standard/canonical element y in column x, unitriangular
// with respect to the Bruhat order on the carrier.
//
// Convention: the r-polynomials are defined through
// bar(M_z) = sum_y bar(r_{y,z}) M_y; we store the plain r_{y,z} and bar on
// read, so r is exactly the matrix produced by the height recursion below.
struct CanonicalData {
  ModuleKind kind = ModuleKind::M;
  const QpSet* set = nullptr;
  PolyMatrix r;
  PolyMatrix c;
  PolyMatrix inv;
  std::vector<std::vector<Int>> mu;  // mu[x][y], coefficient of v^{-1} in c(x,y)

  Int mu_at(int x, int y) const { return mu[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
};

// r_{y,x} by induction on ht(x).  Columns of W-minimal elements are delta;
// otherwise pick any s lowering x and apply the three-case rule, where the
// height-fixed case multiplies by v for M and by -v^{-1} for N.
inline PolyMatrix compute_r(ModuleKind kind, const QpSet& X,
                            bool check_all_descents = false) {
  const int m = X.size();
  PolyMatrix r(m);
  static const LaurentPoly vm = LaurentPoly::v(1) - LaurentPoly::v(-1);
  for (int x = 0; x < m; ++x) {
    std::vector<int> descents;
    for (int s = 1; s <= X.gens(); ++s)
      if (X.lowers(s, x)) descents.push_back(s);
    if (descents.empty()) {
      // W-minimal element; base case of the induction
      r.at(x, x) = LaurentPoly(1);
      continue;
    }
    if (!check_all_descents) descents.resize(1);
    bool first = true;
    for (int s : descents) {
      const int sx = X.act_gen(s, x);
      std::vector<LaurentPoly> col(static_cast<size_t>(m));
      for (int y = 0; y < m; ++y) {
        const int sy = X.act_gen(s, y);
        if (sy == y) {
          col[static_cast<size_t>(y)] = r.at(y, sx);
          if (kind == ModuleKind::M)
            col[static_cast<size_t>(y)].shift_scale(1, 1);
          else
            col[static_cast<size_t>(y)].shift_scale(-1, -1);
        } else if (X.twice_ht[static_cast<size_t>(sy)] < X.twice_ht[static_cast<size_t>(y)]) {
          col[static_cast<size_t>(y)] = r.at(sy, sx);
        } else {
          col[static_cast<size_t>(y)] = r.at(sy, sx) + vm * r.at(y, sx);
        }
      }
      if (first) {
        for (int y = 0; y < m; ++y) r.at(y, x) = std::move(col[static_cast<size_t>(y)]);
        first = false;
      } else {
        for (int y = 0; y < m; ++y)
          if (r.at(y, x) != col[static_cast<size_t>(y)])
            throw std::runtime_error("bar operator not well defined: lowering generators disagree");
      }
    }
  }
  return r;
}

// Recomputes r using every admissible lowering generator at each step and
// reports whether all choices agree.
inline bool check_r_well_defined(ModuleKind kind, const QpSet& X) {
  try {
    compute_r(kind, X, true);
  } catch (const std::runtime_error&) {
    return false;
  }
  return true;
}

inline std::vector<std::vector<Int>> extract_mu(const QpSet& X, const PolyMatrix& c) {
  const int m = X.size();
  std::vector<std::vector<Int>> mu(static_cast<size_t>(m), std::vector<Int>(static_cast<size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) mu[static_cast<size_t>(x)][static_cast<size_t>(y)] = c.at(x, y).coeff(-1);
  return mu;
}

// Unitriangular bar-solve: for each column x, descending over y < x, the
// partial sum alpha = sum_{y<z<=x} bar(r_{y,z}) bar(c_{z,x}) must satisfy
// bar(alpha) = -alpha with no constant term, and c_{y,x} is its negative
// part.  Failure of that condition means the r input is corrupted.
inline PolyMatrix compute_canonical_solve(ModuleKind kind, const QpSet& X, const PolyMatrix& r) {
  (void)kind;
  const int m = X.size();
  PolyMatrix c(m);
  for (int x = 0; x < m; ++x) {
    c.at(x, x) = LaurentPoly(1);
    for (int y = x - 1; y >= 0; --y) {
      if (!X.bruhat(y, x)) continue;
      LaurentPoly alpha;
      for (int z = y + 1; z <= x; ++z) {
        if (!X.bruhat(y, z) || !X.bruhat(z, x)) continue;
        alpha += r.at(y, z).bar() * c.at(z, x).bar();
      }
      if (alpha.bar() != -alpha || alpha.coeff(0) != 0)
        throw std::runtime_error("canonical solve: solvability condition failed at (" +
                                 X.carrier[static_cast<size_t>(y)].str() + ", " +
                                 X.carrier[static_cast<size_t>(x)].str() + ")");
      c.at(y, x) = alpha.negative_part();
    }
  }
  return c;
}

// Independent route to the same matrix, by induction on height via the
// scaled polynomials ~c_{x,y} = v^{ht(y)-ht(x)} c_{x,y}: for s lowering y,
//   M:  ~c_{x,y} = ~c_{x,sy} + v^2 ~c_{sx,sy}          (sx > x)
//              or v^2 ~c_{x,sy} + ~c_{sx,sy}           (sx <= x, sx = x folds in)
//   N:  same in the strict cases but 0 when sx = x,
// minus sum over x <= t < sy with st <= t (M) / st < t (N) of
// mu(t, sy) v^{ht(y)-ht(t)} ~c_{x,t}.
inline PolyMatrix compute_canonical_recurrence(ModuleKind kind, const QpSet& X) {
  const int m = X.size();
  PolyMatrix ct(m);  // scaled matrix
  std::vector<std::vector<Int>> mu(static_cast<size_t>(m), std::vector<Int>(static_cast<size_t>(m)));
  for (int y = 0; y < m; ++y) {
    int sdesc = 0;
    for (int s = 1; s <= X.gens(); ++s)
      if (X.lowers(s, y)) {
        sdesc = s;
        break;
      }
    if (sdesc == 0) {
      ct.at(y, y) = LaurentPoly(1);
      continue;
    }
    const int sy = X.act_gen(sdesc, y);
    for (int x = 0; x < m; ++x) {
      const int sx = X.act_gen(sdesc, x);
      LaurentPoly val;
      if (sx == x) {
        if (kind == ModuleKind::M) {
          LaurentPoly t = ct.at(x, sy);
          t.shift_scale(1, 2);
          val = t + ct.at(x, sy);
        }
        // N: height-fixed input contributes nothing
      } else if (X.twice_ht[static_cast<size_t>(sx)] > X.twice_ht[static_cast<size_t>(x)]) {
        LaurentPoly t = ct.at(sx, sy);
        t.shift_scale(1, 2);
        val = ct.at(x, sy) + t;
      } else {
        LaurentPoly t = ct.at(x, sy);
        t.shift_scale(1, 2);
        val = t + ct.at(sx, sy);
      }
      for (int t = x; t < sy; ++t) {
        if (!X.bruhat(t, sy) || t == sy) continue;
        if (t != x && !X.bruhat(x, t)) continue;
        const int st = X.act_gen(sdesc, t);
        const bool descends = kind == ModuleKind::M
                                  ? X.twice_ht[static_cast<size_t>(st)] <= X.twice_ht[static_cast<size_t>(t)]
                                  : X.twice_ht[static_cast<size_t>(st)] < X.twice_ht[static_cast<size_t>(t)];
        if (!descends) continue;
        const Int mutsy = mu[static_cast<size_t>(t)][static_cast<size_t>(sy)];
        if (mutsy == 0) continue;
        LaurentPoly corr = ct.at(x, t);
        corr.shift_scale(mutsy, X.ht_diff(y, t));
        val -= corr;
      }
      ct.at(x, y) = std::move(val);
    }
    // unscale the new column to harvest its mu values
    for (int x = 0; x < m; ++x) {
      const LaurentPoly& s = ct.at(x, y);
      if (!s.is_zero()) mu[static_cast<size_t>(x)][static_cast<size_t>(y)] = s.coeff(X.ht_diff(y, x) - 1);
    }
  }
  PolyMatrix c(m);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) {
      LaurentPoly t = ct.at(x, y);
      if (!t.is_zero()) t.shift_scale(1, X.ht_diff(x, y));
      c.at(x, y) = std::move(t);
    }
  return c;
}

// Inverse of a unitriangular matrix by back-substitution; the production
// route for the p and q tables.
inline PolyMatrix invert_unitriangular(const QpSet& X, const PolyMatrix& c) {
  const int m = X.size();
  PolyMatrix p(m);
  for (int x = 0; x < m; ++x) {
    p.at(x, x) = LaurentPoly(1);
    for (int y = x - 1; y >= 0; --y) {
      if (!X.bruhat(y, x)) continue;
      LaurentPoly acc;
      for (int z = y + 1; z <= x; ++z) {
        if (!X.bruhat(y, z) || !X.bruhat(z, x)) continue;
        acc += c.at(y, z) * p.at(z, x);
      }
      p.at(y, x) = -acc;
    }
  }
  return p;
}

// Alternating sum over all Bruhat chains x = z_0 < ... < z_k = y of
// (-1)^k c_{z_0,z_1} ... c_{z_{k-1},z_k}.  Exponential; the test oracle for
// small carriers.
inline PolyMatrix invert_by_chains(const QpSet& X, const PolyMatrix& c) {
  const int m = X.size();
  if (m > 15) throw std::invalid_argument("chain-sum inversion is gated to carriers of size <= 15");
  PolyMatrix p(m);
  // plain recursive enumeration, collecting signed products chain by chain
  for (int x = 0; x < m; ++x) {
    p.at(x, x) = LaurentPoly(1);  // the empty chain
    for (int y = x + 1; y < m; ++y) {
      if (!X.bruhat_strict(x, y)) continue;
      LaurentPoly total;
      std::function<void(int, LaurentPoly, int)> rec = [&](int cur, LaurentPoly prod, int sign) {
        if (cur == y) {
          if (sign > 0)
            total += prod;
          else
            total -= prod;
          return;
        }
        for (int z = cur + 1; z <= y; ++z) {
          if (!X.bruhat_strict(cur, z) || !X.bruhat(z, y)) continue;
          rec(z, prod * c.at(cur, z), -sign);
        }
      };
      rec(x, LaurentPoly(1), 1);
      p.at(x, y) = total;
    }
  }
  return p;
}

inline CanonicalData compute_canonical(ModuleKind kind, const QpSet& X) {
  CanonicalData data;
  data.kind = kind;
  data.set = &X;
  data.r = compute_r(kind, X);
  data.c = compute_canonical_solve(kind, X, data.r);
  data.inv = invert_unitriangular(X, data.c);
  data.mu = extract_mu(X, data.c);
  return data;
}

// Standard-basis coordinates of the canonical basis element of x.
inline ModuleVector canonical_vector(const CanonicalData& data, int x) {
  ModuleVector v;
  const int m = data.set->size();
  for (int y = 0; y < m; ++y) v.add(y, data.c.at(y, x));
  return v;
}

// D_x on an arbitrary vector in standard coordinates: D_x(M_z) = p_{x,z}.
inline LaurentPoly dual_functional_pairing(const CanonicalData& data, int x,
                                           const ModuleVector& vec) {
  LaurentPoly out;
  for (const auto& [z, c] : vec.coords) out += data.inv.at(x, z) * c;
  return out;
}

}  // namespace quasicell
