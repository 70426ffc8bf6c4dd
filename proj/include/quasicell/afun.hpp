#pragma once

#include <iostream>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "quasicell/canonical.hpp"
#include "quasicell/kl.hpp"
#include "quasicell/poly_matrix.hpp"
#include "quasicell/qpset.hpp"
#include "quasicell/util.hpp"
#include "quasicell/wgraph.hpp"

namespace quasicell {

// Structure coefficients of the KL-basis elements of H acting on one
// module: per w, the operator on the standard basis (f), mixed basis (f'),
// and canonical basis (h), all as (input row, output column) matrices; the
// bound B; the a-function; and the sparse leading coefficients gamma.
// The same three tables serve both kinds (g, g', h' in the usual notation
// for kind N); only the seed actions differ.
struct StructCoeffTables {
  ModuleKind kind = ModuleKind::M;
  const QpSet* set = nullptr;
  const KLTable* kl = nullptr;
  std::vector<PolyMatrix> f;
  std::vector<PolyMatrix> fprime;
  std::vector<PolyMatrix> h;
  int bound_B = 0;
  std::vector<int> a;                                   // per carrier element
  std::vector<std::tuple<int, int, int, Int>> gamma;    // (w, y, z, coeff at v^{a(z)})
  bool change_of_basis_ok = false;

  // largest h-degree seen for each (y, z), so both readings of the
  // quantifier in the a-definition can be recovered from debug output
  std::vector<std::vector<int>> per_yz_max;  // -1 marks no nonzero entry
};

namespace detail {

// one seed operator per generator
inline PolyMatrix seed_standard(ModuleKind kind, const QpSet& X, int s) {
  const int m = X.size();
  PolyMatrix op(m);
  for (int x = 0; x < m; ++x) {
    const int sx = X.act_gen(s, x);
    if (sx == x) {
      if (kind == ModuleKind::M) op.at(x, x) = LaurentPoly::v(1) + LaurentPoly::v(-1);
      // N: H_s + v^{-1} kills a height-fixed basis element
    } else if (X.twice_ht[static_cast<size_t>(sx)] > X.twice_ht[static_cast<size_t>(x)]) {
      op.at(x, sx) = LaurentPoly(1);
      op.at(x, x) = LaurentPoly::v(-1);
    } else {
      op.at(x, sx) = LaurentPoly(1);
      op.at(x, x) = LaurentPoly::v(1);
    }
  }
  return op;
}

inline PolyMatrix seed_canonical(ModuleKind kind, const QpSet& X, const CanonicalData& data, int s) {
  const int m = X.size();
  PolyMatrix op(m);
  for (int x = 0; x < m; ++x) {
    const int sx = X.act_gen(s, x);
    const bool raise = X.twice_ht[static_cast<size_t>(sx)] > X.twice_ht[static_cast<size_t>(x)];
    if (kind == ModuleKind::M) {
      if (!raise) {
        op.at(x, x) = LaurentPoly::v(1) + LaurentPoly::v(-1);
      } else {
        op.at(x, sx) = LaurentPoly(1);
        for (int w = 0; w < m; ++w) {
          if (!X.bruhat_strict(w, x)) continue;
          const int sw = X.act_gen(s, w);
          if (X.twice_ht[static_cast<size_t>(sw)] > X.twice_ht[static_cast<size_t>(w)]) continue;
          const Int mu = data.mu_at(w, x);
          if (mu != 0) op.at(x, w) = LaurentPoly(mu);
        }
      }
    } else {
      if (sx != x && !raise) {
        op.at(x, x) = LaurentPoly::v(1) + LaurentPoly::v(-1);
      } else {
        if (raise) op.at(x, sx) = LaurentPoly(1);
        for (int w = 0; w < m; ++w) {
          if (!X.bruhat_strict(w, x)) continue;
          const int sw = X.act_gen(s, w);
          if (X.twice_ht[static_cast<size_t>(sw)] >= X.twice_ht[static_cast<size_t>(w)]) continue;
          const Int mu = data.mu_at(w, x);
          if (mu != 0) op.at(x, w) = LaurentPoly(mu);
        }
      }
    }
  }
  return op;
}

// all operators of underline H_w on a fixed basis, by the KL product
// recursion over the weak order, parallel within each length level
inline std::vector<PolyMatrix> all_operators(const KLTable& T, const std::vector<PolyMatrix>& seeds,
                                             int jobs) {
  const int N = T.size();
  std::vector<PolyMatrix> op(static_cast<size_t>(N));
  op[0] = PolyMatrix::identity(seeds.front().n);
  int level_start = 1;
  while (level_start < N) {
    const int len = T.length_of[static_cast<size_t>(level_start)];
    int level_end = level_start;
    while (level_end < N && T.length_of[static_cast<size_t>(level_end)] == len) ++level_end;
    parallel_for(level_end - level_start, jobs, [&](int k) {
      const int w = level_start + k;
      const Perm& pw = T.elements[static_cast<size_t>(w)];
      const int s = left_descents(pw).front();
      const int y = T.index(apply_s_left(s, pw));
      PolyMatrix cur = op[static_cast<size_t>(y)] * seeds[static_cast<size_t>(s) - 1];
      for (const auto& [z, muz] : T.mu_of[static_cast<size_t>(y)])
        if (has_left_descent(T.elements[static_cast<size_t>(z)], s))
          cur.sub_scaled(op[static_cast<size_t>(z)], muz);
      op[static_cast<size_t>(w)] = std::move(cur);
    });
    level_start = level_end;
  }
  return op;
}

}  // namespace detail

// Computes every operator family and the derived a-data.  The per-w
// recursion needs the classical KL mu table of W, so kl must match the
// rank of X.
inline StructCoeffTables compute_struct_coeffs(ModuleKind kind, const QpSet& X,
                                               const CanonicalData& data, const KLTable& kl,
                                               int jobs = 1) {
  if (kl.n != X.rank) throw std::invalid_argument("KL table rank does not match the carrier");
  if (data.kind != kind) throw std::invalid_argument("canonical data kind mismatch");
  StructCoeffTables t;
  t.kind = kind;
  t.set = &X;
  t.kl = &kl;
  const int m = X.size();
  const int N = kl.size();

  std::vector<PolyMatrix> std_seeds, can_seeds;
  for (int s = 1; s <= X.gens(); ++s) {
    std_seeds.push_back(detail::seed_standard(kind, X, s));
    can_seeds.push_back(detail::seed_canonical(kind, X, data, s));
  }
  t.f = detail::all_operators(kl, std_seeds, jobs);
  t.h = detail::all_operators(kl, can_seeds, jobs);

  const PolyMatrix pT = data.inv.transpose();
  const PolyMatrix cT = data.c.transpose();
  t.fprime.resize(static_cast<size_t>(N));
  std::vector<char> cob_ok(static_cast<size_t>(N), 0);
  parallel_for(N, jobs, [&](int w) {
    t.fprime[static_cast<size_t>(w)] = t.f[static_cast<size_t>(w)] * pT;
    cob_ok[static_cast<size_t>(w)] =
        (cT * t.fprime[static_cast<size_t>(w)] == t.h[static_cast<size_t>(w)]) ? 1 : 0;
  });
  t.change_of_basis_ok = true;
  for (char ok : cob_ok)
    if (!ok) t.change_of_basis_ok = false;

  t.bound_B = 0;
  for (const PolyMatrix& fw : t.f)
    for (const LaurentPoly& p : fw.a)
      if (!p.is_zero() && p.degree() > t.bound_B) t.bound_B = p.degree();

  t.a.assign(static_cast<size_t>(m), 0);
  t.per_yz_max.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), -1));
  for (int w = 0; w < N; ++w) {
    const PolyMatrix& hw = t.h[static_cast<size_t>(w)];
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        const LaurentPoly& p = hw.at(y, z);
        if (p.is_zero()) continue;
        const int d = p.degree();
        auto& yz = t.per_yz_max[static_cast<size_t>(y)][static_cast<size_t>(z)];
        if (d > yz) yz = d;
        if (d > t.a[static_cast<size_t>(z)]) t.a[static_cast<size_t>(z)] = d;
      }
  }
  for (int w = 0; w < N; ++w) {
    const PolyMatrix& hw = t.h[static_cast<size_t>(w)];
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        const Int g = hw.at(y, z).coeff(t.a[static_cast<size_t>(z)]);
        if (g != 0) t.gamma.emplace_back(w, y, z, g);
      }
  }
  return t;
}

inline int compute_bound(const StructCoeffTables& t) { return t.bound_B; }

inline const std::vector<int>& compute_a(const StructCoeffTables& t) { return t.a; }

// For every graph arrow x -> x' with a(x) = a(x'), the conjectures predict
// x and x' share a cell.  This only ever reports; it never asserts.
struct ConjectureReport {
  std::vector<std::pair<int, int>> counterexamples;
  bool clean() const { return counterexamples.empty(); }
};

inline ConjectureReport probe_conjectures(const LabeledGraph& g,
                                          const std::vector<std::vector<int>>& cell_partition,
                                          const std::vector<int>& a) {
  ConjectureReport rep;
  const int n = g.size();
  std::vector<int> cell_of(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < cell_partition.size(); ++c)
    for (int x : cell_partition[c]) cell_of[static_cast<size_t>(x)] = static_cast<int>(c);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || g.weight(x, y) == 0) continue;
      if (a[static_cast<size_t>(x)] != a[static_cast<size_t>(y)]) continue;
      if (cell_of[static_cast<size_t>(x)] != cell_of[static_cast<size_t>(y)])
        rep.counterexamples.emplace_back(x, y);
    }
  return rep;
}

}  // namespace quasicell
