#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quasicell/afun.hpp"
#include "quasicell/canonical.hpp"
#include "quasicell/hecke_module.hpp"
#include "quasicell/kl.hpp"
#include "quasicell/qpset.hpp"
#include "quasicell/tableau.hpp"
#include "quasicell/wgraph.hpp"

namespace quasicell {

struct VerifyLine {
  enum class Status { pass, warn, fail };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;

  void add(VerifyLine::Status st, std::string name, std::string detail = "") {
    lines.push_back({std::move(name), st, std::move(detail)});
  }
  void check(bool ok, const std::string& name, const std::string& on_fail = "") {
    add(ok ? VerifyLine::Status::pass : VerifyLine::Status::fail, name, ok ? "" : on_fail);
  }
  void observe(bool clean, const std::string& name, const std::string& note) {
    add(clean ? VerifyLine::Status::pass : VerifyLine::Status::warn, name, note);
  }
  bool ok() const {
    for (const auto& l : lines)
      if (l.status == VerifyLine::Status::fail) return false;
    return true;
  }
  void merge(const VerifyReport& o) { lines.insert(lines.end(), o.lines.begin(), o.lines.end()); }
};

// --- shared artifact bundles ------------------------------------------------

struct FpfArtifacts {
  QpSet X;
  CanonicalData can_m, can_n;
  LabeledGraph g_m, g_n;
  std::vector<std::vector<int>> cells_m, cells_n, mol_m, mol_n;
  StructCoeffTables tab_m, tab_n;
  bool have_tables = false;
};

// canonical bases, graphs and partitions; everything criterion-scale except
// the structure-coefficient tables
inline FpfArtifacts build_fpf_core(int n) {
  FpfArtifacts art;
  art.X = build_fpf_set(n);
  art.can_m = compute_canonical(ModuleKind::M, art.X);
  art.can_n = compute_canonical(ModuleKind::N, art.X);
  art.g_m = build_graph(ModuleKind::M, art.X, art.can_m);
  art.g_n = build_graph(ModuleKind::N, art.X, art.can_n);
  art.g_m.set = &art.X;
  art.g_n.set = &art.X;
  art.can_m.set = &art.X;
  art.can_n.set = &art.X;
  art.cells_m = cells(art.g_m);
  art.cells_n = cells(art.g_n);
  art.mol_m = molecules(art.g_m);
  art.mol_n = molecules(art.g_n);
  return art;
}

inline void add_struct_tables(FpfArtifacts& art, const KLTable& kl, int jobs) {
  art.tab_m = compute_struct_coeffs(ModuleKind::M, art.X, art.can_m, kl, jobs);
  art.tab_n = compute_struct_coeffs(ModuleKind::N, art.X, art.can_n, kl, jobs);
  art.have_tables = true;
}

// partition of carrier indices by a key map, normalized the same way the
// cell/molecule partitions are (blocks by least member)
template <class Key>
inline std::vector<std::vector<int>> fibers(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> by_key;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) by_key[keys[static_cast<size_t>(i)]].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [k, block] : by_key) out.push_back(std::move(block));
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return out;
}

inline std::string partition_str(const std::vector<std::vector<int>>& part, const QpSet& X) {
  std::string out;
  for (const auto& block : part) {
    out += '{';
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ' ';
      out += X.carrier[static_cast<size_t>(block[i])].str();
    }
    out += "} ";
  }
  return out;
}

// --- module-level invariants ------------------------------------------------

namespace checks {

inline void module_relations(VerifyReport& rep, const QpSet& X, const std::string& tag) {
  static const LaurentPoly vm = LaurentPoly::v(1) - LaurentPoly::v(-1);
  for (ModuleKind kind : {ModuleKind::M, ModuleKind::N}) {
    bool quad = true, braid = true, invertible = true, word_indep = true;
    for (int x = 0; x < X.size(); ++x) {
      const ModuleVector base = ModuleVector::basis(x);
      for (int s = 1; s <= X.gens(); ++s) {
        const ModuleVector once = act_Hs(kind, X, s, base);
        ModuleVector twice = act_Hs(kind, X, s, once);
        // H_s^2 = (v - v^{-1}) H_s + 1
        ModuleVector rhs = base;
        for (const auto& [i, c] : once.coords) rhs.add(i, vm * c);
        if (!(twice == rhs)) quad = false;
        ModuleVector undone = act_Hs_inverse(kind, X, s, once);
        if (!(undone == base)) invertible = false;
      }
      for (int s = 1; s + 1 <= X.gens(); ++s) {
        const int t = s + 1;
        ModuleVector lhs = act_Hs(kind, X, s, act_Hs(kind, X, t, act_Hs(kind, X, s, base)));
        ModuleVector rhs = act_Hs(kind, X, t, act_Hs(kind, X, s, act_Hs(kind, X, t, base)));
        if (!(lhs == rhs)) braid = false;
      }
      for (int s = 1; s <= X.gens(); ++s)
        for (int t = s + 2; t <= X.gens(); ++t) {
          ModuleVector lhs = act_Hs(kind, X, s, act_Hs(kind, X, t, base));
          ModuleVector rhs = act_Hs(kind, X, t, act_Hs(kind, X, s, base));
          if (!(lhs == rhs)) braid = false;
        }
      // both reduced words of the length-3 braid element act identically
      if (X.gens() >= 2) {
        for (int s = 1; s + 1 <= X.gens(); ++s) {
          const Perm w =
              compose(Perm::adjacent(X.rank, s),
                      compose(Perm::adjacent(X.rank, s + 1), Perm::adjacent(X.rank, s)));
          ModuleVector via_word = act_Hw(kind, X, w, base);
          ModuleVector direct = act_Hs(kind, X, s + 1, act_Hs(kind, X, s, act_Hs(kind, X, s + 1, base)));
          if (!(via_word == direct)) word_indep = false;
        }
      }
    }
    const std::string k = kind_name(kind);
    rep.check(quad, tag + ".module." + k + ".quadratic");
    rep.check(braid, tag + ".module." + k + ".braid");
    rep.check(invertible, tag + ".module." + k + ".inverse");
    rep.check(word_indep, tag + ".module." + k + ".word_independence");
  }
}

inline void bruhat_z_property(VerifyReport& rep, const QpSet& X, const std::string& tag) {
  bool ok = true;
  for (int x = 0; x < X.size() && ok; ++x)
    for (int y = 0; y < X.size() && ok; ++y) {
      if (!X.bruhat(x, y)) continue;
      for (int s = 1; s <= X.gens(); ++s) {
        const int sy = X.act_gen(s, y);
        const int sx = X.act_gen(s, x);
        if (X.bruhat(sy, y) && !X.bruhat(sx, y)) ok = false;
        if (X.bruhat(x, sx) && !X.bruhat(x, sy)) ok = false;
      }
    }
  rep.check(ok, tag + ".bruhat.z_property");
}

inline void transporter_check(VerifyReport& rep, const QpSet& X, const std::string& tag) {
  const auto mins = minimal_elements(X);
  if (mins.size() != 1) {
    rep.check(false, tag + ".transporter", "carrier does not have a unique minimal element");
    return;
  }
  const int x0 = mins.front();
  bool ok = true;
  for (int x = 0; x < X.size(); ++x) {
    const Perm w = transporter(X, x0, x);
    Perm moved = X.carrier[static_cast<size_t>(x0)];
    if (X.family == QpSet::Family::regular)
      moved = compose(w, moved);
    else
      moved = compose(w, compose(moved, w.inverse()));
    if (!(moved == X.carrier[static_cast<size_t>(x)])) ok = false;
    if (w.length() != X.ht_diff(x, x0)) ok = false;
  }
  rep.check(ok, tag + ".transporter");
}

inline void r_invariants(VerifyReport& rep, const QpSet& X, const CanonicalData& data,
                         const std::string& tag) {
  const std::string k = kind_name(data.kind);
  rep.check(check_r_well_defined(data.kind, X), tag + ".r." + k + ".well_defined");
  PolyMatrix prod = data.r.bar_entrywise() * data.r;
  rep.check(prod.is_identity(), tag + ".r." + k + ".involution_identity");
  // Kind M has monic leading term v^{ht(x)-ht(y)} on comparable pairs.
  // For kind N the height-fixed recursion step multiplies by -v^{-1} and
  // lowers the degree (r^n_{2143,4321} = v^-2-1 already at rank 4), so only
  // the degree bound and the parity statement survive there.
  bool leading = true, parity = true, triangular = true;
  for (int y = 0; y < X.size(); ++y)
    for (int x = 0; x < X.size(); ++x) {
      const LaurentPoly& p = data.r.at(y, x);
      if (!X.bruhat(y, x)) {
        if (!p.is_zero()) triangular = false;
        continue;
      }
      const int d = X.ht_diff(x, y);
      if (data.kind == ModuleKind::M) {
        if (p.is_zero() || p.degree() != d || p.coeff(d) != 1) leading = false;
      } else {
        if (!p.degree_at_most(d)) leading = false;
      }
      if (!p.exponents_congruent(d)) parity = false;
    }
  rep.check(triangular, tag + ".r." + k + ".triangular");
  rep.check(leading, tag + ".r." + k + (data.kind == ModuleKind::M ? ".leading_term" : ".degree_bound"));
  rep.check(parity, tag + ".r." + k + ".parity");
}

inline void canonical_invariants(VerifyReport& rep, const QpSet& X, const CanonicalData& data,
                                 const std::string& tag) {
  const std::string k = kind_name(data.kind);
  const int m = X.size();
  bool tri = true, neg = true, barinv = true, parity = true, mu_even = true;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const LaurentPoly& p = data.c.at(y, x);
      if (y == x) {
        if (p != LaurentPoly(1)) tri = false;
        continue;
      }
      if (!X.bruhat_strict(y, x)) {
        if (!p.is_zero()) tri = false;
        continue;
      }
      if (!p.degree_at_most(-1)) neg = false;
      // scaled entry v^{ht(x)-ht(y)} c_{y,x}: in 1 + v^2 Z[v^2] for kind M,
      // in Z[v^2] for kind N
      LaurentPoly scaled = p;
      if (!scaled.is_zero()) scaled.shift_scale(1, X.ht_diff(x, y));
      if (data.kind == ModuleKind::M) {
        if (scaled.coeff(0) != 1 || !scaled.valuation_at_least(0) || !scaled.exponents_congruent(0))
          parity = false;
      } else {
        if (!scaled.is_zero() &&
            (!scaled.valuation_at_least(0) || !scaled.exponents_congruent(0)))
          parity = false;
      }
      if (X.ht_diff(x, y) % 2 == 0 && data.mu_at(y, x) != 0) mu_even = false;
    }
    // bar invariance: c_{z,x} = sum_y bar(r_{z,y}) bar(c_{y,x})
    for (int z = 0; z < m; ++z) {
      LaurentPoly acc;
      for (int y = 0; y < m; ++y) {
        const LaurentPoly& ry = data.r.at(z, y);
        const LaurentPoly& cy = data.c.at(y, x);
        if (ry.is_zero() || cy.is_zero()) continue;
        acc += ry.bar() * cy.bar();
      }
      if (acc != data.c.at(z, x)) barinv = false;
    }
  }
  rep.check(tri, tag + ".canonical." + k + ".unitriangular");
  rep.check(neg, tag + ".canonical." + k + ".offdiag_in_v_inv");
  rep.check(barinv, tag + ".canonical." + k + ".bar_invariant");
  rep.check(parity, tag + ".canonical." + k + ".parity");
  rep.check(mu_even, tag + ".canonical." + k + ".mu_vanishes_even_gap");

  rep.check(compute_canonical_recurrence(data.kind, X) == data.c,
            tag + ".canonical." + k + ".solve_equals_recurrence");

  // mu characterization
  bool mu_char = true;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (!X.bruhat_strict(x, y)) continue;
      for (int s = 1; s <= X.gens(); ++s) {
        const int sy = X.act_gen(s, y);
        const int sx = X.act_gen(s, x);
        const bool hyp = data.kind == ModuleKind::M
                             ? (X.twice_ht[static_cast<size_t>(sy)] <= X.twice_ht[static_cast<size_t>(y)] &&
                                X.twice_ht[static_cast<size_t>(sx)] > X.twice_ht[static_cast<size_t>(x)])
                             : (X.twice_ht[static_cast<size_t>(sy)] < X.twice_ht[static_cast<size_t>(y)] &&
                                X.twice_ht[static_cast<size_t>(sx)] >= X.twice_ht[static_cast<size_t>(x)]);
        if (!hyp) continue;
        const Int expected = (sx == y) ? 1 : 0;
        if (data.mu_at(x, y) != expected) mu_char = false;
      }
    }
  rep.check(mu_char, tag + ".canonical." + k + ".mu_characterization");

  // inversion
  rep.check((data.inv * data.c).is_identity() && (data.c * data.inv).is_identity(),
            tag + ".canonical." + k + ".inverse_identity");
  bool inv_neg = true;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && !data.inv.at(x, y).degree_at_most(-1)) inv_neg = false;
  rep.check(inv_neg, tag + ".canonical." + k + ".inverse_offdiag_in_v_inv");
  if (m <= 15)
    rep.check(invert_by_chains(X, data.c) == data.inv,
              tag + ".canonical." + k + ".inverse_equals_chain_sum");

  // dual functionals: delta property, then the H_s expansion
  bool delta_ok = true;
  for (int x = 0; x < m && delta_ok; ++x) {
    for (int z = 0; z < m; ++z) {
      const LaurentPoly val = dual_functional_pairing(data, x, canonical_vector(data, z));
      if (val != LaurentPoly(x == z ? 1 : 0)) delta_ok = false;
    }
  }
  rep.check(delta_ok, tag + ".canonical." + k + ".dual_delta");

  bool dual_hs = true;
  for (int x = 0; x < m; ++x)
    for (int s = 1; s <= X.gens(); ++s)
      for (int y = 0; y < m; ++y) {
        const LaurentPoly lhs =
            dual_functional_pairing(data, x, act_Hs_kl(data.kind, X, s, canonical_vector(data, y)));
        // expansion forced by the module multiplication formula
        const int sx = X.act_gen(s, x);
        LaurentPoly rhs;
        const bool active = data.kind == ModuleKind::M
                                ? X.twice_ht[static_cast<size_t>(sx)] <= X.twice_ht[static_cast<size_t>(x)]
                                : X.twice_ht[static_cast<size_t>(sx)] < X.twice_ht[static_cast<size_t>(x)];
        if (active) {
          if (x == y) rhs += LaurentPoly::v(1) + LaurentPoly::v(-1);
          if (sx != x && sx == y) rhs += LaurentPoly(1);
          if (X.bruhat_strict(x, y)) {
            const int sy = X.act_gen(s, y);
            const bool in_range =
                data.kind == ModuleKind::M
                    ? X.twice_ht[static_cast<size_t>(sy)] > X.twice_ht[static_cast<size_t>(y)]
                    : X.twice_ht[static_cast<size_t>(sy)] >= X.twice_ht[static_cast<size_t>(y)];
            if (in_range) rhs += LaurentPoly(data.mu_at(x, y));
          }
        }
        if (lhs != rhs) dual_hs = false;
      }
  rep.check(dual_hs, tag + ".canonical." + k + ".dual_Hs_expansion");

  // the multiplication formula itself: the canonical seed matrix equals
  // the module action re-expressed in the canonical basis
  bool mult_ok = true;
  for (int s = 1; s <= X.gens(); ++s) {
    const PolyMatrix seed = detail::seed_canonical(data.kind, X, data, s);
    for (int x = 0; x < m; ++x) {
      const ModuleVector image = act_Hs_kl(data.kind, X, s, canonical_vector(data, x));
      for (int z = 0; z < m; ++z) {
        if (dual_functional_pairing(data, z, image) != seed.at(x, z)) mult_ok = false;
      }
    }
  }
  rep.check(mult_ok, tag + ".canonical." + k + ".Hs_multiplication_formula");
}

inline void graph_checks(VerifyReport& rep, const FpfArtifacts& art, ModuleKind kind,
                         const std::string& tag) {
  const QpSet& X = art.X;
  const LabeledGraph& g = kind == ModuleKind::M ? art.g_m : art.g_n;
  const CanonicalData& data = kind == ModuleKind::M ? art.can_m : art.can_n;
  const auto& cell_part = kind == ModuleKind::M ? art.cells_m : art.cells_n;
  const auto& mol_part = kind == ModuleKind::M ? art.mol_m : art.mol_n;
  const std::string k = kind_name(kind);

  CheckReport adm = check_quasi_admissible(g);
  rep.check(adm.ok, tag + ".wgraph." + k + ".quasi_admissible",
            adm.issues.empty() ? "" : adm.issues.front());
  CheckReport axiom = check_wgraph_axiom(g);
  rep.check(axiom.ok, tag + ".wgraph." + k + ".axiom",
            axiom.issues.empty() ? "" : axiom.issues.front());

  bool arrows = true, tau_obstruction = true;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y) {
      if (x == y) continue;
      const bool module_arrow = arrow_via_module(kind, X, data, x, y);
      if (module_arrow != (g.weight(x, y) != 0)) arrows = false;
      if (module_arrow) {
        const auto& tx = g.tau[static_cast<size_t>(x)];
        const auto& ty = g.tau[static_cast<size_t>(y)];
        if (std::includes(ty.begin(), ty.end(), tx.begin(), tx.end())) tau_obstruction = false;
      }
    }
  rep.check(arrows, tag + ".wgraph." + k + ".arrow_definitions_agree");
  rep.check(tau_obstruction, tag + ".wgraph." + k + ".tau_obstruction");

  // every molecule sits inside one cell
  std::vector<int> cell_of(static_cast<size_t>(X.size()), -1);
  for (size_t c = 0; c < cell_part.size(); ++c)
    for (int x : cell_part[c]) cell_of[static_cast<size_t>(x)] = static_cast<int>(c);
  bool refine = true;
  for (const auto& mol : mol_part)
    for (int x : mol)
      if (cell_of[static_cast<size_t>(x)] != cell_of[static_cast<size_t>(mol.front())]) refine = false;
  rep.check(refine, tag + ".wgraph." + k + ".molecule_inside_cell");
}

inline void afun_checks(VerifyReport& rep, const FpfArtifacts& art, ModuleKind kind,
                        const std::string& tag) {
  const QpSet& X = art.X;
  const StructCoeffTables& t = kind == ModuleKind::M ? art.tab_m : art.tab_n;
  const LabeledGraph& g = kind == ModuleKind::M ? art.g_m : art.g_n;
  const auto& cell_part = kind == ModuleKind::M ? art.cells_m : art.cells_n;
  const std::string k = kind_name(kind);
  const int m = X.size();
  const int N = t.kl->size();

  rep.check(t.change_of_basis_ok, tag + ".afun." + k + ".change_of_basis");

  bool deg_ok = true;
  for (int w = 0; w < N && deg_ok; ++w) {
    for (const LaurentPoly& p : t.fprime[static_cast<size_t>(w)].a)
      if (!p.degree_at_most(t.bound_B)) deg_ok = false;
    for (const LaurentPoly& p : t.h[static_cast<size_t>(w)].a)
      if (!p.degree_at_most(t.bound_B)) deg_ok = false;
  }
  rep.check(deg_ok, tag + ".afun." + k + ".degrees_bounded_by_B");

  bool a_le_B = true;
  for (int z = 0; z < m; ++z)
    if (t.a[static_cast<size_t>(z)] > t.bound_B || t.a[static_cast<size_t>(z)] < 0) a_le_B = false;
  rep.check(a_le_B, tag + ".afun." + k + ".a_within_bound");

  // leading-term transfer: f' agrees with gamma v^{a(z)} above v^{a(z)-1}
  bool transfer = true;
  for (int w = 0; w < N && transfer; ++w)
    for (int y = 0; y < m && transfer; ++y)
      for (int z = 0; z < m; ++z) {
        const LaurentPoly& fp = t.fprime[static_cast<size_t>(w)].at(y, z);
        const int az = t.a[static_cast<size_t>(z)];
        if (!fp.degree_at_most(az)) {
          transfer = false;
          break;
        }
        if (fp.coeff(az) != t.h[static_cast<size_t>(w)].at(y, z).coeff(az)) {
          transfer = false;
          break;
        }
      }
  rep.check(transfer, tag + ".afun." + k + ".leading_term_transfer");

  bool desc = true;
  for (int x = 0; x < m; ++x) {
    int count = 0;
    for (int s = 1; s <= X.gens(); ++s) {
      const bool in_des = kind == ModuleKind::M ? !X.raises(s, x) : X.lowers(s, x);
      if (in_des) ++count;
    }
    if (t.a[static_cast<size_t>(x)] < count) desc = false;
  }
  rep.check(desc, tag + ".afun." + k + ".descent_lower_bound");

  const int lw0 = X.rank * (X.rank - 1) / 2;
  bool extremes = true;
  if (kind == ModuleKind::M) {
    for (int x : maximal_elements(X))
      if (t.a[static_cast<size_t>(x)] != lw0) extremes = false;
    const auto maxs = maximal_elements(X);
    for (int z = 0; z < m; ++z)
      if (std::find(maxs.begin(), maxs.end(), z) == maxs.end() &&
          t.a[static_cast<size_t>(z)] >= lw0)
        extremes = false;
    const auto mins = minimal_elements(X);
    for (int z = 0; z < m; ++z)
      if (t.a[static_cast<size_t>(z)] < t.a[static_cast<size_t>(mins.front())]) extremes = false;
  } else {
    const auto mins = minimal_elements(X);
    for (int x : mins)
      if (t.a[static_cast<size_t>(x)] != 0) extremes = false;
    for (int z = 0; z < m; ++z)
      if (std::find(mins.begin(), mins.end(), z) == mins.end() && t.a[static_cast<size_t>(z)] <= 0)
        extremes = false;
  }
  rep.check(extremes, tag + ".afun." + k + ".extreme_values");

  // a weakly decreases along m-arrows; the n-arrow convention points the
  // other way (input to output), so a' weakly increases along n-arrows
  bool monotonic = true;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || g.weight(x, y) == 0) continue;
      const bool bad = kind == ModuleKind::M
                           ? t.a[static_cast<size_t>(y)] > t.a[static_cast<size_t>(x)]
                           : t.a[static_cast<size_t>(y)] < t.a[static_cast<size_t>(x)];
      if (bad) monotonic = false;
    }
  rep.check(monotonic, tag + ".afun." + k + ".monotone_along_arrows");

  bool constant = true;
  for (const auto& cell : cell_part)
    for (int x : cell)
      if (t.a[static_cast<size_t>(x)] != t.a[static_cast<size_t>(cell.front())]) constant = false;
  rep.check(constant, tag + ".afun." + k + ".constant_on_cells");

  // support respects the preorder: a nonzero h^w_{y,z} needs a path of
  // arrows from z to y for kind M (coefficient index to input index); the
  // reversed n-arrows make it y to z for kind N
  std::vector<std::vector<char>> reach(static_cast<size_t>(m),
                                       std::vector<char>(static_cast<size_t>(m), 0));
  for (int x = 0; x < m; ++x) {
    reach[static_cast<size_t>(x)][static_cast<size_t>(x)] = 1;
    std::vector<int> stack{x};
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int y2 = 0; y2 < m; ++y2)
        if (c != y2 && g.weight(c, y2) != 0 && !reach[static_cast<size_t>(x)][static_cast<size_t>(y2)]) {
          reach[static_cast<size_t>(x)][static_cast<size_t>(y2)] = 1;
          stack.push_back(y2);
        }
    }
  }
  bool support = true;
  for (int w = 0; w < N && support; ++w)
    for (int y = 0; y < m && support; ++y)
      for (int z = 0; z < m; ++z) {
        if (t.h[static_cast<size_t>(w)].at(y, z).is_zero()) continue;
        const bool reachable = kind == ModuleKind::M
                                   ? reach[static_cast<size_t>(z)][static_cast<size_t>(y)] != 0
                                   : reach[static_cast<size_t>(y)][static_cast<size_t>(z)] != 0;
        if (!reachable) {
          support = false;
          break;
        }
      }
  rep.check(support, tag + ".afun." + k + ".support_respects_preorder");

  // observation, not an assertion: nonnegativity of h-coefficients
  bool nonneg = true;
  for (int w = 0; w < N && nonneg; ++w)
    for (const LaurentPoly& p : t.h[static_cast<size_t>(w)].a) {
      for (const auto& [e, c] : p.terms())
        if (c < 0) nonneg = false;
      if (!nonneg) break;
    }
  rep.observe(nonneg, tag + ".afun." + k + ".h_nonnegative_observed",
              nonneg ? "all h-coefficients nonnegative" : "negative h-coefficient found");

  const ConjectureReport probe = probe_conjectures(g, cell_part, t.a);
  std::string note = "no counterexample";
  if (!probe.clean()) {
    note = "counterexamples:";
    for (auto [x, y] : probe.counterexamples)
      note += ' ' + X.carrier[static_cast<size_t>(x)].str() + "->" + X.carrier[static_cast<size_t>(y)].str();
  }
  rep.observe(probe.clean(), tag + ".afun." + k + ".conjecture_probe", note);
}

inline void insertion_checks(VerifyReport& rep, const FpfArtifacts& art, const std::string& tag) {
  const QpSet& X = art.X;
  const int n = X.rank;

  // Beissinger: row insertion of an involution matches full RSK
  bool beissinger = true;
  for (const Perm& z : enumerate_permutations(n)) {
    if (!z.is_involution()) continue;
    auto [P, Q] = rsk_full(z);
    if (!(P == Q) || !(p_rbs(z) == P)) beissinger = false;
  }
  rep.check(beissinger, tag + ".insertion.beissinger_row_equals_rsk");

  std::vector<std::vector<int>> rbs_shapes, cbs_shapes;
  std::vector<int> A_rbs, A_cbs;
  bool rbs_cols_even = true, cbs_rows_even = true, cbs_cols_even = true;
  for (const Perm& z : X.carrier) {
    const Tableau pr = p_rbs(z), pc = p_cbs(z);
    rbs_shapes.push_back(pr.shape());
    cbs_shapes.push_back(pc.shape());
    A_rbs.push_back(stat_A(pr));
    A_cbs.push_back(stat_A(pc));
    for (int c : pr.column_lengths())
      if (c % 2 != 0) rbs_cols_even = false;
    for (int r : pc.shape())
      if (r % 2 != 0) cbs_rows_even = false;
    for (int c : pc.column_lengths())
      if (c % 2 != 0) cbs_cols_even = false;
  }

  rep.check(fibers(rbs_shapes) == art.mol_m, tag + ".insertion.rbs_shape_fibers_are_m_molecules");
  rep.check(fibers(cbs_shapes) == art.mol_n, tag + ".insertion.cbs_shape_fibers_are_n_molecules");

  // sigma section: sigma of P_rbs(z) is fpf with the same insertion shape
  bool section = true;
  for (size_t i = 0; i < X.carrier.size(); ++i) {
    const Tableau T = p_rbs(X.carrier[i]);
    const Perm sig = sigma_T(T);
    if (!sig.is_fpf_involution()) section = false;
    if (shape(p_rbs(sig)) != T.shape()) section = false;
    if (sig.length() != stat_A(T)) section = false;
  }
  rep.check(section, tag + ".insertion.sigma_section_property");

  rep.observe(rbs_cols_even, tag + ".insertion.rbs_columns_even_observed",
              rbs_cols_even ? "all row-insertion shapes have even columns" : "odd column found");
  rep.observe(cbs_rows_even, tag + ".insertion.cbs_rows_even_observed",
              cbs_rows_even ? "all column-insertion shapes have even rows" : "odd row found");
  rep.observe(true, tag + ".insertion.cbs_columns_parity_note",
              cbs_cols_even ? "cbs columns even for every element"
                            : "cbs columns are not all even, so sigma' is undefined on some fibers");

  if (art.have_tables) {
    bool a_match = art.tab_m.a == A_rbs;
    bool ap_match = art.tab_n.a == A_cbs;
    rep.check(a_match, tag + ".afun.a_equals_A_of_rbs");
    rep.check(ap_match, tag + ".afun.a_prime_equals_A_of_cbs");
  }

  // the headline theorem
  rep.check(art.cells_m == art.mol_m, tag + ".cells_equal_molecules.m",
            "cells " + partition_str(art.cells_m, X) + "vs molecules " + partition_str(art.mol_m, X));
  rep.check(art.cells_n == art.mol_n, tag + ".cells_equal_molecules.n",
            "cells " + partition_str(art.cells_n, X) + "vs molecules " + partition_str(art.mol_n, X));
}

}  // namespace checks

// The full suite on the fixed-point-free set at rank n.  Includes the
// structure-coefficient stage unless skip_afun is set.
inline VerifyReport verify_fpf(int n, const KLTable& kl, int jobs, bool skip_afun = false) {
  VerifyReport rep;
  const std::string tag = "fpf" + std::to_string(n);
  FpfArtifacts art = build_fpf_core(n);

  const QpReport qp = check_quasiparabolic(art.X);
  rep.check(qp.holds, tag + ".qp_axioms", qp.violations.empty() ? "" : qp.violations.front());
  rep.check(minimal_elements(art.X).size() == 1 && maximal_elements(art.X).size() == 1,
            tag + ".unique_extremes");
  checks::bruhat_z_property(rep, art.X, tag);
  checks::transporter_check(rep, art.X, tag);
  checks::module_relations(rep, art.X, tag);
  checks::r_invariants(rep, art.X, art.can_m, tag);
  checks::r_invariants(rep, art.X, art.can_n, tag);
  checks::canonical_invariants(rep, art.X, art.can_m, tag);
  checks::canonical_invariants(rep, art.X, art.can_n, tag);
  checks::graph_checks(rep, art, ModuleKind::M, tag);
  checks::graph_checks(rep, art, ModuleKind::N, tag);
  if (!skip_afun) {
    add_struct_tables(art, kl, jobs);
    checks::afun_checks(rep, art, ModuleKind::M, tag);
    checks::afun_checks(rep, art, ModuleKind::N, tag);
  }
  checks::insertion_checks(rep, art, tag);
  return rep;
}

// The classical-reduction suite on the regular set at rank k: the carrier
// is W itself, m = n = h, and the m-cells are the Robinson-Schensted left
// cells (fibers of the recording tableau).
inline VerifyReport verify_regular(int k, const KLTable& kl, int jobs) {
  (void)jobs;
  VerifyReport rep;
  const std::string tag = "regular" + std::to_string(k);
  QpSet X = build_regular_set(k);

  const QpReport qp = check_quasiparabolic(X);
  rep.check(qp.holds, tag + ".qp_axioms");
  checks::bruhat_z_property(rep, X, tag);
  checks::module_relations(rep, X, tag);

  bool bruhat_match = true;
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      if (X.bruhat(i, j) !=
          bruhat_leq(X.carrier[static_cast<size_t>(i)], X.carrier[static_cast<size_t>(j)]))
        bruhat_match = false;
  rep.check(bruhat_match, tag + ".bruhat_matches_classical");

  CanonicalData cm = compute_canonical(ModuleKind::M, X);
  CanonicalData cn = compute_canonical(ModuleKind::N, X);
  checks::r_invariants(rep, X, cm, tag);
  checks::r_invariants(rep, X, cn, tag);
  checks::canonical_invariants(rep, X, cm, tag);
  checks::canonical_invariants(rep, X, cn, tag);

  // m = n = h; the carrier and the KL table share the (length, window) order
  bool same_order = X.size() == kl.size();
  for (int i = 0; same_order && i < X.size(); ++i)
    if (!(X.carrier[static_cast<size_t>(i)] == kl.elements[static_cast<size_t>(i)])) same_order = false;
  bool m_eq_h = same_order, n_eq_h = same_order;
  if (same_order) {
    for (int y = 0; y < X.size(); ++y)
      for (int x = 0; x < X.size(); ++x) {
        if (cm.c.at(x, y) != kl.h_at(x, y)) m_eq_h = false;
        if (cn.c.at(x, y) != kl.h_at(x, y)) n_eq_h = false;
      }
  }
  rep.check(m_eq_h, tag + ".m_equals_h");
  rep.check(n_eq_h, tag + ".n_equals_h");

  LabeledGraph gm = build_graph(ModuleKind::M, X, cm);
  const auto cell_part = cells(gm);
  const auto mol_part = molecules(gm);

  // left cells = fibers of the recording tableau
  std::vector<std::string> q_keys;
  for (const Perm& w : X.carrier) q_keys.push_back(rsk_full(w).second.str());
  rep.check(fibers(q_keys) == cell_part, tag + ".cells_are_recording_tableau_fibers",
            partition_str(cell_part, X));
  bool refine = true;
  {
    std::vector<int> cell_of(static_cast<size_t>(X.size()), -1);
    for (size_t c = 0; c < cell_part.size(); ++c)
      for (int x : cell_part[c]) cell_of[static_cast<size_t>(x)] = static_cast<int>(c);
    for (const auto& mol : mol_part)
      for (int x : mol)
        if (cell_of[static_cast<size_t>(x)] != cell_of[static_cast<size_t>(mol.front())]) refine = false;
  }
  rep.check(refine, tag + ".molecule_inside_cell");

  // classical fact: the column of the longest element is v^{l(x)-l(w0)}
  bool w0_col = true;
  const int w0 = X.size() - 1;
  for (int x = 0; x < X.size(); ++x) {
    LaurentPoly expect = LaurentPoly::v(X.carrier[static_cast<size_t>(x)].length() -
                                        X.carrier[static_cast<size_t>(w0)].length());
    if (kl.h_at(x, w0) != expect) w0_col = false;
  }
  rep.check(w0_col, tag + ".kl_column_of_longest_element");

  return rep;
}

// The negative control the axiom checker must flag, plus the positive fpf
// classes (observational wrapper around check_quasiparabolic).
inline VerifyReport verify_qp_classifier() {
  VerifyReport rep;
  QpSet bad = build_conjugacy_set(3, Perm::adjacent(3, 1));
  rep.check(!check_quasiparabolic(bad).holds, "qp.flags_s1_class_in_S3");
  rep.check(check_quasiparabolic(build_fpf_set(4)).holds, "qp.fpf4_passes");
  rep.check(check_quasiparabolic(build_fpf_set(6)).holds, "qp.fpf6_passes");
  rep.check(check_quasiparabolic(build_regular_set(3)).holds, "qp.regular3_passes");
  return rep;
}

}  // namespace quasicell
