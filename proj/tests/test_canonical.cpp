#include <doctest.h>

#include "quasicell/canonical.hpp"
#include "quasicell/kl.hpp"

using namespace quasicell;

namespace {

Perm P(std::initializer_list<int> w) { return Perm::from_window(std::vector<int>(w)); }

const LaurentPoly kV = LaurentPoly::v(1);
const LaurentPoly kVi = LaurentPoly::v(-1);

}  // namespace

TEST_CASE("r matrices on the fpf rank-4 set") {
  const QpSet X = build_fpf_set(4);
  const int a = 0, b = 1, c = 2;  // 2143 < 3412 < 4321

  const PolyMatrix rm = compute_r(ModuleKind::M, X);
  for (int i = 0; i < 3; ++i) CHECK(rm.at(i, i) == LaurentPoly(1));
  CHECK(rm.at(a, b) == kV - kVi);
  CHECK(rm.at(b, c) == kV - kVi);
  CHECK(rm.at(a, c) == LaurentPoly::v(2) - LaurentPoly(1));

  // the coefficient of the minimal standard basis element in bar(M_3412)
  // is the barred entry
  CHECK(rm.at(a, b).bar() == kVi - kV);

  const PolyMatrix rn = compute_r(ModuleKind::N, X);
  CHECK(rn.at(a, b) == kV - kVi);
  CHECK(rn.at(a, c) == LaurentPoly::v(-2) - LaurentPoly(1));
  CHECK(rn.at(a, c).bar() == LaurentPoly::v(2) - LaurentPoly(1));
  CHECK(rn.at(b, c) == kV - kVi);
}

TEST_CASE("r is well defined independently of the lowering generator") {
  CHECK(check_r_well_defined(ModuleKind::M, build_fpf_set(4)));
  CHECK(check_r_well_defined(ModuleKind::N, build_fpf_set(4)));
  CHECK(check_r_well_defined(ModuleKind::M, build_fpf_set(6)));
  CHECK(check_r_well_defined(ModuleKind::N, build_fpf_set(6)));
  CHECK(check_r_well_defined(ModuleKind::M, build_regular_set(3)));

  // a non-quasiparabolic input (two W-minimal elements) makes the lowering
  // generators disagree
  const QpSet bad = build_conjugacy_set(3, Perm::adjacent(3, 1));
  CHECK_FALSE(check_r_well_defined(ModuleKind::M, bad));
  CHECK_THROWS_AS(compute_r(ModuleKind::M, bad, true), std::runtime_error);
}

TEST_CASE("involution identity bar(R) R = I") {
  for (const QpSet& X : {build_fpf_set(4), build_fpf_set(6)}) {
    for (ModuleKind kind : {ModuleKind::M, ModuleKind::N}) {
      const PolyMatrix r = compute_r(kind, X);
      CHECK((r.bar_entrywise() * r).is_identity());
    }
  }
  const QpSet R = build_regular_set(4);
  const PolyMatrix r = compute_r(ModuleKind::M, R);
  CHECK((r.bar_entrywise() * r).is_identity());
}

TEST_CASE("canonical basis by bar-solve, fpf rank 4") {
  const QpSet X = build_fpf_set(4);

  const CanonicalData m = compute_canonical(ModuleKind::M, X);
  CHECK(m.c.at(0, 1) == kVi);                  // M_3412-bar = M_3412 + v^-1 M_2143
  CHECK(m.c.at(1, 2) == kVi);                  // coefficient of M_3412 in M_4321-bar
  CHECK(m.c.at(0, 2) == LaurentPoly::v(-2));   // ... and of M_2143
  CHECK(m.mu_at(0, 2) == 0);
  CHECK(m.mu_at(0, 1) == 1);
  CHECK(m.mu_at(1, 2) == 1);

  const CanonicalData n = compute_canonical(ModuleKind::N, X);
  CHECK(n.c.at(1, 2) == kVi);
  CHECK(n.c.at(0, 2).is_zero());  // the 2143-coefficient of N_4321-bar vanishes
  CHECK(n.mu_at(0, 1) == 1);
  CHECK(n.mu_at(1, 2) == 1);
  CHECK(n.mu_at(0, 2) == 0);
}

TEST_CASE("solve equals the independent height recurrence") {
  for (int n : {4, 6}) {
    const QpSet X = build_fpf_set(n);
    for (ModuleKind kind : {ModuleKind::M, ModuleKind::N}) {
      const PolyMatrix r = compute_r(kind, X);
      CHECK(compute_canonical_solve(kind, X, r) == compute_canonical_recurrence(kind, X));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const QpSet R = build_regular_set(n);
    for (ModuleKind kind : {ModuleKind::M, ModuleKind::N}) {
      const PolyMatrix r = compute_r(kind, R);
      CHECK(compute_canonical_solve(kind, R, r) == compute_canonical_recurrence(kind, R));
    }
  }
}

TEST_CASE("regular set reduces to the KL table") {
  const QpSet R = build_regular_set(3);
  const KLTable T = compute_kl(3);
  const CanonicalData m = compute_canonical(ModuleKind::M, R);
  const CanonicalData n = compute_canonical(ModuleKind::N, R);
  for (int y = 0; y < R.size(); ++y)
    for (int x = 0; x < R.size(); ++x) {
      const LaurentPoly expect = T.h_at(T.index(R.carrier[static_cast<size_t>(x)]),
                                        T.index(R.carrier[static_cast<size_t>(y)]));
      CHECK(m.c.at(x, y) == expect);
      CHECK(n.c.at(x, y) == expect);
    }
}

TEST_CASE("corrupted r is rejected by the solve") {
  const QpSet X = build_fpf_set(4);
  PolyMatrix r = compute_r(ModuleKind::M, X);
  r.at(0, 2) += LaurentPoly(1);  // break the involution identity
  CHECK_THROWS_AS(compute_canonical_solve(ModuleKind::M, X, r), std::runtime_error);
}

TEST_CASE("inversion") {
  const QpSet X = build_fpf_set(4);
  const CanonicalData m = compute_canonical(ModuleKind::M, X);
  CHECK(m.inv.at(0, 1) == -kVi);          // p_{2143,3412}
  CHECK(m.inv.at(0, 2).is_zero());        // the two chains cancel
  for (int i = 0; i < 3; ++i) CHECK(m.inv.at(i, i) == LaurentPoly(1));
  CHECK((m.inv * m.c).is_identity());
  CHECK((m.c * m.inv).is_identity());

  // chain-sum oracle
  CHECK(invert_by_chains(X, m.c) == m.inv);
  const QpSet X6 = build_fpf_set(6);
  for (ModuleKind kind : {ModuleKind::M, ModuleKind::N}) {
    const CanonicalData d = compute_canonical(kind, X6);
    CHECK(invert_by_chains(X6, d.c) == d.inv);
  }
  const QpSet R3 = build_regular_set(3);
  const CanonicalData dr = compute_canonical(ModuleKind::M, R3);
  CHECK(invert_by_chains(R3, dr.c) == dr.inv);

  // the gate
  CHECK_THROWS_AS(invert_by_chains(build_regular_set(4), PolyMatrix(24)), std::invalid_argument);
}

TEST_CASE("dual functionals") {
  const QpSet X = build_fpf_set(4);
  const CanonicalData m = compute_canonical(ModuleKind::M, X);

  for (int x = 0; x < X.size(); ++x)
    for (int z = 0; z < X.size(); ++z)
      CHECK(dual_functional_pairing(m, x, canonical_vector(m, z)) ==
            LaurentPoly(x == z ? 1 : 0));

  CHECK(dual_functional_pairing(m, 0, ModuleVector::basis(1)) == -kVi);  // p_{2143,3412}

  // D_x applied after underline H_s vanishes when s raises x
  for (int s = 1; s <= X.gens(); ++s)
    for (int x = 0; x < X.size(); ++x) {
      if (!X.raises(s, x)) continue;
      for (int y = 0; y < X.size(); ++y)
        CHECK(dual_functional_pairing(m, x, act_Hs_kl(ModuleKind::M, X, s, canonical_vector(m, y)))
                  .is_zero());
    }
}

TEST_CASE("mu tables drive the multiplication formula") {
  // underline H_{s1} applied to the canonical element of 3412 picks up the
  // weak-descent correction at 2143
  const QpSet X = build_fpf_set(4);
  const CanonicalData m = compute_canonical(ModuleKind::M, X);
  const ModuleVector image = act_Hs_kl(ModuleKind::M, X, 1, canonical_vector(m, 1));
  CHECK(dual_functional_pairing(m, 2, image) == LaurentPoly(1));  // reaches 4321
  CHECK(dual_functional_pairing(m, 0, image) == LaurentPoly(1));  // mu-correction at 2143
  CHECK(dual_functional_pairing(m, 1, image).is_zero());

  // N-kind: the fixed case contributes only corrections
  const CanonicalData n = compute_canonical(ModuleKind::N, X);
  const ModuleVector nimage = act_Hs_kl(ModuleKind::N, X, 2, canonical_vector(n, 2));
  CHECK(dual_functional_pairing(n, 1, nimage) == LaurentPoly(1));  // mu_n(3412,4321)
  CHECK(dual_functional_pairing(n, 2, nimage).is_zero());
  CHECK(dual_functional_pairing(n, 0, nimage).is_zero());
}
