#include <doctest.h>

#include "quasicell/wgraph.hpp"

using namespace quasicell;

namespace {

Perm P(std::initializer_list<int> w) { return Perm::from_window(std::vector<int>(w)); }

struct Fixture {
  QpSet X = build_fpf_set(4);
  CanonicalData m = compute_canonical(ModuleKind::M, X);
  CanonicalData n = compute_canonical(ModuleKind::N, X);
  LabeledGraph gm = build_graph(ModuleKind::M, X, m);
  LabeledGraph gn = build_graph(ModuleKind::N, X, n);
};

}  // namespace

TEST_CASE("tau subsets on the fpf rank-4 set") {
  Fixture f;
  CHECK(f.gm.tau[0] == std::set<int>{1, 3});
  CHECK(f.gm.tau[1] == std::set<int>{2});
  CHECK(f.gm.tau[2] == std::set<int>{1, 2, 3});
  CHECK(f.gn.tau[0] == std::set<int>{1, 2, 3});
  CHECK(f.gn.tau[1] == std::set<int>{1, 3});
  CHECK(f.gn.tau[2] == std::set<int>{2});
}

TEST_CASE("edge weights") {
  Fixture f;
  // m: bidirected 2143 <-> 3412, single 4321 -> 3412, nothing between the
  // extremes
  CHECK(f.gm.weight(0, 1) == 1);
  CHECK(f.gm.weight(1, 0) == 1);
  CHECK(f.gm.weight(2, 1) == 1);
  CHECK(f.gm.weight(1, 2) == 0);
  CHECK(f.gm.weight(0, 2) == 0);
  CHECK(f.gm.weight(2, 0) == 0);
  // n: single 2143 -> 3412, bidirected 3412 <-> 4321
  CHECK(f.gn.weight(0, 1) == 1);
  CHECK(f.gn.weight(1, 0) == 0);
  CHECK(f.gn.weight(1, 2) == 1);
  CHECK(f.gn.weight(2, 1) == 1);
  CHECK(f.gn.weight(0, 2) == 0);
}

TEST_CASE("cells and molecules") {
  Fixture f;
  CHECK(cells(f.gm) == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(molecules(f.gm) == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(cells(f.gn) == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(molecules(f.gn) == std::vector<std::vector<int>>{{0}, {1, 2}});
}

TEST_CASE("singleton graph") {
  const QpSet X = build_regular_set(1);
  const CanonicalData d = compute_canonical(ModuleKind::M, X);
  const LabeledGraph g = build_graph(ModuleKind::M, X, d);
  CHECK(cells(g) == std::vector<std::vector<int>>{{0}});
  CHECK(molecules(g) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("arrows via the module definition") {
  Fixture f;
  CHECK(arrow_via_module(ModuleKind::M, f.X, f.m, 0, 1));
  CHECK_FALSE(arrow_via_module(ModuleKind::M, f.X, f.m, 0, 2));

  for (int x = 0; x < f.X.size(); ++x)
    for (int y = 0; y < f.X.size(); ++y) {
      if (x == y) continue;
      CHECK(arrow_via_module(ModuleKind::M, f.X, f.m, x, y) == (f.gm.weight(x, y) != 0));
      CHECK(arrow_via_module(ModuleKind::N, f.X, f.n, x, y) == (f.gn.weight(x, y) != 0));
    }
}

TEST_CASE("quasi-admissibility and the W-graph axiom") {
  Fixture f;
  CHECK(check_quasi_admissible(f.gm).ok);
  CHECK(check_quasi_admissible(f.gn).ok);
  CHECK(check_wgraph_axiom(f.gm).ok);
  CHECK(check_wgraph_axiom(f.gn).ok);

  // negative control: making one side of a bidirected edge asymmetric
  // breaks the generator relations
  LabeledGraph broken = f.gm;
  broken.omega[0][1] = 2;
  CHECK_FALSE(check_wgraph_axiom(broken).ok);
  CHECK_FALSE(check_quasi_admissible(broken).ok);
  LabeledGraph broken2 = f.gn;
  broken2.omega[1][2] = 3;
  CHECK_FALSE(check_wgraph_axiom(broken2).ok);

  // rescaling a one-way edge between two cells is a basis change and is
  // invisible to the axiom
  LabeledGraph rescaled = f.gm;
  rescaled.omega[2][1] = 5;
  CHECK(check_wgraph_axiom(rescaled).ok);
}

TEST_CASE("scc partition is deterministic and ordered by least vertex") {
  // two 2-cycles and an isolated vertex, listed in index order
  std::vector<std::vector<int>> adj{{2}, {}, {0}, {4}, {3}};
  const auto part = detail::scc_partition(adj);
  CHECK(part == std::vector<std::vector<int>>{{0, 2}, {1}, {3, 4}});
}
