#include <doctest.h>

#include "quasicell/qpset.hpp"

using namespace quasicell;

namespace {
Perm P(std::initializer_list<int> w) { return Perm::from_window(std::vector<int>(w)); }
}  // namespace

TEST_CASE("fpf set construction") {
  const QpSet X = build_fpf_set(4);
  REQUIRE(X.size() == 3);
  CHECK(X.carrier[0] == P({2, 1, 4, 3}));
  CHECK(X.carrier[1] == P({3, 4, 1, 2}));
  CHECK(X.carrier[2] == P({4, 3, 2, 1}));
  // ht = l/2, stored doubled
  CHECK(X.twice_ht == std::vector<int>{2, 4, 6});
  CHECK(X.ht_str(0) == "1");

  CHECK(X.act_gen(2, X.index(P({2, 1, 4, 3}))) == X.index(P({3, 4, 1, 2})));
  CHECK(X.act_gen(1, X.index(P({2, 1, 4, 3}))) == X.index(P({2, 1, 4, 3})));
  CHECK_THROWS_AS(build_fpf_set(5), std::invalid_argument);

  const QpSet X6 = build_fpf_set(6);
  CHECK(X6.size() == 15);
  CHECK(X6.ht_str(0) == "3/2");  // minimal element 214365 has length 3
  // a single orbit
  std::vector<char> seen(static_cast<size_t>(X6.size()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 1; s <= X6.gens(); ++s) {
      const int nx = X6.act_gen(s, c);
      if (!seen[static_cast<size_t>(nx)]) {
        seen[static_cast<size_t>(nx)] = 1;
        stack.push_back(nx);
      }
    }
  }
  for (char c : seen) CHECK(c == 1);
}

TEST_CASE("scaled-set axioms: generator steps change height by at most one") {
  for (const QpSet& X : {build_fpf_set(6), build_regular_set(4)}) {
    for (int x = 0; x < X.size(); ++x)
      for (int s = 1; s <= X.gens(); ++s) {
        const int sx = X.act_gen(s, x);
        const int dt = X.twice_ht[static_cast<size_t>(sx)] - X.twice_ht[static_cast<size_t>(x)];
        CHECK((dt == -2 || dt == 0 || dt == 2));
        CHECK(X.act_gen(s, sx) == x);  // involution
      }
    // reflection action restricted to S agrees with the generator table
    for (int s = 1; s <= X.gens(); ++s) {
      const int t = static_cast<int>(std::find(X.reflections.begin(), X.reflections.end(),
                                               Perm::adjacent(X.rank, s)) -
                                     X.reflections.begin());
      for (int x = 0; x < X.size(); ++x) CHECK(X.act_refl(t, x) == X.act_gen(s, x));
    }
  }
}

TEST_CASE("regular set construction") {
  const QpSet X = build_regular_set(3);
  CHECK(X.size() == 6);
  const int s1 = X.index(P({2, 1, 3}));
  CHECK(X.act_gen(1, s1) == X.index(Perm::identity(3)));
  // left multiplication never fixes anything
  for (int x = 0; x < X.size(); ++x)
    for (int s = 1; s <= X.gens(); ++s) CHECK(X.act_gen(s, x) != x);
}

TEST_CASE("quasiparabolic axiom checker") {
  CHECK(check_quasiparabolic(build_fpf_set(4)).holds);
  CHECK(check_quasiparabolic(build_fpf_set(6)).holds);
  for (int n = 2; n <= 4; ++n) CHECK(check_quasiparabolic(build_regular_set(n)).holds);

  // the conjugacy class of s1 in S3 with ht = l/2 has two W-minimal
  // elements and fails the axioms
  const QpSet bad = build_conjugacy_set(3, Perm::adjacent(3, 1));
  const QpReport rep = check_quasiparabolic(bad);
  CHECK_FALSE(rep.holds);
  CHECK(!rep.violations.empty());
  CHECK(minimal_elements(bad).size() == 2);
}

TEST_CASE("minimal and maximal elements") {
  const QpSet X4 = build_fpf_set(4);
  CHECK(minimal_elements(X4) == std::vector<int>{X4.index(P({2, 1, 4, 3}))});
  CHECK(maximal_elements(X4) == std::vector<int>{X4.index(P({4, 3, 2, 1}))});

  const QpSet R3 = build_regular_set(3);
  CHECK(minimal_elements(R3) == std::vector<int>{R3.index(Perm::identity(3))});
  CHECK(maximal_elements(R3) == std::vector<int>{R3.index(P({3, 2, 1}))});

  const QpSet X6 = build_fpf_set(6);
  CHECK(minimal_elements(X6) == std::vector<int>{X6.index(P({2, 1, 4, 3, 6, 5}))});
}

TEST_CASE("bruhat order on the carrier") {
  const QpSet X = build_fpf_set(4);
  // a total chain 2143 < 3412 < 4321
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(X.bruhat(i, j) == (i <= j));

  // regular set order is the classical Bruhat order
  const QpSet R = build_regular_set(3);
  for (int i = 0; i < R.size(); ++i)
    for (int j = 0; j < R.size(); ++j)
      CHECK(R.bruhat(i, j) ==
            bruhat_leq(R.carrier[static_cast<size_t>(i)], R.carrier[static_cast<size_t>(j)]));

  // order implies height order
  const QpSet X6 = build_fpf_set(6);
  for (int i = 0; i < X6.size(); ++i)
    for (int j = 0; j < X6.size(); ++j)
      if (X6.bruhat_strict(i, j))
        CHECK(X6.twice_ht[static_cast<size_t>(i)] < X6.twice_ht[static_cast<size_t>(j)]);
}

TEST_CASE("transporter") {
  const QpSet X = build_fpf_set(4);
  const int x0 = X.index(P({2, 1, 4, 3}));
  CHECK(transporter(X, x0, X.index(P({3, 4, 1, 2}))) == Perm::adjacent(4, 2));
  CHECK(transporter(X, x0, x0) == Perm::identity(4));
  const Perm w = transporter(X, x0, X.index(P({4, 3, 2, 1})));
  CHECK(w.length() == 2);
  CHECK(compose(w, compose(P({2, 1, 4, 3}), w.inverse())) == P({4, 3, 2, 1}));

  // length always matches the height gap
  const QpSet X6 = build_fpf_set(6);
  const int m0 = minimal_elements(X6).front();
  for (int x = 0; x < X6.size(); ++x) {
    const Perm u = transporter(X6, m0, x);
    CHECK(u.length() == X6.ht_diff(x, m0));
    CHECK(compose(u, compose(X6.carrier[static_cast<size_t>(m0)], u.inverse())) ==
          X6.carrier[static_cast<size_t>(x)]);
  }

  // two minimal elements in the s1-class of S3: greedy descent from one
  // cannot reach the other
  const QpSet bad = build_conjugacy_set(3, Perm::adjacent(3, 1));
  const auto mins = minimal_elements(bad);
  REQUIRE(mins.size() == 2);
  CHECK_THROWS_AS(transporter(bad, mins[0], mins[1]), std::invalid_argument);
}
