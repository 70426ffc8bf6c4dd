#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "quasicell/perm.hpp"

using namespace quasicell;

namespace {

Perm P(std::initializer_list<int> w) { return Perm::from_window(std::vector<int>(w)); }

// independent oracle: reflexive-transitive closure of the covering relation
// u < u t, t a transposition with l(ut) = l(u) + 1
std::map<std::pair<int, int>, bool> bruhat_closure(const std::vector<Perm>& all) {
  const int n = all.front().rank();
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < all.size(); ++i) idx[all[i].window()] = static_cast<int>(i);
  std::vector<std::vector<bool>> leq(all.size(), std::vector<bool>(all.size(), false));
  for (size_t i = 0; i < all.size(); ++i) leq[i][i] = true;
  // covers
  std::vector<std::vector<int>> up(all.size());
  for (size_t i = 0; i < all.size(); ++i)
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const Perm t = Perm::transposition(n, a, b);
        const Perm ut = compose(all[i], t);
        if (ut.length() == all[i].length() + 1) up[i].push_back(idx[ut.window()]);
      }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = 0; j < all.size(); ++j) {
        if (!leq[i][j]) continue;
        for (int k : up[j])
          if (!leq[i][static_cast<size_t>(k)]) {
            leq[i][static_cast<size_t>(k)] = true;
            changed = true;
          }
      }
  }
  std::map<std::pair<int, int>, bool> out;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) out[{static_cast<int>(i), static_cast<int>(j)}] = leq[i][j];
  return out;
}

}  // namespace

TEST_CASE("compose and inverse") {
  CHECK(compose(P({2, 1, 3, 4}), P({1, 3, 2, 4})) == P({2, 3, 1, 4}));
  const Perm w = P({3, 1, 4, 2});
  CHECK(compose(w, Perm::identity(4)) == w);
  CHECK(compose(w, w.inverse()) == Perm::identity(4));
  CHECK_THROWS_AS(compose(w, Perm::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_window({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("length") {
  CHECK(P({4, 3, 2, 1}).length() == 6);
  CHECK(Perm::identity(5).length() == 0);
  CHECK(P({2, 1, 4, 3}).length() == 2);

  std::mt19937 rng(3);
  auto s6 = enumerate_permutations(6);
  std::uniform_int_distribution<size_t> pick(0, s6.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm& u = s6[pick(rng)];
    const Perm& w = s6[pick(rng)];
    CHECK(compose(u, w).length() <= u.length() + w.length());
    CHECK(u.length() == u.inverse().length());
  }
}

TEST_CASE("bruhat order agrees with the cover-closure oracle on S4") {
  const auto all = enumerate_permutations(4);
  const auto oracle = bruhat_closure(all);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j)
      CHECK(bruhat_leq(all[i], all[j]) ==
            oracle.at({static_cast<int>(i), static_cast<int>(j)}));

  CHECK(bruhat_leq(P({2, 1, 4, 3}), P({4, 3, 2, 1})));
  CHECK_FALSE(bruhat_leq(P({3, 4, 1, 2}), P({2, 1, 4, 3})));
  CHECK(bruhat_leq(P({1, 3, 2, 4}), P({3, 1, 4, 2})));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_fpf(2) == std::vector<Perm>{P({2, 1})});
  CHECK(enumerate_fpf(4) ==
        std::vector<Perm>{P({2, 1, 4, 3}), P({3, 4, 1, 2}), P({4, 3, 2, 1})});
  CHECK(enumerate_fpf(6).size() == 15);
  CHECK(enumerate_permutations(4).size() == 24);
  CHECK_THROWS_AS(enumerate_fpf(5), std::invalid_argument);
  for (const Perm& z : enumerate_fpf(6)) CHECK(z.is_fpf_involution());
  // lexicographic order
  auto s4 = enumerate_permutations(4);
  CHECK(std::is_sorted(s4.begin(), s4.end()));
}

TEST_CASE("parabolic elements") {
  CHECK(parabolic_longest(4, {2}) == P({2, 1, 4, 3}));
  CHECK(parabolic_longest(4, {}) == P({4, 3, 2, 1}));
  CHECK(parabolic_longest(4, {1, 2, 3}) == Perm::identity(4));

  CHECK(parabolic_min_fpf(4, {}) == P({2, 1, 4, 3}));
  CHECK(parabolic_min_fpf(4, {2}) == P({2, 1, 4, 3}));
  CHECK(parabolic_min_fpf(6, {4}) == P({2, 1, 4, 3, 6, 5}));
  CHECK_THROWS_AS(parabolic_min_fpf(4, {1}), std::invalid_argument);
}

TEST_CASE("reduced words and descents") {
  for (const Perm& w : enumerate_permutations(4)) {
    const auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == w.length());
    Perm rebuilt = Perm::identity(4);
    for (int s : word) rebuilt = compose(rebuilt, Perm::adjacent(4, s));
    CHECK(rebuilt == w);
    for (int i = 1; i <= 3; ++i)
      CHECK(has_left_descent(w, i) ==
            (compose(Perm::adjacent(4, i), w).length() < w.length()));
  }
}
