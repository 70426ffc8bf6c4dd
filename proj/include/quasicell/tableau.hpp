#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasicell/perm.hpp"

namespace quasicell {

// Standard Young tableau with strictly increasing rows and columns and
// distinct entries.
struct Tableau {
  std::vector<std::vector<int>> rows;

  int size() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
  }

  bool contains(int a) const {
    for (const auto& r : rows)
      for (int x : r)
        if (x == a) return true;
    return false;
  }

  std::vector<int> shape() const {
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
    return out;
  }

  std::vector<int> column_lengths() const {
    std::vector<int> out;
    if (rows.empty()) return out;
    out.resize(rows.front().size());
    for (const auto& r : rows)
      for (size_t j = 0; j < r.size(); ++j) ++out[j];
    return out;
  }

  // partition shape with strictly increasing rows; what every single
  // insertion step must preserve (column insertion can pass through
  // fillings whose columns are not yet increasing)
  bool row_valid() const {
    std::set<int> seen;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) return false;
      if (i && rows[i].size() > rows[i - 1].size()) return false;
      for (size_t j = 0; j < rows[i].size(); ++j) {
        if (j && rows[i][j - 1] >= rows[i][j]) return false;
        if (!seen.insert(rows[i][j]).second) return false;
      }
    }
    return true;
  }

  // full standardness: additionally strictly increasing columns
  bool valid() const {
    if (!row_valid()) return false;
    for (size_t i = 1; i < rows.size(); ++i)
      for (size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i - 1][j] >= rows[i][j]) return false;
    return true;
  }

  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator!=(const Tableau& o) const { return rows != o.rows; }

  std::string str() const {
    std::string out = "{";
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) out += " / ";
      for (size_t j = 0; j < rows[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(rows[i][j]);
      }
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.str(); }
};

// Schensted row insertion; returns the new tableau and the unique new box
// (1-based row, column).
inline std::pair<Tableau, std::pair<int, int>> rsk_insert(Tableau T, int a) {
  if (T.contains(a)) throw std::invalid_argument("rsk_insert: entry already present");
  int cur = a;
  for (size_t i = 0; i < T.rows.size(); ++i) {
    auto& row = T.rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      return {T, {static_cast<int>(i) + 1, static_cast<int>(row.size())}};
    }
    std::swap(cur, *it);
  }
  T.rows.push_back({cur});
  return {T, {static_cast<int>(T.rows.size()), 1}};
}

namespace detail {

inline void place_in_row(Tableau& T, int row1, int b) {
  while (static_cast<int>(T.rows.size()) < row1) T.rows.emplace_back();
  T.rows[static_cast<size_t>(row1) - 1].push_back(b);
}

inline void place_in_column(Tableau& T, int col1, int b) {
  // the first row whose length is below col1 gets the new box
  size_t i = 0;
  while (i < T.rows.size() && static_cast<int>(T.rows[i].size()) >= col1) ++i;
  if (i == T.rows.size()) T.rows.emplace_back();
  if (static_cast<int>(T.rows[i].size()) != col1 - 1)
    throw std::runtime_error("column append does not land at the end of column " + std::to_string(col1));
  T.rows[i].push_back(b);
}

inline void insist_valid(const Tableau& T, const char* what) {
  if (!T.row_valid())
    throw std::runtime_error(std::string(what) + " produced a non-tableau: " + T.str());
}

inline void insist_standard(const Tableau& T, const char* what) {
  if (!T.valid())
    throw std::runtime_error(std::string(what) + " produced a non-standard tableau: " + T.str());
}

}  // namespace detail

// Row Beissinger insertion of a pair (a, b), a <= b: insert a by RSK into
// box (i, j), then append b at the end of row i+1; a diagonal pair (a = a)
// just appends at the end of the first row.
inline Tableau rbs_insert(Tableau T, int a, int b) {
  if (a > b) throw std::invalid_argument("rbs_insert needs a <= b");
  if (a == b) {
    if (T.contains(b)) throw std::invalid_argument("rbs_insert: entry already present");
    detail::place_in_row(T, 1, b);
    detail::insist_valid(T, "rbs_insert");
    return T;
  }
  if (T.contains(a) || T.contains(b)) throw std::invalid_argument("rbs_insert: entry already present");
  auto [U, box] = rsk_insert(std::move(T), a);
  detail::place_in_row(U, box.first + 1, b);
  detail::insist_valid(U, "rbs_insert");
  return U;
}

// Column Beissinger insertion: as above but b goes to the end of column
// j+1 (first column for a diagonal pair).
inline Tableau cbs_insert(Tableau T, int a, int b) {
  if (a > b) throw std::invalid_argument("cbs_insert needs a <= b");
  if (a == b) {
    if (T.contains(b)) throw std::invalid_argument("cbs_insert: entry already present");
    detail::place_in_column(T, 1, b);
    detail::insist_valid(T, "cbs_insert");
    return T;
  }
  if (T.contains(a) || T.contains(b)) throw std::invalid_argument("cbs_insert: entry already present");
  auto [U, box] = rsk_insert(std::move(T), a);
  detail::place_in_column(U, box.second + 1, b);
  detail::insist_valid(U, "cbs_insert");
  return U;
}

namespace detail {

inline std::vector<std::pair<int, int>> involution_pairs(const Perm& z) {
  if (!z.is_involution()) throw std::invalid_argument("input is not an involution");
  std::vector<std::pair<int, int>> pairs;  // (a, b) with a <= b = z(a)
  for (int a = 1; a <= z.rank(); ++a)
    if (z(a) >= a) pairs.emplace_back(a, z(a));
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& p, const auto& q) { return p.second < q.second; });
  return pairs;
}

}  // namespace detail

// Fold row Beissinger insertion over the pairs of z, ordered by the larger
// entry.  The folded results are standard tableaux even where single
// insertion steps pass through weaker fillings.
inline Tableau p_rbs(const Perm& z) {
  Tableau T;
  for (const auto& [a, b] : detail::involution_pairs(z)) T = rbs_insert(std::move(T), a, b);
  detail::insist_standard(T, "p_rbs");
  return T;
}

inline Tableau p_cbs(const Perm& z) {
  Tableau T;
  for (const auto& [a, b] : detail::involution_pairs(z)) T = cbs_insert(std::move(T), a, b);
  detail::insist_standard(T, "p_cbs");
  return T;
}

// Full RSK of a permutation word: (insertion tableau, recording tableau).
inline std::pair<Tableau, Tableau> rsk_full(const Perm& w) {
  Tableau P, Q;
  for (int i = 1; i <= w.rank(); ++i) {
    auto [next, box] = rsk_insert(std::move(P), w(i));
    P = std::move(next);
    while (static_cast<int>(Q.rows.size()) < box.first) Q.rows.emplace_back();
    Q.rows[static_cast<size_t>(box.first) - 1].push_back(i);
  }
  return {P, Q};
}

inline std::vector<int> shape(const Tableau& T) { return T.shape(); }

// A(T) = sum over columns of c_i (c_i - 1) / 2
inline int stat_A(const Tableau& T) {
  int out = 0;
  for (int c : T.column_lengths()) out += c * (c - 1) / 2;
  return out;
}

namespace detail {

inline std::set<int> column_cuts(const Tableau& T, int n) {
  std::set<int> cuts;
  int acc = 0;
  for (int c : T.column_lengths()) {
    acc += c;
    if (acc <= n) cuts.insert(acc);
  }
  return cuts;
}

}  // namespace detail

// Longest involution of the parabolic subgroup whose excluded generator
// indices are the partial sums of the column lengths of T.
inline Perm sigma_T(const Tableau& T) {
  const int n = T.size();
  if (n == 0) throw std::invalid_argument("sigma of the empty tableau");
  std::set<int> excluded = detail::column_cuts(T, n);
  excluded.erase(n);
  return parabolic_longest(n, excluded);
}

// Shortest fixed-point-free involution of the same subgroup.  Every block
// between consecutive cut points (that is, every column length) must be
// even; otherwise no such involution exists and this throws.
inline Perm sigma_prime_T(const Tableau& T) {
  const int n = T.size();
  if (n == 0) throw std::invalid_argument("sigma' of the empty tableau");
  std::set<int> excluded = detail::column_cuts(T, n);
  excluded.erase(n);
  return parabolic_min_fpf(n, excluded);
}

}  // namespace quasicell
