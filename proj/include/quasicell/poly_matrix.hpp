#pragma once

#include <stdexcept>
#include <vector>

#include "quasicell/laurent.hpp"

namespace quasicell {

// Dense square matrix of Laurent polynomials.  Row index = input basis
// element, column index = output basis element, so composing operators is
// the plain row-major product: apply A then B  <->  A * B.
struct PolyMatrix {
  int n = 0;
  std::vector<LaurentPoly> a;

  PolyMatrix() = default;
  explicit PolyMatrix(int size) : n(size), a(static_cast<size_t>(size) * static_cast<size_t>(size)) {}

  static PolyMatrix identity(int size) {
    PolyMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
  }

  LaurentPoly& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
  const LaurentPoly& at(int i, int j) const {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  }

  PolyMatrix transpose() const {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    PolyMatrix out(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const LaurentPoly& c = x.at(i, k);
        if (c.is_zero()) continue;
        for (int j = 0; j < x.n; ++j) {
          const LaurentPoly& d = y.at(k, j);
          if (d.is_zero()) continue;
          out.at(i, j) += c * d;
        }
      }
    return out;
  }

  PolyMatrix& sub_scaled(const PolyMatrix& o, const Int& c) {
    if (n != o.n) throw std::invalid_argument("matrix size mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
      LaurentPoly t = o.a[i];
      t.scale(c);
      a[i] -= t;
    }
    return *this;
  }

  PolyMatrix bar_entrywise() const {
    PolyMatrix m(n);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i].bar();
    return m;
  }

  bool operator==(const PolyMatrix& o) const { return n == o.n && a == o.a; }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const LaurentPoly& p = at(i, j);
        if (i == j ? p != LaurentPoly(1) : !p.is_zero()) return false;
      }
    return true;
  }
};

}  // namespace quasicell
