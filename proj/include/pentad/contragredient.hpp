#pragma once

#include <string>
#include <vector>

#include "pentad/local.hpp"

namespace pentad {

/// Local part of the contragredient Lie algebra G(C): generators
/// {f_a, h_a, e_a} with [h_a, h_b] = 0, [e_a, f_b] = delta_ab h_a,
/// [h_a, e_b] = C_ab e_b and [h_a, f_b] = -C_ab f_b.
inline LocalLieAlgebra contragredient_local(const QMatrix& c) {
  if (!c.is_square()) throw NotSquare("Cartan matrix must be square");
  int n = c.rows();
  LocalLieAlgebra l = LocalLieAlgebra::with_dims(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      l.zp.at(a, b, b) = c(a, b);
      l.zn.at(a, b, b) = -c(a, b);
    }
  for (int a = 0; a < n; ++a) l.pn.at(a, a, a) = Rational(1);
  return l;
}

/// Lexicographically first maximal independent subset of the rows of C.
inline std::vector<int> pivot_rows(const QMatrix& c) {
  std::vector<int> chosen;
  std::vector<Vec> rows;
  for (int i = 0; i < c.rows(); ++i) {
    rows.push_back(c.row(i));
    if (rank(QMatrix::from_rows(rows, c.cols())) == static_cast<int>(rows.size())) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

/// Local part of the reduced contragredient Lie algebra G'(C): the degree-0
/// space of G(C) modulo its central left-kernel directions. The quotient
/// basis is the set of pivot rows of C.
inline LocalLieAlgebra reduced_local(const QMatrix& c) {
  if (!c.is_square()) throw NotSquare("Cartan matrix must be square");
  int n = c.rows();
  std::vector<int> piv = pivot_rows(c);
  int l_dim = static_cast<int>(piv.size());

  std::vector<Vec> piv_vecs;
  for (int i : piv) piv_vecs.push_back(c.row(i));
  QMatrix pivot_mat = QMatrix::from_rows(piv_vecs, n);

  // h_a expressed through the surviving classes: row_a = x * pivot rows.
  QMatrix proj(n, l_dim);
  for (int a = 0; a < n; ++a) {
    auto x = solve_linear(pivot_mat.transposed(), c.row(a));
    if (!x) throw Error("internal error: row outside the pivot row span");
    proj.set_row(a, *x);
  }

  LocalLieAlgebra l = LocalLieAlgebra::with_dims(n, l_dim, n);
  for (int t = 0; t < l_dim; ++t) l.labels_zero[t] = "h" + std::to_string(piv[t] + 1);
  for (int t = 0; t < l_dim; ++t)
    for (int b = 0; b < n; ++b) {
      l.zp.at(t, b, b) = c(piv[t], b);
      l.zn.at(t, b, b) = -c(piv[t], b);
    }
  for (int a = 0; a < n; ++a) l.pn.set_row(a, a, proj.row(a));
  return l;
}

}  // namespace pentad
