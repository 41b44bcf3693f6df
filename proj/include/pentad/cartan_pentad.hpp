#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pentad/local.hpp"

namespace pentad {

/// Pentad of Cartan type (r, n; A, D, Gamma): an invertible r x r matrix A,
/// an r x n matrix D and an invertible diagonal Gamma (stored as its
/// diagonal). Validation happens here; every operation below may assume it.
class CartanPentad {
 public:
  CartanPentad(int r, int n, QMatrix a, QMatrix d, std::vector<Rational> gamma)
      : r_(r), n_(n), a_(std::move(a)), d_(std::move(d)), gamma_(std::move(gamma)) {
    if (r_ < 0 || n_ < 0) throw InvalidPentad("r and n must be nonnegative");
    if (a_.rows() != r_ || a_.cols() != r_) throw InvalidPentad("A must be r x r");
    if (d_.rows() != r_ || d_.cols() != n_) throw InvalidPentad("D must be r x n");
    if (static_cast<int>(gamma_.size()) != n_) throw InvalidPentad("Gamma must have n diagonal entries");
    for (const auto& g : gamma_)
      if (g.is_zero()) throw InvalidPentad("Gamma entry is zero (Gamma must be invertible)");
    if (rank(a_) != r_) throw InvalidPentad("A is not invertible");
  }

  int r() const { return r_; }
  int n() const { return n_; }
  const QMatrix& a() const { return a_; }
  const QMatrix& d() const { return d_; }
  const std::vector<Rational>& gamma() const { return gamma_; }

  QMatrix gamma_matrix() const { return QMatrix::diagonal(gamma_); }

 private:
  int r_;
  int n_;
  QMatrix a_;
  QMatrix d_;
  std::vector<Rational> gamma_;
};

/// Cartan matrix of the pentad: Gamma * transpose(D) * A * D.
inline QMatrix cartan_matrix(const CartanPentad& p) {
  return p.gamma_matrix() * p.d().transposed() * p.a() * p.d();
}

/// Coroots h_1..h_n in epsilon coordinates: the rows of Gamma * transpose(D) * A.
inline std::vector<Vec> coroots(const CartanPentad& p) {
  QMatrix m = p.gamma_matrix() * p.d().transposed() * p.a();
  std::vector<Vec> h;
  h.reserve(p.n());
  for (int i = 0; i < p.n(); ++i) h.push_back(m.row(i));
  return h;
}

/// B_A(x, y) = row(x) * transpose(A^{-1}) * col(y).
inline Rational bilinear_form(const CartanPentad& p, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != p.r() || static_cast<int>(y.size()) != p.r())
    throw DimensionMismatch("bilinear_form arguments must have length r");
  QMatrix m = inverse(p.a()).transposed();
  Rational out;
  for (int i = 0; i < p.r(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < p.r(); ++j) out += x[i] * m(i, j) * y[j];
  }
  return out;
}

/// The local part of the PC Lie algebra: abelian G_0 = Q^r with
/// [eps_i, e_j] = d_ij e_j, [eps_i, f_j] = -d_ij f_j and [e_i, f_j] =
/// delta_ij h_i, where h_i is the i-th coroot.
inline LocalLieAlgebra local_algebra(const CartanPentad& p) {
  int r = p.r(), n = p.n();
  LocalLieAlgebra l = LocalLieAlgebra::with_dims(n, r, n);
  for (int i = 0; i < r; ++i) l.labels_zero[i] = "eps" + std::to_string(i + 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      l.zp.at(i, j, j) = p.d()(i, j);
      l.zn.at(i, j, j) = -p.d()(i, j);
    }
  std::vector<Vec> h = coroots(p);
  for (int i = 0; i < n; ++i) l.pn.set_row(i, i, h[i]);
  return l;
}

struct StructureSummary {
  int rank_d = 0;
  int rank_c = 0;
  int dim_z = 0;      // rank D - rank C
  int dim_delta = 0;  // r - rank D
  bool symmetric = false;
};

inline StructureSummary structure_summary(const CartanPentad& p) {
  StructureSummary s;
  s.rank_d = rank(p.d());
  s.rank_c = rank(cartan_matrix(p));
  s.dim_z = s.rank_d - s.rank_c;
  s.dim_delta = p.r() - s.rank_d;
  s.symmetric = p.a().is_symmetric();
  return s;
}

}  // namespace pentad
