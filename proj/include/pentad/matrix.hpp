#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pentad/errors.hpp"
#include "pentad/rational.hpp"

namespace pentad {

using Vec = std::vector<Rational>;

inline Vec zero_vec(int n) { return Vec(n); }

inline Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec negated(Vec a) {
  for (auto& x : a) x = -x;
  return a;
}

/// Dense matrix over the rationals, row-major. All algorithms below use
/// exact arithmetic and deterministic pivoting (first nonzero entry in
/// column order), so every computed basis is reproducible.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  QMatrix(int rows, int cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != static_cast<std::size_t>(rows_) * cols_)
      throw DimensionMismatch("entry count does not match matrix shape");
  }

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  static QMatrix diagonal(const Vec& d) {
    QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    return m;
  }

  static QMatrix from_rows(const std::vector<Vec>& rows, int cols) {
    QMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols)
        throw DimensionMismatch("row length does not match column count");
      for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  void set_row(int i, const Vec& r) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  QMatrix transposed() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    QMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

inline QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  QMatrix c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

inline QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  QMatrix c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

struct RrefResult {
  QMatrix mat;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form. Pivot = first nonzero entry scanning each
/// column top to bottom, so the result is unique and platform independent.
inline RrefResult rref(QMatrix m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
    Rational inv = Rational(1) / m(lead, col);
    for (int j = 0; j < m.cols(); ++j) m(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

inline QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw NotSquare("inverse of a non-square matrix");
  int n = m.rows();
  RrefResult r = rref(hstack(m, QMatrix::identity(n)));
  if (static_cast<int>(r.pivot_cols.size()) != n || (n > 0 && r.pivot_cols[n - 1] != n - 1))
    throw SingularMatrix("matrix is singular");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
  return inv;
}

/// Basis of {x : Mx = 0}: the standard free-variable vectors read off the
/// reduced row echelon form, ordered by free column.
inline std::vector<Vec> nullspace(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.mat(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational determinant(QMatrix m) {
  if (!m.is_square()) throw NotSquare("determinant of a non-square matrix");
  int n = m.rows();
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Rational f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Solves A x = b exactly; free variables are set to 0. Returns nullopt when
/// the system is inconsistent.
inline std::optional<Vec> solve_linear(const QMatrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("solve_linear shape mismatch");
  QMatrix rhs(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
  RrefResult r = rref(hstack(a, rhs));
  Vec x(a.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // pivot in the augmented column
    x[r.pivot_cols[i]] = r.mat(static_cast<int>(i), a.cols());
  }
  return x;
}

/// Whether two families of length-n vectors span the same subspace.
inline bool span_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
  QMatrix ma = QMatrix::from_rows(a, n);
  QMatrix mb = QMatrix::from_rows(b, n);
  int ra = rank(ma), rb = rank(mb);
  if (ra != rb) return false;
  return rank(vstack(ma, mb)) == ra;
}

struct SymmetricDecomposition {
  QMatrix p1;  // l x n, full row rank
  QMatrix q;   // l x l, symmetric invertible; transpose(p1) * q * p1 == input
};

/// Rational congruence decomposition of a symmetric matrix S of rank l:
/// finds invertible T with transpose(T)*S*T = diag(q, 0), then returns
/// P1 = first l rows of inverse(T) and Q = the invertible diagonal block,
/// so that transpose(P1)*Q*P1 = S exactly. When S is already invertible the
/// identity congruence (P1 = E, Q = S) is returned.
inline SymmetricDecomposition decompose_symmetric(const QMatrix& s) {
  if (!s.is_square() || !s.is_symmetric()) throw NotSymmetric("matrix is not symmetric");
  int n = s.rows();
  int l = rank(s);
  if (l == n) return {QMatrix::identity(n), s};

  QMatrix m = s;
  QMatrix t = QMatrix::identity(n);
  // Column operation col_dst += c * col_src applied to both m (with the
  // mirrored row operation, keeping m congruent to s) and the transform t.
  auto add_col = [&](QMatrix& mat, int dst, int src, const Rational& c) {
    for (int i = 0; i < mat.rows(); ++i) mat(i, dst) += c * mat(i, src);
  };
  auto add_row = [&](QMatrix& mat, int dst, int src, const Rational& c) {
    for (int j = 0; j < mat.cols(); ++j) mat(dst, j) += c * mat(src, j);
  };
  auto swap_cols = [&](QMatrix& mat, int a, int b) {
    for (int i = 0; i < mat.rows(); ++i) std::swap(mat(i, a), mat(i, b));
  };
  auto swap_rows = [&](QMatrix& mat, int a, int b) {
    for (int j = 0; j < mat.cols(); ++j) std::swap(mat(a, j), mat(b, j));
  };

  for (int pos = 0; pos < n; ++pos) {
    if (m(pos, pos).is_zero()) {
      int diag = -1;
      for (int i = pos + 1; i < n; ++i)
        if (!m(i, i).is_zero()) {
          diag = i;
          break;
        }
      if (diag >= 0) {
        swap_cols(m, pos, diag);
        swap_rows(m, pos, diag);
        swap_cols(t, pos, diag);
      } else {
        // All remaining diagonal entries vanish; find an off-diagonal entry
        // and fold it onto the diagonal (characteristic != 2 trick).
        int oi = -1, oj = -1;
        for (int i = pos; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!m(i, j).is_zero()) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) break;  // remaining block is zero
        add_col(m, oi, oj, Rational(1));
        add_row(m, oi, oj, Rational(1));
        add_col(t, oi, oj, Rational(1));
        if (oi != pos) {
          swap_cols(m, pos, oi);
          swap_rows(m, pos, oi);
          swap_cols(t, pos, oi);
        }
      }
    }
    for (int j = pos + 1; j < n; ++j) {
      if (m(pos, j).is_zero()) continue;
      Rational c = -(m(pos, j) / m(pos, pos));
      add_col(m, j, pos, c);
      add_row(m, j, pos, c);
      add_col(t, j, pos, c);
    }
  }

  QMatrix q(l, l);
  for (int i = 0; i < l; ++i) q(i, i) = m(i, i);
  QMatrix p = inverse(t);
  QMatrix p1(l, n);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < n; ++j) p1(i, j) = p(i, j);
  return {std::move(p1), std::move(q)};
}

}  // namespace pentad
