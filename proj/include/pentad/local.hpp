#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pentad/matrix.hpp"

namespace pentad {

/// Bilinear map between coordinate spaces, stored as a structure-constant
/// table: row (i * dim_b + j) holds the coordinates of the image of the
/// basis pair (x_i, y_j).
struct BilinearMap {
  int dim_a = 0;
  int dim_b = 0;
  int dim_out = 0;
  QMatrix table;  // (dim_a * dim_b) x dim_out

  BilinearMap() = default;
  BilinearMap(int a, int b, int out) : dim_a(a), dim_b(b), dim_out(out), table(a * b, out) {}

  Rational& at(int i, int j, int s) { return table(i * dim_b + j, s); }
  const Rational& at(int i, int j, int s) const { return table(i * dim_b + j, s); }

  Vec row(int i, int j) const { return table.row(i * dim_b + j); }
  void set_row(int i, int j, const Vec& v) { table.set_row(i * dim_b + j, v); }

  Vec apply(const Vec& x, const Vec& y) const {
    Vec out(dim_out);
    for (int i = 0; i < dim_a; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim_b; ++j) {
        if (y[j].is_zero()) continue;
        Rational c = x[i] * y[j];
        for (int s = 0; s < dim_out; ++s) out[s] += c * at(i, j, s);
      }
    }
    return out;
  }

  /// Image of (x, basis_j).
  Vec apply_left(const Vec& x, int j) const {
    Vec out(dim_out);
    for (int i = 0; i < dim_a; ++i) {
      if (x[i].is_zero()) continue;
      for (int s = 0; s < dim_out; ++s) out[s] += x[i] * at(i, j, s);
    }
    return out;
  }

  /// Image of (basis_i, y).
  Vec apply_right(int i, const Vec& y) const {
    Vec out(dim_out);
    for (int j = 0; j < dim_b; ++j) {
      if (y[j].is_zero()) continue;
      for (int s = 0; s < dim_out; ++s) out[s] += y[j] * at(i, j, s);
    }
    return out;
  }

  /// Image of a raw tensor (coordinates over the (i,j) basis of A (x) B).
  Vec apply_tensor(const Vec& t) const {
    Vec out(dim_out);
    for (int r = 0; r < dim_a * dim_b; ++r) {
      if (t[r].is_zero()) continue;
      for (int s = 0; s < dim_out; ++s) out[s] += t[r] * table(r, s);
    }
    return out;
  }

  /// The map (y, x) -> -[x, y].
  BilinearMap flipped_negated() const {
    BilinearMap f(dim_b, dim_a, dim_out);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_b; ++j)
        for (int s = 0; s < dim_out; ++s) f.at(j, i, s) = -at(i, j, s);
    return f;
  }
};

/// Local Lie algebra G_{-1} + G_0 + G_1: brackets are defined whenever the
/// degrees sum to -1, 0 or 1. Four families are stored; [G_{-1}, G_1] is
/// forced by antisymmetry.
struct LocalLieAlgebra {
  std::vector<std::string> labels_neg;
  std::vector<std::string> labels_zero;
  std::vector<std::string> labels_pos;

  BilinearMap zz;  // [G_0, G_0]  -> G_0
  BilinearMap zp;  // [G_0, G_1]  -> G_1
  BilinearMap zn;  // [G_0, G_-1] -> G_-1
  BilinearMap pn;  // [G_1, G_-1] -> G_0

  int dim_neg() const { return static_cast<int>(labels_neg.size()); }
  int dim_zero() const { return static_cast<int>(labels_zero.size()); }
  int dim_pos() const { return static_cast<int>(labels_pos.size()); }

  static LocalLieAlgebra with_dims(int nneg, int nzero, int npos) {
    LocalLieAlgebra l;
    for (int i = 0; i < nneg; ++i) l.labels_neg.push_back("f" + std::to_string(i + 1));
    for (int i = 0; i < nzero; ++i) l.labels_zero.push_back("h" + std::to_string(i + 1));
    for (int i = 0; i < npos; ++i) l.labels_pos.push_back("e" + std::to_string(i + 1));
    l.zz = BilinearMap(nzero, nzero, nzero);
    l.zp = BilinearMap(nzero, npos, npos);
    l.zn = BilinearMap(nzero, nneg, nneg);
    l.pn = BilinearMap(npos, nneg, nzero);
    return l;
  }
};

/// Checks the local Lie algebra axioms: antisymmetry of the degree-0 bracket
/// and the Jacobi identity on every basis triple whose three pairwise
/// brackets stay inside the local part. Returns the violated identities;
/// empty means valid.
inline std::vector<std::string> validate_local(const LocalLieAlgebra& l) {
  std::vector<std::string> bad;
  int nz = l.dim_zero(), np = l.dim_pos(), nn = l.dim_neg();
  auto shape_ok = [&](const BilinearMap& m, int a, int b, int out) {
    return m.dim_a == a && m.dim_b == b && m.dim_out == out && m.table.rows() == a * b && m.table.cols() == out;
  };
  if (!shape_ok(l.zz, nz, nz, nz) || !shape_ok(l.zp, nz, np, np) || !shape_ok(l.zn, nz, nn, nn) ||
      !shape_ok(l.pn, np, nn, nz)) {
    bad.push_back("structure tables do not match the stated dimensions");
    return bad;
  }
  auto lz = [&](int i) { return l.labels_zero[i]; };
  auto lp = [&](int i) { return l.labels_pos[i]; };
  auto ln = [&](int i) { return l.labels_neg[i]; };

  for (int a = 0; a < nz; ++a)
    for (int b = a; b < nz; ++b)
      if (!is_zero_vec(add(l.zz.row(a, b), l.zz.row(b, a))))
        bad.push_back("antisymmetry([" + lz(a) + "," + lz(b) + "]) violated");

  // Jacobi on (0,0,0): [a,[b,c]] = [[a,b],c] + [b,[a,c]].
  for (int a = 0; a < nz; ++a)
    for (int b = 0; b < nz; ++b)
      for (int c = 0; c < nz; ++c) {
        Vec t = l.zz.apply_right(a, l.zz.row(b, c));
        t = sub(t, l.zz.apply_left(l.zz.row(a, b), c));
        t = sub(t, l.zz.apply_right(b, l.zz.row(a, c)));
        if (!is_zero_vec(t)) bad.push_back("jacobi(" + lz(a) + "," + lz(b) + "," + lz(c) + ") violated");
      }

  // Jacobi on (0,0,1) and (0,0,-1): the degree-0 part acts as a representation.
  for (int a = 0; a < nz; ++a)
    for (int b = 0; b < nz; ++b) {
      for (int e = 0; e < np; ++e) {
        Vec t = l.zp.apply_right(a, l.zp.row(b, e));
        t = sub(t, l.zp.apply_right(b, l.zp.row(a, e)));
        t = sub(t, l.zp.apply_left(l.zz.row(a, b), e));
        if (!is_zero_vec(t)) bad.push_back("jacobi(" + lz(a) + "," + lz(b) + "," + lp(e) + ") violated");
      }
      for (int f = 0; f < nn; ++f) {
        Vec t = l.zn.apply_right(a, l.zn.row(b, f));
        t = sub(t, l.zn.apply_right(b, l.zn.row(a, f)));
        t = sub(t, l.zn.apply_left(l.zz.row(a, b), f));
        if (!is_zero_vec(t)) bad.push_back("jacobi(" + lz(a) + "," + lz(b) + "," + ln(f) + ") violated");
      }
    }

  // Jacobi on (0,1,-1): [a,[e,f]] = [[a,e],f] + [e,[a,f]].
  for (int a = 0; a < nz; ++a)
    for (int e = 0; e < np; ++e)
      for (int f = 0; f < nn; ++f) {
        Vec t = l.zz.apply_right(a, l.pn.row(e, f));
        t = sub(t, l.pn.apply_left(l.zp.row(a, e), f));
        t = sub(t, l.pn.apply_right(e, l.zn.row(a, f)));
        if (!is_zero_vec(t)) bad.push_back("jacobi(" + lz(a) + "," + lp(e) + "," + ln(f) + ") violated");
      }

  return bad;
}

/// Degree-preserving linear map between local Lie algebras, one matrix per
/// degree; row i holds the image coordinates of the i-th source basis vector.
struct LocalHom {
  QMatrix neg;
  QMatrix zero;
  QMatrix pos;
};

struct HomViolation {
  std::string description;
};

struct LocalHomResult {
  bool ok = false;
  // Kernel basis split by degree, each vector in source coordinates.
  std::vector<Vec> kernel_neg;
  std::vector<Vec> kernel_zero;
  std::vector<Vec> kernel_pos;
  std::vector<HomViolation> violations;
};

/// Checks bracket preservation on all basis pairs with defined local
/// brackets; on success reports the kernel of the map.
inline LocalHomResult local_hom_check(const LocalLieAlgebra& src, const LocalLieAlgebra& dst,
                                      const LocalHom& map) {
  if (map.neg.rows() != src.dim_neg() || map.neg.cols() != dst.dim_neg() ||
      map.zero.rows() != src.dim_zero() || map.zero.cols() != dst.dim_zero() ||
      map.pos.rows() != src.dim_pos() || map.pos.cols() != dst.dim_pos())
    throw DimensionMismatch("local_hom_check: map shapes do not match the algebras");

  auto push = [](const QMatrix& m, const Vec& x) {
    Vec out(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    }
    return out;
  };

  LocalHomResult res;
  auto check = [&](const char* kind, int i, int j, const Vec& mapped_src, const Vec& dst_val) {
    if (mapped_src != dst_val)
      res.violations.push_back({std::string("bracket not preserved on ") + kind + "(" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
  };

  for (int a = 0; a < src.dim_zero() && res.violations.empty(); ++a)
    for (int b = 0; b < src.dim_zero() && res.violations.empty(); ++b)
      check("[h,h]", a, b, push(map.zero, src.zz.row(a, b)),
            dst.zz.apply(map.zero.row(a), map.zero.row(b)));
  for (int a = 0; a < src.dim_zero() && res.violations.empty(); ++a)
    for (int e = 0; e < src.dim_pos() && res.violations.empty(); ++e)
      check("[h,e]", a, e, push(map.pos, src.zp.row(a, e)),
            dst.zp.apply(map.zero.row(a), map.pos.row(e)));
  for (int a = 0; a < src.dim_zero() && res.violations.empty(); ++a)
    for (int f = 0; f < src.dim_neg() && res.violations.empty(); ++f)
      check("[h,f]", a, f, push(map.neg, src.zn.row(a, f)),
            dst.zn.apply(map.zero.row(a), map.neg.row(f)));
  for (int e = 0; e < src.dim_pos() && res.violations.empty(); ++e)
    for (int f = 0; f < src.dim_neg() && res.violations.empty(); ++f)
      check("[e,f]", e, f, push(map.zero, src.pn.row(e, f)),
            dst.pn.apply(map.pos.row(e), map.neg.row(f)));

  if (!res.violations.empty()) return res;
  res.ok = true;
  res.kernel_neg = nullspace(map.neg.transposed());
  res.kernel_zero = nullspace(map.zero.transposed());
  res.kernel_pos = nullspace(map.pos.transposed());
  return res;
}

}  // namespace pentad
