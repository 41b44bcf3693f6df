#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pentad/cartan_pentad.hpp"
#include "pentad/graded.hpp"

namespace pentad {

/// Pentad (n, n; C, E, E) whose expansion is G(C) = G'(C) for invertible C.
inline CartanPentad realize_invertible(const QMatrix& c) {
  if (!c.is_square()) throw NotSquare("Cartan matrix must be square");
  int n = c.rows();
  if (rank(c) != n) throw SingularMatrix("C is singular; the invertible realization needs rank n");
  return CartanPentad(n, n, c, QMatrix::identity(n), Vec(n, Rational(1)));
}

struct Symmetrization {
  std::vector<Rational> gamma;  // invertible diagonal
  QMatrix s;                    // symmetric, C = diag(gamma) * s
};

/// Finds an invertible diagonal Gamma and symmetric S with C = Gamma * S.
/// gamma is propagated along a spanning forest of the nonzero-pattern graph
/// (value 1 at each component root); every other edge is verified through
/// the final symmetry check.
inline Symmetrization symmetrize(const QMatrix& c) {
  if (!c.is_square()) throw NotSquare("Cartan matrix must be square");
  int n = c.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c(i, j).is_zero() != c(j, i).is_zero())
        throw NotSymmetrizable("asymmetric zero pattern at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");

  std::vector<std::optional<Rational>> g(n);
  for (int root = 0; root < n; ++root) {
    if (g[root]) continue;
    g[root] = Rational(1);
    std::vector<int> queue{root};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || g[j] || c(i, j).is_zero()) continue;
        g[j] = *g[i] * c(j, i) / c(i, j);
        queue.push_back(j);
      }
    }
  }

  Symmetrization out;
  out.gamma.reserve(n);
  for (int i = 0; i < n; ++i) out.gamma.push_back(*g[i]);
  out.s = QMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.s(i, j) = c(i, j) / out.gamma[i];
  if (!out.s.is_symmetric()) throw NotSymmetrizable("inconsistent cycle in the nonzero pattern");
  return out;
}

/// Pentad (l, n; Q, P1, Gamma) with symmetric A = Q realizing G'(C) for
/// symmetrizable C of rank l: C = Gamma * S and S = transpose(P1) * Q * P1.
inline CartanPentad realize_symmetrizable(const QMatrix& c) {
  Symmetrization sym = symmetrize(c);
  SymmetricDecomposition dec = decompose_symmetric(sym.s);
  int l = dec.q.rows();
  return CartanPentad(l, c.rows(), dec.q, dec.p1, sym.gamma);
}

/// Borders C to an invertible (2n-l) x (2n-l) matrix [[C, N], [M, 0]].
/// N's columns (resp. M's rows) are the lexicographically first standard
/// basis vectors completing the column (resp. row) space of C.
inline QMatrix complete_to_invertible(const QMatrix& c) {
  if (!c.is_square()) throw NotSquare("Cartan matrix must be square");
  int n = c.rows();

  auto complement = [n](const QMatrix& span_rows) {
    std::vector<Vec> rows;
    for (int i = 0; i < span_rows.rows(); ++i) rows.push_back(span_rows.row(i));
    int cur = rank(span_rows);
    std::vector<int> chosen;
    for (int q = 0; q < n && cur < n; ++q) {
      rows.push_back(unit_vec(n, q));
      if (rank(QMatrix::from_rows(rows, n)) > cur) {
        chosen.push_back(q);
        ++cur;
      } else {
        rows.pop_back();
      }
    }
    return chosen;
  };

  std::vector<int> col_idx = complement(c.transposed());  // complete the column space
  std::vector<int> row_idx = complement(c);               // complete the row space
  int b = static_cast<int>(col_idx.size());

  QMatrix a(n + b, n + b);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = c(i, j);
  for (int t = 0; t < b; ++t) a(col_idx[t], n + t) = Rational(1);
  for (int t = 0; t < b; ++t) a(n + t, row_idx[t]) = Rational(1);
  if (rank(a) != n + b) throw CompletionFailed("bordered matrix is singular");
  return a;
}

enum class RealizeMode { invertible, symmetrizable, full_km, derived };

inline std::string to_string(RealizeMode m) {
  switch (m) {
    case RealizeMode::invertible: return "invertible";
    case RealizeMode::symmetrizable: return "symmetrizable";
    case RealizeMode::full_km: return "full_km";
    case RealizeMode::derived: return "derived";
  }
  return "?";
}

struct RealizationCertificate {
  RealizeMode mode = RealizeMode::invertible;
  bool cartan_round_trip = false;
  bool coroots_independent = false;
  bool alpha_independent = false;  // rank D == n
  int rank_d = 0;
  int dim0 = 0;
};

inline RealizationCertificate make_certificate(RealizeMode mode, const CartanPentad& p, const QMatrix& c) {
  RealizationCertificate cert;
  cert.mode = mode;
  cert.cartan_round_trip = cartan_matrix(p) == c;
  cert.coroots_independent = rank(p.gamma_matrix() * p.d().transposed() * p.a()) == p.n();
  cert.rank_d = rank(p.d());
  cert.alpha_independent = cert.rank_d == p.n();
  cert.dim0 = p.r();
  return cert;
}

struct Realization {
  CartanPentad pentad;
  RealizationCertificate certificate;
};

/// Pentad (2n-l, n; A, D, Gamma) with A the bordered completion,
/// D = [E_n over 0] and Gamma = E_n, whose expansion realizes g(C) for an
/// arbitrary square C.
inline Realization realize_full_km(const QMatrix& c) {
  int n = c.rows();
  QMatrix a = complete_to_invertible(c);
  int r = a.rows();
  QMatrix d = vstack(QMatrix::identity(n), QMatrix(r - n, n));
  CartanPentad p(r, n, a, d, Vec(n, Rational(1)));
  RealizationCertificate cert = make_certificate(RealizeMode::full_km, p, c);
  return {std::move(p), cert};
}

/// Per-degree dimensions of the derived algebra of the full Kac-Moody
/// pentad's expansion; equals the dimension table of G(C) itself.
inline std::map<int, int> derived_realization(const QMatrix& c, int cutoff, std::size_t max_total_dim = 0) {
  Realization real = realize_full_km(c);
  GradedAlgebra ga = expand(local_algebra(real.pentad), cutoff, max_total_dim);
  return derived_dims(ga);
}

}  // namespace pentad
