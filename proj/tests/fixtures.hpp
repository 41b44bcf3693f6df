#pragma once

// Shared fixtures: the worked pentads and small Cartan matrices used across
// the test suites.

#include "pentad/cartan_pentad.hpp"

namespace fixtures {

using pentad::CartanPentad;
using pentad::QMatrix;
using pentad::Rational;

inline QMatrix affine_a1() {
  return QMatrix(2, 2, {Rational(2), Rational(-2), Rational(-2), Rational(2)});
}

inline QMatrix cartan_a2() {
  return QMatrix(2, 2, {Rational(2), Rational(-1), Rational(-1), Rational(2)});
}

inline QMatrix cartan_b2() {
  return QMatrix(2, 2, {Rational(2), Rational(-1), Rational(-2), Rational(2)});
}

/// The (3,2; A, D, diag(4,4)) pentad realizing the full affine Kac-Moody
/// algebra: loop algebra plus the central element and the derivation.
inline CartanPentad affine_g_pentad() {
  QMatrix a(3, 3);
  a(0, 0) = Rational(1, 8);
  a(1, 2) = Rational(1);
  a(2, 1) = Rational(1);
  QMatrix d(3, 2);
  d(0, 0) = Rational(2);
  d(0, 1) = Rational(-2);
  d(2, 1) = Rational(1);
  return CartanPentad(3, 2, a, d, {Rational(4), Rational(4)});
}

/// The (1,2; [[1/8]], [2,-n], diag(4,4)) pentad of sl2 with its
/// (n+1)-dimensional irreducible representation.
inline CartanPentad sl2_rep_pentad(long n) {
  QMatrix a(1, 1);
  a(0, 0) = Rational(1, 8);
  QMatrix d(1, 2);
  d(0, 0) = Rational(2);
  d(0, 1) = Rational(-n);
  return CartanPentad(1, 2, a, d, {Rational(4), Rational(4)});
}

/// The one-dimensional pentad whose local part is the sl2 triple.
inline CartanPentad sl2_pentad() {
  QMatrix a(1, 1);
  a(0, 0) = Rational(1, 8);
  QMatrix d(1, 1);
  d(0, 0) = Rational(2);
  return CartanPentad(1, 1, a, d, {Rational(4)});
}

}  // namespace fixtures
