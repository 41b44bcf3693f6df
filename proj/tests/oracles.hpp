#pragma once

// Test-only oracles, independent of the library's expansion path.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pentad/matrix.hpp"

namespace oracle {

/// Dimension of degree k in the loop algebra C[t,1/t] (x) sl2 graded by
/// deg(e (x) t^m) = 2m+1, deg(h (x) t^m) = 2m, deg(f (x) t^m) = 2m-1:
/// each odd degree sees one e-type and one f-type vector, each even degree
/// exactly one h-type vector.
inline int loop_dim(int k) {
  if (k == 0) return 1;
  return std::abs(k) % 2 == 1 ? 2 : 1;
}

/// Positive roots of a finite-type generalized Cartan matrix, counted by
/// height. Roots are enumerated as the Weyl-group orbit of the simple roots
/// (every root of a finite root system is conjugate to a simple one):
/// s_i(beta) = beta - (sum_j C_ij beta_j) alpha_i in simple-root coordinates.
inline std::map<int, int> positive_root_heights(const pentad::QMatrix& c) {
  using pentad::Rational;
  int n = c.rows();
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> alpha(n);
    alpha[i] = Rational(1);
    seen.insert(alpha);
    frontier.push_back(alpha);
  }
  std::size_t guard = 0;
  while (!frontier.empty()) {
    if (++guard > 10000) throw std::runtime_error("root enumeration did not terminate (not finite type?)");
    std::vector<std::vector<Rational>> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < n; ++i) {
        Rational pairing;
        for (int j = 0; j < n; ++j) pairing += c(i, j) * beta[j];
        std::vector<Rational> image = beta;
        image[i] -= pairing;
        if (seen.insert(image).second) next.push_back(image);
      }
    frontier = std::move(next);
  }
  std::map<int, int> by_height;
  for (const auto& root : seen) {
    bool positive = true;
    Rational height;
    for (const auto& x : root) {
      if (x < Rational(0)) positive = false;
      height += x;
    }
    if (!positive) continue;
    // heights of roots of a GCM are integers
    by_height[static_cast<int>(height.numerator().get_si())] += 1;
  }
  return by_height;
}

/// Deterministic random rationals with numerator in [-bound, bound] * den
/// and denominator in [1, max_den].
inline pentad::Rational random_rational(std::mt19937& rng, long bound = 3, long max_den = 4) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-bound * den, bound * den);
  return pentad::Rational(num_dist(rng), den);
}

inline pentad::QMatrix random_matrix(std::mt19937& rng, int rows, int cols, long bound = 3, long max_den = 4) {
  pentad::QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound, max_den);
  return m;
}

inline pentad::Vec random_vec(std::mt19937& rng, int n, long bound = 3, long max_den = 2) {
  pentad::Vec v(n);
  for (auto& x : v) x = random_rational(rng, bound, max_den);
  return v;
}

}  // namespace oracle
