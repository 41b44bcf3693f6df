#pragma once

// Reusable engine-level property checks for graded expansions.

#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pentad/graded.hpp"

namespace props {

using namespace pentad;

/// Full deterministic dump of an expansion: dimensions, chosen sections and
/// every stored structure-constant table.
inline std::string serialize_graded(const GradedAlgebra& ga) {
  std::ostringstream out;
  auto dump_map = [&](const BilinearMap& m) {
    out << m.dim_a << "x" << m.dim_b << "->" << m.dim_out << ":";
    for (int r = 0; r < m.table.rows(); ++r)
      for (int c = 0; c < m.table.cols(); ++c) out << m.table(r, c).str() << ",";
    out << ";";
  };
  auto dump_side = [&](const GradedSide& s) {
    for (int k = 1; k <= ga.cutoff(); ++k) {
      out << "k" << k << "=" << s.dims[k] << "|";
      for (auto [u, e] : s.section[k]) out << u << ":" << e << " ";
      dump_map(s.rho[k]);
      dump_map(s.beta[k]);
      if (k < ga.cutoff()) dump_map(s.mu[k]);
    }
    out << "terminated=" << s.terminated << "\n";
  };
  out << "dim0=" << ga.dim(0) << "\n";
  dump_side(ga.pos());
  dump_side(ga.neg());
  return out.str();
}

/// Antisymmetry of every computed bracket matrix pair, checked exhaustively.
inline bool antisymmetry_holds(const GradedAlgebra& ga) {
  int n = ga.cutoff();
  for (int m = -n; m <= n; ++m)
    for (int k = -n; k <= n; ++k) {
      if (std::abs(m + k) > n) continue;
      if (ga.bracket_map(m, k).table != ga.bracket_map(k, m).flipped_negated().table) return false;
    }
  return true;
}

/// Jacobi identity on random coordinate triples of random degrees.
inline bool jacobi_holds(const GradedAlgebra& ga, int trials, std::mt19937& rng) {
  int n = ga.cutoff();
  std::uniform_int_distribution<int> deg(-n, n);
  int done = 0;
  while (done < trials) {
    int a = deg(rng), b = deg(rng), c = deg(rng);
    if (std::abs(a + b) > n || std::abs(a + c) > n || std::abs(b + c) > n || std::abs(a + b + c) > n)
      continue;
    ++done;
    Vec x = oracle::random_vec(rng, ga.dim(a));
    Vec y = oracle::random_vec(rng, ga.dim(b));
    Vec z = oracle::random_vec(rng, ga.dim(c));
    Vec lhs = ga.bracket(a, x, b + c, ga.bracket(b, y, c, z));
    Vec r1 = ga.bracket(a + b, ga.bracket(a, x, b, y), c, z);
    Vec r2 = ga.bracket(b, y, a + c, ga.bracket(a, x, c, z));
    if (sub(lhs, add(r1, r2)) != Vec(ga.dim(a + b + c))) return false;
  }
  return true;
}

/// T_1 kills every symmetric 2-tensor of degree-1 generators.
inline bool symmetric_tensors_in_kernel(const GradedAlgebra& ga, int trials, std::mt19937& rng) {
  if (ga.cutoff() < 2) return true;
  auto check_side = [&](const GradedSide& side, int dim1) {
    if (dim1 == 0) return true;
    for (int t = 0; t < trials; ++t) {
      Vec u = oracle::random_vec(rng, dim1);
      Vec e = oracle::random_vec(rng, dim1);
      Vec img = add(side.mu[1].apply(u, e), side.mu[1].apply(e, u));
      if (!is_zero_vec(img)) return false;
    }
    return true;
  };
  return check_side(ga.pos(), ga.local().dim_pos()) && check_side(ga.neg(), ga.local().dim_neg());
}

/// The degree-0 action preserves ker T_k at every computed degree.
inline bool action_preserves_kernels(const GradedAlgebra& ga) {
  int nz = ga.local().dim_zero();
  auto check_side = [&](const GradedSide& side, const BilinearMap& rho_raise, int dim_raise) {
    for (int k = 1; k < ga.cutoff(); ++k) {
      int nk = side.dims[k];
      if (nk == 0) break;
      const BilinearMap& mu = side.mu[k];
      const BilinearMap& rho_k = side.rho[k];
      for (const Vec& t : nullspace(mu.table.transposed())) {
        for (int a = 0; a < nz; ++a) {
          Vec acted(nk * dim_raise);
          for (int u = 0; u < nk; ++u)
            for (int e = 0; e < dim_raise; ++e) {
              const Rational& coeff = t[u * dim_raise + e];
              if (coeff.is_zero()) continue;
              for (int u2 = 0; u2 < nk; ++u2) acted[u2 * dim_raise + e] += coeff * rho_k.at(a, u, u2);
              for (int e2 = 0; e2 < dim_raise; ++e2) acted[u * dim_raise + e2] += coeff * rho_raise.at(a, e, e2);
            }
          if (!is_zero_vec(mu.apply_tensor(acted))) return false;
        }
      }
    }
    return true;
  };
  return check_side(ga.pos(), ga.local().zp, ga.local().dim_pos()) &&
         check_side(ga.neg(), ga.local().zn, ga.local().dim_neg());
}

/// dim V_{k+1} = dim(V_k (x) V_1) - dim ker T_k at every computed degree.
inline bool rank_nullity_holds(const GradedAlgebra& ga) {
  auto check_side = [&](const GradedSide& side, int dim_raise) {
    for (int k = 1; k < ga.cutoff(); ++k) {
      int nk = side.dims[k];
      if (nk == 0) break;
      int tensor_dim = nk * dim_raise;
      int kernel = static_cast<int>(nullspace(side.mu[k].table.transposed()).size());
      if (side.dims[k + 1] != tensor_dim - kernel) return false;
      if (rank(side.mu[k].table) != side.dims[k + 1]) return false;
    }
    return true;
  };
  return check_side(ga.pos(), ga.local().dim_pos()) && check_side(ga.neg(), ga.local().dim_neg());
}

/// Bundles every engine property over one expansion.
inline bool engine_properties_hold(const GradedAlgebra& ga, int jacobi_trials, std::mt19937& rng) {
  return validate_local(ga.local()).empty() && check_transitive(ga) && antisymmetry_holds(ga) &&
         jacobi_holds(ga, jacobi_trials, rng) && symmetric_tensors_in_kernel(ga, 20, rng) &&
         action_preserves_kernels(ga) && rank_nullity_holds(ga);
}

}  // namespace props
