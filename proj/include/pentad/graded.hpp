#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pentad/local.hpp"

namespace pentad {

/// One half of a graded expansion. Level k holds the degree +-k component;
/// level 1 is the raising space of the local part.
struct GradedSide {
  std::vector<int> dims;                                   // [k] for k = 1..cutoff
  std::vector<BilinearMap> rho;                            // [k]: V_0 (x) V_k -> V_k
  std::vector<BilinearMap> mu;                             // [k]: V_k (x) V_1 -> V_{k+1}
  std::vector<BilinearMap> beta;                           // [k]: V_k (x) V_{-1} -> V_{k-1}
  std::vector<std::vector<std::pair<int, int>>> section;   // [k]: pivot tensor (u, gen) per basis vector
  bool terminated = false;
};

/// The minimal graded Lie algebra generated by a local part, expanded up to
/// an explicit degree cutoff. Values are immutable once built; bracket
/// matrices beyond the stored adjacent-degree maps are memoized lazily under
/// a lock, so completed instances can be shared across threads.
class GradedAlgebra {
 public:
  int cutoff() const { return cutoff_; }
  const LocalLieAlgebra& local() const { return local_; }
  const GradedSide& pos() const { return pos_; }
  const GradedSide& neg() const { return neg_; }
  bool terminated_pos() const { return pos_.terminated; }
  bool terminated_neg() const { return neg_.terminated; }

  int dim(int degree) const {
    if (std::abs(degree) > cutoff_) throw OutOfRange("degree beyond the expansion cutoff");
    if (degree == 0) return local_.dim_zero();
    return degree > 0 ? pos_.dims[degree] : neg_.dims[-degree];
  }

  std::map<int, int> dimension_table() const {
    std::map<int, int> t;
    for (int k = -cutoff_; k <= cutoff_; ++k) t[k] = dim(k);
    return t;
  }

  /// Structure constants of [V_m, V_k] -> V_{m+k}.
  const BilinearMap& bracket_map(int m, int k) const {
    if (std::abs(m) > cutoff_ || std::abs(k) > cutoff_ || std::abs(m + k) > cutoff_)
      throw OutOfRange("bracket degrees exceed the expansion cutoff");
    std::lock_guard<std::recursive_mutex> guard(memo_->mutex);
    return brk(m, k);
  }

  Vec bracket(int m, const Vec& x, int k, const Vec& y) const {
    const BilinearMap& b = bracket_map(m, k);
    if (static_cast<int>(x.size()) != b.dim_a || static_cast<int>(y.size()) != b.dim_b)
      throw DimensionMismatch("bracket operand length does not match its degree component");
    return b.apply(x, y);
  }

  GradedAlgebra(GradedAlgebra&&) = default;
  GradedAlgebra& operator=(GradedAlgebra&&) = default;

  /// Builds a value directly from raw tables (used by expand and by tests
  /// that assemble deliberately broken tables).
  static GradedAlgebra from_parts(LocalLieAlgebra local, int cutoff, GradedSide pos, GradedSide neg) {
    GradedAlgebra ga;
    ga.local_ = std::move(local);
    ga.cutoff_ = cutoff;
    ga.pos_ = std::move(pos);
    ga.neg_ = std::move(neg);
    return ga;
  }

 private:
  GradedAlgebra() = default;

  const BilinearMap& brk(int m, int k) const {
    auto key = std::make_pair(m, k);
    auto it = memo_->table.find(key);
    if (it != memo_->table.end()) return it->second;

    BilinearMap result;
    if (k == 1 || k == 0 || k == -1) {
      result = base_map(m, k);
    } else if (std::abs(m) <= 1) {
      result = brk(k, m).flipped_negated();
    } else if (k >= 2) {
      // Second argument through its section: y_t = [u_t, e_t] with u_t of
      // degree k-1, so [x, y_t] = [[x,u_t], e_t] + [u_t, [x,e_t]].
      const auto& sect = pos_.section[k];
      result = BilinearMap(dim(m), dim(k), dim(m + k));
      const BilinearMap& x_u = brk(m, k - 1);
      const BilinearMap& top = brk(m + k - 1, 1);
      const BilinearMap& x_e = brk(m, 1);
      const BilinearMap& rest = brk(m + 1, k - 1);
      for (int t = 0; t < dim(k); ++t) {
        auto [u, e] = sect[t];
        for (int i = 0; i < dim(m); ++i) {
          Vec a = top.apply_left(x_u.row(i, u), e);
          Vec b = rest.apply_left(x_e.row(i, e), u);
          result.set_row(i, t, sub(a, b));
        }
      }
    } else {
      const auto& sect = neg_.section[-k];
      result = BilinearMap(dim(m), dim(k), dim(m + k));
      const BilinearMap& x_w = brk(m, k + 1);
      const BilinearMap& top = brk(m + k + 1, -1);
      const BilinearMap& x_f = brk(m, -1);
      const BilinearMap& rest = brk(m - 1, k + 1);
      for (int t = 0; t < dim(k); ++t) {
        auto [w, f] = sect[t];
        for (int i = 0; i < dim(m); ++i) {
          Vec a = top.apply_left(x_w.row(i, w), f);
          Vec b = rest.apply_left(x_f.row(i, f), w);
          result.set_row(i, t, sub(a, b));
        }
      }
    }
    return memo_->table.emplace(key, std::move(result)).first->second;
  }

  BilinearMap base_map(int m, int k) const {
    if (k == 1) {
      if (m >= 1) return pos_.mu[m];
      if (m == 0) return local_.zp;
      if (m == -1) return local_.pn.flipped_negated();
      return neg_.beta[-m];
    }
    if (k == -1) {
      if (m >= 2) return pos_.beta[m];
      if (m == 1) return local_.pn;
      if (m == 0) return local_.zn;
      return neg_.mu[-m];
    }
    if (m == 0) return local_.zz;
    const BilinearMap& rho = m > 0 ? pos_.rho[m] : neg_.rho[-m];
    return rho.flipped_negated();
  }

  LocalLieAlgebra local_;
  int cutoff_ = 0;
  GradedSide pos_;
  GradedSide neg_;

  struct Memo {
    std::recursive_mutex mutex;
    std::map<std::pair<int, int>, BilinearMap> table;
  };
  mutable std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();

  friend GradedAlgebra expand(const LocalLieAlgebra&, int, std::size_t);
};

namespace detail {

/// Expands one side of the minimal graded algebra. V_{k+1} is realized as
/// the image of T_k : V_k (x) R -> Hom(L, V_k), T_k(u (x) e)(f) =
/// [u,[e,f]] + [[u,f],e]; transitivity at degrees >= 2 is automatic in this
/// representation. The quotient basis is the set of pivot columns of the
/// reduced row echelon form of T_k, with tensor columns ordered
/// lexicographically by (component index, generator index).
inline void build_side(GradedSide& side, const BilinearMap& rho_raise, const BilinearMap& pair,
                       int dim0, int dim_raise, int dim_lower, int cutoff, std::size_t& total,
                       std::size_t cap) {
  side.dims.assign(cutoff + 1, 0);
  side.rho.assign(cutoff + 1, BilinearMap());
  side.mu.assign(cutoff + 1, BilinearMap());
  side.beta.assign(cutoff + 1, BilinearMap());
  side.section.assign(cutoff + 1, {});

  side.dims[1] = dim_raise;
  side.rho[1] = rho_raise;
  side.beta[1] = pair;

  for (int k = 1; k < cutoff; ++k) {
    int nk = side.dims[k];
    const BilinearMap& mu_prev = (k == 1) ? rho_raise : side.mu[k - 1];

    QMatrix t_mat(dim_lower * nk, nk * dim_raise);
    for (int u = 0; u < nk; ++u)
      for (int e = 0; e < dim_raise; ++e) {
        int col = u * dim_raise + e;
        for (int a = 0; a < dim_lower; ++a) {
          Vec v = sub(mu_prev.apply_left(side.beta[k].row(u, a), e),
                      side.rho[k].apply_left(pair.row(e, a), u));
          for (int s = 0; s < nk; ++s) t_mat(a * nk + s, col) = v[s];
        }
      }

    RrefResult red = rref(t_mat);
    int next = static_cast<int>(red.pivot_cols.size());
    total += static_cast<std::size_t>(next);
    if (cap != 0 && total > cap)
      throw ExpansionLimit("expansion exceeded the total dimension cap of " + std::to_string(cap));

    side.dims[k + 1] = next;
    side.section[k + 1].reserve(next);
    for (int p : red.pivot_cols) side.section[k + 1].emplace_back(p / dim_raise, p % dim_raise);

    BilinearMap beta_next(next, dim_lower, nk);
    for (int t = 0; t < next; ++t) {
      int p = red.pivot_cols[t];
      for (int a = 0; a < dim_lower; ++a)
        for (int s = 0; s < nk; ++s) beta_next.at(t, a, s) = t_mat(a * nk + s, p);
    }
    side.beta[k + 1] = std::move(beta_next);

    BilinearMap mu_k(nk, dim_raise, next);
    for (int c = 0; c < nk * dim_raise; ++c)
      for (int t = 0; t < next; ++t) mu_k.table(c, t) = red.mat(t, c);
    side.mu[k] = std::move(mu_k);

    BilinearMap rho_next(dim0, next, next);
    for (int a = 0; a < dim0; ++a)
      for (int t = 0; t < next; ++t) {
        auto [u, e] = side.section[k + 1][t];
        Vec v = add(side.mu[k].apply_left(side.rho[k].row(a, u), e),
                    side.mu[k].apply_right(u, rho_raise.row(a, e)));
        rho_next.set_row(a, t, v);
      }
    side.rho[k + 1] = std::move(rho_next);

    if (next == 0) {
      // All higher components vanish: degree k+2 and beyond are images of a
      // zero space. Fill the remaining levels with trivial tables.
      for (int kk = k + 2; kk <= cutoff; ++kk) {
        side.beta[kk] = BilinearMap(0, dim_lower, 0);
        side.rho[kk] = BilinearMap(dim0, 0, 0);
        side.mu[kk - 1] = BilinearMap(0, dim_raise, 0);
      }
      side.rho[k + 1] = BilinearMap(dim0, 0, 0);
      break;
    }
  }

  for (int k = 1; k <= cutoff; ++k)
    if (side.dims[k] == 0) side.terminated = true;
}

}  // namespace detail

/// Expands a valid local Lie algebra into the minimal graded Lie algebra
/// with that local part, up to the given degree cutoff. max_total_dim, when
/// nonzero, caps the summed dimension of all computed components.
inline GradedAlgebra expand(const LocalLieAlgebra& local, int cutoff, std::size_t max_total_dim = 0) {
  if (cutoff < 1) throw InvalidArgument("expansion cutoff must be >= 1");
  auto report = validate_local(local);
  if (!report.empty())
    throw InvalidLocal("local Lie algebra axioms violated: " + report.front());

  GradedAlgebra ga;
  ga.local_ = local;
  ga.cutoff_ = cutoff;
  std::size_t total = static_cast<std::size_t>(local.dim_zero() + local.dim_pos() + local.dim_neg());
  if (max_total_dim != 0 && total > max_total_dim)
    throw ExpansionLimit("expansion exceeded the total dimension cap of " + std::to_string(max_total_dim));
  detail::build_side(ga.pos_, local.zp, local.pn, local.dim_zero(), local.dim_pos(), local.dim_neg(),
                     cutoff, total, max_total_dim);
  detail::build_side(ga.neg_, local.zn, local.pn.flipped_negated(), local.dim_zero(), local.dim_neg(),
                     local.dim_pos(), cutoff, total, max_total_dim);
  return ga;
}

/// Basis of {z in V_0 : [z, V_1] = 0 and [z, V_-1] = 0}. For minimal
/// transitive algebras this is the whole center.
inline std::vector<Vec> degree0_center(const LocalLieAlgebra& l) {
  int nz = l.dim_zero(), np = l.dim_pos(), nn = l.dim_neg();
  QMatrix constraints(np * np + nn * nn, nz);
  int r = 0;
  for (int j = 0; j < np; ++j)
    for (int s = 0; s < np; ++s, ++r)
      for (int a = 0; a < nz; ++a) constraints(r, a) = l.zp.at(a, j, s);
  for (int j = 0; j < nn; ++j)
    for (int s = 0; s < nn; ++s, ++r)
      for (int a = 0; a < nz; ++a) constraints(r, a) = l.zn.at(a, j, s);
  return nullspace(constraints);
}

inline std::vector<Vec> degree0_center(const GradedAlgebra& ga) { return degree0_center(ga.local()); }

/// Per-degree dimensions of the span of all brackets [V_a, V_b] with
/// a + b = k, computed from the memoized bracket matrices.
inline std::map<int, int> derived_dims(const GradedAlgebra& ga) {
  int n = ga.cutoff();
  std::map<int, int> out;
  for (int g = -n; g <= n; ++g) {
    std::vector<Vec> rows;
    for (int a = -n; a <= n; ++a) {
      int b = g - a;
      if (b < -n || b > n || a < b) continue;  // [V_b, V_a] spans the same image
      if (ga.dim(a) == 0 || ga.dim(b) == 0) continue;
      const BilinearMap& m = ga.bracket_map(a, b);
      for (int r = 0; r < m.table.rows(); ++r) rows.push_back(m.table.row(r));
    }
    out[g] = rows.empty() ? 0 : rank(QMatrix::from_rows(rows, ga.dim(g)));
  }
  return out;
}

/// Verifies transitivity on every computed component of degree |k| >= 2:
/// no nonzero element may be annihilated by the whole opposite degree-1
/// space. True for every expand output; hand-built tables can fail.
inline bool check_transitive(const GradedAlgebra& ga) {
  auto side_ok = [&](const GradedSide& side, int dim_lower) {
    for (int k = 2; k <= ga.cutoff(); ++k) {
      int nk = side.dims[k];
      if (nk == 0) continue;
      int prev = side.dims[k - 1];
      QMatrix m(nk, dim_lower * prev);
      for (int t = 0; t < nk; ++t)
        for (int a = 0; a < dim_lower; ++a)
          for (int s = 0; s < prev; ++s) m(t, a * prev + s) = side.beta[k].at(t, a, s);
      if (rank(m) != nk) return false;
    }
    return true;
  };
  return side_ok(ga.pos(), ga.local().dim_neg()) && side_ok(ga.neg(), ga.local().dim_pos());
}

}  // namespace pentad
