#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "pentad/contragredient.hpp"
#include "pentad/graded.hpp"

namespace pentad {

/// Index into {-1} union (N u {0})^2 with the lexicographical order: the
/// sentinel -1 precedes every pair, pairs compare by first then second entry.
struct FDIndex {
  bool sentinel = false;
  long i = 0;
  long j = 0;

  static FDIndex minus_one() { return {true, 0, 0}; }
  static FDIndex pair(long i, long j) {
    if (i < 0 || j < 0) throw InvalidArgument("pair indices must be nonnegative");
    return {false, i, j};
  }

  friend bool operator==(const FDIndex& a, const FDIndex& b) {
    return a.sentinel == b.sentinel && (a.sentinel || (a.i == b.i && a.j == b.j));
  }
  friend bool operator<(const FDIndex& a, const FDIndex& b) {
    if (a.sentinel != b.sentinel) return a.sentinel;
    if (a.sentinel) return false;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::string str() const {
    if (sentinel) return "(-1)";
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

/// Nonempty finite index set, kept sorted and duplicate-free.
class FDIndexSet {
 public:
  explicit FDIndexSet(std::vector<FDIndex> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty()) throw InvalidArgument("index set must be nonempty");
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const FDIndex& operator[](int t) const { return elems_[t]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

 private:
  std::vector<FDIndex> elems_;
};

/// Row entry of the weight matrix: 2 at the sentinel, -i at a pair (i,j).
inline Rational dtilde_entry(const FDIndex& a) {
  if (a.sentinel) return Rational(2);
  return Rational(-a.i);
}

/// Entry of the full Cartan matrix of the sl2 all-representations pentad:
/// 2 on the sentinel diagonal, -i between the sentinel and a pair (i,j),
/// and ik/2 between two pairs.
inline Rational ctilde_entry(const FDIndex& a, const FDIndex& b) {
  if (a.sentinel && b.sentinel) return Rational(2);
  if (a.sentinel) return Rational(-b.i);
  if (b.sentinel) return Rational(-a.i);
  return Rational(a.i * b.i, 2);
}

inline QMatrix ctilde_minor(const FDIndexSet& m) {
  QMatrix c(m.size(), m.size());
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b) c(a, b) = ctilde_entry(m[a], m[b]);
  return c;
}

/// Local part of the index-set truncation of the sl2 all-representations
/// algebra: degree 0 is spanned by h alone; the sentinel contributes the
/// sl2 triple (x, h, y), a pair (i,j) contributes e-_{i,j} in degree +1 and
/// e+_{i,j} in degree -1 with [h, e-] = -i e-, [h, e+] = i e+ and
/// [e-_{i,j}, e+_{i,j}] = (-i/2) h.
inline LocalLieAlgebra sl2fd_local(const FDIndexSet& m) {
  int n = m.size();
  LocalLieAlgebra l = LocalLieAlgebra::with_dims(n, 1, n);
  l.labels_zero[0] = "h";
  for (int t = 0; t < n; ++t) {
    if (m[t].sentinel) {
      l.labels_pos[t] = "x";
      l.labels_neg[t] = "y";
      l.zp.at(0, t, t) = Rational(2);
      l.zn.at(0, t, t) = Rational(-2);
      l.pn.at(t, t, 0) = Rational(1);
    } else {
      l.labels_pos[t] = "e-" + m[t].str();
      l.labels_neg[t] = "e+" + m[t].str();
      l.zp.at(0, t, t) = Rational(-m[t].i);
      l.zn.at(0, t, t) = Rational(m[t].i);
      l.pn.at(t, t, 0) = Rational(-m[t].i, 2);
    }
  }
  return l;
}

struct PhiMap {
  LocalHom hom;              // from contragredient_local(ctilde_minor(M)) to sl2fd_local(M)
  std::vector<Vec> kernel;   // degree-0 kernel basis, in h_alpha coordinates
};

/// The comparison map: e_alpha -> x or e-, f_alpha -> y or e+, and
/// h_alpha -> h (sentinel) or (-i/2) h (pair). Its kernel is cut out by the
/// single linear condition s_{-1} + sum of (-i/2) s_{(i,j)} = 0.
inline PhiMap phi_map(const FDIndexSet& m) {
  int n = m.size();
  PhiMap phi;
  phi.hom.pos = QMatrix::identity(n);
  phi.hom.neg = QMatrix::identity(n);
  phi.hom.zero = QMatrix(n, 1);
  for (int t = 0; t < n; ++t)
    phi.hom.zero(t, 0) = m[t].sentinel ? Rational(1) : Rational(-m[t].i, 2);
  phi.kernel = nullspace(phi.hom.zero.transposed());
  return phi;
}

/// True when M carries at least one index with a nonzero degree-0 image.
inline bool has_nonzero_weight(const FDIndexSet& m) {
  for (const auto& a : m)
    if (a.sentinel || a.i >= 1) return true;
  return false;
}

/// Expands the truncation local part and the reduced contragredient local of
/// its Cartan minor side by side: true iff the per-degree dimensions agree
/// up to the cutoff, the comparison map is a local homomorphism, and its
/// kernel equals the degree-0 center of the contragredient local.
inline bool compare_with_reduced(const FDIndexSet& m, int cutoff, std::size_t max_total_dim = 0) {
  if (!has_nonzero_weight(m))
    throw DegenerateIndexSet(
        "degenerate index set: every pair has weight 0 and the sentinel -1 is absent");

  QMatrix minor = ctilde_minor(m);
  GradedAlgebra lhs = expand(sl2fd_local(m), cutoff, max_total_dim);
  GradedAlgebra rhs = expand(reduced_local(minor), cutoff, max_total_dim);
  for (int k = -cutoff; k <= cutoff; ++k)
    if (lhs.dim(k) != rhs.dim(k)) return false;

  LocalLieAlgebra source = contragredient_local(minor);
  PhiMap phi = phi_map(m);
  LocalHomResult hom = local_hom_check(source, sl2fd_local(m), phi.hom);
  if (!hom.ok || !hom.kernel_neg.empty() || !hom.kernel_pos.empty()) return false;
  return span_equal(hom.kernel_zero, degree0_center(source), m.size());
}

/// Parses the CLI index-set syntax, e.g. "(-1),(1,0),(2,0)". Pair entries
/// are capped at 10^6; arbitrary-precision arithmetic makes this a guard
/// against absurd inputs, not a correctness bound.
inline FDIndexSet parse_index_set(const std::string& text) {
  constexpr long kMaxIndex = 1000000;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty index set");

  std::vector<FDIndex> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in index set at position " + std::to_string(pos));
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis in index set");
    std::string body = s.substr(pos + 1, close - pos - 1);
    if (body == "-1") {
      out.push_back(FDIndex::minus_one());
    } else {
      std::size_t comma = body.find(',');
      if (comma == std::string::npos) throw ParseError("expected '(-1)' or '(i,j)', got '(" + body + ")'");
      auto parse_nat = [&](const std::string& t) {
        if (t.empty() || t.size() > 7) throw ParseError("index out of range in '(" + body + ")'");
        for (char ch : t)
          if (ch < '0' || ch > '9') throw ParseError("invalid index entry '(" + body + ")'");
        long v = std::stol(t);
        if (v > kMaxIndex) throw ParseError("index exceeds the cap of 1000000");
        return v;
      };
      out.push_back(FDIndex::pair(parse_nat(body.substr(0, comma)), parse_nat(body.substr(comma + 1))));
    }
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("expected ',' between index entries");
      ++pos;
    }
  }
  return FDIndexSet(std::move(out));
}

}  // namespace pentad
