#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pentad/contragredient.hpp"
#include "pentad/sl2fd.hpp"

using namespace pentad;

namespace {

FDIndexSet make_set(std::initializer_list<FDIndex> idx) { return FDIndexSet(std::vector<FDIndex>(idx)); }

}  // namespace

TEST_CASE("index order") {
  CHECK(FDIndex::minus_one() < FDIndex::pair(0, 0));
  CHECK(FDIndex::pair(0, 7) < FDIndex::pair(1, 0));
  CHECK(FDIndex::pair(1, 0) < FDIndex::pair(1, 1));
  CHECK_FALSE(FDIndex::pair(1, 0) < FDIndex::pair(1, 0));
  FDIndexSet m = make_set({FDIndex::pair(2, 0), FDIndex::minus_one(), FDIndex::pair(2, 0)});
  REQUIRE(m.size() == 2);  // sorted, duplicates removed
  CHECK(m[0] == FDIndex::minus_one());
  CHECK_THROWS_AS(FDIndexSet({}), InvalidArgument);
}

TEST_CASE("weight entries") {
  CHECK(dtilde_entry(FDIndex::minus_one()) == Rational(2));
  CHECK(dtilde_entry(FDIndex::pair(0, 5)) == Rational(0));
  CHECK(dtilde_entry(FDIndex::pair(3, 0)) == Rational(-3));
}

TEST_CASE("Cartan entries") {
  CHECK(ctilde_entry(FDIndex::minus_one(), FDIndex::minus_one()) == Rational(2));
  CHECK(ctilde_entry(FDIndex::minus_one(), FDIndex::pair(4, 9)) == Rational(-4));
  CHECK(ctilde_entry(FDIndex::pair(4, 9), FDIndex::minus_one()) == Rational(-4));
  CHECK(ctilde_entry(FDIndex::pair(1, 0), FDIndex::pair(1, 0)) == Rational(1, 2));
  CHECK(ctilde_entry(FDIndex::pair(2, 0), FDIndex::pair(3, 7)) == Rational(3));
}

TEST_CASE("Cartan minors") {
  CHECK(ctilde_minor(make_set({FDIndex::minus_one(), FDIndex::pair(2, 0)})) == fixtures::affine_a1());
  CHECK(ctilde_minor(make_set({FDIndex::minus_one(), FDIndex::pair(1, 0)})) ==
        QMatrix(2, 2, {Rational(2), Rational(-1), Rational(-1), Rational(1, 2)}));
  CHECK(ctilde_minor(make_set({FDIndex::pair(0, 0)})) == QMatrix(1, 1));
}

TEST_CASE("minor agrees with the restricted matrix product") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> size(1, 5), idx(0, 12), pick(0, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<FDIndex> raw;
    int n = size(rng);
    for (int s = 0; s < n; ++s)
      raw.push_back(pick(rng) == 0 ? FDIndex::minus_one() : FDIndex::pair(idx(rng), idx(rng)));
    FDIndexSet m(raw);

    QMatrix minor = ctilde_minor(m);
    // Gamma|_M * transpose(D|_M) * A * D|_M with A = [[1/8]], Gamma = 4E.
    QMatrix dm(1, m.size());
    for (int s = 0; s < m.size(); ++s) dm(0, s) = dtilde_entry(m[s]);
    QMatrix prod = (Rational(4) * QMatrix::identity(m.size())) * dm.transposed() *
                   QMatrix(1, 1, {Rational(1, 8)}) * dm;
    CHECK(minor == prod);
    CHECK(rank(minor) <= 1);
  }
}

TEST_CASE("truncation local parts") {
  LocalLieAlgebra sl2 = sl2fd_local(make_set({FDIndex::minus_one()}));
  CHECK(sl2.zp.row(0, 0) == Vec{Rational(2)});
  CHECK(sl2.zn.row(0, 0) == Vec{Rational(-2)});
  CHECK(sl2.pn.row(0, 0) == Vec{Rational(1)});
  CHECK(validate_local(sl2).empty());

  LocalLieAlgebra l = sl2fd_local(make_set({FDIndex::minus_one(), FDIndex::pair(2, 0)}));
  CHECK(l.labels_pos == std::vector<std::string>{"x", "e-(2,0)"});
  CHECK(l.labels_neg == std::vector<std::string>{"y", "e+(2,0)"});
  CHECK(l.zp.row(0, 1) == Vec{Rational(0), Rational(-2)});   // [h, e-] = -2 e-
  CHECK(l.zn.row(0, 1) == Vec{Rational(0), Rational(2)});    // [h, e+] = 2 e+
  CHECK(l.pn.row(1, 1) == Vec{Rational(-1)});                // [e-, e+] = -h
  CHECK(l.pn.row(0, 1) == Vec{Rational(0)});                 // [x, e+] = 0
  CHECK(l.pn.row(1, 0) == Vec{Rational(0)});                 // [e-, y] = 0
  CHECK(validate_local(l).empty());

  LocalLieAlgebra ab = sl2fd_local(make_set({FDIndex::pair(0, 3)}));
  CHECK(ab.zp.table.is_zero());
  CHECK(ab.zn.table.is_zero());
  CHECK(ab.pn.table.is_zero());
}

TEST_CASE("pairing normalization: B(h, [e-,e+]) = -4i") {
  CartanPentad p = fixtures::sl2_pentad();
  for (long i = 0; i <= 6; ++i) {
    FDIndexSet m = make_set({FDIndex::pair(i, 0)});
    Vec image = sl2fd_local(m).pn.row(0, 0);  // (-i/2) h
    CHECK(bilinear_form(p, {Rational(1)}, image) == Rational(-4 * i));
  }
}

TEST_CASE("phi map kernels") {
  auto kernel_of = [](const FDIndexSet& m) { return phi_map(m).kernel; };

  CHECK(kernel_of(make_set({FDIndex::minus_one()})).empty());

  auto k1 = kernel_of(make_set({FDIndex::minus_one(), FDIndex::pair(2, 0)}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Vec{Rational(1), Rational(1)});  // s_{-1} = s_{(2,0)}

  auto k2 = kernel_of(make_set({FDIndex::pair(0, 0), FDIndex::pair(0, 1)}));
  CHECK(k2.size() == 2);  // both h_alpha map to 0
}

TEST_CASE("phi is a local homomorphism with kernel the center") {
  for (const FDIndexSet& m :
       {make_set({FDIndex::minus_one(), FDIndex::pair(1, 0)}),
        make_set({FDIndex::minus_one(), FDIndex::pair(2, 0), FDIndex::pair(3, 1)}),
        make_set({FDIndex::pair(1, 0), FDIndex::pair(1, 1)})}) {
    LocalLieAlgebra src = contragredient_local(ctilde_minor(m));
    PhiMap phi = phi_map(m);
    auto res = local_hom_check(src, sl2fd_local(m), phi.hom);
    REQUIRE(res.ok);
    CHECK(span_equal(res.kernel_zero, degree0_center(src), m.size()));
    CHECK(span_equal(res.kernel_zero, phi.kernel, m.size()));
    // the paper's kernel equation: sum of s_alpha * c_alpha = 0
    for (const Vec& s : phi.kernel) {
      Rational acc;
      for (int t = 0; t < m.size(); ++t)
        acc += s[t] * (m[t].sentinel ? Rational(1) : Rational(-m[t].i, 2));
      CHECK(acc == Rational(0));
    }
  }
}

TEST_CASE("compare_with_reduced on the worked index sets") {
  CHECK(compare_with_reduced(make_set({FDIndex::minus_one()}), 4));
  CHECK(compare_with_reduced(make_set({FDIndex::minus_one(), FDIndex::pair(2, 0)}), 10));
  CHECK(compare_with_reduced(make_set({FDIndex::minus_one(), FDIndex::pair(1, 0)}), 8));
  CHECK(compare_with_reduced(make_set({FDIndex::pair(1, 0), FDIndex::pair(1, 1)}), 6));
}

TEST_CASE("adjoint index set recovers the affine A1 loop dimensions") {
  FDIndexSet m = make_set({FDIndex::minus_one(), FDIndex::pair(2, 0)});
  GradedAlgebra ga = expand(sl2fd_local(m), 10);
  for (int k = -10; k <= 10; ++k) CHECK(ga.dim(k) == oracle::loop_dim(k));
}

TEST_CASE("degenerate index sets are rejected by compare") {
  CHECK_THROWS_AS(compare_with_reduced(make_set({FDIndex::pair(0, 0), FDIndex::pair(0, 4)}), 4),
                  DegenerateIndexSet);
}

TEST_CASE("index set parsing") {
  FDIndexSet m = parse_index_set("(-1),(1,0),(2,0)");
  REQUIRE(m.size() == 3);
  CHECK(m[0] == FDIndex::minus_one());
  CHECK(m[1] == FDIndex::pair(1, 0));
  CHECK(m[2] == FDIndex::pair(2, 0));

  FDIndexSet spaced = parse_index_set(" (2,0) , (-1) ");
  CHECK(spaced.size() == 2);
  CHECK(spaced[0] == FDIndex::minus_one());

  CHECK_THROWS_AS(parse_index_set(""), ParseError);
  CHECK_THROWS_AS(parse_index_set("(1,0"), ParseError);
  CHECK_THROWS_AS(parse_index_set("(a,b)"), ParseError);
  CHECK_THROWS_AS(parse_index_set("(-2)"), ParseError);
  CHECK_THROWS_AS(parse_index_set("(1000001,0)"), ParseError);
  CHECK_THROWS_AS(parse_index_set("(1,0)(2,0)"), ParseError);
}
