#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pentad/io.hpp"
#include "pentad/sl2fd.hpp"

namespace pentad::cli {

// Exit codes: 0 success, 1 validation error, 2 I/O or parse error,
// 3 expansion dimension cap exceeded.
inline constexpr int kOk = 0;
inline constexpr int kValidation = 1;
inline constexpr int kParse = 2;
inline constexpr int kLimit = 3;

inline std::size_t max_dim_cap() {
  const char* env = std::getenv("PENTAD_MAX_DIM");
  if (env == nullptr || *env == '\0') return 20000;
  std::string s(env);
  if (s.size() > 9) throw ParseError("PENTAD_MAX_DIM is out of range");
  for (char ch : s)
    if (ch < '0' || ch > '9') throw ParseError("PENTAD_MAX_DIM must be a positive integer");
  unsigned long v = std::stoul(s);
  if (v == 0) throw ParseError("PENTAD_MAX_DIM must be a positive integer");
  return static_cast<std::size_t>(v);
}

inline void require_format(const std::string& fmt) {
  if (fmt != "table" && fmt != "json" && fmt != "csv")
    throw InvalidArgument("format must be one of table, json, csv");
}

inline void require_max_degree(int n) {
  if (n < 1) throw InvalidArgument("max-degree must be >= 1 when an expansion is requested");
}

inline void print_matrix(std::ostream& out, const QMatrix& m, const std::string& fmt) {
  if (fmt == "json") {
    Json j;
    j["C"] = matrix_to_json(m);
    out << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out << matrix_to_csv(m);
  } else {
    out << matrix_to_text(m);
  }
}

inline void print_dimension_table(std::ostream& out, const DimensionTable& t, const std::string& fmt) {
  if (fmt == "json")
    out << dimension_table_to_json(t).dump(2) << "\n";
  else if (fmt == "csv")
    out << dimension_table_to_csv(t);
  else
    out << dimension_table_to_text(t);
}

/// Runs every worked example quoted from the source material as a regression
/// fixture; prints one PASS/FAIL line per fixture.
inline bool run_paper_fixtures(std::ostream& out) {
  bool all_ok = true;
  auto fixture = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = body();
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };

  auto affine_c = QMatrix(2, 2, {Rational(2), Rational(-2), Rational(-2), Rational(2)});
  auto affine_g_pentad = [] {
    QMatrix a(3, 3);
    a(0, 0) = Rational(1, 8);
    a(1, 2) = Rational(1);
    a(2, 1) = Rational(1);
    QMatrix d(3, 2);
    d(0, 0) = Rational(2);
    d(0, 1) = Rational(-2);
    d(2, 1) = Rational(1);
    return CartanPentad(3, 2, a, d, {Rational(4), Rational(4)});
  };
  auto sl2_rep_pentad = [](long n) {
    QMatrix a(1, 1);
    a(0, 0) = Rational(1, 8);
    QMatrix d(1, 2);
    d(0, 0) = Rational(2);
    d(0, 1) = Rational(-n);
    return CartanPentad(1, 2, a, d, {Rational(4), Rational(4)});
  };
  auto sl2_pentad = [] {
    QMatrix a(1, 1);
    a(0, 0) = Rational(1, 8);
    QMatrix d(1, 1);
    d(0, 0) = Rational(2);
    return CartanPentad(1, 1, a, d, {Rational(4)});
  };
  auto loop_dim = [](int k) { return k == 0 ? 1 : (std::abs(k) % 2 == 1 ? 2 : 1); };

  fixture("cartan matrix of the affine g(C) pentad", [&] {
    return cartan_matrix(affine_g_pentad()) == affine_c;
  });

  fixture("cartan matrices of the sl2 irreducible-representation pentads", [&] {
    for (long n = 1; n <= 6; ++n) {
      QMatrix want(2, 2, {Rational(2), Rational(-n), Rational(-n), Rational(n * n, 2)});
      if (cartan_matrix(sl2_rep_pentad(n)) != want) return false;
    }
    return true;
  });

  fixture("Killing form normalization B(h,h) = 8", [&] {
    return bilinear_form(sl2_pentad(), {Rational(1)}, {Rational(1)}) == Rational(8);
  });

  fixture("sl2 triple as the local algebra of the one-dimensional pentad", [&] {
    LocalLieAlgebra l = local_algebra(sl2_pentad());
    return l.zp.row(0, 0) == Vec{Rational(2)} && l.pn.row(0, 0) == Vec{Rational(1)} &&
           l.zn.row(0, 0) == Vec{Rational(-2)};
  });

  fixture("structure summary of the affine g(C) pentad (CK + Cd)", [&] {
    StructureSummary s = structure_summary(affine_g_pentad());
    return s.rank_d == 2 && s.rank_c == 1 && s.dim_z == 1 && s.dim_delta == 1;
  });

  fixture("loop-algebra dimensions of the reduced contragredient algebra", [&] {
    GradedAlgebra ga = expand(reduced_local(affine_c), 12);
    for (int k = -12; k <= 12; ++k)
      if (ga.dim(k) != loop_dim(k)) return false;
    GradedAlgebra pc = expand(local_algebra(sl2_rep_pentad(2)), 12);
    for (int k = -12; k <= 12; ++k)
      if (pc.dim(k) != ga.dim(k)) return false;
    return true;
  });

  fixture("full Kac-Moody pentad dimensions (loop algebra + CK + Cd)", [&] {
    GradedAlgebra ga = expand(local_algebra(affine_g_pentad()), 12);
    if (ga.dim(0) != 3) return false;
    for (int k = -12; k <= 12; ++k)
      if (k != 0 && ga.dim(k) != loop_dim(k)) return false;
    return true;
  });

  fixture("sl2fd weight entries", [&] {
    return dtilde_entry(FDIndex::minus_one()) == Rational(2) &&
           dtilde_entry(FDIndex::pair(0, 5)) == Rational(0) &&
           dtilde_entry(FDIndex::pair(3, 0)) == Rational(-3);
  });

  fixture("sl2fd Cartan entries and minors", [&] {
    if (ctilde_entry(FDIndex::minus_one(), FDIndex::minus_one()) != Rational(2)) return false;
    if (ctilde_entry(FDIndex::pair(1, 0), FDIndex::pair(1, 0)) != Rational(1, 2)) return false;
    if (ctilde_entry(FDIndex::pair(2, 0), FDIndex::pair(3, 7)) != Rational(3)) return false;
    FDIndexSet m1({FDIndex::minus_one(), FDIndex::pair(1, 0)});
    QMatrix want(2, 2, {Rational(2), Rational(-1), Rational(-1), Rational(1, 2)});
    if (ctilde_minor(m1) != want) return false;
    FDIndexSet m2({FDIndex::pair(0, 0)});
    return ctilde_minor(m2) == QMatrix(1, 1, {Rational(0)});
  });

  fixture("sl2fd local bracket table", [&] {
    FDIndexSet sl2({FDIndex::minus_one()});
    LocalLieAlgebra l = sl2fd_local(sl2);
    if (l.zp.row(0, 0) != Vec{Rational(2)} || l.zn.row(0, 0) != Vec{Rational(-2)} ||
        l.pn.row(0, 0) != Vec{Rational(1)})
      return false;
    FDIndexSet m({FDIndex::minus_one(), FDIndex::pair(2, 0)});
    LocalLieAlgebra l2 = sl2fd_local(m);
    // index order: (-1) then (2,0)
    if (l2.zp.row(0, 1) != Vec{Rational(0), Rational(-2)}) return false;
    if (l2.pn.row(1, 1) != Vec{Rational(-1)}) return false;
    FDIndexSet z({FDIndex::pair(0, 3)});
    LocalLieAlgebra l3 = sl2fd_local(z);
    return l3.zp.table.is_zero() && l3.zn.table.is_zero() && l3.pn.table.is_zero();
  });

  fixture("pairing normalization B(h, [e-,e+]) = -4i", [&] {
    CartanPentad p = sl2_pentad();
    for (long i = 0; i <= 4; ++i) {
      Rational lhs = bilinear_form(p, {Rational(1)}, {Rational(-i, 2)});
      if (lhs != Rational(-4 * i)) return false;
    }
    return true;
  });

  return all_ok;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic constructions of graded Lie algebras from pentads of Cartan type"};
  app.name("pentad");
  app.require_subcommand(1);

  std::string pentad_path, matrix_path, reduced_path, format = "table", mode, indices;
  int max_degree = 0;
  bool want_minor = false;
  int expand_degree = 0, compare_degree = 0;

  auto* cmd_cartan = app.add_subcommand("cartan", "Print the Cartan matrix of a pentad");
  cmd_cartan->add_option("--pentad", pentad_path, "pentad JSON file")->required();
  cmd_cartan->add_option("--format", format, "table, json or csv");

  auto* cmd_expand = app.add_subcommand("expand", "Expand a graded Lie algebra and print its dimension table");
  cmd_expand->add_option("--pentad", pentad_path, "pentad JSON file");
  cmd_expand->add_option("--matrix", matrix_path, "contragredient Cartan matrix JSON file");
  cmd_expand->add_option("--reduced-matrix", reduced_path, "reduced contragredient Cartan matrix JSON file");
  cmd_expand->add_option("--max-degree", max_degree, "expansion cutoff")->required();
  cmd_expand->add_option("--format", format, "table, json or csv");

  auto* cmd_structure = app.add_subcommand("structure", "Print the structure summary of a pentad");
  cmd_structure->add_option("--pentad", pentad_path, "pentad JSON file")->required();
  cmd_structure->add_option("--format", format, "table, json or csv");

  auto* cmd_realize = app.add_subcommand("realize", "Emit a realizing pentad and its certificate");
  cmd_realize->add_option("--matrix", matrix_path, "Cartan matrix JSON file")->required();
  cmd_realize->add_option("--mode", mode, "invertible, symmetrizable, full-km or derived")->required();
  cmd_realize->add_option("--max-degree", max_degree, "expansion cutoff (derived mode)");
  cmd_realize->add_option("--format", format, "table, json or csv");

  auto* cmd_sl2fd = app.add_subcommand("sl2fd", "Finite truncations of the sl2 all-representations algebra");
  cmd_sl2fd->add_option("--indices", indices, "index set, e.g. \"(-1),(1,0),(2,0)\"")->required();
  cmd_sl2fd->add_flag("--minor", want_minor, "print the Cartan minor of the index set");
  auto* opt_expand = cmd_sl2fd->add_option("--expand", expand_degree, "expand the truncation to this cutoff");
  auto* opt_compare =
      cmd_sl2fd->add_option("--compare", compare_degree, "compare with the reduced contragredient algebra");
  cmd_sl2fd->add_option("--format", format, "table, json or csv");

  auto* cmd_verify = app.add_subcommand("verify-paper", "Run the built-in regression fixtures");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    require_format(format);
    std::size_t cap = max_dim_cap();

    if (cmd_cartan->parsed()) {
      CartanPentad p = load_pentad_file(pentad_path);
      print_matrix(out, cartan_matrix(p), format);
      return kOk;
    }

    if (cmd_expand->parsed()) {
      require_max_degree(max_degree);
      int sources = (pentad_path.empty() ? 0 : 1) + (matrix_path.empty() ? 0 : 1) +
                    (reduced_path.empty() ? 0 : 1);
      if (sources != 1) {
        err << "expand requires exactly one of --pentad, --matrix, --reduced-matrix\n";
        return kParse;
      }
      LocalLieAlgebra local = !pentad_path.empty() ? local_algebra(load_pentad_file(pentad_path))
                              : !matrix_path.empty()
                                  ? contragredient_local(load_matrix_file(matrix_path))
                                  : reduced_local(load_matrix_file(reduced_path));
      GradedAlgebra ga = expand(local, max_degree, cap);
      print_dimension_table(out, dimension_table(ga), format);
      return kOk;
    }

    if (cmd_structure->parsed()) {
      StructureSummary s = structure_summary(load_pentad_file(pentad_path));
      if (format == "json") {
        out << structure_to_json(s).dump(2) << "\n";
      } else {
        const char* sep = format == "csv" ? "," : " = ";
        out << "rank_D" << sep << s.rank_d << "\n"
            << "rank_C" << sep << s.rank_c << "\n"
            << "dim_Z" << sep << s.dim_z << "\n"
            << "dim_Delta" << sep << s.dim_delta << "\n"
            << "symmetric" << sep << (s.symmetric ? "true" : "false") << "\n";
      }
      return kOk;
    }

    if (cmd_realize->parsed()) {
      QMatrix c = load_matrix_file(matrix_path);
      Json j;
      if (mode == "invertible") {
        CartanPentad p = realize_invertible(c);
        j["pentad"] = pentad_to_json(p);
        j["certificate"] = certificate_to_json(make_certificate(RealizeMode::invertible, p, c));
      } else if (mode == "symmetrizable") {
        CartanPentad p = realize_symmetrizable(c);
        j["pentad"] = pentad_to_json(p);
        j["certificate"] = certificate_to_json(make_certificate(RealizeMode::symmetrizable, p, c));
      } else if (mode == "full-km") {
        Realization real = realize_full_km(c);
        j["pentad"] = pentad_to_json(real.pentad);
        j["certificate"] = certificate_to_json(real.certificate);
      } else if (mode == "derived") {
        require_max_degree(max_degree);
        Realization real = realize_full_km(c);
        GradedAlgebra ga = expand(local_algebra(real.pentad), max_degree, cap);
        DimensionTable table{derived_dims(ga), false, false, false};
        j["pentad"] = pentad_to_json(real.pentad);
        j["certificate"] = certificate_to_json(make_certificate(RealizeMode::derived, real.pentad, c));
        j["derived"] = dimension_table_to_json(table);
      } else {
        throw InvalidArgument("mode must be one of invertible, symmetrizable, full-km, derived");
      }
      out << j.dump(2) << "\n";
      return kOk;
    }

    if (cmd_sl2fd->parsed()) {
      FDIndexSet m = parse_index_set(indices);
      int actions = (want_minor ? 1 : 0) + (opt_expand->count() > 0 ? 1 : 0) +
                    (opt_compare->count() > 0 ? 1 : 0);
      if (actions != 1) {
        err << "sl2fd requires exactly one of --minor, --expand, --compare\n";
        return kParse;
      }
      if (want_minor) {
        print_matrix(out, ctilde_minor(m), format);
      } else if (opt_expand->count() > 0) {
        require_max_degree(expand_degree);
        GradedAlgebra ga = expand(sl2fd_local(m), expand_degree, cap);
        print_dimension_table(out, dimension_table(ga), format);
      } else {
        require_max_degree(compare_degree);
        bool match = compare_with_reduced(m, compare_degree, cap);
        if (format == "json") {
          Json j;
          j["indices"] = indices;
          j["max_degree"] = compare_degree;
          j["match"] = match;
          out << j.dump(2) << "\n";
        } else {
          out << "match" << (format == "csv" ? "," : " = ") << (match ? "true" : "false") << "\n";
        }
      }
      return kOk;
    }

    if (cmd_verify->parsed()) {
      bool ok = run_paper_fixtures(out);
      out << (ok ? "all fixtures passed\n" : "some fixtures FAILED\n");
      return ok ? kOk : kValidation;
    }

    err << "no subcommand given\n";
    return kParse;
  } catch (const ExpansionLimit& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace pentad::cli
