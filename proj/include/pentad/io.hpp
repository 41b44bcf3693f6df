#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentad/cartan_pentad.hpp"
#include "pentad/realize.hpp"

namespace pentad {

using Json = nlohmann::ordered_json;

inline Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QMatrix json_to_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : -1;
  std::vector<Rational> entries;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(what + " rows must be arrays");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) throw ParseError(what + " rows have unequal lengths");
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError(what + " entries must be rational strings like \"1/8\"");
      entries.push_back(parse_rational(cell.get<std::string>()));
    }
  }
  return QMatrix(rows, cols, std::move(entries));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

/// Matrix file: {"C": [["2","-2"],["-2","2"]]}.
inline QMatrix load_matrix_file(const std::string& path) {
  Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("C")) throw ParseError(path + ": expected an object with key \"C\"");
  return json_to_matrix(j["C"], "C");
}

/// Pentad file: {"r":3,"n":2,"A":[...],"D":[...],"Gamma":["4","4"]}.
inline CartanPentad load_pentad_file(const std::string& path) {
  Json j = read_json_file(path);
  for (const char* key : {"r", "n", "A", "D", "Gamma"})
    if (!j.is_object() || !j.contains(key))
      throw ParseError(path + ": expected an object with keys r, n, A, D, Gamma");
  if (!j["r"].is_number_integer() || !j["n"].is_number_integer())
    throw ParseError(path + ": r and n must be integers");
  int r = j["r"].get<int>();
  int n = j["n"].get<int>();
  QMatrix a = json_to_matrix(j["A"], "A");
  QMatrix d = json_to_matrix(j["D"], "D");
  if (!j["Gamma"].is_array()) throw ParseError(path + ": Gamma must be an array of rational strings");
  std::vector<Rational> gamma;
  for (const auto& cell : j["Gamma"]) {
    if (!cell.is_string()) throw ParseError(path + ": Gamma entries must be rational strings");
    gamma.push_back(parse_rational(cell.get<std::string>()));
  }
  if (a.rows() != r || a.cols() != r || d.rows() != r || d.cols() != n ||
      static_cast<int>(gamma.size()) != n)
    throw ParseError(path + ": matrix shapes do not match r and n");
  return CartanPentad(r, n, std::move(a), std::move(d), std::move(gamma));
}

inline Json pentad_to_json(const CartanPentad& p) {
  Json j;
  j["r"] = p.r();
  j["n"] = p.n();
  j["A"] = matrix_to_json(p.a());
  j["D"] = matrix_to_json(p.d());
  Json gamma = Json::array();
  for (const auto& g : p.gamma()) gamma.push_back(g.str());
  j["Gamma"] = std::move(gamma);
  return j;
}

inline Json certificate_to_json(const RealizationCertificate& c) {
  Json j;
  j["mode"] = to_string(c.mode);
  j["cartan_round_trip"] = c.cartan_round_trip;
  j["coroots_independent"] = c.coroots_independent;
  j["alpha_independent"] = c.alpha_independent;
  j["rank_D"] = c.rank_d;
  j["dim0"] = c.dim0;
  return j;
}

inline Json structure_to_json(const StructureSummary& s) {
  Json j;
  j["rank_D"] = s.rank_d;
  j["rank_C"] = s.rank_c;
  j["dim_Z"] = s.dim_z;
  j["dim_Delta"] = s.dim_delta;
  j["symmetric"] = s.symmetric;
  return j;
}

struct DimensionTable {
  std::map<int, int> degrees;
  bool terminated_pos = false;
  bool terminated_neg = false;
  bool with_flags = true;
};

inline DimensionTable dimension_table(const GradedAlgebra& ga) {
  return {ga.dimension_table(), ga.terminated_pos(), ga.terminated_neg(), true};
}

inline Json dimension_table_to_json(const DimensionTable& t) {
  Json degrees = Json::object();
  for (const auto& [deg, dim] : t.degrees) degrees[std::to_string(deg)] = dim;
  Json j;
  j["degrees"] = std::move(degrees);
  if (t.with_flags) {
    j["terminated_pos"] = t.terminated_pos;
    j["terminated_neg"] = t.terminated_neg;
  }
  return j;
}

/// CSV rows "degree,dim", degrees ascending (negative degrees included).
inline std::string dimension_table_to_csv(const DimensionTable& t) {
  std::ostringstream out;
  for (const auto& [deg, dim] : t.degrees) out << deg << "," << dim << "\n";
  return out.str();
}

inline std::string dimension_table_to_text(const DimensionTable& t) {
  std::ostringstream out;
  out << "degree  dim\n";
  for (const auto& [deg, dim] : t.degrees) {
    std::string d = std::to_string(deg);
    out << d << std::string(d.size() < 6 ? 8 - d.size() : 2, ' ') << dim << "\n";
  }
  if (t.with_flags)
    out << "terminated: pos=" << (t.terminated_pos ? "yes" : "no")
        << " neg=" << (t.terminated_neg ? "yes" : "no") << "\n";
  return out.str();
}

inline std::string matrix_to_text(const QMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).str();
    out << "\n";
  }
  return out.str();
}

inline std::string matrix_to_csv(const QMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j).str();
    out << "\n";
  }
  return out.str();
}

}  // namespace pentad
