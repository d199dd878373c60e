#include "uncert/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace uncert {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["relation"] = std::string(to_string(r.relation));
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["sign_choice"] = r.sign_choice;
  j["term_commutator"] = r.term_commutator;
  j["term_perp"] = r.term_perp;
  if (r.relation == Relation::mp_sum) j["perp_orthogonal_to_f"] = r.perp_orthogonal_to_f;
  j["degenerate"] = r.degenerate;
  return j;
}

Json to_json(const MusVerdict& v) {
  Json j;
  j["is_product_mus"] = v.is_product_mus;
  j["is_sum_mus"] = v.is_sum_mus;
  j["gamma"] = v.gamma ? Json(*v.gamma) : Json(nullptr);
  j["residual_AiB"] = v.residual_AiB;
  j["residual_AiB_branch"] = v.residual_AiB_branch;
  j["residual_AigB"] = v.residual_AigB;
  j["residual_A2B2"] = v.residual_A2B2;
  j["residual_var_lhs"] = v.residual_var_lhs ? Json(*v.residual_var_lhs) : Json(nullptr);
  j["residual_var_rhs"] = v.residual_var_rhs ? Json(*v.residual_var_rhs) : Json(nullptr);
  j["tol"] = v.tol;
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ValidationError("malformed complex number: expected [re, im], got " + j.dump());
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("malformed vector: expected non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  return v;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("malformed matrix: expected array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw ValidationError("malformed matrix: rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError("malformed matrix: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string bound_csv_header() {
  return "relation,lhs,rhs,gap,sign_choice,term_commutator,term_perp";
}

std::string bound_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.relation) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
     << format_double(r.gap) << ',' << r.sign_choice << ',' << format_double(r.term_commutator)
     << ',' << format_double(r.term_perp);
  return os.str();
}

std::string wavefunction_csv(const GridWavefunction& psi) {
  std::string out = "x,re,im\n";
  for (Eigen::Index i = 0; i < psi.grid.size(); ++i) {
    out += format_double(psi.grid.x(i));
    out += ',';
    out += format_double(psi.values[i].real());
    out += ',';
    out += format_double(psi.values[i].imag());
    out += '\n';
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace uncert
