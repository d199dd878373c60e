#pragma once

#include <string>

#include <json.hpp>

#include "uncert/bounds.hpp"
#include "uncert/cv_grid.hpp"
#include "uncert/hilbert.hpp"
#include "uncert/mus.hpp"

namespace uncert {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im]; vectors are arrays of those; matrices are
// arrays of row arrays.
Json to_json(Complex z);
Json to_json(const ComplexVector& v);
Json to_json(const ComplexMatrix& m);
Json to_json(const BoundReport& r);
Json to_json(const MusVerdict& v);

/// Accepts [re, im] pairs or bare real numbers.
Complex complex_from_json(const Json& j);
ComplexVector vector_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);

/// 17 significant digits; round-trips every double.
std::string format_double(double x);

/// relation,lhs,rhs,gap,sign_choice,term_commutator,term_perp
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);

/// x,re,im
std::string wavefunction_csv(const GridWavefunction& psi);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace uncert
