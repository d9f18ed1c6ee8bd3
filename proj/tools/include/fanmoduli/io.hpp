#pragma once

#include <json.hpp>
#include <string>

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/combinatorial_type.hpp"
#include "fanmoduli/degeneration.hpp"
#include "fanmoduli/grassmann.hpp"
#include "fanmoduli/moduli.hpp"
#include "fanmoduli/symmetry.hpp"

// JSON schemas of the command-line tool. Every *_from_json throws
// ParseError on schema violations; semantic checks are left to the library.
namespace fanmoduli::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// Array of column arrays.
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, std::size_t rows);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const Subset& s);
Subset subset_from_json(const Json& j);

Json to_json(const CombinatorialType& type);
CombinatorialType type_from_json(const Json& j);

Json to_json(const Calibration& h);
Calibration calibration_from_json(const Json& j);

// Concatenated digits for n < 10, comma-separated otherwise.
std::string subset_key(const Subset& s, int n);
Subset subset_from_key(const std::string& key, int n);

Json to_json(const SignVector& s, int n);
SignVector sign_vector_from_json(const Json& j, int n);

Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j, const CombinatorialType& type);

Json to_json(const PluckerVector& p);
PluckerVector plucker_from_json(const Json& j);

Json to_json(const std::vector<SignCondition>& system);
Json to_json(const std::vector<ClosureCondition>& conditions, int n);

Json to_json(const ZeroPatternFamily& f);
ZeroPatternFamily zero_patterns_from_json(const Json& j);

Json to_json(const Stratum& s, const CombinatorialType& type);
Stratum stratum_from_json(const Json& j, const CombinatorialType& type);

Json to_json(const ProjectedCalibration& p);

// Planar drawing of the degenerate fan of h: one labelled line per nonzero
// ray and one triangular wedge per 2-cone. Throws UnsupportedError for
// d != 2.
std::string render_svg(const Calibration& h, const CombinatorialType& type);

}  // namespace fanmoduli::io
