#pragma once

// JSON, CSV and plain-text renderings of the library's values. Rationals are
// written as "p/q" strings, lengths as JSON numbers.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hexatlas/cell_complex.hpp"
#include "hexatlas/foliation.hpp"
#include "hexatlas/hexagon.hpp"
#include "hexatlas/teichmueller.hpp"

namespace hexatlas {

using Json = nlohmann::ordered_json;

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

Json to_json(const ArcTriple& t);
Json to_json(const FoliationClass& f);
Json to_json(const ChartCoords& cc);
Json to_json(const PMFCellComplex& complex);
Json to_json(const HexagonLengths& h);
Json to_json(const ProjectivePoint6& p);
Json to_json(const Divergence& d);
Json to_json(const Divergence& d, const BoundaryLimit& limit);

/// All throw Error(Parse) on malformed documents.
ArcTriple triple_from_json(const Json& j);
FoliationClass foliation_from_json(const Json& j);
ChartCoords chart_from_json(const Json& j);
PMFCellComplex complex_from_json(const Json& j);
HexagonLengths hexagon_from_json(const Json& j);

/// "alpha=1,A=1/2".
FoliationClass parse_weights(std::string_view text);
/// Exactly three comma separated values.
std::array<Rational, 3> parse_rational_triple(std::string_view text);
std::array<double, 3> parse_length_triple(std::string_view text);

/// Header and one row, columns a,C,b,A,c,B,alpha,beta,gamma.
std::string hexagon_csv(const HexagonLengths& h);
/// Columns n, the nine lengths, then the six normalized side coordinates.
std::string trace_csv(const std::vector<LimitStep>& steps);

std::string pretty(const HexagonLengths& h);
std::string pretty(const FoliationClass& f);
std::string pretty(const ChartCoords& cc);

}  // namespace hexatlas
