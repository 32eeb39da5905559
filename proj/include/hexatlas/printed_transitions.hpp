#pragma once

// The five explicit coordinate-change formulas between neighbouring charts,
// written out region by region. They duplicate what pl_transition computes
// through from_chart/to_chart and exist so the two routes can be compared.

#include <array>
#include <optional>

#include "hexatlas/arcs.hpp"
#include "hexatlas/rational.hpp"

namespace hexatlas::printed {

enum class Formula { Phi1, Phi2, Phi3, Phi4, Phi5 };

inline constexpr std::array<Formula, 5> kFormulas{Formula::Phi1, Formula::Phi2, Formula::Phi3,
                                                   Formula::Phi4, Formula::Phi5};

/// phi1: {a,b,c} -> {alpha,B,C} on the side a = 0.
/// phi2: {a,b,c} -> {alpha,b,c} where a is not dominant.
/// phi3: {a,b,c} -> {a,beta,A} where a >= b + c.
/// phi4: {alpha,b,c} -> {alpha,b,B} where alpha > c.
/// phi5: {A,B,C} -> {alpha,b,c} on the side A = 0.
ArcTriple source(Formula f);
ArcTriple target(Formula f);
int region_count(Formula f);
const char* name(Formula f);

/// Region label (1-based, as printed) containing the source coordinates, or
/// nullopt outside the formula's domain. Coordinates are in the source
/// triple's canonical order.
std::optional<int> region(Formula f, const std::array<Rational, 3>& source_coords);

/// Target coordinates in the target triple's canonical order.
std::optional<std::array<Rational, 3>> apply(Formula f, const std::array<Rational, 3>& source_coords);

}  // namespace hexatlas::printed
