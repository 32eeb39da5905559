#pragma once

// Trigonometry of right-angled hyperbolic hexagons and pentagons. Sides are in
// cyclic order a, C, b, A, c, B; alpha, beta, gamma are the common
// perpendiculars between opposite sides (a,A), (b,B), (c,C).
//
// Every solver works through log-space forms of the hyperbolic relations so
// that lengths of order 1e-10 or 1e17 stay finite and accurate. Derived
// lengths below the double range (the perpendicular to a side of length 1e3 is
// about e^-500) come out as 0.

#include <array>
#include <cstddef>

#include "hexatlas/arcs.hpp"

namespace hexatlas {

/// Shorter lengths count as a degenerate hexagon, not as valid input.
inline constexpr double kMinLength = 1e-12;

struct HexagonLengths {
  std::array<double, kArcCount> lengths{};  // indexed by arc_index

  double operator[](Arc x) const { return lengths[arc_index(x)]; }
  double& operator[](Arc x) { return lengths[arc_index(x)]; }
};

/// Relabels by a symmetry of the hexagon: result[map(x)] = h[x].
HexagonLengths relabeled(const HexagonLengths& h, Arc (*map)(Arc));

/// Split points of a perpendicular: x along side a from the vertex shared with
/// C, y along side A from the vertex shared with b (rotated for beta, gamma).
struct FeetSolution {
  double x = 0;
  double y = 0;
};

/// Consecutive sides s0..s4 of an all-right pentagon.
struct PentagonLengths {
  std::array<double, 5> sides{};
};

/// Side between a and b, opposite c:
/// cosh C = (cosh c + cosh a cosh b) / (sinh a sinh b).
double opposite_side(double a, double b, double c);

/// Distance between side x and its opposite side, given the two alternating
/// sides y, z adjacent to the opposite side's neighbours.
double perpendicular_length(double x, double y, double z);

HexagonLengths solve_from_alternating(double a, double b, double c);

/// Side between two non-adjacent pentagon sides: cosh t = coth u coth v.
double pentagon_between(double u, double v);

/// Completes a right pentagon from the sides at positions `first` and
/// `first + 2` (mod 5).
PentagonLengths complete_pentagon(std::size_t first, double first_length, double second_length);

struct SolveOptions {
  /// Relative agreement required between the perpendicular shared by the two
  /// pentagons and its value recomputed from the assembled hexagon.
  double split_tolerance = 1e-8;
};

/// The unique right hexagon whose arcs in `t` (canonical order) have the given
/// lengths. Throws NonPositiveLength or Infeasible.
HexagonLengths solve_from_triple(const ArcTriple& t, const std::array<double, 3>& lengths,
                                 const SolveOptions& options = {});

/// Feet of the perpendicular `which` (alpha, beta or gamma). Both pentagon
/// routes are computed; throws InternalConsistency when they disagree by more
/// than `tolerance`.
FeetSolution perpendicular_feet(const HexagonLengths& h, Arc which, double tolerance = 1e-9);

/// C(t) = opposite_side(t a, t b, t c).
double scaled_opposite(double a, double b, double c, double t);

/// u(t) = c sinh(tc) sinh(ta) sinh(tb) - a cosh(ta) cosh(tc) sinh(tb)
///        - b cosh(tb) cosh(tc) sinh(ta),
/// whose sign is that of d/dt [cosh(tc) / (sinh(ta) sinh(tb))].
double scaling_kernel(double a, double b, double c, double t);

/// Largest relative residuals of the hexagon relations. Meaningful while every
/// length stays below a few hundred (plain cosh/sinh are used on purpose).
struct TrigResiduals {
  double cosh_rule = 0;      // the three opposite-side formulas
  double law_of_sines = 0;   // sinh A/sinh a = sinh B/sinh b = sinh C/sinh c
  double perpendicular = 0;  // cosh alpha = sinh b sinh C = sinh c sinh B, cyclically
};

TrigResiduals trig_residuals(const HexagonLengths& h);

/// Largest relative residual of cosh s_i = sinh s_{i+2} sinh s_{i+3} and
/// cosh s_i = coth s_{i-1} coth s_{i+1} over all i.
double pentagon_residual(const PentagonLengths& p);

}  // namespace hexatlas
