#pragma once

// The Teichmueller space T of the right hexagon, its embedding into the
// projective space of six side lengths, the charts that glue T to the sphere
// of projective measured foliations, and numerical limits of degenerating
// families.

#include <array>
#include <optional>
#include <vector>

#include "hexatlas/arcs.hpp"
#include "hexatlas/foliation.hpp"
#include "hexatlas/hexagon.hpp"
#include "hexatlas/sequence.hpp"

namespace hexatlas {

struct TeichPoint {
  HexagonLengths hexagon;
};

/// Order of the six side coordinates.
inline constexpr std::array<Arc, 6> kSideOrder{Arc::a, Arc::b, Arc::c, Arc::A, Arc::B, Arc::C};

/// Nonnegative, sums to one.
struct ProjectivePoint6 {
  std::array<double, 6> v{};
};

/// (a, b, c, A, B, C).
std::array<double, 6> length_vector6(const TeichPoint& p);

TeichPoint teich_from_triple(const ArcTriple& t, const std::array<double, 3>& lengths,
                             const SolveOptions& options = {});

ProjectivePoint6 projective_embed(const TeichPoint& p);
/// (i(F,a), ..., i(F,C)) normalized. Throws ZeroFoliation.
ProjectivePoint6 projective_embed_f(const FoliationClass& f);

bool in_thick_part(const TeichPoint& p, const ArcTriple& t, double eps);

/// The triple whose shortest arc is longest, and that length: p lies in the
/// eps-thick part of this triple for every eps below it.
struct ThickWitness {
  ArcTriple triple;
  double min_length;
};
ThickWitness thickest_triple(const TeichPoint& p);

/// The foliation in good position with t whose intersection numbers with t's
/// arcs equal the (exactly converted) lengths of those arcs.
FoliationClass q_projection(const TeichPoint& p, const ArcTriple& t);

struct BoundaryChartPoint {
  PMFPoint point;  // in the chart of the triple
  double collar;   // e^{-(sum of the triple's lengths)}; 0 on the boundary
};

BoundaryChartPoint boundary_chart(const TeichPoint& p, const ArcTriple& t);
/// Boundary points must lie in the open chart: all three coordinates
/// positive. Throws NotInChart.
BoundaryChartPoint boundary_chart(const PMFPoint& x, const ArcTriple& t);

/// Inverse of boundary_chart on T. Throws NotInChart for collar 0.
TeichPoint from_boundary_chart(const BoundaryChartPoint& x, const SolveOptions& options = {});

struct Divergence {
  bool diverges = false;
  std::optional<ArcTriple> witness;
  std::array<Growth, 3> growth{};
  bool symbolic = true;  // false when decided by sampling
};

/// Decides whether the family leaves every compact set of T, with an arc
/// triple whose three lengths all tend to infinity. Throws UnsupportedSpec
/// when neither the coefficient table nor sampling settles the question.
Divergence diverges(const SequenceSpec& s);

/// Families with no symbolic classification count as divergent when some
/// triple has all three lengths above this at n = 64 and growing from n = 32.
inline constexpr double kNumericDivergenceThreshold = 4.0;

enum class Extrapolation { None, Richardson };

struct LimitOptions {
  int n_max = 40;
  double tol = 1e-3;
  Extrapolation extrapolation = Extrapolation::Richardson;
  bool keep_trace = false;
};

struct LimitStep {
  int n = 0;
  HexagonLengths hexagon;
  std::array<double, 6> normalized{};
};

struct BoundaryLimit {
  ProjectivePoint6 limit;
  ArcTriple chart = compatible_triples().front();
  FoliationClass foliation;  // a representative of the limit
  double collar_at_nmax = 0;
  double error_estimate = 0;
  std::vector<LimitStep> trace;
};

/// Evaluates the family at n = 1..n_max and extrapolates the normalized side
/// vectors. The error estimate is n_max times the sup distance of the last two
/// extrapolants (of the last two raw vectors without extrapolation, or when
/// n_max = 2). Throws NotConverged when the estimate exceeds tol or no
/// foliation fits the limit, and UnsupportedSpec for bounded families.
BoundaryLimit boundary_limit(const SequenceSpec& s, const LimitOptions& options = {});

/// Cuff lengths (2a, 2b, 2c) of the pair of pants doubled along A, B, C.
std::array<double, 3> pants_double(const TeichPoint& p);

}  // namespace hexatlas
