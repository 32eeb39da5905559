#pragma once

// Measured foliations on the hexagon in weight coordinates: a foliation class
// is a nonnegative combination of pairwise disjoint arc classes (one band of
// parallel leaves per arc). Charts record the three intersection numbers with
// an arc triple; all of this layer is exact.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexatlas/arcs.hpp"
#include "hexatlas/rational.hpp"

namespace hexatlas {

class FoliationClass {
 public:
  /// The empty foliation.
  FoliationClass() = default;
  /// Throws NegativeWeight or IncompatibleSupport.
  explicit FoliationClass(const std::array<Rational, kArcCount>& weights);
  FoliationClass(std::initializer_list<std::pair<Arc, Rational>> weights);

  const Rational& weight(Arc x) const { return weights_[arc_index(x)]; }
  const std::array<Rational, kArcCount>& weights() const { return weights_; }
  std::vector<Arc> support() const;
  bool empty() const;

  /// Multiplies every weight by s > 0.
  FoliationClass scaled(const Rational& s) const;

  /// Sum of weight vectors; throws IncompatibleSupport when the union of the
  /// supports is not pairwise disjoint.
  friend FoliationClass operator+(const FoliationClass& l, const FoliationClass& r);
  friend bool operator==(const FoliationClass& l, const FoliationClass& r) {
    return l.weights_ == r.weights_;
  }

 private:
  void validate() const;

  std::array<Rational, kArcCount> weights_;
};

/// Coordinates of a foliation in the chart of an arc triple, in the triple's
/// canonical order. `region` is the support face that realizes the
/// coordinates; on region boundaries it is the first such face in canonical
/// order.
struct ChartCoords {
  ArcTriple triple;
  std::array<Rational, 3> coords;
  ArcTriple region;

  const Rational& at(Arc x) const;
  Rational sum() const { return coords[0] + coords[1] + coords[2]; }
};

/// Builds chart coordinates and computes the region tag. Throws ZeroCoords or
/// NegativeWeight.
ChartCoords make_chart(const ArcTriple& triple, const std::array<Rational, 3>& coords);

/// CENTRAL or X-DOMINANT for the charts {a,b,c} and {A,B,C}; otherwise the
/// support face written as "x+y+z".
std::string region_name(const ChartCoords& cc);

/// True iff `region` realizes the coordinates with nonnegative weights.
bool region_consistent(const ChartCoords& cc);

/// Charts normalized so the three coordinates sum to one.
struct PMFPoint {
  ChartCoords chart;

  std::array<double, 3> approx() const;
};

/// Throws ZeroCoords; the region is recomputed.
PMFPoint normalize(const ChartCoords& cc);

Rational intersection_number(const FoliationClass& f, Arc x);

bool good_position(const FoliationClass& f, const ArcTriple& t);

/// Throws NotInGoodPosition.
ChartCoords to_chart(const FoliationClass& f, const ArcTriple& t);

/// The unique foliation in good position with the given coordinates.
/// Throws ZeroCoords; InternalConsistency should never fire.
FoliationClass from_chart(const ChartCoords& cc);
FoliationClass from_chart(const ArcTriple& t, const std::array<Rational, 3>& coords);

/// Coordinate change between two charts. Throws NotInGoodPosition when the
/// foliation is not in good position with respect to `target`.
ChartCoords pl_transition(const ChartCoords& cc, const ArcTriple& target);

/// Every triple the foliation is in good position with. Throws ZeroFoliation.
std::vector<ArcTriple> charts_containing(const FoliationClass& f);

/// First containing chart in canonical order, normalized. Throws ZeroFoliation.
PMFPoint projectivize(const FoliationClass& f);

/// Every support face a chart can be realized on: the arc triples disjoint
/// from `t`.
const std::vector<ArcTriple>& chart_faces(const ArcTriple& t);

/// All nonnegative realizations of the coordinates, one entry per face.
/// Region boundaries yield several entries describing the same foliation.
std::vector<std::pair<ArcTriple, FoliationClass>> chart_realizations(
    const ArcTriple& t, const std::array<Rational, 3>& coords);

}  // namespace hexatlas
