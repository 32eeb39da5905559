#include "hexatlas/foliation.hpp"

#include <algorithm>

#include "hexatlas/error.hpp"

namespace hexatlas {

namespace {

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

// A support face usable in a chart together with the inverse of the map
// (face weights) -> (intersection numbers with the chart triple).
struct FaceSolver {
  ArcTriple face;
  Matrix3 inverse;
};

std::optional<Matrix3> invert(const Matrix3& m) {
  const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det == 0) return std::nullopt;
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // Cofactor of (j, i) gives the adjugate entry (i, j).
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return inv;
}

bool disjoint(const ArcTriple& t, const ArcTriple& face) {
  for (Arc x : face.arcs())
    if (t.contains(x)) return false;
  return true;
}

std::size_t triple_slot(const ArcTriple& t) {
  const auto& all = compatible_triples();
  const auto it = std::lower_bound(all.begin(), all.end(), t);
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<std::vector<FaceSolver>> build_solvers() {
  const auto& all = compatible_triples();
  std::vector<std::vector<FaceSolver>> table(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const ArcTriple& t = all[i];
    for (const ArcTriple& face : all) {
      if (!disjoint(t, face)) continue;
      Matrix3 m;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = crosses(t[r], face[c]);
      auto inv = invert(m);
      if (!inv)
        throw Error(ErrorKind::InternalConsistency,
                    "singular chart system for " + t.to_string() + " on " + face.to_string());
      table[i].push_back({face, *inv});
    }
  }
  return table;
}

const std::vector<FaceSolver>& solvers_for(const ArcTriple& t) {
  static const std::vector<std::vector<FaceSolver>> table = build_solvers();
  return table[triple_slot(t)];
}

std::optional<std::array<Rational, 3>> solve_on(const FaceSolver& s,
                                                const std::array<Rational, 3>& x) {
  std::array<Rational, 3> w;
  for (int i = 0; i < 3; ++i) {
    w[i] = s.inverse[i][0] * x[0] + s.inverse[i][1] * x[1] + s.inverse[i][2] * x[2];
    if (w[i] < 0) return std::nullopt;
  }
  return w;
}

FoliationClass foliation_on(const ArcTriple& face, const std::array<Rational, 3>& w) {
  std::array<Rational, kArcCount> weights;
  for (int i = 0; i < 3; ++i) weights[arc_index(face[i])] = w[i];
  return FoliationClass(weights);
}

void require_coords(const std::array<Rational, 3>& coords) {
  for (const auto& x : coords)
    if (x < 0) throw Error(ErrorKind::NegativeWeight, "chart coordinates must be nonnegative");
  if (coords[0] + coords[1] + coords[2] == 0)
    throw Error(ErrorKind::ZeroCoords, "all three chart coordinates are zero");
}

// mpq_class(p, q) keeps p/q as given; exact comparison needs lowest terms.
std::array<Rational, 3> canonical(std::array<Rational, 3> x) {
  for (Rational& q : x) q.canonicalize();
  return x;
}

}  // namespace

FoliationClass::FoliationClass(const std::array<Rational, kArcCount>& weights) : weights_(weights) {
  for (Rational& w : weights_) w.canonicalize();
  validate();
}

FoliationClass::FoliationClass(std::initializer_list<std::pair<Arc, Rational>> weights) {
  for (const auto& [x, w] : weights) {
    Rational q = w;
    q.canonicalize();
    weights_[arc_index(x)] += q;
  }
  validate();
}

void FoliationClass::validate() const {
  for (Arc x : kArcs)
    if (weight(x) < 0)
      throw Error(ErrorKind::NegativeWeight,
                  "negative weight on arc " + std::string(arc_name(x)));
  const auto s = support();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (crosses(s[i], s[j]))
        throw Error(ErrorKind::IncompatibleSupport,
                    "arcs " + std::string(arc_name(s[i])) + " and " +
                        std::string(arc_name(s[j])) + " cross");
}

std::vector<Arc> FoliationClass::support() const {
  std::vector<Arc> out;
  for (Arc x : kArcs)
    if (weight(x) > 0) out.push_back(x);
  return out;
}

bool FoliationClass::empty() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 0; });
}

FoliationClass FoliationClass::scaled(const Rational& s) const {
  if (s <= 0) throw Error(ErrorKind::NegativeWeight, "scale factor must be positive");
  std::array<Rational, kArcCount> w = weights_;
  for (auto& x : w) x *= s;
  return FoliationClass(w);
}

FoliationClass operator+(const FoliationClass& l, const FoliationClass& r) {
  std::array<Rational, kArcCount> w;
  for (std::size_t i = 0; i < kArcCount; ++i) w[i] = l.weights_[i] + r.weights_[i];
  return FoliationClass(w);
}

const Rational& ChartCoords::at(Arc x) const {
  const auto i = triple.position(x);
  if (!i)
    throw Error(ErrorKind::NotInChart,
                std::string(arc_name(x)) + " is not an arc of chart " + triple.to_string());
  return coords[*i];
}

const std::vector<ArcTriple>& chart_faces(const ArcTriple& t) {
  static const std::vector<std::vector<ArcTriple>> faces = [] {
    std::vector<std::vector<ArcTriple>> out;
    for (const ArcTriple& t : compatible_triples()) {
      std::vector<ArcTriple> row;
      for (const auto& s : solvers_for(t)) row.push_back(s.face);
      out.push_back(std::move(row));
    }
    return out;
  }();
  return faces[triple_slot(t)];
}

std::vector<std::pair<ArcTriple, FoliationClass>> chart_realizations(
    const ArcTriple& t, const std::array<Rational, 3>& raw) {
  const std::array<Rational, 3> coords = canonical(raw);
  require_coords(coords);
  std::vector<std::pair<ArcTriple, FoliationClass>> out;
  for (const auto& s : solvers_for(t))
    if (auto w = solve_on(s, coords)) out.emplace_back(s.face, foliation_on(s.face, *w));
  return out;
}

ChartCoords make_chart(const ArcTriple& triple, const std::array<Rational, 3>& raw) {
  const std::array<Rational, 3> coords = canonical(raw);
  require_coords(coords);
  for (const auto& s : solvers_for(triple))
    if (solve_on(s, coords)) return ChartCoords{triple, coords, s.face};
  throw Error(ErrorKind::Infeasible, "no region of chart " + triple.to_string() +
                                         " realizes the coordinates");
}

bool region_consistent(const ChartCoords& cc) {
  for (const auto& s : solvers_for(cc.triple))
    if (s.face == cc.region) return solve_on(s, cc.coords).has_value();
  return false;
}

std::string region_name(const ChartCoords& cc) {
  if (cc.triple.case_number() == 1) {
    for (Arc x : cc.region.arcs()) {
      if (x == Arc::alpha) return "A-DOMINANT";
      if (x == Arc::beta) return "B-DOMINANT";
      if (x == Arc::gamma) return "C-DOMINANT";
    }
    return "CENTRAL";
  }
  std::string out;
  for (Arc x : cc.region.arcs()) {
    if (!out.empty()) out += '+';
    out += arc_name(x);
  }
  return out;
}

std::array<double, 3> PMFPoint::approx() const {
  return {chart.coords[0].get_d(), chart.coords[1].get_d(), chart.coords[2].get_d()};
}

PMFPoint normalize(const ChartCoords& cc) {
  require_coords(cc.coords);
  const Rational total = cc.sum();
  std::array<Rational, 3> x;
  for (int i = 0; i < 3; ++i) x[i] = cc.coords[i] / total;
  return PMFPoint{make_chart(cc.triple, x)};
}

Rational intersection_number(const FoliationClass& f, Arc x) {
  Rational total = 0;
  for (Arc s : kArcs)
    if (crosses(s, x)) total += f.weight(s);
  return total;
}

bool good_position(const FoliationClass& f, const ArcTriple& t) {
  Rational total = 0;
  for (Arc x : t.arcs()) {
    if (f.weight(x) != 0) return false;
    total += intersection_number(f, x);
  }
  return total > 0;
}

ChartCoords to_chart(const FoliationClass& f, const ArcTriple& t) {
  if (!good_position(f, t))
    throw Error(ErrorKind::NotInGoodPosition,
                "foliation is not in good position with respect to " + t.to_string());
  std::array<Rational, 3> x;
  for (int i = 0; i < 3; ++i) x[i] = intersection_number(f, t[i]);
  return make_chart(t, x);
}

FoliationClass from_chart(const ArcTriple& t, const std::array<Rational, 3>& coords) {
  const auto found = chart_realizations(t, coords);
  if (found.empty())
    throw Error(ErrorKind::Infeasible,
                "no nonnegative realization in chart " + t.to_string());
  for (std::size_t i = 1; i < found.size(); ++i)
    if (!(found[i].second == found[0].second))
      throw Error(ErrorKind::InternalConsistency,
                  "chart " + t.to_string() + " has two realizations of the same coordinates");
  return found.front().second;
}

FoliationClass from_chart(const ChartCoords& cc) { return from_chart(cc.triple, cc.coords); }

ChartCoords pl_transition(const ChartCoords& cc, const ArcTriple& target) {
  return to_chart(from_chart(cc), target);
}

std::vector<ArcTriple> charts_containing(const FoliationClass& f) {
  if (f.empty()) throw Error(ErrorKind::ZeroFoliation, "the empty foliation lies in no chart");
  std::vector<ArcTriple> out;
  for (const ArcTriple& t : compatible_triples())
    if (good_position(f, t)) out.push_back(t);
  if (out.empty())
    throw Error(ErrorKind::InternalConsistency, "nonzero foliation lies in no chart");
  return out;
}

PMFPoint projectivize(const FoliationClass& f) {
  return normalize(to_chart(f, charts_containing(f).front()));
}

}  // namespace hexatlas
