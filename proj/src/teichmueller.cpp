#include "hexatlas/teichmueller.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hexatlas/error.hpp"

namespace hexatlas {

namespace {

ProjectivePoint6 normalized(const std::array<double, 6>& v) {
  double sum = 0;
  for (double x : v) sum += x;
  if (!(sum > 0) || !std::isfinite(sum))
    throw Error(ErrorKind::ZeroFoliation, "cannot normalize a zero or non-finite vector");
  ProjectivePoint6 out;
  for (std::size_t i = 0; i < 6; ++i) out.v[i] = v[i] / sum;
  return out;
}

double sup_distance(const std::array<double, 6>& x, const std::array<double, 6>& y) {
  double d = 0;
  for (std::size_t i = 0; i < 6; ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

double triple_sum(const HexagonLengths& h, const ArcTriple& t) {
  return h[t[0]] + h[t[1]] + h[t[2]];
}

// Witness tables for the alternating triple {a,b,c}. The table for {A,B,C}
// follows by swapping case.
std::optional<Divergence> classify_alternating(const SequenceSpec& s) {
  const ArcTriple& t = s.triple;
  bool upper = false;
  if (t == ArcTriple::from_arcs(Arc::A, Arc::B, Arc::C)) {
    upper = true;
  } else if (!(t == ArcTriple::from_arcs(Arc::a, Arc::b, Arc::c))) {
    return std::nullopt;
  }
  auto lift = [&](Arc x) { return upper ? swap_case(x) : x; };
  // Lowercase names in a, b, c order.
  std::array<Arc, 3> names{Arc::a, Arc::b, Arc::c};
  std::array<Growth, 3> g{};
  for (std::size_t i = 0; i < 3; ++i) g[i] = s.lengths[i].growth();

  Divergence d;
  d.growth = g;
  auto count = [&](Growth k) { return std::count(g.begin(), g.end(), k); };
  auto find = [&](Growth k, int skip = 0) {
    for (std::size_t i = 0; i < 3; ++i)
      if (g[i] == k && skip-- == 0) return i;
    return std::size_t{3};
  };
  auto witness = [&](Arc x, Arc y, Arc z) {
    d.diverges = true;
    d.witness = ArcTriple::from_arcs(lift(x), lift(y), lift(z));
    return d;
  };

  if (count(Growth::Infinite) == 3) return witness(names[0], names[1], names[2]);
  if (count(Growth::Zero) == 3)
    return witness(swap_case(names[0]), swap_case(names[1]), swap_case(names[2]));
  if (count(Growth::Bounded) == 3) return d;
  if (count(Growth::Infinite) == 2 && count(Growth::Bounded) == 1) {
    const Arc z = names[find(Growth::Bounded)];
    return witness(names[find(Growth::Infinite)], names[find(Growth::Infinite, 1)],
                   spanning_of(z));
  }
  if (count(Growth::Infinite) == 1 && count(Growth::Bounded) == 2) {
    const std::size_t i = find(Growth::Infinite);
    // a -> {a,A,gamma}, b -> {b,B,alpha}, c -> {c,C,beta}
    const Arc before = names[(i + 2) % 3];
    return witness(names[i], swap_case(names[i]), spanning_of(before));
  }
  if (count(Growth::Zero) == 1 && count(Growth::Bounded) == 2) {
    const std::size_t z = find(Growth::Zero);
    return witness(swap_case(names[(z + 1) % 3]), swap_case(names[(z + 2) % 3]),
                   spanning_of(names[z]));
  }
  return std::nullopt;
}

Divergence classify_by_sampling(const SequenceSpec& s) {
  Divergence d;
  d.symbolic = false;
  for (std::size_t i = 0; i < 3; ++i) d.growth[i] = s.lengths[i].growth();
  HexagonLengths early;
  HexagonLengths late;
  try {
    early = solve_from_triple(s.triple, s.at(32));
    late = solve_from_triple(s.triple, s.at(64));
  } catch (const Error& e) {
    throw Error(ErrorKind::UnsupportedSpec,
                "sampling the family failed (" + std::string(e.what()) + ")");
  }
  double best = -1;
  for (const ArcTriple& t : compatible_triples()) {
    double lo_late = std::numeric_limits<double>::infinity();
    double lo_early = lo_late;
    for (Arc x : t.arcs()) {
      lo_late = std::min(lo_late, late[x]);
      lo_early = std::min(lo_early, early[x]);
    }
    if (lo_late >= kNumericDivergenceThreshold && lo_late > lo_early && lo_late > best) {
      best = lo_late;
      d.diverges = true;
      d.witness = t;
    }
  }
  if (!d.diverges)
    throw Error(ErrorKind::UnsupportedSpec,
                "cannot decide whether '" + s.to_string() + "' tends to infinity");
  return d;
}

// Nonnegative least-squares fit of the side vector of a foliation to p, over
// every support contained in an arc triple.
struct Fit {
  FoliationClass foliation;
  double residual = std::numeric_limits<double>::infinity();
  int support = 0;
};

Fit fit_foliation(const std::array<double, 6>& p, double snap) {
  Eigen::Matrix<double, 6, 1> target;
  for (int r = 0; r < 6; ++r) target(r) = p[r];
  Fit best;
  for (const ArcTriple& face : compatible_triples()) {
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<Arc> cols;
      for (int j = 0; j < 3; ++j)
        if (mask & (1 << j)) cols.push_back(face[j]);
      Eigen::MatrixXd m(6, static_cast<Eigen::Index>(cols.size()));
      for (int r = 0; r < 6; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
          m(r, static_cast<Eigen::Index>(j)) = crosses(cols[j], kSideOrder[r]);
      const Eigen::VectorXd w = m.colPivHouseholderQr().solve(target);
      if ((w.array() < 0).any()) continue;
      const double residual = (m * w - target).lpNorm<Eigen::Infinity>();
      const int size = static_cast<int>(cols.size());
      if (residual < best.residual - 1e-14 ||
          (std::abs(residual - best.residual) <= 1e-14 && size < best.support)) {
        std::array<Rational, kArcCount> weights;
        for (std::size_t j = 0; j < cols.size(); ++j) {
          const double wj = w(static_cast<Eigen::Index>(j)) < snap ? 0.0 : w(static_cast<Eigen::Index>(j));
          weights[arc_index(cols[j])] = rational_from_double(wj);
        }
        best.foliation = FoliationClass(weights);
        best.residual = residual;
        best.support = size;
      }
    }
  }
  return best;
}

}  // namespace

std::array<double, 6> length_vector6(const TeichPoint& p) {
  std::array<double, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) v[i] = p.hexagon[kSideOrder[i]];
  return v;
}

TeichPoint teich_from_triple(const ArcTriple& t, const std::array<double, 3>& lengths,
                             const SolveOptions& options) {
  return TeichPoint{solve_from_triple(t, lengths, options)};
}

ProjectivePoint6 projective_embed(const TeichPoint& p) { return normalized(length_vector6(p)); }

ProjectivePoint6 projective_embed_f(const FoliationClass& f) {
  if (f.empty()) throw Error(ErrorKind::ZeroFoliation, "the empty foliation has no projective class");
  std::array<double, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) v[i] = intersection_number(f, kSideOrder[i]).get_d();
  return normalized(v);
}

bool in_thick_part(const TeichPoint& p, const ArcTriple& t, double eps) {
  for (Arc x : t.arcs())
    if (!(p.hexagon[x] > eps)) return false;
  return true;
}

ThickWitness thickest_triple(const TeichPoint& p) {
  const auto& triples = compatible_triples();
  ThickWitness best{triples.front(), -1};
  for (const ArcTriple& t : triples) {
    const double m = std::min({p.hexagon[t[0]], p.hexagon[t[1]], p.hexagon[t[2]]});
    if (m > best.min_length) best = {t, m};
  }
  return best;
}

FoliationClass q_projection(const TeichPoint& p, const ArcTriple& t) {
  return from_chart(t, {rational_from_double(p.hexagon[t[0]]),
                        rational_from_double(p.hexagon[t[1]]),
                        rational_from_double(p.hexagon[t[2]])});
}

BoundaryChartPoint boundary_chart(const TeichPoint& p, const ArcTriple& t) {
  const FoliationClass q = q_projection(p, t);
  return {normalize(to_chart(q, t)), std::exp(-triple_sum(p.hexagon, t))};
}

BoundaryChartPoint boundary_chart(const PMFPoint& x, const ArcTriple& t) {
  if (!(x.chart.triple == t))
    throw Error(ErrorKind::NotInChart,
                "point is given in chart " + x.chart.triple.to_string() + ", not " + t.to_string());
  for (const Rational& c : x.chart.coords)
    if (sgn(c) <= 0)
      throw Error(ErrorKind::NotInChart, "point lies on the boundary of chart " + t.to_string());
  return {normalize(x.chart), 0.0};
}

TeichPoint from_boundary_chart(const BoundaryChartPoint& x, const SolveOptions& options) {
  if (!(x.collar > 0) || !(x.collar < 1))
    throw Error(ErrorKind::NotInChart, "collar value outside (0,1) has no hexagon");
  const double total = -std::log(x.collar);
  const ArcTriple& t = x.point.chart.triple;
  const FoliationClass section = from_chart(x.point.chart);
  std::array<double, 3> lengths{};
  for (std::size_t i = 0; i < 3; ++i)
    lengths[i] = intersection_number(section, t[i]).get_d() * total;
  return teich_from_triple(t, lengths, options);
}

Divergence diverges(const SequenceSpec& s) {
  if (auto d = classify_alternating(s)) return *d;
  std::array<Growth, 3> g{};
  for (std::size_t i = 0; i < 3; ++i) g[i] = s.lengths[i].growth();
  if (std::all_of(g.begin(), g.end(), [](Growth x) { return x == Growth::Infinite; }))
    return Divergence{true, s.triple, g, true};
  if (std::all_of(g.begin(), g.end(), [](Growth x) { return x == Growth::Bounded; }))
    return Divergence{false, std::nullopt, g, true};
  return classify_by_sampling(s);
}

BoundaryLimit boundary_limit(const SequenceSpec& s, const LimitOptions& options) {
  if (options.n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  if (!(options.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const Divergence d = diverges(s);
  if (!d.diverges)
    throw Error(ErrorKind::UnsupportedSpec, "the family does not tend to infinity");

  BoundaryLimit out;
  std::vector<std::array<double, 6>> v;
  HexagonLengths last;
  for (int n = 1; n <= options.n_max; ++n) {
    last = solve_from_triple(s.triple, s.at(n));
    v.push_back(normalized(length_vector6(TeichPoint{last})).v);
    if (options.keep_trace) out.trace.push_back({n, last, v.back()});
  }

  const std::size_t m = v.size();
  std::array<double, 6> limit = v[m - 1];
  double delta = sup_distance(v[m - 1], v[m - 2]);
  if (options.extrapolation == Extrapolation::Richardson && options.n_max >= 3) {
    auto richardson = [&](std::size_t k) {  // k is n - 1
      std::array<double, 6> r{};
      const double n = static_cast<double>(k + 1);
      for (std::size_t i = 0; i < 6; ++i) r[i] = n * v[k][i] - (n - 1) * v[k - 1][i];
      return r;
    };
    limit = richardson(m - 1);
    delta = sup_distance(limit, richardson(m - 2));
  }
  out.error_estimate = options.n_max * delta;
  if (!(out.error_estimate <= options.tol))
    throw Error(ErrorKind::NotConverged,
                "error estimate " + std::to_string(out.error_estimate) + " exceeds tolerance at n = " +
                    std::to_string(options.n_max));
  for (double& x : limit) x = std::max(x, 0.0);
  out.limit = normalized(limit);

  const Fit fit = fit_foliation(out.limit.v, std::min(options.tol, 1e-3));
  if (fit.support == 0 || !(fit.residual <= 10 * options.tol) || fit.foliation.empty())
    throw Error(ErrorKind::NotConverged, "the limit is not the side vector of a foliation");
  out.foliation = fit.foliation;
  out.chart = charts_containing(fit.foliation).front();
  out.collar_at_nmax = std::exp(-triple_sum(last, out.chart));
  return out;
}

std::array<double, 3> pants_double(const TeichPoint& p) {
  return {2 * p.hexagon[Arc::a], 2 * p.hexagon[Arc::b], 2 * p.hexagon[Arc::c]};
}

}  // namespace hexatlas
