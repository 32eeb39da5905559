#include "hexatlas/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hexatlas/error.hpp"
#include "stable_math.hpp"

namespace hexatlas {

namespace {

using detail::acosh1p_exp;
using detail::asinh_exp;
using detail::log_add_exp;
using detail::log_cosh;
using detail::log_sinh;

void require_length(double x, const char* what) {
  if (!std::isfinite(x) || !(x > 0))
    throw Error(ErrorKind::NonPositiveLength,
                std::string(what) + " must be a positive finite length, got " + std::to_string(x));
  if (x < kMinLength)
    throw Error(ErrorKind::NonPositiveLength,
                std::string(what) + " is below the degeneration threshold");
}

// Derived lengths may underflow to 0; anything else is a failure of the relations.
void require_finite(double x, const char* what) {
  if (!std::isfinite(x) || x < 0)
    throw Error(ErrorKind::Infeasible, std::string(what) + " left the domain of the relations");
}

Arc rotate_times(Arc x, int k) {
  for (int i = 0; i < ((k % 3) + 3) % 3; ++i) x = rotate_labels(x);
  return x;
}

double relative_gap(long double x, long double y) {
  const long double scale = std::max({std::abs(x), std::abs(y), 1e-300L});
  return static_cast<double>(std::abs(x - y) / scale);
}

// Split along gamma into P1 = (c1, B, a, C1, gamma) and P2 = (C2, b, A, c2, gamma).
// `given` holds gamma, one of {a, B} and one of {b, A}.
HexagonLengths solve_gamma_split(const HexagonLengths& given, bool has_a, bool has_A,
                                 double tolerance) {
  const double gamma = given[Arc::gamma];
  const PentagonLengths p1 = has_a ? complete_pentagon(2, given[Arc::a], gamma)
                                   : complete_pentagon(4, gamma, given[Arc::B]);
  const PentagonLengths p2 = has_A ? complete_pentagon(2, given[Arc::A], gamma)
                                   : complete_pentagon(4, gamma, given[Arc::b]);
  HexagonLengths h;
  h[Arc::a] = p1.sides[2];
  h[Arc::B] = p1.sides[1];
  h[Arc::b] = p2.sides[1];
  h[Arc::A] = p2.sides[2];
  h[Arc::c] = p1.sides[0] + p2.sides[3];
  h[Arc::C] = p1.sides[3] + p2.sides[0];
  h[Arc::gamma] = gamma;
  h[Arc::alpha] = perpendicular_length(h[Arc::a], h[Arc::b], h[Arc::c]);
  h[Arc::beta] = perpendicular_length(h[Arc::b], h[Arc::c], h[Arc::a]);
  const double gamma_check = perpendicular_length(h[Arc::c], h[Arc::a], h[Arc::b]);
  if (relative_gap(gamma_check, gamma) > tolerance)
    throw Error(ErrorKind::Infeasible, "pentagons split along gamma do not close up (gap " +
                                           std::to_string(relative_gap(gamma_check, gamma)) + ")");
  return h;
}

}  // namespace

HexagonLengths relabeled(const HexagonLengths& h, Arc (*map)(Arc)) {
  HexagonLengths out;
  for (Arc x : kArcs) out[map(x)] = h[x];
  return out;
}

double opposite_side(double a, double b, double c) {
  require_length(a, "a");
  require_length(b, "b");
  require_length(c, "c");
  // cosh C - 1 = (cosh c + cosh(a - b)) / (sinh a sinh b)
  const double log_delta =
      log_add_exp(log_cosh(c), log_cosh(a - b)) - log_sinh(a) - log_sinh(b);
  const double side = acosh1p_exp(log_delta);
  require_finite(side, "opposite side");
  return side;
}

double perpendicular_length(double x, double y, double z) {
  require_length(x, "side");
  require_length(y, "side");
  require_length(z, "side");
  // sinh^2 p = (cosh z + e^-x cosh y)(cosh z + e^x cosh y) / sinh^2 x
  const double log_sinh_p = 0.5 * (log_add_exp(log_cosh(z), -x + log_cosh(y)) +
                                    log_add_exp(log_cosh(z), x + log_cosh(y))) -
                            log_sinh(x);
  const double p = asinh_exp(log_sinh_p);
  require_finite(p, "perpendicular");
  return p;
}

HexagonLengths solve_from_alternating(double a, double b, double c) {
  HexagonLengths h;
  h[Arc::a] = a;
  h[Arc::b] = b;
  h[Arc::c] = c;
  h[Arc::C] = opposite_side(a, b, c);
  h[Arc::A] = opposite_side(b, c, a);
  h[Arc::B] = opposite_side(c, a, b);
  h[Arc::alpha] = perpendicular_length(a, b, c);
  h[Arc::beta] = perpendicular_length(b, c, a);
  h[Arc::gamma] = perpendicular_length(c, a, b);
  return h;
}

double pentagon_between(double u, double v) {
  require_length(u, "pentagon side");
  require_length(v, "pentagon side");
  // cosh t - 1 = coth u coth v - 1 = cosh(u - v) / (sinh u sinh v)
  const double t = acosh1p_exp(log_cosh(u - v) - log_sinh(u) - log_sinh(v));
  require_finite(t, "pentagon side");
  return t;
}

PentagonLengths complete_pentagon(std::size_t first, double first_length, double second_length) {
  if (first > 4) throw Error(ErrorKind::Infeasible, "pentagon positions are 0..4");
  const double u = first_length, v = second_length;
  PentagonLengths p;
  p.sides[first] = u;
  p.sides[(first + 2) % 5] = v;
  p.sides[(first + 1) % 5] = pentagon_between(u, v);
  // sinh s_{i+3} = cosh s_i / sinh s_{i+2},  sinh s_{i+4} = cosh s_{i+2} / sinh s_i
  p.sides[(first + 3) % 5] = asinh_exp(log_cosh(u) - log_sinh(v));
  p.sides[(first + 4) % 5] = asinh_exp(log_cosh(v) - log_sinh(u));
  for (double s : p.sides) require_finite(s, "pentagon side");
  return p;
}

HexagonLengths solve_from_triple(const ArcTriple& t, const std::array<double, 3>& lengths,
                                 const SolveOptions& options) {
  HexagonLengths given;
  for (std::size_t i = 0; i < 3; ++i) {
    require_length(lengths[i], std::string(arc_name(t[i])).c_str());
    given[t[i]] = lengths[i];
  }
  if (t.case_number() == 1) {
    if (t.contains(Arc::a))
      return solve_from_alternating(given[Arc::a], given[Arc::b], given[Arc::c]);
    const HexagonLengths g = solve_from_alternating(given[Arc::A], given[Arc::B], given[Arc::C]);
    return relabeled(g, swap_case);
  }
  Arc spanning = Arc::gamma;
  for (Arc x : t.arcs())
    if (is_spanning(x)) spanning = x;
  // Rotate so that the spanning arc becomes gamma, solve, rotate back.
  const int k = spanning == Arc::gamma ? 0 : spanning == Arc::beta ? 1 : 2;
  HexagonLengths rotated;
  bool has_a = false, has_A = false;
  for (Arc x : t.arcs()) {
    const Arc y = rotate_times(x, k);
    rotated[y] = given[x];
    has_a = has_a || y == Arc::a;
    has_A = has_A || y == Arc::A;
  }
  const HexagonLengths g = solve_gamma_split(rotated, has_a, has_A, options.split_tolerance);
  HexagonLengths h;
  for (Arc x : kArcs) h[x] = g[rotate_times(x, k)];
  return h;
}

FeetSolution perpendicular_feet(const HexagonLengths& h, Arc which, double tolerance) {
  if (!is_spanning(which))
    throw Error(ErrorKind::InvalidTriple, "feet are defined for alpha, beta, gamma only");
  const int k = which == Arc::alpha ? 0 : which == Arc::beta ? 1 : 2;
  // g is h seen from a frame where `which` is alpha.
  HexagonLengths g;
  for (Arc x : kArcs) g[x] = h[rotate_times(x, k)];
  const double alpha = g[Arc::alpha];
  // P = (x, C, b, y, alpha) and Q = (A2, c, B, a2, alpha).
  const PentagonLengths p = complete_pentagon(4, alpha, g[Arc::C]);
  const PentagonLengths q = complete_pentagon(4, alpha, g[Arc::c]);
  const FeetSolution feet{p.sides[0], p.sides[3]};
  const double a_rest = q.sides[3];
  const double A_rest = q.sides[0];
  const long double cosh_alpha = std::cosh(static_cast<long double>(alpha));
  const double gaps[] = {
      relative_gap(p.sides[2], g[Arc::b]),
      relative_gap(q.sides[2], g[Arc::B]),
      relative_gap(feet.x + a_rest, g[Arc::a]),
      relative_gap(feet.y + A_rest, g[Arc::A]),
      relative_gap(1.0L / (std::tanh(static_cast<long double>(feet.x)) *
                           std::tanh(static_cast<long double>(feet.y))),
                   cosh_alpha),
      relative_gap(1.0L / (std::tanh(static_cast<long double>(a_rest)) *
                           std::tanh(static_cast<long double>(A_rest))),
                   cosh_alpha),
  };
  for (double gap : gaps)
    if (!(gap <= tolerance))
      throw Error(ErrorKind::InternalConsistency,
                  "perpendicular feet disagree between the two pentagons (gap " +
                      std::to_string(gap) + ")");
  return feet;
}

double scaled_opposite(double a, double b, double c, double t) {
  require_length(t, "scale factor");
  return opposite_side(t * a, t * b, t * c);
}

double scaling_kernel(double a, double b, double c, double t) {
  const double ta = t * a, tb = t * b, tc = t * c;
  return c * std::sinh(tc) * std::sinh(ta) * std::sinh(tb) -
         a * std::cosh(ta) * std::cosh(tc) * std::sinh(tb) -
         b * std::cosh(tb) * std::cosh(tc) * std::sinh(ta);
}

TrigResiduals trig_residuals(const HexagonLengths& h) {
  using std::cosh;
  using std::sinh;
  auto L = [&](Arc x) { return static_cast<long double>(h[x]); };
  TrigResiduals r;
  // (side, alternating neighbours x, y, opposite alternating z): cosh side = ...
  const std::array<std::array<Arc, 4>, 3> rules{{{Arc::C, Arc::a, Arc::b, Arc::c},
                                                 {Arc::A, Arc::b, Arc::c, Arc::a},
                                                 {Arc::B, Arc::c, Arc::a, Arc::b}}};
  for (const auto& [side, x, y, z] : rules)
    r.cosh_rule = std::max(r.cosh_rule, relative_gap(cosh(L(side)) * sinh(L(x)) * sinh(L(y)),
                                                     cosh(L(z)) + cosh(L(x)) * cosh(L(y))));
  const long double ratios[] = {sinh(L(Arc::A)) / sinh(L(Arc::a)),
                                sinh(L(Arc::B)) / sinh(L(Arc::b)),
                                sinh(L(Arc::C)) / sinh(L(Arc::c))};
  r.law_of_sines = std::max({relative_gap(ratios[0], ratios[1]), relative_gap(ratios[1], ratios[2]),
                             relative_gap(ratios[0], ratios[2])});
  // cosh alpha = sinh b sinh C = sinh c sinh B and rotations
  const std::array<std::array<Arc, 5>, 3> perps{{{Arc::alpha, Arc::b, Arc::C, Arc::c, Arc::B},
                                                 {Arc::beta, Arc::c, Arc::A, Arc::a, Arc::C},
                                                 {Arc::gamma, Arc::a, Arc::B, Arc::b, Arc::A}}};
  for (const auto& [p, x1, y1, x2, y2] : perps) {
    const long double ch = cosh(L(p));
    r.perpendicular = std::max({r.perpendicular, relative_gap(ch, sinh(L(x1)) * sinh(L(y1))),
                                relative_gap(ch, sinh(L(x2)) * sinh(L(y2)))});
  }
  return r;
}

double pentagon_residual(const PentagonLengths& p) {
  auto s = [&](int i) { return static_cast<long double>(p.sides[static_cast<std::size_t>((i + 5) % 5)]); };
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const long double ch = std::cosh(s(i));
    worst = std::max(worst, relative_gap(ch, std::sinh(s(i + 2)) * std::sinh(s(i + 3))));
    worst = std::max(worst, relative_gap(ch, 1.0L / (std::tanh(s(i - 1)) * std::tanh(s(i + 1)))));
  }
  return worst;
}

}  // namespace hexatlas
