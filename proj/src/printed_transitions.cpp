#include "hexatlas/printed_transitions.hpp"

#include <map>

namespace hexatlas::printed {

namespace {

using Values = std::map<Arc, Rational>;

Values by_name(const ArcTriple& t, const std::array<Rational, 3>& x) {
  Values v{{t[0], x[0]}, {t[1], x[1]}, {t[2], x[2]}};
  for (auto& [arc, q] : v) q.canonicalize();
  return v;
}

std::array<Rational, 3> in_order(const ArcTriple& t, Values v) {
  return {v.at(t[0]), v.at(t[1]), v.at(t[2])};
}

const Rational kHalf(1, 2);

}  // namespace

ArcTriple source(Formula f) {
  switch (f) {
    case Formula::Phi1:
    case Formula::Phi2:
    case Formula::Phi3: return ArcTriple::from_arcs(Arc::a, Arc::b, Arc::c);
    case Formula::Phi4: return ArcTriple::from_arcs(Arc::alpha, Arc::b, Arc::c);
    case Formula::Phi5: return ArcTriple::from_arcs(Arc::A, Arc::B, Arc::C);
  }
  return ArcTriple::from_arcs(Arc::a, Arc::b, Arc::c);
}

ArcTriple target(Formula f) {
  switch (f) {
    case Formula::Phi1: return ArcTriple::from_arcs(Arc::alpha, Arc::B, Arc::C);
    case Formula::Phi2: return ArcTriple::from_arcs(Arc::alpha, Arc::b, Arc::c);
    case Formula::Phi3: return ArcTriple::from_arcs(Arc::a, Arc::beta, Arc::A);
    case Formula::Phi4: return ArcTriple::from_arcs(Arc::alpha, Arc::b, Arc::B);
    case Formula::Phi5: return ArcTriple::from_arcs(Arc::alpha, Arc::b, Arc::c);
  }
  return ArcTriple::from_arcs(Arc::a, Arc::b, Arc::c);
}

int region_count(Formula f) {
  switch (f) {
    case Formula::Phi1: return 2;
    case Formula::Phi2: return 3;
    case Formula::Phi3: return 1;
    case Formula::Phi4: return 1;
    case Formula::Phi5: return 2;
  }
  return 0;
}

const char* name(Formula f) {
  switch (f) {
    case Formula::Phi1: return "phi1";
    case Formula::Phi2: return "phi2";
    case Formula::Phi3: return "phi3";
    case Formula::Phi4: return "phi4";
    case Formula::Phi5: return "phi5";
  }
  return "?";
}

std::optional<int> region(Formula f, const std::array<Rational, 3>& source_coords) {
  for (const auto& x : source_coords)
    if (x < 0) return std::nullopt;
  const Values v = by_name(source(f), source_coords);
  switch (f) {
    case Formula::Phi1: {
      const Rational &a = v.at(Arc::a), &b = v.at(Arc::b), &c = v.at(Arc::c);
      if (a != 0 || b + c == 0) return std::nullopt;
      return b >= c ? 1 : 2;
    }
    case Formula::Phi2: {
      const Rational &a = v.at(Arc::a), &b = v.at(Arc::b), &c = v.at(Arc::c);
      if (a + b + c == 0) return std::nullopt;
      if (a <= b + c && b <= a + c && c <= a + b) return 1;
      if (b > a + c) return 2;
      if (c > a + b) return 3;
      return std::nullopt;
    }
    case Formula::Phi3: {
      const Rational &a = v.at(Arc::a), &b = v.at(Arc::b), &c = v.at(Arc::c);
      if (a == 0 || a < b + c) return std::nullopt;
      return 1;
    }
    case Formula::Phi4: {
      if (!(v.at(Arc::alpha) > v.at(Arc::c))) return std::nullopt;
      return 1;
    }
    case Formula::Phi5: {
      const Rational &A = v.at(Arc::A), &B = v.at(Arc::B), &C = v.at(Arc::C);
      if (A != 0 || B + C == 0) return std::nullopt;
      return C >= B ? 1 : 2;
    }
  }
  return std::nullopt;
}

std::optional<std::array<Rational, 3>> apply(Formula f, const std::array<Rational, 3>& source_coords) {
  const auto r = region(f, source_coords);
  if (!r) return std::nullopt;
  const Values v = by_name(source(f), source_coords);
  Values out;
  switch (f) {
    case Formula::Phi1: {
      const Rational &b = v.at(Arc::b), &c = v.at(Arc::c);
      if (*r == 1)
        out = {{Arc::alpha, b}, {Arc::B, b - c}, {Arc::C, 0}};
      else
        out = {{Arc::alpha, c}, {Arc::B, 0}, {Arc::C, c - b}};
      break;
    }
    case Formula::Phi2: {
      const Rational &a = v.at(Arc::a), &b = v.at(Arc::b), &c = v.at(Arc::c);
      Rational alpha;
      if (*r == 1) alpha = kHalf * (b + c - a);
      if (*r == 2) alpha = b - a;
      if (*r == 3) alpha = c - a;
      out = {{Arc::alpha, alpha}, {Arc::b, b}, {Arc::c, c}};
      break;
    }
    case Formula::Phi3: {
      const Rational &a = v.at(Arc::a), &b = v.at(Arc::b), &c = v.at(Arc::c);
      out = {{Arc::beta, a - b}, {Arc::a, a}, {Arc::A, a - b - c}};
      break;
    }
    case Formula::Phi4: {
      const Rational &alpha = v.at(Arc::alpha), &b = v.at(Arc::b), &c = v.at(Arc::c);
      out = {{Arc::alpha, alpha}, {Arc::b, b}, {Arc::B, alpha - c}};
      break;
    }
    case Formula::Phi5: {
      const Rational &B = v.at(Arc::B), &C = v.at(Arc::C);
      if (*r == 1)
        out = {{Arc::alpha, C}, {Arc::b, 0}, {Arc::c, C - B}};
      else
        out = {{Arc::alpha, B}, {Arc::b, B - C}, {Arc::c, 0}};
      break;
    }
  }
  return in_order(target(f), out);
}

}  // namespace hexatlas::printed
