#include "hexatlas/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hexatlas/error.hpp"

namespace hexatlas {

namespace {

constexpr std::array<Arc, 9> kHexagonOrder{Arc::a,     Arc::C,    Arc::b,
                                           Arc::A,     Arc::c,    Arc::B,
                                           Arc::alpha, Arc::beta, Arc::gamma};

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Arc arc_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, "arc names must be strings");
  return parse_arc_or_throw(j.get<std::string>());
}

template <std::size_t N>
std::array<Arc, N> arcs_from_json(const Json& j) {
  if (!j.is_array() || j.size() != N)
    throw Error(ErrorKind::Parse, "expected an array of " + std::to_string(N) + " arc names");
  std::array<Arc, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = arc_from_json(j[i]);
  return out;
}

double length_from_json(const Json& j) {
  if (!j.is_number()) throw Error(ErrorKind::Parse, "lengths must be numbers");
  return j.get<double>();
}

std::string pretty_number(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Json to_json(const ArcTriple& t) {
  Json j = Json::array();
  for (Arc x : t.arcs()) j.push_back(arc_name(x));
  return j;
}

Json to_json(const FoliationClass& f) {
  Json w = Json::object();
  for (Arc x : f.support()) w[std::string(arc_name(x))] = format_rational(f.weight(x));
  return Json{{"weights", w}};
}

Json to_json(const ChartCoords& cc) {
  Json coords = Json::array();
  for (const Rational& q : cc.coords) coords.push_back(format_rational(q));
  return Json{{"triple", to_json(cc.triple)}, {"coords", coords}, {"region", region_name(cc)}};
}

Json to_json(const PMFCellComplex& complex) {
  Json v = Json::array();
  for (Arc x : complex.vertices) v.push_back(arc_name(x));
  Json e = Json::array();
  for (const auto& edge : complex.edges) e.push_back({arc_name(edge[0]), arc_name(edge[1])});
  Json f = Json::array();
  for (const auto& face : complex.faces)
    f.push_back({arc_name(face[0]), arc_name(face[1]), arc_name(face[2])});
  return Json{{"vertices", v}, {"edges", e}, {"faces", f}};
}

Json to_json(const HexagonLengths& h) {
  Json sides = Json::object();
  for (std::size_t i = 0; i < 6; ++i) sides[std::string(arc_name(kHexagonOrder[i]))] = h[kHexagonOrder[i]];
  Json perp = Json::object();
  for (std::size_t i = 6; i < 9; ++i) perp[std::string(arc_name(kHexagonOrder[i]))] = h[kHexagonOrder[i]];
  return Json{{"sides", sides}, {"perp", perp}};
}

Json to_json(const ProjectivePoint6& p) {
  Json j = Json::array();
  for (double x : p.v) j.push_back(x);
  return j;
}

Json to_json(const Divergence& d) {
  Json j{{"diverges", d.diverges}};
  j["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
  return j;
}

Json to_json(const Divergence& d, const BoundaryLimit& limit) {
  Json j = to_json(d);
  j["limit"] = to_json(limit.limit);
  j["chart"] = to_json(limit.chart);
  j["collar_at_nmax"] = limit.collar_at_nmax;
  j["error_estimate"] = limit.error_estimate;
  j["foliation"] = to_json(limit.foliation)["weights"];
  if (!limit.trace.empty()) {
    Json steps = Json::array();
    for (const LimitStep& s : limit.trace) {
      Json lengths = Json::array();
      for (Arc x : kHexagonOrder) lengths.push_back(s.hexagon[x]);
      steps.push_back({{"n", s.n}, {"lengths", lengths}, {"normalized", s.normalized}});
    }
    j["trace"] = steps;
  }
  return j;
}

ArcTriple triple_from_json(const Json& j) { return ArcTriple::from_arcs(arcs_from_json<3>(j)); }

FoliationClass foliation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_object())
    throw Error(ErrorKind::Parse, "a foliation is an object with a \"weights\" object");
  std::array<Rational, kArcCount> w;
  for (const auto& [name, value] : j["weights"].items()) {
    if (!value.is_string()) throw Error(ErrorKind::Parse, "weights are rational strings");
    w[arc_index(parse_arc_or_throw(name))] = parse_rational(value.get<std::string>());
  }
  return FoliationClass(w);
}

ChartCoords chart_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("triple") || !j.contains("coords"))
    throw Error(ErrorKind::Parse, "chart coordinates need \"triple\" and \"coords\"");
  const Json& c = j["coords"];
  if (!c.is_array() || c.size() != 3) throw Error(ErrorKind::Parse, "expected three coordinates");
  std::array<Rational, 3> coords;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!c[i].is_string()) throw Error(ErrorKind::Parse, "coordinates are rational strings");
    coords[i] = parse_rational(c[i].get<std::string>());
  }
  return make_chart(triple_from_json(j["triple"]), coords);
}

PMFCellComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("faces"))
    throw Error(ErrorKind::Parse, "a complex needs \"vertices\", \"edges\" and \"faces\"");
  PMFCellComplex out;
  if (!j["vertices"].is_array() || !j["edges"].is_array() || !j["faces"].is_array())
    throw Error(ErrorKind::Parse, "cells must be arrays");
  for (const Json& v : j["vertices"]) out.vertices.push_back(arc_from_json(v));
  for (const Json& e : j["edges"]) out.edges.push_back(arcs_from_json<2>(e));
  for (const Json& f : j["faces"]) out.faces.push_back(arcs_from_json<3>(f));
  return out;
}

HexagonLengths hexagon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sides") || !j.contains("perp"))
    throw Error(ErrorKind::Parse, "a hexagon needs \"sides\" and \"perp\"");
  HexagonLengths h;
  for (std::size_t i = 0; i < 9; ++i) {
    const Json& group = j[i < 6 ? "sides" : "perp"];
    const std::string key(arc_name(kHexagonOrder[i]));
    if (!group.is_object() || !group.contains(key)) throw Error(ErrorKind::Parse, "missing length " + key);
    h[kHexagonOrder[i]] = length_from_json(group[key]);
  }
  return h;
}

FoliationClass parse_weights(std::string_view text) {
  std::array<Rational, kArcCount> w;
  for (const std::string& item : split_commas(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected name=weight, got '" + item + "'");
    const Arc x = parse_arc_or_throw(item.substr(0, eq));
    if (w[arc_index(x)] != 0) throw Error(ErrorKind::Parse, "weight for " + item.substr(0, eq) + " given twice");
    w[arc_index(x)] = parse_rational(item.substr(eq + 1));
  }
  return FoliationClass(w);
}

std::array<Rational, 3> parse_rational_triple(std::string_view text) {
  const auto items = split_commas(text);
  if (items.size() != 3) throw Error(ErrorKind::Parse, "expected three comma separated values");
  return {parse_rational(items[0]), parse_rational(items[1]), parse_rational(items[2])};
}

std::array<double, 3> parse_length_triple(std::string_view text) {
  const auto items = split_commas(text);
  if (items.size() != 3) throw Error(ErrorKind::Parse, "expected three comma separated lengths");
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const char* first = items[i].data();
    const char* last = first + items[i].size();
    const auto [ptr, ec] = std::from_chars(first, last, out[i]);
    if (ec != std::errc() || ptr != last || items[i].empty())
      throw Error(ErrorKind::Parse, "bad length '" + items[i] + "'");
  }
  return out;
}

std::string hexagon_csv(const HexagonLengths& h) {
  std::string head, row;
  for (std::size_t i = 0; i < 9; ++i) {
    if (i) {
      head += ',';
      row += ',';
    }
    head += arc_name(kHexagonOrder[i]);
    row += format_double(h[kHexagonOrder[i]]);
  }
  return head + "\n" + row + "\n";
}

std::string trace_csv(const std::vector<LimitStep>& steps) {
  std::string out = "n";
  for (Arc x : kHexagonOrder) out += "," + std::string(arc_name(x));
  for (Arc x : kSideOrder) out += ",p_" + std::string(arc_name(x));
  out += '\n';
  for (const LimitStep& s : steps) {
    out += std::to_string(s.n);
    for (Arc x : kHexagonOrder) out += "," + format_double(s.hexagon[x]);
    for (double p : s.normalized) out += "," + format_double(p);
    out += '\n';
  }
  return out;
}

std::string pretty(const HexagonLengths& h) {
  std::string out = "sides:";
  for (std::size_t i = 0; i < 6; ++i)
    out += " " + std::string(arc_name(kHexagonOrder[i])) + "=" + pretty_number(h[kHexagonOrder[i]]);
  out += "\nperpendiculars:";
  for (std::size_t i = 6; i < 9; ++i)
    out += " " + std::string(arc_name(kHexagonOrder[i])) + "=" + pretty_number(h[kHexagonOrder[i]]);
  return out + "\n";
}

std::string pretty(const FoliationClass& f) {
  std::string out = "weights:";
  for (Arc x : f.support()) out += " " + std::string(arc_name(x)) + "=" + format_rational(f.weight(x));
  if (f.empty()) out += " (empty)";
  return out + "\n";
}

std::string pretty(const ChartCoords& cc) {
  std::string out = "chart " + cc.triple.to_string() + ":";
  for (std::size_t i = 0; i < 3; ++i)
    out += " " + std::string(arc_name(cc.triple[i])) + "=" + format_rational(cc.coords[i]);
  return out + "\nregion: " + region_name(cc) + "\n";
}

}  // namespace hexatlas
