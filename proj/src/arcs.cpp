#include "hexatlas/arcs.hpp"

#include <algorithm>

#include "hexatlas/error.hpp"

namespace hexatlas {

namespace {

constexpr std::array<std::string_view, kArcCount> kArcNames{
    "A", "B", "C", "a", "alpha", "b", "beta", "c", "gamma"};

Edge side_edge(Arc corner) {
  switch (corner) {
    case Arc::a: return Edge::a;
    case Arc::b: return Edge::b;
    case Arc::c: return Edge::c;
    case Arc::A: return Edge::A;
    case Arc::B: return Edge::B;
    case Arc::C: return Edge::C;
    default: break;
  }
  throw Error(ErrorKind::InternalConsistency, "not a corner arc");
}

EdgePair ordered(Edge x, Edge y) {
  return edge_index(x) < edge_index(y) ? EdgePair{x, y} : EdgePair{y, x};
}

// True iff position p lies strictly inside the cyclic interval (lo, hi) with
// lo < hi as plain integers.
bool strictly_between(int lo, int hi, int p) { return lo < p && p < hi; }

std::vector<ArcTriple> enumerate_triples() {
  std::vector<ArcTriple> out;
  for (std::size_t i = 0; i < kArcCount; ++i)
    for (std::size_t j = i + 1; j < kArcCount; ++j)
      for (std::size_t k = j + 1; k < kArcCount; ++k) {
        const Arc x = kArcs[i], y = kArcs[j], z = kArcs[k];
        if (crosses(x, y) || crosses(x, z) || crosses(y, z)) continue;
        out.push_back(ArcTriple::from_arcs(x, y, z));
      }
  return out;
}

}  // namespace

Edge edge_at(int index) { return kEdges[static_cast<std::size_t>(((index % 6) + 6) % 6)]; }

std::string_view edge_name(Edge e) {
  static constexpr std::array<std::string_view, 6> names{"a", "C", "b", "A", "c", "B"};
  return names[static_cast<std::size_t>(edge_index(e))];
}

std::string_view arc_name(Arc x) { return kArcNames[arc_index(x)]; }

std::optional<Arc> parse_arc(std::string_view name) {
  for (Arc x : kArcs)
    if (arc_name(x) == name) return x;
  return std::nullopt;
}

Arc parse_arc_or_throw(std::string_view name) {
  if (auto x = parse_arc(name)) return *x;
  throw Error(ErrorKind::Parse, "unknown arc name '" + std::string(name) + "'");
}

EdgePair edge_pair(Arc x) {
  switch (x) {
    case Arc::alpha: return ordered(Edge::a, Edge::A);
    case Arc::beta: return ordered(Edge::b, Edge::B);
    case Arc::gamma: return ordered(Edge::c, Edge::C);
    default: {
      const int i = edge_index(side_edge(x));
      return ordered(edge_at(i - 1), edge_at(i + 1));
    }
  }
}

int crosses(Arc x, Arc y) {
  const EdgePair p = edge_pair(x);
  const EdgePair q = edge_pair(y);
  const int p0 = edge_index(p.first), p1 = edge_index(p.second);
  const int q0 = edge_index(q.first), q1 = edge_index(q.second);
  // Chords sharing an edge can always be pulled apart along that edge.
  if (p0 == q0 || p0 == q1 || p1 == q0 || p1 == q1) return 0;
  return strictly_between(p0, p1, q0) != strictly_between(p0, p1, q1) ? 1 : 0;
}

Arc rotate_labels(Arc x) {
  switch (x) {
    case Arc::a: return Arc::b;
    case Arc::b: return Arc::c;
    case Arc::c: return Arc::a;
    case Arc::A: return Arc::B;
    case Arc::B: return Arc::C;
    case Arc::C: return Arc::A;
    case Arc::alpha: return Arc::beta;
    case Arc::beta: return Arc::gamma;
    case Arc::gamma: return Arc::alpha;
  }
  return x;
}

Arc swap_case(Arc x) {
  switch (x) {
    case Arc::a: return Arc::A;
    case Arc::b: return Arc::B;
    case Arc::c: return Arc::C;
    case Arc::A: return Arc::a;
    case Arc::B: return Arc::b;
    case Arc::C: return Arc::c;
    default: return x;
  }
}

Arc spanning_of(Arc corner) {
  switch (corner) {
    case Arc::a:
    case Arc::A: return Arc::alpha;
    case Arc::b:
    case Arc::B: return Arc::beta;
    case Arc::c:
    case Arc::C: return Arc::gamma;
    default: break;
  }
  throw Error(ErrorKind::InvalidTriple, "spanning_of expects a corner arc");
}

int triple_case(Arc x, Arc y, Arc z) {
  if (x == y || y == z || x == z)
    throw Error(ErrorKind::InvalidTriple, "arc triple needs three distinct arcs");
  if (crosses(x, y) || crosses(y, z) || crosses(x, z))
    throw Error(ErrorKind::InvalidTriple, std::string("arcs ") + std::string(arc_name(x)) +
                                              "," + std::string(arc_name(y)) + "," +
                                              std::string(arc_name(z)) + " are not disjoint");
  std::array<Arc, 3> arcs{x, y, z};
  const auto spanning = std::count_if(arcs.begin(), arcs.end(), is_spanning);
  if (spanning == 0) return 1;
  // Spanning arcs pairwise cross, so exactly one is present here.
  std::array<Arc, 2> corners{};
  std::size_t n = 0;
  for (Arc w : arcs)
    if (!is_spanning(w)) corners[n++] = w;
  return swap_case(corners[0]) == corners[1] ? 3 : 2;
}

ArcTriple ArcTriple::from_arcs(Arc x, Arc y, Arc z) {
  const int kind = triple_case(x, y, z);
  std::array<Arc, 3> arcs{x, y, z};
  std::sort(arcs.begin(), arcs.end());
  return ArcTriple(arcs, kind);
}

ArcTriple ArcTriple::from_arcs(const std::array<Arc, 3>& arcs) {
  return from_arcs(arcs[0], arcs[1], arcs[2]);
}

ArcTriple ArcTriple::parse(std::string_view text) {
  std::array<Arc, 3> arcs{};
  std::size_t count = 0;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (count == 3) throw Error(ErrorKind::Parse, "arc triple has more than three names");
    arcs[count++] = parse_arc_or_throw(token);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != 3) throw Error(ErrorKind::Parse, "arc triple needs exactly three names");
  return from_arcs(arcs);
}

bool ArcTriple::contains(Arc x) const { return position(x).has_value(); }

std::optional<std::size_t> ArcTriple::position(Arc x) const {
  for (std::size_t i = 0; i < 3; ++i)
    if (arcs_[i] == x) return i;
  return std::nullopt;
}

std::string ArcTriple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += arc_name(arcs_[i]);
  }
  return out;
}

const std::vector<ArcTriple>& compatible_triples() {
  static const std::vector<ArcTriple> triples = enumerate_triples();
  return triples;
}

}  // namespace hexatlas
