#pragma once

// Combinatorics of the hexagon: its six boundary edges, the nine homotopy
// classes of essential arcs and the fourteen pairwise disjoint arc triples.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hexatlas {

/// Boundary edges in cyclic order a, C, b, A, c, B (side X is opposite side x).
enum class Edge : std::uint8_t { a = 0, C = 1, b = 2, A = 3, c = 4, B = 5 };

inline constexpr std::array<Edge, 6> kEdges{Edge::a, Edge::C, Edge::b,
                                            Edge::A, Edge::c, Edge::B};

constexpr int edge_index(Edge e) { return static_cast<int>(e); }
Edge edge_at(int index);  // index taken modulo 6
std::string_view edge_name(Edge e);

/// Arc classes. The enumerator order is the canonical order used everywhere
/// (lexicographic on the serialized names, uppercase first).
enum class Arc : std::uint8_t { A, B, C, a, alpha, b, beta, c, gamma };

inline constexpr std::size_t kArcCount = 9;
inline constexpr std::array<Arc, kArcCount> kArcs{Arc::A,    Arc::B, Arc::C,
                                                  Arc::a,    Arc::alpha, Arc::b,
                                                  Arc::beta, Arc::c, Arc::gamma};

constexpr std::size_t arc_index(Arc x) { return static_cast<std::size_t>(x); }

std::string_view arc_name(Arc x);
std::optional<Arc> parse_arc(std::string_view name);
Arc parse_arc_or_throw(std::string_view name);

/// alpha, beta, gamma join a side to its opposite side.
constexpr bool is_spanning(Arc x) {
  return x == Arc::alpha || x == Arc::beta || x == Arc::gamma;
}

struct EdgePair {
  Edge first;
  Edge second;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// The two boundary edges an arc class joins; `first` has the smaller index.
EdgePair edge_pair(Arc x);

/// Geometric intersection number of two arc classes, 0 or 1.
int crosses(Arc x, Arc y);

/// Rotation of the hexagon by two edges: a->b->c->a, A->B->C->A,
/// alpha->beta->gamma->alpha.
Arc rotate_labels(Arc x);
/// Rotation by three edges: a<->A, b<->B, c<->C, spanning arcs fixed.
Arc swap_case(Arc x);
/// The spanning arc with an endpoint on side `corner` (a -> alpha, A -> alpha).
Arc spanning_of(Arc corner);

class ArcTriple {
 public:
  /// Throws Error(InvalidTriple) unless the arcs are distinct and pairwise
  /// disjoint.
  static ArcTriple from_arcs(Arc x, Arc y, Arc z);
  static ArcTriple from_arcs(const std::array<Arc, 3>& arcs);
  /// Comma separated names, e.g. "a,b,gamma".
  static ArcTriple parse(std::string_view text);

  const std::array<Arc, 3>& arcs() const { return arcs_; }
  Arc operator[](std::size_t i) const { return arcs_[i]; }
  int case_number() const { return case_; }
  bool contains(Arc x) const;
  std::optional<std::size_t> position(Arc x) const;
  std::string to_string() const;

  friend bool operator==(const ArcTriple& l, const ArcTriple& r) { return l.arcs_ == r.arcs_; }
  friend auto operator<=>(const ArcTriple& l, const ArcTriple& r) { return l.arcs_ <=> r.arcs_; }

 private:
  ArcTriple(std::array<Arc, 3> arcs, int case_number) : arcs_(arcs), case_(case_number) {}

  std::array<Arc, 3> arcs_;
  int case_;
};

/// The fourteen arc triples in canonical order.
const std::vector<ArcTriple>& compatible_triples();

/// Case 1: three corner arcs. Case 2: a spanning arc with two corner arcs that
/// are not opposite. Case 3: a spanning arc with an opposite corner pair.
/// Throws Error(InvalidTriple) for arcs that do not form an arc triple.
int triple_case(Arc x, Arc y, Arc z);

}  // namespace hexatlas
