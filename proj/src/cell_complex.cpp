#include "hexatlas/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hexatlas {

namespace {

std::array<Arc, 2> sorted_pair(Arc x, Arc y) { return x < y ? std::array{x, y} : std::array{y, x}; }

bool contains(const std::array<Arc, 3>& face, Arc x) {
  return std::find(face.begin(), face.end(), x) != face.end();
}

// Connected components of an undirected graph given as adjacency sets.
std::size_t component_count(const std::map<Arc, std::set<Arc>>& graph) {
  std::set<Arc> seen;
  std::size_t components = 0;
  for (const auto& [start, _] : graph) {
    if (seen.count(start)) continue;
    ++components;
    std::vector<Arc> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const Arc v = stack.back();
      stack.pop_back();
      for (Arc w : graph.at(v))
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return components;
}

}  // namespace

std::vector<std::vector<std::size_t>> PMFCellComplex::edge_faces() const {
  std::vector<std::vector<std::size_t>> out(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (contains(faces[f], edges[e][0]) && contains(faces[f], edges[e][1])) out[e].push_back(f);
  return out;
}

PMFCellComplex pmf_cell_complex() {
  PMFCellComplex c;
  c.vertices.assign(kArcs.begin(), kArcs.end());
  for (std::size_t i = 0; i < kArcCount; ++i)
    for (std::size_t j = i + 1; j < kArcCount; ++j)
      if (!crosses(kArcs[i], kArcs[j])) c.edges.push_back({kArcs[i], kArcs[j]});
  for (const ArcTriple& t : compatible_triples()) c.faces.push_back(t.arcs());
  return c;
}

ComplexReport check_complex(const PMFCellComplex& complex) {
  ComplexReport r;
  r.vertex_count = complex.vertices.size();
  r.edge_count = complex.edges.size();
  r.face_count = complex.faces.size();
  r.euler_characteristic = static_cast<long>(r.vertex_count) - static_cast<long>(r.edge_count) +
                           static_cast<long>(r.face_count);
  if (r.euler_characteristic != 2)
    r.failures.push_back("euler characteristic is " + std::to_string(r.euler_characteristic));

  r.cells_are_disjoint_arcs = true;
  for (const auto& e : complex.edges)
    if (e[0] == e[1] || crosses(e[0], e[1])) r.cells_are_disjoint_arcs = false;
  for (const auto& f : complex.faces)
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2] || crosses(f[0], f[1]) ||
        crosses(f[1], f[2]) || crosses(f[0], f[2]))
      r.cells_are_disjoint_arcs = false;
  if (!r.cells_are_disjoint_arcs) r.failures.push_back("a cell contains crossing arcs");

  std::set<std::array<Arc, 2>> edge_set;
  for (const auto& e : complex.edges) edge_set.insert(sorted_pair(e[0], e[1]));
  if (edge_set.size() != complex.edges.size()) r.failures.push_back("duplicate edges");
  r.face_boundaries_listed = true;
  for (const auto& f : complex.faces)
    for (int i = 0; i < 3; ++i)
      if (!edge_set.count(sorted_pair(f[i], f[(i + 1) % 3]))) r.face_boundaries_listed = false;
  if (!r.face_boundaries_listed) r.failures.push_back("a face side is missing from the edge list");

  const auto incidence = complex.edge_faces();
  r.edges_in_two_faces = std::all_of(incidence.begin(), incidence.end(),
                                     [](const auto& fs) { return fs.size() == 2; });
  if (!r.edges_in_two_faces) r.failures.push_back("an edge does not lie in exactly two faces");

  // Link of v: the edges opposite v in the faces around it. On a closed
  // surface it is one cycle.
  r.vertex_links_are_cycles = true;
  for (Arc v : complex.vertices) {
    std::map<Arc, std::set<Arc>> link;
    for (const auto& f : complex.faces) {
      if (!contains(f, v)) continue;
      std::vector<Arc> rest;
      for (Arc x : f)
        if (x != v) rest.push_back(x);
      link[rest[0]].insert(rest[1]);
      link[rest[1]].insert(rest[0]);
    }
    const bool degrees_two =
        !link.empty() && std::all_of(link.begin(), link.end(),
                                     [](const auto& kv) { return kv.second.size() == 2; });
    if (!degrees_two || component_count(link) != 1) {
      r.vertex_links_are_cycles = false;
      r.failures.push_back("link of vertex " + std::string(arc_name(v)) + " is not a cycle");
    }
  }

  std::map<Arc, std::set<Arc>> graph;
  for (Arc v : complex.vertices) graph[v];
  for (const auto& e : complex.edges) {
    graph[e[0]].insert(e[1]);
    graph[e[1]].insert(e[0]);
  }
  r.connected = component_count(graph) == 1;
  if (!r.connected) r.failures.push_back("complex is not connected");
  return r;
}

}  // namespace hexatlas
