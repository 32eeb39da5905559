#pragma once

// The triangulation of the sphere of projective measured foliations: one
// vertex per arc class, one edge per disjoint pair, one face per arc triple.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hexatlas/arcs.hpp"

namespace hexatlas {

struct PMFCellComplex {
  std::vector<Arc> vertices;
  std::vector<std::array<Arc, 2>> edges;
  std::vector<std::array<Arc, 3>> faces;

  /// For each edge, the indices of the faces containing it.
  std::vector<std::vector<std::size_t>> edge_faces() const;
  friend bool operator==(const PMFCellComplex&, const PMFCellComplex&) = default;
};

PMFCellComplex pmf_cell_complex();

struct ComplexReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
  long euler_characteristic = 0;
  bool edges_in_two_faces = false;
  bool vertex_links_are_cycles = false;
  bool connected = false;
  bool cells_are_disjoint_arcs = false;  // every edge and face is a set of non-crossing arcs
  bool face_boundaries_listed = false;   // every side of every face is a listed edge
  std::vector<std::string> failures;

  bool closed_sphere() const { return failures.empty(); }
};

/// Checks the closed-surface conditions on an arbitrary (possibly tampered)
/// complex and reports what fails.
ComplexReport check_complex(const PMFCellComplex& complex);

}  // namespace hexatlas
