#pragma once

#include <string>
#include <vector>

#include "ccdeg/complex.hpp"
#include "ccdeg/grassmann.hpp"
#include "ccdeg/lattice.hpp"

namespace ccdeg {

struct LatticePolytope {
  IntMat vertices;                  // pairwise distinct rows in Z^ambient_dim
  std::vector<std::string> labels;  // parallel to vertices
  std::vector<std::string> coords;  // ambient coordinate names
  int ambient_dim = 0;
  int dim = 0;  // affine dimension

  int index_of(const std::string& label) const;  // -1 if absent
};

// GT(2,n): exponent vectors of the psi-images of the Permuted2n diagonal map
// with the t coordinate dropped; labels are the graph-ring psi names.
LatticePolytope gt_vertices(int n);

// FFLV(d,n): the same construction on the Intro chart; dimension d(n-d).
LatticePolytope fflv_vertices(int d, int n);

// conv(P x {0} u {marked vertices of P} x {1}); the lifted copies take the
// given labels (default: original label + "'").
LatticePolytope cayley_sum(const LatticePolytope& p, const std::vector<int>& marked,
                           std::vector<std::string> lifted_labels = {});

// CGT(2,n) / CFFLV(d,n) for the model's chart: Cayley sum of the psi polytope
// with its star vertices, lifted copies labeled by the matching xi names.
LatticePolytope cayley_polytope(const GraphModel& m);

struct FaceLattice {
  std::vector<Integer> faces_by_dim;             // f_0 .. f_{dim-1}
  std::vector<std::vector<int>> facet_supports;  // sorted vertex index lists
};

// Exact incremental convex hull over the integers; f-vector by closed-set
// enumeration of the vertex-facet incidences. max_seconds 0 = unlimited.
FaceLattice face_lattice(const LatticePolytope& p, double max_seconds = 0.0);

// Facet count of the triangulation after verifying that every facet spans a
// simplex of lattice determinant +-1 in the lattice induced on aff(P);
// complex vertices are matched to polytope vertices by label.
Integer normalized_volume(const LatticePolytope& p, const SimplicialComplex& tri);

// |tP n Z^N| by direct membership testing over the bounding box; oracle for
// small dilations of small polytopes only.
Integer lattice_points(const LatticePolytope& p, int t);

// One vertex per line, space-separated integers.
std::string polytope_to_text(const LatticePolytope& p);

}  // namespace ccdeg
