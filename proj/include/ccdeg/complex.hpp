#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccdeg/groebner.hpp"
#include "ccdeg/rational.hpp"

namespace ccdeg {

struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> facets;  // sorted vertex index lists

  bool is_pure() const;
  int dimension() const;  // max facet size - 1
};

// Complex whose minimal non-faces are the supports of the squarefree monomial
// ideal's generators; vertices are all ring variables.
SimplicialComplex stanley_reisner(const MonomialIdeal& m);

// Facet count; throws on non-pure input.
Integer complex_degree(const SimplicialComplex& c);

// Multidegree class in H*(P^m x P^n), keyed the way the classical displays
// read: a facet with a xi-side and b psi-side vertices contributes
// to the key (m-b+1, n-a+1), so the all-xi-chain facet lands on s^m and the
// Grassmannian degree is the trailing t^n coefficient.
std::map<std::pair<int, int>, long> complex_multidegree(const SimplicialComplex& c,
                                                        const std::vector<char>& xi_side,
                                                        int m, int n);

// f_j = number of j-dimensional faces (j+1 vertices), j = 0..dim.
std::vector<Integer> face_vector(const SimplicialComplex& c);

// Ehrhart polynomial L(t) = sum_j f_j * binomial(t-1, j) of the polytope
// triangulated unimodularly by c; coefficients of t^0..t^(dim+... ) ascending.
std::vector<Rational> ehrhart_from_unimodular(const SimplicialComplex& c);

// Facet export: one facet per line, vertex labels comma-separated.
std::string complex_to_text(const SimplicialComplex& c);

// Evaluate a rational-coefficient polynomial (ascending) at integer t.
Rational poly_eval(const std::vector<Rational>& coeffs, const Integer& t);

// Factored pretty form "(1/5!)(t+1)(t+2)(t+3)(9t^2+26t+20)" when dim! * L has
// integer roots at negative integers; falls back to the expanded form.
std::string ehrhart_to_string(const std::vector<Rational>& coeffs);

}  // namespace ccdeg
