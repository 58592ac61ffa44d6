#pragma once

#include <map>
#include <vector>

#include "ccdeg/monomial.hpp"
#include "ccdeg/rational.hpp"

namespace ccdeg {

// Dense univariate polynomial over Z, coefficient of t^i at index i.
using ZPoly = std::vector<Integer>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
Integer zpoly_eval_one(const ZPoly& a);
// Exact division by (1 - t); caller guarantees divisibility.
ZPoly zpoly_div_one_minus_t(const ZPoly& a);

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/M, M a monomial
// ideal, computed by pivot splitting N(M) = N(M + <v>) + t * N(M : v).
ZPoly hilbert_numerator(std::vector<Monomial> gens);

// Bigraded analogue: variables carry bidegree (1,0) or (0,1) as flagged by
// second_block, and N(s,t)/((1-s)^p (1-t)^q) is the Hilbert series of R/M.
using BiPoly = std::map<std::pair<int, int>, Integer>;
BiPoly bigraded_numerator(std::vector<Monomial> gens, const std::vector<int>& second_block);

struct DimDegree {
  int dimension;
  Integer degree;
};

// Krull dimension and degree of R/M for a monomial ideal M in nvars variables.
DimDegree monomial_dim_degree(const std::vector<Monomial>& gens, int nvars);

// Drop generators divisible by another generator.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

}  // namespace ccdeg
