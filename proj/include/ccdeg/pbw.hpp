#pragma once

#include <string>
#include <vector>

#include "ccdeg/rational.hpp"

namespace ccdeg {

// PBW tuples: canonical representatives of d-subsets of [n]. Entries are
// distinct, entries <= d sit at their own position, entries > d increase
// left to right.
using PbwTuple = std::vector<int>;

PbwTuple pbw_from_set(std::vector<int> subset, int d);

// All C(n,d) tuples, in ascending lex order of the underlying sorted subsets.
std::vector<PbwTuple> pbw_tuples(int d, int n);

// Digit string used in variable names: "145"; entries >= 10 are separated by
// underscores to stay unambiguous.
std::string pbw_digits(const PbwTuple& t);

// At most one entry exceeding d: these tuples index the xi-coordinates.
bool pbw_in_star(const PbwTuple& t, int d);

// The PBW poset realized through antichains in the d x (n-d) grid:
// sigma maps to {(i, sigma_i) : sigma_i > d}, cells ordered by
// (i,j) <= (i',j') iff i >= i' and j <= j'; tuples compare by down-set
// containment.
bool pbw_leq(const PbwTuple& a, const PbwTuple& b, int d, int n);
int pbw_downset_size(const PbwTuple& t, int d, int n);

// Variable listing for the graph ring: down-set size descending, ties by
// ascending lex of the tuple digits.
std::vector<PbwTuple> pbw_listing_desc(int d, int n);

}  // namespace ccdeg
