#pragma once

#include <string>
#include <vector>

#include "ccdeg/grassmann.hpp"
#include "ccdeg/groebner.hpp"

namespace ccdeg {

// Variable-to-monomial assignment from the graph ring into the ambient
// (t, s, x) block of the full ring.
struct MonomialMap {
  VarTablePtr domain;  // graph ring
  VarTablePtr target;  // full ring (images only use the block ranks)
  std::vector<Monomial> images;  // indexed by domain rank
};

// Diagonal leading terms of the chart minors: psi_sigma -> t * prod over
// positions i of the chart entry at (i, sigma_i) (identity columns
// contribute 1); xi images use s instead of t.
MonomialMap diagonal_map(const GraphModel& m);

struct BinomialIdeal {
  VarTablePtr ring;
  std::vector<Polynomial> generators;

  // Checks every generator is a difference of two monomials (coefficients
  // +1/-1 up to sign).
  static BinomialIdeal from(Ideal i);
  Ideal as_ideal() const { return {ring, generators}; }
};

enum class ToricRoute { Elimination, Lattice };

// Kernel of the monomial map; output is the reduced Groebner basis under the
// graph order, so the two routes produce identical generator lists.
BinomialIdeal toric_ideal(const GraphModel& m, const MonomialMap& map, ToricRoute route,
                          const BuchbergerLimits& limits = {});

// The six 2-term families of the d=2 toric basis; over termorder_2n_ring(n)
// or any ring with the same variable names.
BinomialIdeal prop35_generators(int n, const VarTablePtr& ring);

struct LiftCertificate {
  Polynomial binomial;  // toric reduced-GB element
  Polynomial lift;      // graph-ideal element with the same leading term
};

struct KhovanskiiReport {
  int d = 0, n = 0;
  bool initial_equal = false;
  bool squarefree_graph = false;
  bool squarefree_toric = false;
  bool lifts_complete = false;
  std::vector<LiftCertificate> lifts;

  bool ok() const {
    return initial_equal && squarefree_graph && squarefree_toric && lifts_complete;
  }
};

// Compares in(graph ideal) and in(toric ideal) under the graph order and
// produces a lift certificate for every toric binomial.
KhovanskiiReport khovanskii_check(const GraphModel& m, const BuchbergerLimits& limits = {});

std::string khovanskii_report_json(const KhovanskiiReport& r, bool pretty = false);

}  // namespace ccdeg
