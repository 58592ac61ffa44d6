#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccdeg/groebner.hpp"
#include "ccdeg/pbw.hpp"

namespace ccdeg {

// Chart of the birational parametrization. Intro: [I_d | X] with columns
// d+1..n free, any d. Permuted2n: the d=2 chart with identity columns moved
// to positions 1 and n.
enum class Chart { Intro, Permuted2n };

struct GraphModel {
  int d = 0, n = 0;
  Chart chart = Chart::Intro;

  // full_ring: t, s, x-block first (largest variables), then the graph
  // variables in descending order; graph_ring: the same suffix on its own.
  VarTablePtr full_ring;
  VarTablePtr graph_ring;
  int nblock = 0;
  std::vector<int> block;  // ranks 0..nblock-1 of full_ring

  OrderPtr inner;        // grevlex on the full listing
  OrderPtr elim_order;   // block elimination over the x/t/s block
  OrderPtr graph_order;  // grevlex on the graph listing

  struct GVar {
    PbwTuple tuple;
    bool xi = false;
  };
  std::vector<GVar> gvars;  // indexed by graph_ring rank

  int t_rank = 0, s_rank = 1;
  std::map<std::pair<int, int>, int> x_rank;  // matrix position -> full ring rank

  int graph_rank_of(const PbwTuple& t, bool xi) const;  // -1 if absent
  int full_rank_of(const PbwTuple& t, bool xi) const;
  // Monomial/polynomial translation between the two rings (graph vars only).
  Polynomial to_graph_ring(const Polynomial& f) const;
  Polynomial to_full_ring(const Polynomial& f) const;
};

GraphModel make_graph_model(int d, int n, Chart chart);

// StarSet: tuples with at most one entry > d, i.e. the xi-indexed tuples.
std::vector<PbwTuple> star_set(int d, int n);

// t (or s) times the maximal minor of the chart matrix, columns taken in
// PBW-tuple order; lives in full_ring.
Polynomial minor_image(const GraphModel& m, const PbwTuple& sigma, bool xi);

// The defining relations v - image(v) for every graph variable, in full_ring.
Ideal graph_relations(const GraphModel& m);

struct GraphIdealResult {
  Ideal ideal;       // minimal-ish generators in graph_ring (reduced GB)
  GroebnerBasis gb;  // reduced GB under graph_order
  bool truncated = false;
};

// Prime ideal of the graph variety, by block elimination.
GraphIdealResult graph_ideal(const GraphModel& m, const BuchbergerLimits& limits = {});

// The d=2 coordinate ring with variables listed in descending termorder
// sequence (the printed ascending chain, reversed), names p{ij}/q{ij}.
VarTablePtr termorder_2n_ring(int n);
// Reverse lexicographic order induced by the printed variable chain; apply to
// polynomials over termorder_2n_ring(n).
OrderPtr termorder_2n(int n);

// Graph-ring order for general (d, n): revlex over the descending PBW
// listing (identical to the order carried by make_graph_model).
OrderPtr pbw_order(int d, int n);

// The six explicit quadric families generating the d=2 graph ideal.
std::vector<Polynomial> lemma31_generators(int n, const VarTablePtr& graph_ring);
long lemma31_count(int n);  // (n-1)(n-2)(n^2+5n+12)/24

Integer catalan(int k);

enum class DegreeMethod { Chains, Groebner, Toric };

Integer cc_degree(int d, int n, DegreeMethod method, const BuchbergerLimits& limits = {});

// Entries uniform in {-99..99}/{1..9} from a fixed-seed generator.
std::vector<std::vector<Rational>> random_hamiltonian(int size, uint64_t seed);

// Solution count (with multiplicity) of the CC equations for Hamiltonian H:
// graph ideal + 2x2 minors of [(H psi)*, xi] + two random affine sections.
// Throws std::domain_error when the system is not zero-dimensional.
Integer cc_solution_count(int d, int n, const std::vector<std::vector<Rational>>& h,
                          uint64_t seed, const BuchbergerLimits& limits = {});

}  // namespace ccdeg
