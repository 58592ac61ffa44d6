#pragma once

#include <string>
#include <vector>

#include "ccdeg/rational.hpp"

namespace ccdeg {

// Finite poset given by labels and an irredundant cover relation.
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)

  int size() const { return static_cast<int>(labels.size()); }
  // Full order relation as a dense matrix: leq[a][b] iff a <= b.
  std::vector<std::vector<char>> leq_matrix() const;
};

// Build from a reflexive partial order matrix; covers = transitive reduction.
Poset poset_from_leq(std::vector<std::string> labels,
                     const std::vector<std::vector<char>>& leq);

// Young's poset on 2-subsets of [n]: p_ij <= p_kl iff i<=k and j<=l.
// Labels "p{i}{j}".
Poset young_poset(int n);

// The poset P_{2,n} on n(n-1) elements: a xi copy of Young's poset below a psi
// copy, with covers q_ij -> p_ij exactly when {i,j} meets {1,n}. Labels
// "q{i}{j}" and "p{i}{j}"; artificial xi elements keep their q-labels.
Poset p2n_poset(int n);

// The PBW poset on PBW tuples (down-set containment in the grid model).
// Labels "p{digits}".
Poset pbw_poset(int d, int n);

// Exact count of maximal chains (paths from minimal to maximal elements in
// the cover DAG).
Integer count_maximal_chains(const Poset& p);

// All maximal chains, each as a sorted list of element indices. Only for
// desk-scale posets.
std::vector<std::vector<int>> maximal_chains(const Poset& p);

// DOT-format Hasse diagram.
std::string poset_to_dot(const Poset& p);

}  // namespace ccdeg
