#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ccdeg/hilbert.hpp"
#include "ccdeg/polynomial.hpp"

namespace ccdeg {

struct Ideal {
  VarTablePtr ring;
  std::vector<Polynomial> generators;
};

// Minimal generating set of a monomial ideal.
struct MonomialIdeal {
  VarTablePtr ring;
  std::vector<Monomial> generators;

  bool squarefree() const {
    for (auto& g : generators)
      if (!g.squarefree()) return false;
    return true;
  }
  // Histogram degree -> count of the minimal generators.
  std::map<int, long> degree_histogram() const {
    std::map<int, long> h;
    for (auto& g : generators) h[g.degree()]++;
    return h;
  }
};

struct GroebnerBasis {
  VarTablePtr ring;
  std::vector<Polynomial> elements;
  OrderPtr order;
  bool reduced = false;
  bool truncated = false;
};

struct BuchbergerLimits {
  int degree_bound = -1;    // drop S-pairs whose lcm degree exceeds this
  long max_basis = -1;      // stop (truncated) past this many basis elements
  double max_seconds = -1;  // wall-clock budget
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Buchberger with sugar selection and Gebauer-Moller pair elimination.
// Output is the reduced basis (unique) unless truncated.
GroebnerBasis buchberger(const Ideal& ideal, OrderPtr order,
                         const BuchbergerLimits& limits = {});

// Exact remainder: no term of the result is divisible by a basis leading
// monomial, and f - result lies in the ideal generated by the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const OrderPtr& order);

struct GroebnerCertificate {
  bool ok = true;
  // Index pairs whose S-polynomial fails to reduce to zero.
  std::vector<std::pair<int, int>> failing_pairs;
};

GroebnerCertificate is_groebner(const std::vector<Polynomial>& gens, const OrderPtr& order);

struct EliminationResult {
  Ideal ideal;            // generators free of the block (a reduced GB of the
                          // elimination ideal under the inner order)
  GroebnerBasis full_gb;  // reduced GB of the input under the elimination order
  bool truncated = false;
};

// I ∩ k[vars outside block] via a block-elimination Groebner basis. The inner
// order must be an order on the full ring; it induces the order on the
// subring.
EliminationResult eliminate(const Ideal& ideal, const std::vector<int>& block,
                            OrderPtr inner, const BuchbergerLimits& limits = {});

// I : v^infinity by the Rabinowitsch trick (fresh inverse variable, then
// elimination).
Ideal saturate(const Ideal& ideal, int var_rank, const BuchbergerLimits& limits = {});

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

inline DimDegree dim_degree(const MonomialIdeal& m) {
  return monomial_dim_degree(m.generators, m.ring->size());
}

// Number of standard monomials of in(I); nullopt when infinite.
std::optional<Integer> quotient_vector_space_dim(const Ideal& ideal, OrderPtr order,
                                                 const BuchbergerLimits& limits = {});
std::optional<Integer> quotient_vector_space_dim(const GroebnerBasis& gb);

// Histogram degree -> number of minimal generators, for homogeneous ideals.
std::map<int, long> minimal_generators(const Ideal& ideal, OrderPtr order = nullptr,
                                       const BuchbergerLimits& limits = {});

// Mutual containment via normal forms against the reduced bases.
bool ideals_equal(const Ideal& a, const Ideal& b, OrderPtr order,
                  const BuchbergerLimits& limits = {});

}  // namespace ccdeg
