#include "ccdeg/toric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ccdeg/io.hpp"
#include "ccdeg/lattice.hpp"
#include "json.hpp"

namespace ccdeg {

MonomialMap diagonal_map(const GraphModel& m) {
  MonomialMap map;
  map.domain = m.graph_ring;
  map.target = m.full_ring;
  for (auto& g : m.gvars) {
    std::vector<Monomial::Entry> es;
    es.push_back({g.xi ? m.s_rank : m.t_rank, 1});
    const PbwTuple& t = g.tuple;
    if (m.chart == Chart::Intro) {
      for (size_t i = 0; i < t.size(); ++i)
        if (t[i] > m.d) es.push_back({m.x_rank.at({static_cast<int>(i) + 1, t[i]}), 1});
    } else {
      // 2x2 diagonal through columns i < j of the permuted chart
      int i = t[0], j = t[1];
      if (i != 1) es.push_back({m.x_rank.at({1, i}), 1});
      if (j != m.n) es.push_back({m.x_rank.at({2, j}), 1});
    }
    map.images.push_back(Monomial(std::move(es)));
  }
  return map;
}

BinomialIdeal BinomialIdeal::from(Ideal i) {
  for (auto& g : i.generators) {
    bool ok = g.term_count() == 2;
    if (ok) {
      Rational a = g.terms()[0].coeff, b = g.terms()[1].coeff;
      ok = (a == 1 || a == -1) && (b == -a);
    }
    if (!ok) throw std::invalid_argument("generator is not a binomial: " + print_polynomial(g));
  }
  return {std::move(i.ring), std::move(i.generators)};
}

namespace {

// Largest power of the variable dividing every term, removed.
Polynomial strip_variable(const Polynomial& f, int rank) {
  int k = -1;
  for (auto& t : f.terms()) {
    int e = t.mono.exponent(rank);
    k = (k < 0) ? e : std::min(k, e);
    if (k == 0) return f;
  }
  Monomial div = Monomial::variable(rank, k);
  std::vector<Term> out;
  for (auto& t : f.terms()) out.push_back({t.mono / div, t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(out));
}

// Saturation of a homogeneous ideal at one variable: grevlex with that
// variable smallest, then divide each basis element by the variable.
Ideal saturate_homogeneous(const Ideal& ideal, int rank, const BuchbergerLimits& limits) {
  int nv = ideal.ring->size();
  std::vector<int> perm;
  for (int r = 0; r < nv; ++r)
    if (r != rank) perm.push_back(r);
  perm.push_back(rank);
  auto gb = buchberger(ideal, MonomialOrder::grevlex(std::move(perm)), limits);
  if (gb.truncated) throw BudgetExceeded("saturation basis truncated");
  Ideal out{ideal.ring, {}};
  for (auto& g : gb.elements) out.generators.push_back(strip_variable(g, rank));
  return out;
}

Ideal toric_by_elimination(const GraphModel& m, const MonomialMap& map,
                           const BuchbergerLimits& limits) {
  Ideal rel{m.full_ring, {}};
  for (size_t g = 0; g < map.images.size(); ++g) {
    Polynomial v = Polynomial::variable(m.full_ring, m.nblock + static_cast<int>(g));
    rel.generators.push_back(v - Polynomial::term(m.full_ring, map.images[g], 1));
  }
  auto elim = eliminate(rel, m.block, m.inner, limits);
  if (elim.truncated) throw BudgetExceeded("toric elimination truncated");
  Ideal out{m.graph_ring, {}};
  for (auto& g : elim.ideal.generators) out.generators.push_back(m.to_graph_ring(g));
  return out;
}

Ideal toric_by_lattice(const GraphModel& m, const MonomialMap& map,
                       const BuchbergerLimits& limits) {
  int ng = static_cast<int>(map.images.size());
  // rows: one per ambient coordinate, columns indexed by graph variables
  IntMat rows(m.nblock, IntVec(ng, 0));
  for (int g = 0; g < ng; ++g)
    for (auto& [v, e] : map.images[g].entries()) rows[v][g] = e;
  IntMat kernel = kernel_basis(rows, ng);

  Ideal ideal{m.graph_ring, {}};
  for (auto& u : kernel) {
    std::vector<Monomial::Entry> pos, neg;
    for (int g = 0; g < ng; ++g) {
      if (u[g] > 0) pos.push_back({g, static_cast<int>(u[g].get_si())});
      if (u[g] < 0) neg.push_back({g, static_cast<int>(-u[g].get_si())});
    }
    Polynomial b(m.graph_ring);
    b.add_term(Monomial(std::move(pos)), 1);
    b.add_term(Monomial(std::move(neg)), -1);
    ideal.generators.push_back(std::move(b));
  }
  // The kernel lattice rows are in the t- and s-kernels, so the binomials are
  // homogeneous and the fast grevlex saturation applies, variable by variable.
  for (int r = 0; r < ng; ++r) ideal = saturate_homogeneous(ideal, r, limits);
  return ideal;
}

}  // namespace

BinomialIdeal toric_ideal(const GraphModel& m, const MonomialMap& map, ToricRoute route,
                          const BuchbergerLimits& limits) {
  Ideal raw = (route == ToricRoute::Elimination) ? toric_by_elimination(m, map, limits)
                                                 : toric_by_lattice(m, map, limits);
  auto gb = buchberger(raw, m.graph_order, limits);
  if (gb.truncated) throw BudgetExceeded("toric basis truncated");
  return BinomialIdeal::from({m.graph_ring, std::move(gb.elements)});
}

BinomialIdeal prop35_generators(int n, const VarTablePtr& ring) {
  auto var = [&](char c, int i, int j) {
    return Polynomial::variable(ring, ring->rank(c + pbw_digits({i, j})));
  };
  auto psi = [&](int i, int j) { return var('p', i, j); };
  auto xi = [&](int i, int j) { return var('q', i, j); };
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          out.push_back(psi(i, l) * psi(j, k) - psi(i, k) * psi(j, l));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(psi(i, n) * xi(j, n) - psi(j, n) * xi(i, n));
  for (int j = 2; j < n; ++j)
    for (int k = 2; k < n; ++k) out.push_back(psi(1, j) * xi(k, n) - psi(k, n) * xi(1, j));
  for (int k = 2; k < n; ++k)
    for (int l = k + 1; l <= n; ++l) out.push_back(psi(1, k) * xi(1, l) - psi(1, l) * xi(1, k));
  for (int j = 2; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (int l = k + 1; l < n; ++l) out.push_back(xi(1, l) * psi(j, k) - xi(1, k) * psi(j, l));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back(xi(i, n) * psi(j, k) - xi(j, n) * psi(i, k));
  return BinomialIdeal::from({ring, std::move(out)});
}

KhovanskiiReport khovanskii_check(const GraphModel& m, const BuchbergerLimits& limits) {
  KhovanskiiReport r;
  r.d = m.d;
  r.n = m.n;
  auto gi = graph_ideal(m, limits);
  if (gi.truncated) throw BudgetExceeded("graph ideal truncated");
  auto ti = toric_ideal(m, diagonal_map(m), ToricRoute::Elimination, limits);
  GroebnerBasis tgb{m.graph_ring, ti.generators, m.graph_order, true, false};

  auto in_graph = initial_ideal(gi.gb);
  auto in_toric = initial_ideal(tgb);
  auto sorted = [](std::vector<Monomial> v) {
    std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
      return Monomial::canonical_cmp(a, b) > 0;
    });
    return v;
  };
  r.initial_equal = sorted(in_graph.generators) == sorted(in_toric.generators);
  r.squarefree_graph = in_graph.squarefree();
  r.squarefree_toric = in_toric.squarefree();

  r.lifts_complete = true;
  for (auto& b : ti.generators) {
    Monomial lead = b.leading_monomial(*m.graph_order);
    const Polynomial* lift = nullptr;
    for (auto& g : gi.gb.elements)
      if (g.leading_monomial(*m.graph_order) == lead) {
        lift = &g;
        break;
      }
    if (!lift) {
      r.lifts_complete = false;
      continue;
    }
    // certify: the lift really sits in the graph ideal (it is a reduced-GB
    // element) and the tail difference reduces to zero modulo the graph GB
    if (!normal_form(*lift, gi.gb.elements, m.graph_order).is_zero()) {
      r.lifts_complete = false;
      continue;
    }
    r.lifts.push_back({b, *lift});
  }
  return r;
}

std::string khovanskii_report_json(const KhovanskiiReport& r, bool pretty) {
  nlohmann::json j;
  j["schema"] = "ccdeg/khovanskii-report/v1";
  j["d"] = r.d;
  j["n"] = r.n;
  j["initial_equal"] = r.initial_equal;
  j["squarefree_graph"] = r.squarefree_graph;
  j["squarefree_toric"] = r.squarefree_toric;
  j["lifts"] = nlohmann::json::array();
  for (auto& l : r.lifts)
    j["lifts"].push_back({{"binomial", print_polynomial(l.binomial)},
                          {"lift", print_polynomial(l.lift)}});
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace ccdeg
