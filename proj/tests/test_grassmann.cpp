#include <algorithm>
#include <random>
#include <set>

#include "ccdeg/complex.hpp"
#include "ccdeg/grassmann.hpp"
#include "ccdeg/io.hpp"
#include "ccdeg/poset.hpp"
#include "doctest.h"

using namespace ccdeg;

namespace {

std::string tuple_label(const GraphModel::GVar& v) {
  std::string s(v.xi ? "q" : "p");
  for (int a : v.tuple) s += static_cast<char>('0' + a);
  return s;
}

Rational random_point_value(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 7) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("(3,6) full ring listing") {
  auto m = make_graph_model(3, 6, Chart::Intro);
  std::vector<std::string> expected = {
      "t",    "s",    "x14",  "x15",  "x16",  "x24",  "x25",  "x26",  "x34",  "x35",
      "x36",  "p623", "q623", "p563", "p463", "p526", "p163", "q163", "p456", "p523",
      "q523", "p156", "p426", "p453", "p146", "p153", "q153", "p425", "p126", "q126",
      "p145", "p423", "q423", "p125", "q125", "p143", "q143", "p124", "q124", "p123",
      "q123"};
  REQUIRE(m.full_ring->size() == static_cast<int>(expected.size()));
  for (size_t i = 0; i < expected.size(); ++i) CHECK(m.full_ring->name(static_cast<int>(i)) == expected[i]);
  // graph ring is the suffix past t, s and the x block
  REQUIRE(m.graph_ring->size() == 30);
  for (int i = 0; i < m.graph_ring->size(); ++i)
    CHECK(m.graph_ring->name(i) == expected[m.nblock + i]);
  for (int i = 0; i < m.graph_ring->size(); ++i)
    CHECK(tuple_label(m.gvars[i]) == m.graph_ring->name(i));
}

TEST_CASE("minor images on the intro chart (3,6)") {
  auto m = make_graph_model(3, 6, Chart::Intro);
  auto img = [&](const PbwTuple& t, bool xi) {
    return print_polynomial(minor_image(m, t, xi));
  };
  CHECK(img({1, 2, 3}, false) == "t");
  CHECK(img({1, 2, 4}, false) == "t*x34");
  CHECK(img({1, 2, 4}, true) == "s*x34");
  CHECK(img({1, 4, 3}, false) == "t*x24");
  CHECK(img({1, 4, 5}, false) == "t*x24*x35-t*x25*x34");
  CHECK(img({4, 5, 6}, false) ==
        "t*x14*x25*x36-t*x14*x26*x35-t*x15*x24*x36+t*x15*x26*x34+t*x16*x24*x35-t*x16*x25*x34");
}

TEST_CASE("minor images on the permuted chart (2,6)") {
  auto m = make_graph_model(2, 6, Chart::Permuted2n);
  CHECK(print_polynomial(minor_image(m, {1, 6}, false)) == "t");
  CHECK(print_polynomial(minor_image(m, {1, 4}, false)) == "t*x24");
  CHECK(print_polynomial(minor_image(m, {1, 4}, true)) == "s*x24");
  CHECK(print_polynomial(minor_image(m, {2, 5}, false)) == "t*x12*x25-t*x15*x22");
}

TEST_CASE("termorder ring and star sets") {
  auto tr = termorder_2n_ring(6);
  REQUIRE(tr->size() == 24);
  CHECK(tr->name(0) == "p56");
  CHECK(tr->name(1) == "q56");
  CHECK(tr->name(22) == "p12");
  CHECK(tr->name(23) == "q12");
  // the permuted-chart graph ring is the same listing
  auto m = make_graph_model(2, 6, Chart::Permuted2n);
  REQUIRE(m.graph_ring->size() == tr->size());
  for (int i = 0; i < tr->size(); ++i) CHECK(m.graph_ring->name(i) == tr->name(i));
  // xi variables sit next to their psi partner
  for (int i = 0; i < m.graph_ring->size(); ++i)
    if (m.gvars[i].xi) CHECK(m.gvars[i - 1].tuple == m.gvars[i].tuple);

  for (auto [d, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    auto ss = star_set(d, n);
    CHECK(static_cast<int>(ss.size()) == d * (n - d) + 1);
    PbwTuple base;
    for (int i = 1; i <= d; ++i) base.push_back(i);
    CHECK(std::find(ss.begin(), ss.end(), base) != ss.end());
  }
}

TEST_CASE("the lemma31 family generator counts") {
  CHECK(lemma31_count(4) == 12);
  CHECK(lemma31_count(5) == 31);
  CHECK(lemma31_count(6) == 65);
  for (int n = 4; n <= 7; ++n) {
    auto ring = termorder_2n_ring(n);
    auto gens = lemma31_generators(n, ring);
    CHECK(static_cast<long>(gens.size()) == lemma31_count(n));
    long expected = (n - 1L) * (n - 2L) * (n * n + 5L * n + 12L) / 24L;
    CHECK(lemma31_count(n) == expected);
  }
}

TEST_CASE("generators vanish on the parametrization") {
  std::mt19937_64 rng(20250823);
  for (int n = 4; n <= 6; ++n) {
    auto m = make_graph_model(2, n, Chart::Permuted2n);
    auto gens = lemma31_generators(n, m.graph_ring);
    if (n <= 5) {
      auto gi = graph_ideal(m);
      gens.insert(gens.end(), gi.ideal.generators.begin(), gi.ideal.generators.end());
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> full(m.full_ring->size(), Rational(0));
      for (int i = 0; i < m.nblock; ++i) full[i] = random_point_value(rng);
      std::vector<Rational> point(m.graph_ring->size());
      for (int g = 0; g < m.graph_ring->size(); ++g)
        point[g] = minor_image(m, m.gvars[g].tuple, m.gvars[g].xi).evaluate(full);
      for (auto& f : gens) CHECK(f.evaluate(point) == 0);
    }
  }
  // same property on the intro chart used by the general-d pipeline
  auto m = make_graph_model(2, 4, Chart::Intro);
  auto gi = graph_ideal(m);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> full(m.full_ring->size(), Rational(0));
    for (int i = 0; i < m.nblock; ++i) full[i] = random_point_value(rng);
    std::vector<Rational> point(m.graph_ring->size());
    for (int g = 0; g < m.graph_ring->size(); ++g)
      point[g] = minor_image(m, m.gvars[g].tuple, m.gvars[g].xi).evaluate(full);
    for (auto& f : gi.ideal.generators) CHECK(f.evaluate(point) == 0);
  }
}

TEST_CASE("the lemma31 family sets are Groebner bases") {
  for (int n = 4; n <= 6; ++n) {
    auto ring = termorder_2n_ring(n);
    auto order = termorder_2n(n);
    auto gens = lemma31_generators(n, ring);
    CHECK(is_groebner(gens, order).ok);
  }
}

TEST_CASE("the lemma31 family generates the graph ideal") {
  for (int n = 4; n <= 5; ++n) {
    auto m = make_graph_model(2, n, Chart::Permuted2n);
    auto gi = graph_ideal(m);
    Ideal lemma{m.graph_ring, lemma31_generators(n, m.graph_ring)};
    CHECK(ideals_equal(gi.ideal, lemma, m.graph_order));
  }
}

TEST_CASE("graph ideal golden numbers for d=2") {
  struct Row {
    int n;
    long gens;
    int dim;
    long degree;
  };
  for (auto [n, gens, dim, degree] : {Row{4, 12, 6, 9}, Row{5, 31, 8, 27}, Row{6, 65, 10, 83}}) {
    auto m = make_graph_model(2, n, Chart::Permuted2n);
    auto gi = graph_ideal(m);
    REQUIRE(!gi.truncated);
    CHECK(static_cast<long>(gi.gb.elements.size()) == gens);
    auto dd = dim_degree(initial_ideal(gi.gb));
    CHECK(dd.dimension == dim);
    CHECK(dd.dimension == 2 * (n - 2) + 2);
    CHECK(dd.degree == degree);
    auto hist = minimal_generators(gi.ideal, m.graph_order);
    CHECK(hist == std::map<int, long>{{2, gens}});
  }
}

TEST_CASE("G(2,6) multidegree from the initial complex") {
  auto m = make_graph_model(2, 6, Chart::Permuted2n);
  auto gi = graph_ideal(m);
  auto in = initial_ideal(gi.gb);
  REQUIRE(in.squarefree());
  auto sr = stanley_reisner(in);
  REQUIRE(complex_degree(sr) == 83);
  std::vector<char> xi_side(sr.vertices.size(), 0);
  for (size_t i = 0; i < sr.vertices.size(); ++i) xi_side[i] = sr.vertices[i][0] == 'q';
  // 9 xi coordinates (P^8), 15 psi coordinates (P^14)
  auto md = complex_multidegree(sr, xi_side, 8, 14);
  std::map<std::pair<int, int>, long> expected = {
      {{8, 6}, 1},  {{7, 7}, 2},   {{6, 8}, 4},   {{5, 9}, 8},  {{4, 10}, 12},
      {{3, 11}, 14}, {{2, 12}, 14}, {{1, 13}, 14}, {{0, 14}, 14}};
  CHECK(md == expected);
}

TEST_CASE("initial complex facets are the P_{2,5} chains") {
  auto m = make_graph_model(2, 5, Chart::Permuted2n);
  auto gi = graph_ideal(m);
  auto sr = stanley_reisner(initial_ideal(gi.gb));
  std::set<std::set<std::string>> facets;
  for (auto& f : sr.facets) {
    std::set<std::string> s;
    for (int v : f) s.insert(sr.vertices[v]);
    facets.insert(std::move(s));
  }
  auto poset = p2n_poset(5);
  auto chains = maximal_chains(poset);
  REQUIRE(chains.size() == facets.size());
  std::set<std::set<std::string>> relabeled;
  for (auto& c : chains) {
    std::set<std::string> s;
    for (int e : c) {
      std::string lab = poset.labels[e];
      // xi elements off the star (pairs missing 1 and n) have no q variable
      if (lab[0] == 'q' && lab[1] != '1' && lab[2] != '5') lab[0] = 'p';
      s.insert(std::move(lab));
    }
    relabeled.insert(std::move(s));
  }
  CHECK(facets == relabeled);
}

TEST_CASE("cc_degree routes agree") {
  for (int n = 4; n <= 5; ++n) {
    Integer expected = Integer(2) * catalan(n - 1) - 1;
    CHECK(cc_degree(2, n, DegreeMethod::Chains) == expected);
    CHECK(cc_degree(2, n, DegreeMethod::Groebner) == expected);
    CHECK(cc_degree(2, n, DegreeMethod::Toric) == expected);
  }
  for (int n = 6; n <= 12; ++n)
    CHECK(cc_degree(2, n, DegreeMethod::Chains) == Integer(2) * catalan(n - 1) - 1);
  CHECK_THROWS_AS(cc_degree(3, 6, DegreeMethod::Chains), std::invalid_argument);
}

TEST_CASE("psi-only subideal has Grassmannian degree") {
  for (int n = 5; n <= 6; ++n) {
    auto m = make_graph_model(2, n, Chart::Permuted2n);
    Ideal plucker{m.graph_ring, {}};
    for (auto& g : lemma31_generators(n, m.graph_ring)) {
      bool psi_only = true;
      for (auto& t : g.terms())
        for (auto& [v, e] : t.mono.entries())
          if (m.gvars[v].xi) psi_only = false;
      if (psi_only) plucker.generators.push_back(g);
    }
    REQUIRE(!plucker.generators.empty());
    auto gb = buchberger(plucker, m.graph_order);
    CHECK(dim_degree(initial_ideal(gb)).degree == catalan(n - 2));
  }
}

TEST_CASE("random hamiltonians are deterministic and in range") {
  auto a = random_hamiltonian(6, 42);
  auto b = random_hamiltonian(6, 42);
  CHECK(a == b);
  CHECK(a != random_hamiltonian(6, 43));
  for (auto& row : a)
    for (auto& v : row) {
      CHECK(v.get_num() >= -99 * 9);
      CHECK(v.get_num() <= 99 * 9);
      CHECK(v.get_den() >= 1);
      CHECK(v.get_den() <= 9);
    }
}

TEST_CASE("cc_solution_count on (2,4)") {
  CHECK(cc_solution_count(2, 4, random_hamiltonian(6, 1), 101) == 9);
  CHECK(cc_solution_count(2, 4, random_hamiltonian(6, 2), 102) == 9);
  std::vector<std::vector<Rational>> zero(6, std::vector<Rational>(6, Rational(0)));
  CHECK_THROWS_AS(cc_solution_count(2, 4, zero, 7), std::domain_error);
  CHECK_THROWS_AS(cc_solution_count(2, 4, {{Rational(1)}}, 7), std::invalid_argument);
}
