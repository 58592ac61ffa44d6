#include "ccdeg/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccdeg/pbw.hpp"

namespace ccdeg {

std::vector<std::vector<char>> Poset::leq_matrix() const {
  int m = size();
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) leq[i][i] = 1;
  for (auto& [a, b] : covers) leq[a][b] = 1;
  // transitive closure
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (leq[i][k])
        for (int j = 0; j < m; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  return leq;
}

Poset poset_from_leq(std::vector<std::string> labels,
                     const std::vector<std::vector<char>>& leq) {
  int m = static_cast<int>(labels.size());
  Poset p;
  p.labels = std::move(labels);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !leq[a][b]) continue;
      if (leq[b][a]) throw std::invalid_argument("relation is not antisymmetric");
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      if (cover) p.covers.push_back({a, b});
    }
  return p;
}

Poset young_poset(int n) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      pairs.push_back({i, j});
      labels.push_back("p" + std::to_string(i) + std::to_string(j));
    }
  int m = static_cast<int>(pairs.size());
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      leq[a][b] = pairs[a].first <= pairs[b].first && pairs[a].second <= pairs[b].second;
  return poset_from_leq(std::move(labels), leq);
}

Poset p2n_poset(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  int c = static_cast<int>(pairs.size());
  // indices: xi copy 0..c-1, psi copy c..2c-1
  std::vector<std::string> labels(2 * c);
  for (int a = 0; a < c; ++a) {
    std::string ij = std::to_string(pairs[a].first) + std::to_string(pairs[a].second);
    labels[a] = "q" + ij;
    labels[c + a] = "p" + ij;
  }
  int m = 2 * c;
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  auto young = [&](int a, int b) {
    return pairs[a].first <= pairs[b].first && pairs[a].second <= pairs[b].second;
  };
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      leq[a][b] = young(a, b);
      leq[c + a][c + b] = young(a, b);
    }
  for (int a = 0; a < c; ++a) {
    auto [i, j] = pairs[a];
    if (i == 1 || j == n) leq[a][c + a] = 1;  // q_ij <= p_ij on the outer chains
  }
  // transitive closure
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (leq[i][k])
        for (int j = 0; j < m; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  for (int i = 0; i < m; ++i) leq[i][i] = 1;
  return poset_from_leq(std::move(labels), leq);
}

Poset pbw_poset(int d, int n) {
  auto ts = pbw_tuples(d, n);
  int m = static_cast<int>(ts.size());
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "p" + pbw_digits(ts[i]);
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) leq[a][b] = pbw_leq(ts[a], ts[b], d, n);
  return poset_from_leq(std::move(labels), leq);
}

namespace {

struct CoverDag {
  std::vector<std::vector<int>> up;  // covers leaving each element
  std::vector<char> is_source;
};

CoverDag dag_of(const Poset& p) {
  CoverDag d;
  d.up.assign(p.size(), {});
  d.is_source.assign(p.size(), 1);
  for (auto& [a, b] : p.covers) {
    d.up[a].push_back(b);
    d.is_source[b] = 0;
  }
  for (auto& v : d.up) std::sort(v.begin(), v.end());
  return d;
}

}  // namespace

Integer count_maximal_chains(const Poset& p) {
  auto dag = dag_of(p);
  int m = p.size();
  std::vector<Integer> ways(m, -1);
  auto rec = [&](auto&& self, int v) -> const Integer& {
    if (ways[v] >= 0) return ways[v];
    if (dag.up[v].empty()) {
      ways[v] = 1;
      return ways[v];
    }
    Integer s = 0;
    for (int w : dag.up[v]) s += self(self, w);
    ways[v] = s;
    return ways[v];
  };
  Integer total = 0;
  for (int v = 0; v < m; ++v)
    if (dag.is_source[v]) total += rec(rec, v);
  return total;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
  auto dag = dag_of(p);
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (dag.up[v].empty()) out.push_back(chain);
    for (int w : dag.up[v]) self(self, w);
    chain.pop_back();
  };
  for (int v = 0; v < p.size(); ++v)
    if (dag.is_source[v]) rec(rec, v);
  return out;
}

std::string poset_to_dot(const Poset& p) {
  std::string s = "digraph hasse {\nrankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + p.labels[i] + "\"];\n";
  for (auto& [a, b] : p.covers)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace ccdeg
