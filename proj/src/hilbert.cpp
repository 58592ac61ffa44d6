#include "ccdeg/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ccdeg {

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Integer zpoly_eval_one(const ZPoly& a) {
  Integer s = 0;
  for (auto& c : a) s += c;
  return s;
}

ZPoly zpoly_div_one_minus_t(const ZPoly& a) {
  // a(t) = (1 - t) q(t): q_0 = a_0, q_i = a_i + q_{i-1}.
  if (a.empty()) return {};
  ZPoly q(a.size() - 1, Integer(0));
  Integer carry = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  if (carry + a.back() != 0) throw std::logic_error("zpoly not divisible by (1-t)");
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return Monomial::canonical_cmp(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (auto& kept : out) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

static ZPoly one_minus_tk(int k) {
  ZPoly p(k + 1, Integer(0));
  p[0] = 1;
  p[k] -= 1;
  return p;
}

ZPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {Integer(1)};
  if (gens.size() == 1 && gens[0].is_one()) return {};  // unit ideal, N = 0
  bool pairwise_coprime = true;
  for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    ZPoly p = {Integer(1)};
    for (auto& g : gens) p = zpoly_mul(p, one_minus_tk(g.degree()));
    return p;
  }
  // Pivot on the most frequent variable.
  std::map<int, int> freq;
  for (auto& g : gens)
    for (auto& [v, e] : g.entries()) freq[v]++;
  int pivot = -1, best = 0;
  for (auto& [v, c] : freq)
    if (c > best) best = c, pivot = v;

  std::vector<Monomial> plus_pivot;   // generators of (M + <v>) other than v
  std::vector<Monomial> colon_pivot;  // generators of (M : v)
  Monomial v = Monomial::variable(pivot);
  for (auto& g : gens) {
    if (g.exponent(pivot) > 0) {
      colon_pivot.push_back(g / v);
    } else {
      plus_pivot.push_back(g);
      colon_pivot.push_back(g);
    }
  }
  ZPoly a = zpoly_mul(one_minus_tk(1), hilbert_numerator(std::move(plus_pivot)));
  ZPoly b = hilbert_numerator(std::move(colon_pivot));
  // N = N(M + <v>) + t * N(M : v)
  ZPoly tb(b.size() + 1, Integer(0));
  for (size_t i = 0; i < b.size(); ++i) tb[i + 1] = b[i];
  return zpoly_add(a, tb);
}

namespace {

std::pair<int, int> bidegree(const Monomial& m, const std::vector<int>& second_block) {
  int a = 0, b = 0;
  for (auto& [v, e] : m.entries()) (second_block[v] ? b : a) += e;
  return {a, b};
}

BiPoly bipoly_add(BiPoly a, const BiPoly& b) {
  for (auto& [k, c] : b) {
    auto& slot = a[k];
    slot += c;
    if (slot == 0) a.erase(k);
  }
  return a;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (auto& [ka, ca] : a)
    for (auto& [kb, cb] : b) {
      std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      auto& slot = r[k];
      slot += ca * cb;
      if (slot == 0) r.erase(k);
    }
  return r;
}

BiPoly one_minus_st(std::pair<int, int> bd) {
  BiPoly p;
  p[{0, 0}] = 1;
  p[bd] -= 1;
  return p;
}

}  // namespace

BiPoly bigraded_numerator(std::vector<Monomial> gens, const std::vector<int>& second_block) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {{{0, 0}, Integer(1)}};
  if (gens.size() == 1 && gens[0].is_one()) return {};  // unit ideal, N = 0
  bool pairwise_coprime = true;
  for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    BiPoly p{{{0, 0}, Integer(1)}};
    for (auto& g : gens) p = bipoly_mul(p, one_minus_st(bidegree(g, second_block)));
    return p;
  }
  std::map<int, int> freq;
  for (auto& g : gens)
    for (auto& [v, e] : g.entries()) freq[v]++;
  int pivot = -1, best = 0;
  for (auto& [v, c] : freq)
    if (c > best) best = c, pivot = v;

  std::vector<Monomial> plus_pivot;
  std::vector<Monomial> colon_pivot;
  Monomial v = Monomial::variable(pivot);
  for (auto& g : gens) {
    if (g.exponent(pivot) > 0) {
      colon_pivot.push_back(g / v);
    } else {
      plus_pivot.push_back(g);
      colon_pivot.push_back(g);
    }
  }
  std::pair<int, int> vd = second_block[pivot] ? std::pair{0, 1} : std::pair{1, 0};
  BiPoly a = bipoly_mul(one_minus_st(vd), bigraded_numerator(std::move(plus_pivot), second_block));
  BiPoly b = bigraded_numerator(std::move(colon_pivot), second_block);
  BiPoly shifted;
  for (auto& [k, c] : b) shifted[{k.first + vd.first, k.second + vd.second}] = c;
  return bipoly_add(std::move(a), shifted);
}

DimDegree monomial_dim_degree(const std::vector<Monomial>& gens, int nvars) {
  ZPoly n = hilbert_numerator(gens);
  if (n.empty()) return {-1, Integer(0)};  // unit ideal: empty quotient
  int codim = 0;
  while (zpoly_eval_one(n) == 0) {
    n = zpoly_div_one_minus_t(n);
    ++codim;
  }
  return {nvars - codim, zpoly_eval_one(n)};
}

}  // namespace ccdeg
