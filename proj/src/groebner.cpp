#include "ccdeg/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace ccdeg {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Term> to_ordered(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Term> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return ts;
}

Polynomial from_ordered(const VarTablePtr& ring, std::vector<Term> ts) {
  return Polynomial::from_terms(ring, std::move(ts));
}

void strip_content(std::vector<Term>& ts) {
  if (ts.empty()) return;
  Integer num_gcd = 0, den_lcm = 1;
  for (auto& t : ts) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (ts.front().coeff < 0) scale = -scale;
  for (auto& t : ts) t.coeff *= scale;
}

// Joint content strip across the emitted prefix and the pending suffix of one
// reduction. Scaling only one of them would silently change the polynomial.
void strip_content_joint(std::vector<Term>& done, std::vector<Term>& pending) {
  if (done.empty()) {
    strip_content(pending);
    return;
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (auto* part : {&done, &pending})
    for (auto& t : *part) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (done.front().coeff < 0) scale = -scale;
  for (auto* part : {&done, &pending})
    for (auto& t : *part) t.coeff *= scale;
}

struct Reducer {
  Monomial lm;
  uint64_t mask;
  const std::vector<Term>* terms;
  int sugar;
};

// h -= (lead(h)/lead(r)) * (lm(h)/lm(r)) * r, merging over the tail past
// `head`. Terms stay strictly descending.
std::vector<Term> subtract_reducer(const std::vector<Term>& h, size_t head, const Reducer& r,
                                   const MonomialOrder& order) {
  const std::vector<Term>& g = *r.terms;
  Monomial m = h[head].mono / r.lm;
  Rational factor = h[head].coeff / g[0].coeff;
  std::vector<Term> out;
  out.reserve(h.size() - head + g.size());
  size_t i = head + 1, j = 1;
  Monomial gj_m;
  bool gj_valid = false;
  while (i < h.size() || j < g.size()) {
    if (!gj_valid && j < g.size()) {
      gj_m = g[j].mono * m;
      gj_valid = true;
    }
    if (j == g.size()) {
      out.push_back(h[i++]);
    } else if (i == h.size()) {
      out.push_back({gj_m, -factor * g[j].coeff});
      ++j;
      gj_valid = false;
    } else {
      Cmp c = order.compare(h[i].mono, gj_m);
      if (c == Cmp::GT) {
        out.push_back(h[i++]);
      } else if (c == Cmp::LT) {
        out.push_back({gj_m, -factor * g[j].coeff});
        ++j;
        gj_valid = false;
      } else {
        Rational v = h[i].coeff - factor * g[j].coeff;
        if (v != 0) out.push_back({h[i].mono, std::move(v)});
        ++i, ++j;
        gj_valid = false;
      }
    }
  }
  return out;
}

// Full normal form. With allow_scaling the intermediate polynomial is kept
// content-free (valid for basis construction, not for exact remainders).
std::vector<Term> reduce_ordered(std::vector<Term> h, int* sugar,
                                 const std::vector<Reducer>& reds, const MonomialOrder& order,
                                 bool allow_scaling) {
  std::vector<Term> out;
  size_t head = 0;
  int steps = 0;
  while (head < h.size()) {
    const Monomial& lm = h[head].mono;
    uint64_t hm = lm.support_mask();
    const Reducer* hit = nullptr;
    for (auto& red : reds) {
      if ((red.mask & ~hm) == 0 && red.lm.divides(lm)) {
        hit = &red;
        break;
      }
    }
    if (!hit) {
      out.push_back(std::move(h[head]));
      ++head;
      continue;
    }
    if (sugar) *sugar = std::max(*sugar, hit->sugar + (lm / hit->lm).degree());
    std::vector<Term> nh = subtract_reducer(h, head, *hit, order);
    h = std::move(nh);
    head = 0;
    if (allow_scaling && (++steps & 7) == 0) strip_content_joint(out, h);
  }
  return out;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int lcm_deg;
  int sugar;
};

struct Engine {
  const MonomialOrder& order;
  VarTablePtr ring;
  std::vector<std::vector<Term>> polys;
  std::vector<Monomial> lms;
  std::vector<uint64_t> masks;
  std::vector<int> sugars;
  std::vector<Pair> pairs;
  bool truncated = false;

  explicit Engine(const MonomialOrder& o, VarTablePtr r) : order(o), ring(std::move(r)) {}

  std::vector<Reducer> reducers() const {
    std::vector<Reducer> r;
    r.reserve(polys.size());
    for (size_t i = 0; i < polys.size(); ++i)
      r.push_back({lms[i], masks[i], &polys[i], sugars[i]});
    return r;
  }

  // Gebauer-Moller pair update for a freshly appended element k.
  void update_pairs(int k) {
    const Monomial& lmk = lms[k];
    // Old-pair elimination (chain criterion).
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lmk.divides(p.lcm)) return false;
      if (Monomial::lcm(lms[p.i], lmk) == p.lcm) return false;
      if (Monomial::lcm(lms[p.j], lmk) == p.lcm) return false;
      return true;
    });
    // Candidate new pairs.
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cands;
    cands.reserve(k);
    for (int i = 0; i < k; ++i)
      cands.push_back({i, Monomial::lcm(lms[i], lmk), Monomial::coprime(lms[i], lmk)});
    // M criterion: strict divisibility among new lcms.
    for (auto& a : cands) {
      if (a.dead) continue;
      for (auto& b : cands) {
        if (b.dead || a.i == b.i) continue;
        if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
          a.dead = true;
          break;
        }
      }
    }
    // F/B criteria: one pair per lcm value; coprime classes vanish entirely.
    for (size_t x = 0; x < cands.size(); ++x) {
      if (cands[x].dead) continue;
      bool coprime_class = cands[x].coprime;
      for (size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].dead || !(cands[y].lcm == cands[x].lcm)) continue;
        coprime_class = coprime_class || cands[y].coprime;
        cands[y].dead = true;
      }
      if (coprime_class) cands[x].dead = true;
    }
    for (auto& c : cands) {
      if (c.dead) continue;
      int deg = c.lcm.degree();
      int sug = std::max(sugars[c.i] + (c.lcm / lms[c.i]).degree(),
                         sugars[k] + (c.lcm / lmk).degree());
      pairs.push_back({c.i, k, c.lcm, deg, sug});
    }
  }

  void add(std::vector<Term> p, int sugar) {
    int k = static_cast<int>(polys.size());
    lms.push_back(p.front().mono);
    masks.push_back(p.front().mono.support_mask());
    sugars.push_back(sugar);
    polys.push_back(std::move(p));
    update_pairs(k);
  }

  size_t select_pair() const {
    size_t best = 0;
    for (size_t i = 1; i < pairs.size(); ++i) {
      const Pair &a = pairs[i], &b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = i;
        continue;
      }
      if (a.lcm_deg != b.lcm_deg) {
        if (a.lcm_deg < b.lcm_deg) best = i;
        continue;
      }
      Cmp c = order.compare(a.lcm, b.lcm);
      if (c == Cmp::LT) {
        best = i;
        continue;
      }
      if (c == Cmp::GT) continue;
      if (std::tie(a.j, a.i) < std::tie(b.j, b.i)) best = i;
    }
    return best;
  }

  std::vector<Term> s_polynomial(const Pair& p) const {
    const auto& f = polys[p.i];
    const auto& g = polys[p.j];
    Monomial mf = p.lcm / lms[p.i];
    Monomial mg = p.lcm / lms[p.j];
    Rational cf = g.front().coeff;   // cross-multiplied
    Rational cg = -f.front().coeff;
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    size_t i = 1, j = 1;  // leads cancel
    Monomial fa, gb;
    bool fav = false, gbv = false;
    while (i < f.size() || j < g.size()) {
      if (!fav && i < f.size()) fa = f[i].mono * mf, fav = true;
      if (!gbv && j < g.size()) gb = g[j].mono * mg, gbv = true;
      if (j == g.size()) {
        out.push_back({fa, cf * f[i].coeff});
        ++i;
        fav = false;
      } else if (i == f.size()) {
        out.push_back({gb, cg * g[j].coeff});
        ++j;
        gbv = false;
      } else {
        Cmp c = order.compare(fa, gb);
        if (c == Cmp::GT) {
          out.push_back({fa, cf * f[i].coeff});
          ++i;
          fav = false;
        } else if (c == Cmp::LT) {
          out.push_back({gb, cg * g[j].coeff});
          ++j;
          gbv = false;
        } else {
          Rational v = cf * f[i].coeff + cg * g[j].coeff;
          if (v != 0) out.push_back({fa, std::move(v)});
          ++i, ++j;
          fav = gbv = false;
        }
      }
    }
    return out;
  }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, OrderPtr order, const BuchbergerLimits& limits) {
  if (!order) throw std::invalid_argument("buchberger needs a monomial order");
  Engine eng(*order, ideal.ring);
  auto deadline = Clock::now();
  bool timed = limits.max_seconds > 0;
  if (timed)
    deadline += std::chrono::milliseconds(static_cast<long>(limits.max_seconds * 1000));

  // Seed with interreduced inputs, smallest leading monomials first.
  std::vector<std::vector<Term>> inputs;
  for (auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    auto ts = to_ordered(g, *order);
    strip_content(ts);
    inputs.push_back(std::move(ts));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const auto& a, const auto& b) {
    Cmp c = order->compare(a.front().mono, b.front().mono);
    if (c != Cmp::EQ) return c == Cmp::LT;
    return a.size() < b.size();
  });
  for (auto& ts : inputs) {
    int sugar = 0;
    for (auto& t : ts) sugar = std::max(sugar, t.mono.degree());
    auto r = reduce_ordered(std::move(ts), &sugar, eng.reducers(), *order, true);
    if (r.empty()) continue;
    strip_content(r);
    eng.add(std::move(r), sugar);
  }

  while (!eng.pairs.empty()) {
    if (timed && Clock::now() > deadline) {
      eng.truncated = true;
      break;
    }
    if (limits.max_basis > 0 && static_cast<long>(eng.polys.size()) > limits.max_basis) {
      eng.truncated = true;
      break;
    }
    size_t idx = eng.select_pair();
    Pair p = eng.pairs[idx];
    eng.pairs.erase(eng.pairs.begin() + idx);
    if (limits.degree_bound >= 0 && p.lcm_deg > limits.degree_bound) {
      eng.truncated = true;
      continue;
    }
    auto s = eng.s_polynomial(p);
    if (s.empty()) continue;
    int sugar = p.sugar;
    auto r = reduce_ordered(std::move(s), &sugar, eng.reducers(), *order, true);
    if (r.empty()) continue;
    strip_content(r);
    eng.add(std::move(r), sugar);
  }

  // Interreduction: minimal leading monomials, then tail reduction.
  std::vector<int> keep;
  for (size_t i = 0; i < eng.polys.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < eng.polys.size(); ++j) {
      if (i == j) continue;
      if (eng.lms[j].divides(eng.lms[i]) && !(eng.lms[i] == eng.lms[j])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(static_cast<int>(i));
  }
  GroebnerBasis gb;
  gb.ring = ideal.ring;
  gb.order = order;
  gb.truncated = eng.truncated;
  gb.reduced = !eng.truncated;
  std::vector<std::pair<Monomial, std::vector<Term>>> final_polys;
  for (int i : keep) {
    std::vector<Reducer> others;
    for (int j : keep) {
      if (j == i) continue;
      others.push_back({eng.lms[j], eng.masks[j], &eng.polys[j], eng.sugars[j]});
    }
    auto r = reduce_ordered(eng.polys[i], nullptr, others, *order, true);
    if (r.empty()) continue;  // duplicate leading monomials cannot occur; safety
    Rational lc = r.front().coeff;
    for (auto& t : r) t.coeff /= lc;
    final_polys.push_back({r.front().mono, std::move(r)});
  }
  std::sort(final_polys.begin(), final_polys.end(),
            [&](const auto& a, const auto& b) { return order->less(a.first, b.first); });
  for (auto& [lm, ts] : final_polys)
    gb.elements.push_back(from_ordered(ideal.ring, std::move(ts)));
  return gb;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const OrderPtr& order) {
  std::vector<std::vector<Term>> bs;
  std::vector<Reducer> reds;
  for (auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero basis element");
    bs.push_back(to_ordered(g, *order));
  }
  reds.reserve(bs.size());
  for (auto& b : bs) reds.push_back({b.front().mono, b.front().mono.support_mask(), &b, 0});
  auto r = reduce_ordered(to_ordered(f, *order), nullptr, reds, *order, false);
  return from_ordered(f.ring(), std::move(r));
}

GroebnerCertificate is_groebner(const std::vector<Polynomial>& gens, const OrderPtr& order) {
  GroebnerCertificate cert;
  Engine eng(*order, gens.empty() ? nullptr : gens.front().ring());
  for (auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("is_groebner: zero generator");
    auto ts = to_ordered(g, *order);
    strip_content(ts);
    eng.lms.push_back(ts.front().mono);
    eng.masks.push_back(ts.front().mono.support_mask());
    eng.sugars.push_back(0);
    eng.polys.push_back(std::move(ts));
  }
  auto reds = eng.reducers();
  for (size_t i = 0; i < eng.polys.size(); ++i) {
    for (size_t j = i + 1; j < eng.polys.size(); ++j) {
      if (Monomial::coprime(eng.lms[i], eng.lms[j])) continue;  // Buchberger 1
      Pair p{static_cast<int>(i), static_cast<int>(j), Monomial::lcm(eng.lms[i], eng.lms[j]),
             0, 0};
      auto s = eng.s_polynomial(p);
      if (s.empty()) continue;
      auto r = reduce_ordered(std::move(s), nullptr, reds, *order, true);
      if (!r.empty()) {
        cert.ok = false;
        cert.failing_pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return cert;
}

EliminationResult eliminate(const Ideal& ideal, const std::vector<int>& block, OrderPtr inner,
                            const BuchbergerLimits& limits) {
  if (!inner) inner = MonomialOrder::grevlex(ideal.ring->size());
  OrderPtr order = MonomialOrder::block_elimination(block, inner);
  GroebnerBasis gb = buchberger(ideal, order, limits);
  std::vector<char> in_block(ideal.ring->size(), 0);
  for (int v : block) in_block[v] = 1;
  EliminationResult res;
  res.full_gb = gb;
  res.truncated = gb.truncated;
  res.ideal.ring = ideal.ring;
  for (auto& g : gb.elements) {
    bool free_of_block = true;
    Monomial lm = g.leading_monomial(*order);
    for (auto& [v, e] : lm.entries())
      if (in_block[v]) {
        free_of_block = false;
        break;
      }
    if (free_of_block) res.ideal.generators.push_back(g);
  }
  return res;
}

Ideal saturate(const Ideal& ideal, int var_rank, const BuchbergerLimits& limits) {
  // Extended ring with a fresh inverse variable appended; existing ranks are
  // unchanged, so monomials carry over as-is.
  std::vector<std::string> names = ideal.ring->names();
  std::string fresh = "usat_";
  while (ideal.ring->contains(fresh)) fresh += "_";
  names.push_back(fresh);
  auto ext = std::make_shared<VariableTable>(names);
  int u = ext->size() - 1;

  Ideal extended;
  extended.ring = ext;
  for (auto& g : ideal.generators) {
    std::vector<Term> ts(g.terms().begin(), g.terms().end());
    extended.generators.push_back(Polynomial::from_terms(ext, std::move(ts)));
  }
  Polynomial rel = Polynomial::variable(ext, u) * Polynomial::variable(ext, var_rank) -
                   Polynomial::constant(ext, 1);
  extended.generators.push_back(rel);

  auto res = eliminate(extended, {u}, MonomialOrder::grevlex(ext->size()), limits);
  if (res.truncated) throw BudgetExceeded("saturation exceeded its budget");

  Ideal out;
  out.ring = ideal.ring;
  for (auto& g : res.ideal.generators) {
    std::vector<Term> ts(g.terms().begin(), g.terms().end());
    out.generators.push_back(Polynomial::from_terms(ideal.ring, std::move(ts)));
  }
  return out;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  for (auto& g : gb.elements) lms.push_back(g.leading_monomial(*gb.order));
  return {gb.ring, minimalize_monomials(std::move(lms))};
}

std::optional<Integer> quotient_vector_space_dim(const GroebnerBasis& gb) {
  MonomialIdeal in = initial_ideal(gb);
  int n = gb.ring->size();
  // Zero-dimensional iff every variable is bounded by a pure power.
  std::vector<int> bound(n, -1);
  for (auto& m : in.generators) {
    if (m.entries().size() == 1) {
      auto [v, e] = m.entries()[0];
      if (bound[v] < 0 || e < bound[v]) bound[v] = e;
    }
    if (m.is_one()) return Integer(0);
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0) return std::nullopt;

  // Count monomials below every generator by DFS over variables; generators
  // are checked as soon as their largest variable is fixed.
  std::vector<std::vector<const Monomial*>> by_maxvar(n);
  for (auto& m : in.generators) by_maxvar[m.entries().back().first].push_back(&m);
  std::vector<int> exps(n, 0);
  Integer count = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      count += 1;
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      exps[v] = e;
      bool blocked = false;
      for (const Monomial* m : by_maxvar[v]) {
        bool div = true;
        for (auto& [w, we] : m->entries())
          if (exps[w] < we) {
            div = false;
            break;
          }
        if (div) {
          blocked = true;
          break;
        }
      }
      if (!blocked) self(self, v + 1);
    }
    exps[v] = 0;
  };
  dfs(dfs, 0);
  return count;
}

std::optional<Integer> quotient_vector_space_dim(const Ideal& ideal, OrderPtr order,
                                                 const BuchbergerLimits& limits) {
  GroebnerBasis gb = buchberger(ideal, order, limits);
  if (gb.truncated) throw BudgetExceeded("quotient dimension exceeded its budget");
  return quotient_vector_space_dim(gb);
}

std::map<int, long> minimal_generators(const Ideal& ideal, OrderPtr order,
                                       const BuchbergerLimits& limits) {
  for (auto& g : ideal.generators)
    if (!g.is_homogeneous())
      throw std::invalid_argument("minimal_generators requires a homogeneous ideal");
  if (!order) order = MonomialOrder::grevlex(ideal.ring->size());
  GroebnerBasis gb = buchberger(ideal, order, limits);
  if (gb.truncated) throw BudgetExceeded("minimal_generators exceeded its budget");

  std::map<int, std::vector<const Polynomial*>> by_degree;
  for (auto& g : gb.elements) by_degree[g.total_degree()].push_back(&g);

  std::map<int, long> histogram;
  std::vector<Polynomial> accepted;
  bool first_degree = true;
  for (auto& [deg, cands] : by_degree) {
    if (first_degree) {
      // Reduced GB elements have distinct leading monomials, hence the
      // lowest-degree ones are linearly independent.
      histogram[deg] = static_cast<long>(cands.size());
      for (auto* c : cands) accepted.push_back(*c);
      first_degree = false;
      continue;
    }
    // Degree-truncated basis of the lower-degree generators: exact for
    // membership tests in degree <= deg since everything is homogeneous.
    BuchbergerLimits trunc = limits;
    trunc.degree_bound = deg;
    GroebnerBasis sub = buchberger({ideal.ring, accepted}, order, trunc);
    // Rank of the residuals, Gaussian elimination on leading terms.
    std::vector<Polynomial> echelon;
    long fresh = 0;
    for (auto* c : cands) {
      Polynomial r = normal_form(*c, sub.elements, order);
      for (auto& e : echelon) {
        if (r.is_zero()) break;
        Monomial lr = r.leading_monomial(*order);
        Monomial le = e.leading_monomial(*order);
        if (lr == le)
          r = r - e * (r.leading_term(*order).coeff / e.leading_term(*order).coeff);
      }
      if (!r.is_zero()) {
        echelon.push_back(r);
        accepted.push_back(*c);
        ++fresh;
      }
    }
    if (fresh > 0) histogram[deg] = fresh;
  }
  return histogram;
}

bool ideals_equal(const Ideal& a, const Ideal& b, OrderPtr order,
                  const BuchbergerLimits& limits) {
  if (!order) order = MonomialOrder::grevlex(a.ring->size());
  GroebnerBasis ga = buchberger(a, order, limits);
  GroebnerBasis gbb = buchberger(b, order, limits);
  if (ga.truncated || gbb.truncated) throw BudgetExceeded("ideals_equal exceeded its budget");
  for (auto& g : b.generators)
    if (!normal_form(g, ga.elements, order).is_zero()) return false;
  for (auto& g : a.generators)
    if (!normal_form(g, gbb.elements, order).is_zero()) return false;
  return true;
}

}  // namespace ccdeg
