#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ccdeg/monomial.hpp"
#include "ccdeg/order.hpp"
#include "ccdeg/rational.hpp"
#include "ccdeg/variables.hpp"

namespace ccdeg {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse multivariate polynomial over the rationals. Terms are kept in a
// fixed canonical sequence (descending canonical monomial compare) so values
// are hashable and comparable independently of any monomial order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarTablePtr ring) : ring_(std::move(ring)) {}
  Polynomial(VarTablePtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (auto& t : terms) add_term(t.mono, t.coeff);
  }

  static Polynomial constant(VarTablePtr ring, Rational c) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial(), std::move(c));
    return p;
  }
  static Polynomial variable(VarTablePtr ring, int rank, int exp = 1) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial::variable(rank, exp), 1);
    return p;
  }
  static Polynomial term(VarTablePtr ring, Monomial m, Rational c) {
    Polynomial p(std::move(ring));
    p.add_term(std::move(m), std::move(c));
    return p;
  }
  // Bulk constructor: sorts into the canonical sequence and merges duplicates.
  static Polynomial from_terms(VarTablePtr ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return Monomial::canonical_cmp(a.mono, b.mono) > 0;
    });
    Polynomial p(std::move(ring));
    for (auto& t : terms) {
      if (t.coeff == 0) continue;
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const VarTablePtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    for (auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  Rational coefficient(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return Rational(0);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, 1); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, -1); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    std::map<Monomial, Rational, CanonicalGreater> acc;
    for (auto& a : terms_)
      for (auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        auto [it, fresh] = acc.try_emplace(std::move(m), 0);
        it->second += a.coeff * b.coeff;
      }
    Polynomial r(ring_);
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, c});
    return r;
  }

  Polynomial operator*(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying by a fixed monomial preserves the canonical sequence.
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono && terms_[i].coeff == o.terms_[i].coeff))
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Term leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("no leading term of the zero polynomial");
    const Term* best = &terms_.front();
    for (auto& t : terms_)
      if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
  }
  Monomial leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).mono;
  }

  // Monic scaling and integer content removal.
  Polynomial monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    Rational lc = leading_term(order).coeff;
    return *this * (Rational(1) / lc);
  }
  Polynomial primitive_part() const {
    if (terms_.empty()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    Polynomial r = *this * scale;
    // Fix sign on the canonical front term for determinism.
    if (r.terms_.front().coeff < 0) r = -r;
    return r;
  }

  // Substitute each variable by a polynomial (ranks missing from the map are
  // kept). Images must share one target ring.
  Polynomial substitute(const std::map<int, Polynomial>& images, VarTablePtr target) const;

  // Evaluate at rational values (all variables must be covered).
  Rational evaluate(const std::vector<Rational>& values) const {
    Rational sum = 0;
    for (auto& t : terms_) {
      Rational prod = t.coeff;
      for (auto& [v, e] : t.mono.entries()) {
        Rational p = values.at(v);
        for (int k = 0; k < e; ++k) prod *= p;
      }
      sum += prod;
    }
    return sum;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto& t : terms_) {
      h = (h ^ t.mono.hash()) * 1099511628211ull;
      h = (h ^ std::hash<std::string>{}(t.coeff.get_str())) * 1099511628211ull;
    }
    return h;
  }

  struct CanonicalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return Monomial::canonical_cmp(a, b) > 0;
    }
  };

  void add_term(Monomial m, Rational c) {
    if (c == 0) return;
    // Insert into the canonical descending sequence.
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& mm) {
      return Monomial::canonical_cmp(t.mono, mm) > 0;
    });
    if (it != terms_.end() && it->mono == m) {
      it->coeff += c;
      if (it->coeff == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{std::move(m), std::move(c)});
    }
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (ring_ && o.ring_ && !(*ring_ == *o.ring_))
      throw std::invalid_argument("polynomials over different rings");
  }

  Polynomial merged(const Polynomial& o, int sign) const {
    check_ring(o);
    Polynomial r(ring_ ? ring_ : o.ring_);
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == o.terms_.size()) c = 1;
      else c = Monomial::canonical_cmp(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) r.terms_.push_back(terms_[i++]);
      else if (c < 0) {
        r.terms_.push_back({o.terms_[j].mono, sign * o.terms_[j].coeff});
        ++j;
      } else {
        Rational v = terms_[i].coeff + sign * o.terms_[j].coeff;
        if (v != 0) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i, ++j;
      }
    }
    return r;
  }

  VarTablePtr ring_;
  std::vector<Term> terms_;  // descending canonical order
};

inline Polynomial Polynomial::substitute(const std::map<int, Polynomial>& images,
                                         VarTablePtr target) const {
  Polynomial sum(target);
  for (auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (auto& [v, e] : t.mono.entries()) {
      auto it = images.find(v);
      Polynomial base = (it != images.end()) ? it->second : Polynomial::variable(target, v);
      for (int k = 0; k < e; ++k) prod = prod * base;
    }
    sum = sum + prod;
  }
  return sum;
}

}  // namespace ccdeg
