#pragma once

#include <memory>
#include <numeric>
#include <vector>

#include "ccdeg/monomial.hpp"
#include "ccdeg/variables.hpp"

namespace ccdeg {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Total monomial orders. The permutation lists ranks from largest variable
// to smallest (Macaulay2 convention: variables declared first are largest).
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Weighted, BlockElimination };

  static std::shared_ptr<const MonomialOrder> lex(std::vector<int> perm) {
    return make(Kind::Lex, std::move(perm), {}, {}, nullptr);
  }
  static std::shared_ptr<const MonomialOrder> grevlex(std::vector<int> perm) {
    return make(Kind::GrevLex, std::move(perm), {}, {}, nullptr);
  }
  // Identity permutation over nvars ranks.
  static std::shared_ptr<const MonomialOrder> grevlex(int nvars) {
    std::vector<int> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    return grevlex(std::move(perm));
  }
  static std::shared_ptr<const MonomialOrder> weighted(
      std::vector<long> weights, std::shared_ptr<const MonomialOrder> tie) {
    return make(Kind::Weighted, {}, std::move(weights), {}, std::move(tie));
  }
  // Compares total degree in `block` first, then the inner order.
  static std::shared_ptr<const MonomialOrder> block_elimination(
      std::vector<int> block, std::shared_ptr<const MonomialOrder> inner) {
    return make(Kind::BlockElimination, {}, {}, std::move(block), std::move(inner));
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& permutation() const { return perm_; }
  const std::vector<int>& block() const { return block_; }
  const MonomialOrder* inner() const { return inner_.get(); }

  Cmp compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex: {
        // Smallest position (largest variable) with differing exponent wins.
        int best_pos = -1, sign = 0;
        scan(a, b, [&](int pos, int ea, int eb) {
          if (ea != eb && (best_pos < 0 || pos < best_pos)) {
            best_pos = pos;
            sign = ea > eb ? 1 : -1;
          }
        });
        return sign > 0 ? Cmp::GT : (sign < 0 ? Cmp::LT : Cmp::EQ);
      }
      case Kind::GrevLex: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? Cmp::GT : Cmp::LT;
        // Largest position (smallest variable) with differing exponent;
        // the smaller exponent there is the larger monomial.
        int best_pos = -1, sign = 0;
        scan(a, b, [&](int pos, int ea, int eb) {
          if (ea != eb && pos > best_pos) {
            best_pos = pos;
            sign = ea < eb ? 1 : -1;
          }
        });
        return sign > 0 ? Cmp::GT : (sign < 0 ? Cmp::LT : Cmp::EQ);
      }
      case Kind::Weighted: {
        long wa = 0, wb = 0;
        for (auto& [v, e] : a.entries()) wa += weights_.at(v) * e;
        for (auto& [v, e] : b.entries()) wb += weights_.at(v) * e;
        if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
        return inner_->compare(a, b);
      }
      case Kind::BlockElimination: {
        int da = 0, db = 0;
        for (auto& [v, e] : a.entries())
          if (v < static_cast<int>(in_block_.size()) && in_block_[v]) da += e;
        for (auto& [v, e] : b.entries())
          if (v < static_cast<int>(in_block_.size()) && in_block_[v]) db += e;
        if (da != db) return da > db ? Cmp::GT : Cmp::LT;
        return inner_->compare(a, b);
      }
    }
    return Cmp::EQ;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

 private:
  template <class F>
  void scan(const Monomial& a, const Monomial& b, F&& f) const {
    auto& ea = a.entries();
    auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
      if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
        f(pos_.at(ea[i].first), ea[i].second, 0);
        ++i;
      } else if (i == ea.size() || eb[j].first < ea[i].first) {
        f(pos_.at(eb[j].first), 0, eb[j].second);
        ++j;
      } else {
        f(pos_.at(ea[i].first), ea[i].second, eb[j].second);
        ++i, ++j;
      }
    }
  }

  static std::shared_ptr<const MonomialOrder> make(
      Kind k, std::vector<int> perm, std::vector<long> weights, std::vector<int> block,
      std::shared_ptr<const MonomialOrder> inner) {
    auto o = std::shared_ptr<MonomialOrder>(new MonomialOrder());
    o->kind_ = k;
    o->perm_ = std::move(perm);
    o->weights_ = std::move(weights);
    o->block_ = std::move(block);
    o->inner_ = std::move(inner);
    if (!o->perm_.empty()) {
      int n = 0;
      for (int r : o->perm_) n = std::max(n, r + 1);
      o->pos_.assign(n, -1);
      for (size_t p = 0; p < o->perm_.size(); ++p) o->pos_[o->perm_[p]] = static_cast<int>(p);
      for (int r = 0; r < n; ++r)
        if (o->pos_[r] < 0) throw std::invalid_argument("order permutation has gaps");
    }
    if (!o->block_.empty()) {
      int n = 0;
      for (int r : o->block_) n = std::max(n, r + 1);
      o->in_block_.assign(std::max<size_t>(n, 1), 0);
      for (int r : o->block_) o->in_block_[r] = 1;
    }
    return o;
  }

  MonomialOrder() = default;

  Kind kind_ = Kind::GrevLex;
  std::vector<int> perm_;
  std::vector<int> pos_;
  std::vector<long> weights_;
  std::vector<int> block_;
  std::vector<char> in_block_;
  std::shared_ptr<const MonomialOrder> inner_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

}  // namespace ccdeg
