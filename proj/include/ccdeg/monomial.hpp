#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ccdeg {

// Sparse exponent vector: (rank, exponent) pairs sorted by rank, no zeros.
class Monomial {
 public:
  using Entry = std::pair<int, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    normalize();
  }
  static Monomial variable(int rank, int exp = 1) {
    Monomial m;
    if (exp > 0) m.e_.push_back({rank, exp});
    return m;
  }

  bool is_one() const { return e_.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [v, e] : e_) d += e;
    return d;
  }
  int exponent(int rank) const {
    for (auto& [v, e] : e_)
      if (v == rank) return e;
    return 0;
  }
  const std::vector<Entry>& entries() const { return e_; }

  // Support fingerprint: bit per rank mod 64. No false negatives in the
  // divisibility prefilter.
  uint64_t support_mask() const {
    uint64_t m = 0;
    for (auto& [v, e] : e_) m |= (uint64_t{1} << (v & 63));
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
      if (e_[i].first < o.e_[j].first) r.e_.push_back(e_[i++]);
      else if (e_[i].first > o.e_[j].first) r.e_.push_back(o.e_[j++]);
      else {
        r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
        ++i, ++j;
      }
    }
    while (i < e_.size()) r.e_.push_back(e_[i++]);
    while (j < o.e_.size()) r.e_.push_back(o.e_[j++]);
    return r;
  }

  bool divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : e_) {
      while (j < o.e_.size() && o.e_[j].first < v) ++j;
      if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
    }
    return true;
  }

  // this / o; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : e_) {
      int sub = 0;
      while (j < o.e_.size() && o.e_[j].first < v) ++j;
      if (j < o.e_.size() && o.e_[j].first == v) sub = o.e_[j].second;
      if (e - sub > 0) r.e_.push_back({v, e - sub});
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first < b.e_[j].first) r.e_.push_back(a.e_[i++]);
      else if (a.e_[i].first > b.e_[j].first) r.e_.push_back(b.e_[j++]);
      else {
        r.e_.push_back({a.e_[i].first, std::max(a.e_[i].second, b.e_[j].second)});
        ++i, ++j;
      }
    }
    while (i < a.e_.size()) r.e_.push_back(a.e_[i++]);
    while (j < b.e_.size()) r.e_.push_back(b.e_[j++]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first < b.e_[j].first) ++i;
      else if (a.e_[i].first > b.e_[j].first) ++j;
      else return false;
    }
    return true;
  }

  bool squarefree() const {
    for (auto& [v, e] : e_)
      if (e > 1) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  // Fixed canonical compare: graded lex with rank 0 largest. Multiplicative,
  // so term sequences survive multiplication by a monomial. Used for
  // deterministic storage, independent of any MonomialOrder.
  static int canonical_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first < b.e_[j].first) return 1;   // a has the smaller rank
      if (a.e_[i].first > b.e_[j].first) return -1;
      if (a.e_[i].second != b.e_[j].second)
        return a.e_[i].second > b.e_[j].second ? 1 : -1;
      ++i, ++j;
    }
    if (i < a.e_.size()) return 1;
    if (j < b.e_.size()) return -1;
    return 0;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (auto& [v, e] : e_) {
      h = (h ^ static_cast<size_t>(v)) * 0x100000001b3ull;
      h = (h ^ static_cast<size_t>(e)) * 0x100000001b3ull;
    }
    return h;
  }

 private:
  void normalize() {
    std::vector<Entry> out;
    for (auto& [v, e] : e_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      if (e == 0) continue;
      if (!out.empty() && out.back().first == v) out.back().second += e;
      else out.push_back({v, e});
    }
    e_ = std::move(out);
  }

  std::vector<Entry> e_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace ccdeg
