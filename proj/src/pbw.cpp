#include "ccdeg/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccdeg {

PbwTuple pbw_from_set(std::vector<int> subset, int d) {
  std::sort(subset.begin(), subset.end());
  if (static_cast<int>(subset.size()) != d) throw std::invalid_argument("subset size != d");
  PbwTuple t(d, 0);
  std::vector<int> big;
  for (int v : subset) {
    if (v <= d) t[v - 1] = v;
    else big.push_back(v);
  }
  size_t b = 0;
  for (int i = 0; i < d; ++i)
    if (t[i] == 0) t[i] = big[b++];
  return t;
}

std::vector<PbwTuple> pbw_tuples(int d, int n) {
  std::vector<PbwTuple> out;
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == d) {
      out.push_back(pbw_from_set(subset, d));
      return;
    }
    for (int v = next; v <= n; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string pbw_digits(const PbwTuple& t) {
  std::string s;
  bool wide = false;
  for (int v : t) wide = wide || v >= 10;
  for (size_t i = 0; i < t.size(); ++i) {
    if (wide && i) s += '_';
    s += std::to_string(t[i]);
  }
  return s;
}

bool pbw_in_star(const PbwTuple& t, int d) {
  int big = 0;
  for (int v : t)
    if (v > d) ++big;
  return big <= 1;
}

namespace {

// Down-set of the antichain of sigma as a bitset over grid cells (i,j),
// i in [d] (1-based), j in {d+1..n}.
std::vector<char> downset(const PbwTuple& t, int d, int n) {
  int w = n - d;
  std::vector<char> cells(d * w, 0);
  for (int i = 1; i <= d; ++i) {
    int si = t[i - 1];
    if (si <= d) continue;
    // cells (i', j') with i' >= i and j' <= si
    for (int ip = i; ip <= d; ++ip)
      for (int jp = d + 1; jp <= si; ++jp) cells[(ip - 1) * w + (jp - d - 1)] = 1;
  }
  return cells;
}

}  // namespace

bool pbw_leq(const PbwTuple& a, const PbwTuple& b, int d, int n) {
  auto da = downset(a, d, n), db = downset(b, d, n);
  for (size_t i = 0; i < da.size(); ++i)
    if (da[i] && !db[i]) return false;
  return true;
}

int pbw_downset_size(const PbwTuple& t, int d, int n) {
  auto ds = downset(t, d, n);
  int c = 0;
  for (char x : ds) c += x;
  return c;
}

std::vector<PbwTuple> pbw_listing_desc(int d, int n) {
  auto ts = pbw_tuples(d, n);
  std::stable_sort(ts.begin(), ts.end(), [&](const PbwTuple& a, const PbwTuple& b) {
    int ha = pbw_downset_size(a, d, n), hb = pbw_downset_size(b, d, n);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  return ts;
}

}  // namespace ccdeg
