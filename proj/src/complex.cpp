#include "ccdeg/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ccdeg {

bool SimplicialComplex::is_pure() const {
  for (auto& f : facets)
    if (f.size() != facets.front().size()) return false;
  return true;
}

int SimplicialComplex::dimension() const {
  size_t m = 0;
  for (auto& f : facets) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

namespace {

struct FaceEnum {
  int nverts;
  std::vector<uint64_t> gens;  // non-face supports as bitsets
  // generators grouped by their largest vertex for incremental checks
  std::vector<std::vector<uint64_t>> by_max;

  explicit FaceEnum(const MonomialIdeal& m) {
    nverts = m.ring->size();
    if (nverts > 63) throw std::invalid_argument("complex too large for bitset enumeration");
    by_max.assign(nverts, {});
    for (auto& g : m.generators) {
      if (!g.squarefree()) throw std::invalid_argument("stanley_reisner needs a squarefree ideal");
      uint64_t bits = 0;
      int mx = -1;
      for (auto& [v, e] : g.entries()) {
        bits |= uint64_t{1} << v;
        mx = std::max(mx, v);
      }
      if (mx < 0) throw std::invalid_argument("unit ideal has no complex");
      gens.push_back(bits);
      by_max[mx].push_back(bits);
    }
  }

  bool extends(uint64_t face, int v) const {
    uint64_t nf = face | (uint64_t{1} << v);
    for (uint64_t g : by_max[v])
      if ((g & ~nf) == 0) return false;
    return true;
  }

  bool is_face_with(uint64_t face, int v) const {
    // v may be smaller than max(face): check every generator containing v
    uint64_t nf = face | (uint64_t{1} << v);
    for (uint64_t g : gens)
      if ((g >> v) & 1 && (g & ~nf) == 0) return false;
    return true;
  }

  template <class F>
  void walk(F&& visit) const {
    // visit(face_bits, popcount) for every face including the empty one
    auto rec = [&](auto&& self, uint64_t face, int last, int size) -> void {
      visit(face, size);
      for (int v = last + 1; v < nverts; ++v)
        if (extends(face, v)) self(self, face | (uint64_t{1} << v), v, size + 1);
    };
    rec(rec, 0, -1, 0);
  }
};

}  // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& m) {
  FaceEnum fe(m);
  SimplicialComplex c;
  c.vertices = m.ring->names();
  fe.walk([&](uint64_t face, int size) {
    if (size == 0) return;
    // facet iff no vertex outside extends the face
    for (int v = 0; v < fe.nverts; ++v) {
      if ((face >> v) & 1) continue;
      if (fe.is_face_with(face, v)) return;
    }
    std::vector<int> f;
    for (int v = 0; v < fe.nverts; ++v)
      if ((face >> v) & 1) f.push_back(v);
    c.facets.push_back(std::move(f));
  });
  return c;
}

Integer complex_degree(const SimplicialComplex& c) {
  if (!c.is_pure()) throw std::invalid_argument("complex is not pure");
  return Integer(static_cast<long>(c.facets.size()));
}

std::map<std::pair<int, int>, long> complex_multidegree(const SimplicialComplex& c,
                                                        const std::vector<char>& xi_side,
                                                        int m, int n) {
  std::map<std::pair<int, int>, long> out;
  for (auto& f : c.facets) {
    int a = 0, b = 0;
    for (int v : f) (xi_side[v] ? a : b)++;
    out[{m - b + 1, n - a + 1}]++;
  }
  return out;
}

std::vector<Integer> face_vector(const SimplicialComplex& c) {
  // Rebuild the face enumeration from the facet list: a set is a face iff it
  // lies inside some facet.
  int nverts = static_cast<int>(c.vertices.size());
  if (nverts > 63) throw std::invalid_argument("complex too large");
  std::vector<uint64_t> facet_bits;
  for (auto& f : c.facets) {
    uint64_t b = 0;
    for (int v : f) b |= uint64_t{1} << v;
    facet_bits.push_back(b);
  }
  int dim = c.dimension();
  std::vector<Integer> f(dim + 1, Integer(0));
  auto rec = [&](auto&& self, uint64_t face, int last, int size) -> void {
    if (size > 0) f[size - 1] += 1;
    for (int v = last + 1; v < nverts; ++v) {
      uint64_t nf = face | (uint64_t{1} << v);
      bool inside = false;
      for (uint64_t fb : facet_bits)
        if ((nf & ~fb) == 0) {
          inside = true;
          break;
        }
      if (inside) self(self, nf, v, size + 1);
    }
  };
  rec(rec, 0, -1, 0);
  return f;
}

std::vector<Rational> ehrhart_from_unimodular(const SimplicialComplex& c) {
  auto f = face_vector(c);
  // L(t) = sum_k f[k] * C(t-1, k): a unimodular k-simplex dilated by t has
  // exactly C(t-1, k) relative-interior lattice points, and the closed faces
  // of the triangulation tile tP.
  int dim = static_cast<int>(f.size()) - 1;
  std::vector<Rational> L(dim + 1, Rational(0));
  std::vector<Rational> falling = {Rational(1)};  // C(t-1, 0) = 1
  Integer fact = 1;
  for (int k = 0; k <= dim; ++k) {
    for (size_t i = 0; i < falling.size(); ++i)
      L[i] += falling[i] * Rational(f[k]) / Rational(fact);
    // falling *= (t - (k+1)); fact *= (k+1): yields C(t-1, k+1) next round
    std::vector<Rational> next(falling.size() + 1, Rational(0));
    for (size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * Rational(Integer(k + 1));
    }
    falling = std::move(next);
    fact *= (k + 1);
  }
  while (L.size() > 1 && L.back() == 0) L.pop_back();
  return L;
}

std::string complex_to_text(const SimplicialComplex& c) {
  std::string s;
  for (auto& f : c.facets) {
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) s += ',';
      s += c.vertices[f[i]];
    }
    s += '\n';
  }
  return s;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Integer& t) {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * Rational(t) + *it;
  return v;
}

namespace {

std::string zpoly_to_string(const std::vector<Integer>& p) {
  std::string s;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] == 0) continue;
    Integer a = p[i];
    if (!s.empty()) {
      s += (a < 0) ? "-" : "+";
      if (a < 0) a = -a;
    } else if (a < 0) {
      s += "-";
      a = -a;
    }
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) {
      if (a != 1) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string ehrhart_to_string(const std::vector<Rational>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  Integer fact = 1;
  for (int i = 2; i <= deg; ++i) fact *= i;
  std::vector<Integer> p(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rational v = coeffs[i] * Rational(fact);
    if (!is_integer(v)) return "";  // not an Ehrhart polynomial of a lattice polytope
    p[i] = v.get_num();
  }
  std::string out = "(1/" + std::to_string(deg) + "!)";
  // strip integer roots -1, -2, ... in ascending order
  for (int k = 1; k <= deg; ++k) {
    while (p.size() > 1) {
      // evaluate at -k
      Integer val = 0;
      for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) val = val * Integer(-k) + p[i];
      if (val != 0) break;
      // synthetic division by (t + k)
      std::vector<Integer> q(p.size() - 1);
      Integer carry = p.back();
      for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] - Integer(k) * carry;
      }
      p = std::move(q);
      out += "(t+" + std::to_string(k) + ")";
    }
  }
  out += "(" + zpoly_to_string(p) + ")";
  return out;
}

}  // namespace ccdeg
