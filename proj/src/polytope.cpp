#include "ccdeg/polytope.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "ccdeg/toric.hpp"

namespace ccdeg {

namespace {

int affine_rank(const IntMat& pts) {
  if (pts.size() <= 1) return static_cast<int>(pts.size()) - 1;
  IntMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    IntVec d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return integer_rank(std::move(diffs));
}

int affine_rank_of(const IntMat& pts, const std::vector<int>& idx) {
  IntMat sel;
  for (int i : idx) sel.push_back(pts[i]);
  return affine_rank(sel);
}

void check_distinct(const LatticePolytope& p) {
  std::set<IntVec> seen;
  for (auto& v : p.vertices)
    if (!seen.insert(v).second) throw std::invalid_argument("polytope vertices not distinct");
}

// Coordinates of every vertex in the lattice Z^N n aff(P), taken relative to
// the first vertex; the hull becomes full-dimensional and normalized volumes
// are preserved.
IntMat reduced_points(const LatticePolytope& p) {
  IntMat diffs;
  for (auto& v : p.vertices) {
    IntVec d(v.size());
    for (size_t j = 0; j < v.size(); ++j) d[j] = v[j] - p.vertices[0][j];
    diffs.push_back(std::move(d));
  }
  if (p.dim == p.ambient_dim) return diffs;
  auto basis = saturated_span_basis(diffs, p.ambient_dim);
  IntMat out;
  for (auto& d : diffs) {
    auto c = coordinates_in_lattice(basis, d);
    if (!c) throw std::logic_error("vertex outside its own saturated span");
    out.push_back(std::move(*c));
  }
  return out;
}

struct Facet {
  IntVec normal;   // primitive; normal . x <= offset on the hull
  Integer offset;
  std::vector<int> verts;  // sorted
};

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Hyperplane spanned by the affinely independent set `idx` (|idx| = dim of
// ambient), oriented so that the sum of all points lies on the <= side.
Facet hyperplane_through(const IntMat& pts, std::vector<int> idx, const IntVec& point_sum,
                         long npoints) {
  int dim = static_cast<int>(pts[0].size());
  IntMat rows;
  for (size_t i = 1; i < idx.size(); ++i) {
    IntVec d(dim);
    for (int j = 0; j < dim; ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
    rows.push_back(std::move(d));
  }
  auto kern = kernel_basis(rows, dim);
  if (kern.size() != 1) throw std::logic_error("degenerate facet candidate");
  Facet f;
  f.normal = kern[0];
  f.offset = dot(f.normal, pts[idx[0]]);
  Integer side = dot(f.normal, point_sum) - Integer(npoints) * f.offset;
  if (side == 0) throw std::logic_error("interior point on facet hyperplane");
  if (side > 0) {
    for (auto& c : f.normal) c = -c;
    f.offset = -f.offset;
  }
  std::sort(idx.begin(), idx.end());
  f.verts = std::move(idx);
  return f;
}

struct Budget {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double max_seconds;
  explicit Budget(double s) : max_seconds(s) {}
  void check(const char* what) const {
    if (max_seconds <= 0) return;
    double e = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e > max_seconds) throw BudgetExceeded(what);
  }
};

// Beneath-beyond over exact integer arithmetic. Facets are kept merged (not
// triangulated); vertex supports are recomputed after every insertion, so
// ridge tests between facets stay exact in degenerate positions.
std::vector<Facet> convex_hull(const IntMat& pts, const Budget& budget) {
  int dim = pts.empty() ? 0 : static_cast<int>(pts[0].size());
  if (dim == 0) return {};
  // greedy affinely independent starter simplex
  std::vector<int> simplex = {0};
  IntMat sel = {pts[0]};
  for (int i = 1; i < static_cast<int>(pts.size()) && static_cast<int>(simplex.size()) <= dim;
       ++i) {
    sel.push_back(pts[i]);
    if (affine_rank(sel) == static_cast<int>(simplex.size()))
      simplex.push_back(i);
    else
      sel.pop_back();
  }
  if (static_cast<int>(simplex.size()) != dim + 1)
    throw std::logic_error("hull input not full-dimensional");

  std::vector<int> inserted = simplex;
  IntVec point_sum(dim, Integer(0));
  for (int i : inserted)
    for (int j = 0; j < dim; ++j) point_sum[j] += pts[i][j];

  std::vector<Facet> facets;
  for (size_t k = 0; k < simplex.size(); ++k) {
    std::vector<int> idx;
    for (size_t i = 0; i < simplex.size(); ++i)
      if (i != k) idx.push_back(simplex[i]);
    facets.push_back(hyperplane_through(pts, idx, point_sum, inserted.size()));
  }

  auto refresh_verts = [&](std::vector<Facet>& fs) {
    for (auto& f : fs) {
      f.verts.clear();
      for (int i : inserted)
        if (dot(f.normal, pts[i]) == f.offset) f.verts.push_back(i);
      std::sort(f.verts.begin(), f.verts.end());
    }
  };

  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (in_simplex.count(p)) continue;
    budget.check("face enumeration budget exceeded");
    std::vector<Facet> above, below, on;
    for (auto& f : facets) {
      Integer v = dot(f.normal, pts[p]);
      (v > f.offset ? above : v == f.offset ? on : below).push_back(f);
    }
    inserted.push_back(p);
    for (int j = 0; j < dim; ++j) point_sum[j] += pts[p][j];
    if (above.empty()) continue;  // p already in the hull (cannot happen for vertices)
    std::vector<Facet> fresh;
    for (auto& fa : above)
      for (auto& fb : below) {
        std::vector<int> ridge;
        std::set_intersection(fa.verts.begin(), fa.verts.end(), fb.verts.begin(),
                              fb.verts.end(), std::back_inserter(ridge));
        if (affine_rank_of(pts, ridge) != dim - 2) continue;
        ridge.push_back(p);
        // pick an affinely independent spanning subset of the ridge cone
        std::vector<int> idx;
        IntMat span;
        for (int i : ridge) {
          span.push_back(pts[i]);
          if (affine_rank(span) == static_cast<int>(idx.size()))
            idx.push_back(i);
          else
            span.pop_back();
        }
        if (static_cast<int>(idx.size()) != dim) throw std::logic_error("bad horizon ridge");
        fresh.push_back(hyperplane_through(pts, idx, point_sum, inserted.size()));
      }
    facets = std::move(below);
    for (auto& f : on) facets.push_back(std::move(f));
    for (auto& f : fresh) {
      bool dup = false;
      for (auto& g : facets)
        if (g.normal == f.normal && g.offset == f.offset) dup = true;
      if (!dup) facets.push_back(std::move(f));
    }
    refresh_verts(facets);
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.verts < b.verts; });
  return facets;
}

}  // namespace

int LatticePolytope::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

namespace {

// Convex hull input for the psi-exponent polytope of a graph model: one point
// per psi variable, coordinates the x-block exponents of its diagonal image.
LatticePolytope psi_polytope(const GraphModel& m) {
  auto map = diagonal_map(m);
  LatticePolytope p;
  std::vector<int> coord_of(m.full_ring->size(), -1);
  for (int r : m.block) {
    if (r == m.t_rank || r == m.s_rank) continue;
    coord_of[r] = static_cast<int>(p.coords.size());
    p.coords.push_back(m.full_ring->name(r));
  }
  p.ambient_dim = static_cast<int>(p.coords.size());
  for (int v = 0; v < m.graph_ring->size(); ++v) {
    if (m.gvars[v].xi) continue;
    IntVec pt(p.ambient_dim, Integer(0));
    for (auto& [r, e] : map.images[v].entries()) {
      if (r == m.t_rank) continue;
      pt[coord_of[r]] = e;
    }
    p.vertices.push_back(std::move(pt));
    p.labels.push_back(m.graph_ring->name(v));
  }
  check_distinct(p);
  p.dim = affine_rank(p.vertices);
  return p;
}

}  // namespace

LatticePolytope gt_vertices(int n) {
  if (n < 3) throw std::invalid_argument("gt_vertices needs n >= 3");
  return psi_polytope(make_graph_model(2, n, Chart::Permuted2n));
}

LatticePolytope fflv_vertices(int d, int n) {
  if (d < 1 || d >= n) throw std::invalid_argument("fflv_vertices needs 1 <= d < n");
  return psi_polytope(make_graph_model(d, n, Chart::Intro));
}

LatticePolytope cayley_sum(const LatticePolytope& p, const std::vector<int>& marked,
                           std::vector<std::string> lifted_labels) {
  if (marked.empty()) throw std::invalid_argument("cayley_sum needs marked vertices");
  if (!lifted_labels.empty() && lifted_labels.size() != marked.size())
    throw std::invalid_argument("one lifted label per marked vertex");
  LatticePolytope c;
  c.coords = p.coords;
  c.coords.push_back("h");
  c.ambient_dim = p.ambient_dim + 1;
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    IntVec v = p.vertices[i];
    v.push_back(0);
    c.vertices.push_back(std::move(v));
    c.labels.push_back(p.labels[i]);
  }
  for (size_t k = 0; k < marked.size(); ++k) {
    IntVec v = p.vertices.at(marked[k]);
    v.push_back(1);
    c.vertices.push_back(std::move(v));
    c.labels.push_back(lifted_labels.empty() ? p.labels[marked[k]] + "'" : lifted_labels[k]);
  }
  check_distinct(c);
  c.dim = affine_rank(c.vertices);
  return c;
}

LatticePolytope cayley_polytope(const GraphModel& m) {
  auto base = psi_polytope(m);
  std::vector<int> marked;
  std::vector<std::string> lifted;
  int next = 0;
  for (int v = 0; v < m.graph_ring->size(); ++v) {
    if (m.gvars[v].xi) continue;
    int partner = m.graph_rank_of(m.gvars[v].tuple, true);
    if (partner >= 0) {
      marked.push_back(next);
      lifted.push_back(m.graph_ring->name(partner));
    }
    ++next;
  }
  return cayley_sum(base, marked, std::move(lifted));
}

FaceLattice face_lattice(const LatticePolytope& p, double max_seconds) {
  Budget budget(max_seconds);
  auto pts = reduced_points(p);
  FaceLattice out;
  if (p.dim == 0) return out;
  auto facets = convex_hull(pts, budget);
  for (auto& f : facets) out.facet_supports.push_back(f.verts);
  // every face is the intersection of the facets containing it
  std::set<std::vector<int>> seen(out.facet_supports.begin(), out.facet_supports.end());
  std::vector<std::vector<int>> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    budget.check("face enumeration budget exceeded");
    auto s = std::move(queue.back());
    queue.pop_back();
    for (auto& f : out.facet_supports) {
      std::vector<int> t;
      std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(t));
      if (t.empty() || !seen.insert(t).second) continue;
      queue.push_back(std::move(t));
    }
  }
  out.faces_by_dim.assign(p.dim, Integer(0));
  for (auto& s : seen) {
    budget.check("face enumeration budget exceeded");
    out.faces_by_dim.at(affine_rank_of(pts, s)) += 1;
  }
  return out;
}

Integer normalized_volume(const LatticePolytope& p, const SimplicialComplex& tri) {
  auto pts = reduced_points(p);
  std::vector<int> vert_of;
  for (auto& name : tri.vertices) {
    int i = p.index_of(name);
    if (i < 0) throw std::invalid_argument("triangulation vertex is not a polytope point: " + name);
    vert_of.push_back(i);
  }
  for (auto& facet : tri.facets) {
    auto fail = [&] {
      std::string s = "non-unimodular facet: ";
      for (size_t i = 0; i < facet.size(); ++i)
        s += (i ? "," : "") + tri.vertices[facet[i]];
      throw std::invalid_argument(s);
    };
    if (static_cast<int>(facet.size()) != p.dim + 1) fail();
    IntMat rows;
    for (size_t i = 1; i < facet.size(); ++i) {
      IntVec d(pts[0].size());
      for (size_t j = 0; j < d.size(); ++j)
        d[j] = pts[vert_of[facet[i]]][j] - pts[vert_of[facet[0]]][j];
      rows.push_back(std::move(d));
    }
    Integer det = determinant(std::move(rows));
    if (det != 1 && det != -1) fail();
  }
  return Integer(static_cast<long>(tri.facets.size()));
}

Integer lattice_points(const LatticePolytope& p, int t) {
  if (t < 0) throw std::invalid_argument("lattice_points needs t >= 0");
  if (t == 0 || p.dim == 0) return 1;
  auto pts = reduced_points(p);
  auto facets = convex_hull(pts, Budget(0));
  int dim = p.dim;
  IntVec lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    lo[j] = hi[j] = pts[0][j];
    for (auto& v : pts) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
    lo[j] *= t;
    hi[j] *= t;
  }
  Integer box = 1;
  for (int j = 0; j < dim; ++j) box *= hi[j] - lo[j] + 1;
  if (box > 50000000) throw BudgetExceeded("lattice point bounding box too large");
  Integer count = 0;
  IntVec u = lo;
  while (true) {
    bool inside = true;
    for (auto& f : facets)
      if (dot(f.normal, u) > Integer(t) * f.offset) {
        inside = false;
        break;
      }
    if (inside) count += 1;
    int j = 0;
    while (j < dim && u[j] == hi[j]) u[j] = lo[j], ++j;
    if (j == dim) break;
    u[j] += 1;
  }
  return count;
}

std::string polytope_to_text(const LatticePolytope& p) {
  std::string s;
  for (auto& v : p.vertices) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) s += ' ';
      s += v[j].get_str();
    }
    s += '\n';
  }
  return s;
}

}  // namespace ccdeg
