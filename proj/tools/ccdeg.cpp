#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccdeg/complex.hpp"
#include "ccdeg/grassmann.hpp"
#include "ccdeg/io.hpp"
#include "ccdeg/polytope.hpp"
#include "ccdeg/poset.hpp"
#include "ccdeg/toric.hpp"
#include "json.hpp"

using namespace ccdeg;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes
constexpr int kOk = 0;
constexpr int kVerifyFail = 2;
constexpr int kBudget = 3;
constexpr int kBadInput = 4;

struct Options {
  int d = 2, n = 4, t = 1;
  uint64_t seed = 1;
  bool pretty = false;
  int threads = 1;
  double max_seconds = -1;
  long max_basis = -1;
  int degree_bound = -1;
  std::string cache_dir;
  std::string family, methods, file, out, what;
  bool khovanskii = false, volume = false, fvector = false, ehrhart = false;
  bool points = false, dot = false, vertices = false;

  BuchbergerLimits limits() const { return {degree_bound, max_basis, max_seconds}; }
};

std::string cache_root(const Options& o) {
  if (const char* env = std::getenv("CCDEG_CACHE")) return env;
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/ccdeg";
  return ".ccdeg-cache";
}

std::string content_hash(const std::string& key) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Session {
  Options opt;
  json job, results, provenance;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Session(const Options& o, const char* command) : opt(o) {
    job["command"] = command;
    provenance["version"] = kVersion;
    provenance["threads"] = o.threads;
    provenance["cache"] = {{"hits", json::array()}, {"misses", json::array()}};
  }

  void log(const std::string& msg) const { std::cerr << "ccdeg: " << msg << "\n"; }

  int emit(const char* schema, int code) {
    json report;
    report["schema"] = schema;
    report["job"] = job;
    report["results"] = results;
    provenance["timings"] = {
        {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count()}};
    report["provenance"] = provenance;
    std::cout << (opt.pretty ? report.dump(2) : report.dump()) << "\n";
    return code;
  }

  // Graph-ideal reduced GB with an on-disk cache keyed by the construction;
  // reloaded bases are re-verified with is_groebner before use.
  GraphIdealResult graph_ideal_cached(const GraphModel& m) {
    std::ostringstream key;
    key << "graph-ideal|d=" << m.d << "|n=" << m.n
        << "|chart=" << (m.chart == Chart::Intro ? "intro" : "permuted2n")
        << "|order=" << print_order(*m.graph_order, *m.graph_ring) << "|gens=minor-relations";
    auto dir = std::filesystem::path(cache_root(opt));
    auto path = dir / ("gb-" + content_hash(key.str()) + ".txt");
    std::ifstream in(path);
    if (in) {
      std::stringstream body;
      body << in.rdbuf();
      try {
        auto file = read_ideal_text(body.str());
        if (file.ring->names() == m.graph_ring->names() && file.has_order && file.reduced &&
            is_groebner(file.polys, m.graph_order).ok) {
          provenance["cache"]["hits"].push_back(path.filename().string());
          GraphIdealResult r;
          r.gb = {m.graph_ring, file.polys, m.graph_order, true, false};
          r.ideal = {m.graph_ring, std::move(file.polys)};
          return r;
        }
        log("cache entry failed verification, recomputing: " + path.string());
      } catch (const std::exception& e) {
        log(std::string("unreadable cache entry, recomputing: ") + e.what());
      }
    }
    provenance["cache"]["misses"].push_back(path.filename().string());
    auto r = graph_ideal(make_graph_model(m.d, m.n, m.chart), opt.limits());
    if (r.truncated) throw BudgetExceeded("graph ideal computation truncated");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(path);
    bool reduced = true;
    out << write_ideal_text(r.gb.elements, m.graph_ring, m.graph_order.get(), &reduced);
    return r;
  }
};

GraphModel model_for(int d, int n) {
  return make_graph_model(d, n, d == 2 ? Chart::Permuted2n : Chart::Intro);
}

json fvector_json(const std::vector<Integer>& f) {
  json a = json::array();
  for (auto& x : f) a.push_back(x.get_str());
  return a;
}

int cmd_degree(Session& s) {
  auto& o = s.opt;
  s.job["d"] = o.d;
  s.job["n"] = o.n;
  s.job["methods"] = o.methods;
  s.job["budget"] = {{"max_seconds", o.max_seconds}, {"max_basis", o.max_basis}};
  bool truncated = false;
  std::vector<std::string> values;
  s.results["methods"] = json::object();
  std::stringstream ms(o.methods);
  std::string name;
  while (std::getline(ms, name, ',')) {
    try {
      Integer deg;
      if (name == "chains") {
        deg = cc_degree(o.d, o.n, DegreeMethod::Chains);
      } else if (name == "groebner") {
        auto gi = s.graph_ideal_cached(model_for(o.d, o.n));
        deg = dim_degree(initial_ideal(gi.gb)).degree;
      } else if (name == "toric") {
        auto m = model_for(o.d, o.n);
        auto ti = toric_ideal(m, diagonal_map(m), ToricRoute::Elimination, o.limits());
        GroebnerBasis gb{m.graph_ring, ti.generators, m.graph_order, true, false};
        deg = dim_degree(initial_ideal(gb)).degree;
      } else {
        s.log("unknown method: " + name);
        return s.emit("ccdeg/degree-report/v1", kBadInput);
      }
      values.push_back(deg.get_str());
      s.results["methods"][name] = deg.get_str();
    } catch (const BudgetExceeded& e) {
      s.log(std::string("budget exceeded in ") + name + ": " + e.what());
      s.results["methods"][name] = nullptr;
      truncated = true;
    }
  }
  bool agree = !values.empty();
  for (auto& v : values) agree = agree && v == values.front();
  s.results["degree"] = values.empty() ? json(nullptr) : json(values.front());
  s.results["agreement"] = agree;
  s.results["truncated"] = truncated;
  if (truncated) return s.emit("ccdeg/degree-report/v1", kBudget);
  return s.emit("ccdeg/degree-report/v1", agree ? kOk : kVerifyFail);
}

int cmd_verify(Session& s) {
  auto& o = s.opt;
  const char* schema = "ccdeg/verify-report/v1";
  if (o.khovanskii) {
    s.job["check"] = "khovanskii";
    s.job["d"] = o.d;
    s.job["n"] = o.n;
    auto r = khovanskii_check(model_for(o.d, o.n), o.limits());
    s.results = json::parse(khovanskii_report_json(r));
    s.results["pass"] = r.ok();
    return s.emit(schema, r.ok() ? kOk : kVerifyFail);
  }
  std::vector<Polynomial> gens;
  OrderPtr order;
  if (!o.file.empty()) {
    s.job["check"] = "file";
    s.job["file"] = o.file;
    std::ifstream in(o.file);
    if (!in) {
      s.log("cannot read " + o.file);
      return s.emit(schema, kBadInput);
    }
    std::stringstream body;
    body << in.rdbuf();
    auto f = read_ideal_text(body.str());
    if (!f.has_order) {
      s.log("ideal file carries no order header");
      return s.emit(schema, kBadInput);
    }
    gens = std::move(f.polys);
    order = f.order;
  } else if (o.family == "lemma31") {
    s.job["check"] = "family";
    s.job["family"] = o.family;
    s.job["n"] = o.n;
    gens = lemma31_generators(o.n, termorder_2n_ring(o.n));
    order = termorder_2n(o.n);
  } else {
    s.log("verify needs --khovanskii, --family lemma31, or --file");
    return s.emit(schema, kBadInput);
  }
  auto cert = is_groebner(gens, order);
  s.results["groebner"] = cert.ok;
  s.results["generators"] = gens.size();
  json pairs = json::array();
  for (auto& [i, j] : cert.failing_pairs) {
    pairs.push_back({{"i", i},
                     {"j", j},
                     {"gen_i", print_polynomial(gens[i], order.get())},
                     {"gen_j", print_polynomial(gens[j], order.get())}});
  }
  s.results["failing_pairs"] = pairs;
  s.results["pass"] = cert.ok;
  return s.emit(schema, cert.ok ? kOk : kVerifyFail);
}

int cmd_polytope(Session& s) {
  auto& o = s.opt;
  const char* schema = "ccdeg/polytope-report/v1";
  s.job["family"] = o.family;
  s.job["n"] = o.n;
  bool cayley = o.family == "cgt" || o.family == "cfflv";
  bool gt_like = o.family == "cgt" || o.family == "gt";
  if (gt_like) o.d = 2;
  s.job["d"] = o.d;
  if (!cayley && o.family != "gt" && o.family != "fflv") {
    s.log("unknown family: " + o.family + " (expected gt, fflv, cgt, cfflv)");
    return s.emit(schema, kBadInput);
  }
  auto m = gt_like ? make_graph_model(2, o.n, Chart::Permuted2n)
                   : make_graph_model(o.d, o.n, Chart::Intro);
  auto p = cayley ? cayley_polytope(m) : (gt_like ? gt_vertices(o.n) : fflv_vertices(o.d, o.n));
  s.results["ambient_dim"] = p.ambient_dim;
  s.results["dim"] = p.dim;
  s.results["vertex_count"] = p.vertices.size();
  s.results["labels"] = p.labels;
  json verts = json::array();
  for (auto& v : p.vertices) {
    json row = json::array();
    for (auto& x : v) row.push_back(x.get_str());
    verts.push_back(row);
  }
  s.results["vertices"] = verts;
  if ((o.volume || o.ehrhart) && !cayley) {
    s.log("--volume/--ehrhart need a Cayley family (cgt, cfflv)");
    return s.emit(schema, kBadInput);
  }
  if (o.volume || o.ehrhart) {
    auto gi = s.graph_ideal_cached(m);
    auto tri = stanley_reisner(initial_ideal(gi.gb));
    if (o.volume) s.results["normalized_volume"] = normalized_volume(p, tri).get_str();
    if (o.ehrhart) {
      auto L = ehrhart_from_unimodular(tri);
      s.results["ehrhart"] = ehrhart_to_string(L);
      json coeffs = json::array();
      for (auto& c : L) coeffs.push_back(Rational(c).get_str());
      s.results["ehrhart_coefficients"] = coeffs;
    }
  }
  if (o.fvector) {
    try {
      auto fl = face_lattice(p, o.max_seconds > 0 ? o.max_seconds : 0.0);
      s.results["f_vector"] = fvector_json(fl.faces_by_dim);
      s.results["facets"] = fl.facet_supports.size();
    } catch (const BudgetExceeded& e) {
      s.log(std::string("face enumeration budget exceeded: ") + e.what());
      s.results["f_vector"] = nullptr;
      s.results["truncated"] = true;
      return s.emit(schema, kBudget);
    }
  }
  if (o.points) {
    s.job["t"] = o.t;
    s.results["lattice_points"] = lattice_points(p, o.t).get_str();
  }
  return s.emit(schema, kOk);
}

int cmd_posets(Session& s) {
  auto& o = s.opt;
  const char* schema = "ccdeg/poset-report/v1";
  s.job["family"] = o.family;
  s.job["n"] = o.n;
  Poset p;
  if (o.family == "p2n") {
    p = p2n_poset(o.n);
  } else if (o.family == "young") {
    p = young_poset(o.n);
  } else if (o.family == "pbw") {
    s.job["d"] = o.d;
    p = pbw_poset(o.d, o.n);
  } else {
    s.log("unknown family: " + o.family + " (expected p2n, young, pbw)");
    return s.emit(schema, kBadInput);
  }
  s.results["size"] = p.size();
  s.results["covers"] = p.covers.size();
  s.results["maximal_chains"] = count_maximal_chains(p).get_str();
  if (o.dot) s.results["dot"] = poset_to_dot(p);
  return s.emit(schema, kOk);
}

int cmd_solve_count(Session& s) {
  auto& o = s.opt;
  const char* schema = "ccdeg/solve-count-report/v1";
  s.job["d"] = o.d;
  s.job["n"] = o.n;
  s.job["seed"] = o.seed;
  std::vector<std::vector<Rational>> h;
  if (!o.file.empty()) {
    s.job["hamiltonian_file"] = o.file;
    std::ifstream in(o.file);
    if (!in) {
      s.log("cannot read " + o.file);
      return s.emit(schema, kBadInput);
    }
    std::stringstream body;
    body << in.rdbuf();
    h = read_matrix_text(body.str());
  } else {
    Integer size;
    mpz_bin_uiui(size.get_mpz_t(), o.n, o.d);
    h = random_hamiltonian(static_cast<int>(size.get_si()), o.seed);
  }
  s.results["hamiltonian"] = write_matrix_text(h);
  s.results["count"] = cc_solution_count(o.d, o.n, h, o.seed, o.limits()).get_str();
  return s.emit(schema, kOk);
}

int cmd_export(Session& s) {
  auto& o = s.opt;
  std::string text;
  if (o.what == "gb") {
    auto m = model_for(o.d, o.n);
    auto gi = s.graph_ideal_cached(m);
    bool reduced = true;
    text = write_ideal_text(gi.gb.elements, m.graph_ring, m.graph_order.get(), &reduced);
  } else if (o.what == "complex") {
    auto gi = s.graph_ideal_cached(model_for(o.d, o.n));
    text = complex_to_text(stanley_reisner(initial_ideal(gi.gb)));
  } else if (o.what == "poset") {
    text = poset_to_dot(o.d == 2 ? p2n_poset(o.n) : pbw_poset(o.d, o.n));
  } else if (o.what == "polytope") {
    text = polytope_to_text(cayley_polytope(model_for(o.d, o.n)));
  } else {
    s.log("unknown export target: " + o.what + " (expected gb, complex, poset, polytope)");
    return kBadInput;
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) {
      s.log("cannot write " + o.out);
      return kBadInput;
    }
    out << text;
    s.log("wrote " + o.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled-cluster degrees of Grassmannians: chains, Groebner, toric"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool wants_seed = false) {
    c->add_flag("--pretty", o.pretty, "indent the JSON report");
    c->add_option("--threads", o.threads, "internal parallelism bound")
        ->check(CLI::PositiveNumber);
    c->add_option("--max-seconds", o.max_seconds, "wall-clock budget");
    c->add_option("--max-basis", o.max_basis, "basis size budget");
    c->add_option("--degree-bound", o.degree_bound, "S-pair degree bound");
    c->add_option("--cache-dir", o.cache_dir, "Groebner cache directory (CCDEG_CACHE overrides)");
    if (wants_seed) c->add_option("--seed", o.seed, "random seed");
  };

  auto* degree = app.add_subcommand("degree", "degree of the CC variety by one or more methods");
  degree->add_option("--d", o.d, "rows of the Grassmannian")->required();
  degree->add_option("--n", o.n, "columns of the Grassmannian")->required();
  degree->add_option("--method", o.methods, "comma list of chains,groebner,toric")
      ->default_val("chains,groebner");
  add_common(degree);

  auto* verify = app.add_subcommand("verify", "certify a Groebner or Khovanskii-basis claim");
  verify->add_option("--family", o.family, "named generating family (lemma31)");
  verify->add_flag("--khovanskii", o.khovanskii, "run the Khovanskii-basis check");
  verify->add_option("--file", o.file, "ideal file with an order header");
  verify->add_option("--d", o.d, "rows");
  verify->add_option("--n", o.n, "columns");
  add_common(verify);

  auto* polytope = app.add_subcommand("polytope", "lattice polytopes of the degenerations");
  polytope->add_option("--family", o.family, "gt, fflv, cgt, or cfflv")->required();
  polytope->add_option("--d", o.d, "rows");
  polytope->add_option("--n", o.n, "columns")->required();
  polytope->add_flag("--volume", o.volume, "normalized volume via the SR triangulation");
  polytope->add_flag("--fvector", o.fvector, "full face lattice census");
  polytope->add_flag("--ehrhart", o.ehrhart, "Ehrhart polynomial via the SR triangulation");
  polytope->add_flag("--points", o.points, "count lattice points of the dilation");
  polytope->add_option("--t", o.t, "dilation factor for --points")->check(CLI::NonNegativeNumber);
  add_common(polytope);

  auto* posets = app.add_subcommand("posets", "degeneration posets and their chain counts");
  posets->add_option("--family", o.family, "p2n, young, or pbw")->required();
  posets->add_option("--n", o.n, "columns")->required();
  posets->add_option("--d", o.d, "rows (pbw only)");
  posets->add_flag("--dot", o.dot, "include the DOT Hasse diagram");
  add_common(posets);

  auto* solve = app.add_subcommand("solve-count", "solution count of the CC equations");
  solve->add_option("--d", o.d, "rows")->required();
  solve->add_option("--n", o.n, "columns")->required();
  solve->add_option("--hamiltonian", o.file, "Hamiltonian matrix file (default: seeded random)");
  add_common(solve, true);

  auto* exp = app.add_subcommand("export", "write a module artifact in its text format");
  exp->add_option("--what", o.what, "gb, complex, poset, or polytope")->required();
  exp->add_option("--d", o.d, "rows")->required();
  exp->add_option("--n", o.n, "columns")->required();
  exp->add_option("--out", o.out, "output file (default: stdout)");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kOk : kBadInput;
  }

  try {
    if (degree->parsed()) {
      Session s(o, "degree");
      return cmd_degree(s);
    }
    if (verify->parsed()) {
      Session s(o, "verify");
      return cmd_verify(s);
    }
    if (polytope->parsed()) {
      Session s(o, "polytope");
      return cmd_polytope(s);
    }
    if (posets->parsed()) {
      Session s(o, "posets");
      return cmd_posets(s);
    }
    if (solve->parsed()) {
      Session s(o, "solve-count");
      return cmd_solve_count(s);
    }
    Session s(o, "export");
    return cmd_export(s);
  } catch (const BudgetExceeded& e) {
    std::cerr << "ccdeg: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "ccdeg: " << e.what() << "\n";
    return kBadInput;
  }
}
