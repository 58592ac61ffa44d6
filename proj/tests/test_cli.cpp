#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ccdeg/grassmann.hpp"
#include "ccdeg/io.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("CCDEG_BIN");
  REQUIRE(b != nullptr);
  return b;
}

RunResult run(const std::string& args, const std::string& cache = "") {
  std::string cmd = "CCDEG_CACHE=" + (cache.empty() ? std::string("/dev/null/none") : cache) +
                    " " + bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json payload(const RunResult& r) {
  auto j = json::parse(r.out);
  j.erase("provenance");
  return j;
}

std::string temp_dir() {
  char tmpl[] = "/tmp/ccdeg-cli-XXXXXX";
  char* d = mkdtemp(tmpl);
  REQUIRE(d != nullptr);
  return d;
}

}  // namespace

TEST_CASE("degree agreement across methods") {
  auto dir = temp_dir();
  auto r = run("degree --d 2 --n 6 --method chains,groebner,toric", dir);
  CHECK(r.code == 0);
  auto j = payload(r);
  CHECK(j["schema"] == "ccdeg/degree-report/v1");
  CHECK(j["results"]["degree"] == "83");
  CHECK(j["results"]["agreement"] == true);
  CHECK(j["results"]["methods"]["chains"] == "83");
  CHECK(j["results"]["methods"]["toric"] == "83");
}

TEST_CASE("degree by the closed chain formula at n=12") {
  auto r = run("degree --d 2 --n 12 --method chains");
  CHECK(r.code == 0);
  CHECK(payload(r)["results"]["degree"] == "117571");
}

TEST_CASE("degree of gr(3,6) by groebner and toric") {
  auto dir = temp_dir();
  auto r = run("degree --d 3 --n 6 --method groebner,toric", dir);
  CHECK(r.code == 0);
  CHECK(payload(r)["results"]["degree"] == "250");
}

TEST_CASE("unknown method is invalid input") {
  CHECK(run("degree --d 2 --n 4 --method magic").code == 4);
  CHECK(run("frobnicate").code == 4);
}

TEST_CASE("budget exhaustion reports truncation with exit 3") {
  auto dir = temp_dir();
  auto r = run("degree --d 3 --n 6 --method groebner --max-seconds 0.001", dir);
  CHECK(r.code == 3);
  auto j = payload(r);
  CHECK(j["results"]["truncated"] == true);
  CHECK(j["results"]["methods"]["groebner"].is_null());
}

TEST_CASE("verify lemma31 family") {
  auto r = run("verify --family lemma31 --n 5");
  CHECK(r.code == 0);
  auto j = payload(r);
  CHECK(j["results"]["pass"] == true);
  CHECK(j["results"]["generators"] == 31);
  CHECK(j["results"]["failing_pairs"].empty());
}

TEST_CASE("verify khovanskii certificate") {
  auto r = run("verify --khovanskii --d 2 --n 4");
  CHECK(r.code == 0);
  auto j = payload(r);
  CHECK(j["results"]["pass"] == true);
  CHECK(j["results"]["initial_equal"] == true);
  CHECK(j["results"]["lifts"].size() == 12);
}

TEST_CASE("verify a corrupted generator file names a failing s-pair") {
  using namespace ccdeg;
  auto ring = termorder_2n_ring(4);
  auto order = termorder_2n(4);
  auto gens = lemma31_generators(4, ring);
  gens.pop_back();  // no longer a Groebner basis
  auto dir = temp_dir();
  auto path = dir + "/broken.txt";
  std::ofstream(path) << write_ideal_text(gens, ring, order.get());
  auto r = run("verify --file " + path);
  CHECK(r.code == 2);
  auto j = payload(r);
  CHECK(j["results"]["pass"] == false);
  REQUIRE(!j["results"]["failing_pairs"].empty());
  CHECK(j["results"]["failing_pairs"][0].contains("gen_i"));
}

TEST_CASE("polytope report for cgt(2,4)") {
  auto dir = temp_dir();
  auto r = run("polytope --family cgt --n 4 --volume --ehrhart --fvector --points --t 2", dir);
  CHECK(r.code == 0);
  auto j = payload(r)["results"];
  CHECK(j["vertex_count"] == 11);
  CHECK(j["dim"] == 5);
  CHECK(j["normalized_volume"] == "9");
  CHECK(j["ehrhart"] == "(1/5!)(t+1)(t+2)(t+3)(9*t^2+26*t+20)");
  CHECK(j["f_vector"] == json({"11", "32", "42", "28", "9"}));
  CHECK(j["lattice_points"] == "54");
}

TEST_CASE("polytope volume of cfflv(3,6)") {
  auto dir = temp_dir();
  auto r = run("polytope --family cfflv --d 3 --n 6 --volume", dir);
  CHECK(r.code == 0);
  CHECK(payload(r)["results"]["normalized_volume"] == "250");
}

TEST_CASE("volume without a cayley family is invalid input") {
  CHECK(run("polytope --family gt --n 4 --volume").code == 4);
}

TEST_CASE("poset chain counts") {
  auto r = run("posets --family p2n --n 6");
  CHECK(r.code == 0);
  CHECK(payload(r)["results"]["maximal_chains"] == "83");
  auto r2 = run("posets --family pbw --d 3 --n 6 --dot");
  CHECK(r2.code == 0);
  auto j = payload(r2)["results"];
  CHECK(j["size"] == 20);
  CHECK(j["dot"].get<std::string>().find("digraph") == 0);
}

TEST_CASE("solve-count reproduces the cc solution count") {
  auto r = run("solve-count --d 2 --n 4 --seed 1");
  CHECK(r.code == 0);
  CHECK(payload(r)["results"]["count"] == "9");
}

TEST_CASE("exports use the owning module text formats") {
  auto dir = temp_dir();
  auto r = run("export --what complex --d 2 --n 4", dir);
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);  // one facet per line
  auto r2 = run("export --what polytope --d 2 --n 4 --out " + dir + "/p.txt", dir);
  CHECK(r2.code == 0);
  std::ifstream in(dir + "/p.txt");
  std::string first;
  std::getline(in, first);
  CHECK(first == "0 1 0 0 0");
  auto r3 = run("export --what gb --d 2 --n 4 --out " + dir + "/gb.txt", dir);
  CHECK(r3.code == 0);
  std::ifstream gb(dir + "/gb.txt");
  std::string header;
  std::getline(gb, header);
  CHECK(header.rfind("ring:", 0) == 0);
}

TEST_CASE("cache is reused, reverified, and survives corruption") {
  auto dir = temp_dir();
  auto first = run("degree --d 2 --n 5 --method groebner", dir);
  CHECK(first.code == 0);
  // exactly one cache file was written
  int files = 0;
  std::string path;
  for (auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    path = e.path().string();
  }
  REQUIRE(files == 1);
  auto second = run("degree --d 2 --n 5 --method groebner", dir);
  CHECK(second.code == 0);
  auto jp = json::parse(second.out);
  CHECK(jp["provenance"]["cache"]["hits"].size() == 1);
  CHECK(jp["provenance"]["cache"]["misses"].empty());
  // corrupt the cached basis: results must still be correct via recompute
  std::ofstream(path, std::ios::trunc) << "ring: a,b\na*b-1\n";
  auto third = run("degree --d 2 --n 5 --method groebner", dir);
  CHECK(third.code == 0);
  CHECK(payload(third)["results"]["degree"] == "27");
  CHECK(payload(first) == payload(third));
}

TEST_CASE("identical jobs emit byte-identical payloads") {
  auto dir = temp_dir();
  for (std::string job :
       {std::string("degree --d 2 --n 5 --method chains,groebner,toric"),
        std::string("solve-count --d 2 --n 4 --seed 7"),
        std::string("polytope --family cgt --n 5 --volume --fvector --ehrhart")}) {
    auto a = run(job, dir);  // cold cache
    auto b = run(job, dir);  // warm cache
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(payload(a).dump() == payload(b).dump());
  }
}

TEST_CASE("pretty output carries the same payload") {
  auto r = run("posets --family young --n 5");
  auto rp = run("posets --family young --n 5 --pretty");
  CHECK(r.code == 0);
  CHECK(rp.code == 0);
  CHECK(r.out != rp.out);
  CHECK(payload(r) == payload(rp));
}
