// Exercises the installed binary end to end; the binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "vct/generators.hpp"
#include "vct/graph.hpp"

namespace {

std::string g_binary;
std::string g_tmpdir;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = g_tmpdir + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("missing file exits 2") {
  auto res = run("kappa /no/such/file.el");
  CHECK(res.exit_code == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("check-k").exit_code == 1);
  auto graph = write_file("c5.el", vct::serialize_edge_list(vct::cycle_graph(5)));
  CHECK(run("check-k " + graph + " 2 --finder psychic").exit_code == 1);
}

TEST_CASE("kappa on petersen") {
  auto graph = write_file("petersen.el", vct::serialize_edge_list(vct::petersen_graph()));
  auto res = run("--json kappa " + graph + " --allpairs");
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.output);
  CHECK(doc["kappa"] == 3);
  CHECK(doc["separator"].size() == 3);

  auto exact = run("--json kappa " + graph + " --exact");
  REQUIRE(exact.exit_code == 0);
  CHECK(nlohmann::json::parse(exact.output)["kappa"] == 3);
}

TEST_CASE("kappa --exact refuses big graphs with exit 1") {
  auto graph = write_file("big.el", vct::serialize_edge_list(vct::cycle_graph(30)));
  CHECK(run("kappa " + graph + " --exact").exit_code == 1);
}

TEST_CASE("check-k outcomes and ledger") {
  auto graph = write_file("c5.el", vct::serialize_edge_list(vct::cycle_graph(5)));
  auto ok = run("--json check-k " + graph + " 2");
  REQUIRE(ok.exit_code == 0);
  auto ok_doc = nlohmann::json::parse(ok.output);
  CHECK(ok_doc["outcome"] == "k-connected");
  CHECK(ok_doc["ledger"]["calls"].get<long long>() > 0);

  auto cut = run("--json check-k " + graph + " 3");
  REQUIRE(cut.exit_code == 0);
  auto cut_doc = nlohmann::json::parse(cut.output);
  CHECK(cut_doc["outcome"] == "separator");
  CHECK(cut_doc["separator"].size() == 2);

  // human mode always prints the ledger line
  auto human = run("check-k " + graph + " 2");
  CHECK(human.output.find("flow calls:") != std::string::npos);
}

TEST_CASE("check-k on a generated barbell") {
  auto gen = run("gen --type barbell --clique 20 --bridge 3 --out " + g_tmpdir + "/barbell.el");
  REQUIRE(gen.exit_code == 0);
  auto res = run("--json check-k " + g_tmpdir + "/barbell.el 4");
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.output);
  CHECK(doc["outcome"] == "separator");
  CHECK(doc["separator"].size() == 3);
}

TEST_CASE("approx separator and complete graph") {
  auto bowtie = write_file("bowtie.el", vct::serialize_edge_list(vct::bowtie_graph()));
  auto res = run("--json approx " + bowtie + " 0.5");
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.output);
  CHECK(doc["outcome"] == "separator");
  CHECK(doc["separator"] == nlohmann::json::array({2}));

  auto k5 = write_file("k5.el", vct::serialize_edge_list(vct::complete_graph(5)));
  auto complete = run("--json approx " + k5 + " 0.5");
  REQUIRE(complete.exit_code == 0);
  auto cdoc = nlohmann::json::parse(complete.output);
  CHECK(cdoc["outcome"] == "complete");
  CHECK(cdoc["kappa"] == 4);
}

TEST_CASE("reduce emits separators and terminal sets") {
  auto bowtie = write_file("bowtie2.el", vct::serialize_edge_list(vct::bowtie_graph()));
  auto terms = write_file("terms.txt", "# corners\n0\n4\n");
  auto res = run("--json reduce " + bowtie + " " + terms + " 2");
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.output);
  CHECK(doc["outcome"] == "separator");
  CHECK(doc["separator"] == nlohmann::json::array({2}));

  auto k6 = write_file("k6.el", vct::serialize_edge_list(vct::complete_graph(6)));
  auto all = write_file("all6.txt", "0\n1\n2\n3\n4\n5\n");
  auto nores = run("--json reduce " + k6 + " " + all + " 3");
  REQUIRE(nores.exit_code == 0);
  auto ndoc = nlohmann::json::parse(nores.output);
  CHECK(ndoc["outcome"] == "new-terminals");
  CHECK(ndoc["new_terminals"].empty());

  auto bad_terms = write_file("bad_terms.txt", "0\n99\n");
  CHECK(run("reduce " + bowtie + " " + bad_terms + " 2").exit_code == 1);
}

TEST_CASE("bench runs a config and writes outputs") {
  auto config = write_file("bench.json", R"({
    "instances": [{"generator": "barbell", "clique": 10, "bridge": 2, "seeds": [0]}],
    "algorithms": [{"name": "check-k", "k": 3}]
  })");
  auto res = run("bench " + config + " --jsonl " + g_tmpdir + "/out.jsonl --csv " + g_tmpdir +
                 "/out.csv");
  REQUIRE(res.exit_code == 0);
  std::ifstream jsonl(g_tmpdir + "/out.jsonl");
  std::string line;
  REQUIRE(std::getline(jsonl, line));
  auto rec = nlohmann::json::parse(line);
  CHECK(rec["result_size"] == 2);
  std::ifstream csv(g_tmpdir + "/out.csv");
  std::string header;
  REQUIRE(std::getline(csv, header));
  CHECK(header == "instance,algo,n,m,param,result_size,flow_calls,instance_edges,wall_ms");

  auto bad = write_file("bad.json", R"({"algorithms": [{"name": "nope"}]})");
  CHECK(run("bench " + bad).exit_code == 1);
  CHECK(run("bench /no/such/config.json").exit_code == 2);
}

TEST_CASE("gen output parses back") {
  auto res = run("gen --type gnp --n 18 --p 0.4 --seed 5 --out " + g_tmpdir + "/gnp.el");
  REQUIRE(res.exit_code == 0);
  vct::Graph g = vct::load_graph_file(g_tmpdir + "/gnp.el");
  CHECK(g.n() == 18);
  CHECK(g.is_connected());
}

TEST_CASE("dimacs input is accepted") {
  std::string dimacs = "c tiny cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
  auto path = write_file("c5.dimacs", dimacs);
  auto res = run("--json kappa " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(nlohmann::json::parse(res.output)["kappa"] == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-vct-binary>\n");
    return 1;
  }
  g_binary = argv[1];
  char tmpl[] = "/tmp/vct-cli-XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::fprintf(stderr, "mkdtemp failed\n");
    return 1;
  }
  g_tmpdir = tmpl;
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
