#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "metricgap/metricgap.hpp"

using namespace metricgap;
using nlohmann::json;

TEST_CASE("graph spec tokens build the named families") {
  CHECK(parse_graph_spec("K4").graph == complete(4));
  CHECK(parse_graph_spec("P3").graph == path(3));
  CHECK(parse_graph_spec("C5").graph == cycle(5));
  CHECK(parse_graph_spec("K4-e").graph == complete_minus_edge(4));
  CHECK(parse_graph_spec("K3,3").graph == complete_bipartite(3, 3));
  CHECK(parse_graph_spec("K2,4").graph == complete_bipartite(2, 4));
  CHECK(parse_graph_spec("K12").graph == complete(12));

  CHECK(parse_graph_spec("K4").kind == "complete");
  CHECK(parse_graph_spec("K3,3").params == std::vector<long long>{3, 3});
}

TEST_CASE("graph spec family form covers every generator") {
  CHECK(parse_graph_spec("family:dumbbell:6").graph == dumbbell(6));
  CHECK(parse_graph_spec("family:regularized_dumbbell:8").graph == regularized_dumbbell(8));
  CHECK(parse_graph_spec("family:complete_multipartite:2:3").graph == complete_multipartite(2, 3));
  CHECK(parse_graph_spec("family:balanced_bipartite_plus_matching:4").graph ==
        balanced_bipartite_plus_matching(4));
  CHECK(parse_graph_spec("family:balanced_bipartite_plus_edge:3").graph ==
        balanced_bipartite_plus_edge(3));
  CHECK(parse_graph_spec("family:red_clique_bipartite:16:8").graph == red_clique_bipartite(16, 8));
  CHECK(parse_graph_spec("family:cycle_plus_diameters:6").graph == cycle_plus_diameters(6));
  CHECK(parse_graph_spec("family:complete_minus_matching:6").graph == complete_minus_matching(6));

  CHECK_THROWS_AS(parse_graph_spec("family:bogus:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("family:dumbbell:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("family:dumbbell"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("family::3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("K0"), std::invalid_argument);
}

TEST_CASE("graph spec falls back to json, files, then graph6") {
  Graph g = parse_graph_spec(R"({"n": 3, "edges": [[0,1],[1,2]]})").graph;
  CHECK(g == path(3));

  std::string g6 = to_graph6(cycle(5));
  CHECK(parse_graph_spec(g6).graph == cycle(5));

  const char* path_g6 = "harness_spec_test.g6";
  {
    std::ofstream out(path_g6);
    out << g6 << "\n";
  }
  CHECK(parse_graph_spec(path_g6).graph == cycle(5));
  CHECK(parse_graph_spec(path_g6).kind == "file");
  std::remove(path_g6);

  const char* path_json = "harness_spec_test.json";
  {
    std::ofstream out(path_json);
    out << R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[0,3]]})";
  }
  CHECK(parse_graph_spec(path_json).graph == cycle(4));
  std::remove(path_json);
}

TEST_CASE("exhaustive corpus has the known connected counts") {
  CHECK(exhaustive_corpus(4, true).size() == 38);
  CHECK(exhaustive_corpus(4, false).size() == 64);
  CHECK(exhaustive_corpus(5, true).size() == 728);
  CHECK_THROWS_AS(exhaustive_corpus(7, true), std::invalid_argument);

  for (const CorpusEntry& e : exhaustive_corpus(3, false)) {
    CHECK(parse_graph6(e.id) == e.graph);
  }
}

TEST_CASE("random corpus is seeded and respects its filters") {
  auto a = random_corpus(7, 30, 0.5, 99, true);
  auto b = random_corpus(7, 30, 0.5, 99, true);
  REQUIRE(a.size() == 30);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph == b[i].graph);
    CHECK(a[i].graph.is_connected());
    CHECK(a[i].graph.vertex_count() == 7);
  }
  auto c = random_corpus(7, 30, 0.5, 100, true);
  bool any_differ = false;
  for (std::size_t i = 0; i < c.size(); ++i) any_differ = any_differ || !(a[i].graph == c[i].graph);
  CHECK(any_differ);

  auto empty = random_corpus(5, 4, 0.0, 1, false);
  for (const auto& e : empty) CHECK(e.graph.edge_count() == 0);
  auto full = random_corpus(5, 4, 1.0, 1, false);
  for (const auto& e : full) CHECK(e.graph.is_complete());
  CHECK_THROWS_AS(random_corpus(5, 4, 0.0, 1, true), std::invalid_argument);
}

TEST_CASE("family corpus ids round trip through the spec parser") {
  auto fams = family_corpus();
  CHECK(fams.size() >= 30);
  bool has_red = false;
  for (const CorpusEntry& e : fams) {
    CHECK(parse_graph_spec(e.id).graph == e.graph);
    if (e.kind == "red_clique_bipartite") {
      has_red = true;
      CHECK(e.graph.vertex_count() == 32);
    }
  }
  CHECK(has_red);
}

TEST_CASE("target lists split on commas but keep bipartite tokens") {
  auto ts = parse_target_list("K2,P3,K3,3,C4");
  REQUIRE(ts.size() == 4);
  CHECK(ts[0].graph == complete(2));
  CHECK(ts[1].graph == path(3));
  CHECK(ts[2].graph == complete_bipartite(3, 3));
  CHECK(ts[3].graph == cycle(4));
  CHECK_THROWS_AS(parse_target_list(" , "), std::invalid_argument);
}

TEST_CASE("gap cache memoizes and degrades budget and undefined to states") {
  SearchOptions opts;
  GapCache cache(opts);
  const auto& e1 = cache.lambda(path(3), complete(2));
  REQUIRE(e1.state == GapCache::State::ok);
  CHECK(e1.value == Rational(BigInt(4), BigInt(3)));
  const auto& e2 = cache.lambda(path(3), complete(2));
  CHECK(&e1 == &e2);

  SearchOptions tiny;
  tiny.budget = 3;
  GapCache small(tiny);
  CHECK(small.lambda(complete_bipartite(3, 3), complete(2)).state == GapCache::State::budget);

  CHECK(cache.lambda(Graph(2), complete(2)).state == GapCache::State::undefined);
}

TEST_CASE("verification campaign over small corpora finds no failures") {
  auto corpus = exhaustive_corpus(4, false);
  auto targets = parse_target_list("K2,P3,K3");
  CampaignReport rep = run_verification(corpus, targets);

  CHECK(rep.summary().fails == 0);
  CHECK(rep.summary().checks == static_cast<long long>(rep.records.size()));
  CHECK(rep.failures().empty());

  bool saw_disconnected_na = false;
  bool saw_chain = false;
  bool saw_regular = false;
  bool saw_swap = false;
  bool saw_subgraph = false;
  bool saw_edge_addition = false;
  for (const CheckRecord& r : rep.records) {
    if (r.check == "naive_lower" && r.status == BoundStatus::not_applicable &&
        r.note == "disconnected source")
      saw_disconnected_na = true;
    if (r.check == "clique_chain" && r.status == BoundStatus::holds) saw_chain = true;
    if (r.check == "regular_supergraph_window" && r.status == BoundStatus::holds)
      saw_regular = true;
    if (r.check == "target_swap_window" && r.status == BoundStatus::holds) saw_swap = true;
    if (r.check == "subgraph_target_upper" && r.status == BoundStatus::holds) saw_subgraph = true;
    if (r.check == "edge_addition_window" && r.status == BoundStatus::holds)
      saw_edge_addition = true;
  }
  CHECK(saw_disconnected_na);
  CHECK(saw_chain);
  CHECK(saw_regular);
  CHECK(saw_swap);
  CHECK(saw_subgraph);
  CHECK(saw_edge_addition);
}

TEST_CASE("campaign respects the budget by recording skips") {
  SearchOptions tiny;
  tiny.budget = 10;
  CampaignOptions copt;
  copt.search = tiny;
  auto corpus = exhaustive_corpus(4, true);
  auto targets = parse_target_list("K2");
  CampaignReport rep = run_verification(corpus, targets, copt);
  CHECK(rep.summary().fails == 0);
  bool saw_budget_na = false;
  for (const CheckRecord& r : rep.records)
    if (r.check == "gap" && r.status == BoundStatus::not_applicable) saw_budget_na = true;
  CHECK(saw_budget_na);
}

TEST_CASE("family identities report through the campaign") {
  auto corpus = family_corpus();
  std::vector<CorpusEntry> small;
  for (const CorpusEntry& e : corpus) {
    if (e.kind == "complete_multipartite" || e.kind == "complete_minus_edge" ||
        (e.kind == "dumbbell" && e.graph.vertex_count() <= 8) ||
        e.kind == "red_clique_bipartite" || e.kind == "balanced_bipartite_plus_edge")
      small.push_back(e);
  }
  auto targets = parse_target_list("K2");
  CampaignReport rep = run_verification(small, targets);
  CHECK(rep.summary().fails == 0);

  int identities = 0, windows = 0, decays = 0;
  bool red_witness = false, drop = false, trend = false;
  for (const CheckRecord& r : rep.records) {
    if (r.check == "multipartite_identity" && r.status == BoundStatus::holds) ++identities;
    if (r.check == "near_complete_lower" || r.check == "near_complete_upper") ++windows;
    if (r.check == "dumbbell_decay" && r.status == BoundStatus::holds) ++decays;
    if (r.check == "red_clique_witness" && r.status == BoundStatus::holds) red_witness = true;
    if (r.check == "bipartite_plus_edge_drop" && r.status == BoundStatus::holds) drop = true;
    if (r.check == "near_complete_trend" && r.status == BoundStatus::holds) trend = true;
  }
  CHECK(identities == 3);
  CHECK(windows == 10);  // five near-complete sizes, two sides each
  CHECK(decays == 2);
  CHECK(red_witness);
  CHECK(drop);
  CHECK(trend);
}

TEST_CASE("campaign serialization carries rationals as digit strings") {
  auto corpus = exhaustive_corpus(3, true);
  auto targets = parse_target_list("K2");
  CampaignReport rep = run_verification(corpus, targets);
  rep.corpus = "exhaustive n=3 connected";

  nlohmann::ordered_json j = to_json(rep);
  CHECK(j["summary"]["checks"].get<long long>() == static_cast<long long>(rep.records.size()));
  CHECK(j["records"].size() == rep.records.size());
  bool saw_string_rational = false;
  for (const auto& r : j["records"]) {
    if (!r["bound"].is_null()) {
      CHECK(r["bound"]["num"].is_string());
      CHECK(r["bound"]["den"].is_string());
      saw_string_rational = true;
    }
  }
  CHECK(saw_string_rational);

  std::string csv = to_csv(rep);
  CHECK(csv.rfind("check,g,h,status,bound,subject,note,runtime_ms\n", 0) == 0);
  long long lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == static_cast<long long>(rep.records.size()) + 1);
}

TEST_CASE("monotonic scan finds witnesses in both directions") {
  auto corpus = exhaustive_corpus(4, true);
  auto targets = parse_target_list("K2");
  MonotonicReport rep = search_monotonic(corpus, targets);
  CHECK(rep.comparisons == 84);
  CHECK(!rep.decreases.empty());
  CHECK(!rep.increases.empty());
  for (const MonotonicWitness& w : rep.decreases) CHECK(w.after < w.before);
  for (const MonotonicWitness& w : rep.increases) CHECK(w.after > w.before);
}

TEST_CASE("chain from the balanced bipartite graph shows both directions") {
  std::vector<CorpusEntry> corpus = {parse_graph_spec("K3,3")};
  auto targets = parse_target_list("K2");
  MonotonicOptions mopt;
  mopt.source_edges = false;
  mopt.target_edges = false;
  mopt.chain_to_complete = true;
  MonotonicReport rep = search_monotonic(corpus, targets, mopt);

  bool first_drop = false;
  for (const MonotonicWitness& w : rep.decreases) {
    if (w.before_id == "K3,3" && w.before == Rational(1) &&
        w.after == Rational(BigInt(20), BigInt(21)))
      first_drop = true;
  }
  CHECK(first_drop);
  CHECK(!rep.increases.empty());  // the chain ends at lambda(K6,K2) = 6/5 > 1
}

TEST_CASE("target side witnesses cover the non monotone triple") {
  std::vector<CorpusEntry> corpus = {parse_graph_spec("K3,3")};
  auto targets = parse_target_list("K4-e,K4");
  MonotonicOptions mopt;
  mopt.source_edges = false;
  MonotonicReport rep = search_monotonic(corpus, targets, mopt);
  bool triple = false;
  for (const MonotonicWitness& w : rep.increases) {
    if (w.side == "target" && w.before == Rational(BigInt(14), BigInt(15)) &&
        w.after == Rational(1))
      triple = true;
  }
  CHECK(triple);
}

TEST_CASE("worked examples all reproduce") {
  auto rows = run_worked_examples();
  CHECK(rows.size() >= 25);
  for (const ExampleRow& r : rows) {
    INFO(r.name << " expected " << r.expected << " got " << r.computed);
    CHECK(r.match);
  }
}

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(METRICGAP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("cli compute emits the frozen record") {
  CliResult r = run_cli("compute --g P3 --h K2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"lambda\":{\"num\":\"4\",\"den\":\"3\"},\"witness\":[0,0,1],"
        "\"evaluated\":3,\"skipped_zero_denominator\":0}\n");

  CliResult worked = run_cli("compute --g K3,3 --h K4-e");
  CHECK(worked.exit_code == 0);
  json j = json::parse(worked.out);
  CHECK(j["lambda"]["num"] == "14");
  CHECK(j["lambda"]["den"] == "15");
  CHECK(j["evaluated"].get<long long>() == 2046);
}

TEST_CASE("cli exit codes distinguish failure classes") {
  CHECK(run_cli("compute --g P3 --h K2").exit_code == 0);

  CliResult budget = run_cli("compute --g K3,3 --h K2 --budget 3");
  CHECK(budget.exit_code == 3);
  json jb = json::parse(budget.out);
  CHECK(jb["error"] == "budget exceeded");
  CHECK(jb["partial_upper_bound"]["num"] == "6");
  CHECK(jb["partial_upper_bound"]["den"] == "5");

  CliResult undefined = run_cli("compute --g A? --h K2");
  CHECK(undefined.exit_code == 4);
  CHECK(json::parse(undefined.out)["error"] == "undefined gap");

  CHECK(run_cli("compute --g 'ZZ##' --h K2").exit_code == 2);
  CHECK(run_cli("compute --g P3").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("compute --g P3 --h K2 --bogus-flag").exit_code == 2);
}

TEST_CASE("cli verify over the seeded random corpus is deterministic") {
  CliResult r = run_cli("verify --random 7 200 0.5 --seed 7 --h K2 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("checks=2200 holds=2000 fails=0 not_applicable=200") != std::string::npos);
}

TEST_CASE("cli verify writes reports to disk") {
  const char* json_path = "harness_verify_out.json";
  const char* csv_path = "harness_verify_out.csv";
  CliResult r = run_cli(std::string("verify --exhaustive 3 --h K2 --quiet --out ") + json_path +
                        " --csv " + csv_path);
  CHECK(r.exit_code == 0);
  {
    std::ifstream in(json_path);
    REQUIRE(in.good());
    json j = json::parse(in);
    CHECK(j["summary"]["fails"].get<long long>() == 0);
    CHECK(j["records"].size() > 0);
  }
  {
    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "check,g,h,status,bound,subject,note,runtime_ms");
  }
  std::remove(json_path);
  std::remove(csv_path);
}

TEST_CASE("cli spectrum and embed emit parseable records") {
  CliResult spec = run_cli("spectrum --g K5");
  CHECK(spec.exit_code == 0);
  json js = json::parse(spec.out);
  CHECK(js["eigenvalues"].size() == 5);
  CHECK(std::fabs(js["lambda1"].get<double>() - 1.25) < 1e-9);
  CHECK(js["residual"].get<double>() < 1e-8);

  CliResult emb = run_cli("embed --g C5 --seed 7 --relate K3");
  CHECK(emb.exit_code == 0);
  json je = json::parse(emb.out);
  CHECK(je["dimension"].get<int>() == 9);
  CHECK(je["points"].size() == 5);
  CHECK(je["distortion_l1"]["expansion"]["num"] == "7");
  CHECK(je["distortion_l1"]["expansion"]["den"] == "1");
  CHECK(je["relate"]["lambda"]["num"] == "5");
  CHECK(je["relate"]["lambda"]["den"] == "6");
  CHECK(je["relate"]["ratio"].get<double>() > 0.0);

  CliResult disconnected = run_cli("embed --g A?");
  CHECK(disconnected.exit_code == 2);
}

TEST_CASE("cli examples and search-monotonic round trip") {
  CliResult ex = run_cli("examples --json");
  CHECK(ex.exit_code == 0);
  json j = json::parse(ex.out);
  CHECK(j["matched"] == j["total"]);
  CHECK(j["total"].get<int>() >= 25);

  CliResult mono = run_cli("search-monotonic --exhaustive 4 --h K2 --max-witnesses 3");
  CHECK(mono.exit_code == 0);
  json jm = json::parse(mono.out);
  CHECK(jm["comparisons"].get<long long>() == 84);
  CHECK(jm["decreases"].size() >= 1);
  CHECK(jm["increases"].size() >= 1);
}
