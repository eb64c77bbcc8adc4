// Command line front end: exact gap computations, spectral gaps, bound
// verification campaigns, monotonicity scans, metric embeddings, and the
// worked-example table.
//
// Exit codes: 0 success, 1 a checked claim failed, 2 bad input,
// 3 enumeration budget exceeded, 4 the gap is undefined for the inputs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metricgap/metricgap.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUndefined = 4;

struct CorpusFlags {
  int exhaustive_n = 0;
  bool families = false;
  std::vector<double> random_args;  // n count p
  bool include_disconnected = false;
  std::uint64_t seed = 1;
};

void attach_corpus_flags(CLI::App* cmd, CorpusFlags& flags) {
  cmd->add_option("--exhaustive", flags.exhaustive_n,
                  "all labeled graphs on N vertices (N <= 6)");
  cmd->add_flag("--families", flags.families, "curated parametric families");
  cmd->add_option("--random", flags.random_args,
                  "random graphs: N COUNT EDGE_PROB")
      ->expected(3);
  cmd->add_flag("--all", flags.include_disconnected,
                "keep disconnected graphs in the corpus");
  cmd->add_option("--seed", flags.seed, "seed for the random corpus");
}

metricgap::CorpusSpec corpus_from_flags(const CorpusFlags& flags, std::string& description) {
  metricgap::CorpusSpec spec;
  spec.connected_only = !flags.include_disconnected;
  int chosen = (flags.exhaustive_n > 0 ? 1 : 0) + (flags.families ? 1 : 0) +
               (flags.random_args.empty() ? 0 : 1);
  if (chosen > 1) throw std::invalid_argument("pick one of --exhaustive, --families, --random");
  if (flags.families) {
    spec.mode = metricgap::CorpusSpec::Mode::families;
    description = "families";
  } else if (!flags.random_args.empty()) {
    spec.mode = metricgap::CorpusSpec::Mode::random;
    spec.n = static_cast<int>(flags.random_args[0]);
    spec.count = static_cast<int>(flags.random_args[1]);
    spec.edge_prob = flags.random_args[2];
    spec.seed = flags.seed;
    description = "random n=" + std::to_string(spec.n) + " count=" + std::to_string(spec.count) +
                  " p=" + std::to_string(spec.edge_prob) + " seed=" + std::to_string(spec.seed);
  } else {
    spec.mode = metricgap::CorpusSpec::Mode::exhaustive;
    spec.n = flags.exhaustive_n > 0 ? flags.exhaustive_n : 4;
    description = "exhaustive n=" + std::to_string(spec.n);
  }
  if (spec.mode != metricgap::CorpusSpec::Mode::families) {
    description += spec.connected_only ? " connected" : " all";
  }
  return spec;
}

std::vector<metricgap::CorpusEntry> targets_from_flags(const std::vector<std::string>& hs) {
  std::string joined;
  for (const std::string& s : hs) {
    if (!joined.empty()) joined += ",";
    joined += s;
  }
  if (joined.empty()) joined = "K2,P3,K3,C4,P4,K4,K4-e";
  return metricgap::parse_target_list(joined);
}

ordered_json rational_json(const metricgap::Rational& r) {
  return metricgap::rational_to_json(r);
}

ordered_json distortion_json(const metricgap::DistortionReport& d) {
  ordered_json j;
  j["expansion"] = rational_json(d.expansion);
  if (d.contraction_finite) {
    j["contraction"] = rational_json(d.contraction);
    j["distortion"] = rational_json(d.distortion);
  } else {
    j["contraction"] = nullptr;
    j["distortion"] = nullptr;
  }
  j["contraction_finite"] = d.contraction_finite;
  return j;
}

int run_compute(const std::string& g_spec, const std::string& h_spec,
                const metricgap::SearchOptions& opts) {
  metricgap::Graph g = metricgap::parse_graph_spec(g_spec).graph;
  metricgap::Graph h = metricgap::parse_graph_spec(h_spec).graph;
  try {
    metricgap::GapResult res = metricgap::lambda_exact(g, h, opts);
    ordered_json j;
    j["lambda"] = rational_json(res.value);
    j["witness"] = res.witness.image;
    j["evaluated"] = res.assignments_evaluated;
    j["skipped_zero_denominator"] = res.assignments_skipped_zero_denominator;
    std::cout << j.dump() << "\n";
    return kExitOk;
  } catch (const metricgap::budget_exceeded_error& e) {
    ordered_json j;
    j["error"] = "budget exceeded";
    j["detail"] = e.what();
    j["partial_upper_bound"] =
        e.partial_upper_bound ? rational_json(*e.partial_upper_bound) : ordered_json(nullptr);
    std::cout << j.dump() << "\n";
    return kExitBudget;
  } catch (const metricgap::undefined_gap_error& e) {
    ordered_json j;
    j["error"] = "undefined gap";
    j["detail"] = e.what();
    std::cout << j.dump() << "\n";
    return kExitUndefined;
  }
}

int run_spectrum(const std::string& g_spec) {
  metricgap::Graph g = metricgap::parse_graph_spec(g_spec).graph;
  metricgap::SpectralResult res = metricgap::lambda_R(g);
  ordered_json j;
  j["eigenvalues"] = res.eigenvalues;
  j["lambda1"] = res.lambda1;
  j["residual"] = res.residual;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_verify(const CorpusFlags& cflags, const std::vector<std::string>& hs,
               const metricgap::CampaignOptions& copt, const std::string& out_path,
               const std::string& csv_path, bool quiet) {
  std::string description;
  metricgap::CorpusSpec spec = corpus_from_flags(cflags, description);
  std::vector<metricgap::CorpusEntry> corpus = metricgap::build_corpus(spec);
  std::vector<metricgap::CorpusEntry> targets = targets_from_flags(hs);

  metricgap::CampaignReport rep = metricgap::run_verification(corpus, targets, copt);
  rep.corpus = description;

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write: " + out_path);
    out << metricgap::to_json(rep).dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::invalid_argument("cannot write: " + csv_path);
    out << metricgap::to_csv(rep);
  }

  metricgap::CampaignSummary s = rep.summary();
  std::cout << "corpus: " << description << " (" << corpus.size() << " graphs, "
            << targets.size() << " targets)\n";
  std::cout << "checks=" << s.checks << " holds=" << s.holds << " fails=" << s.fails
            << " not_applicable=" << s.not_applicable << "\n";
  if (!quiet) {
    int shown = 0;
    for (const metricgap::CheckRecord* r : rep.failures()) {
      if (shown++ >= 20) {
        std::cout << "  ... more failures omitted\n";
        break;
      }
      std::cout << "  FAIL " << r->check << " g=" << r->g_id << " h=" << r->h_id
                << (r->note.empty() ? "" : " (" + r->note + ")") << "\n";
    }
  }
  return s.fails == 0 ? kExitOk : kExitCheckFailed;
}

int run_search_monotonic(const CorpusFlags& cflags, const std::vector<std::string>& hs,
                         const metricgap::MonotonicOptions& mopt,
                         const metricgap::SearchOptions& sopt) {
  std::string description;
  metricgap::CorpusSpec spec = corpus_from_flags(cflags, description);
  std::vector<metricgap::CorpusEntry> corpus = metricgap::build_corpus(spec);
  std::vector<metricgap::CorpusEntry> targets = targets_from_flags(hs);
  metricgap::MonotonicReport rep = metricgap::search_monotonic(corpus, targets, mopt, sopt);
  ordered_json j = metricgap::to_json(rep);
  j["corpus"] = description;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_embed(const std::string& g_spec, std::uint64_t seed, const std::string& relate_spec,
              const metricgap::SearchOptions& opts) {
  metricgap::Graph g = metricgap::parse_graph_spec(g_spec).graph;
  metricgap::DistanceMatrix dm = metricgap::apsp(g);
  metricgap::EmbeddingResult emb = metricgap::bourgain_embed(dm, seed);
  metricgap::DistortionPair dist = metricgap::distortion(dm, emb);

  ordered_json j;
  j["points"] = emb.points;
  j["dimension"] = emb.dimension;
  j["scales"] = emb.scales;
  j["reps"] = emb.reps;
  j["seed"] = emb.seed;
  j["distortion_l1"] = distortion_json(dist.l1);
  j["distortion_line"] = distortion_json(dist.line);

  if (!relate_spec.empty()) {
    metricgap::Graph h = metricgap::parse_graph_spec(relate_spec).graph;
    metricgap::RelateRecord rec = metricgap::relate_to_R_report(g, h, opts);
    ordered_json rj;
    rj["lambda"] = rational_json(rec.lambda_gh);
    rj["lambda_r"] = rec.lambda_r;
    rj["target_points"] = rec.k;
    rj["ratio"] = rec.ratio;
    j["relate"] = std::move(rj);
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_examples(bool as_json, const metricgap::SearchOptions& opts) {
  std::vector<metricgap::ExampleRow> rows = metricgap::run_worked_examples(opts);
  int matched = 0;
  for (const metricgap::ExampleRow& r : rows) matched += r.match ? 1 : 0;
  if (as_json) {
    ordered_json j;
    j["rows"] = metricgap::to_json(rows);
    j["matched"] = matched;
    j["total"] = static_cast<long long>(rows.size());
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t name_w = 4, exp_w = 8;
    for (const metricgap::ExampleRow& r : rows) {
      name_w = std::max(name_w, r.name.size());
      exp_w = std::max(exp_w, r.expected.size());
    }
    for (const metricgap::ExampleRow& r : rows) {
      std::printf("%-*s  %-*s  %-14s  %s\n", static_cast<int>(name_w), r.name.c_str(),
                  static_cast<int>(exp_w), r.expected.c_str(), r.computed.c_str(),
                  r.match ? "ok" : "MISMATCH");
    }
    std::printf("%d/%zu matched\n", matched, rows.size());
  }
  return matched == static_cast<int>(rows.size()) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric-space spectral gap toolkit"};
  app.require_subcommand(1);
  // --h is a real option on several subcommands, so help is --help only
  app.set_help_flag("--help", "print help and exit");

  metricgap::SearchOptions sopts;
  app.add_option("--budget", sopts.budget, "assignment enumeration budget")->capture_default_str();
  app.add_option("--workers", sopts.workers, "worker threads for the scan")->capture_default_str();
  bool no_prune = false;
  app.add_flag("--no-prune", no_prune, "disable symmetry pruning of the target");

  std::string g_spec, h_spec;
  auto* compute = app.add_subcommand("compute", "exact gap of one graph into another");
  compute->set_help_flag("--help", "print help and exit");
  compute->add_option("--g", g_spec, "source graph spec")->required();
  compute->add_option("--h", h_spec, "target graph spec")->required();

  std::string spec_g2;
  auto* spectrum = app.add_subcommand("spectrum", "normalized Laplacian spectrum and lambda_R");
  spectrum->set_help_flag("--help", "print help and exit");
  spectrum->add_option("--g", spec_g2, "graph spec")->required();

  CorpusFlags vflags;
  std::vector<std::string> vh;
  metricgap::CampaignOptions copt;
  std::string out_path, csv_path;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "run every closed-form check over a corpus");
  verify->set_help_flag("--help", "print help and exit");
  attach_corpus_flags(verify, vflags);
  verify->add_option("--h", vh, "target list, comma separated or repeated");
  verify->add_option("--out", out_path, "write the full JSON report here");
  verify->add_option("--csv", csv_path, "write the CSV report here");
  verify->add_option("--denominator-samples", copt.denominator_samples,
                     "sampled assignments per denominator window")
      ->capture_default_str();
  verify->add_option("--chain-max", copt.chain_max, "largest complete target in the chain check")
      ->capture_default_str();
  verify->add_flag("--skip-edge-additions", [&copt](std::int64_t) { copt.edge_additions = false; },
                   "skip the edge addition windows");
  verify->add_flag("--skip-target-swaps", [&copt](std::int64_t) { copt.target_swaps = false; },
                   "skip the target swap windows");
  verify->add_flag("--quiet", quiet, "print the summary only");

  CorpusFlags mflags;
  std::vector<std::string> mh;
  metricgap::MonotonicOptions mopt;
  auto* mono = app.add_subcommand("search-monotonic",
                                  "collect gap increase and decrease witnesses under edge additions");
  mono->set_help_flag("--help", "print help and exit");
  attach_corpus_flags(mono, mflags);
  mono->add_option("--h", mh, "target list, comma separated or repeated");
  mono->add_flag("--chain-to-complete", mopt.chain_to_complete,
                 "follow each graph up to the complete graph");
  mono->add_option("--max-witnesses", mopt.max_witnesses, "cap per direction")
      ->capture_default_str();

  std::string embed_g, relate_spec;
  std::uint64_t embed_seed = 1;
  auto* embed = app.add_subcommand("embed", "integer Frechet style embedding of the path metric");
  embed->set_help_flag("--help", "print help and exit");
  embed->add_option("--g", embed_g, "graph spec")->required();
  embed->add_option("--seed", embed_seed, "embedding seed")->capture_default_str();
  embed->add_option("--relate", relate_spec,
                    "also relate the exact gap into this target with the classical gap");

  bool examples_json = false;
  auto* examples = app.add_subcommand("examples", "recompute the worked examples table");
  examples->set_help_flag("--help", "print help and exit");
  examples->add_flag("--json", examples_json, "emit JSON instead of the table");

  for (CLI::App* sub : {compute, spectrum, verify, mono, embed, examples}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  sopts.orbit_pruning = !no_prune;

  try {
    if (compute->parsed()) return run_compute(g_spec, h_spec, sopts);
    if (spectrum->parsed()) return run_spectrum(spec_g2);
    if (verify->parsed()) {
      copt.search = sopts;
      return run_verify(vflags, vh, copt, out_path, csv_path, quiet);
    }
    if (mono->parsed()) return run_search_monotonic(mflags, mh, mopt, sopts);
    if (embed->parsed()) return run_embed(embed_g, embed_seed, relate_spec, sopts);
    if (examples->parsed()) return run_examples(examples_json, sopts);
  } catch (const metricgap::budget_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const metricgap::undefined_gap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndefined;
  } catch (const metricgap::graph6_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
