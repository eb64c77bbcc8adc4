#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "metricgap/bounds.hpp"
#include "metricgap/corpus.hpp"
#include "metricgap/gap_search.hpp"
#include "metricgap/graph6.hpp"

namespace metricgap {

/// Memoized exact gap computations keyed by the graph6 codes of both graphs.
/// Budget and undefined outcomes are cached as states instead of exceptions
/// so campaign loops can record them and move on. The raw assignment count is
/// checked up front; hopeless pairs are never scanned.
class GapCache {
 public:
  explicit GapCache(SearchOptions opts) : opts_(opts) {}

  enum class State { ok, budget, undefined };
  struct Entry {
    State state;
    Rational value;
    std::string note;
  };

  const Entry& lambda(const Graph& g, const Graph& h) {
    std::string key = to_graph6(g) + "|" + to_graph6(h);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    return map_.emplace(std::move(key), compute(g, h)).first->second;
  }

  const SearchOptions& options() const { return opts_; }

 private:
  Entry compute(const Graph& g, const Graph& h) const {
    long long k = h.vertex_count();
    long long raw = 1;
    for (int i = 0; i < g.vertex_count(); ++i) {
      if (raw > opts_.budget / k) {
        return {State::budget, Rational(0), "assignment space exceeds budget"};
      }
      raw *= k;
    }
    try {
      return {State::ok, lambda_exact(g, h, opts_).value, ""};
    } catch (const budget_exceeded_error& e) {
      return {State::budget, Rational(0), e.what()};
    } catch (const undefined_gap_error& e) {
      return {State::undefined, Rational(0), e.what()};
    }
  }

  SearchOptions opts_;
  std::map<std::string, Entry> map_;
};

/// One verified claim instance. `status` not_applicable means a precondition
/// ruled the claim out for this instance (never a failure). Values are exact
/// rationals when the claim has a numeric bound and subject.
struct CheckRecord {
  std::string check;
  std::string g_id;
  std::string h_id;
  BoundStatus status = BoundStatus::not_applicable;
  std::optional<Rational> bound;
  std::optional<Rational> subject;
  std::string note;
  double runtime_ms = 0.0;
};

struct CampaignSummary {
  long long checks = 0;
  long long holds = 0;
  long long fails = 0;
  long long not_applicable = 0;
};

struct CampaignReport {
  std::string corpus;
  std::vector<std::string> targets;
  std::vector<CheckRecord> records;

  CampaignSummary summary() const {
    CampaignSummary s;
    s.checks = static_cast<long long>(records.size());
    for (const CheckRecord& r : records) {
      if (r.status == BoundStatus::holds) ++s.holds;
      else if (r.status == BoundStatus::fails) ++s.fails;
      else ++s.not_applicable;
    }
    return s;
  }

  std::vector<const CheckRecord*> failures() const {
    std::vector<const CheckRecord*> out;
    for (const CheckRecord& r : records)
      if (r.status == BoundStatus::fails) out.push_back(&r);
    return out;
  }
};

struct CampaignOptions {
  SearchOptions search;
  int denominator_samples = 3;
  bool edge_additions = true;
  bool target_swaps = true;
  int chain_max = 6;  // largest complete target in the chain check
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline CheckRecord record_from_report(const BoundReport& r, const std::string& g_id,
                                      const std::string& h_id, double ms) {
  CheckRecord rec;
  rec.check = r.name;
  rec.g_id = g_id;
  rec.h_id = h_id;
  rec.status = r.status;
  rec.bound = r.bound_value;
  rec.subject = r.subject_value;
  rec.runtime_ms = ms;
  return rec;
}

inline CheckRecord na_record(const std::string& check, const std::string& g_id,
                             const std::string& h_id, const std::string& note, double ms = 0.0) {
  CheckRecord rec;
  rec.check = check;
  rec.g_id = g_id;
  rec.h_id = h_id;
  rec.status = BoundStatus::not_applicable;
  rec.note = note;
  rec.runtime_ms = ms;
  return rec;
}

// fails dominates; holds upgrades an untouched accumulator.
inline void merge_status(BoundStatus& acc, const BoundReport& r, std::string& why) {
  if (r.status == BoundStatus::fails) {
    acc = BoundStatus::fails;
    if (!why.empty()) why += "; ";
    why += r.name;
  } else if (r.status == BoundStatus::holds && acc == BoundStatus::not_applicable) {
    acc = BoundStatus::holds;
  }
}

inline Assignment sample_nonconstant(SplitMix64& rng, int n, int k) {
  Assignment f;
  f.image.resize(n);
  do {
    for (int i = 0; i < n; ++i) f.image[i] = static_cast<int>(rng.next() % k);
  } while (!f.nonconstant());
  return f;
}

inline bool extend_embedding(const Graph& hsup, const Graph& hsub, std::vector<int>& map,
                             std::vector<char>& used, int pos) {
  if (pos == hsub.vertex_count()) return true;
  for (int c = 0; c < hsup.vertex_count(); ++c) {
    if (used[c]) continue;
    bool ok = true;
    for (int p = 0; p < pos && ok; ++p)
      if (hsub.has_edge(p, pos) && !hsup.has_edge(map[p], c)) ok = false;
    if (!ok) continue;
    used[c] = 1;
    map[pos] = c;
    if (extend_embedding(hsup, hsub, map, used, pos + 1)) return true;
    used[c] = 0;
  }
  return false;
}

// Injective edge-preserving map of hsub onto vertices of hsup, if one exists.
inline std::optional<std::vector<int>> find_subgraph_embedding(const Graph& hsup,
                                                               const Graph& hsub) {
  if (hsub.vertex_count() > hsup.vertex_count()) return std::nullopt;
  std::vector<int> map(hsub.vertex_count(), -1);
  std::vector<char> used(hsup.vertex_count(), 0);
  if (extend_embedding(hsup, hsub, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace detail

/// Runs every applicable closed-form check over corpus x targets and returns
/// one record per claim instance. Budget or undefined gaps produce
/// not_applicable records with a note instead of aborting the run.
inline CampaignReport run_verification(const std::vector<CorpusEntry>& corpus,
                                       const std::vector<CorpusEntry>& targets,
                                       const CampaignOptions& copt = {}) {
  CampaignReport rep;
  for (const CorpusEntry& t : targets) rep.targets.push_back(t.id);
  GapCache cache(copt.search);
  const Graph k2 = complete(2);

  std::vector<std::pair<int, Rational>> near_complete_seq;

  for (const CorpusEntry& ge : corpus) {
    const Graph& g = ge.graph;
    const int n = g.vertex_count();
    const bool gconn = g.is_connected();

    std::vector<std::optional<Rational>> lam(targets.size());

    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      const CorpusEntry& he = targets[ti];
      const Graph& h = he.graph;
      const bool hconn = h.is_connected();
      detail::Stopwatch sw;
      const auto& entry = cache.lambda(g, h);
      if (entry.state != GapCache::State::ok) {
        rep.records.push_back(detail::na_record("gap", ge.id, he.id, entry.note, sw.ms()));
        continue;
      }
      const Rational& l = entry.value;
      lam[ti] = l;

      {
        CheckRecord r;
        r.check = "positivity";
        r.g_id = ge.id;
        r.h_id = he.id;
        r.bound = Rational(0);
        r.subject = l;
        if (g.support_connected()) {
          r.status = l.sign() > 0 ? BoundStatus::holds : BoundStatus::fails;
          r.note = "one edge-carrying component: gap must be positive";
        } else {
          r.status = l.is_zero() ? BoundStatus::holds : BoundStatus::fails;
          r.note = "edges in multiple components: gap must be zero";
        }
        r.runtime_ms = sw.ms();
        rep.records.push_back(std::move(r));
      }

      rep.records.push_back(detail::record_from_report(complete_upper(g, l), ge.id, he.id, 0.0));
      rep.records.push_back(detail::record_from_report(complete_equality(g, l), ge.id, he.id, 0.0));

      if (gconn && hconn) {
        rep.records.push_back(detail::record_from_report(naive_lower(g, h, l), ge.id, he.id, 0.0));
      } else {
        rep.records.push_back(detail::na_record(
            "naive_lower", ge.id, he.id, gconn ? "disconnected target" : "disconnected source"));
      }
      if (gconn) {
        rep.records.push_back(detail::record_from_report(nonedge_lower(g, l), ge.id, he.id, 0.0));
      } else {
        rep.records.push_back(detail::na_record("nonedge_lower", ge.id, he.id, "disconnected source"));
      }

      if (gconn && hconn && g.is_regular()) {
        rep.records.push_back(detail::record_from_report(regular_lower(g, h, l), ge.id, he.id, 0.0));
      } else {
        rep.records.push_back(detail::na_record("regular_lower", ge.id, he.id,
                                                gconn ? "source not regular or target disconnected"
                                                      : "disconnected source"));
      }

      if (gconn && hconn && g.volume() >= 6 && copt.denominator_samples > 0) {
        detail::Stopwatch dsw;
        detail::SplitMix64 rng{detail::fnv1a(ge.id + "|" + he.id)};
        BoundStatus lo = BoundStatus::not_applicable, hi = BoundStatus::not_applicable;
        std::string lo_why, hi_why;
        std::optional<Rational> lo_bound, hi_bound, sub;
        for (int s = 0; s < copt.denominator_samples; ++s) {
          Assignment f = detail::sample_nonconstant(rng, n, h.vertex_count());
          auto [low, high] = denominator_bounds(g, h, f);
          detail::merge_status(lo, low, lo_why);
          detail::merge_status(hi, high, hi_why);
          lo_bound = low.bound_value;
          hi_bound = high.bound_value;
          sub = low.subject_value;
        }
        CheckRecord r;
        r.check = "denominator_lower";
        r.g_id = ge.id;
        r.h_id = he.id;
        r.status = lo;
        r.bound = lo_bound;
        r.subject = sub;
        r.note = std::to_string(copt.denominator_samples) + " sampled assignments";
        r.runtime_ms = dsw.ms();
        rep.records.push_back(r);
        r.check = "denominator_upper";
        r.status = hi;
        r.bound = hi_bound;
        rep.records.push_back(std::move(r));
      } else {
        std::string why = !gconn ? "disconnected source"
                                 : (!hconn ? "disconnected target" : "volume below 6");
        rep.records.push_back(detail::na_record("denominator_lower", ge.id, he.id, why));
        rep.records.push_back(detail::na_record("denominator_upper", ge.id, he.id, why));
      }

      {
        const auto& base = cache.lambda(g, k2);
        CheckRecord r;
        r.check = "k2_extremal";
        r.g_id = ge.id;
        r.h_id = he.id;
        if (base.state != GapCache::State::ok) {
          r.status = BoundStatus::not_applicable;
          r.note = base.note;
        } else {
          r.bound = base.value;
          r.subject = l;
          r.status = l <= base.value ? BoundStatus::holds : BoundStatus::fails;
          r.note = "two point target is extremal";
        }
        rep.records.push_back(std::move(r));
      }

      if (copt.edge_additions && gconn && hconn && g.volume() >= 6 && l.sign() > 0) {
        detail::Stopwatch esw;
        long long nonedges = static_cast<long long>(n) * (n - 1) / 2 - g.edge_count();
        // the whole sweep must fit the enumeration budget, not each pair alone
        long long per_pair_cap = copt.search.budget / std::max(nonedges, 1ll);
        long long raw = 1;
        bool sweep_too_big = false;
        for (int i = 0; i < n && !sweep_too_big; ++i) {
          if (raw > per_pair_cap / std::max(h.vertex_count(), 1)) sweep_too_big = true;
          else raw *= h.vertex_count();
        }
        if (sweep_too_big && nonedges > 0) {
          rep.records.push_back(detail::na_record("edge_addition_window", ge.id, he.id,
                                                  "sweep exceeds budget"));
        } else if (nonedges > 0) {
          BoundStatus acc = BoundStatus::not_applicable;
          std::string why;
          int tried = 0;
          bool hit_budget = false;
          for (int u = 0; u < n && !hit_budget; ++u) {
            for (int v = u + 1; v < n; ++v) {
              if (g.has_edge(u, v)) continue;
              Graph gp = add_edge(g, u, v);
              const auto& ep = cache.lambda(gp, h);
              if (ep.state != GapCache::State::ok) {
                hit_budget = true;
                break;
              }
              auto [low, high] = edge_addition_bounds(g, gp, h, l, ep.value);
              detail::merge_status(acc, low, why);
              detail::merge_status(acc, high, why);
              ++tried;
            }
          }
          if (tried > 0) {
            CheckRecord r;
            r.check = "edge_addition_window";
            r.g_id = ge.id;
            r.h_id = he.id;
            r.status = acc;
            r.note = std::to_string(tried) + " edge additions" + (why.empty() ? "" : "; " + why) +
                     (hit_budget ? "; stopped at budget" : "");
            r.runtime_ms = esw.ms();
            rep.records.push_back(std::move(r));
          }
        }
      }
    }

    {
      detail::Stopwatch csw;
      int cmax = std::min(n + 1, copt.chain_max);
      if (cmax >= 2) {
        std::vector<Rational> chain;
        bool all_ok = true;
        std::string note;
        for (int c = 2; c <= cmax && all_ok; ++c) {
          const auto& e = cache.lambda(g, complete(c));
          if (e.state != GapCache::State::ok) {
            all_ok = false;
            note = e.note;
          } else {
            chain.push_back(e.value);
          }
        }
        CheckRecord r;
        r.check = "clique_chain";
        r.g_id = ge.id;
        r.h_id = "K2..K" + std::to_string(cmax);
        if (!all_ok) {
          r.status = BoundStatus::not_applicable;
          r.note = note;
        } else {
          r.status = BoundStatus::holds;
          for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (chain[i] < chain[i + 1]) r.status = BoundStatus::fails;
          std::string vals;
          for (const Rational& v : chain) vals += (vals.empty() ? "" : " >= ") + v.str();
          r.note = vals;
          if (cmax >= n + 1 && n >= 2) {
            // targets with at least n points are interchangeable
            if (chain[n - 2] != chain[n - 1]) r.status = BoundStatus::fails;
            r.note += "; stabilizes at k = n";
          }
          r.bound = chain.front();
          r.subject = chain.back();
        }
        r.runtime_ms = csw.ms();
        rep.records.push_back(std::move(r));
      }
    }

    if (copt.target_swaps && gconn) {
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!lam[i] || lam[i]->sign() <= 0 || !targets[i].graph.is_connected()) continue;
        for (std::size_t j = 0; j < targets.size(); ++j) {
          if (i == j || !lam[j] || !targets[j].graph.is_connected()) continue;
          detail::Stopwatch ssw;
          auto reports = target_swap_bounds(g, targets[i].graph, targets[j].graph, *lam[i], *lam[j]);
          BoundStatus acc = BoundStatus::not_applicable;
          std::string why;
          for (const BoundReport& br : reports) {
            if (br.name == "target_swap_statement") continue;  // informational only
            detail::merge_status(acc, br, why);
          }
          CheckRecord r;
          r.check = "target_swap_window";
          r.g_id = ge.id;
          r.h_id = targets[i].id + "->" + targets[j].id;
          r.status = acc;
          r.subject = *lam[j] / *lam[i];
          r.note = why;
          r.runtime_ms = ssw.ms();
          rep.records.push_back(std::move(r));
        }
      }
    }

    if (gconn) {
      for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = 0; j < targets.size(); ++j) {
          if (i == j || !lam[i] || !lam[j]) continue;
          const Graph& hsup = targets[i].graph;
          const Graph& hsub = targets[j].graph;
          if (hsub.vertex_count() > hsup.vertex_count()) continue;
          if (!hsub.is_connected()) continue;
          std::optional<std::vector<int>> embed = detail::find_subgraph_embedding(hsup, hsub);
          if (!embed) continue;
          BoundReport br = subgraph_target_upper(g, hsup, hsub, *embed, *lam[i], *lam[j]);
          CheckRecord r = detail::record_from_report(br, ge.id, targets[j].id + "<=" + targets[i].id, 0.0);
          rep.records.push_back(std::move(r));
        }
      }
    }

    if (ge.kind == "complete_minus_edge" && gconn) {
      const auto& e = cache.lambda(g, k2);
      if (e.state == GapCache::State::ok) {
        near_complete_seq.push_back({n, e.value});
        rep.records.push_back(detail::record_from_report(
            detail::lower_report("near_complete_lower", Rational(1), e.value), ge.id, "K2", 0.0));
        rep.records.push_back(detail::record_from_report(
            detail::upper_report("near_complete_upper", complete_upper_value(n), e.value,
                                 /*strict=*/true),
            ge.id, "K2", 0.0));
      }
    }

    if (ge.kind == "complete_multipartite" && ge.params.size() == 2) {
      detail::Stopwatch fsw;
      try {
        BoundReport br = multipartite_identity(static_cast<int>(ge.params[0]),
                                               static_cast<int>(ge.params[1]), copt.search);
        rep.records.push_back(detail::record_from_report(br, ge.id, "K2", fsw.ms()));
      } catch (const budget_exceeded_error& e) {
        rep.records.push_back(detail::na_record("multipartite_identity", ge.id, "K2", e.what()));
      }
    }

    if (ge.kind == "complete_bipartite" && ge.params.size() == 2 && ge.params[0] == ge.params[1] &&
        ge.params[0] >= 2) {
      for (int kk = 2; kk <= 3; ++kk) {
        detail::Stopwatch fsw;
        try {
          BoundReport br =
              balanced_bipartite_identity(static_cast<int>(ge.params[0]), kk, copt.search);
          rep.records.push_back(
              detail::record_from_report(br, ge.id, "K" + std::to_string(kk), fsw.ms()));
        } catch (const budget_exceeded_error& e) {
          rep.records.push_back(
              detail::na_record("balanced_bipartite_identity", ge.id, "K" + std::to_string(kk), e.what()));
        }
      }
    }

    if ((ge.kind == "dumbbell" || ge.kind == "regularized_dumbbell") && gconn) {
      const auto& e = cache.lambda(g, k2);
      if (e.state == GapCache::State::ok) {
        long long scale = ge.kind == "dumbbell" ? static_cast<long long>(n) * n
                                                : static_cast<long long>(n) * g.max_degree();
        Rational normalized = e.value * Rational(BigInt(scale), BigInt(8));
        CheckRecord r;
        r.check = ge.kind + "_decay";
        r.g_id = ge.id;
        r.h_id = "K2";
        r.subject = normalized;
        r.bound = Rational(2);
        r.status = (normalized >= Rational(BigInt(1), BigInt(2)) && normalized <= Rational(2))
                       ? BoundStatus::holds
                       : BoundStatus::fails;
        r.note = "gap scaled by " + std::string(ge.kind == "dumbbell" ? "n^2/8" : "n*d/8") +
                 " stays in [1/2, 2]";
        rep.records.push_back(std::move(r));
      }
    }

    if (ge.kind == "red_clique_bipartite" && ge.params.size() == 2) {
      detail::Stopwatch fsw;
      int half = static_cast<int>(ge.params[0]);
      int red = static_cast<int>(ge.params[1]);
      Assignment f;
      f.image.assign(g.vertex_count(), 1);
      for (int i = 0; i < red; ++i) f.image[i] = 0;
      for (int i = half; i < half + red; ++i) f.image[i] = 0;
      Rational q = rayleigh_quotient(g, k2, f);
      CheckRecord r = detail::record_from_report(
          detail::upper_report("red_clique_witness", Rational(1), q, /*strict=*/true), ge.id, "K2",
          fsw.ms());
      r.note = "two class witness drives the gap below 1";
      rep.records.push_back(std::move(r));
    }

    if (ge.kind == "balanced_bipartite_plus_edge" && ge.params.size() == 1) {
      detail::Stopwatch fsw;
      int half = static_cast<int>(ge.params[0]);
      const auto& base = cache.lambda(complete_bipartite(half, half), k2);
      const auto& bumped = cache.lambda(g, k2);
      if (base.state == GapCache::State::ok && bumped.state == GapCache::State::ok) {
        CheckRecord r = detail::record_from_report(
            detail::upper_report("bipartite_plus_edge_drop", base.value, bumped.value,
                                 /*strict=*/true),
            ge.id, "K2", fsw.ms());
        r.note = "adding one inner edge strictly lowers the gap";
        rep.records.push_back(std::move(r));
      }
    }
  }

  if (near_complete_seq.size() >= 2) {
    std::sort(near_complete_seq.begin(), near_complete_seq.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rep.records.push_back(
        detail::record_from_report(near_complete_trend(near_complete_seq), "K*-e", "K2", 0.0));
  }

  // Regular one-degree-up pairs found inside the corpus itself.
  {
    std::vector<std::size_t> regulars;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (corpus[i].graph.is_connected() && corpus[i].graph.is_regular()) regulars.push_back(i);
    for (std::size_t a : regulars) {
      for (std::size_t b : regulars) {
        const Graph& lo = corpus[a].graph;
        const Graph& hi = corpus[b].graph;
        if (hi.vertex_count() != lo.vertex_count()) continue;
        if (hi.max_degree() != lo.max_degree() + 1) continue;
        bool subset = true;
        for (const Edge& e : lo.edges()) subset = subset && hi.has_edge(e.first, e.second);
        if (!subset) continue;
        for (const CorpusEntry& he : targets) {
          if (!he.graph.is_connected()) continue;
          detail::Stopwatch rsw;
          GapCache::Entry el = cache.lambda(lo, he.graph);
          GapCache::Entry eh = cache.lambda(hi, he.graph);
          if (el.state != GapCache::State::ok || eh.state != GapCache::State::ok) continue;
          if (el.value.sign() <= 0) continue;
          auto [low, high] = regular_supergraph_bounds(lo, hi, he.graph, el.value, eh.value);
          BoundStatus acc = BoundStatus::not_applicable;
          std::string why;
          detail::merge_status(acc, low, why);
          detail::merge_status(acc, high, why);
          CheckRecord r;
          r.check = "regular_supergraph_window";
          r.g_id = corpus[a].id + "->" + corpus[b].id;
          r.h_id = he.id;
          r.status = acc;
          r.subject = eh.value / el.value;
          r.bound = low.bound_value;
          r.note = why;
          r.runtime_ms = rsw.ms();
          rep.records.push_back(std::move(r));
        }
      }
    }
  }

  return rep;
}

inline nlohmann::ordered_json rational_to_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num_str();
  j["den"] = r.den_str();
  return j;
}

inline nlohmann::ordered_json to_json(const CampaignReport& rep) {
  nlohmann::ordered_json j;
  j["corpus"] = rep.corpus;
  j["targets"] = rep.targets;
  CampaignSummary s = rep.summary();
  nlohmann::ordered_json js;
  js["checks"] = s.checks;
  js["holds"] = s.holds;
  js["fails"] = s.fails;
  js["not_applicable"] = s.not_applicable;
  j["summary"] = std::move(js);
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const CheckRecord& r : rep.records) {
    nlohmann::ordered_json jr;
    jr["check"] = r.check;
    jr["g"] = r.g_id;
    jr["h"] = r.h_id;
    jr["status"] = to_string(r.status);
    jr["bound"] = r.bound ? rational_to_json(*r.bound) : nlohmann::ordered_json(nullptr);
    jr["subject"] = r.subject ? rational_to_json(*r.subject) : nlohmann::ordered_json(nullptr);
    jr["note"] = r.note;
    jr["runtime_ms"] = r.runtime_ms;
    recs.push_back(std::move(jr));
  }
  j["records"] = std::move(recs);
  return j;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

inline std::string to_csv(const CampaignReport& rep) {
  std::string out = "check,g,h,status,bound,subject,note,runtime_ms\n";
  for (const CheckRecord& r : rep.records) {
    out += detail::csv_escape(r.check) + ",";
    out += detail::csv_escape(r.g_id) + ",";
    out += detail::csv_escape(r.h_id) + ",";
    out += to_string(r.status);
    out += ",";
    out += r.bound ? r.bound->str() : "";
    out += ",";
    out += r.subject ? r.subject->str() : "";
    out += ",";
    out += detail::csv_escape(r.note) + ",";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.runtime_ms);
    out += buf;
    out += "\n";
  }
  return out;
}

}  // namespace metricgap
