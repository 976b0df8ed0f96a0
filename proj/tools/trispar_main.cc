// Copyright 2026 The trispar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// trispar command-line driver: generate graphs, count triangles exactly,
// estimate them by edge sparsification and compare against the sampling
// baselines. Every subcommand prints a table and optionally writes JSON.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trispar/adaptive.h"
#include "trispar/baselines.h"
#include "trispar/edge_list.h"
#include "trispar/exact_count.h"
#include "trispar/generators.h"
#include "trispar/report.h"
#include "trispar/sparsify.h"
#include "trispar/timer.h"

namespace {

using trispar::ExperimentRecord;
using trispar::Method;
using nlohmann::json;

std::string Num(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string Num(std::uint64_t x) { return std::to_string(x); }

class Table {
 public:
  explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}

  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void Print(std::ostream& out) const {
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = headers_[c].size();
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
            << cells[c];
      }
      out << '\n';
    };
    line(headers_);
    for (const auto& row : rows_) line(row);
  }

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

struct Loaded {
  trispar::LoadedGraph loaded;
  std::string id;
  double load_seconds = 0;
};

Loaded Load(const std::string& path, bool weighted) {
  trispar::Stopwatch clock;
  Loaded l{trispar::LoadEdgeList(path, weighted),
           std::filesystem::path(path).stem().string(), 0};
  l.load_seconds = clock.Elapsed();
  return l;
}

json GraphJson(const Loaded& l) {
  const trispar::GraphStats s = trispar::Stats(l.loaded.graph);
  return {{"id", l.id},
          {"n", s.num_vertices},
          {"m", s.num_edges},
          {"max_degree", s.max_degree},
          {"isolated_vertices", s.isolated_vertices},
          {"load_seconds", l.load_seconds}};
}

void PrintGraph(const Loaded& l) {
  const trispar::GraphStats s = trispar::Stats(l.loaded.graph);
  std::cout << "graph " << l.id << ": n=" << s.num_vertices << " m=" << s.num_edges
            << " max_degree=" << s.max_degree << " isolated=" << s.isolated_vertices
            << " load_s=" << Num(l.load_seconds) << '\n';
}

void Emit(const json& report, const std::string& json_path) {
  if (!json_path.empty()) trispar::WriteReport(report, json_path);
}

struct ExactRun {
  trispar::TriangleStats stats;
  double seconds = 0;
};

ExactRun TimedExact(const trispar::Graph& g, trispar::Counter counter, int threads,
                    bool per_edge = false) {
  trispar::Stopwatch clock;
  ExactRun run{trispar::CountTriangles(g, counter, {.per_edge = per_edge, .threads = threads}),
               0};
  run.seconds = clock.Elapsed();
  return run;
}

ExperimentRecord ExactRecord(const Loaded& l, trispar::Counter counter, const ExactRun& run) {
  ExperimentRecord r;
  r.graph_id = l.id;
  r.method = counter == trispar::Counter::kNodeIterator ? Method::kExactNode
                                                        : Method::kExactEdge;
  r.estimate = static_cast<double>(run.stats.triangles);
  r.timings = {l.load_seconds, 0, run.seconds, run.seconds};
  r.SetExact(run.stats.triangles);
  return r;
}

std::vector<std::string> RecordRow(const ExperimentRecord& r) {
  std::string params;
  for (const auto& [k, v] : r.parameters) {
    params += (params.empty() ? "" : ",") + k + "=" + Num(v);
  }
  return {std::string(trispar::MethodName(r.method)),
          params.empty() ? "-" : params,
          Num(r.estimate),
          r.exact_t ? Num(*r.exact_t) : "-",
          r.ratio ? Num(*r.ratio) : "-",
          Num(r.timings.sparsify),
          Num(r.timings.count),
          Num(r.timings.total),
          Num(r.seed)};
}

Table RecordTable() {
  return Table({"method", "params", "estimate", "exact_t", "ratio", "sparsify_s", "count_s",
                "total_s", "seed"});
}

// ---- subcommands ----------------------------------------------------------

struct GenArgs {
  std::string model;
  std::string output;
  std::uint64_t seed = 0;
};

int RunGen(const GenArgs& a, const std::string& json_path) {
  const trispar::GeneratorSpec spec = trispar::ParseGeneratorSpec(a.model);
  const trispar::Graph g = trispar::Generate(spec, a.seed);
  trispar::WriteEdgeList(g, std::filesystem::path(a.output));
  const trispar::GraphStats s = trispar::Stats(g);
  std::cout << "generated " << trispar::ToString(spec) << " seed=" << a.seed
            << ": n=" << s.num_vertices << " m=" << s.num_edges << " -> " << a.output << '\n';
  json report = trispar::MakeReport("gen");
  report["model"] = trispar::ToString(spec);
  report["seed"] = a.seed;
  report["n"] = s.num_vertices;
  report["m"] = s.num_edges;
  Emit(report, json_path);
  return 0;
}

struct CountArgs {
  std::string file;
  std::string algo = "node";
  bool census = false;
  bool delta = false;
  bool weighted = false;
};

int RunCount(const CountArgs& a, int threads, const std::string& json_path) {
  const Loaded l = Load(a.file, a.weighted);
  const trispar::Graph& g = l.loaded.graph;
  PrintGraph(l);
  json report = trispar::MakeReport("count");
  report["graph"] = GraphJson(l);

  std::uint64_t t = 0;
  double seconds = 0;
  std::optional<std::uint64_t> delta_max;
  double transitivity = 0;
  if (a.algo == "brute") {
    trispar::Stopwatch clock;
    t = trispar::CountBruteForce(g);
    seconds = clock.Elapsed();
    if (a.delta) {
      delta_max = trispar::CountEdgeIterator(g, {.per_edge = true}).delta_max;
    }
    transitivity = trispar::Transitivity(g);
  } else {
    const ExactRun run = TimedExact(g, trispar::ParseCounter(a.algo), threads, a.delta);
    t = run.stats.triangles;
    seconds = run.seconds;
    delta_max = run.stats.delta_max;
    transitivity = run.stats.transitivity;
  }
  std::cout << "algorithm=" << a.algo << '\n';
  std::cout << "t=" << t << '\n';
  std::cout << "transitivity=" << Num(transitivity) << '\n';
  std::cout << "count_s=" << Num(seconds) << '\n';
  report["algorithm"] = a.algo;
  report["t"] = t;
  report["transitivity"] = transitivity;
  report["count_seconds"] = seconds;
  if (delta_max) {
    std::cout << "delta_max=" << *delta_max << '\n';
    report["delta_max"] = *delta_max;
  }
  if (a.census) {
    const trispar::TripleCensus c = trispar::ComputeTripleCensus(g, t);
    std::cout << "census T0=" << c.t0 << " T1=" << c.t1 << " T2=" << c.t2 << " T3=" << c.t3
              << '\n';
    report["census"] = {{"T0", c.t0}, {"T1", c.t1}, {"T2", c.t2}, {"T3", c.t3}};
  }
  if (a.weighted) {
    const double w = trispar::CountWeightedTriangles(g);
    std::cout << "weighted_triangles=" << Num(w) << '\n';
    report["weighted_triangles"] = w;
  }
  Emit(report, json_path);
  return 0;
}

struct EstimateArgs {
  std::string file;
  double p = 1.0;
  std::uint64_t seed = 0;
  int runs = 1;
  std::string algo = "node";
  bool skip_exact = false;
  bool weighted = false;
  std::string write_sparsified;
};

int RunEstimate(const EstimateArgs& a, int threads, const std::string& json_path) {
  const Loaded l = Load(a.file, a.weighted);
  const trispar::Graph& g = l.loaded.graph;
  PrintGraph(l);
  json report = trispar::MakeReport("estimate");
  report["graph"] = GraphJson(l);
  const trispar::Counter counter = trispar::ParseCounter(a.algo);

  if (a.weighted) {
    const double exact = trispar::CountWeightedTriangles(g);
    Table table({"run", "seed", "surviving_edges", "estimate", "exact", "ratio"});
    json runs = json::array();
    for (int i = 0; i < a.runs; ++i) {
      const trispar::SparsifyParams params{a.p, a.seed + static_cast<std::uint64_t>(i)};
      const trispar::WeightedEstimate e = trispar::EstimateWeightedTriangles(g, params);
      table.Add({std::to_string(i), Num(params.seed), Num(e.surviving_edges), Num(e.estimate),
                 Num(exact), Num(e.estimate / exact)});
      runs.push_back({{"seed", params.seed},
                      {"surviving_edges", e.surviving_edges},
                      {"estimate", e.estimate},
                      {"exact", exact},
                      {"ratio", e.estimate / exact}});
      if (i == 0 && !a.write_sparsified.empty()) {
        trispar::WriteEdgeList(trispar::WeightedSparsify(g, params),
                               std::filesystem::path(a.write_sparsified),
                               l.loaded.original_ids);
      }
    }
    table.Print(std::cout);
    report["weighted_runs"] = std::move(runs);
    Emit(report, json_path);
    return 0;
  }

  std::optional<ExactRun> exact;
  if (!a.skip_exact) exact = TimedExact(g, counter, threads);

  Table table = RecordTable();
  json records = json::array();
  double sum = 0;
  for (int i = 0; i < a.runs; ++i) {
    const trispar::SparsifyParams params{a.p, a.seed + static_cast<std::uint64_t>(i)};
    const trispar::Estimate e = trispar::EstimateTriangles(g, params, counter, threads);
    ExperimentRecord r;
    r.graph_id = l.id;
    r.method = Method::kDoulion;
    r.parameters = {{"p", a.p}, {"t_prime", static_cast<double>(e.t_prime)},
                    {"surviving_edges", static_cast<double>(e.surviving_edges)}};
    r.estimate = e.estimate;
    r.timings = {l.load_seconds, e.sparsify_seconds, e.count_seconds,
                 e.sparsify_seconds + e.count_seconds};
    r.seed = params.seed;
    if (exact) r.SetExact(exact->stats.triangles);
    table.Add(RecordRow(r));
    records.push_back(trispar::ToJson(r));
    sum += e.estimate;
    if (i == 0 && !a.write_sparsified.empty()) {
      trispar::WriteEdgeList(trispar::Sparsify(g, params),
                             std::filesystem::path(a.write_sparsified),
                             l.loaded.original_ids);
    }
  }
  table.Print(std::cout);
  const double mean = sum / a.runs;
  std::cout << "mean_estimate=" << Num(mean) << '\n';
  report["records"] = std::move(records);
  report["mean_estimate"] = mean;
  report["expected_speedup"] = trispar::ExpectedSpeedup(a.p);
  if (exact) {
    std::cout << "exact_t=" << exact->stats.triangles << '\n';
    std::cout << "mean_ratio=" << Num(mean / exact->stats.triangles) << '\n';
    report["exact_t"] = exact->stats.triangles;
    report["exact_count_seconds"] = exact->seconds;
  }
  Emit(report, json_path);
  return 0;
}

struct AdaptiveArgs {
  std::string file;
  double p0 = 0;
  int runs = 6;
  double threshold = 0.1;
  std::uint64_t seed = 0;
  std::string algo = "node";
  bool skip_exact = false;
  bool conditions = false;
};

struct AdaptiveOutcome {
  trispar::AdaptiveReport report;
  std::optional<ExactRun> exact;
};

AdaptiveOutcome DoAdaptive(const trispar::Graph& g, const AdaptiveArgs& a, int threads) {
  AdaptiveOutcome out;
  const trispar::Counter counter = trispar::ParseCounter(a.algo);
  if (!a.skip_exact) out.exact = TimedExact(g, counter, 1, a.conditions);
  out.report = trispar::DoublingSearch(g, {.p0 = a.p0,
                                           .trials_per_p = a.runs,
                                           .spread_threshold = a.threshold,
                                           .master_seed = a.seed,
                                           .counter = counter,
                                           .threads = threads});
  return out;
}

void PrintAdaptive(const AdaptiveOutcome& o, const trispar::Graph& g, json& report) {
  Table trace({"p", "estimates", "spread", "concentrated"});
  for (const trispar::BatchRecord& b : o.report.trace) {
    std::string values;
    for (double v : b.estimates()) values += (values.empty() ? "" : ",") + Num(v);
    trace.Add({Num(b.p), values, std::isfinite(b.spread) ? Num(b.spread) : "inf",
               b.concentrated ? "yes" : "no"});
  }
  trace.Print(std::cout);
  const trispar::AdaptiveReport& r = o.report;
  std::cout << "p_star=" << Num(r.p_star) << '\n';
  std::cout << "final_estimate=" << Num(r.final_estimate) << '\n';
  std::cout << "total_trials=" << r.total_trials << '\n';
  std::cout << "total_s=" << Num(r.total_seconds) << '\n';
  std::cout << "expected_speedup=" << Num(trispar::ExpectedSpeedup(r.p_star)) << '\n';
  report["adaptive"] = trispar::ToJson(r);
  report["expected_speedup"] = trispar::ExpectedSpeedup(r.p_star);
  if (o.exact) {
    const auto t = o.exact->stats.triangles;
    const double ratio = t == 0 ? 0.0 : r.final_estimate / static_cast<double>(t);
    const trispar::SpeedupSummary s = trispar::ComputeSpeedup(o.exact->seconds, r);
    std::cout << "exact_t=" << t << '\n';
    std::cout << "ratio=" << Num(ratio) << '\n';
    std::cout << "exact_count_s=" << Num(o.exact->seconds) << '\n';
    std::cout << "xfaster1=" << Num(s.xfaster1) << '\n';
    std::cout << "xfaster2=" << Num(s.xfaster2) << '\n';
    report["exact_t"] = t;
    report["ratio"] = ratio;
    report["exact_count_seconds"] = o.exact->seconds;
    report["speedup"] = trispar::ToJson(s);
    if (o.exact->stats.delta_max && g.num_vertices() >= 3) {
      const trispar::ConditionReport c = trispar::CheckConditions(
          g.num_vertices(), static_cast<double>(t),
          static_cast<double>(*o.exact->stats.delta_max), r.p_star);
      std::cout << "conditions regime=" << trispar::RegimeName(c.regime)
                << " lhs=" << Num(c.lhs) << " rhs=" << Num(c.rhs)
                << " satisfied=" << (c.satisfied ? "yes" : "no") << '\n';
      report["conditions"] = trispar::ToJson(c);
    }
  }
}

int RunAdaptive(const AdaptiveArgs& a, int threads, const std::string& json_path) {
  const Loaded l = Load(a.file, false);
  PrintGraph(l);
  json report = trispar::MakeReport("adaptive");
  report["graph"] = GraphJson(l);
  const AdaptiveOutcome o = DoAdaptive(l.loaded.graph, a, threads);
  PrintAdaptive(o, l.loaded.graph, report);
  Emit(report, json_path);
  return 0;
}

struct BaselineArgs {
  std::string file;
  std::string method;
  std::uint64_t r = 0;
  double epsilon = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_r = 100'000'000;
};

int RunBaseline(const BaselineArgs& a, int threads, const std::string& json_path) {
  const Loaded l = Load(a.file, false);
  const trispar::Graph& g = l.loaded.graph;
  PrintGraph(l);
  json report = trispar::MakeReport("baseline");
  report["graph"] = GraphJson(l);
  const Method method = a.method == "naive" ? Method::kNaive : Method::kBuriol;

  const ExactRun exact = TimedExact(g, trispar::Counter::kEdgeIterator, threads);
  std::uint64_t r = a.r;
  if (r == 0) {
    const trispar::TripleCensus census = trispar::ComputeTripleCensus(g, exact.stats.triangles);
    const trispar::SampleBudget budget =
        method == Method::kNaive ? trispar::NaiveBudget(census, a.epsilon, a.delta)
                                 : trispar::BuriolBudget(census, a.epsilon, a.delta);
    std::cout << "budget r=" << budget.r << " (epsilon=" << Num(a.epsilon)
              << " delta=" << Num(a.delta) << ")\n";
    report["budget"] = {{"epsilon", a.epsilon}, {"delta", a.delta}, {"r", budget.r}};
    if (budget.r > a.max_r) {
      std::cout << "budget exceeds --max-r " << a.max_r << "; not sampling\n";
      report["infeasible"] = true;
      Emit(report, json_path);
      return 0;
    }
    r = budget.r;
  }
  trispar::Stopwatch clock;
  const double estimate = method == Method::kNaive ? trispar::NaiveSample(g, r, a.seed, threads)
                                                   : trispar::BuriolSample(g, r, a.seed, threads);
  const double seconds = clock.Elapsed();
  ExperimentRecord rec;
  rec.graph_id = l.id;
  rec.method = method;
  rec.parameters = {{"r", static_cast<double>(r)}};
  rec.estimate = estimate;
  rec.timings = {l.load_seconds, 0, seconds, seconds};
  rec.seed = a.seed;
  rec.SetExact(exact.stats.triangles);
  Table table = RecordTable();
  table.Add(RecordRow(rec));
  table.Print(std::cout);
  report["records"] = json::array({trispar::ToJson(rec)});
  Emit(report, json_path);
  return 0;
}

struct BenchArgs {
  std::string file;
  bool full = false;
  double p0 = 0;
  int runs = 6;
  double threshold = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t r = 1'000'000;
};

int RunBench(const BenchArgs& a, int threads, const std::string& json_path) {
  const Loaded l = Load(a.file, false);
  const trispar::Graph& g = l.loaded.graph;
  PrintGraph(l);
  json report = trispar::MakeReport("bench");
  report["graph"] = GraphJson(l);

  std::vector<ExperimentRecord> records;
  const ExactRun node = TimedExact(g, trispar::Counter::kNodeIterator, 1, true);
  const ExactRun edge = TimedExact(g, trispar::Counter::kEdgeIterator, 1);
  records.push_back(ExactRecord(l, trispar::Counter::kNodeIterator, node));
  records.push_back(ExactRecord(l, trispar::Counter::kEdgeIterator, edge));
  const std::uint64_t t = node.stats.triangles;

  AdaptiveArgs aa{.file = a.file, .p0 = a.p0, .runs = a.runs, .threshold = a.threshold,
                  .seed = a.seed, .skip_exact = true};
  AdaptiveOutcome o = DoAdaptive(g, aa, threads);
  o.exact = node;
  {
    ExperimentRecord r;
    r.graph_id = l.id;
    r.method = Method::kAdaptive;
    r.parameters = {{"p_star", o.report.p_star},
                    {"threshold", a.threshold},
                    {"trials_per_p", static_cast<double>(a.runs)}};
    r.estimate = o.report.final_estimate;
    double sparsify = 0, count = 0;
    for (const auto& b : o.report.trace) {
      for (const auto& e : b.trials) {
        sparsify += e.sparsify_seconds;
        count += e.count_seconds;
      }
    }
    r.timings = {l.load_seconds, sparsify, count, o.report.total_seconds};
    r.seed = a.seed;
    r.SetExact(t);
    records.push_back(r);
  }
  if (a.full && g.num_vertices() >= 3 && g.num_edges() >= 1) {
    for (Method m : {Method::kNaive, Method::kBuriol}) {
      trispar::Stopwatch clock;
      const double est = m == Method::kNaive ? trispar::NaiveSample(g, a.r, a.seed, threads)
                                             : trispar::BuriolSample(g, a.r, a.seed, threads);
      const double seconds = clock.Elapsed();
      ExperimentRecord r;
      r.graph_id = l.id;
      r.method = m;
      r.parameters = {{"r", static_cast<double>(a.r)}};
      r.estimate = est;
      r.timings = {l.load_seconds, 0, seconds, seconds};
      r.seed = a.seed;
      r.SetExact(t);
      records.push_back(r);
    }
  }
  Table table = RecordTable();
  json jrecords = json::array();
  for (const auto& r : records) {
    table.Add(RecordRow(r));
    jrecords.push_back(trispar::ToJson(r));
  }
  table.Print(std::cout);
  report["records"] = std::move(jrecords);
  PrintAdaptive(o, g, report);
  if (a.full && t > 0) {
    const trispar::TripleCensus c = trispar::ComputeTripleCensus(g, t);
    const auto naive = trispar::NaiveBudget(c, 0.1, 0.1);
    const auto buriol = trispar::BuriolBudget(c, 0.1, 0.1);
    std::cout << "budget(epsilon=0.1,delta=0.1) naive_r=" << naive.r
              << " buriol_r=" << buriol.r << '\n';
    report["budgets"] = {{"epsilon", 0.1}, {"delta", 0.1},
                         {"naive_r", naive.r}, {"buriol_r", buriol.r}};
  }
  Emit(report, json_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and sparsified triangle counting"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  int threads = 0;
  app.add_option("--json", json_path, "Write a JSON report to this path");
  app.add_option("--threads", threads, "Worker threads (0 = available parallelism)")
      ->check(CLI::NonNegativeNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->add_option("model", gen.model,
                      "book:K | weighted_book:K:W | gnp:N:Q | complete:N")
      ->required();
  gen_cmd->add_option("-o,--output", gen.output, "Edge-list output file")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Exact triangle count");
  count_cmd->add_option("file", count.file)->required();
  count_cmd->add_option("--algo", count.algo)
      ->check(CLI::IsMember({"node", "edge", "brute"}));
  count_cmd->add_flag("--census", count.census, "Print the triple census");
  count_cmd->add_flag("--delta", count.delta, "Compute the largest per-edge triangle count");
  count_cmd->add_flag("--weighted", count.weighted, "Read weights and count weighted triangles");

  EstimateArgs est;
  auto* est_cmd = app.add_subcommand("estimate", "Sparsify and estimate");
  est_cmd->add_option("file", est.file)->required();
  est_cmd->add_option("--p", est.p, "Edge retention probability")->required();
  est_cmd->add_option("--seed", est.seed, "Seed of the first run; run i uses seed + i")
      ->required();
  est_cmd->add_option("--runs", est.runs)->check(CLI::PositiveNumber);
  est_cmd->add_option("--algo", est.algo)->check(CLI::IsMember({"node", "edge"}));
  est_cmd->add_flag("--skip-exact", est.skip_exact, "Do not compute the exact count");
  est_cmd->add_flag("--weighted", est.weighted, "Weighted sparsification");
  est_cmd->add_option("--write-sparsified", est.write_sparsified,
                      "Write the first run's sparsified graph here");

  AdaptiveArgs ad;
  auto* ad_cmd = app.add_subcommand("adaptive", "Doubling search for the sampling rate");
  ad_cmd->add_option("file", ad.file)->required();
  ad_cmd->add_option("--p0", ad.p0, "Initial p (default max(n^-1/2, 0.001))");
  ad_cmd->add_option("--runs", ad.runs, "Trials per p")->check(CLI::Range(2, 1 << 20));
  ad_cmd->add_option("--threshold", ad.threshold, "Relative spread threshold");
  ad_cmd->add_option("--seed", ad.seed, "Master seed");
  ad_cmd->add_option("--algo", ad.algo)->check(CLI::IsMember({"node", "edge"}));
  ad_cmd->add_flag("--skip-exact", ad.skip_exact, "Do not compute the exact count");
  ad_cmd->add_flag("--conditions", ad.conditions,
                   "Evaluate the density conditions at p* (needs the exact count)");

  BaselineArgs base;
  auto* base_cmd = app.add_subcommand("baseline", "Triple or edge+node sampling");
  base_cmd->add_option("file", base.file)->required();
  base_cmd->add_option("--method", base.method)
      ->required()
      ->check(CLI::IsMember({"naive", "buriol"}));
  auto* r_opt = base_cmd->add_option("--r", base.r, "Number of trials")
                    ->check(CLI::PositiveNumber);
  auto* eps_opt = base_cmd->add_option("--epsilon", base.epsilon, "Relative error target");
  auto* delta_opt = base_cmd->add_option("--delta", base.delta, "Failure probability");
  eps_opt->needs(delta_opt);
  delta_opt->needs(eps_opt);
  r_opt->excludes(eps_opt);
  base_cmd->add_option("--seed", base.seed);
  base_cmd->add_option("--max-r", base.max_r, "Refuse budgets above this");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Exact, adaptive and baseline comparison");
  bench_cmd->add_option("file", bench.file)->required();
  bench_cmd->add_flag("--full", bench.full, "Include the sampling baselines");
  bench_cmd->add_option("--p0", bench.p0);
  bench_cmd->add_option("--runs", bench.runs)->check(CLI::Range(2, 1 << 20));
  bench_cmd->add_option("--threshold", bench.threshold);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--r", bench.r, "Baseline trials")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return RunGen(gen, json_path);
    if (*count_cmd) return RunCount(count, threads, json_path);
    if (*est_cmd) return RunEstimate(est, threads, json_path);
    if (*ad_cmd) return RunAdaptive(ad, threads, json_path);
    if (*base_cmd) {
      if (base.r == 0 && base.epsilon == 0) {
        std::cerr << "baseline: give --r or --epsilon/--delta\n";
        return 2;
      }
      return RunBaseline(base, threads, json_path);
    }
    if (*bench_cmd) return RunBench(bench, threads, json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
