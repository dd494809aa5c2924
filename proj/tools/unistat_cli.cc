// Copyright 2026 The unistat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// unistat: command-line front end over the libunistat C API.
//
// Exit codes: 0 holds / Accept, 1 fails / Reject, 2 usage, parse or size-cap
// error, 3 internal error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unistat/unistat.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GraphDeleter {
  void operator()(unistat_graph* g) const { unistat_graph_free(g); }
};
using GraphPtr = std::unique_ptr<unistat_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { unistat_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct Options {
  bool json = false;
  bool timing = false;
};

// Carries an exit code and message out of a command.
struct CommandError {
  int code;
  std::string message;
};

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, h);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_for(unistat_status s) {
  return s == UNISTAT_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

void check_status(unistat_status s) {
  if (s != UNISTAT_OK) {
    throw CommandError{exit_for(s), std::string(unistat_status_name(s)) +
                                        ": " + unistat_last_error()};
  }
}

GraphPtr load_graph(const std::string& text) {
  unistat_graph* raw = nullptr;
  std::size_t line = 0;
  check_status(unistat_graph_parse(text.data(), text.size(), &raw, &line));
  return GraphPtr(raw);
}

ordered_json witness_json(const unistat_witness& w) {
  switch (w.kind) {
    case UNISTAT_WITNESS_VERTEX:
      return {{"vertex", w.vertex}};
    case UNISTAT_WITNESS_EDGE:
      return {{"edge", w.edge}, {"tail", w.tail}, {"head", w.head}};
    default:
      return nullptr;
  }
}

std::string witness_text(const unistat_witness& w) {
  switch (w.kind) {
    case UNISTAT_WITNESS_VERTEX:
      return "vertex " + std::to_string(w.vertex);
    case UNISTAT_WITNESS_EDGE:
      return "edge " + std::to_string(w.edge) + " (" + std::to_string(w.tail) +
             " -> " + std::to_string(w.head) + ")";
    default:
      return "none";
  }
}

// One machine-readable record per invocation.
struct RunRecord {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> digest;
  std::optional<std::uint64_t> seed;
  ordered_json result = ordered_json::object();
  std::optional<std::uint64_t> queries_used;
  int exit_code = 0;

  ordered_json to_json(const Options& opts, double wall_ms) const {
    ordered_json j;
    j["command"] = command;
    if (input) j["input"] = *input;
    if (digest) j["input_digest"] = *digest;
    if (seed) j["seed"] = *seed;
    j["result"] = result;
    if (queries_used) j["queries_used"] = *queries_used;
    j["exit"] = exit_code;
    if (opts.timing) j["wall_ms"] = wall_ms;
    return j;
  }
};

// ---- check ---------------------------------------------------------------

int cmd_check(const std::string& path, RunRecord& rec, std::ostream& out,
              const Options& opts) {
  const std::string text = read_file(path);
  rec.input = path;
  rec.digest = fnv1a_digest(text);
  GraphPtr g = load_graph(text);
  unistat_check_report report{};
  const unistat_status s = unistat_check(g.get(), &report);
  if (s == UNISTAT_ERR_NOT_DEGREE_DELTA) {
    throw CommandError{kExitUsage, "not degree-Δ: " +
                                       std::string(unistat_last_error())};
  }
  check_status(s);
  rec.result["delta"] = report.delta;
  rec.result["property_p"] = report.property_p != 0;
  rec.result["uniform_stationary"] = report.uniform_stationary != 0;
  rec.result["witness"] = witness_json(report.witness);
  ordered_json comps = ordered_json::array();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < report.num_components; ++i) {
    unistat_component_report c{};
    check_status(unistat_check_component(g.get(), i, &c));
    ordered_json cj;
    cj["smallest_vertex"] = c.smallest_vertex;
    cj["vertices"] = c.num_vertices;
    std::string line = "component " + std::to_string(i) + " (vertex " +
                       std::to_string(c.smallest_vertex) + ", " +
                       std::to_string(c.num_vertices) + " vertices): ";
    switch (c.kind) {
      case UNISTAT_CLASS_NON_BIPARTITE_EULERIAN:
        cj["classification"] = "NonBipartiteEulerian";
        line += "NonBipartiteEulerian";
        break;
      case UNISTAT_CLASS_BIPARTITE_BALANCED:
        cj["classification"] = "BipartiteBalanced";
        cj["k1"] = c.k1;
        cj["k2"] = c.k2;
        cj["left_size"] = c.left_size;
        cj["right_size"] = c.right_size;
        line += "BipartiteBalanced(" + std::to_string(c.k1) + "," +
                std::to_string(c.k2) + ") sides " +
                std::to_string(c.left_size) + "/" +
                std::to_string(c.right_size);
        break;
      case UNISTAT_CLASS_VIOLATION:
        cj["classification"] = "Violation";
        cj["witness"] = witness_json(c.witness);
        line += "Violation at " + witness_text(c.witness);
        break;
    }
    comps.push_back(std::move(cj));
    lines.push_back(std::move(line));
  }
  rec.result["components"] = std::move(comps);
  const bool holds = report.property_p != 0;
  if (!opts.json) {
    out << (holds ? "P holds; uniform stationary"
                  : "P fails; not uniform stationary")
        << '\n';
    out << "delta: " << report.delta << '\n';
    if (!holds) out << "witness: " << witness_text(report.witness) << '\n';
    for (const auto& l : lines) out << l << '\n';
  }
  return holds ? kExitHolds : kExitFails;
}

// ---- test ----------------------------------------------------------------

struct TestArgs {
  std::string path;
  double eps = 0.1;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  bool exact = false;
  unsigned workers = 0;
};

unistat_test_params make_params(const TestArgs& a, std::uint64_t seed) {
  unistat_test_params p{};
  p.eps = a.eps;
  p.alpha = a.alpha.value_or(0.0);
  p.has_alpha = a.alpha ? 1 : 0;
  p.exact = a.exact ? 1 : 0;
  p.seed = seed;
  return p;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    throw CommandError{kExitUsage, "--seeds expects A..B"};
  }
  try {
    const std::uint64_t a = std::stoull(s.substr(0, dots));
    const std::uint64_t b = std::stoull(s.substr(dots + 2));
    if (b < a) throw CommandError{kExitUsage, "--seeds range is empty"};
    return {a, b};
  } catch (const std::logic_error&) {
    throw CommandError{kExitUsage, "--seeds expects A..B"};
  }
}

const char* decision_name(unistat_decision d) {
  switch (d) {
    case UNISTAT_ACCEPT: return "Accept";
    case UNISTAT_REJECT: return "Reject";
    default: return "NotApplicable";
  }
}

int cmd_test(const TestArgs& a, RunRecord& rec, std::ostream& out,
             const Options& opts) {
  if (!(a.eps > 0 && a.eps <= 1)) {
    throw CommandError{kExitUsage, "--eps must lie in (0, 1]"};
  }
  if (!a.exact && !a.alpha) {
    throw CommandError{kExitUsage, "--alpha is required unless --exact is given"};
  }
  if (!a.seed && a.seeds.empty()) {
    throw CommandError{kExitUsage, "--seed or --seeds is required"};
  }
  const std::string text = read_file(a.path);
  rec.input = a.path;
  rec.digest = fnv1a_digest(text);
  GraphPtr g = load_graph(text);

  if (a.seeds.empty()) {
    rec.seed = *a.seed;
    unistat_verdict v{};
    const unistat_test_params p = make_params(a, *a.seed);
    check_status(unistat_test(g.get(), &p, &v));
    if (v.decision == UNISTAT_NOT_APPLICABLE) {
      throw CommandError{kExitUsage, "not degree-Δ: tester not applicable"};
    }
    rec.result["decision"] = decision_name(v.decision);
    rec.result["queries"] = v.queries_used;
    rec.result["budget"] = v.budget_allowed;
    rec.result["budget_exhausted"] = v.budget_exhausted != 0;
    rec.result["witness"] = witness_json(v.witness);
    rec.queries_used = v.queries_used;
    if (!opts.json) {
      out << decision_name(v.decision) << '\n';
      out << "queries: " << v.queries_used << " / budget " << v.budget_allowed
          << (v.budget_exhausted ? " (budget exhausted)" : "") << '\n';
      if (v.decision == UNISTAT_REJECT) {
        out << "witness: " << witness_text(v.witness) << '\n';
      }
    }
    return v.decision == UNISTAT_ACCEPT ? kExitHolds : kExitFails;
  }

  const auto [first, last] = parse_range(a.seeds);
  const std::uint64_t runs = last - first + 1;
  std::vector<unistat_verdict> verdicts(runs);
  std::vector<unistat_status> statuses(runs, UNISTAT_OK);
  std::atomic<std::uint64_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(a.workers > 0 ? a.workers : hw, runs));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < runs; i = next++) {
        const unistat_test_params p = make_params(a, first + i);
        statuses[i] = unistat_test(g.get(), &p, &verdicts[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  std::uint64_t rejects = 0;
  std::uint64_t total_queries = 0;
  std::uint64_t max_queries = 0;
  for (std::uint64_t i = 0; i < runs; ++i) {
    if (statuses[i] != UNISTAT_OK) {
      throw CommandError{exit_for(statuses[i]),
                         "seed " + std::to_string(first + i) + ": " +
                             unistat_status_name(statuses[i])};
    }
    if (verdicts[i].decision == UNISTAT_NOT_APPLICABLE) {
      throw CommandError{kExitUsage, "not degree-Δ: tester not applicable"};
    }
    rejects += verdicts[i].decision == UNISTAT_REJECT ? 1 : 0;
    total_queries += verdicts[i].queries_used;
    max_queries = std::max(max_queries, verdicts[i].queries_used);
  }
  const double rate = static_cast<double>(rejects) / static_cast<double>(runs);
  rec.result["seeds"] = {first, last};
  rec.result["runs"] = runs;
  rec.result["rejects"] = rejects;
  rec.result["reject_rate"] = rate;
  rec.result["max_queries"] = max_queries;
  rec.result["budget"] = verdicts.front().budget_allowed;
  rec.queries_used = total_queries;
  if (!opts.json) {
    out << "runs: " << runs << ", rejects: " << rejects
        << ", reject rate: " << rate << '\n';
    out << "max queries: " << max_queries << " / budget "
        << verdicts.front().budget_allowed << '\n';
  }
  return rejects > 0 ? kExitFails : kExitHolds;
}

// ---- stationary ----------------------------------------------------------

int cmd_stationary(const std::string& path, double tol,
                   std::uint64_t max_iters, RunRecord& rec, std::ostream& out,
                   const Options& opts) {
  const std::string text = read_file(path);
  rec.input = path;
  rec.digest = fnv1a_digest(text);
  GraphPtr g = load_graph(text);
  const std::size_t n = unistat_graph_num_vertices(g.get());

  std::optional<std::string> exact;
  char* raw = nullptr;
  const unistat_status es = unistat_stationary_exact(g.get(), &raw);
  CString exact_text(raw);
  if (es == UNISTAT_OK) {
    exact = exact_text.get();
  } else if (es == UNISTAT_ERR_WALK_UNDEFINED) {
    throw CommandError{kExitUsage, unistat_last_error()};
  } else if (es == UNISTAT_ERR_INTERNAL) {
    check_status(es);
  }

  unistat_walk_params params{tol, max_iters, 1};
  unistat_stationary_info info{};
  std::vector<double> pi(n);
  check_status(unistat_stationary(g.get(), &params, pi.data(), &info));

  rec.result["exact"] = exact ? ordered_json(*exact) : ordered_json(nullptr);
  rec.result["numeric"] = pi;
  rec.result["iterations"] = info.iterations;
  rec.result["residual"] = info.residual;
  rec.result["converged"] = info.converged != 0;
  rec.result["verified"] = info.verified != 0;
  if (!opts.json) {
    if (exact) {
      out << *exact << '\n';
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", pi[i]);
        out << (i ? " " : "") << buf;
      }
      out << '\n';
    }
    out << "# power iteration: iterations=" << info.iterations
        << " residual=" << info.residual
        << " converged=" << (info.converged ? "yes" : "no")
        << " strongly-connected=" << (info.verified ? "yes" : "no") << '\n';
  }
  return info.converged ? kExitHolds : kExitFails;
}

// ---- distance ------------------------------------------------------------

int cmd_distance(const std::string& path, const std::string& target,
                 RunRecord& rec, std::ostream& out, const Options& opts) {
  unistat_target t;
  if (target == "euler" || target == "eulerian") {
    t = UNISTAT_TARGET_EULERIAN;
  } else if (target == "p" || target == "property-p") {
    t = UNISTAT_TARGET_PROPERTY_P;
  } else {
    throw CommandError{kExitUsage, "--target must be euler or p"};
  }
  const std::string text = read_file(path);
  rec.input = path;
  rec.digest = fnv1a_digest(text);
  GraphPtr g = load_graph(text);
  unistat_distance_result r{};
  check_status(unistat_distance(g.get(), t, &r));
  rec.result["target"] = t == UNISTAT_TARGET_EULERIAN ? "euler" : "p";
  rec.result["reachable"] = r.reachable != 0;
  if (!r.reachable) {
    rec.result["min_flips"] = nullptr;
    if (!opts.json) out << "unreachable\n";
    return kExitFails;
  }
  // Reduced fraction min_flips / m.
  std::uint64_t num = r.min_flips;
  std::uint64_t den = r.num_edges;
  const std::uint64_t d = std::gcd(num, den == 0 ? 1 : den);
  if (d > 0) {
    num /= d;
    den /= d;
  }
  const std::string frac = num == 0 ? "0" : std::to_string(num) + "/" +
                                                std::to_string(den);
  rec.result["min_flips"] = r.min_flips;
  rec.result["fraction"] = frac;
  rec.result["witness"] =
      std::vector<std::uint32_t>(r.witness, r.witness + r.witness_len);
  if (!opts.json) out << r.min_flips << " (" << frac << ")\n";
  return r.min_flips == 0 ? kExitHolds : kExitFails;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string family = "cycle";
  std::uint32_t n = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t delta = 0;
  std::uint32_t dim = 0;
  std::string mode = "random";
  std::uint32_t k1 = 0;
  std::uint32_t k2 = 0;
  std::uint64_t seed = 0;
  std::optional<double> plant_eps;
  std::string output;
};

int cmd_gen(const GenArgs& a, RunRecord& rec, std::ostream& out,
            const Options& opts) {
  unistat_gen_spec spec{};
  spec.seed = a.seed;
  rec.seed = a.seed;
  if (a.family == "cycle") {
    spec.family = UNISTAT_FAMILY_CYCLE;
    spec.p1 = a.n;
  } else if (a.family == "kbip") {
    spec.family = UNISTAT_FAMILY_COMPLETE_BIPARTITE;
    spec.p1 = a.a;
    spec.p2 = a.b;
  } else if (a.family == "regular") {
    spec.family = UNISTAT_FAMILY_REGULAR_RANDOM;
    spec.p1 = a.n;
    spec.p2 = a.delta;
  } else if (a.family == "hypercube") {
    spec.family = UNISTAT_FAMILY_HYPERCUBE;
    spec.p1 = a.dim;
  } else if (a.family == "petersen") {
    spec.family = UNISTAT_FAMILY_PETERSEN;
  } else if (a.family == "complete") {
    spec.family = UNISTAT_FAMILY_COMPLETE;
    spec.p1 = a.n;
  } else {
    throw CommandError{kExitUsage, "unknown --family " + a.family};
  }
  if (a.mode == "random") {
    spec.mode = UNISTAT_MODE_RANDOM;
  } else if (a.mode == "eulerian") {
    spec.mode = UNISTAT_MODE_EULERIAN;
  } else if (a.mode == "p") {
    spec.mode = UNISTAT_MODE_PROPERTY_P;
    spec.k1 = a.k1;
    spec.k2 = a.k2;
  } else if (a.mode == "one-way") {
    spec.mode = UNISTAT_MODE_ALL_ONE_WAY;
  } else {
    throw CommandError{kExitUsage, "unknown --mode " + a.mode};
  }
  unistat_graph* raw = nullptr;
  check_status(unistat_generate(&spec, &raw));
  GraphPtr g(raw);
  if (a.plant_eps) {
    unistat_graph* planted = nullptr;
    std::uint32_t flips = 0;
    double certificate = 0;
    check_status(unistat_plant_far(g.get(), *a.plant_eps, a.seed, &planted,
                                   &flips, &certificate));
    g.reset(planted);
    rec.result["planted_flips"] = flips;
    rec.result["certificate"] = certificate;
  }
  char* text_raw = nullptr;
  check_status(unistat_graph_serialize(g.get(), &text_raw));
  CString text(text_raw);
  rec.result["n"] = unistat_graph_num_vertices(g.get());
  rec.result["m"] = unistat_graph_num_edges(g.get());
  rec.digest = fnv1a_digest(text.get());
  if (!a.output.empty()) {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw CommandError{kExitUsage, "cannot write " + a.output};
    f << text.get();
    rec.result["output"] = a.output;
  } else if (opts.json) {
    rec.result["graph"] = text.get();
  } else {
    out << text.get();
  }
  return kExitHolds;
}

// ---- reduce --------------------------------------------------------------

int cmd_reduce(const std::string& path, std::uint64_t seed, RunRecord& rec,
               std::ostream& out, const Options& opts) {
  const std::string text = read_file(path);
  rec.input = path;
  rec.digest = fnv1a_digest(text);
  rec.seed = seed;
  GraphPtr g = load_graph(text);
  char* raw = nullptr;
  unistat_reduce_info info{};
  check_status(unistat_reduce(g.get(), seed, &raw, &info));
  CString result(raw);
  rec.queries_used = info.queries_used;
  switch (info.outcome) {
    case UNISTAT_REDUCE_OK:
      rec.result["outcome"] = "ok";
      if (opts.json) {
        rec.result["graph"] = result.get();
      } else {
        out << result.get();
      }
      return kExitHolds;
    case UNISTAT_REDUCE_SIZE_MISMATCH:
      rec.result["outcome"] = "side-size-mismatch";
      break;
    case UNISTAT_REDUCE_INFEASIBLE:
      rec.result["outcome"] = "gstar-infeasible";
      break;
  }
  rec.result["component_vertex"] = info.failing_component_vertex;
  if (!opts.json) {
    out << "P cannot hold: "
        << (info.outcome == UNISTAT_REDUCE_SIZE_MISMATCH
                ? "bipartition sides differ in size"
                : "no G* realizes the swapped degrees")
        << " (component of vertex " << info.failing_component_vertex << ")\n";
  }
  return kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and sublinear tests of uniform stationarity for random "
               "walks on degree-Delta oriented graphs"};
  app.set_version_flag("--version", std::string(unistat_version()));
  Options opts;
  app.add_flag("--json", opts.json, "Emit a single JSON run record");
  app.add_flag("--timing", opts.timing, "Include wall time in the record");
  app.require_subcommand(1);
  app.fallthrough();

  std::string path;
  auto* check = app.add_subcommand("check", "Exact property-P and stationarity check");
  check->add_option("file", path, "Graph file")->required();

  TestArgs targs;
  auto* test = app.add_subcommand("test", "Run the orientation-model uniformity tester");
  test->add_option("file", targs.path, "Graph file")->required();
  test->add_option("--eps", targs.eps, "Farness parameter in (0, 1]");
  test->add_option("--alpha", targs.alpha, "Expansion promise sizing the budget");
  test->add_option("--seed", targs.seed, "64-bit seed");
  test->add_option("--seeds", targs.seeds, "Seed range A..B, run in parallel");
  test->add_option("--workers", targs.workers, "Threads for --seeds");
  test->add_flag("--exact", targs.exact, "Query every edge and decide exactly");

  double tol = 1e-12;
  std::uint64_t max_iters = 0;
  auto* stationary = app.add_subcommand("stationary", "Stationary distribution");
  stationary->add_option("file", path, "Graph file")->required();
  stationary->add_option("--tol", tol, "L-infinity convergence threshold");
  stationary->add_option("--max-iters", max_iters, "Iteration cap (0 = default)");

  std::string target = "p";
  auto* distance = app.add_subcommand("distance", "Exact distance by brute force");
  distance->add_option("file", path, "Graph file")->required();
  distance->add_option("--target", target, "euler or p");

  GenArgs gargs;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", gargs.family,
                  "cycle, kbip, regular, hypercube, petersen, complete");
  gen->add_option("--n", gargs.n, "Vertex count (cycle, regular, complete)");
  gen->add_option("--a", gargs.a, "Left side size (kbip)");
  gen->add_option("--b", gargs.b, "Right side size (kbip)");
  gen->add_option("--delta", gargs.delta, "Degree (regular)");
  gen->add_option("--dim", gargs.dim, "Dimension (hypercube)");
  gen->add_option("--mode", gargs.mode, "random, eulerian, p, one-way");
  gen->add_option("--k1", gargs.k1, "Left in-degree (mode p)");
  gen->add_option("--k2", gargs.k2, "Left out-degree (mode p)");
  gen->add_option("--seed", gargs.seed, "64-bit seed");
  gen->add_option("--plant-eps", gargs.plant_eps,
                  "Plant a certified eps-far instance (Eulerian input)");
  gen->add_option("-o,--output", gargs.output, "Write the graph here");

  std::uint64_t reduce_seed = 0;
  auto* reduce = app.add_subcommand("reduce", "Print the superimposition used by the tester");
  reduce->add_option("file", path, "Graph file")->required();
  reduce->add_option("--seed", reduce_seed, "Seed for the sampled vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RunRecord rec;
  std::ostringstream text_out;
  const auto started = std::chrono::steady_clock::now();
  int code = kExitHolds;
  try {
    if (check->parsed()) {
      rec.command = "check";
      code = cmd_check(path, rec, text_out, opts);
    } else if (test->parsed()) {
      rec.command = "test";
      code = cmd_test(targs, rec, text_out, opts);
    } else if (stationary->parsed()) {
      rec.command = "stationary";
      code = cmd_stationary(path, tol, max_iters, rec, text_out, opts);
    } else if (distance->parsed()) {
      rec.command = "distance";
      code = cmd_distance(path, target, rec, text_out, opts);
    } else if (gen->parsed()) {
      rec.command = "gen";
      code = cmd_gen(gargs, rec, text_out, opts);
    } else if (reduce->parsed()) {
      rec.command = "reduce";
      code = cmd_reduce(path, reduce_seed, rec, text_out, opts);
    }
  } catch (const CommandError& e) {
    code = e.code;
    rec.result["error"] = e.message;
    if (!opts.json) std::cerr << "unistat " << rec.command << ": " << e.message << '\n';
  }
  rec.exit_code = code;
  const double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  if (opts.json) {
    std::cout << rec.to_json(opts, wall_ms).dump() << '\n';
  } else {
    std::cout << text_out.str();
    if (opts.timing) std::cout << "# wall_ms=" << wall_ms << '\n';
  }
  return code;
}
