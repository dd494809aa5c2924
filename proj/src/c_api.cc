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

#include "unistat/unistat.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "unistat/bruteforce.h"
#include "unistat/errors.h"
#include "unistat/genlab.h"
#include "unistat/markov.h"
#include "unistat/oracle.h"
#include "unistat/reduction.h"
#include "unistat/structure.h"
#include "unistat/testers.h"

struct unistat_graph {
  unistat::OrientedGraph graph;
  std::vector<unistat::Component> components;

  explicit unistat_graph(unistat::OrientedGraph g)
      : graph(std::move(g)),
        components(unistat::connected_components(graph.underlying())) {}
};

namespace {

using namespace unistat;

thread_local std::string g_last_error;

unistat_status fail(unistat_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body and maps library exceptions onto status codes.
template <typename Body>
unistat_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(UNISTAT_ERR_PARSE, e.what());
  } catch (const CapExceeded& e) {
    return fail(UNISTAT_ERR_CAP_EXCEEDED, e.what());
  } catch (const WalkUndefined& e) {
    return fail(UNISTAT_ERR_WALK_UNDEFINED, e.what());
  } catch (const GenerationError& e) {
    return fail(UNISTAT_ERR_GENERATION, e.what());
  } catch (const InvalidGraph& e) {
    return fail(UNISTAT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(UNISTAT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UNISTAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UNISTAT_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

unistat_witness to_c(const std::optional<Witness>& w) {
  unistat_witness out{};
  out.kind = UNISTAT_WITNESS_NONE;
  if (!w) return out;
  if (const auto* vw = std::get_if<VertexWitness>(&*w)) {
    out.kind = UNISTAT_WITNESS_VERTEX;
    out.vertex = vw->vertex;
  } else {
    const auto& ew = std::get<EdgeWitness>(*w);
    out.kind = UNISTAT_WITNESS_EDGE;
    out.edge = ew.edge;
    out.tail = ew.tail;
    out.head = ew.head;
  }
  return out;
}

#define UNISTAT_REQUIRE(cond, what)                               \
  do {                                                            \
    if (!(cond)) return fail(UNISTAT_ERR_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* unistat_last_error(void) { return g_last_error.c_str(); }

const char* unistat_status_name(unistat_status status) {
  switch (status) {
    case UNISTAT_OK: return "ok";
    case UNISTAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case UNISTAT_ERR_PARSE: return "parse error";
    case UNISTAT_ERR_NOT_DEGREE_DELTA: return "not degree-Delta";
    case UNISTAT_ERR_CAP_EXCEEDED: return "size cap exceeded";
    case UNISTAT_ERR_WALK_UNDEFINED: return "walk undefined";
    case UNISTAT_ERR_GENERATION: return "generation refused";
    case UNISTAT_ERR_NOT_BIPARTITE: return "not bipartite";
    case UNISTAT_ERR_SINGULAR: return "singular system";
    case UNISTAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* unistat_version(void) { return "0.1.0"; }

void unistat_string_free(char* s) { std::free(s); }

unistat_status unistat_graph_parse(const char* text, size_t length,
                                   unistat_graph** out, size_t* error_line) {
  UNISTAT_REQUIRE(out != nullptr, "out is NULL");
  UNISTAT_REQUIRE(text != nullptr || length == 0, "text is NULL");
  *out = nullptr;
  try {
    *out = new unistat_graph(parse_graph(std::string_view(text, length)));
    return UNISTAT_OK;
  } catch (const ParseError& e) {
    if (error_line != nullptr) *error_line = e.line();
    return fail(UNISTAT_ERR_PARSE, e.what());
  } catch (...) {
    return guarded([]() -> unistat_status { throw; });
  }
}

void unistat_graph_free(unistat_graph* g) { delete g; }

size_t unistat_graph_num_vertices(const unistat_graph* g) {
  return g ? g->graph.num_vertices() : 0;
}

size_t unistat_graph_num_edges(const unistat_graph* g) {
  return g ? g->graph.num_edges() : 0;
}

int64_t unistat_graph_degree_delta(const unistat_graph* g) {
  if (g == nullptr) return -1;
  const auto delta = degree_delta(g->graph);
  return delta ? static_cast<int64_t>(*delta) : -1;
}

unistat_status unistat_graph_serialize(const unistat_graph* g, char** out) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return guarded([&] {
    *out = dup_string(serialize(g->graph));
    return UNISTAT_OK;
  });
}

unistat_status unistat_graph_arc(const unistat_graph* g, uint32_t e,
                                 uint32_t* tail, uint32_t* head) {
  UNISTAT_REQUIRE(g != nullptr && tail != nullptr && head != nullptr,
                  "NULL argument");
  UNISTAT_REQUIRE(e < g->graph.num_edges(), "edge id out of range");
  const Arc a = g->graph.arc(e);
  *tail = a.tail;
  *head = a.head;
  return UNISTAT_OK;
}

unistat_status unistat_graph_is_eulerian(const unistat_graph* g, int* out) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  *out = is_eulerian(g->graph) ? 1 : 0;
  return UNISTAT_OK;
}

unistat_status unistat_check(const unistat_graph* g,
                             unistat_check_report* out) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return guarded([&] {
    *out = unistat_check_report{};
    const auto delta = degree_delta(g->graph);
    if (!delta) {
      return fail(UNISTAT_ERR_NOT_DEGREE_DELTA,
                  "graph is not degree-Delta: undirected degrees differ");
    }
    const PropertyResult p = has_property_p(g->graph);
    const bool uniform = is_uniform_stationary_exact(g->graph);
    out->delta = *delta;
    out->property_p = p.holds() ? 1 : 0;
    out->uniform_stationary = uniform ? 1 : 0;
    out->num_components = g->components.size();
    out->witness = to_c(p.witness);
    if (p.holds() != uniform) {
      return fail(UNISTAT_ERR_INTERNAL,
                  "property P and exact uniform stationarity disagree");
    }
    return UNISTAT_OK;
  });
}

unistat_status unistat_check_component(const unistat_graph* g, size_t index,
                                       unistat_component_report* out) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  UNISTAT_REQUIRE(index < g->components.size(), "component index out of range");
  return guarded([&] {
    const Component& c = g->components[index];
    if (!degree_delta(c.graph)) {
      return fail(UNISTAT_ERR_NOT_DEGREE_DELTA, "component is not degree-Delta");
    }
    const StructureReport r = classify(g->graph, c);
    *out = unistat_component_report{};
    out->smallest_vertex = c.vertices.front();
    out->num_vertices = c.vertices.size();
    out->num_edges = c.parent_edges.size();
    out->property_p = r.property_p ? 1 : 0;
    out->uniform_stationary = r.uniform_stationary ? 1 : 0;
    out->witness = to_c(r.witness);
    if (std::holds_alternative<NonBipartiteEulerian>(r.classification)) {
      out->kind = UNISTAT_CLASS_NON_BIPARTITE_EULERIAN;
    } else if (const auto* b =
                   std::get_if<BipartiteBalanced>(&r.classification)) {
      out->kind = UNISTAT_CLASS_BIPARTITE_BALANCED;
      out->k1 = b->k1;
      out->k2 = b->k2;
      out->left_size = b->left_size;
      out->right_size = b->right_size;
    } else {
      out->kind = UNISTAT_CLASS_VIOLATION;
    }
    return UNISTAT_OK;
  });
}

unistat_status unistat_test(const unistat_graph* g,
                            const unistat_test_params* params,
                            unistat_verdict* out) {
  UNISTAT_REQUIRE(g != nullptr && params != nullptr && out != nullptr,
                  "NULL argument");
  UNISTAT_REQUIRE(params->eps > 0 && params->eps <= 1, "eps must lie in (0, 1]");
  UNISTAT_REQUIRE(params->exact || params->has_alpha,
                  "alpha is required unless exact mode is selected");
  return guarded([&] {
    QueryOracle oracle(g->graph.orientation());
    UniformityParams p;
    p.eps = params->eps;
    if (params->has_alpha) p.alpha = params->alpha;
    p.exact = params->exact != 0;
    p.seed = params->seed;
    const TesterVerdict v = uniformity_tester(oracle, g->graph.underlying(), p);
    *out = unistat_verdict{};
    switch (v.decision) {
      case Decision::kAccept: out->decision = UNISTAT_ACCEPT; break;
      case Decision::kReject: out->decision = UNISTAT_REJECT; break;
      case Decision::kNotApplicable:
        out->decision = UNISTAT_NOT_APPLICABLE;
        break;
    }
    out->queries_used = v.queries_used;
    out->budget_allowed = v.budget_allowed;
    out->oracle_counter = oracle.queries();
    out->budget_exhausted = v.budget_exhausted ? 1 : 0;
    out->witness = to_c(v.witness);
    return UNISTAT_OK;
  });
}

unistat_status unistat_budget(uint32_t delta, uint64_t num_edges, double eps,
                              double alpha, unistat_budget_mode mode,
                              uint64_t* out) {
  UNISTAT_REQUIRE(out != nullptr, "out is NULL");
  return guarded([&] {
    BudgetMode m = BudgetMode::kExpanderOneSided;
    if (mode == UNISTAT_BUDGET_EXACT) m = BudgetMode::kExact;
    if (mode == UNISTAT_BUDGET_LARGE_DEGREE) m = BudgetMode::kLargeDegreeOneSided;
    *out = budget_formula(delta, num_edges, eps, alpha, m).value;
    return UNISTAT_OK;
  });
}

unistat_status unistat_stationary(const unistat_graph* g,
                                  const unistat_walk_params* params,
                                  double* out, unistat_stationary_info* info) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return guarded([&] {
    WalkParams p;
    if (params != nullptr) {
      if (params->tol > 0) p.tol = params->tol;
      p.max_iters = params->max_iters;
      p.lazy = params->lazy != 0;
    }
    const StationaryResult r = stationary_distribution(g->graph, p);
    std::copy(r.distribution.begin(), r.distribution.end(), out);
    if (info != nullptr) {
      info->iterations = r.iterations;
      info->residual = r.residual;
      info->converged = r.converged ? 1 : 0;
      info->verified = r.verified ? 1 : 0;
    }
    return UNISTAT_OK;
  });
}

unistat_status unistat_stationary_exact(const unistat_graph* g, char** out) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const auto pi = stationary_linear_solve(g->graph);
    if (!pi) {
      return fail(UNISTAT_ERR_SINGULAR,
                  "stationary system has no unique solution");
    }
    std::string text;
    for (std::size_t i = 0; i < pi->size(); ++i) {
      if (i > 0) text += ' ';
      text += (*pi)[i].get_str();
    }
    *out = dup_string(text);
    return UNISTAT_OK;
  });
}

unistat_status unistat_distance(const unistat_graph* g, unistat_target target,
                                unistat_distance_result* out) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  return guarded([&] {
    const DistanceResult r = distance_to(
        g->graph, target == UNISTAT_TARGET_EULERIAN ? Target::kEulerian
                                                    : Target::kPropertyP);
    *out = unistat_distance_result{};
    out->reachable = r.reachable() ? 1 : 0;
    out->min_flips = r.min_flips.value_or(0);
    out->num_edges = r.num_edges;
    out->witness_len = r.witness.size();
    std::copy(r.witness.begin(), r.witness.end(), out->witness);
    return UNISTAT_OK;
  });
}

unistat_status unistat_generate(const unistat_gen_spec* spec,
                                unistat_graph** out) {
  UNISTAT_REQUIRE(spec != nullptr && out != nullptr, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    GenSpec s;
    s.seed = spec->seed;
    switch (spec->family) {
      case UNISTAT_FAMILY_CYCLE: s.family = Cycle{spec->p1}; break;
      case UNISTAT_FAMILY_COMPLETE_BIPARTITE:
        s.family = CompleteBipartite{spec->p1, spec->p2};
        break;
      case UNISTAT_FAMILY_REGULAR_RANDOM:
        s.family = DeltaRegularRandom{spec->p1, spec->p2};
        break;
      case UNISTAT_FAMILY_HYPERCUBE: s.family = Hypercube{spec->p1}; break;
      case UNISTAT_FAMILY_PETERSEN: s.family = Petersen{}; break;
      case UNISTAT_FAMILY_COMPLETE: s.family = CompleteGraph{spec->p1}; break;
      default: return fail(UNISTAT_ERR_INVALID_ARGUMENT, "unknown family");
    }
    switch (spec->mode) {
      case UNISTAT_MODE_RANDOM: s.mode = RandomOrientation{}; break;
      case UNISTAT_MODE_EULERIAN: s.mode = EulerianOrientation{}; break;
      case UNISTAT_MODE_PROPERTY_P:
        s.mode = PropertyPOrientation{spec->k1, spec->k2};
        break;
      case UNISTAT_MODE_ALL_ONE_WAY: s.mode = AllOneWay{}; break;
      default: return fail(UNISTAT_ERR_INVALID_ARGUMENT, "unknown mode");
    }
    *out = new unistat_graph(generate(s));
    return UNISTAT_OK;
  });
}

unistat_status unistat_plant_far(const unistat_graph* g, double eps,
                                 uint64_t seed, unistat_graph** out,
                                 uint32_t* flips, double* certificate) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    PlantedInstance p = plant_far(g->graph, eps, seed);
    if (flips != nullptr) *flips = p.flips;
    if (certificate != nullptr) *certificate = p.certificate;
    *out = new unistat_graph(std::move(p.graph));
    return UNISTAT_OK;
  });
}

unistat_status unistat_reduce(const unistat_graph* g, uint64_t seed,
                              char** out, unistat_reduce_info* info) {
  UNISTAT_REQUIRE(g != nullptr && out != nullptr && info != nullptr,
                  "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *info = unistat_reduce_info{};
    const UndirectedMultigraph& u = g->graph.underlying();
    if (!degree_delta(u)) {
      return fail(UNISTAT_ERR_NOT_DEGREE_DELTA, "graph is not degree-Delta");
    }
    QueryOracle oracle(g->graph.orientation());
    Orientation gstar(u.num_edges());
    for (std::size_t i = 0; i < g->components.size(); ++i) {
      const Component& c = g->components[i];
      if (!bipartition(u, c.vertices)) {
        return fail(UNISTAT_ERR_NOT_BIPARTITE,
                    "component containing vertex " +
                        std::to_string(c.vertices.front()) +
                        " is not bipartite; test it for Eulerianity directly");
      }
      const SpecResult spec =
          infer_bipartite_spec(oracle, u, c.vertices, seed + i);
      info->queries_used = oracle.queries();
      if (std::holds_alternative<SideSizeMismatch>(spec)) {
        info->outcome = UNISTAT_REDUCE_SIZE_MISMATCH;
        info->failing_component_vertex = c.vertices.front();
        return UNISTAT_OK;
      }
      const std::optional<Orientation> part =
          construct_gstar(u, std::get<BipartiteSpec>(spec));
      if (!part) {
        info->outcome = UNISTAT_REDUCE_INFEASIBLE;
        info->failing_component_vertex = c.vertices.front();
        return UNISTAT_OK;
      }
      for (EdgeId e : c.parent_edges) gstar.set(e, (*part)[e]);
    }
    const OrientedGraph sup = superimposed_graph(g->graph, gstar);
    const std::size_t m = u.num_edges();
    std::ostringstream text;
    text << "# superimposition: edges 0.." << (m == 0 ? 0 : m - 1)
         << " hidden (E), " << m << ".." << (2 * m == 0 ? 0 : 2 * m - 1)
         << " public (E*)\n";
    text << sup.num_vertices() << ' ' << sup.num_edges() << '\n';
    for (EdgeId e = 0; e < sup.num_edges(); ++e) {
      const Arc a = sup.arc(e);
      text << a.tail << ' ' << a.head << " #origin="
           << (origin_of(e, m) == EdgeOrigin::kHidden ? "E" : "E*") << '\n';
    }
    *out = dup_string(text.str());
    return UNISTAT_OK;
  });
}

}  // extern "C"
