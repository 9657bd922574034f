#include "algconn/algconn.h"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "algconn/canonical.hpp"
#include "algconn/errors.hpp"
#include "algconn/extremal.hpp"
#include "algconn/families.hpp"
#include "algconn/graph_io.hpp"
#include "algconn/perron.hpp"
#include "algconn/spectral.hpp"
#include "algconn/theorems.hpp"

struct algconn_graph {
  algconn::Graph graph;
};

namespace {

using json = nlohmann::ordered_json;
using namespace algconn;

thread_local std::string last_error;

algconn_status from_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return ALGCONN_ERR_INVALID_ARGUMENT;
    case ErrorCode::invalid_vertex: return ALGCONN_ERR_INVALID_VERTEX;
    case ErrorCode::disconnected: return ALGCONN_ERR_DISCONNECTED;
    case ErrorCode::parse_error: return ALGCONN_ERR_PARSE;
    case ErrorCode::cap_exceeded: return ALGCONN_ERR_CAP_EXCEEDED;
    case ErrorCode::not_cut_vertex: return ALGCONN_ERR_NOT_CUT_VERTEX;
    case ErrorCode::not_a_tree: return ALGCONN_ERR_NOT_A_TREE;
    case ErrorCode::not_a_bridge: return ALGCONN_ERR_NOT_A_BRIDGE;
    case ErrorCode::numerical: return ALGCONN_ERR_NUMERICAL;
    case ErrorCode::unknown_id: return ALGCONN_ERR_UNKNOWN_ID;
    case ErrorCode::empty_class: return ALGCONN_ERR_EMPTY_CLASS;
    case ErrorCode::internal: return ALGCONN_ERR_INTERNAL;
  }
  return ALGCONN_ERR_INTERNAL;
}

algconn_status fail(algconn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body() and maps exceptions to status codes.
template <class Body>
algconn_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return ALGCONN_OK;
  } catch (const Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ALGCONN_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ALGCONN_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Tolerances to_tolerances(const algconn_tolerances* t) {
  Tolerances out;
  if (!t) return out;
  out.multiplicity = t->multiplicity;
  out.disconnection = t->disconnection;
  out.zero_relative = t->zero_relative;
  out.perron_relative = t->perron_relative;
  out.tie = t->tie;
  return out;
}

json tolerances_json(const Tolerances& t) {
  return json{{"multiplicity", t.multiplicity},
              {"disconnection", t.disconnection},
              {"zero_relative", t.zero_relative},
              {"perron_relative", t.perron_relative},
              {"tie", t.tie}};
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

json graph_json(const Graph& g) {
  json out{{"order", g.order()}, {"size", g.size()}, {"graph6", to_graph6(g)}};
  if (g.order() <= kCanonicalMaxOrder) out["canonical_form"] = canonical_form(g);
  out["edges"] = edges_json(g.edges());
  return out;
}

json family_json(const FamilySpec& f) {
  return json{{"name", family_name(f.id)}, {"params", f.params}};
}

std::string report(std::string_view command, json inputs, json results, const Tolerances& tol) {
  json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["tolerances"] = tolerances_json(tol);
  return out.dump(2) + "\n";
}

bool valid_out(const void* p) { return p != nullptr; }

std::optional<int> optional_param(int p) {
  if (p < 0) return std::nullopt;
  return p;
}

json extremal_json(const ExtremalReport& r) {
  json out{{"objective", objective_name(r.objective)},
           {"optimum", r.optimum},
           {"extremizers", r.extremizers},
           {"unique", r.unique}};
  if (r.claimed_family) {
    out["claimed_family"] = family_json(*r.claimed_family);
    out["claimed_value"] = *r.claimed_value;
    out["claimed_is_extremizer"] = r.claimed_is_extremizer;
  } else {
    out["claimed_family"] = nullptr;
  }
  return out;
}

}  // namespace

extern "C" {

algconn_tolerances algconn_tolerances_default(void) {
  const Tolerances t;
  return algconn_tolerances{t.multiplicity, t.disconnection, t.zero_relative, t.perron_relative,
                            t.tie};
}

const char* algconn_status_string(algconn_status status) {
  switch (status) {
    case ALGCONN_OK: return "ok";
    case ALGCONN_ERR_NULL_POINTER: return "null pointer";
    case ALGCONN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ALGCONN_ERR_INVALID_VERTEX: return "invalid vertex";
    case ALGCONN_ERR_DISCONNECTED: return "graph is disconnected";
    case ALGCONN_ERR_PARSE: return "malformed graph text";
    case ALGCONN_ERR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case ALGCONN_ERR_NOT_CUT_VERTEX: return "not a cut vertex";
    case ALGCONN_ERR_NOT_A_TREE: return "not a tree";
    case ALGCONN_ERR_NOT_A_BRIDGE: return "edge lies on a cycle";
    case ALGCONN_ERR_NUMERICAL: return "numerical failure";
    case ALGCONN_ERR_UNKNOWN_ID: return "unknown identifier";
    case ALGCONN_ERR_EMPTY_CLASS: return "empty graph class";
    case ALGCONN_ERR_INTERNAL: return "internal error";
    case ALGCONN_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case ALGCONN_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* algconn_last_error_message(void) { return last_error.c_str(); }

void algconn_string_free(char* s) { std::free(s); }

algconn_status algconn_graph_create(int order, const int* pairs, size_t edge_count,
                                    algconn_graph** out) {
  if (!valid_out(out) || (edge_count > 0 && !pairs)) {
    return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  }
  return guarded([&] {
    if (order < 0) throw Error(ErrorCode::invalid_argument, "order must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = new algconn_graph{Graph(order, std::move(edges))};
  });
}

algconn_status algconn_graph_parse(const char* text, size_t length, algconn_graph** out) {
  if (!valid_out(out) || !text) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = new algconn_graph{parse_graph(std::string_view(text, length))}; });
}

algconn_status algconn_graph_family(const char* name, const int* params, size_t param_count,
                                    algconn_graph** out) {
  if (!valid_out(out) || !name || (param_count > 0 && !params)) {
    return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  }
  return guarded([&] {
    const auto id = parse_family_id(name);
    if (!id) throw Error(ErrorCode::unknown_id, std::string("unknown family: ") + name);
    FamilySpec spec{*id, std::vector<int>(params, params + param_count)};
    *out = new algconn_graph{build_family(spec)};
  });
}

void algconn_graph_destroy(algconn_graph* g) { delete g; }

int algconn_graph_order(const algconn_graph* g) { return g ? g->graph.order() : -1; }

int algconn_graph_size(const algconn_graph* g) { return g ? g->graph.size() : -1; }

algconn_status algconn_graph_edges(const algconn_graph* g, int* pairs_out, size_t capacity) {
  if (!g || !pairs_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  const auto& edges = g->graph.edges();
  if (capacity < 2 * edges.size()) {
    return fail(ALGCONN_ERR_BUFFER_TOO_SMALL, "need " + std::to_string(2 * edges.size()) + " ints");
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    pairs_out[2 * i] = edges[i].u;
    pairs_out[2 * i + 1] = edges[i].v;
  }
  return ALGCONN_OK;
}

algconn_status algconn_graph_to_edge_list(const algconn_graph* g, char** out) {
  if (!g || !out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = copy_string(to_edge_list(g->graph)); });
}

algconn_status algconn_graph_to_graph6(const algconn_graph* g, char** out) {
  if (!g || !out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = copy_string(to_graph6(g->graph) + "\n"); });
}

algconn_status algconn_graph_canonical_form(const algconn_graph* g, char** out) {
  if (!g || !out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] { *out = copy_string(canonical_form(g->graph)); });
}

algconn_status algconn_algebraic_connectivity(const algconn_graph* g,
                                              const algconn_tolerances* tol, double* mu_out,
                                              int* multiplicity, double* fiedler_out) {
  if (!g || !mu_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const auto ac = algebraic_connectivity(g->graph, to_tolerances(tol));
    *mu_out = ac.mu;
    if (multiplicity) *multiplicity = ac.multiplicity;
    if (fiedler_out) std::copy(ac.fiedler.begin(), ac.fiedler.end(), fiedler_out);
  });
}

algconn_status algconn_report_compute(const algconn_graph* g, const algconn_tolerances* tol,
                                      char** json_out) {
  if (!g || !json_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const Tolerances t = to_tolerances(tol);
    const auto ac = algebraic_connectivity(g->graph, t);
    json results{{"mu", ac.mu},
                 {"multiplicity", ac.multiplicity},
                 {"fiedler", ac.fiedler},
                 {"eigenvalues", ac.spectrum.eigenvalues}};
    *json_out = copy_string(report("compute", json{{"graph", graph_json(g->graph)}}, results, t));
  });
}

algconn_status algconn_report_perron(const algconn_graph* g, int vertex,
                                     const algconn_tolerances* tol, char** json_out) {
  if (!g || !json_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const Tolerances t = to_tolerances(tol);
    const Graph& graph = g->graph;
    const auto perron = perron_components_at(graph, vertex, t);
    json components = json::array();
    for (std::size_t i = 0; i < perron.decomposition.count(); ++i) {
      components.push_back(json{{"vertices", perron.decomposition.components[i]},
                                {"perron_value", perron.perron_values[i]},
                                {"is_perron", static_cast<bool>(perron.is_perron[i])}});
    }
    const bool cut = perron.decomposition.count() >= 2;
    json results{{"vertex", vertex},
                 {"is_cut_vertex", cut},
                 {"components", components},
                 {"perron_count", perron.perron_count()},
                 {"mu", mu(graph, t)}};
    if (cut) {
      const auto sol = solve_balance(graph, vertex, t);
      const auto verdict = cut_vertex_characteristic(graph, vertex, t);
      results["balance"] = json{{"x", sol.x},
                                {"mu_estimate", sol.mu_estimate},
                                {"perron_index", sol.perron_index}};
      results["characteristic_vertex"] = verdict.is_characteristic;
      results["mu_formula"] = verdict.mu_formula ? json(*verdict.mu_formula) : json(nullptr);
    }
    json inputs{{"graph", graph_json(graph)}, {"vertex", vertex}};
    *json_out = copy_string(report("perron", inputs, results, t));
  });
}

algconn_status algconn_report_charset(const algconn_graph* g, const algconn_tolerances* tol,
                                      char** json_out) {
  if (!g || !json_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const Tolerances t = to_tolerances(tol);
    const Graph& graph = g->graph;
    const auto ac = algebraic_connectivity(graph, t);
    const auto cs = characteristic_set(graph, ac.fiedler, t);
    json edge_balances = json::array();
    if (cs.mu_multiplicity == 1) {
      for (const Edge& e : cs.edges) {
        if (!is_bridge(graph, e)) continue;
        if (const auto eb = solve_edge_gamma(graph, e, t)) {
          edge_balances.push_back(
              json{{"edge", {e.u, e.v}}, {"gamma", eb->gamma}, {"mu_estimate", eb->mu_estimate}});
        }
      }
    }
    json results{{"mu", ac.mu},
                 {"multiplicity", cs.mu_multiplicity},
                 {"vertices", cs.vertices},
                 {"edges", edges_json(cs.edges)},
                 {"fiedler", cs.fiedler_used},
                 {"edge_balances", edge_balances}};
    *json_out = copy_string(report("charset", json{{"graph", graph_json(graph)}}, results, t));
  });
}

algconn_status algconn_report_verify(const char* theorem_id, int n_min, int n_max, int param,
                                     int workers, const algconn_tolerances* tol, char** json_out,
                                     algconn_verdict* verdict) {
  if (!theorem_id || !json_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const Tolerances t = to_tolerances(tol);
    const auto r = verify_theorem(theorem_id, n_min, n_max, optional_param(param), workers, t);
    json cases = json::array();
    for (const auto& c : r.cases) {
      json jc{{"n", c.n},
              {"param", c.param ? json(*c.param) : json(nullptr)},
              {"verdict", verdict_name(c.verdict)},
              {"detail", c.detail}};
      if (c.counterexample) {
        jc["counterexample"] = json{{"graph6", to_graph6(*c.counterexample)},
                                    {"edge_list", to_edge_list(*c.counterexample)}};
      }
      cases.push_back(std::move(jc));
    }
    json results{{"theorem", r.theorem_id},
                 {"statement", r.statement},
                 {"verdict", verdict_name(r.verdict)},
                 {"cases", cases}};
    json inputs{{"theorem", theorem_id},
                {"n_min", n_min},
                {"n_max", n_max},
                {"param", optional_param(param) ? json(param) : json(nullptr)}};
    *json_out = copy_string(report("verify", inputs, results, t));
    if (verdict) {
      *verdict = r.verdict == Verdict::pass   ? ALGCONN_VERDICT_PASS
                 : r.verdict == Verdict::fail ? ALGCONN_VERDICT_FAIL
                                              : ALGCONN_VERDICT_VACUOUS;
    }
  });
}

algconn_status algconn_report_census(const char* class_name_text, int n, int param, int workers,
                                     const algconn_tolerances* tol, char** json_out) {
  if (!class_name_text || !json_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    const Tolerances t = to_tolerances(tol);
    const auto id = parse_class_id(class_name_text);
    if (!id) throw Error(ErrorCode::unknown_id, std::string("unknown class: ") + class_name_text);
    const GraphClass c{*id, n, optional_param(param)};
    const auto members = class_members(c, workers);
    const auto mus = compute_mus(members, workers);
    json member_rows = json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      member_rows.push_back(json{{"canonical_form", canonical_form(members[i])}, {"mu", mus[i]}});
    }
    json results{{"class", describe(c)}, {"class_size", members.size()}};
    if (!members.empty()) {
      results["min"] = extremal_json(extremal_mu(c, Objective::minimize, members, mus, t));
      results["max"] = extremal_json(extremal_mu(c, Objective::maximize, members, mus, t));
    }
    results["members"] = member_rows;
    json inputs{{"class", class_name_text},
                {"n", n},
                {"param", optional_param(param) ? json(param) : json(nullptr)}};
    *json_out = copy_string(report("census", inputs, results, t));
  });
}

algconn_status algconn_catalog(char** json_out) {
  if (!json_out) return fail(ALGCONN_ERR_NULL_POINTER, "null pointer argument");
  return guarded([&] {
    json theorems = json::array();
    for (const auto& info : registered_theorems()) {
      theorems.push_back(json{{"id", info.id},
                              {"alias", info.alias},
                              {"statement", info.statement},
                              {"param", info.param_meaning},
                              {"n_cap", info.n_cap}});
    }
    json families = json::array();
    for (int i = 0; i <= static_cast<int>(FamilyId::double_broom_22); ++i) {
      const auto id = static_cast<FamilyId>(i);
      families.push_back(json{{"name", family_name(id)}, {"arity", family_arity(id)}});
    }
    json classes = json::array();
    for (int i = 0; i <= static_cast<int>(ClassId::all_trees); ++i) {
      classes.push_back(class_name(static_cast<ClassId>(i)));
    }
    *json_out = copy_string(
        json{{"theorems", theorems}, {"families", families}, {"classes", classes}}.dump(2) + "\n");
  });
}

}  // extern "C"
