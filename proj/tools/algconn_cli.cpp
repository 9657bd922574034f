// Command-line front end. Everything numeric happens behind the C API; this
// file only parses arguments, reads files and renders the JSON reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algconn/algconn.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;    // verify found a counterexample / runtime error
constexpr int kExitVacuous = 2;   // verify vacuous, or enumeration cap exceeded
constexpr int kExitError = 3;     // any other library error
constexpr int kExitUsage = 64;    // unknown subcommand or bad arguments
constexpr int kExitBadGraph = 65; // malformed graph file
constexpr int kExitNoInput = 66;  // graph file cannot be read

const std::vector<std::string> kSubcommands{"compute", "family", "perron", "charset",
                                            "verify",  "census", "catalog"};

struct GraphDeleter {
  void operator()(algconn_graph* g) const { algconn_graph_destroy(g); }
};
using GraphPtr = std::unique_ptr<algconn_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { algconn_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Library failure carried up to main() with the exit code it maps to.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(algconn_status s) {
  switch (s) {
    case ALGCONN_ERR_PARSE: return kExitBadGraph;
    case ALGCONN_ERR_CAP_EXCEEDED: return kExitVacuous;
    case ALGCONN_ERR_UNKNOWN_ID: return kExitUsage;
    default: return kExitError;
  }
}

void check(algconn_status s) {
  if (s == ALGCONN_OK) return;
  std::string msg = algconn_status_string(s);
  const std::string detail = algconn_last_error_message();
  if (detail.rfind(msg, 0) == 0) {
    msg = detail;
  } else if (!detail.empty()) {
    msg += ": " + detail;
  }
  throw Failure{exit_code_for(s), msg};
}

std::string take(char* raw) {
  OwnedString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

GraphPtr load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitNoInput, "cannot read " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  algconn_graph* g = nullptr;
  check(algconn_graph_parse(text.data(), text.size(), &g));
  return GraphPtr(g);
}

std::string fmt(double x, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string vertex_list(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v.get<int>());
  }
  return out.empty() ? "-" : out;
}

std::string edge_list_inline(const json& arr) {
  std::string out;
  for (const auto& e : arr) {
    if (!out.empty()) out += ' ';
    out += "{" + std::to_string(e[0].get<int>()) + "," + std::to_string(e[1].get<int>()) + "}";
  }
  return out.empty() ? "-" : out;
}

void print_graph_header(const json& g) {
  std::cout << "graph: order " << g["order"] << ", size " << g["size"] << ", graph6 "
            << g["graph6"].get<std::string>() << "\n";
}

void render_compute(const json& r) {
  print_graph_header(r["inputs"]["graph"]);
  const auto& res = r["results"];
  std::cout << "mu           " << fmt(res["mu"], 15) << "\n";
  std::cout << "multiplicity " << res["multiplicity"] << "\n";
  std::cout << "fiedler vector:\n";
  int v = 0;
  for (const auto& y : res["fiedler"]) {
    std::cout << "  " << std::setw(3) << v++ << "  " << std::setw(18) << fmt(y, 12) << "\n";
  }
}

void render_perron(const json& r) {
  print_graph_header(r["inputs"]["graph"]);
  const auto& res = r["results"];
  std::cout << "vertex " << res["vertex"] << (res["is_cut_vertex"].get<bool>() ? " (cut vertex)" : "")
            << ", mu " << fmt(res["mu"], 12) << "\n";
  std::cout << "  #  perron value      perron  vertices\n";
  int i = 0;
  for (const auto& c : res["components"]) {
    std::cout << "  " << std::setw(2) << i++ << " " << std::setw(17) << fmt(c["perron_value"], 12)
              << "  " << (c["is_perron"].get<bool>() ? "yes   " : "no    ") << "  "
              << vertex_list(c["vertices"]) << "\n";
  }
  if (res.contains("balance")) {
    const auto& b = res["balance"];
    std::cout << "balance: x = " << fmt(b["x"], 12) << ", mu estimate = "
              << fmt(b["mu_estimate"], 12) << " (component " << b["perron_index"] << ")\n";
    std::cout << "characteristic vertex: "
              << (res["characteristic_vertex"].get<bool>() ? "yes" : "no") << "\n";
  }
}

void render_charset(const json& r) {
  print_graph_header(r["inputs"]["graph"]);
  const auto& res = r["results"];
  std::cout << "mu " << fmt(res["mu"], 12) << " (multiplicity " << res["multiplicity"] << ")\n";
  std::cout << "characteristic vertices: " << vertex_list(res["vertices"]) << "\n";
  std::cout << "characteristic edges:    " << edge_list_inline(res["edges"]) << "\n";
  for (const auto& eb : res["edge_balances"]) {
    std::cout << "edge {" << eb["edge"][0] << "," << eb["edge"][1] << "}: gamma = "
              << fmt(eb["gamma"], 12) << ", mu estimate = " << fmt(eb["mu_estimate"], 12) << "\n";
  }
}

void render_verify(const json& r) {
  const auto& res = r["results"];
  std::cout << res["theorem"].get<std::string>() << ": " << res["statement"].get<std::string>()
            << "\n";
  for (const auto& c : res["cases"]) {
    std::cout << "  n=" << std::setw(2) << c["n"].get<int>();
    if (!c["param"].is_null()) std::cout << " param=" << std::setw(2) << c["param"].get<int>();
    std::cout << "  " << std::setw(7) << std::left << c["verdict"].get<std::string>() << std::right
              << "  " << c["detail"].get<std::string>() << "\n";
    if (c.contains("counterexample")) {
      std::cout << "  counterexample (graph6 " << c["counterexample"]["graph6"].get<std::string>()
                << "):\n"
                << c["counterexample"]["edge_list"].get<std::string>();
    }
  }
  std::cout << "verdict: " << res["verdict"].get<std::string>() << "\n";
}

void render_extremal(const json& e) {
  std::cout << e["objective"].get<std::string>() << " mu = " << fmt(e["optimum"], 12)
            << (e["unique"].get<bool>() ? " (unique)" : " (tied)") << "\n";
  for (const auto& f : e["extremizers"]) std::cout << "    " << f.get<std::string>() << "\n";
  if (!e["claimed_family"].is_null()) {
    std::cout << "  registered extremizer " << e["claimed_family"]["name"].get<std::string>()
              << e["claimed_family"]["params"].dump() << ": mu = " << fmt(e["claimed_value"], 12)
              << ", attains optimum: "
              << (e["claimed_is_extremizer"].get<bool>() ? "yes" : "no") << "\n";
  }
}

void render_census(const json& r) {
  const auto& res = r["results"];
  std::cout << res["class"].get<std::string>() << ": " << res["class_size"] << " graphs\n";
  if (res.contains("min")) {
    render_extremal(res["min"]);
    render_extremal(res["max"]);
  }
}

algconn_tolerances g_tol = algconn_tolerances_default();

int default_workers() {
  if (const char* env = std::getenv("SPECTRAL_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (...) {
    }
  }
  return 1;
}

// Adds CLI-level facts (the input file) to a report and prints it.
int emit(const std::string& report, bool as_json, void (*render)(const json&),
         const std::optional<std::string>& file = std::nullopt) {
  json r = json::parse(report);
  if (file) r["inputs"]["file"] = *file;
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    render(r);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2 || std::find(kSubcommands.begin(), kSubcommands.end(), argv[1]) == kSubcommands.end()) {
    const std::string first = argc >= 2 ? argv[1] : "";
    if (first != "-h" && first != "--help") {
      std::cerr << "algconn: unknown or missing subcommand '" << first << "'\n"
                << "available: compute family perron charset verify census catalog\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Algebraic connectivity toolkit"};
  app.require_subcommand(1);
  int workers = default_workers();
  bool as_json = false;
  app.add_option("--workers", workers, "Worker threads (default: $SPECTRAL_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "Print the JSON report");
  app.add_option("--tol-multiplicity", g_tol.multiplicity, "Eigenvalue multiplicity tolerance");
  app.add_option("--tol-disconnection", g_tol.disconnection, "Disconnection threshold");
  app.add_option("--tol-zero", g_tol.zero_relative, "Relative zero threshold for Fiedler entries");
  app.add_option("--tol-perron", g_tol.perron_relative, "Relative Perron tie threshold");
  app.add_option("--tol-tie", g_tol.tie, "Extremal tie threshold");

  std::string graph_file;

  auto* compute = app.add_subcommand("compute", "Algebraic connectivity and Fiedler vector");
  compute->add_option("graph", graph_file, "Graph file (edge list or graph6; - for stdin)")->required();

  std::string family_name;
  std::vector<int> family_params;
  std::string family_format = "edgelist";
  auto* family = app.add_subcommand("family", "Print a named graph family member");
  family->add_option("name", family_name, "Family name")->required();
  family->add_option("params", family_params, "Integer parameters");
  family->add_option("--format", family_format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  int vertex = 0;
  auto* perron = app.add_subcommand("perron", "Components at a vertex with Perron values");
  perron->add_option("graph", graph_file, "Graph file")->required();
  perron->add_option("--vertex", vertex, "Vertex label")->required();

  auto* charset = app.add_subcommand("charset", "Characteristic set of the Fiedler vector");
  charset->add_option("graph", graph_file, "Graph file")->required();

  std::string theorem;
  int n_min = 0;
  int n_max = 0;
  int param = -1;
  auto* verify = app.add_subcommand("verify", "Certify a registered result by enumeration");
  verify->add_option("theorem", theorem, "Theorem id or alias")->required();
  verify->add_option("--n-min", n_min, "Smallest order")->required();
  verify->add_option("--n-max", n_max, "Largest order")->required();
  verify->add_option("--k", param, "Secondary parameter (see catalog)");

  std::string class_id;
  int census_n = 0;
  auto* census = app.add_subcommand("census", "Minimum and maximum mu over a graph class");
  census->add_option("class", class_id, "Class name")->required();
  census->add_option("--n", census_n, "Order")->required();
  census->add_option("--param", param, "Class parameter (k or diameter)");

  auto* catalog = app.add_subcommand("catalog", "List theorems, classes and families");

  for (auto* sub : {compute, family, perron, charset, verify, census, catalog}) {
    sub->add_flag("--json", as_json, "Print the JSON report");
    sub->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      auto g = load_graph(graph_file);
      char* out = nullptr;
      check(algconn_report_compute(g.get(), &g_tol, &out));
      return emit(take(out), as_json, render_compute, graph_file);
    }
    if (*family) {
      algconn_graph* raw = nullptr;
      check(algconn_graph_family(family_name.c_str(), family_params.data(), family_params.size(),
                                 &raw));
      GraphPtr g(raw);
      char* out = nullptr;
      if (family_format == "graph6") {
        check(algconn_graph_to_graph6(g.get(), &out));
      } else {
        check(algconn_graph_to_edge_list(g.get(), &out));
      }
      std::cout << take(out);
      return kExitOk;
    }
    if (*perron) {
      auto g = load_graph(graph_file);
      char* out = nullptr;
      check(algconn_report_perron(g.get(), vertex, &g_tol, &out));
      return emit(take(out), as_json, render_perron, graph_file);
    }
    if (*charset) {
      auto g = load_graph(graph_file);
      char* out = nullptr;
      check(algconn_report_charset(g.get(), &g_tol, &out));
      return emit(take(out), as_json, render_charset, graph_file);
    }
    if (*verify) {
      char* out = nullptr;
      algconn_verdict verdict = ALGCONN_VERDICT_VACUOUS;
      check(algconn_report_verify(theorem.c_str(), n_min, n_max, param, workers, &g_tol, &out,
                                  &verdict));
      emit(take(out), as_json, render_verify);
      return static_cast<int>(verdict);
    }
    if (*census) {
      char* out = nullptr;
      check(algconn_report_census(class_id.c_str(), census_n, param, workers, &g_tol, &out));
      return emit(take(out), as_json, render_census);
    }
    if (*catalog) {
      char* out = nullptr;
      check(algconn_catalog(&out));
      const json c = json::parse(take(out));
      if (as_json) {
        std::cout << c.dump(2) << "\n";
        return kExitOk;
      }
      std::cout << "theorems:\n";
      for (const auto& t : c["theorems"]) {
        std::cout << "  " << std::setw(11) << std::left << t["id"].get<std::string>() << std::setw(24)
                  << t["alias"].get<std::string>() << std::right << " n <= " << t["n_cap"]
                  << "  " << t["statement"].get<std::string>() << "\n";
      }
      std::cout << "classes:";
      for (const auto& s : c["classes"]) std::cout << ' ' << s.get<std::string>();
      std::cout << "\nfamilies:";
      for (const auto& f : c["families"]) {
        std::cout << ' ' << f["name"].get<std::string>() << '/' << f["arity"];
      }
      std::cout << "\n";
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cerr << "algconn: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "algconn: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
