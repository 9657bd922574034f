#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <json.hpp>
#include <string>
#include <vector>

#include "algconn/algconn.h"

using nlohmann::json;

namespace {

// Owns a graph handle for the duration of a test.
struct Handle {
  algconn_graph* g = nullptr;
  ~Handle() { algconn_graph_destroy(g); }
};

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  algconn_string_free(s);
  return out;
}

algconn_status parse(const std::string& text, Handle& h) {
  return algconn_graph_parse(text.data(), text.size(), &h.g);
}

void check_report_shape(const json& j, const char* command) {
  CHECK(j.at("command") == command);
  CHECK(j.contains("inputs"));
  CHECK(j.contains("results"));
  CHECK(j.contains("tolerances"));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"command", "inputs", "results", "tolerances"});
}

}  // namespace

TEST_CASE("status strings and defaults") {
  for (int s = ALGCONN_OK; s <= ALGCONN_ERR_OUT_OF_MEMORY; ++s) {
    const char* text = algconn_status_string(static_cast<algconn_status>(s));
    REQUIRE(text != nullptr);
    CHECK(std::strlen(text) > 0);
  }
  const auto tol = algconn_tolerances_default();
  CHECK(tol.multiplicity > 0);
  CHECK(tol.tie > 0);
}

TEST_CASE("construction and accessors") {
  const int pairs[] = {0, 1, 1, 2, 2, 0, 2, 3};
  Handle h;
  REQUIRE(algconn_graph_create(4, pairs, 4, &h.g) == ALGCONN_OK);
  CHECK(algconn_graph_order(h.g) == 4);
  CHECK(algconn_graph_size(h.g) == 4);

  int small[4];
  CHECK(algconn_graph_edges(h.g, small, 4) == ALGCONN_ERR_BUFFER_TOO_SMALL);
  CHECK(std::string(algconn_last_error_message()).find("need 8") != std::string::npos);
  int buf[8];
  REQUIRE(algconn_graph_edges(h.g, buf, 8) == ALGCONN_OK);

  char* text = nullptr;
  REQUIRE(algconn_graph_to_edge_list(h.g, &text) == ALGCONN_OK);
  Handle again;
  REQUIRE(parse(take(text), again) == ALGCONN_OK);
  CHECK(algconn_graph_size(again.g) == 4);

  const int bad_pairs[] = {0, 7};
  Handle bad;
  CHECK(algconn_graph_create(3, bad_pairs, 1, &bad.g) == ALGCONN_ERR_INVALID_VERTEX);
  CHECK(bad.g == nullptr);
  CHECK(algconn_graph_create(3, nullptr, 1, &bad.g) == ALGCONN_ERR_NULL_POINTER);
}

TEST_CASE("parsing") {
  Handle g6;
  REQUIRE(parse("DQc\n", g6) == ALGCONN_OK);
  CHECK(algconn_graph_order(g6.g) == 5);
  char* back = nullptr;
  REQUIRE(algconn_graph_to_graph6(g6.g, &back) == ALGCONN_OK);
  CHECK(take(back) == "DQc\n");

  Handle bad;
  CHECK(parse("3\n0 1\nbanana\n", bad) == ALGCONN_ERR_PARSE);
  CHECK(std::strlen(algconn_last_error_message()) > 0);
  Handle empty;
  CHECK(parse("", empty) != ALGCONN_OK);
}

TEST_CASE("families and algebraic connectivity") {
  const int params[] = {5};
  Handle h;
  REQUIRE(algconn_graph_family("C3_tail", params, 1, &h.g) == ALGCONN_OK);
  double mu = 0.0;
  int mult = 0;
  std::vector<double> y(5);
  REQUIRE(algconn_algebraic_connectivity(h.g, nullptr, &mu, &mult, y.data()) == ALGCONN_OK);
  CHECK(std::abs(mu - 0.5188056959) < 1e-9);
  CHECK(mult == 1);

  Handle unknown;
  CHECK(algconn_graph_family("Nope", params, 1, &unknown.g) == ALGCONN_ERR_UNKNOWN_ID);
  Handle arity;
  CHECK(algconn_graph_family("T_spider", params, 1, &arity.g) == ALGCONN_ERR_INVALID_ARGUMENT);

  const int pairs[] = {0, 1, 2, 3};
  Handle split;
  REQUIRE(algconn_graph_create(4, pairs, 2, &split.g) == ALGCONN_OK);
  CHECK(algconn_algebraic_connectivity(split.g, nullptr, &mu, nullptr, nullptr) ==
        ALGCONN_ERR_DISCONNECTED);
}

TEST_CASE("reports") {
  const int params[] = {9, 3};
  Handle h;
  REQUIRE(algconn_graph_family("T_spider", params, 2, &h.g) == ALGCONN_OK);

  char* text = nullptr;
  REQUIRE(algconn_report_compute(h.g, nullptr, &text) == ALGCONN_OK);
  const auto compute = json::parse(take(text));
  check_report_shape(compute, "compute");
  CHECK(compute["inputs"]["graph"]["order"] == 9);

  REQUIRE(algconn_report_perron(h.g, 0, nullptr, &text) == ALGCONN_OK);
  const auto perron = json::parse(take(text));
  check_report_shape(perron, "perron");
  CHECK(perron["results"]["is_cut_vertex"] == true);
  CHECK(perron["results"]["components"].size() == 3);
  CHECK(algconn_report_perron(h.g, 42, nullptr, &text) == ALGCONN_ERR_INVALID_VERTEX);

  REQUIRE(algconn_report_charset(h.g, nullptr, &text) == ALGCONN_OK);
  check_report_shape(json::parse(take(text)), "charset");

  algconn_verdict verdict = ALGCONN_VERDICT_FAIL;
  REQUIRE(algconn_report_verify("THM_5_2", 6, 7, -1, 2, nullptr, &text, &verdict) == ALGCONN_OK);
  const auto verify = json::parse(take(text));
  check_report_shape(verify, "verify");
  CHECK(verdict == ALGCONN_VERDICT_PASS);
  CHECK(verify["results"]["verdict"] == "pass");
  CHECK(verify["results"]["cases"].size() == 2);

  REQUIRE(algconn_report_verify("PROP_2_2", 7, 7, 3, 1, nullptr, &text, &verdict) == ALGCONN_OK);
  const auto failing = json::parse(take(text));
  CHECK(verdict == ALGCONN_VERDICT_FAIL);
  CHECK(failing["results"]["cases"][0].contains("counterexample"));

  CHECK(algconn_report_verify("NOPE", 3, 4, -1, 1, nullptr, &text, nullptr) ==
        ALGCONN_ERR_UNKNOWN_ID);
  CHECK(algconn_report_verify("THM_6_2", 4, 40, -1, 1, nullptr, &text, nullptr) ==
        ALGCONN_ERR_CAP_EXCEEDED);

  REQUIRE(algconn_report_census("U_n", 5, -1, 1, nullptr, &text) == ALGCONN_OK);
  const auto census = json::parse(take(text));
  check_report_shape(census, "census");
  CHECK(census["results"]["class_size"] == 5);
  CHECK(census["results"]["members"].size() == 5);
  CHECK(algconn_report_census("H_nk", 3, 1, 1, nullptr, &text) == ALGCONN_OK);
  algconn_string_free(text);
  CHECK(algconn_report_census("Bogus", 5, -1, 1, nullptr, &text) == ALGCONN_ERR_UNKNOWN_ID);

  REQUIRE(algconn_catalog(&text) == ALGCONN_OK);
  const auto catalog = json::parse(take(text));
  CHECK(catalog.contains("theorems"));
}

TEST_CASE("reports are deterministic") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(algconn_report_census("T_nk", 8, 3, 1, nullptr, &a) == ALGCONN_OK);
  REQUIRE(algconn_report_census("T_nk", 8, 3, 4, nullptr, &b) == ALGCONN_OK);
  CHECK(take(a) == take(b));
}

TEST_CASE("null handles") {
  char* text = nullptr;
  double mu = 0.0;
  CHECK(algconn_report_compute(nullptr, nullptr, &text) == ALGCONN_ERR_NULL_POINTER);
  CHECK(algconn_algebraic_connectivity(nullptr, nullptr, &mu, nullptr, nullptr) ==
        ALGCONN_ERR_NULL_POINTER);
  CHECK(algconn_graph_order(nullptr) < 0);
  algconn_graph_destroy(nullptr);
  algconn_string_free(nullptr);
}
