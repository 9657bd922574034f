#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "algconn/canonical.hpp"
#include "algconn/errors.hpp"
#include "algconn/extremal.hpp"
#include "algconn/families.hpp"
#include "algconn/spectral.hpp"
#include "../support/oracles.hpp"

using namespace algconn;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

std::vector<std::string> forms(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(canonical_form(g));
  return out;
}

}  // namespace

TEST_CASE("tree counts match Otter's formula") {
  const std::vector<std::size_t> known{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    CHECK(oracle::free_tree_count(n) == known[n - 1]);
    CHECK(enumerate_trees(n).size() == known[n - 1]);
  }
}

TEST_CASE("tree classes match Pruefer enumeration") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(enumerate_trees(n).size() == oracle::pruefer_tree_classes(n));
  }
}

TEST_CASE("connected graph counts") {
  const std::vector<std::size_t> known{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_connected(n).size() == known[n - 1]);
  for (int n = 1; n <= 5; ++n) {
    const auto naive = oracle::connected_classes_naive(n);
    auto mine = forms(enumerate_connected(n));
    auto theirs = forms(naive);
    std::sort(theirs.begin(), theirs.end());
    CHECK(mine == theirs);
  }
}

TEST_CASE("unicyclic graph counts") {
  const std::vector<std::size_t> known{1, 2, 5, 13, 33, 89, 240, 657};
  for (int n = 3; n <= 10; ++n) {
    const auto u = enumerate_unicyclic(n);
    CHECK(u.size() == known[n - 3]);
    for (const auto& g : u) {
      CHECK(g.is_connected());
      CHECK(g.size() == n);
    }
  }
}

TEST_CASE("enumerations are sorted, canonical and duplicate free") {
  for (int n = 2; n <= 7; ++n) {
    const auto gs = enumerate_connected(n);
    const auto fs = forms(gs);
    CHECK(std::is_sorted(fs.begin(), fs.end()));
    CHECK(std::adjacent_find(fs.begin(), fs.end()) == fs.end());
    for (const auto& g : gs) CHECK(canonical_graph(g) == g);
  }
}

TEST_CASE("worker count does not change results") {
  CHECK(enumerate_connected(7, 1) == enumerate_connected(7, 4));
  CHECK(enumerate_trees(11, 1) == enumerate_trees(11, 3));
  CHECK(enumerate_unicyclic(8, 1) == enumerate_unicyclic(8, 5));
  const GraphClass c{ClassId::pendant_count, 7, 2};
  const auto a = extremal_mu(c, Objective::minimize, 1);
  const auto b = extremal_mu(c, Objective::minimize, 4);
  CHECK(a.extremizers == b.extremizers);
  CHECK(a.optimum == b.optimum);
}

TEST_CASE("caps") {
  CHECK(code_of([] { enumerate_trees(13); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([] { enumerate_connected(10); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([] { enumerate_unicyclic(11); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([] { class_members({ClassId::unicyclic, 11, std::nullopt}); }) ==
        ErrorCode::cap_exceeded);
  CHECK(code_of([] { class_members({ClassId::pendant_count, 6, std::nullopt}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("class membership examples") {
  const auto h41 = class_members({ClassId::pendant_count, 4, 1});
  REQUIRE(h41.size() == 1);
  CHECK(isomorphic(h41.front(), triangle_tail(4)));
  CHECK(class_members({ClassId::unicyclic, 5, std::nullopt}).size() == 5);
  for (int n = 3; n <= 9; ++n) {
    const auto t = class_members({ClassId::trees_with_pendants, n, n - 1});
    REQUIRE(t.size() == 1);
    CHECK(isomorphic(t.front(), star(n)));
  }
  CHECK(class_members({ClassId::pendant_count, 3, 1}).empty());
  CHECK(code_of([] { extremal_mu({ClassId::pendant_count, 3, 1}, Objective::maximize); }) ==
        ErrorCode::empty_class);
}

TEST_CASE("registered extremizers belong to their class") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<GraphClass> classes{{ClassId::pendant_free, n, std::nullopt},
                                    {ClassId::unicyclic, n, std::nullopt},
                                    {ClassId::all_connected, n, std::nullopt},
                                    {ClassId::all_trees, n, std::nullopt}};
    for (int k = 1; k <= n - 1; ++k) {
      classes.push_back({ClassId::pendant_count, n, k});
      classes.push_back({ClassId::trees_with_pendants, n, k});
    }
    for (int d = 2; d <= n - 1; ++d) classes.push_back({ClassId::trees_with_diameter, n, d});
    for (const auto& c : classes) {
      const auto members = class_members(c);
      const auto fs = forms(members);
      for (auto obj : {Objective::minimize, Objective::maximize}) {
        const auto claimed = claimed_extremizer(c, obj);
        if (!claimed) continue;
        const Graph g = build_family(*claimed);
        INFO(describe(c), " ", objective_name(obj));
        CHECK(is_member(c, g));
        CHECK(std::binary_search(fs.begin(), fs.end(), canonical_form(g)));
      }
    }
  }
}

TEST_CASE("extremal report invariants") {
  const GraphClass c{ClassId::unicyclic, 6, std::nullopt};
  const auto members = class_members(c);
  const auto mus = compute_mus(members);
  const auto r = extremal_mu(c, Objective::maximize, members, mus);
  CHECK(r.class_size == members.size());
  CHECK(r.extremizers.size() == 2);
  CHECK_FALSE(r.unique);
  CHECK(r.optimum == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<std::string> expected{canonical_form(cycle(6)), canonical_form(clique_pendants(6, 3))};
  std::sort(expected.begin(), expected.end());
  CHECK(r.extremizers == expected);
  CHECK(r.claimed_is_extremizer);
  for (std::size_t i = 0; i < members.size(); ++i) CHECK(mus[i] <= r.optimum + 1e-9);
}

TEST_CASE("names") {
  for (int i = 0; i <= static_cast<int>(ClassId::all_trees); ++i) {
    const auto id = static_cast<ClassId>(i);
    CHECK(parse_class_id(class_name(id)) == id);
  }
  CHECK(describe({ClassId::pendant_count, 6, 2}) == "H_nk(n=6, param=2)");
}
