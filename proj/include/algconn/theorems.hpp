#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algconn/graph.hpp"
#include "algconn/tolerances.hpp"

namespace algconn {

enum class Verdict { pass, fail, vacuous };

std::string_view verdict_name(Verdict v);

// One checked instance, e.g. a single (n, k) pair.
struct CaseResult {
  int n = 0;
  std::optional<int> param;
  Verdict verdict = Verdict::vacuous;
  std::string detail;
  std::optional<Graph> counterexample;
};

struct VerificationReport {
  std::string theorem_id;
  std::string statement;
  int n_min = 0;
  int n_max = 0;
  std::optional<int> param;
  Verdict verdict = Verdict::vacuous;  // fail if any case fails, else pass if any passes
  std::vector<CaseResult> cases;

  const CaseResult* first_failure() const;
};

struct TheoremInfo {
  std::string_view id;     // identifier accepted by verify_theorem()
  std::string_view alias;  // descriptive synonym, also accepted
  std::string_view statement;
  std::string_view param_meaning;  // what the optional parameter selects, "" if unused
  int n_cap = 0;
};

std::span<const TheoremInfo> registered_theorems();
const TheoremInfo* find_theorem(std::string_view id_or_alias);

/// Runs the registered checker over n_min..n_max. `param` restricts the
/// secondary parameter (pendant count, diameter offset) when the checker has
/// one. Throws Error(unknown_id), Error(cap_exceeded) or
/// Error(invalid_argument).
VerificationReport verify_theorem(std::string_view id, int n_min, int n_max,
                                  std::optional<int> param = std::nullopt, int workers = 1,
                                  const Tolerances& tol = {});

}  // namespace algconn
