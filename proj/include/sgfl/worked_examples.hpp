#pragma once

#include <set>
#include <string>
#include <vector>

#include "sgfl/factorization.hpp"

namespace sgfl {

enum class RowStatus { Pass, Fail, Error };

struct ExampleRow {
  std::string id;
  std::string expected;
  std::string actual;
  RowStatus status = RowStatus::Pass;
};

struct WorkedExampleOptions {
  SearchOptions search;
  /// Row ids whose expected value is deliberately corrupted, to exercise the harness.
  std::set<std::string> perturb;
};

/// Recomputes every worked example from the reference material and compares
/// it with the frozen expected value. Rows are independent: an exception in one
/// row marks that row Error and the rest still run.
std::vector<ExampleRow> run_worked_examples(const WorkedExampleOptions& options = {});

std::string_view to_string(RowStatus status);

}  // namespace sgfl
