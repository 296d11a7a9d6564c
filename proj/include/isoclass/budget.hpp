#pragma once

#include <stdexcept>
#include <string>

namespace isoclass {

/// Thrown when a bounded search exhausts its configured work budget.
/// A budget overrun is never converted into an answer; callers either
/// propagate the failure or report the query as undecided.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isoclass
