// Exception types shared across the workbench.
#pragma once

#include <stdexcept>
#include <string>

namespace ubcw {

// Input violates a documented precondition (bad degree, missing simplex, ...).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or solver exceeded its configured budget.  Callers must
// treat this as a clean refusal, never as silent truncation.
struct ResourceBudgetExceeded : std::runtime_error {
  explicit ResourceBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A requested filling does not exist: the target chain is not a boundary.
struct NotABoundary : std::runtime_error {
  explicit NotABoundary(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budgets used by generators and the exact UBC search.
struct Budget {
  std::size_t max_vertices = 100000;   // poset elements / complex vertices
  std::size_t max_simplices = 1000000; // total simplices across degrees
  std::size_t max_circuits = 100000;   // elementary vectors per degree
  std::size_t max_search_nodes = 20000000; // DFS nodes in circuit search
  std::size_t max_dense_cells = 360000;    // dense fallback in rank elimination
};

}  // namespace ubcw
