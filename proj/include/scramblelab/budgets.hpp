#pragma once

#include <chrono>
#include <optional>

#include "scramblelab/errors.hpp"

namespace scramblelab {

// Feasibility caps for the exact searches. Exceeding a cap raises
// FeasibilityCapExceeded; nothing is ever truncated silently. The optional
// deadline implements the CLI's global wall-clock budget.
struct Budgets {
  long long hitting_nodes = 50'000'000;
  long long subgraph_cap = 2'000'000;
  int alpha_max_n = 24;
  int lambda_k_max_n = 20;
  int tw_max_n = 18;
  int dsn_max_n = 12;
  int scw_max_n = 10;
  int vcon_max_n = 8;
  int carton_bf_max_n = 6;
  int gon_degree_cap = -1;  // -1 means "vertex count" (gon(G) <= n always)
  long long gon_divisor_cap = 5'000'000;
  int epsk_max = 5;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_deadline(const char* where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      fail(errc::feasibility_cap_exceeded, std::string(where) + ": time budget exhausted");
  }
};

}  // namespace scramblelab
