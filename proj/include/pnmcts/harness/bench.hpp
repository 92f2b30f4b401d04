#pragma once

#include <string>

#include "pnmcts/harness/agent.hpp"

namespace pnmcts::harness {

struct BenchEntry {
  std::string agent;
  std::uint64_t simulations = 0;
  double seconds = 0.0;
  double rate = 0.0;       // simulations per second
  bool truncated = false;  // stopped early by the node cap
};

struct BenchResult {
  BenchEntry a;
  BenchEntry b;
  double ratio = 0.0;  // a.rate / b.rate
};

/// Runs each agent once from the initial position for `seconds` of wall time.
BenchResult bench_overhead(const std::string& game_id, double seconds, const AgentSpec& a, const AgentSpec& b);

}  // namespace pnmcts::harness
