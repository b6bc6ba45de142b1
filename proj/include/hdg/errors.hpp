#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

// Malformed input data: bad files, out-of-range vertices, infeasible
// generator parameters. CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation's stated precondition does not hold for the given instance
// (e.g. total-domination game on a hypergraph with an isolated vertex).
// CLI maps this to exit code 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A move that covers nothing new.
struct IllegalMoveError : InputError {
  IllegalMoveError(int v, const std::string& msg) : InputError(msg), vertex(v) {}
  int vertex;
};

// A strategy returned an illegal move during a playout.
struct StrategyFaultError : std::runtime_error {
  StrategyFaultError(const std::string& strategy_name, const std::string& msg)
      : std::runtime_error(msg), strategy(strategy_name) {}
  std::string strategy;
};

}  // namespace hdg
