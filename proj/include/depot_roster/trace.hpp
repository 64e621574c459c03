#pragma once

#include <chrono>
#include <vector>

namespace depot_roster {

/// Best-so-far objective after a given number of fitness evaluations.
struct TraceRecord {
  long iteration = 0;
  long evaluations = 0;
  long best_objective = 0;
  long elapsed_ms = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using ConvergenceTrace = std::vector<TraceRecord>;

/// Milliseconds since construction, or always 0 when disabled. Runs record 0
/// by default so that repeated runs produce byte-identical traces.
class RunClock {
 public:
  explicit RunClock(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

  long elapsed_ms() const {
    if (!enabled_) return 0;
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count());
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace depot_roster
