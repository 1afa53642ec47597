#pragma once

#include <chrono>
#include <cstddef>
#include <limits>

namespace rmcl {

class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  static Deadline never() { return Deadline(); }
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.end_ = clock::now() + budget;
    return d;
  }

  bool expired() const { return end_ != clock::time_point::max() && clock::now() >= end_; }

 private:
  clock::time_point end_ = clock::time_point::max();
};

// Resource bounds for a prover run. Defaults follow the usual 60 s budget.
struct Limits {
  std::chrono::milliseconds timeout{60'000};
  std::size_t max_states = 10'000;
  std::size_t max_iterations = std::numeric_limits<std::size_t>::max();
};

}  // namespace rmcl
