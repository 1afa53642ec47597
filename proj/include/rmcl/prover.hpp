#pragma once

#include <chrono>
#include <stdexcept>

#include "rmcl/learner.hpp"
#include "rmcl/teacher.hpp"

namespace rmcl {

struct ProverResult {
  Verdict verdict;
  LearnerStats stats;
  std::chrono::milliseconds elapsed{0};
  std::vector<RmcTeacher::Rule> rules;  // equivalence branch taken per query
};

inline bool is_safe(const Verdict& v) { return std::holds_alternative<Safe>(v); }
inline bool is_unsafe(const Verdict& v) { return std::holds_alternative<Unsafe>(v); }

// Learns an inductive invariant for p, or finds a reachable bad
// configuration. Safe invariants are minimized and re-validated with
// check_invariant; Unsafe witnesses are re-validated against B and Post^|w|.
inline ProverResult run_prover(const RmcProblem& p, Algorithm algorithm,
                               const Limits& limits = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Deadline deadline = Deadline::after(limits.timeout);
  RmcTeacher teacher(p, deadline);
  LearnerLimits learner_limits{deadline, limits.max_states, limits.max_iterations};
  auto learned = run_learner(algorithm, teacher, p.alphabet, learner_limits);

  ProverResult result{Unknown{"no verdict"}, std::move(learned.stats), {}, teacher.rules_fired()};
  switch (learned.outcome) {
    case LearnOutcome::LimitReached: result.verdict = Unknown{learned.reason}; break;
    case LearnOutcome::Equal: result.verdict = Unknown{"teacher reported equality"}; break;
    case LearnOutcome::Stopped:
      if (learned.payload) result.verdict = std::move(*learned.payload);
      break;
  }

  if (auto* safe = std::get_if<Safe>(&result.verdict)) {
    safe->invariant = minimize(safe->invariant);
    result.stats.final_states = safe->invariant.num_states();
    if (!check_invariant(p, safe->invariant).holds())
      throw std::logic_error("learned invariant failed independent validation");
  } else if (auto* unsafe = std::get_if<Unsafe>(&result.verdict)) {
    if (!accepts(p.bad, unsafe->witness) || !teacher.membership(unsafe->witness))
      throw std::logic_error("unsafety witness failed validation");
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace rmcl
