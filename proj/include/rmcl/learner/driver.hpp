#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rmcl/limits.hpp"
#include "rmcl/learner/teacher.hpp"

namespace rmcl {

struct LearnerLimits {
  Deadline deadline = Deadline::never();
  std::size_t max_states = Limits{}.max_states;
  std::size_t max_iterations = Limits{}.max_iterations;
};

enum class LearnOutcome { Equal, Stopped, LimitReached };

template <class Payload>
struct LearnResult {
  LearnOutcome outcome = LearnOutcome::LimitReached;
  Nfa hypothesis;      // the learner's own hypothesis (an RFSA for NL*)
  Dfa hypothesis_dfa;  // what was last submitted to the teacher
  LearnerStats stats;
  std::optional<Payload> payload;
  std::string reason;  // set when outcome == LimitReached
};

// A learning strategy exposes:
//   void prepare(Oracle&)             make the hypothesis well defined (close the table, ...)
//   Dfa hypothesis() const            DFA submitted to the equivalence query
//   Nfa hypothesis_nfa() const        the strategy's native hypothesis
//   std::size_t size() const          native hypothesis state count
//   void refine(const Word&, Oracle&) process a counterexample
template <class S, class Oracle>
concept LearningStrategy = requires(S& s, const S& cs, Oracle& o, const Word& w) {
  s.prepare(o);
  { cs.hypothesis() } -> std::same_as<Dfa>;
  { cs.hypothesis_nfa() } -> std::same_as<Nfa>;
  { cs.size() } -> std::convertible_to<std::size_t>;
  s.refine(w, o);
};

// The query / hypothesize / equivalence loop shared by every learner.
template <Teacher T, class Strategy>
  requires LearningStrategy<Strategy, MembershipOracle<T>>
LearnResult<typename T::payload_type> drive_learner(Strategy& strategy, T& teacher,
                                                    const LearnerLimits& limits) {
  MembershipOracle<T> oracle(teacher);
  LearnResult<typename T::payload_type> result;
  auto finish = [&](LearnOutcome outcome) {
    result.outcome = outcome;
    result.stats.membership_queries = oracle.queries();
    result.stats.final_states = result.hypothesis_dfa.num_states();
    if (outcome == LearnOutcome::Stopped && !result.payload) result.payload = oracle.take_stop();
    return result;
  };
  auto limit = [&](std::string why) {
    result.reason = std::move(why);
    return finish(LearnOutcome::LimitReached);
  };

  for (;;) {
    if (limits.deadline.expired()) return limit("timeout");
    strategy.prepare(oracle);
    if (oracle.stopped()) return finish(LearnOutcome::Stopped);
    if (limits.deadline.expired()) return limit("timeout");
    if (strategy.size() > limits.max_states) return limit("state limit");
    if (result.stats.iterations >= limits.max_iterations) return limit("iteration limit");

    result.hypothesis = strategy.hypothesis_nfa();
    result.hypothesis_dfa = strategy.hypothesis();
    ++result.stats.iterations;
    ++result.stats.equivalence_queries;
    result.stats.hypothesis_sizes.push_back(strategy.size());

    auto reply = teacher.equivalence(result.hypothesis_dfa);
    if (std::holds_alternative<Equal>(reply)) return finish(LearnOutcome::Equal);
    if (auto* stop = std::get_if<Stop<typename T::payload_type>>(&reply)) {
      result.payload = std::move(stop->payload);
      return finish(LearnOutcome::Stopped);
    }
    const Word& cex = std::get<Counterexample>(reply).word;
    result.stats.counterexamples.push_back(cex);
    const bool member = oracle(cex);
    if (oracle.stopped()) return finish(LearnOutcome::Stopped);
    if (member == result.hypothesis_dfa.accepts(cex))
      throw LearnerError("teacher returned a word that is not a counterexample");
    strategy.refine(cex, oracle);
    if (oracle.stopped()) return finish(LearnOutcome::Stopped);
  }
}

}  // namespace rmcl
