#pragma once

#include <variant>

#include "rmcl/learner/teacher.hpp"
#include "rmcl/operations.hpp"

namespace rmcl {

// Teacher with direct access to a target DFA. Equivalence queries return the
// shortest word of the symmetric difference.
class ExactTeacher {
 public:
  using payload_type = std::monostate;

  explicit ExactTeacher(Dfa target) : target_(minimize(target)) {}

  const Dfa& target() const { return target_; }

  bool membership(const Word& w) { return target_.accepts(w); }

  EquivalenceReply<payload_type> equivalence(const Dfa& hypothesis) {
    if (auto w = difference_witness(target_, hypothesis)) return Counterexample{std::move(*w)};
    return Equal{};
  }

  std::optional<payload_type> pending_stop() { return std::nullopt; }

 private:
  Dfa target_;
};

static_assert(Teacher<ExactTeacher>);

}  // namespace rmcl
