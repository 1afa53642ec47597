#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "rmcl/learner/teacher.hpp"
#include "rmcl/limits.hpp"
#include "rmcl/operations.hpp"
#include "rmcl/transducer.hpp"

namespace rmcl {

// Regular model checking problem (I, T, B) over one alphabet.
struct RmcProblem {
  Alphabet alphabet;
  Nfa init;
  Transducer trans;
  Nfa bad;

  void validate() const {
    require_same(alphabet, init.alphabet());
    require_same(alphabet, trans.alphabet());
    require_same(alphabet, bad.alphabet());
    require_length_preserving(trans);
  }
};

struct Safe {
  Dfa invariant;
};
struct Unsafe {
  Word witness;
};
struct Unknown {
  std::string reason;
};
using Verdict = std::variant<Safe, Unsafe, Unknown>;

// Outcome of the three inductive-invariant conditions for a candidate V:
// (1) I in V, (2) V and B disjoint, (3) T(V) in V.
struct InvariantReport {
  int violated = 0;  // 0 when all three hold, else the first failing condition
  Word witness;      // (1) word of I \ V, (2) word of V & B, (3) successor outside V
  Word source;       // (3) only: configuration in V whose successor escapes
  bool holds() const { return violated == 0; }
};

// Re-checks a candidate with plain automata operations; shares nothing with
// the teacher's equivalence procedure.
inline InvariantReport check_invariant(const RmcProblem& p, const Dfa& candidate) {
  InvariantReport report;
  const Dfa v = totalize(candidate);
  if (auto w = inclusion_counterexample(p.init, v)) {
    report.violated = 1;
    report.witness = *w;
    return report;
  }
  if (auto w = shortest_word(intersect(v.to_nfa(), p.bad))) {
    report.violated = 2;
    report.witness = *w;
    return report;
  }
  if (auto w = inclusion_counterexample(post_image(p.trans, v.to_nfa()), v)) {
    report.violated = 3;
    report.witness = *w;
    auto preds = pre_image(p.trans, single_word_dfa(p.alphabet, *w).to_nfa());
    report.source = shortest_word(intersect(v.to_nfa(), preds)).value_or(Word{});
  }
  return report;
}

// The "strict but generous" teacher. Its target is the reachable set T*(I),
// decided per length through Post^k; equivalence queries accept any
// candidate that is an inductive invariant.
class RmcTeacher {
 public:
  using payload_type = Verdict;

  // Which branch of the equivalence procedure produced each reply.
  enum class Rule { InitNotIncluded = 1, HitsBad = 2, NotInductive = 3, Accepted = 4, Pending = 0 };

  explicit RmcTeacher(const RmcProblem& problem, Deadline deadline = Deadline::never())
      : p_(problem), deadline_(deadline) {
    p_.validate();
  }

  const RmcProblem& problem() const { return p_; }
  const std::map<std::size_t, Dfa>& post_cache() const { return cache_; }
  const std::vector<Rule>& rules_fired() const { return rules_; }

  // Minimal DFA of the reachable configurations of length k.
  const Dfa& post_k(std::size_t k) {
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    const Nfa slice = length_slice(p_.alphabet, k).to_nfa();
    Dfa reach = minimize(determinize(intersect(p_.init, slice)));
    for (;;) {
      if (deadline_.expired()) {
        if (!pending_) pending_ = Unknown{"timeout"};
        scratch_ = std::move(reach);
        return scratch_;
      }
      Nfa current = reach.to_nfa();
      Dfa next = minimize(determinize(union_of(current, post_image(p_.trans, current))));
      if (next == reach) break;
      reach = std::move(next);
    }
    auto& cached = cache_.emplace(k, std::move(reach)).first->second;
    if (!pending_)
      if (auto w = shortest_word(intersect(cached.to_nfa(), p_.bad))) pending_ = Unsafe{*w};
    return cached;
  }

  bool membership(const Word& w) { return post_k(w.size()).accepts(w); }

  std::optional<Verdict> pending_stop() { return pending_; }

  EquivalenceReply<Verdict> equivalence(const Dfa& candidate) {
    if (pending_) return stop(Rule::Pending, *pending_);
    require_same(p_.alphabet, candidate.alphabet());
    const Dfa h = totalize(candidate);

    if (auto w = inclusion_counterexample(p_.init, h)) {
      rules_.push_back(Rule::InitNotIncluded);
      return Counterexample{*w};
    }
    if (auto w = shortest_word(intersect(h.to_nfa(), p_.bad))) {
      const bool reachable = membership(*w);
      if (reachable) return stop(Rule::HitsBad, Unsafe{*w});
      if (pending_) return stop(Rule::Pending, *pending_);
      rules_.push_back(Rule::HitsBad);
      return Counterexample{*w};
    }
    if (auto v = inductive_violation(p_.trans, h)) {
      const bool reachable = membership(v->source);
      if (pending_) return stop(Rule::Pending, *pending_);
      rules_.push_back(Rule::NotInductive);
      return Counterexample{reachable ? v->target : v->source};
    }
    return stop(Rule::Accepted, Safe{h});
  }

 private:
  EquivalenceReply<Verdict> stop(Rule r, Verdict v) {
    rules_.push_back(r);
    return Stop<Verdict>{std::move(v)};
  }

  RmcProblem p_;
  Deadline deadline_;
  std::map<std::size_t, Dfa> cache_;
  Dfa scratch_;
  std::optional<Verdict> pending_;
  std::vector<Rule> rules_;
};

static_assert(Teacher<RmcTeacher>);

}  // namespace rmcl
