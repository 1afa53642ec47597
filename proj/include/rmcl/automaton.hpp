#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "rmcl/alphabet.hpp"

namespace rmcl {

// Nondeterministic finite automaton without lambda transitions and with a
// single initial state. Successor lists are kept sorted and duplicate-free.
class Nfa {
 public:
  Nfa() = default;
  explicit Nfa(Alphabet alphabet, std::size_t states = 1, State initial = 0)
      : alphabet_(std::move(alphabet)), initial_(initial) {
    for (std::size_t i = 0; i < states; ++i) add_state();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return final_.size(); }
  State initial() const { return initial_; }
  void set_initial(State q) { initial_ = check(q); }

  State add_state(bool accepting = false) {
    final_.push_back(accepting);
    delta_.emplace_back(alphabet_.size());
    return static_cast<State>(final_.size() - 1);
  }

  bool is_final(State q) const { return final_[q]; }
  void set_final(State q, bool accepting = true) { final_[check(q)] = accepting; }

  void add_transition(State from, Symbol a, State to) {
    check(from);
    check(to);
    if (a >= alphabet_.size()) throw Error("transition symbol outside the alphabet");
    auto& succ = delta_[from][a];
    auto it = std::lower_bound(succ.begin(), succ.end(), to);
    if (it == succ.end() || *it != to) succ.insert(it, to);
  }

  const std::vector<State>& successors(State q, Symbol a) const { return delta_[q][a]; }

  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (const auto& row : delta_)
      for (const auto& succ : row) n += succ.size();
    return n;
  }

  bool has_final() const { return std::find(final_.begin(), final_.end(), true) != final_.end(); }

 private:
  State check(State q) const {
    if (q >= final_.size()) throw Error("state id out of range");
    return q;
  }

  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<std::vector<std::vector<State>>> delta_;
  std::vector<bool> final_;
};

// Deterministic automaton: at most one successor per (state, symbol). It is
// total when every entry of the transition table is defined.
class Dfa {
 public:
  Dfa() = default;
  explicit Dfa(Alphabet alphabet, std::size_t states = 1, State initial = 0)
      : alphabet_(std::move(alphabet)), initial_(initial) {
    for (std::size_t i = 0; i < states; ++i) add_state();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return final_.size(); }
  State initial() const { return initial_; }
  void set_initial(State q) { initial_ = q; }

  State add_state(bool accepting = false) {
    final_.push_back(accepting);
    delta_.resize(delta_.size() + alphabet_.size(), kNoState);
    return static_cast<State>(final_.size() - 1);
  }

  bool is_final(State q) const { return final_[q]; }
  void set_final(State q, bool accepting = true) { final_.at(q) = accepting; }

  State next(State q, Symbol a) const { return delta_[q * alphabet_.size() + a]; }
  void set_transition(State from, Symbol a, State to) {
    if (from >= num_states() || (to != kNoState && to >= num_states()) || a >= alphabet_.size())
      throw Error("transition out of range");
    delta_[from * alphabet_.size() + a] = to;
  }

  bool is_total() const {
    return std::find(delta_.begin(), delta_.end(), kNoState) == delta_.end();
  }

  // Number of defined transitions; for a total DFA this is states * |alphabet|.
  std::size_t num_transitions() const {
    return static_cast<std::size_t>(
        std::count_if(delta_.begin(), delta_.end(), [](State s) { return s != kNoState; }));
  }

  // Run from the initial state; kNoState if the run gets stuck.
  State run(const Word& w) const {
    State q = initial_;
    for (Symbol a : w) {
      if (q == kNoState) break;
      q = next(q, a);
    }
    return q;
  }

  bool accepts(const Word& w) const {
    State q = run(w);
    return q != kNoState && final_[q];
  }

  Nfa to_nfa() const {
    Nfa m(alphabet_, num_states(), initial_);
    for (State q = 0; q < num_states(); ++q) {
      m.set_final(q, final_[q]);
      for (Symbol a = 0; a < alphabet_.size(); ++a)
        if (State t = next(q, a); t != kNoState) m.add_transition(q, a, t);
    }
    return m;
  }

  // Structural equality. Canonical minimal DFAs of equal languages compare equal.
  friend bool operator==(const Dfa& x, const Dfa& y) {
    return x.alphabet_ == y.alphabet_ && x.initial_ == y.initial_ && x.final_ == y.final_ &&
           x.delta_ == y.delta_;
  }

 private:
  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<State> delta_;
  std::vector<bool> final_;
};

}  // namespace rmcl
