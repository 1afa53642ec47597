#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rmcl/operations.hpp"
#include "rmcl/regex.hpp"

namespace rmcl {

// Marks a lambda side on an imported transducer edge. Compiled transducers
// never contain it.
inline constexpr Symbol kLambda = static_cast<Symbol>(-1);

// Finite transducer with one initial state. Edges read one input and write
// one output symbol, except on imported transducers which may carry kLambda
// and are rejected by every operation that needs length preservation.
class Transducer {
 public:
  struct Edge {
    Symbol in;
    Symbol out;
    State to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  Transducer() = default;
  explicit Transducer(Alphabet alphabet, std::size_t states = 1, State initial = 0)
      : alphabet_(std::move(alphabet)), initial_(initial) {
    for (std::size_t i = 0; i < states; ++i) add_state();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return final_.size(); }
  State initial() const { return initial_; }
  bool is_final(State q) const { return final_[q]; }
  void set_final(State q, bool accepting = true) { final_.at(q) = accepting; }

  State add_state(bool accepting = false) {
    final_.push_back(accepting);
    edges_.emplace_back();
    return static_cast<State>(final_.size() - 1);
  }

  void add_transition(State from, Symbol in, Symbol out, State to) {
    if (from >= num_states() || to >= num_states()) throw Error("state id out of range");
    auto valid = [&](Symbol s) { return s == kLambda || s < alphabet_.size(); };
    if (!valid(in) || !valid(out)) throw Error("transition symbol outside the alphabet");
    auto& list = edges_[from];
    Edge e{in, out, to};
    auto it = std::lower_bound(list.begin(), list.end(), e);
    if (it == list.end() || *it != e) list.insert(it, e);
  }

  const std::vector<Edge>& edges(State q) const { return edges_[q]; }

  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (const auto& l : edges_) n += l.size();
    return n;
  }

 private:
  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> final_;
};

inline bool is_length_preserving(const Transducer& t) {
  for (State q = 0; q < t.num_states(); ++q)
    for (const auto& e : t.edges(q))
      if (e.in == kLambda || e.out == kLambda) return false;
  return true;
}

inline void require_length_preserving(const Transducer& t) {
  if (!is_length_preserving(t)) throw Error("transducer is not length-preserving");
}

inline Transducer compile_pair_regex(const Regex& r, const Alphabet& alphabet,
                                     const RegexBindings& bindings = {}) {
  using Label = std::pair<Symbol, Symbol>;
  detail::ThompsonBuilder<Label> builder(bindings, [&](const Regex& leaf) -> Label {
    if (leaf.kind() != Regex::Kind::Pair)
      throw RegexError("bare symbol '" + leaf.name() +
                       "' in a transition relation; write a pair such as " + leaf.name() + "/" +
                       leaf.name());
    auto in = alphabet.find(leaf.name());
    auto out = alphabet.find(leaf.output());
    if (!in) throw RegexError("unknown symbol '" + leaf.name() + "'");
    if (!out) throw RegexError("unknown symbol '" + leaf.output() + "'");
    return {*in, *out};
  });
  auto la = builder.compile(r);
  Transducer t(alphabet, la.num_states, la.initial);
  for (State p = 0; p < la.num_states; ++p) {
    t.set_final(p, la.final[p]);
    for (const auto& [l, q] : la.edges[p]) t.add_transition(p, l.first, l.second, q);
  }
  return t;
}

namespace detail {

// Product of an automaton with one tape of the transducer; the other tape
// labels the result. Reachable pairs only.
inline Nfa project_product(const Transducer& t, const Nfa& l, bool forward) {
  require_same(t.alphabet(), l.alphabet());
  require_length_preserving(t);
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  Nfa out(l.alphabet(), 0);
  auto intern = [&](State ql, State qt) {
    auto [it, inserted] = index.emplace(std::pair{ql, qt}, static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(ql, qt);
      out.add_state(l.is_final(ql) && t.is_final(qt));
    }
    return it->second;
  };
  intern(l.initial(), t.initial());
  for (State i = 0; i < pairs.size(); ++i) {
    const auto [ql, qt] = pairs[i];
    for (const auto& e : t.edges(qt)) {
      const Symbol read = forward ? e.in : e.out;
      const Symbol write = forward ? e.out : e.in;
      for (State ql2 : l.successors(ql, read)) out.add_transition(i, write, intern(ql2, e.to));
    }
  }
  return out;
}

}  // namespace detail

// { y : exists x in L(l) with (x, y) in T }
inline Nfa post_image(const Transducer& t, const Nfa& l) {
  return detail::project_product(t, l, true);
}

// { x : exists y in L(l) with (x, y) in T }
inline Nfa pre_image(const Transducer& t, const Nfa& l) {
  return detail::project_product(t, l, false);
}

struct Violation {
  Word source;
  Word target;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// A pair (w, w') in T with w in A_h and w' outside it, or nullopt when
// T(A_h) is included in A_h. w is the length-lexicographically least source of
// any violation; w' is the least target for that w.
inline std::optional<Violation> inductive_violation(const Transducer& t, const Dfa& hypothesis) {
  require_same(t.alphabet(), hypothesis.alphabet());
  const Dfa inside = totalize(hypothesis);
  const Nfa outside = complement(inside).to_nfa();
  auto source = shortest_word(intersect(inside.to_nfa(), pre_image(t, outside)));
  if (!source) return std::nullopt;
  auto successors = post_image(t, single_word_dfa(t.alphabet(), *source).to_nfa());
  auto target = shortest_word(intersect(successors, outside));
  // A source exists only if some successor falls outside.
  if (!target) throw Error("internal error: inconsistent pre/post images");
  return Violation{std::move(*source), std::move(*target)};
}

}  // namespace rmcl
