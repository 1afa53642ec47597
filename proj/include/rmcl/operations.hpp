#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rmcl/automaton.hpp"

namespace rmcl {

inline bool accepts(const Nfa& m, const Word& w) {
  std::vector<char> current(m.num_states()), next(m.num_states());
  current[m.initial()] = 1;
  for (Symbol a : w) {
    if (a >= m.alphabet().size()) return false;
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (State q = 0; q < m.num_states(); ++q)
      if (current[q])
        for (State t : m.successors(q, a)) next[t] = any = 1;
    if (!any) return false;
    current.swap(next);
  }
  for (State q = 0; q < m.num_states(); ++q)
    if (current[q] && m.is_final(q)) return true;
  return false;
}

inline bool accepts(const Dfa& d, const Word& w) { return d.accepts(w); }

// Automaton with the empty language: one non-accepting sink.
inline Dfa empty_dfa(const Alphabet& alphabet) {
  Dfa d(alphabet, 1);
  for (Symbol a = 0; a < alphabet.size(); ++a) d.set_transition(0, a, 0);
  return d;
}

inline Dfa universal_dfa(const Alphabet& alphabet) {
  Dfa d = empty_dfa(alphabet);
  d.set_final(0);
  return d;
}

// Total DFA for all words of length exactly k.
inline Dfa length_slice(const Alphabet& alphabet, std::size_t k) {
  Dfa d(alphabet, k + 2);
  const State sink = static_cast<State>(k + 1);
  for (State q = 0; q <= k + 1; ++q)
    for (Symbol a = 0; a < alphabet.size(); ++a)
      d.set_transition(q, a, q < k ? q + 1 : sink);
  d.set_final(static_cast<State>(k));
  return d;
}

inline Dfa single_word_dfa(const Alphabet& alphabet, const Word& w) {
  Dfa d(alphabet, w.size() + 2);
  const State sink = static_cast<State>(w.size() + 1);
  for (State q = 0; q <= sink; ++q)
    for (Symbol a = 0; a < alphabet.size(); ++a)
      d.set_transition(q, a, q < w.size() && w[q] == a ? q + 1 : sink);
  d.set_final(static_cast<State>(w.size()));
  return d;
}

// Subset construction. Only reachable subsets are created; the empty subset
// becomes the sink, so the result is total.
inline Dfa determinize(const Nfa& m) {
  const Alphabet& alpha = m.alphabet();
  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  Dfa d(alpha, 0);

  auto intern = [&](std::vector<State> set) {
    auto [it, inserted] = index.emplace(set, static_cast<State>(subsets.size()));
    if (inserted) {
      bool accepting = false;
      for (State q : set) accepting = accepting || m.is_final(q);
      d.add_state(accepting);
      subsets.push_back(std::move(set));
    }
    return it->second;
  };

  intern({m.initial()});
  std::vector<char> mark(m.num_states());
  for (State i = 0; i < subsets.size(); ++i) {
    for (Symbol a = 0; a < alpha.size(); ++a) {
      std::vector<State> target;
      for (State q : subsets[i])
        for (State t : m.successors(q, a))
          if (!mark[t]) {
            mark[t] = 1;
            target.push_back(t);
          }
      for (State t : target) mark[t] = 0;
      std::sort(target.begin(), target.end());
      State j = intern(std::move(target));
      d.set_transition(i, a, j);
    }
  }
  return d;
}

inline Dfa determinize(const Dfa& d) { return determinize(d.to_nfa()); }

// Adds a rejecting sink for undefined transitions if needed.
inline Dfa totalize(const Dfa& d) {
  if (d.is_total()) return d;
  Dfa t = d;
  State sink = t.add_state(false);
  for (State q = 0; q < t.num_states(); ++q)
    for (Symbol a = 0; a < t.alphabet().size(); ++a)
      if (t.next(q, a) == kNoState) t.set_transition(q, a, sink);
  return t;
}

// Moore partition refinement over the reachable part, then canonical
// renumbering: breadth-first from the initial state, symbols in alphabet order.
inline Dfa minimize(const Dfa& input) {
  const Dfa d = totalize(input);
  const std::size_t k = d.alphabet().size();

  std::vector<State> reach{d.initial()};
  std::vector<State> pos(d.num_states(), kNoState);
  pos[d.initial()] = 0;
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (Symbol a = 0; a < k; ++a) {
      State t = d.next(reach[i], a);
      if (pos[t] == kNoState) {
        pos[t] = static_cast<State>(reach.size());
        reach.push_back(t);
      }
    }
  const std::size_t n = reach.size();

  std::vector<State> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = d.is_final(reach[i]) ? 1 : 0;
  std::size_t num_blocks = 0;
  for (;;) {
    std::map<std::vector<State>, State> sig_index;
    std::vector<State> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<State> sig;
      sig.reserve(k + 1);
      sig.push_back(block[i]);
      for (Symbol a = 0; a < k; ++a) sig.push_back(block[pos[d.next(reach[i], a)]]);
      auto [it, _] = sig_index.emplace(std::move(sig), static_cast<State>(sig_index.size()));
      refined[i] = it->second;
    }
    block.swap(refined);
    if (sig_index.size() == num_blocks) break;
    num_blocks = sig_index.size();
  }

  // Canonical numbering of the quotient.
  std::vector<State> canon(num_blocks, kNoState);
  std::vector<std::size_t> rep;  // representative reach-index per canonical state
  canon[block[0]] = 0;
  rep.push_back(0);
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (Symbol a = 0; a < k; ++a) {
      std::size_t t = pos[d.next(reach[rep[i]], a)];
      if (canon[block[t]] == kNoState) {
        canon[block[t]] = static_cast<State>(rep.size());
        rep.push_back(t);
      }
    }

  Dfa out(d.alphabet(), rep.size());
  for (State q = 0; q < rep.size(); ++q) {
    out.set_final(q, d.is_final(reach[rep[q]]));
    for (Symbol a = 0; a < k; ++a)
      out.set_transition(q, a, canon[block[pos[d.next(reach[rep[q]], a)]]]);
  }
  return out;
}

inline Dfa complement(const Dfa& d) {
  Dfa c = totalize(d);
  for (State q = 0; q < c.num_states(); ++q) c.set_final(q, !c.is_final(q));
  return c;
}

// Product construction restricted to reachable pairs.
inline Nfa intersect(const Nfa& x, const Nfa& y) {
  require_same(x.alphabet(), y.alphabet());
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  Nfa out(x.alphabet(), 0);
  auto intern = [&](State p, State q) {
    auto [it, inserted] = index.emplace(std::pair{p, q}, static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(p, q);
      out.add_state(x.is_final(p) && y.is_final(q));
    }
    return it->second;
  };
  intern(x.initial(), y.initial());
  for (State i = 0; i < pairs.size(); ++i)
    for (Symbol a = 0; a < x.alphabet().size(); ++a) {
      const auto [p, q] = pairs[i];
      for (State p2 : x.successors(p, a))
        for (State q2 : y.successors(q, a)) out.add_transition(i, a, intern(p2, q2));
    }
  return out;
}

// Disjoint sum with a fresh initial state that copies both initial states'
// outgoing transitions.
inline Nfa union_of(const Nfa& x, const Nfa& y) {
  require_same(x.alphabet(), y.alphabet());
  Nfa out(x.alphabet(), 1 + x.num_states() + y.num_states());
  const State ox = 1, oy = static_cast<State>(1 + x.num_states());
  out.set_final(0, x.is_final(x.initial()) || y.is_final(y.initial()));
  for (State q = 0; q < x.num_states(); ++q) {
    out.set_final(ox + q, x.is_final(q));
    for (Symbol a = 0; a < x.alphabet().size(); ++a)
      for (State t : x.successors(q, a)) {
        out.add_transition(ox + q, a, ox + t);
        if (q == x.initial()) out.add_transition(0, a, ox + t);
      }
  }
  for (State q = 0; q < y.num_states(); ++q) {
    out.set_final(oy + q, y.is_final(q));
    for (Symbol a = 0; a < y.alphabet().size(); ++a)
      for (State t : y.successors(q, a)) {
        out.add_transition(oy + q, a, oy + t);
        if (q == y.initial()) out.add_transition(0, a, oy + t);
      }
  }
  return out;
}

// Shortest accepted word, ties broken lexicographically by symbol order;
// nullopt when the language is empty. A backward search gives each state's
// distance to acceptance; the word is then built forwards, always taking the
// least symbol that keeps some state of the current set on a shortest path.
// Tracking a set matters for NFAs, where several states share one prefix.
inline std::optional<Word> shortest_word(const Nfa& m) {
  constexpr std::size_t kFar = static_cast<std::size_t>(-1);
  const std::size_t n = m.num_states();
  const std::size_t sigma = m.alphabet().size();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q)
    for (Symbol a = 0; a < sigma; ++a)
      for (State t : m.successors(q, a)) preds[t].push_back(q);

  std::vector<std::size_t> dist(n, kFar);
  std::deque<State> queue;
  for (State q = 0; q < n; ++q)
    if (m.is_final(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    State t = queue.front();
    queue.pop_front();
    for (State q : preds[t])
      if (dist[q] == kFar) {
        dist[q] = dist[t] + 1;
        queue.push_back(q);
      }
  }
  if (dist[m.initial()] == kFar) return std::nullopt;

  Word w;
  std::vector<State> current{m.initial()};
  std::vector<char> mark(n);
  for (std::size_t left = dist[m.initial()]; left > 0; --left) {
    for (Symbol a = 0; a < sigma; ++a) {
      std::vector<State> next;
      for (State q : current)
        for (State t : m.successors(q, a))
          if (dist[t] == left - 1 && !mark[t]) {
            mark[t] = 1;
            next.push_back(t);
          }
      for (State t : next) mark[t] = 0;
      if (!next.empty()) {
        w.push_back(a);
        current = std::move(next);
        break;
      }
    }
  }
  return w;
}

inline bool is_empty(const Nfa& m) { return !shortest_word(m).has_value(); }

// Shortest word in L(a) \ L(b), or nullopt if L(a) is included in L(b).
inline std::optional<Word> inclusion_counterexample(const Nfa& a, const Dfa& b) {
  require_same(a.alphabet(), b.alphabet());
  return shortest_word(intersect(a, complement(b).to_nfa()));
}

inline std::optional<Word> inclusion_counterexample(const Nfa& a, const Nfa& b) {
  return inclusion_counterexample(a, determinize(b));
}

// Shortest word in the symmetric difference.
inline std::optional<Word> difference_witness(const Dfa& x, const Dfa& y) {
  auto xy = inclusion_counterexample(x.to_nfa(), y);
  auto yx = inclusion_counterexample(y.to_nfa(), x);
  if (!xy) return yx;
  if (!yx) return xy;
  if (xy->size() != yx->size()) return xy->size() < yx->size() ? xy : yx;
  return std::min(*xy, *yx);
}

inline bool equivalent(const Dfa& x, const Dfa& y) { return !difference_witness(x, y); }

inline bool equivalent(const Nfa& x, const Nfa& y) {
  return equivalent(determinize(x), determinize(y));
}

}  // namespace rmcl
