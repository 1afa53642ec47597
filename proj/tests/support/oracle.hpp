#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// goes through the automata constructions under test: regexes are matched
// by direct recursion on the syntax tree and reachability is explicit-state
// search over all configurations of one length.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rmcl/rmcl.hpp"

namespace rmcl::oracle {

class Matcher {
 public:
  using LeafFn = std::function<bool(const Regex&, std::size_t)>;

  Matcher(const RegexBindings& bindings, LeafFn leaf, std::size_t length)
      : bindings_(bindings), leaf_(std::move(leaf)), length_(length) {}

  bool matches(const Regex& r) { return ends(r, 0).count(length_) != 0; }

  std::set<std::size_t> ends(const Regex& r, std::size_t start) {
    using K = Regex::Kind;
    switch (r.kind()) {
      case K::Empty: return {};
      case K::Epsilon: return {start};
      case K::Symbol:
      case K::Pair:
        if (start < length_ && leaf_(r, start)) return {start + 1};
        return {};
      case K::Ref: return ends(bindings_.at(r.name()), start);
      case K::Union: {
        std::set<std::size_t> out;
        for (const auto& c : r.children()) {
          auto e = ends(c, start);
          out.insert(e.begin(), e.end());
        }
        return out;
      }
      case K::Concat: {
        std::set<std::size_t> cur{start};
        for (const auto& c : r.children()) {
          std::set<std::size_t> next;
          for (auto p : cur) {
            auto e = ends(c, p);
            next.insert(e.begin(), e.end());
          }
          cur.swap(next);
        }
        return cur;
      }
      case K::Star: {
        std::set<std::size_t> reached{start};
        std::vector<std::size_t> todo{start};
        while (!todo.empty()) {
          auto p = todo.back();
          todo.pop_back();
          for (auto q : ends(r.children()[0], p))
            if (reached.insert(q).second) todo.push_back(q);
        }
        return reached;
      }
    }
    return {};
  }

 private:
  const RegexBindings& bindings_;
  LeafFn leaf_;
  std::size_t length_;
};

inline bool regex_matches(const Regex& r, const Alphabet& alphabet, const Word& w,
                          const RegexBindings& bindings = {}) {
  Matcher m(
      bindings, [&](const Regex& leaf, std::size_t i) { return leaf.name() == alphabet.name(w[i]); },
      w.size());
  return m.matches(r);
}

inline bool pair_regex_relates(const Regex& r, const Alphabet& alphabet, const Word& x,
                               const Word& y, const RegexBindings& bindings = {}) {
  if (x.size() != y.size()) return false;
  Matcher m(
      bindings,
      [&](const Regex& leaf, std::size_t i) {
        return leaf.name() == alphabet.name(x[i]) && leaf.output() == alphabet.name(y[i]);
      },
      x.size());
  return m.matches(r);
}

// All words of exactly length k in length-lexicographic order.
inline std::vector<Word> words_of_length(std::size_t symbols, std::size_t k) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Symbol a = 0; a < symbols; ++a) next.push_back(append(w, a));
    out.swap(next);
  }
  return out;
}

// All words of length <= k in length-lexicographic order.
inline std::vector<Word> words_up_to(std::size_t symbols, std::size_t k) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= k; ++n) {
    auto layer = words_of_length(symbols, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline RegexBindings bindings_of(const ModelDoc& doc) {
  RegexBindings b;
  for (const auto& [name, r] : doc.lets) b.emplace(name, r);
  return b;
}

// Explicit-state forward search over the configuration graph of one length,
// with initial states, bad states and edges decided by the regex matcher.
class ExplicitModel {
 public:
  explicit ExplicitModel(const ModelDoc& doc)
      : doc_(doc), alphabet_(doc.alphabet), bindings_(bindings_of(doc)),
        relation_(Regex::alt(doc.trans)) {}

  const Alphabet& alphabet() const { return alphabet_; }

  bool initial(const Word& w) const { return regex_matches(doc_.init, alphabet_, w, bindings_); }
  bool bad(const Word& w) const { return regex_matches(doc_.bad, alphabet_, w, bindings_); }
  bool step(const Word& x, const Word& y) const {
    return pair_regex_relates(relation_, alphabet_, x, y, bindings_);
  }

  std::set<Word> reachable(std::size_t k) const {
    const auto all = words_of_length(alphabet_.size(), k);
    std::set<Word> seen;
    std::vector<Word> todo;
    for (const auto& w : all)
      if (initial(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
    while (!todo.empty()) {
      Word x = todo.back();
      todo.pop_back();
      for (const auto& y : all)
        if (!seen.count(y) && step(x, y)) {
          seen.insert(y);
          todo.push_back(y);
        }
    }
    return seen;
  }

 private:
  ModelDoc doc_;
  Alphabet alphabet_;
  RegexBindings bindings_;
  Regex relation_;
};

inline Regex random_regex(std::mt19937& rng, const Alphabet& alphabet, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  auto sym = [&] {
    std::uniform_int_distribution<std::size_t> s(0, alphabet.size() - 1);
    return Regex::symbol(alphabet.names()[s(rng)]);
  };
  switch (pick(rng)) {
    case 0: return sym();
    case 1: {
      std::uniform_int_distribution<int> leaf(0, 9);
      int v = leaf(rng);
      if (v == 0) return Regex::empty();
      if (v == 1) return Regex::epsilon();
      return sym();
    }
    case 2:
    case 3:
      return Regex::concat(
          {random_regex(rng, alphabet, depth - 1), random_regex(rng, alphabet, depth - 1)});
    case 4:
      return Regex::alt(
          {random_regex(rng, alphabet, depth - 1), random_regex(rng, alphabet, depth - 1)});
    default: return Regex::star(random_regex(rng, alphabet, depth - 1));
  }
}

// Random total DFA with the given number of states (before minimization).
inline Dfa random_dfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states) {
  Dfa d(alphabet, states);
  std::uniform_int_distribution<State> target(0, static_cast<State>(states - 1));
  std::bernoulli_distribution accept(0.4);
  for (State q = 0; q < states; ++q) {
    d.set_final(q, accept(rng));
    for (Symbol a = 0; a < alphabet.size(); ++a) d.set_transition(q, a, target(rng));
  }
  return d;
}

}  // namespace rmcl::oracle
