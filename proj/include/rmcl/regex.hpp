#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rmcl/automaton.hpp"

namespace rmcl {

class RegexError : public Error {
 public:
  using Error::Error;
};

// Regular expression syntax tree. Leaves are either plain symbols (for
// configuration languages) or symbol pairs "a/b" (for transition relations).
// Concat and Union are n-ary.
class Regex {
 public:
  enum class Kind { Empty, Epsilon, Symbol, Pair, Concat, Union, Star, Ref };

  static Regex empty() { return Regex(Kind::Empty); }
  static Regex epsilon() { return Regex(Kind::Epsilon); }
  static Regex symbol(std::string name) {
    Regex r(Kind::Symbol);
    r.name_ = std::move(name);
    return r;
  }
  static Regex pair(std::string in, std::string out) {
    Regex r(Kind::Pair);
    r.name_ = std::move(in);
    r.output_ = std::move(out);
    return r;
  }
  static Regex ref(std::string name) {
    Regex r(Kind::Ref);
    r.name_ = std::move(name);
    return r;
  }
  static Regex concat(std::vector<Regex> parts) { return nary(Kind::Concat, std::move(parts)); }
  static Regex alt(std::vector<Regex> parts) { return nary(Kind::Union, std::move(parts)); }
  static Regex star(Regex inner) {
    Regex r(Kind::Star);
    r.children_.push_back(std::move(inner));
    return r;
  }

  Kind kind() const { return kind_; }
  // Symbol name, pair input, or reference name depending on kind().
  const std::string& name() const { return name_; }
  const std::string& output() const { return output_; }
  const std::vector<Regex>& children() const { return children_; }

  std::string to_string() const { return print(0); }

  friend bool operator==(const Regex&, const Regex&) = default;

 private:
  explicit Regex(Kind k) : kind_(k) {}

  static Regex nary(Kind k, std::vector<Regex> parts) {
    if (parts.empty()) return k == Kind::Concat ? epsilon() : empty();
    if (parts.size() == 1) return std::move(parts.front());
    Regex r(k);
    for (auto& p : parts) {
      if (p.kind_ == k)
        for (auto& c : p.children_) r.children_.push_back(std::move(c));
      else
        r.children_.push_back(std::move(p));
    }
    return r;
  }

  int precedence() const {
    switch (kind_) {
      case Kind::Union: return 0;
      case Kind::Concat: return 1;
      case Kind::Star: return 2;
      default: return 3;
    }
  }

  std::string print(int context) const {
    std::string out;
    switch (kind_) {
      case Kind::Empty: out = "empty"; break;
      case Kind::Epsilon: out = "eps"; break;
      case Kind::Symbol:
      case Kind::Ref: out = name_; break;
      case Kind::Pair: out = name_ + "/" + output_; break;
      case Kind::Star: out = children_[0].print(3) + "*"; break;
      case Kind::Concat:
      case Kind::Union: {
        const char* sep = kind_ == Kind::Union ? " + " : " ";
        for (std::size_t i = 0; i < children_.size(); ++i) {
          if (i) out += sep;
          out += children_[i].print(precedence() + 1);
        }
        break;
      }
    }
    return precedence() < context ? "(" + out + ")" : out;
  }

  Kind kind_;
  std::string name_;
  std::string output_;
  std::vector<Regex> children_;
};

// Named sub-expressions available to Ref nodes.
using RegexBindings = std::map<std::string, Regex, std::less<>>;

namespace detail {

// Lambda-free automaton over an arbitrary label type, the common result of
// compiling plain and pair regexes.
template <class Label>
struct LabelledAutomaton {
  std::size_t num_states = 0;
  State initial = 0;
  std::vector<bool> final;
  std::vector<std::vector<std::pair<Label, State>>> edges;
};

template <class Label>
class ThompsonBuilder {
 public:
  using LeafFn = std::function<Label(const Regex&)>;

  ThompsonBuilder(const RegexBindings& bindings, LeafFn leaf)
      : bindings_(bindings), leaf_(std::move(leaf)) {}

  LabelledAutomaton<Label> compile(const Regex& r) {
    auto [start, end] = build(r);
    return eliminate(start, end);
  }

 private:
  struct Edge {
    State from;
    std::optional<Label> label;
    State to;
  };

  State fresh() { return static_cast<State>(num_states_++); }

  std::pair<State, State> build(const Regex& r) {
    using K = Regex::Kind;
    switch (r.kind()) {
      case K::Empty: return {fresh(), fresh()};
      case K::Epsilon: {
        State s = fresh(), e = fresh();
        edges_.push_back({s, std::nullopt, e});
        return {s, e};
      }
      case K::Symbol:
      case K::Pair: {
        Label l = leaf_(r);
        State s = fresh(), e = fresh();
        edges_.push_back({s, l, e});
        return {s, e};
      }
      case K::Concat: {
        auto [s, e] = build(r.children().front());
        for (std::size_t i = 1; i < r.children().size(); ++i) {
          auto [s2, e2] = build(r.children()[i]);
          edges_.push_back({e, std::nullopt, s2});
          e = e2;
        }
        return {s, e};
      }
      case K::Union: {
        State s = fresh(), e = fresh();
        for (const auto& c : r.children()) {
          auto [cs, ce] = build(c);
          edges_.push_back({s, std::nullopt, cs});
          edges_.push_back({ce, std::nullopt, e});
        }
        return {s, e};
      }
      case K::Star: {
        State s = fresh(), e = fresh();
        auto [cs, ce] = build(r.children().front());
        edges_.push_back({s, std::nullopt, cs});
        edges_.push_back({ce, std::nullopt, cs});
        edges_.push_back({s, std::nullopt, e});
        edges_.push_back({ce, std::nullopt, e});
        return {s, e};
      }
      case K::Ref: {
        auto it = bindings_.find(r.name());
        if (it == bindings_.end()) throw RegexError("undefined name '" + r.name() + "'");
        if (active_.count(r.name())) throw RegexError("cyclic definition of '" + r.name() + "'");
        active_.insert(r.name());
        auto frag = build(it->second);
        active_.erase(r.name());
        return frag;
      }
    }
    return {fresh(), fresh()};
  }

  LabelledAutomaton<Label> eliminate(State start, State end) const {
    const std::size_t n = num_states_;
    std::vector<std::vector<State>> eps(n);
    std::vector<std::vector<std::pair<Label, State>>> labelled(n);
    for (const auto& e : edges_) {
      if (e.label)
        labelled[e.from].emplace_back(*e.label, e.to);
      else
        eps[e.from].push_back(e.to);
    }

    LabelledAutomaton<Label> out;
    out.num_states = n;
    out.initial = start;
    out.final.assign(n, false);
    out.edges.resize(n);
    std::vector<char> seen(n);
    for (State p = 0; p < n; ++p) {
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<State> stack{p};
      seen[p] = 1;
      while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        if (q == end) out.final[p] = true;
        for (const auto& lt : labelled[q]) out.edges[p].push_back(lt);
        for (State t : eps[q])
          if (!seen[t]) {
            seen[t] = 1;
            stack.push_back(t);
          }
      }
    }
    return trim(out);
  }

  // Keep only states that are reachable and co-reachable; renumber in
  // discovery order from the initial state.
  static LabelledAutomaton<Label> trim(const LabelledAutomaton<Label>& in) {
    const std::size_t n = in.num_states;
    std::vector<std::vector<State>> rev(n);
    for (State p = 0; p < n; ++p)
      for (const auto& [l, q] : in.edges[p]) rev[q].push_back(p);
    std::vector<char> useful(n);
    std::vector<State> stack;
    for (State p = 0; p < n; ++p)
      if (in.final[p]) {
        useful[p] = 1;
        stack.push_back(p);
      }
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (State p : rev[q])
        if (!useful[p]) {
          useful[p] = 1;
          stack.push_back(p);
        }
    }

    std::vector<State> id(n, kNoState);
    std::vector<State> order{in.initial};
    id[in.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (const auto& [l, q] : in.edges[order[i]])
        if (useful[q] && id[q] == kNoState) {
          id[q] = static_cast<State>(order.size());
          order.push_back(q);
        }

    LabelledAutomaton<Label> out;
    out.num_states = order.size();
    out.initial = 0;
    out.final.assign(order.size(), false);
    out.edges.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      State p = order[i];
      out.final[i] = in.final[p];
      for (const auto& [l, q] : in.edges[p])
        if (id[q] != kNoState) out.edges[i].emplace_back(l, id[q]);
    }
    return out;
  }

  const RegexBindings& bindings_;
  LeafFn leaf_;
  std::set<std::string, std::less<>> active_;
  std::size_t num_states_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace detail

// Thompson construction followed by lambda elimination and trimming.
inline Nfa compile_regex(const Regex& r, const Alphabet& alphabet,
                         const RegexBindings& bindings = {}) {
  detail::ThompsonBuilder<Symbol> builder(bindings, [&](const Regex& leaf) -> Symbol {
    if (leaf.kind() == Regex::Kind::Pair)
      throw RegexError("symbol pair '" + leaf.to_string() + "' in a configuration language");
    auto s = alphabet.find(leaf.name());
    if (!s) throw RegexError("unknown symbol '" + leaf.name() + "'");
    return *s;
  });
  auto la = builder.compile(r);
  Nfa m(alphabet, la.num_states, la.initial);
  for (State p = 0; p < la.num_states; ++p) {
    m.set_final(p, la.final[p]);
    for (const auto& [a, q] : la.edges[p]) m.add_transition(p, a, q);
  }
  return m;
}

}  // namespace rmcl
