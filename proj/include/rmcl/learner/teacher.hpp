#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rmcl/automaton.hpp"

namespace rmcl {

class LearnerError : public Error {
 public:
  using Error::Error;
};

struct Equal {};

struct Counterexample {
  Word word;
};

// Ends learning with a teacher-specific payload (the RMC teacher uses it to
// carry its verdict).
template <class Payload>
struct Stop {
  Payload payload;
};

template <class Payload>
using EquivalenceReply = std::variant<Equal, Counterexample, Stop<Payload>>;

// A teacher answers membership and equivalence queries about a fixed target
// language. pending_stop() lets it end the run between queries.
template <class T>
concept Teacher = requires(T& t, const Word& w, const Dfa& h) {
  typename T::payload_type;
  { t.membership(w) } -> std::convertible_to<bool>;
  { t.equivalence(h) } -> std::same_as<EquivalenceReply<typename T::payload_type>>;
  { t.pending_stop() } -> std::same_as<std::optional<typename T::payload_type>>;
};

struct LearnerStats {
  std::size_t membership_queries = 0;  // distinct words sent to the teacher
  std::size_t equivalence_queries = 0;
  std::size_t iterations = 0;
  std::size_t final_states = 0;
  std::vector<Word> counterexamples;
  std::vector<std::size_t> hypothesis_sizes;  // one per equivalence query
};

// Memoizing front end to a teacher's membership query.
template <Teacher T>
class MembershipOracle {
 public:
  explicit MembershipOracle(T& teacher) : teacher_(teacher) {}

  bool operator()(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    if (stopped_) return false;
    bool answer = teacher_.membership(w);
    ++queries_;
    if (!stopped_) {
      if (auto s = teacher_.pending_stop()) stopped_ = std::move(s);
    }
    if (stopped_) return false;  // answer may be bogus once the teacher halted
    cache_.emplace(w, answer);
    return answer;
  }

  bool stopped() const { return stopped_.has_value(); }
  std::optional<typename T::payload_type> take_stop() { return std::move(stopped_); }
  std::size_t queries() const { return queries_; }
  T& teacher() { return teacher_; }

 private:
  T& teacher_;
  std::map<Word, bool> cache_;
  std::optional<typename T::payload_type> stopped_;
  std::size_t queries_ = 0;
};

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word append(const Word& a, Symbol s) {
  Word w = a;
  w.push_back(s);
  return w;
}

}  // namespace rmcl
