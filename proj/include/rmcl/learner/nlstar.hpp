#pragma once

#include <algorithm>
#include <vector>

#include "rmcl/learner/driver.hpp"
#include "rmcl/learner/observation_table.hpp"
#include "rmcl/operations.hpp"

namespace rmcl {

namespace detail {

inline bool covered_by(const ObservationTable::Row& small, const ObservationTable::Row& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] && !big[i]) return false;
  return true;
}

}  // namespace detail

// NL*: rows are compared by coverage instead of equality. The hypothesis is a
// residual automaton whose states are the prime rows of S; a row is prime
// unless it is the join of the rows strictly below it.
class NLStarLearner {
 public:
  using Row = ObservationTable::Row;

  explicit NLStarLearner(Alphabet alphabet) : table_(std::move(alphabet)) {}

  const ObservationTable& table() const { return table_; }

  // Distinct rows of S u S.Sigma that are prime.
  std::vector<Row> prime_rows() const {
    std::vector<Row> all;
    auto collect = [&](const Word& x) {
      Row r = table_.row(x);
      if (std::find(all.begin(), all.end(), r) == all.end()) all.push_back(std::move(r));
    };
    for (const auto& s : table_.prefixes()) {
      collect(s);
      for (Symbol a = 0; a < table_.alphabet().size(); ++a) collect(append(s, a));
    }
    std::vector<Row> primes;
    for (const auto& r : all) {
      Row join(r.size(), false);
      for (const auto& other : all)
        if (other != r && detail::covered_by(other, r))
          for (std::size_t i = 0; i < r.size(); ++i) join[i] = join[i] || other[i];
      if (join != r) primes.push_back(r);
    }
    return primes;
  }

  template <class Oracle>
  void prepare(Oracle& oracle) {
    for (;;) {
      table_.fill(oracle);
      if (oracle.stopped()) return;
      if (auto u = find_unclosed()) {
        if (!table_.add_prefix(std::move(*u)))
          throw LearnerError("NL* closure made no progress");
        continue;
      }
      if (auto ae = find_inconsistency()) {
        table_.add_suffix(std::move(*ae));
        continue;
      }
      break;
    }
    build();
  }

  Dfa hypothesis() const { return dfa_; }
  Nfa hypothesis_nfa() const { return nfa_; }
  std::size_t size() const { return states_; }

  template <class Oracle>
  void refine(const Word& w, Oracle&) {
    for (std::size_t i = 0; i < w.size(); ++i)
      table_.add_suffix(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
  }

 private:
  // Upper primes: prime rows that occur as rows of S, with their first
  // access word.
  std::vector<std::pair<Row, Word>> upper_primes(const std::vector<Row>& primes) const {
    std::vector<std::pair<Row, Word>> out;
    for (const auto& s : table_.prefixes()) {
      Row r = table_.row(s);
      if (std::find(primes.begin(), primes.end(), r) == primes.end()) continue;
      bool seen = std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.first == r; });
      if (!seen) out.emplace_back(std::move(r), s);
    }
    return out;
  }

  // A row of S.Sigma that is not the join of the upper primes it covers
  // signals a missing state; the first prime lower row outside S is added.
  std::optional<Word> find_unclosed() const {
    const auto primes = prime_rows();
    const auto upper = upper_primes(primes);
    std::optional<Word> fallback;
    for (const auto& s : table_.prefixes())
      for (Symbol a = 0; a < table_.alphabet().size(); ++a) {
        Word u = append(s, a);
        Row r = table_.row(u);
        Row join(r.size(), false);
        for (const auto& [p, access] : upper)
          if (detail::covered_by(p, r))
            for (std::size_t i = 0; i < r.size(); ++i) join[i] = join[i] || p[i];
        if (join == r) continue;
        if (!fallback) fallback = u;
      }
    if (!fallback) return std::nullopt;
    for (const auto& s : table_.prefixes())
      for (Symbol a = 0; a < table_.alphabet().size(); ++a) {
        Word u = append(s, a);
        Row r = table_.row(u);
        bool prime = std::find(primes.begin(), primes.end(), r) != primes.end();
        bool in_upper = std::any_of(upper.begin(), upper.end(),
                                    [&](const auto& p) { return p.first == r; });
        if (prime && !in_upper && !table_.has_prefix(u)) return u;
      }
    return fallback;
  }

  // row(u') below row(u) must imply row(u'a) below row(ua).
  std::optional<Word> find_inconsistency() const {
    const auto& S = table_.prefixes();
    const auto& E = table_.suffixes();
    for (const auto& u : S)
      for (const auto& v : S) {
        if (u == v || !detail::covered_by(table_.row(v), table_.row(u))) continue;
        for (Symbol a = 0; a < table_.alphabet().size(); ++a)
          for (const auto& e : E) {
            Word ae = concat(Word{a}, e);
            if (table_.value(concat(v, ae)) && !table_.value(concat(u, ae))) return ae;
          }
      }
    return std::nullopt;
  }

  void build() {
    const auto upper = upper_primes(prime_rows());
    const Row lambda_row = table_.row(Word{});
    // State 0 is a fresh initial state standing for the set of initial
    // states (upper primes below the row of lambda).
    Nfa m(table_.alphabet(), 1 + upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const auto& [r, access] = upper[i];
      const State q = static_cast<State>(i + 1);
      m.set_final(q, r[0]);
      for (Symbol a = 0; a < table_.alphabet().size(); ++a) {
        Row target = table_.row(append(access, a));
        for (std::size_t j = 0; j < upper.size(); ++j)
          if (detail::covered_by(upper[j].first, target)) {
            m.add_transition(q, a, static_cast<State>(j + 1));
            if (detail::covered_by(r, lambda_row)) m.add_transition(0, a, static_cast<State>(j + 1));
          }
      }
      if (detail::covered_by(r, lambda_row) && r[0]) m.set_final(0);
    }
    states_ = upper.size();
    nfa_ = std::move(m);
    dfa_ = minimize(determinize(nfa_));
  }

  ObservationTable table_;
  Nfa nfa_;
  Dfa dfa_;
  std::size_t states_ = 0;
};

}  // namespace rmcl
