#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "rmcl/learner/teacher.hpp"

namespace rmcl {

// Angluin-style observation table (S, E, T). Cells are stored per word, so
// T(x.e) is shared between every (x, e) split of the same word.
class ObservationTable {
 public:
  using Row = std::vector<bool>;

  explicit ObservationTable(Alphabet alphabet)
      : alphabet_(std::move(alphabet)), prefixes_{Word{}}, suffixes_{Word{}} {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& prefixes() const { return prefixes_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }

  bool has_prefix(const Word& w) const {
    return std::find(prefixes_.begin(), prefixes_.end(), w) != prefixes_.end();
  }
  bool has_suffix(const Word& w) const {
    return std::find(suffixes_.begin(), suffixes_.end(), w) != suffixes_.end();
  }

  bool add_prefix(Word w) {
    if (has_prefix(w)) return false;
    prefixes_.push_back(std::move(w));
    return true;
  }
  bool add_suffix(Word w) {
    if (has_suffix(w)) return false;
    suffixes_.push_back(std::move(w));
    return true;
  }

  // Queries every missing cell of (S u S.Sigma).E.
  template <class Oracle>
  void fill(Oracle& oracle) {
    auto cover = [&](const Word& x) {
      for (const auto& e : suffixes_) {
        Word w = concat(x, e);
        if (!cells_.count(w)) cells_.emplace(w, oracle(w));
      }
    };
    for (std::size_t i = 0; i < prefixes_.size(); ++i) {
      cover(prefixes_[i]);
      for (Symbol a = 0; a < alphabet_.size(); ++a) cover(append(prefixes_[i], a));
    }
  }

  bool filled(const Word& w) const { return cells_.count(w) != 0; }
  bool value(const Word& w) const {
    auto it = cells_.find(w);
    if (it == cells_.end()) throw LearnerError("observation table cell not filled");
    return it->second;
  }

  Row row(const Word& x) const {
    Row r;
    r.reserve(suffixes_.size());
    for (const auto& e : suffixes_) r.push_back(value(concat(x, e)));
    return r;
  }

  // Index of the first prefix whose row equals r.
  std::optional<std::size_t> find_row(const Row& r) const {
    for (std::size_t i = 0; i < prefixes_.size(); ++i)
      if (row(prefixes_[i]) == r) return i;
    return std::nullopt;
  }

  // First one-symbol extension x.a (S order, then symbol order) whose row
  // matches no row of S.
  std::optional<Word> find_unclosed() const {
    for (std::size_t i = 0; i < prefixes_.size(); ++i)
      for (Symbol a = 0; a < alphabet_.size(); ++a) {
        Word xa = append(prefixes_[i], a);
        if (!find_row(row(xa))) return xa;
      }
    return std::nullopt;
  }

  bool is_closed() const { return !find_unclosed().has_value(); }

  // For tables whose S rows may coincide: a suffix a.e separating two equal
  // rows of S after reading a, if any.
  std::optional<Word> find_inconsistency() const {
    for (std::size_t i = 0; i < prefixes_.size(); ++i)
      for (std::size_t j = i + 1; j < prefixes_.size(); ++j) {
        if (row(prefixes_[i]) != row(prefixes_[j])) continue;
        for (Symbol a = 0; a < alphabet_.size(); ++a)
          for (const auto& e : suffixes_) {
            Word ae = concat(Word{a}, e);
            if (value(concat(prefixes_[i], ae)) != value(concat(prefixes_[j], ae))) return ae;
          }
      }
    return std::nullopt;
  }

  // Distinct-row representatives of S, in S order. These are the hypothesis
  // states; representative(i) is the access word of state i.
  std::vector<std::size_t> representatives() const {
    std::vector<std::size_t> reps;
    std::vector<Row> seen;
    for (std::size_t i = 0; i < prefixes_.size(); ++i) {
      Row r = row(prefixes_[i]);
      if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
        seen.push_back(std::move(r));
        reps.push_back(i);
      }
    }
    return reps;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> prefixes_;
  std::vector<Word> suffixes_;
  std::map<Word, bool> cells_;
};

// Extends S with unmatched extensions until the table is closed. Returns the
// number of prefixes added.
template <class Oracle>
std::size_t close_table(ObservationTable& table, Oracle& oracle) {
  std::size_t added = 0;
  table.fill(oracle);
  while (auto xa = table.find_unclosed()) {
    if (oracle.stopped()) break;
    table.add_prefix(std::move(*xa));
    table.fill(oracle);
    ++added;
  }
  return added;
}

// Hypothesis DFA of a closed table together with the access word of each
// state.
struct Candidate {
  Dfa dfa;
  std::vector<Word> access;
};

inline Candidate build_candidate_with_access(const ObservationTable& table) {
  if (!table.is_closed()) throw LearnerError("observation table is not closed");
  const auto reps = table.representatives();
  std::vector<ObservationTable::Row> rows;
  for (auto i : reps) rows.push_back(table.row(table.prefixes()[i]));
  auto state_of = [&](const ObservationTable::Row& r) {
    return static_cast<State>(std::find(rows.begin(), rows.end(), r) - rows.begin());
  };

  Candidate c{Dfa(table.alphabet(), reps.size()), {}};
  // prefixes()[0] is lambda, so state 0 is the initial state.
  for (State q = 0; q < reps.size(); ++q) {
    const Word& s = table.prefixes()[reps[q]];
    c.access.push_back(s);
    c.dfa.set_final(q, table.value(s));
    for (Symbol a = 0; a < table.alphabet().size(); ++a)
      c.dfa.set_transition(q, a, state_of(table.row(append(s, a))));
  }
  return c;
}

inline Dfa build_candidate(const ObservationTable& table) {
  return build_candidate_with_access(table).dfa;
}

// Rivest-Schapire counterexample analysis. For i in [0, |w|] let
// alpha(i) = Mem(access(h after w[0..i)) . w[i..]). alpha(0) = Mem(w) and
// alpha(|w|) is the hypothesis answer, which differ; a binary search finds
// adjacent positions lo, lo+1 with different values and returns w[lo+1..].
template <class Oracle>
Word rs_analyze(const Word& w, const Candidate& hypothesis, Oracle& oracle) {
  auto alpha = [&](std::size_t i) {
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    State q = hypothesis.dfa.run(prefix);
    Word probe = concat(hypothesis.access[q], Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
    return oracle(probe);
  };
  const bool first = oracle(w);
  if (first == hypothesis.dfa.accepts(w))
    throw LearnerError("word is not a counterexample for the hypothesis");
  std::size_t lo = 0, hi = w.size();
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (alpha(mid) == first)
      lo = mid;
    else
      hi = mid;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(hi), w.end());
}

}  // namespace rmcl
