#pragma once

#include "rmcl/learner/driver.hpp"
#include "rmcl/learner/observation_table.hpp"

namespace rmcl {

// Table-based learners. They share closing and hypothesis construction and
// differ only in how a counterexample w is absorbed:
//   Classic         all prefixes of w join S (needs consistency repair)
//   AllSuffixes     all suffixes of w join E
//   RivestSchapire  one suffix of w, found by binary search, joins E
class LStarLearner {
 public:
  enum class Mode { Classic, AllSuffixes, RivestSchapire };

  LStarLearner(Alphabet alphabet, Mode mode) : table_(std::move(alphabet)), mode_(mode) {}

  const ObservationTable& table() const { return table_; }

  template <class Oracle>
  void prepare(Oracle& oracle) {
    for (;;) {
      close_table(table_, oracle);
      if (oracle.stopped()) return;
      if (mode_ != Mode::Classic) break;
      auto ae = table_.find_inconsistency();
      if (!ae) break;
      table_.add_suffix(std::move(*ae));
    }
    candidate_ = build_candidate_with_access(table_);
  }

  Dfa hypothesis() const { return candidate_.dfa; }
  Nfa hypothesis_nfa() const { return candidate_.dfa.to_nfa(); }
  std::size_t size() const { return candidate_.dfa.num_states(); }

  template <class Oracle>
  void refine(const Word& w, Oracle& oracle) {
    switch (mode_) {
      case Mode::Classic:
        for (std::size_t i = 1; i <= w.size(); ++i)
          table_.add_prefix(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)));
        break;
      case Mode::AllSuffixes:
        for (std::size_t i = 0; i < w.size(); ++i)
          table_.add_suffix(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
        break;
      case Mode::RivestSchapire: {
        Word e = rs_analyze(w, candidate_, oracle);
        if (oracle.stopped()) return;
        if (!table_.add_suffix(std::move(e)))
          throw LearnerError("counterexample analysis produced a known suffix; "
                             "membership answers are inconsistent");
        break;
      }
    }
  }

 private:
  ObservationTable table_;
  Mode mode_;
  Candidate candidate_;
};

}  // namespace rmcl
