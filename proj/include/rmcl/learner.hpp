#pragma once

#include <optional>
#include <string_view>

#include "rmcl/learner/driver.hpp"
#include "rmcl/learner/exact_teacher.hpp"
#include "rmcl/learner/kearns_vazirani.hpp"
#include "rmcl/learner/lstar.hpp"
#include "rmcl/learner/nlstar.hpp"

namespace rmcl {

enum class Algorithm { LStar, LStarAllSuffixes, RivestSchapire, KearnsVazirani, NLStar };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::RivestSchapire, Algorithm::LStar,
                                               Algorithm::LStarAllSuffixes,
                                               Algorithm::KearnsVazirani, Algorithm::NLStar};

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::LStar: return "lstar";
    case Algorithm::LStarAllSuffixes: return "lstarc";
    case Algorithm::RivestSchapire: return "rs";
    case Algorithm::KearnsVazirani: return "kv";
    case Algorithm::NLStar: return "nlstar";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

// NL* is the only learner whose native hypothesis is nondeterministic.
inline bool learns_dfa(Algorithm a) { return a != Algorithm::NLStar; }

template <Teacher T>
LearnResult<typename T::payload_type> run_learner(Algorithm algorithm, T& teacher,
                                                  const Alphabet& alphabet,
                                                  const LearnerLimits& limits = {}) {
  switch (algorithm) {
    case Algorithm::LStar: {
      LStarLearner l(alphabet, LStarLearner::Mode::Classic);
      return drive_learner(l, teacher, limits);
    }
    case Algorithm::LStarAllSuffixes: {
      LStarLearner l(alphabet, LStarLearner::Mode::AllSuffixes);
      return drive_learner(l, teacher, limits);
    }
    case Algorithm::RivestSchapire: {
      LStarLearner l(alphabet, LStarLearner::Mode::RivestSchapire);
      return drive_learner(l, teacher, limits);
    }
    case Algorithm::KearnsVazirani: {
      KearnsVaziraniLearner l(alphabet);
      return drive_learner(l, teacher, limits);
    }
    case Algorithm::NLStar: {
      NLStarLearner l(alphabet);
      return drive_learner(l, teacher, limits);
    }
  }
  throw LearnerError("unknown learning algorithm");
}

}  // namespace rmcl
