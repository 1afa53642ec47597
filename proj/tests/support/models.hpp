#pragma once

#include <string>

#include "rmcl/rmcl.hpp"

namespace rmcl::testing {

inline std::string model_path(const std::string& name) {
  return std::string(RMCL_MODELS_DIR) + "/" + name + ".rmc";
}

inline ModelDoc load_doc(const std::string& name) {
  return parse_model_doc(read_text_file(model_path(name)));
}

inline RmcProblem load_problem(const std::string& name) { return build_problem(load_doc(name)); }

inline const std::vector<std::string>& bundled_models() {
  static const std::vector<std::string> names{"herman_linear",  "herman_ring",   "israeli_jalfon",
                                              "token_ring",     "token_passing", "herman_unsafe_demo"};
  return names;
}

inline Alphabet tn() { return Alphabet{"T", "N"}; }

inline Word word(const Alphabet& a, const std::string& text) { return a.parse_word(text); }

// Herman's invariant: an odd number of T.
inline Dfa odd_tokens(const Alphabet& a) {
  Dfa d(a, 2);
  const Symbol t = a.at("T"), n = a.at("N");
  d.set_transition(0, n, 0);
  d.set_transition(0, t, 1);
  d.set_transition(1, n, 1);
  d.set_transition(1, t, 0);
  d.set_final(1);
  return d;
}

inline Nfa compile(const std::string& regex, const Alphabet& a) {
  return compile_regex(parse_regex(regex, a), a);
}

inline Dfa minimal(const std::string& regex, const Alphabet& a) {
  return minimize(determinize(compile(regex, a)));
}

}  // namespace rmcl::testing
