#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rmcl/rmcl.hpp"

namespace rmcl::cli {

enum ExitCode : int { kSafe = 0, kUnsafe = 1, kUnknown = 2, kInputError = 3 };

struct CheckOptions {
  std::string model_path;
  Algorithm learner = Algorithm::RivestSchapire;
  double timeout_seconds = 60;
  std::size_t max_states = 10'000;
  std::string emit_invariant;  // DOT output path, empty for none
  bool stats = false;
  bool timing = false;
};

// One line of the bench table; also what `check --stats` reports.
struct RunReport {
  std::string model;
  Algorithm learner = Algorithm::RivestSchapire;
  std::string verdict;  // SAFE, UNSAFE or UNKNOWN
  std::size_t states = 0, transitions = 0;
  std::string witness;
  LearnerStats stats;
  long long ms = 0;
};

inline Limits limits_for(double timeout_seconds, std::size_t max_states) {
  Limits l;
  l.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000));
  l.max_states = max_states;
  return l;
}

inline RunReport make_report(std::string model, Algorithm learner, const RmcProblem& p,
                             const ProverResult& r) {
  RunReport rep;
  rep.model = std::move(model);
  rep.learner = learner;
  rep.stats = r.stats;
  rep.ms = r.elapsed.count();
  if (auto* s = std::get_if<Safe>(&r.verdict)) {
    rep.verdict = "SAFE";
    rep.states = s->invariant.num_states();
    rep.transitions = s->invariant.num_transitions();
  } else if (auto* u = std::get_if<Unsafe>(&r.verdict)) {
    rep.verdict = "UNSAFE";
    rep.witness = p.alphabet.format(u->witness);
  } else {
    rep.verdict = "UNKNOWN";
    rep.witness = std::get<Unknown>(r.verdict).reason;
  }
  return rep;
}

inline int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  RmcProblem problem;
  try {
    problem = parse_model(read_text_file(opt.model_path));
  } catch (const Error& e) {
    err << opt.model_path << ": " << e.what() << '\n';
    return kInputError;
  }

  const ProverResult result =
      run_prover(problem, opt.learner, limits_for(opt.timeout_seconds, opt.max_states));
  const RunReport rep = make_report(opt.model_path, opt.learner, problem, result);

  out << rep.verdict << '\n';
  int code = kUnknown;
  if (auto* s = std::get_if<Safe>(&result.verdict)) {
    out << "invariant: " << rep.states << " states, " << rep.transitions << " transitions\n";
    if (!opt.emit_invariant.empty()) {
      std::ofstream dot(opt.emit_invariant);
      if (!dot) {
        err << "cannot write '" << opt.emit_invariant << "'\n";
        return kInputError;
      }
      dot << export_dot(s->invariant, "invariant");
    }
    code = kSafe;
  } else if (std::holds_alternative<Unsafe>(result.verdict)) {
    out << "witness: " << rep.witness << '\n';
    code = kUnsafe;
  } else {
    out << "reason: " << rep.witness << '\n';
  }

  if (opt.stats) {
    out << "learner: " << algorithm_name(opt.learner) << '\n';
    out << "membership queries: " << rep.stats.membership_queries << '\n';
    out << "equivalence queries: " << rep.stats.equivalence_queries << '\n';
    out << "counterexamples:";
    for (const auto& w : rep.stats.counterexamples) out << ' ' << problem.alphabet.format(w);
    out << '\n';
  }
  if (opt.timing) out << "time: " << rep.ms << " ms\n";
  return code;
}

struct LearnOptions {
  std::string target;
  std::string alphabet;  // blank-separated symbol names
  Algorithm learner = Algorithm::RivestSchapire;
};

// Learns the target language with an exact teacher and prints the learned
// minimal DFA. The result is checked against the target before printing.
inline int cmd_learn(const LearnOptions& opt, std::ostream& out, std::ostream& err) {
  Dfa target;
  Alphabet alphabet;
  try {
    std::istringstream names(opt.alphabet);
    std::vector<std::string> symbols;
    for (std::string s; names >> s;) symbols.push_back(s);
    alphabet = Alphabet(symbols);
    target = minimize(determinize(compile_regex(parse_regex(opt.target, alphabet), alphabet)));
  } catch (const Error& e) {
    err << "invalid target: " << e.what() << '\n';
    return kInputError;
  }

  ExactTeacher teacher(target);
  auto result = run_learner(opt.learner, teacher, alphabet);
  const Dfa learned = minimize(result.hypothesis_dfa);
  if (result.outcome != LearnOutcome::Equal || !equivalent(learned, target)) {
    err << "learning did not converge to the target\n";
    return kUnknown;
  }
  out << "learner: " << algorithm_name(opt.learner) << '\n';
  out << "states: " << learned.num_states() << ", transitions: " << learned.num_transitions()
      << '\n';
  if (!learns_dfa(opt.learner))
    out << "rfsa states: " << result.hypothesis.num_states() - 1 << '\n';
  out << "membership queries: " << result.stats.membership_queries << '\n';
  out << "equivalence queries: " << result.stats.equivalence_queries << '\n';
  out << export_dot(learned, "learned");
  return 0;
}

struct BenchOptions {
  std::string dir = "models";
  std::vector<Algorithm> learners{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
  double timeout_seconds = 60;
  std::size_t max_states = 10'000;
  std::string csv_path;  // empty: CSV goes to stdout after the table
};

inline const char* kCsvHeader = "model,learner,verdict,states,transitions,mem_q,equ_q,ms";

inline std::vector<RunReport> run_bench(const BenchOptions& opt) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".rmc") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<RunReport> rows;
  for (const auto& file : files) {
    const std::string model = file.stem().string();
    RmcProblem problem;
    bool parsed = true;
    try {
      problem = parse_model(read_text_file(file.string()));
    } catch (const Error& e) {
      parsed = false;
      for (Algorithm a : opt.learners) {
        RunReport r;
        r.model = model;
        r.learner = a;
        r.verdict = "UNKNOWN";
        r.witness = e.what();
        rows.push_back(r);
      }
    }
    if (!parsed) continue;
    for (Algorithm a : opt.learners) {
      try {
        auto result = run_prover(problem, a, limits_for(opt.timeout_seconds, opt.max_states));
        rows.push_back(make_report(model, a, problem, result));
      } catch (const std::exception& e) {
        RunReport r;
        r.model = model;
        r.learner = a;
        r.verdict = "UNKNOWN";
        r.witness = e.what();
        rows.push_back(r);
      }
    }
  }
  return rows;
}

inline void write_csv(const std::vector<RunReport>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.model << ',' << algorithm_name(r.learner) << ',' << r.verdict << ',' << r.states
        << ',' << r.transitions << ',' << r.stats.membership_queries << ','
        << r.stats.equivalence_queries << ',' << r.ms << '\n';
}

inline void write_table(const std::vector<RunReport>& rows, std::ostream& out) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.model.size());
  out << std::left << std::setw(static_cast<int>(width)) << "model" << "  " << std::setw(7)
      << "learner" << "  " << std::setw(7) << "verdict" << std::right << std::setw(8) << "states"
      << std::setw(7) << "trans" << std::setw(8) << "mem_q" << std::setw(7) << "equ_q"
      << std::setw(8) << "ms" << '\n';
  for (const auto& r : rows)
    out << std::left << std::setw(static_cast<int>(width)) << r.model << "  " << std::setw(7)
        << algorithm_name(r.learner) << "  " << std::setw(7) << r.verdict << std::right
        << std::setw(8) << r.states << std::setw(7) << r.transitions << std::setw(8)
        << r.stats.membership_queries << std::setw(7) << r.stats.equivalence_queries
        << std::setw(8) << r.ms << '\n';
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(opt.dir)) {
    err << "not a directory: " << opt.dir << '\n';
    return kInputError;
  }
  const auto rows = run_bench(opt);
  write_table(rows, out);
  if (opt.csv_path.empty()) {
    out << '\n';
    write_csv(rows, out);
  } else {
    std::ofstream csv(opt.csv_path);
    if (!csv) {
      err << "cannot write '" << opt.csv_path << "'\n";
      return kInputError;
    }
    write_csv(rows, csv);
  }
  return 0;
}

}  // namespace rmcl::cli
