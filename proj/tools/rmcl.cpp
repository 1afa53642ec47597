// Command-line driver: check models, learn regular languages, run benchmarks.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

std::map<std::string, rmcl::Algorithm> learner_map() {
  std::map<std::string, rmcl::Algorithm> m;
  for (auto a : rmcl::kAllAlgorithms) m.emplace(std::string(rmcl::algorithm_name(a)), a);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rmcl::cli;
  CLI::App app{"Safety prover for regular model checking based on automata learning"};
  app.require_subcommand(1);
  const auto learners = learner_map();

  CheckOptions check;
  bool deterministic = false;
  auto* check_cmd = app.add_subcommand("check", "Prove or refute safety of a model");
  check_cmd->add_option("model", check.model_path, "Model file (.rmc)")->required();
  check_cmd->add_option("--learner", check.learner, "rs, lstar, lstarc, kv or nlstar")
      ->transform(CLI::CheckedTransformer(learners, CLI::ignore_case));
  check_cmd->add_option("--timeout", check.timeout_seconds, "Time budget in seconds")
      ->capture_default_str();
  check_cmd->add_option("--max-states", check.max_states, "Hypothesis size limit")
      ->capture_default_str();
  check_cmd->add_option("--emit-invariant", check.emit_invariant,
                        "Write the invariant as GraphViz DOT");
  check_cmd->add_flag("--stats", check.stats, "Print query statistics");
  check_cmd->add_flag("--timing", check.timing, "Print wall-clock time");
  check_cmd->add_flag("--seedless-deterministic", deterministic,
                      "Accepted for compatibility; runs are always deterministic");

  LearnOptions learn;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a regular language from an exact teacher");
  learn_cmd->add_option("target", learn.target, "Target regex, e.g. \"(T + N)* T\"")->required();
  learn_cmd->add_option("--alphabet", learn.alphabet, "Blank-separated symbols")->required();
  learn_cmd->add_option("--learner", learn.learner, "rs, lstar, lstarc, kv or nlstar")
      ->transform(CLI::CheckedTransformer(learners, CLI::ignore_case));

  BenchOptions bench;
  std::vector<rmcl::Algorithm> bench_learners;
  auto* bench_cmd = app.add_subcommand("bench", "Run every model in a directory with each learner");
  bench_cmd->add_option("--dir", bench.dir, "Model directory")->capture_default_str();
  bench_cmd->add_option("--learner", bench_learners, "Restrict to these learners")
      ->transform(CLI::CheckedTransformer(learners, CLI::ignore_case));
  bench_cmd->add_option("--timeout", bench.timeout_seconds, "Per-run time budget in seconds")
      ->capture_default_str();
  bench_cmd->add_option("--max-states", bench.max_states, "Hypothesis size limit")
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
  if (*learn_cmd) return cmd_learn(learn, std::cout, std::cerr);
  if (!bench_learners.empty()) bench.learners = bench_learners;
  return cmd_bench(bench, std::cout, std::cerr);
}
