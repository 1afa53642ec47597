#include <gtest/gtest.h>

#include <random>

#include "support/models.hpp"
#include "support/oracle.hpp"

namespace rmcl {
namespace {

using testing::load_doc;
using testing::load_problem;
using testing::word;
using Rule = RmcTeacher::Rule;

std::set<std::string> language_of_length(const Dfa& d, std::size_t k) {
  std::set<std::string> out;
  for (const auto& w : oracle::words_of_length(d.alphabet().size(), k))
    if (d.accepts(w)) out.insert(d.alphabet().format(w));
  return out;
}

TEST(PostK, HermanSlices) {
  RmcTeacher teacher(load_problem("herman_ring"));
  EXPECT_TRUE(language_of_length(teacher.post_k(0), 0).empty());
  EXPECT_EQ(language_of_length(teacher.post_k(2), 2), (std::set<std::string>{"NT", "TN"}));
  EXPECT_EQ(teacher.post_cache().size(), 2u);
  EXPECT_FALSE(teacher.pending_stop());
}

TEST(PostK, UnreachableLengthIsEmpty) {
  // Token passing starts from T N*, which has no word of length 0.
  RmcTeacher teacher(load_problem("token_passing"));
  EXPECT_FALSE(shortest_word(teacher.post_k(0).to_nfa()));
}

TEST(Membership, HermanExamples) {
  const RmcProblem p = load_problem("herman_ring");
  RmcTeacher teacher(p);
  EXPECT_TRUE(teacher.membership(word(p.alphabet, "TN")));
  EXPECT_FALSE(teacher.membership(word(p.alphabet, "TT")));
  EXPECT_FALSE(teacher.membership(word(p.alphabet, "NNTTNN")));
  EXPECT_FALSE(teacher.membership(Word{}));
}

class BundledModel : public ::testing::TestWithParam<std::string> {};

TEST_P(BundledModel, MembershipMatchesExplicitSearch) {
  const ModelDoc doc = load_doc(GetParam());
  const oracle::ExplicitModel explicit_model(doc);
  RmcTeacher teacher(build_problem(doc));
  const Alphabet& a = teacher.problem().alphabet;
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto reach = explicit_model.reachable(k);
    for (const auto& w : oracle::words_of_length(a.size(), k))
      ASSERT_EQ(teacher.membership(w), reach.count(w) != 0) << GetParam() << ": " << a.format(w);
  }
}

TEST_P(BundledModel, PendingUnsafeMatchesExplicitSearch) {
  const ModelDoc doc = load_doc(GetParam());
  const oracle::ExplicitModel explicit_model(doc);
  RmcTeacher teacher(build_problem(doc));
  bool bad_reached = false;
  for (std::size_t k = 0; k <= 5; ++k) {
    for (const auto& w : explicit_model.reachable(k)) bad_reached = bad_reached || explicit_model.bad(w);
    teacher.post_k(k);
    ASSERT_EQ(teacher.pending_stop().has_value(), bad_reached) << GetParam() << " k=" << k;
  }
}

TEST_P(BundledModel, SoundVerdictWithEveryLearner) {
  const RmcProblem p = load_problem(GetParam());
  for (Algorithm algo : kAllAlgorithms) {
    const ProverResult r = run_prover(p, algo);
    if (auto* s = std::get_if<Safe>(&r.verdict)) {
      EXPECT_TRUE(check_invariant(p, s->invariant).holds()) << GetParam();
      EXPECT_EQ(minimize(s->invariant), s->invariant);
    } else if (auto* u = std::get_if<Unsafe>(&r.verdict)) {
      RmcTeacher fresh(p);
      EXPECT_TRUE(accepts(p.bad, u->witness));
      EXPECT_TRUE(fresh.membership(u->witness));
    } else {
      ADD_FAILURE() << GetParam() << " " << algorithm_name(algo) << ": "
                    << std::get<Unknown>(r.verdict).reason;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Models, BundledModel, ::testing::ValuesIn(testing::bundled_models()));

TEST(Equivalence, HermanOddTokensIsAccepted) {
  const RmcProblem p = load_problem("herman_ring");
  RmcTeacher teacher(p);
  auto reply = teacher.equivalence(testing::odd_tokens(p.alphabet));
  auto* stop = std::get_if<Stop<Verdict>>(&reply);
  ASSERT_TRUE(stop);
  EXPECT_TRUE(is_safe(stop->payload));
  EXPECT_EQ(teacher.rules_fired(), std::vector<Rule>{Rule::Accepted});
}

TEST(Equivalence, IsraeliJalfonEmptyCandidate) {
  const RmcProblem p = load_problem("israeli_jalfon");
  RmcTeacher teacher(p);
  auto reply = teacher.equivalence(empty_dfa(p.alphabet));
  auto* cex = std::get_if<Counterexample>(&reply);
  ASSERT_TRUE(cex);
  EXPECT_EQ(p.alphabet.format(cex->word), "TT");
  EXPECT_EQ(teacher.rules_fired(), std::vector<Rule>{Rule::InitNotIncluded});
}

TEST(Equivalence, IsraeliJalfonLengthAtLeastTwo) {
  const RmcProblem p = load_problem("israeli_jalfon");
  RmcTeacher teacher(p);
  const Dfa candidate = testing::minimal("(T + N) (T + N) (T + N)*", p.alphabet);
  auto reply = teacher.equivalence(candidate);
  auto* cex = std::get_if<Counterexample>(&reply);
  ASSERT_TRUE(cex);
  // Shortest bad configuration inside the candidate; it is unreachable, so
  // it is a negative counterexample. NNN is another such word, one longer.
  EXPECT_EQ(p.alphabet.format(cex->word), "NN");
  EXPECT_FALSE(teacher.membership(cex->word));
  EXPECT_FALSE(teacher.membership(word(p.alphabet, "NNN")));
  EXPECT_EQ(teacher.rules_fired(), std::vector<Rule>{Rule::HitsBad});
}

TEST(Equivalence, NonInductiveCandidate) {
  const RmcProblem p = load_problem("herman_linear");
  RmcTeacher teacher(p);
  // Contains I and avoids B but is not closed under T: TT -> NN leaves it.
  const Dfa candidate = testing::minimal("N* T N* (T N* T N*)* + T T", p.alphabet);
  auto reply = teacher.equivalence(candidate);
  auto* cex = std::get_if<Counterexample>(&reply);
  ASSERT_TRUE(cex);
  EXPECT_EQ(teacher.rules_fired(), std::vector<Rule>{Rule::NotInductive});
  // TT is unreachable, so the source itself is the (negative) counterexample.
  EXPECT_EQ(p.alphabet.format(cex->word), "TT");
  EXPECT_FALSE(teacher.membership(cex->word));
}

TEST(Equivalence, NonInductiveReachableSourceGivesTarget) {
  const RmcProblem p = load_problem("token_passing");
  RmcTeacher teacher(p);
  // Holds T and TN but not NT, the successor of the reachable TN.
  const Dfa candidate = testing::minimal("T N*", p.alphabet);
  auto reply = teacher.equivalence(candidate);
  auto* cex = std::get_if<Counterexample>(&reply);
  ASSERT_TRUE(cex);
  EXPECT_EQ(teacher.rules_fired(), std::vector<Rule>{Rule::NotInductive});
  EXPECT_EQ(p.alphabet.format(cex->word), "NT");
  EXPECT_TRUE(teacher.membership(cex->word));
}

TEST(Equivalence, ReachableBadStopsWithUnsafe) {
  const RmcProblem p = load_problem("herman_unsafe_demo");
  RmcTeacher teacher(p);
  auto reply = teacher.equivalence(universal_dfa(p.alphabet));
  auto* stop = std::get_if<Stop<Verdict>>(&reply);
  ASSERT_TRUE(stop);
  ASSERT_TRUE(is_unsafe(stop->payload));
  EXPECT_EQ(p.alphabet.format(std::get<Unsafe>(stop->payload).witness), "T");
}

TEST(Membership, PendingUnsafeIsRecorded) {
  const RmcProblem p = load_problem("herman_unsafe_demo");
  RmcTeacher teacher(p);
  EXPECT_TRUE(teacher.membership(word(p.alphabet, "T")));
  auto pending = teacher.pending_stop();
  ASSERT_TRUE(pending);
  EXPECT_EQ(p.alphabet.format(std::get<Unsafe>(*pending).witness), "T");
  // Later equivalence queries report it.
  auto reply = teacher.equivalence(empty_dfa(p.alphabet));
  EXPECT_TRUE(std::holds_alternative<Stop<Verdict>>(reply));
}

TEST(Teacher, TimeoutBecomesUnknown) {
  RmcTeacher teacher(load_problem("israeli_jalfon"), Deadline::after(std::chrono::milliseconds(0)));
  teacher.membership(Word{0, 0, 0});
  auto pending = teacher.pending_stop();
  ASSERT_TRUE(pending);
  EXPECT_EQ(std::get<Unknown>(*pending).reason, "timeout");
}

TEST(CheckInvariant, Diagnostics) {
  const RmcProblem herman = load_problem("herman_ring");
  EXPECT_TRUE(check_invariant(herman, testing::odd_tokens(herman.alphabet)).holds());

  auto all = check_invariant(herman, universal_dfa(herman.alphabet));
  EXPECT_EQ(all.violated, 2);
  EXPECT_TRUE(all.witness.empty());

  auto none = check_invariant(herman, empty_dfa(herman.alphabet));
  EXPECT_EQ(none.violated, 1);
  EXPECT_EQ(herman.alphabet.format(none.witness), "T");

  const Dfa tt = testing::minimal("N* T N* (T N* T N*)* + T T", herman.alphabet);
  auto step = check_invariant(load_problem("herman_linear"), tt);
  EXPECT_EQ(step.violated, 3);
  EXPECT_EQ(herman.alphabet.format(step.source), "TT");
  EXPECT_EQ(herman.alphabet.format(step.witness), "NN");
}

TEST(RunProver, PaperBenchmarks) {
  const RmcProblem herman = load_problem("herman_linear");
  auto h = run_prover(herman, Algorithm::RivestSchapire);
  ASSERT_TRUE(is_safe(h.verdict));
  EXPECT_EQ(std::get<Safe>(h.verdict).invariant.num_states(), 2u);
  EXPECT_EQ(std::get<Safe>(h.verdict).invariant.num_transitions(), 4u);

  const RmcProblem ij = load_problem("israeli_jalfon");
  auto r = run_prover(ij, Algorithm::RivestSchapire);
  ASSERT_TRUE(is_safe(r.verdict));
  const Dfa& inv = std::get<Safe>(r.verdict).invariant;
  EXPECT_EQ(inv.num_states(), 4u);
  EXPECT_EQ(inv.num_transitions(), 8u);
  EXPECT_EQ(r.stats.equivalence_queries, 3u);
  EXPECT_TRUE(check_invariant(ij, inv).holds());
  EXPECT_EQ(r.rules, (std::vector<Rule>{Rule::InitNotIncluded, Rule::HitsBad, Rule::Accepted}));
}

TEST(RunProver, TerminationBoundOnHerman) {
  for (const char* name : {"herman_linear", "herman_ring"})
    for (Algorithm algo : kAllAlgorithms) {
      if (!learns_dfa(algo)) continue;
      auto r = run_prover(load_problem(name), algo);
      ASSERT_TRUE(is_safe(r.verdict));
      EXPECT_LE(r.stats.equivalence_queries, 2u) << name << " " << algorithm_name(algo);
    }
}

TEST(RunProver, UnsafeDemo) {
  const RmcProblem p = load_problem("herman_unsafe_demo");
  for (Algorithm algo : kAllAlgorithms) {
    auto r = run_prover(p, algo);
    ASSERT_TRUE(is_unsafe(r.verdict)) << algorithm_name(algo);
    EXPECT_EQ(p.alphabet.format(std::get<Unsafe>(r.verdict).witness), "T");
  }
}

TEST(RunProver, LimitsGiveUnknown) {
  const RmcProblem p = load_problem("israeli_jalfon");
  Limits tight;
  tight.max_states = 1;
  auto r = run_prover(p, Algorithm::RivestSchapire, tight);
  ASSERT_TRUE(std::holds_alternative<Unknown>(r.verdict));
  EXPECT_EQ(std::get<Unknown>(r.verdict).reason, "state limit");

  Limits instant;
  instant.timeout = std::chrono::milliseconds(0);
  auto t = run_prover(p, Algorithm::KearnsVazirani, instant);
  ASSERT_TRUE(std::holds_alternative<Unknown>(t.verdict));
  EXPECT_EQ(std::get<Unknown>(t.verdict).reason, "timeout");
}

// Wraps the teacher and checks that each counterexample separates the
// hypothesis from the reachable set.
class AuditingTeacher {
 public:
  using payload_type = Verdict;
  explicit AuditingTeacher(const RmcProblem& p) : inner_(p), reference_(p) {}
  bool membership(const Word& w) { return inner_.membership(w); }
  std::optional<Verdict> pending_stop() { return inner_.pending_stop(); }
  EquivalenceReply<Verdict> equivalence(const Dfa& h) {
    auto reply = inner_.equivalence(h);
    if (auto* c = std::get_if<Counterexample>(&reply)) {
      ++checked;
      if (reference_.membership(c->word) == h.accepts(c->word)) ++misplaced;
    }
    return reply;
  }
  int checked = 0, misplaced = 0;

 private:
  RmcTeacher inner_, reference_;
};

TEST(Teacher, CounterexamplesLieInSymmetricDifference) {
  for (const auto& name : testing::bundled_models())
    for (Algorithm algo : kAllAlgorithms) {
      const RmcProblem p = load_problem(name);
      AuditingTeacher teacher(p);
      run_learner(algo, teacher, p.alphabet);
      EXPECT_EQ(teacher.misplaced, 0) << name << " " << algorithm_name(algo);
    }
}

// ---------------------------------------------------------------------------
// Randomized small models, compared against explicit-state search.

Regex random_pair_regex(std::mt19937& rng, const Alphabet& a, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
  std::uniform_int_distribution<std::size_t> sym(0, a.size() - 1);
  switch (pick(rng)) {
    case 0: return Regex::pair(a.names()[sym(rng)], a.names()[sym(rng)]);
    case 1:
    case 2:
      return Regex::concat({random_pair_regex(rng, a, depth - 1), random_pair_regex(rng, a, depth - 1)});
    case 3:
      return Regex::alt({random_pair_regex(rng, a, depth - 1), random_pair_regex(rng, a, depth - 1)});
    default: return Regex::star(random_pair_regex(rng, a, depth - 1));
  }
}

TEST(RunProver, RandomModelsAgreeWithExplicitSearch) {
  std::mt19937 rng(99);
  const Alphabet a{"a", "b"};
  int safe = 0, unsafe = 0;
  for (int round = 0; round < 40; ++round) {
    ModelDoc doc;
    doc.alphabet = a.names();
    doc.init = oracle::random_regex(rng, a, 3);
    doc.trans = {random_pair_regex(rng, a, 3), random_pair_regex(rng, a, 2)};
    doc.bad = oracle::random_regex(rng, a, 3);
    const RmcProblem p = build_problem(doc);
    const oracle::ExplicitModel explicit_model(doc);

    std::optional<Word> first_bad;  // shortest-lex reachable bad word up to length 5
    for (std::size_t k = 0; k <= 5 && !first_bad; ++k) {
      const auto reach = explicit_model.reachable(k);
      for (const auto& w : reach)
        if (explicit_model.bad(w)) {
          first_bad = w;
          break;
        }
    }

    Limits limits;
    limits.timeout = std::chrono::seconds(5);
    for (Algorithm algo : {Algorithm::RivestSchapire, Algorithm::KearnsVazirani}) {
      const ProverResult r = run_prover(p, algo, limits);
      if (auto* s = std::get_if<Safe>(&r.verdict)) {
        ++safe;
        EXPECT_FALSE(first_bad) << "round " << round << ": bad word " << a.format(*first_bad);
        EXPECT_TRUE(check_invariant(p, s->invariant).holds());
      } else if (auto* u = std::get_if<Unsafe>(&r.verdict)) {
        ++unsafe;
        EXPECT_TRUE(accepts(p.bad, u->witness));
        if (u->witness.size() <= 5) {
          EXPECT_TRUE(explicit_model.reachable(u->witness.size()).count(u->witness));
        }
      }
    }
  }
  EXPECT_GT(safe, 0);
  EXPECT_GT(unsafe, 0);
}

}  // namespace
}  // namespace rmcl
