#pragma once

#include <vector>

#include "rmcl/learner/driver.hpp"

namespace rmcl {

// Binary tree whose inner nodes hold distinguishing suffixes and whose
// leaves hold access words. A word is sifted from the root by asking, at each
// inner node with suffix d, whether word.d is a member: yes goes right.
class ClassificationTree {
 public:
  struct Node {
    bool leaf = true;
    Word label;  // access word (leaf) or discriminator (inner node)
    int parent = -1;
    int child[2] = {-1, -1};
    int state = -1;  // hypothesis state of a leaf
  };

  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<int>& leaves() const { return leaves_; }

  // Tree for two access words separated by lambda.
  void init(Word rejected, Word accepted) {
    nodes_.clear();
    leaves_.clear();
    nodes_.push_back(Node{false, Word{}, -1, {-1, -1}, -1});
    nodes_[0].child[0] = new_leaf(std::move(rejected), 0);
    nodes_[0].child[1] = new_leaf(std::move(accepted), 0);
  }

  template <class Oracle>
  int sift(const Word& w, Oracle& oracle) const {
    int n = 0;
    while (!nodes_[n].leaf) n = nodes_[n].child[oracle(concat(w, nodes_[n].label)) ? 1 : 0];
    return n;
  }

  int lowest_common_ancestor(int a, int b) const {
    std::vector<int> path;
    for (int n = a; n != -1; n = nodes_[n].parent) path.push_back(n);
    for (int n = b; n != -1; n = nodes_[n].parent)
      if (std::find(path.begin(), path.end(), n) != path.end()) return n;
    return 0;
  }

  // Turns leaf into an inner node with the given discriminator; the old
  // access word and new_access become its children.
  void split(int leaf, Word discriminator, Word new_access, bool old_side, bool new_side) {
    if (old_side == new_side) throw LearnerError("discriminator does not separate the access words");
    Word old_access = nodes_[leaf].label;
    const int old_state = nodes_[leaf].state;
    nodes_[leaf].leaf = false;
    nodes_[leaf].label = std::move(discriminator);
    nodes_[leaf].state = -1;
    int a = new_leaf(std::move(old_access), leaf, old_state);
    int b = new_leaf(std::move(new_access), leaf);
    nodes_[leaf].child[old_side ? 1 : 0] = a;
    nodes_[leaf].child[new_side ? 1 : 0] = b;
  }

 private:
  int new_leaf(Word access, int parent, int state = -1) {
    Node n;
    n.label = std::move(access);
    n.parent = parent;
    if (state < 0) {
      state = static_cast<int>(leaves_.size());
      leaves_.push_back(static_cast<int>(nodes_.size()));
    } else {
      leaves_[static_cast<std::size_t>(state)] = static_cast<int>(nodes_.size());
    }
    n.state = state;
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
  std::vector<int> leaves_;  // node index per hypothesis state
};

// Kearns-Vazirani learner. Before the first counterexample the hypothesis is
// the one-state automaton answering Mem(lambda) everywhere; the first
// counterexample w seeds the tree with leaves lambda and w under root lambda.
class KearnsVaziraniLearner {
 public:
  explicit KearnsVaziraniLearner(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const ClassificationTree& tree() const { return tree_; }

  template <class Oracle>
  void prepare(Oracle& oracle) {
    if (tree_.empty()) {
      const bool accept = oracle(Word{});
      hypothesis_ = Dfa(alphabet_, 1);
      hypothesis_.set_final(0, accept);
      for (Symbol a = 0; a < alphabet_.size(); ++a) hypothesis_.set_transition(0, a, 0);
      access_ = {Word{}};
      return;
    }
    const auto& leaves = tree_.leaves();
    Dfa h(alphabet_, leaves.size());
    access_.assign(leaves.size(), Word{});
    for (std::size_t q = 0; q < leaves.size(); ++q) access_[q] = tree_.nodes()[leaves[q]].label;
    for (State q = 0; q < leaves.size(); ++q) {
      h.set_final(q, oracle(access_[q]));
      for (Symbol a = 0; a < alphabet_.size(); ++a) {
        int target = tree_.sift(append(access_[q], a), oracle);
        h.set_transition(q, a, static_cast<State>(tree_.nodes()[target].state));
      }
      if (oracle.stopped()) return;
    }
    h.set_initial(static_cast<State>(tree_.nodes()[tree_.sift(Word{}, oracle)].state));
    hypothesis_ = std::move(h);
  }

  Dfa hypothesis() const { return hypothesis_; }
  Nfa hypothesis_nfa() const { return hypothesis_.to_nfa(); }
  std::size_t size() const { return hypothesis_.num_states(); }

  template <class Oracle>
  void refine(const Word& w, Oracle& oracle) {
    if (tree_.empty()) {
      if (oracle(w)) tree_.init(Word{}, w);
      else tree_.init(w, Word{});
      return;
    }
    // Smallest i where the hypothesis state after w[0..i) disagrees with
    // the sifted leaf; split the leaf reached after w[0..i-1).
    State prev = hypothesis_.initial();
    for (std::size_t i = 1; i <= w.size(); ++i) {
      Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      State predicted = hypothesis_.next(prev, w[i - 1]);
      int sifted = tree_.sift(prefix, oracle);
      if (oracle.stopped()) return;
      int predicted_leaf = tree_.leaves()[predicted];
      if (sifted != predicted_leaf) {
        int lca = tree_.lowest_common_ancestor(sifted, predicted_leaf);
        Word discriminator = concat(Word{w[i - 1]}, tree_.nodes()[lca].label);
        Word new_access(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i - 1));
        int leaf = tree_.leaves()[prev];
        const Word& old_access = tree_.nodes()[leaf].label;
        bool old_side = oracle(concat(old_access, discriminator));
        bool new_side = oracle(concat(new_access, discriminator));
        if (oracle.stopped()) return;
        tree_.split(leaf, std::move(discriminator), std::move(new_access), old_side, new_side);
        return;
      }
      prev = predicted;
    }
    throw LearnerError("counterexample is consistent with the classification tree");
  }

 private:
  Alphabet alphabet_;
  ClassificationTree tree_;
  Dfa hypothesis_;
  std::vector<Word> access_;
};

}  // namespace rmcl
