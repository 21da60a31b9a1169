#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "commlab/word.hpp"

namespace commlab {

class Rng;

/// A bracket arrangement of weight t: a full binary bracketing of t arguments.
/// Leaves are numbered 1..t left to right by construction.
class BracketArrangement {
 public:
  static BracketArrangement leaf();
  static BracketArrangement node(const BracketArrangement& left, const BracketArrangement& right);

  int weight() const;
  bool is_leaf() const { return weight() == 1; }
  const BracketArrangement& left() const;
  const BracketArrangement& right() const;

  /// 1..weight in left-to-right order.
  std::vector<int> leaf_positions() const;
  /// e.g. "[[1,2],3]"; a leaf renders as "1".
  std::string to_string() const;

  friend bool operator==(const BracketArrangement& a, const BracketArrangement& b);

 private:
  struct Node;
  explicit BracketArrangement(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BracketArrangement::Node {
  int weight;
  std::vector<BracketArrangement> children;  // empty for a leaf, else {left, right}
};

inline int BracketArrangement::weight() const { return node_->weight; }

/// All arrangements of the given weight, ordered by left-subtree weight
/// (descending), then recursively by left then right subtree order.
/// Count is Catalan(weight - 1).
std::vector<BracketArrangement> enumerate_brackets(int weight);

/// Catalan(k). Exact for k <= 35.
std::uint64_t catalan(int k);

/// Uniformly random arrangement of the given weight.
BracketArrangement random_bracket(Rng& rng, int weight);

/// Evaluates an arrangement on any group: Leaf(i) -> args[i], Node(L, R) ->
/// comm(eval L, eval R).
template <class T, class Commutator>
T evaluate_bracket_with(const BracketArrangement& arr, std::span<const T> args, Commutator&& comm) {
  if (static_cast<std::size_t>(arr.weight()) != args.size())
    throw std::invalid_argument("bracket arity " + std::to_string(arr.weight()) +
                                " does not match " + std::to_string(args.size()) + " arguments");
  if (arr.is_leaf()) return args[0];
  const auto split = static_cast<std::size_t>(arr.left().weight());
  T lhs = evaluate_bracket_with(arr.left(), args.subspan(0, split), comm);
  T rhs = evaluate_bracket_with(arr.right(), args.subspan(split), comm);
  return comm(lhs, rhs);
}

Word evaluate_bracket(const BracketArrangement& arr, std::span<const Word> args);

/// [[[a1, a2], a3], ..., an]; a single argument is returned unchanged.
Word left_normed(std::span<const Word> args);

template <class T, class Commutator>
T left_normed_with(std::span<const T> args, Commutator&& comm) {
  if (args.empty()) throw std::invalid_argument("left-normed commutator of an empty tuple");
  T acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = comm(acc, args[i]);
  return acc;
}

}  // namespace commlab
