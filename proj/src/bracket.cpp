#include "commlab/bracket.hpp"

#include "commlab/random.hpp"

namespace commlab {

BracketArrangement BracketArrangement::leaf() {
  static const auto shared = std::make_shared<const Node>(Node{1, {}});
  return BracketArrangement(shared);
}

BracketArrangement BracketArrangement::node(const BracketArrangement& left,
                                            const BracketArrangement& right) {
  return BracketArrangement(
      std::make_shared<const Node>(Node{left.weight() + right.weight(), {left, right}}));
}

const BracketArrangement& BracketArrangement::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no left subtree");
  return node_->children[0];
}

const BracketArrangement& BracketArrangement::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no right subtree");
  return node_->children[1];
}

std::vector<int> BracketArrangement::leaf_positions() const {
  std::vector<int> out;
  // Positions are implicit offsets; walk the tree to make them explicit.
  auto walk = [&out](const BracketArrangement& a, int offset, auto&& self) -> void {
    if (a.is_leaf()) {
      out.push_back(offset + 1);
      return;
    }
    self(a.left(), offset, self);
    self(a.right(), offset + a.left().weight(), self);
  };
  walk(*this, 0, walk);
  return out;
}

std::string BracketArrangement::to_string() const {
  auto render = [](const BracketArrangement& a, int offset, auto&& self) -> std::string {
    if (a.is_leaf()) return std::to_string(offset + 1);
    return "[" + self(a.left(), offset, self) + "," +
           self(a.right(), offset + a.left().weight(), self) + "]";
  };
  return render(*this, 0, render);
}

bool operator==(const BracketArrangement& a, const BracketArrangement& b) {
  if (a.node_ == b.node_) return true;
  if (a.weight() != b.weight() || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::vector<BracketArrangement> enumerate_brackets(int weight) {
  if (weight < 1) throw std::invalid_argument("bracket weight must be >= 1");
  std::vector<std::vector<BracketArrangement>> table(static_cast<std::size_t>(weight) + 1);
  table[1] = {BracketArrangement::leaf()};
  for (int w = 2; w <= weight; ++w) {
    auto& row = table[static_cast<std::size_t>(w)];
    for (int lw = w - 1; lw >= 1; --lw)
      for (const auto& l : table[static_cast<std::size_t>(lw)])
        for (const auto& r : table[static_cast<std::size_t>(w - lw)])
          row.push_back(BracketArrangement::node(l, r));
  }
  return table[static_cast<std::size_t>(weight)];
}

std::uint64_t catalan(int k) {
  if (k < 0 || k > 35) throw std::invalid_argument("catalan index out of exact range");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= k; ++n)
    for (int i = 0; i < n; ++i)
      c[static_cast<std::size_t>(n)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - 1 - i)];
  return c[static_cast<std::size_t>(k)];
}

BracketArrangement random_bracket(Rng& rng, int weight) {
  if (weight < 1) throw std::invalid_argument("bracket weight must be >= 1");
  if (weight == 1) return BracketArrangement::leaf();
  // Left weight lw is chosen with probability C(lw-1) C(weight-lw-1) / C(weight-1).
  std::uint64_t pick = rng.below(catalan(weight - 1));
  for (int lw = weight - 1; lw >= 1; --lw) {
    const std::uint64_t block = catalan(lw - 1) * catalan(weight - lw - 1);
    if (pick < block) {
      auto l = random_bracket(rng, lw);
      auto r = random_bracket(rng, weight - lw);
      return BracketArrangement::node(l, r);
    }
    pick -= block;
  }
  throw std::logic_error("random_bracket: catalan split out of range");
}

Word evaluate_bracket(const BracketArrangement& arr, std::span<const Word> args) {
  return evaluate_bracket_with(arr, args, [](const Word& a, const Word& b) { return commutator(a, b); });
}

Word left_normed(std::span<const Word> args) {
  return left_normed_with(args, [](const Word& a, const Word& b) { return commutator(a, b); });
}

}  // namespace commlab
