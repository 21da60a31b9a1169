#include "commlab/perm_group.hpp"

#include <deque>

namespace commlab {

GroupPtr PermGroup::closure(std::vector<Permutation> generators, int degree, std::size_t cap) {
  std::shared_ptr<PermGroup> g(new PermGroup());
  g->degree_ = degree;
  for (const auto& p : generators)
    if (p.degree() != degree) throw std::invalid_argument("generator degree differs from group degree");
  g->generators_ = std::move(generators);

  g->elements_.push_back(Permutation(degree));
  g->index_.emplace(g->elements_[0].key(), 0);
  for (std::size_t head = 0; head < g->elements_.size(); ++head) {
    for (const auto& gen : g->generators_) {
      Permutation next = g->elements_[head] * gen;
      if (g->index_.contains(next.key())) continue;
      if (g->elements_.size() >= cap)
        throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
      g->index_.emplace(next.key(), static_cast<std::uint32_t>(g->elements_.size()));
      g->elements_.push_back(next);
    }
  }
  g->build_inverses();
  g->build_classes();
  return g;
}

void PermGroup::build_inverses() {
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(elements_[i].inverse());
}

void PermGroup::build_classes() {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  class_of_.assign(elements_.size(), kUnset);
  std::vector<Permutation> gen_inv;
  for (const auto& g : generators_) gen_inv.push_back(g.inverse());
  for (std::uint32_t start = 0; start < elements_.size(); ++start) {
    if (class_of_[start] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(class_members_.size());
    class_members_.emplace_back();
    auto& orbit = class_members_.back();
    class_of_[start] = cls;
    orbit.push_back(start);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Permutation& x = elements_[orbit[head]];
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const std::uint32_t y = index_of(gen_inv[k] * x * generators_[k]);
        if (class_of_[y] == kUnset) {
          class_of_[y] = cls;
          orbit.push_back(y);
        }
      }
    }
  }
}

std::optional<std::uint32_t> PermGroup::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw std::invalid_argument("permutation " + p.to_cycle_string() + " is not in the group");
  return *idx;
}

std::uint32_t PermGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  return index_.at((elements_[a] * elements_[b]).key());
}

std::uint32_t PermGroup::commutator(std::uint32_t a, std::uint32_t b) const {
  return index_.at(commlab::commutator(elements_[a], elements_[b]).key());
}

ClassSet PermGroup::classes_of(const ElementSet& set) const {
  ClassSet out = empty_classes();
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.set(class_of_[i]);
  return out;
}

ElementSet PermGroup::elements_of(const ClassSet& classes) const {
  ElementSet out = empty_set();
  for (auto c = classes.find_first(); c != ClassSet::npos; c = classes.find_next(c))
    for (auto e : class_members_[c]) out.set(e);
  return out;
}

ElementSet PermGroup::generate(const ElementSet& seeds) const {
  ElementSet in = empty_set();
  in.set(0);
  std::vector<std::uint32_t> list{0};
  std::vector<std::uint32_t> gens;
  for (auto s = seeds.find_first(); s != ElementSet::npos; s = seeds.find_next(s)) {
    if (in.test(s)) continue;
    // The current set is a subgroup; extend it by s and re-close.
    gens.push_back(static_cast<std::uint32_t>(s));
    const std::size_t old_size = list.size();
    for (std::size_t k = 0; k < old_size; ++k) {
      const std::uint32_t x = multiply(list[k], static_cast<std::uint32_t>(s));
      if (!in.test(x)) {
        in.set(x);
        list.push_back(x);
      }
    }
    for (std::size_t head = old_size; head < list.size(); ++head) {
      for (auto g : gens) {
        const std::uint32_t x = multiply(list[head], g);
        if (!in.test(x)) {
          in.set(x);
          list.push_back(x);
        }
      }
    }
  }
  return in;
}

std::vector<std::uint32_t> members(const ElementSet& set) {
  std::vector<std::uint32_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace commlab
