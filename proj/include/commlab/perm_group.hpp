#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "commlab/permutation.hpp"

namespace commlab {

/// Membership bitset over the element indices of one PermGroup.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;
/// Membership bitset over the conjugacy classes of one PermGroup.
using ClassSet = boost::dynamic_bitset<std::uint64_t>;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite permutation group with its full element list materialized.
/// Element 0 is the identity. Immutable after construction.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  /// Closure of the generators; throws CapExceeded past `cap` elements.
  static std::shared_ptr<const PermGroup> closure(std::vector<Permutation> generators, int degree,
                                                  std::size_t cap = kDefaultCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }

  std::optional<std::uint32_t> find(const Permutation& p) const;
  std::uint32_t index_of(const Permutation& p) const;

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;

  std::size_t class_count() const { return class_members_.size(); }
  std::uint32_t class_of(std::uint32_t element) const { return class_of_[element]; }
  const std::vector<std::uint32_t>& class_members(std::uint32_t c) const { return class_members_[c]; }

  ElementSet empty_set() const { return ElementSet(order()); }
  ClassSet empty_classes() const { return ClassSet(class_count()); }
  /// Classes meeting the given element set.
  ClassSet classes_of(const ElementSet& set) const;
  /// Union of the given classes.
  ElementSet elements_of(const ClassSet& classes) const;

  /// Subgroup generated by the seeds.
  ElementSet generate(const ElementSet& seeds) const;

 private:
  PermGroup() = default;
  void build_inverses();
  void build_classes();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> class_members_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// Indices of the set bits, ascending.
std::vector<std::uint32_t> members(const ElementSet& set);

}  // namespace commlab
