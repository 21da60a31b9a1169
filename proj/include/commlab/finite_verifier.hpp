#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commlab/kernels.hpp"
#include "commlab/perm_group.hpp"

namespace commlab {

/// A normal subgroup of a PermGroup, stored as its element set.
class NormalSubgroup {
 public:
  /// The set must be a normal subgroup; see is_normal_subgroup for a check.
  NormalSubgroup(GroupPtr parent, ElementSet members);

  static NormalSubgroup trivial(GroupPtr parent);
  static NormalSubgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const PermGroup& group() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(std::uint32_t element) const { return members_.test(element); }
  bool is_subgroup_of(const NormalSubgroup& other) const { return members_.is_subset_of(other.members_); }
  ClassSet classes() const { return parent_->classes_of(members_); }

  friend bool operator==(const NormalSubgroup& a, const NormalSubgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::size_t order_;
};

/// Direct scan: identity present, closed under products and inverses, and
/// stable under conjugation by every element.
bool is_normal_subgroup(const PermGroup& group, const ElementSet& set);

NormalSubgroup normal_closure(const GroupPtr& group, std::span<const Permutation> seeds);
/// Normal subgroup generated by a conjugation-closed class set.
NormalSubgroup generated_normal(const GroupPtr& group, const ClassSet& classes);

NormalSubgroup commutator_subgroup(const NormalSubgroup& a, const NormalSubgroup& b,
                                   Execution exec = Execution::parallel);
NormalSubgroup product(const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup product(std::span<const NormalSubgroup> factors);
NormalSubgroup intersection(const NormalSubgroup& a, const NormalSubgroup& b);
NormalSubgroup intersection(std::span<const NormalSubgroup> factors);

/// Classes of the values [[[g1, g2], g3], ..., gn] with g_k in R_order[k]
/// (0-based indices into subgroups).
ClassSet left_normed_values(std::span<const NormalSubgroup> subgroups, std::span<const int> order,
                            Execution exec = Execution::parallel);

/// Product over all orderings of the left-iterated commutator subgroups.
/// One subgroup returns it unchanged.
NormalSubgroup symmetric_commutator(std::span<const NormalSubgroup> subgroups,
                                    Execution exec = Execution::parallel);
/// Same product restricted to orderings that start with the first subgroup.
NormalSubgroup symmetric_commutator_fix_first(std::span<const NormalSubgroup> subgroups,
                                              Execution exec = Execution::parallel);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fat enumeration budget: COMMLAB_BUDGET if set, else 10^7 evaluations.
std::uint64_t default_fat_budget();

struct FatResult {
  NormalSubgroup subgroup;
  /// The subgroup did not grow between weight_cap - 1 and weight_cap.
  bool stabilized;
  int weight_cap;
  /// Order of the subgroup generated by all values of weight n..t, t = n..weight_cap.
  std::vector<std::size_t> order_by_weight;
  std::uint64_t evaluations;
};

/// Subgroup generated by every bracket-arrangement value
/// beta^t(g_{i1}, ..., g_{it}) with g_{is} in R_{is}, indices covering
/// 1..n and n <= t <= weight_cap. Exact: value sets are propagated for
/// every (weight, covered-index-set) pair.
FatResult fat_commutator(std::span<const NormalSubgroup> subgroups, int weight_cap,
                         std::uint64_t budget = default_fat_budget(),
                         Execution exec = Execution::parallel);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct IdentityReport {
  std::string check;
  Verdict verdict = Verdict::fail;
  /// Named element-set sizes of both sides.
  std::vector<std::pair<std::string, std::size_t>> cardinalities;
  bool stabilized = true;
  std::uint64_t evaluations = 0;
  std::string note;
};

/// Fat commutator subgroup equals the symmetric commutator subgroup.
/// Inconclusive if the fat side did not stabilize or ran out of budget.
IdentityReport verify_fat_equals_symmetric(std::span<const NormalSubgroup> subgroups,
                                           int weight_cap,
                                           std::uint64_t budget = default_fat_budget(),
                                           Execution exec = Execution::parallel);

/// Symmetric commutator subgroup equals the product over orderings that
/// start with R_1.
IdentityReport verify_symmetric_fix_first(std::span<const NormalSubgroup> subgroups,
                                          Execution exec = Execution::parallel);

/// [AB, C] = [A, C][B, C].
IdentityReport verify_commutator_distributes(const NormalSubgroup& a, const NormalSubgroup& b,
                                             const NormalSubgroup& c,
                                             Execution exec = Execution::parallel);

/// Hall three-subgroup containments: each of [A,[B,C]], [[A,B],C], [[A,C],B]
/// lies in the product of the other two.
IdentityReport verify_hall(const NormalSubgroup& a, const NormalSubgroup& b,
                           const NormalSubgroup& c, Execution exec = Execution::parallel);

struct ConnectivityReport {
  std::vector<int> i_set;  // 1-based
  std::vector<int> j_set;
  std::size_t lhs_order;
  std::size_t rhs_order;
  bool holds;
};

/// (cap_{i in I} R_i) * prod_{j in J} R_j  ==  cap_{i in I} (R_i * prod_{j in J} R_j).
ConnectivityReport verify_connectivity(std::span<const NormalSubgroup> subgroups,
                                       std::span<const int> i_set, std::span<const int> j_set);

struct ConnectivityScan {
  std::size_t checked = 0;
  std::size_t held = 0;
  /// The tuple is connected: m <= 2, or every (I, J) pair held.
  bool connected = true;
};

/// Runs verify_connectivity over every I, J subset of 1..m with |I| >= 2 and
/// |J| >= 1.
ConnectivityScan scan_connectivity(std::span<const NormalSubgroup> subgroups);

}  // namespace commlab
