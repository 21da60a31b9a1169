#pragma once

#include <cstdint>

#include "commlab/perm_group.hpp"

namespace commlab {

enum class Execution { serial, parallel };

/// Classes of { [u, v] : u in A, v in B } for conjugation-closed A and B.
///
/// Since [u^g, v] = [u, v^(g^-1)]^g, it suffices to run u over one
/// representative per class of A and v over every element of B; the result
/// is again a union of classes. Cost: reps(A) * |B| commutator evaluations.
ClassSet commutator_classes(const PermGroup& group, const ClassSet& a, const ClassSet& b,
                            Execution exec = Execution::parallel);

/// Number of evaluations commutator_classes performs for these inputs.
std::uint64_t commutator_classes_cost(const PermGroup& group, const ClassSet& a, const ClassSet& b);

/// { [u, v] : u in A, v in B } over every element pair. Serial reference
/// with no normality assumption; kept for testing the class kernel.
ElementSet commutator_values_reference(const PermGroup& group, const ElementSet& a,
                                       const ElementSet& b);

}  // namespace commlab
