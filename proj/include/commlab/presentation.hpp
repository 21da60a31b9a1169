#pragma once

#include <span>
#include <string>
#include <vector>

#include "commlab/word.hpp"

namespace commlab {

enum class Membership { member, non_member, undecided };
std::string to_string(Membership m);

/// Group <g_1, ..., g_r | relator>. Elements are words over x_1..x_r, where
/// x_k stands for the k-th named generator.
class OneRelatorPresentation {
 public:
  OneRelatorPresentation(std::vector<std::string> names, Word relator, std::string label);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Word& relator() const { return relator_; }
  const std::string& label() const { return label_; }

  /// Is w in the normal closure of the generators `killed` (1-based)?
  ///
  /// The quotient is <survivors | relator with killed letters deleted>. If
  /// that relator is empty the quotient is free; if some generator occurs in
  /// it exactly once, eliminating it leaves a free group. Either way w is
  /// mapped there and tested for triviality. Otherwise the answer is
  /// undecided (unless w already dies in the free group on the survivors).
  Membership member_of_closure(const Word& w, std::span<const int> killed) const;

  /// Rewrites w with generator names, e.g. "a1 x2^-1".
  std::string render(const Word& w) const;

 private:
  std::vector<std::string> names_;
  Word relator_;
  std::string label_;
};

/// <x_1..x_m | x_1 ... x_m>.
OneRelatorPresentation sphere_presentation(int m);
/// <a_1, x_1..x_m | a_1^-2 x_1 ... x_m>; a_1 is generator 1.
OneRelatorPresentation projective_plane_presentation(int m);
/// <a_1, b_1, ..., a_g, b_g, y_1..y_t, x_1..x_m |
///   prod [a_i, b_i] (y_1 ... y_t x_1 ... x_m)^-1>, g > 0 or t > 0.
OneRelatorPresentation orientable_surface_presentation(int genus, int boundary, int m);
/// <a_1..a_h, y_1..y_t, x_1..x_m | prod a_i^2 (y_1 ... y_t x_1 ... x_m)^-1>, h > 1 or t > 0.
OneRelatorPresentation nonorientable_surface_presentation(int genus, int boundary, int m);

/// Generator indices of the puncture letters x_1..x_m in a presentation
/// built above (the last m generators).
std::vector<int> puncture_indices(const OneRelatorPresentation& p, int m);

}  // namespace commlab
