#include "commlab/homotopy.hpp"

#include <algorithm>
#include <stdexcept>

#include "commlab/magnus.hpp"

namespace commlab {

Partition::Partition(std::vector<std::vector<int>> blocks, int m) : blocks_(std::move(blocks)), m_(m) {
  if (m < 1) throw std::invalid_argument("partition needs m >= 1");
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    for (int i : b) {
      if (i < 1 || i > m) throw std::invalid_argument("partition index out of range");
      if (seen[static_cast<std::size_t>(i)]++) throw std::invalid_argument("partition blocks overlap");
    }
  }
  for (int i = 1; i <= m; ++i)
    if (!seen[static_cast<std::size_t>(i)]) throw std::invalid_argument("partition does not cover 1..m");
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += ',';
    out += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(b[k]);
    }
    out += '}';
  }
  return out;
}

SpherePresentation::SpherePresentation(int m) : m_(m), presentation_(sphere_presentation(m)) {}

Word SpherePresentation::eliminate(const Word& raw) const {
  if (raw.max_index() > m_) throw std::invalid_argument("word uses a generator beyond x_m");
  Word last;
  for (int k = m_ - 1; k >= 1; --k) last.push_back(Letter(k, -1));
  return substitute(raw, [&](int k) { return k == m_ ? last : Word::generator(k); });
}

bool SpherePresentation::member_of_block(const Word& w, std::span<const int> block) const {
  // Killing any x_i leaves a relator in which every survivor occurs once, so
  // the answer is always decided.
  return presentation_.member_of_closure(eliminate(w), block) == Membership::member;
}

bool SpherePresentation::in_intersection(const Word& w, const Partition& partition) const {
  if (partition.m() != m_) throw std::invalid_argument("partition size does not match m");
  return std::all_of(partition.blocks().begin(), partition.blocks().end(),
                     [&](const std::vector<int>& b) { return member_of_block(w, b); });
}

std::vector<SubgroupSpec> SpherePresentation::block_subgroups(const Partition& partition) const {
  if (partition.m() != m_) throw std::invalid_argument("partition size does not match m");
  std::vector<SubgroupSpec> out;
  for (const auto& b : partition.blocks()) {
    std::vector<Word> gens;
    for (int i : b) gens.push_back(eliminate(Word::generator(i)));
    std::string label = "R{";
    for (std::size_t k = 0; k < b.size(); ++k) label += (k ? "," : "") + std::to_string(b[k]);
    out.emplace_back(std::move(gens), label + "}");
  }
  return out;
}

Pi2Report pi2_check(std::uint64_t seed, std::size_t fuzz, std::size_t samples, int conj_depth) {
  const SpherePresentation sphere(2);
  const Partition partition({{1}, {2}}, 2);
  Pi2Report r;
  r.seed = seed;
  r.conj_depth = conj_depth;

  Rng rng(seed);
  std::vector<Word> elements;
  for (std::size_t k = 0; k < fuzz; ++k) {
    Word raw = random_reduced_word(rng, 2, 12);
    ++r.elements_checked;
    if (sphere.member_of_block(raw, partition.blocks()[0]) && sphere.member_of_block(raw, partition.blocks()[1]))
      ++r.elements_in_both;
    elements.push_back(sphere.eliminate(raw));
  }
  // G is abelian of rank 1, so commutators of arbitrary elements and sampled
  // symmetric-commutator generators both vanish.
  for (std::size_t k = 0; k + 1 < elements.size(); k += 2) {
    ++r.commutators_checked;
    if (commutator(elements[k], elements[k + 1]).is_identity()) ++r.commutators_trivial;
  }
  for (const Word& w : symmetric_generators(sphere.block_subgroups(partition), conj_depth,
                                            derive_seed(seed, 1), samples)) {
    ++r.commutators_checked;
    if (w.is_identity()) ++r.commutators_trivial;
  }
  r.holds = r.elements_in_both == r.elements_checked && r.commutators_trivial == r.commutators_checked;
  r.quotient_rank = r.holds ? sphere.free_rank() : 0;
  return r;
}

Pi3Certificate pi3_certificate(std::uint64_t seed, std::size_t samples, int conj_depth) {
  const SpherePresentation sphere(3);
  const Partition partition({{1}, {2}, {3}}, 3);
  Pi3Certificate c;
  c.seed = seed;
  c.conj_depth = conj_depth;
  c.partition = partition.to_string();
  c.witness = commutator(Word::generator(1), Word::generator(2));
  c.witness_in_intersection = sphere.in_intersection(c.witness, partition);
  c.witness_gamma_level = gamma_level(c.witness, 6);
  c.witness_outside_gamma3 = !gamma_membership(c.witness, 3);

  c.samples = samples;
  for (const Word& w : symmetric_generators(sphere.block_subgroups(partition), conj_depth, seed, samples)) {
    if (sphere.in_intersection(w, partition)) ++c.samples_in_intersection;
    if (gamma_membership(w, 3)) ++c.samples_in_gamma3;
  }
  c.holds = c.witness_in_intersection && c.witness_outside_gamma3 &&
            c.samples_in_intersection == samples && c.samples_in_gamma3 == samples;
  return c;
}

}  // namespace commlab
