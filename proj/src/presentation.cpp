#include "commlab/presentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace commlab {

namespace {

Word cyclically_reduce(Word w) {
  auto ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word::reduce(ls.subspan(lo, hi - lo));
}

Word product_of(int first, int last) {
  Word w;
  for (int k = first; k <= last; ++k) w.push_back(Letter(k, 1));
  return w;
}

}  // namespace

std::string to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::undecided: return "undecided-by-this-tool";
  }
  return "unknown";
}

OneRelatorPresentation::OneRelatorPresentation(std::vector<std::string> names, Word relator,
                                               std::string label)
    : names_(std::move(names)), relator_(std::move(relator)), label_(std::move(label)) {
  if (names_.empty()) throw std::invalid_argument("presentation needs at least one generator");
  if (relator_.max_index() > rank()) throw std::invalid_argument("relator uses an unknown generator");
}

Membership OneRelatorPresentation::member_of_closure(const Word& w, std::span<const int> killed) const {
  if (w.max_index() > rank()) throw std::invalid_argument("word uses an unknown generator");
  for (int k : killed)
    if (k < 1 || k > rank()) throw std::invalid_argument("killed generator index out of range");
  auto is_killed = [&killed](int k) { return std::find(killed.begin(), killed.end(), k) != killed.end(); };

  const Word image = kill_letters(w, is_killed);
  if (image.is_identity()) return Membership::member;
  const Word rel = cyclically_reduce(kill_letters(relator_, is_killed));
  if (rel.is_identity()) return Membership::non_member;

  std::map<int, int> occurrences;
  for (Letter l : rel.letters()) ++occurrences[l.index()];
  auto ls = rel.letters();
  for (std::size_t p = ls.size(); p-- > 0;) {
    if (occurrences[ls[p].index()] != 1) continue;
    // rel = u g^e v, so g^e = (v u)^-1 after a cyclic shift.
    const Word u = Word::reduce(ls.subspan(0, p));
    const Word v = Word::reduce(ls.subspan(p + 1));
    const Word vu = v * u;
    const Word g_value = ls[p].sign() > 0 ? invert(vu) : vu;
    const int g = ls[p].index();
    const Word mapped = substitute(image, [&](int k) { return k == g ? g_value : Word::generator(k); });
    return mapped.is_identity() ? Membership::member : Membership::non_member;
  }
  return Membership::undecided;
}

std::string OneRelatorPresentation::render(const Word& w) const {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names_[static_cast<std::size_t>(l.index() - 1)];
    if (l.sign() < 0) out += "^-1";
  }
  return out;
}

OneRelatorPresentation sphere_presentation(int m) {
  if (m < 2) throw std::invalid_argument("sphere presentation needs m >= 2");
  std::vector<std::string> names;
  for (int k = 1; k <= m; ++k) names.push_back("x" + std::to_string(k));
  return OneRelatorPresentation(std::move(names), product_of(1, m), "sphere");
}

OneRelatorPresentation projective_plane_presentation(int m) {
  if (m < 2) throw std::invalid_argument("projective plane presentation needs m >= 2");
  std::vector<std::string> names{"a1"};
  for (int k = 1; k <= m; ++k) names.push_back("x" + std::to_string(k));
  Word rel = Word::from_signed({-1, -1});
  rel.append(product_of(2, m + 1));
  return OneRelatorPresentation(std::move(names), std::move(rel), "projective_plane");
}

OneRelatorPresentation orientable_surface_presentation(int genus, int boundary, int m) {
  if (genus < 0 || boundary < 0 || m < 1) throw std::invalid_argument("invalid surface parameters");
  if (genus == 0 && boundary == 0) throw std::invalid_argument("needs genus > 0 or boundary > 0");
  std::vector<std::string> names;
  Word lhs;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
    const int a = 2 * i - 1;
    lhs.append(commutator(Word::generator(a), Word::generator(a + 1)));
  }
  const int y0 = 2 * genus + 1;
  for (int j = 1; j <= boundary; ++j) names.push_back("y" + std::to_string(j));
  for (int k = 1; k <= m; ++k) names.push_back("x" + std::to_string(k));
  const Word rhs = product_of(y0, y0 + boundary + m - 1);
  return OneRelatorPresentation(std::move(names), lhs * invert(rhs), "orientable_surface");
}

OneRelatorPresentation nonorientable_surface_presentation(int genus, int boundary, int m) {
  if (genus < 1 || boundary < 0 || m < 1) throw std::invalid_argument("invalid surface parameters");
  if (genus <= 1 && boundary == 0) throw std::invalid_argument("needs genus > 1 or boundary > 0");
  std::vector<std::string> names;
  Word lhs;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    lhs.append(Word::from_signed({i, i}));
  }
  const int y0 = genus + 1;
  for (int j = 1; j <= boundary; ++j) names.push_back("y" + std::to_string(j));
  for (int k = 1; k <= m; ++k) names.push_back("x" + std::to_string(k));
  const Word rhs = product_of(y0, y0 + boundary + m - 1);
  return OneRelatorPresentation(std::move(names), lhs * invert(rhs), "nonorientable_surface");
}

std::vector<int> puncture_indices(const OneRelatorPresentation& p, int m) {
  if (m > p.rank()) throw std::invalid_argument("more punctures than generators");
  std::vector<int> out;
  for (int k = p.rank() - m + 1; k <= p.rank(); ++k) out.push_back(k);
  return out;
}

}  // namespace commlab
