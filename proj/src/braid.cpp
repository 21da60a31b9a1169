#include "commlab/braid.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "commlab/permutation.hpp"
#include "commlab/random.hpp"

namespace commlab {

namespace {

void check_same_strands(const Braid& a, const Braid& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braids have different strand counts");
}


/// s_from s_{from+-1} ... s_to with the given sign.
void append_run(Word& w, int from, int to, int sign) {
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    w.push_back(Letter(i, sign));
    if (i == to) break;
  }
}

}  // namespace

Braid::Braid(int strands, Word word) : strands_(strands), word_(std::move(word)) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (Letter l : word_.letters())
    if (l.index() >= strands)
      throw std::invalid_argument("generator s" + std::to_string(l.index()) + " needs more than " +
                                  std::to_string(strands) + " strands");
}

Braid Braid::sigma(int i, int strands, int sign) { return Braid(strands, Word::generator(i, sign)); }

Braid operator*(const Braid& a, const Braid& b) {
  check_same_strands(a, b);
  return Braid(a.strands(), a.word() * b.word());
}

Braid inverse(const Braid& b) { return Braid(b.strands(), invert(b.word())); }

Braid conjugate(const Braid& b, const Braid& by) {
  check_same_strands(b, by);
  return Braid(b.strands(), conjugate(b.word(), by.word()));
}

Braid commutator(const Braid& a, const Braid& b) {
  check_same_strands(a, b);
  return Braid(a.strands(), commutator(a.word(), b.word()));
}

Braid parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (token.size() < 2 || token[0] != 's') throw ParseError("expected s<i> or s<i>^-1", start);
    int sign = 1;
    std::string_view digits = token.substr(1);
    if (digits.ends_with("^-1")) {
      sign = -1;
      digits.remove_suffix(3);
    }
    int index = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
      throw ParseError("malformed braid token '" + std::string(token) + "'", start);
    if (index < 1 || index >= strands)
      throw ParseError("s" + std::to_string(index) + " is out of range for " + std::to_string(strands) +
                           " strands",
                       start);
    w.push_back(Letter(index, sign));
  }
  return Braid(strands, std::move(w));
}

std::string render_braid(const Braid& b) {
  std::string out;
  for (Letter l : b.word().letters()) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(l.index());
    if (l.sign() < 0) out += "^-1";
  }
  return out;
}

ArtinAutomorphism::ArtinAutomorphism(std::vector<Word> images) : images_(std::move(images)) {}

ArtinAutomorphism ArtinAutomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int k = 1; k <= rank; ++k) images.push_back(Word::generator(k));
  return ArtinAutomorphism(std::move(images));
}

bool ArtinAutomorphism::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != Word::generator(static_cast<int>(k) + 1)) return false;
  return true;
}

Word ArtinAutomorphism::apply(const Word& w) const {
  return substitute(w, [this](int k) {
    if (k > rank()) return Word::generator(k);
    return images_[static_cast<std::size_t>(k - 1)];
  });
}

ArtinAutomorphism ArtinAutomorphism::then(const ArtinAutomorphism& after) const {
  std::vector<Word> out;
  out.reserve(images_.size());
  for (const auto& img : images_) out.push_back(after.apply(img));
  return ArtinAutomorphism(std::move(out));
}

ArtinAutomorphism artin_action(const Braid& b) {
  std::vector<Word> images = ArtinAutomorphism::identity(b.strands()).images();
  for (Letter l : b.word().letters()) {
    const int i = l.index();
    Word xi = Word::generator(i);
    Word xj = Word::generator(i + 1);
    Word img_i, img_j;
    if (l.sign() > 0) {
      img_i = xi * xj * invert(xi);
      img_j = xi;
    } else {
      img_i = xj;
      img_j = invert(xj) * xi * xj;
    }
    auto image = [&](int k) {
      if (k == i) return img_i;
      if (k == i + 1) return img_j;
      return Word::generator(k);
    };
    for (auto& w : images) w = substitute(w, image);
  }
  return ArtinAutomorphism(std::move(images));
}

std::vector<int> strand_permutation(const Braid& b) {
  std::vector<int> at(static_cast<std::size_t>(b.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (Letter l : b.word().letters())
    std::swap(at[static_cast<std::size_t>(l.index() - 1)], at[static_cast<std::size_t>(l.index())]);
  return at;
}

bool is_pure(const Braid& b) {
  const auto at = strand_permutation(b);
  for (std::size_t p = 0; p < at.size(); ++p)
    if (at[p] != static_cast<int>(p)) return false;
  return true;
}

namespace {

// Hurwitz action on tuples of permutations: the image of x_1..x_n under a
// homomorphism F_n -> S_9, precomposed with the braid. A moved tuple proves
// the braid nontrivial without building its (possibly huge) Artin images.
bool moves_some_tuple(const Braid& b) {
  constexpr int kDegree = 9;
  constexpr int kTuples = 4;
  Rng rng(0x68757277697463ULL + static_cast<std::uint64_t>(b.strands()));
  for (int t = 0; t < kTuples; ++t) {
    std::vector<Permutation> start;
    for (int k = 0; k < b.strands(); ++k) {
      auto img = rng.permutation(kDegree);
      for (auto& v : img) ++v;
      start.push_back(Permutation::from_images(img));
    }
    auto h = start;
    for (Letter l : b.word().letters()) {
      auto& a = h[static_cast<std::size_t>(l.index() - 1)];
      auto& c = h[static_cast<std::size_t>(l.index())];
      if (l.sign() > 0) {
        Permutation next_a = a * c * a.inverse();
        c = a;
        a = next_a;
      } else {
        Permutation next_c = c.inverse() * a * c;
        a = c;
        c = next_c;
      }
    }
    if (h != start) return true;
  }
  return false;
}

}  // namespace

bool is_trivial(const Braid& b) {
  if (b.word().is_identity()) return true;
  if (!is_pure(b)) return false;
  if (moves_some_tuple(b)) return false;
  return artin_action(b).is_identity();
}

Braid gen_A(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("A(i,j,n) needs 1 <= i < j <= n");
  Word w;
  if (j - 1 >= i + 1) append_run(w, j - 1, i + 1, 1);
  w.push_back(Letter(i, 1));
  w.push_back(Letter(i, 1));
  if (j - 1 >= i + 1) append_run(w, i + 1, j - 1, -1);
  return Braid(n, std::move(w));
}

A0Forms gen_A0(int j, int n) {
  if (!(1 <= j && j <= n)) throw std::invalid_argument("A0(j,n) needs 1 <= j <= n");
  Braid right = Braid::identity(n);
  for (int k = j + 1; k <= n; ++k) right = right * gen_A(j, k, n);
  Braid left = Braid::identity(n);
  for (int k = 1; k < j; ++k) left = left * gen_A(k, j, n);
  Braid product_form = inverse(right) * inverse(left);

  Word first;  // s_j ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_j
  if (j <= n - 1) {
    append_run(first, j, n - 1, 1);
    append_run(first, n - 1, j, 1);
  }
  Word second;  // s_{j-1} ... s_2 s_1^2 s_2 ... s_{j-1}
  if (j >= 2) {
    append_run(second, j - 1, 1, 1);
    append_run(second, 1, j - 1, 1);
  }
  Braid sigma_form(n, invert(first) * invert(second));
  return {std::move(product_form), std::move(sigma_form)};
}

Braid gen_t(int i, int n) {
  if (!(1 <= i && i <= n - 1)) throw std::invalid_argument("t(i,n) needs 1 <= i <= n-1");
  Word w;
  if (i <= n - 2) append_run(w, i, n - 2, 1);
  w.push_back(Letter(n - 1, 1));
  w.push_back(Letter(n - 1, 1));
  if (i <= n - 2) append_run(w, n - 2, i, -1);
  return Braid(n, std::move(w));
}

Braid delete_strand(const Braid& b, int j) {
  const int n = b.strands();
  if (n < 2) throw std::invalid_argument("cannot delete a strand from a braid with fewer than 2 strands");
  if (j < 1 || j > n) throw std::invalid_argument("strand index out of range");
  // at[p]: strand (by starting position, 1-based) currently at position p + 1.
  std::vector<int> at(static_cast<std::size_t>(n));
  std::iota(at.begin(), at.end(), 1);
  int where = j;  // current 1-based position of strand j
  Word out;
  for (Letter l : b.word().letters()) {
    const int k = l.index();
    int& lo = at[static_cast<std::size_t>(k - 1)];
    int& hi = at[static_cast<std::size_t>(k)];
    if (lo == j)
      where = k + 1;
    else if (hi == j)
      where = k;
    else
      out.push_back(Letter(where < k ? k - 1 : k, l.sign()));
    std::swap(lo, hi);
  }
  return Braid(n - 1, std::move(out));
}

bool is_brunnian(const Braid& b) {
  if (!is_pure(b)) return false;
  if (b.strands() == 1) return true;
  for (int j = 1; j <= b.strands(); ++j)
    if (!is_trivial(delete_strand(b, j))) return false;
  return true;
}

BrunnianSampler::BrunnianSampler(int strands, int conj_depth, std::uint64_t seed)
    : strands_(strands), conj_depth_(conj_depth), rng_(seed) {
  if (strands < 2) throw std::invalid_argument("Brunnian sampling needs at least 2 strands");
  if (conj_depth < 0) throw std::invalid_argument("conj_depth must be >= 0");
  for (int i = 1; i < strands; ++i)
    for (int j = i + 1; j <= strands; ++j) a_gens_.push_back(gen_A(i, j, strands));
}

Braid BrunnianSampler::random_pure_word() {
  // Reduced word over an abstract alphabet, one letter per A_{i,j}.
  const Word pattern = random_reduced_word(rng_, static_cast<int>(a_gens_.size()), conj_depth_);
  Braid out = Braid::identity(strands_);
  for (Letter l : pattern.letters()) {
    const Braid& a = a_gens_[static_cast<std::size_t>(l.index() - 1)];
    out = out * (l.sign() > 0 ? a : inverse(a));
  }
  return out;
}

Braid BrunnianSampler::next() {
  const int slots = strands_ - 1;
  const auto order = rng_.permutation(slots);
  std::vector<Braid> args;
  for (int slot : order) {
    Braid t = gen_t(slot + 1, strands_);
    if (rng_.coin()) t = inverse(t);
    args.push_back(conjugate(t, random_pure_word()));
  }
  Braid acc = args.front();
  for (std::size_t k = 1; k < args.size(); ++k) acc = commutator(acc, args[k]);
  return acc;
}

std::vector<Braid> sample_brun_generators(int strands, int conj_depth, std::uint64_t seed,
                                          std::size_t count) {
  BrunnianSampler sampler(strands, conj_depth, seed);
  std::vector<Braid> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sampler.next());
  return out;
}

void write_brunnian_corpus(std::ostream& out, int strands, std::uint64_t seed,
                           std::span<const Braid> braids) {
  out << "# strands=" << strands << " seed=" << seed << '\n';
  for (const auto& b : braids) out << render_braid(b) << '\n';
}

}  // namespace commlab
