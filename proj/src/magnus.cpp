#include "commlab/magnus.hpp"

#include <stdexcept>

namespace commlab {

Monomial::Monomial(std::span<const int> indices) {
  if (indices.size() > static_cast<std::size_t>(kMaxDegree))
    throw std::invalid_argument("monomial degree exceeds supported maximum");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int i = indices[k];
    if (i < 1 || i > 255) throw std::invalid_argument("monomial index out of range 1..255");
    packed_ |= static_cast<std::uint64_t>(i) << (8 * (7 - k));
  }
  degree_ = static_cast<std::uint8_t>(indices.size());
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (int k = 0; k < degree_; ++k) out.push_back(static_cast<int>((packed_ >> (8 * (7 - k))) & 0xff));
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.degree_ = static_cast<std::uint8_t>(degree_ + other.degree_);
  m.packed_ = packed_ | (degree_ == 8 ? 0 : other.packed_ >> (8 * degree_));
  return m;
}

TruncatedSeries::TruncatedSeries(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 1 || cutoff > Monomial::kMaxDegree)
    throw std::invalid_argument("series cutoff must be in 1.." + std::to_string(Monomial::kMaxDegree));
}

TruncatedSeries TruncatedSeries::one(int cutoff) {
  TruncatedSeries s(cutoff);
  s.terms_.emplace(Monomial{}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::letter(Letter l, int cutoff) {
  TruncatedSeries s = one(cutoff);
  std::vector<int> idx;
  for (int d = 1; d <= cutoff; ++d) {
    idx.push_back(l.index());
    // x -> 1 + X; x^-1 -> sum (-X)^d.
    if (l.sign() > 0) {
      s.terms_.emplace(Monomial(idx), 1);
      break;
    }
    s.terms_.emplace(Monomial(idx), d % 2 == 0 ? 1 : -1);
  }
  return s;
}

BigInt TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const BigInt& c) {
  if (m.degree() > cutoff_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TruncatedSeries::lowest_nonconstant_degree() const {
  for (const auto& [m, c] : terms_)
    if (m.degree() >= 1) return m.degree();
  return cutoff_ + 1;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  if (other.cutoff_ != cutoff_) throw std::invalid_argument("series cutoffs differ");
  TruncatedSeries out(cutoff_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      // Terms are ordered by degree, so the rest of this row is too deep.
      if (ma.degree() + mb.degree() > cutoff_) break;
      out.add(ma * mb, ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  if (other.cutoff_ != cutoff_) throw std::invalid_argument("series cutoffs differ");
  TruncatedSeries out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, -c);
  return out;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (int i : m.indices()) {
      if (!mono.empty()) mono += ' ';
      mono += "X" + std::to_string(i);
    }
    if (mono.empty())
      out += magnitude.str();
    else if (magnitude == 1)
      out += mono;
    else
      out += magnitude.str() + "·" + mono;
  }
  return out;
}

TruncatedSeries expand(const Word& w, int cutoff) {
  TruncatedSeries acc = TruncatedSeries::one(cutoff);
  for (Letter l : w.letters()) acc = acc * TruncatedSeries::letter(l, cutoff);
  return acc;
}

bool gamma_membership(const Word& w, int k) {
  if (k < 1) throw std::invalid_argument("gamma index must be >= 1");
  if (k == 1) return true;
  // Terms of degree >= k never influence the answer.
  return expand(w, k - 1).lowest_nonconstant_degree() >= k;
}

int gamma_level(const Word& w, int max_k) {
  if (max_k < 1) throw std::invalid_argument("gamma index must be >= 1");
  if (max_k == 1) return 1;
  const int low = expand(w, max_k - 1).lowest_nonconstant_degree();
  return low > max_k ? max_k : low;
}

}  // namespace commlab
