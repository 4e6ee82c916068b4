#include "vbraid/types.hpp"

#include <algorithm>
#include <string>

namespace vbraid {

void validate_letter(const GeneratorLetter& g, int n) {
  if (g.over < 1 || g.over > n || g.under < 1 || g.under > n) {
    throw PreconditionError("letter index out of range 1.." + std::to_string(n));
  }
  if (g.over == g.under) {
    throw PreconditionError("letter indices must be distinct");
  }
  if (g.exponent != 1 && g.exponent != -1) {
    throw PreconditionError("letter exponent must be +1 or -1");
  }
}

void BraidWord::validate() const {
  if (n < 2) {
    throw PreconditionError("strand count must be at least 2");
  }
  for (const GeneratorLetter& g : letters) {
    validate_letter(g, n);
  }
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.n = w.n;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return out;
}

SignSet::SignSet(int n) : n_(n) {
  if (n < 2) {
    throw PreconditionError("sign set needs at least 2 strands");
  }
  upper_.assign(pair_count(n), +1);
}

void SignSet::check_index(int i) const {
  if (i < 1 || i > n_) {
    throw PreconditionError("strand index out of range 1.." + std::to_string(n_));
  }
}

std::size_t SignSet::index_of(int i, int j) const {
  // row-major over the strict upper triangle: (1,2),(1,3),...,(2,3),...
  const std::size_t row_start =
      static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2;
  return row_start + static_cast<std::size_t>(j - i - 1);
}

int SignSet::sign(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) {
    throw PreconditionError("sign is defined for distinct indices only");
  }
  return i < j ? upper_[index_of(i, j)] : -upper_[index_of(j, i)];
}

SignSet SignSet::with_flipped(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) {
    throw PreconditionError("cannot flip a diagonal entry");
  }
  SignSet out = *this;
  const std::size_t k = i < j ? index_of(i, j) : index_of(j, i);
  out.upper_[k] = static_cast<std::int8_t>(-out.upper_[k]);
  return out;
}

std::uint64_t SignSet::to_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < upper_.size(); ++k) {
    if (upper_[k] > 0) {
      bits |= std::uint64_t{1} << k;
    }
  }
  return bits;
}

SignSet SignSet::from_bits(int n, std::uint64_t bits) {
  SignSet s(n);
  for (std::size_t k = 0; k < s.upper_.size(); ++k) {
    s.upper_[k] = (bits >> k) & 1 ? std::int8_t{+1} : std::int8_t{-1};
  }
  return s;
}

SignSet canonical_sign_set(int n) { return SignSet(n); }

}  // namespace vbraid
