#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vbraid/errors.hpp"

namespace vbraid {

// One generator letter: strand `over` crosses over strand `under`, with a
// writhe of `exponent`. Strand indices are 1-based everywhere.
struct GeneratorLetter {
  int over = 0;
  int under = 0;
  int exponent = +1;

  GeneratorLetter inverse() const { return {over, under, -exponent}; }

  // The same crossing with the over/under roles exchanged; the writhe is kept.
  GeneratorLetter virtualized() const { return {under, over, exponent}; }

  bool operator==(const GeneratorLetter&) const = default;
};

// Throws PreconditionError unless the letter is valid on n strands.
void validate_letter(const GeneratorLetter& g, int n);

// A finite word in the generator letters on a fixed strand count. The empty
// word is the identity. Words with different strand counts are never
// comparable; operations taking two words check that their n agree.
struct BraidWord {
  int n = 2;
  std::vector<GeneratorLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  void validate() const;

  bool operator==(const BraidWord&) const = default;
};

// Letters reversed, exponents negated. Involutive.
BraidWord inverse_word(const BraidWord& w);

// Which quotient of the pure virtual braid group a computation works in.
enum class GroupMode {
  pbn,    // relations of the base presentation only
  tilde,  // adds a_{ij} = a_{ji}
  gn2,    // adds a_{ij}^2 = 1
};

// Antisymmetric assignment of +1/-1 to every ordered pair of distinct strand
// indices. Only the strict upper triangle is stored, row-major; the lower
// triangle is derived by negation, so antisymmetry holds by construction.
class SignSet {
 public:
  SignSet() = default;

  // All upper-triangle signs +1, i.e. the sign set of the natural order.
  explicit SignSet(int n);

  int n() const { return n_; }

  // s(i, j), requires 1 <= i, j <= n and i != j.
  int sign(int i, int j) const;

  // Copy with s(i, j) and s(j, i) negated.
  SignSet with_flipped(int i, int j) const;

  // Upper-triangle entries as bits, row-major: bit k set iff entry k is +1.
  std::uint64_t to_bits() const;
  static SignSet from_bits(int n, std::uint64_t bits);

  static std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  bool operator==(const SignSet&) const = default;

 private:
  std::size_t index_of(int i, int j) const;  // requires i < j
  void check_index(int i) const;

  int n_ = 0;
  std::vector<std::int8_t> upper_;
};

// The sign set of the natural order 1 < 2 < ... < n: s(i,j) = +1 iff j > i.
// Rejects n < 2.
SignSet canonical_sign_set(int n);

}  // namespace vbraid
