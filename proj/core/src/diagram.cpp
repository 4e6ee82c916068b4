#include "vbraid/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace vbraid {

std::size_t DiagramWord::sigma_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters.begin(), letters.end(),
                    [](const DiagramLetter& l) { return !l.is_virtual(); }));
}

bool DiagramWord::has_virtual() const {
  return std::any_of(letters.begin(), letters.end(),
                     [](const DiagramLetter& l) { return l.is_virtual(); });
}

void DiagramWord::validate() const {
  if (n < 2) {
    throw PreconditionError("strand count must be at least 2");
  }
  for (const DiagramLetter& l : letters) {
    if (l.pos < 1 || l.pos > n - 1) {
      throw PreconditionError("crossing position out of range 1.." +
                              std::to_string(n - 1));
    }
    if (l.exponent != 1 && l.exponent != -1 && l.exponent != 0) {
      throw PreconditionError("crossing exponent must be +1, -1, or virtual");
    }
  }
}

std::vector<int> end_permutation(const DiagramWord& dw) {
  dw.validate();
  std::vector<int> occ(dw.n);
  std::iota(occ.begin(), occ.end(), 1);
  for (const DiagramLetter& l : dw.letters) {
    std::swap(occ[l.pos - 1], occ[l.pos]);
  }
  return occ;
}

bool is_pure(const DiagramWord& dw) {
  const std::vector<int> occ = end_permutation(dw);
  for (int p = 0; p < dw.n; ++p) {
    if (occ[p] != p + 1) return false;
  }
  return true;
}

BraidWord o_map(const DiagramWord& dw) {
  if (!is_pure(dw)) {
    throw PreconditionError("diagram is not pure: end permutation is not the identity");
  }
  std::vector<int> occ(dw.n);
  std::iota(occ.begin(), occ.end(), 1);
  BraidWord out;
  out.n = dw.n;
  out.letters.reserve(dw.sigma_count());
  for (const DiagramLetter& l : dw.letters) {
    const int left = occ[l.pos - 1];
    const int right = occ[l.pos];
    if (l.exponent > 0) {
      out.letters.push_back({left, right, +1});
    } else if (l.exponent < 0) {
      out.letters.push_back({right, left, -1});
    }
    std::swap(occ[l.pos - 1], occ[l.pos]);
  }
  return out;
}

}  // namespace vbraid
