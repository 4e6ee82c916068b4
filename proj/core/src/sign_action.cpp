#include "vbraid/sign_action.hpp"

namespace vbraid {

SignSet apply_letter(const SignSet& s, const GeneratorLetter& g) {
  validate_letter(g, s.n());
  return s.with_flipped(g.over, g.under);
}

SignSet act(const BraidWord& w, const SignSet& s) {
  w.validate();
  if (w.n != s.n()) {
    throw PreconditionError("word and sign set have different strand counts");
  }
  SignSet cur = s;
  for (const GeneratorLetter& g : w.letters) {
    cur = apply_letter(cur, g);
  }
  return cur;
}

std::vector<SignSet> prefix_states(const BraidWord& w, const SignSet& s0) {
  w.validate();
  if (w.n != s0.n()) {
    throw PreconditionError("word and sign set have different strand counts");
  }
  std::vector<SignSet> states;
  states.reserve(w.size() + 1);
  states.push_back(s0);
  for (const GeneratorLetter& g : w.letters) {
    states.push_back(apply_letter(states.back(), g));
  }
  return states;
}

std::optional<Realization> is_realizable(const SignSet& s) {
  const int n = s.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || s.sign(i, j) < 0) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        if (s.sign(j, k) > 0 && s.sign(i, k) < 0) {
          return std::nullopt;  // i < j < k but k < i
        }
      }
    }
  }
  // Transitive tournament: out-degrees are n-1, n-2, ..., 0 from left to right.
  Realization r;
  r.order.assign(n, 0);
  r.rank.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    int right_of_i = 0;
    for (int j = 1; j <= n; ++j) {
      if (j != i && s.sign(i, j) > 0) ++right_of_i;
    }
    const int pos = n - right_of_i;
    r.rank[i - 1] = pos;
    r.order[pos - 1] = i;
  }
  return r;
}

bool adjacent(const SignSet& s, int i, int j) {
  const int n = s.n();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw PreconditionError("adjacency index out of range");
  }
  if (i == j) {
    throw PreconditionError("adjacency is defined for distinct indices");
  }
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == j) continue;
    if (s.sign(i, k) != s.sign(j, k)) return false;
  }
  return true;
}

}  // namespace vbraid
