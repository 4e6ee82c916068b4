#include "vbraid/projection.hpp"

#include <string>
#include <utility>

namespace vbraid {

BraidWord delete_bad(const BraidWord& w) {
  const AnnotatedWord aw = classify(w);
  BraidWord out;
  out.n = w.n;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (aw.flags[k]) out.letters.push_back(w.letters[k]);
  }
  return out;
}

BraidWord d_stab(const BraidWord& w) {
  BraidWord cur = w;
  for (;;) {
    BraidWord next = delete_bad(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

ClassicalReconstruction reconstruct_classical(const BraidWord& w) {
  const AnnotatedWord aw = classify(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!aw.flags[k]) {
      throw PreconditionError("letter " + std::to_string(k + 1) +
                              " is bad; reconstruction needs an all-good word");
    }
  }
  if (!(aw.states.back() == aw.states.front())) {
    throw PreconditionError("word does not act trivially on the canonical sign set");
  }

  ClassicalReconstruction out;
  out.sigma_word.n = w.n;
  out.sigma_word.letters.reserve(w.size());
  out.witness.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto real = is_realizable(aw.states[k]);
    if (!real) {
      throw InvariantViolation("prefix state " + std::to_string(k) +
                               " is unrealizable despite all-good flags");
    }
    const GeneratorLetter& g = w.letters[k];
    const int ri = real->rank[g.over - 1];
    const int rj = real->rank[g.under - 1];
    const int p = std::min(ri, rj);
    if (std::max(ri, rj) != p + 1) {
      throw InvariantViolation("good letter " + std::to_string(k + 1) +
                               " acts on non-consecutive strands");
    }
    out.sigma_word.letters.push_back({p, g.exponent});
    const int left = real->order[p - 1];
    const int right = real->order[p];
    const GeneratorLetter emitted = g.exponent > 0
                                        ? GeneratorLetter{left, right, +1}
                                        : GeneratorLetter{right, left, -1};
    if (emitted != g && emitted != g.virtualized()) {
      throw InvariantViolation("reconstructed crossing reads back as an unrelated letter");
    }
    out.witness.push_back({g, emitted, p, emitted != g});
  }
  return out;
}

}  // namespace vbraid
