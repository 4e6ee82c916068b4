#include "vbraid/rewriting.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace vbraid {

namespace {

bool disjoint_pairs(const GeneratorLetter& a, const GeneratorLetter& b) {
  return a.over != b.over && a.over != b.under && a.under != b.over &&
         a.under != b.under;
}

// The two window shapes of the triple relation, with uniform exponents:
//   U = a_{ij} a_{ik} a_{jk}   and   V = a_{jk} a_{ik} a_{ij}.
// V is U reversed, so one application reverses the window. The inverse forms
// of the relation are the same shapes with exponent -1 throughout.
bool r3_window(const GeneratorLetter& a, const GeneratorLetter& b,
               const GeneratorLetter& c) {
  if (a.exponent != b.exponent || b.exponent != c.exponent) return false;
  const bool u_shape = a.over == b.over && a.under == c.over && b.under == c.under;
  const bool v_shape = a.under == b.under && a.over == c.under && b.over == c.over;
  if (!(u_shape || v_shape)) return false;
  // three distinct strands; letter validity already gives over != under
  const int i = u_shape ? a.over : b.over;
  const int j = u_shape ? a.under : a.over;
  const int k = u_shape ? b.under : a.under;
  return i != j && j != k && i != k;
}

BraidWord with_window_reversed(const BraidWord& w, int m) {
  BraidWord out = w;
  std::swap(out.letters[m], out.letters[m + 2]);
  return out;
}

std::string encode(const BraidWord& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (const GeneratorLetter& g : w.letters) {
    key.push_back(static_cast<char>(g.over));
    key.push_back(static_cast<char>(g.under));
    key.push_back(g.exponent > 0 ? '\1' : '\2');
  }
  return key;
}

std::string encode(const DiagramWord& w) {
  std::string key;
  key.reserve(w.size() * 2);
  for (const DiagramLetter& l : w.letters) {
    key.push_back(static_cast<char>(l.pos));
    key.push_back(l.exponent > 0 ? '\1' : '\2');
  }
  return key;
}

}  // namespace

std::string_view rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::far_comm: return "far_comm";
    case RuleKind::free_insert: return "free_insert";
    case RuleKind::free_reduce: return "free_reduce";
    case RuleKind::involutive: return "involutive";
    case RuleKind::r3: return "r3";
    case RuleKind::virtualize: return "virtualize";
  }
  return "?";
}

std::vector<Neighbor> neighbors(const BraidWord& w, GroupMode mode, bool allow_growth) {
  w.validate();
  const int len = static_cast<int>(w.size());
  std::vector<Neighbor> out;

  // far_comm
  for (int m = 0; m + 1 < len; ++m) {
    if (disjoint_pairs(w.letters[m], w.letters[m + 1])) {
      BraidWord nw = w;
      std::swap(nw.letters[m], nw.letters[m + 1]);
      out.push_back({std::move(nw), {RuleKind::far_comm, m, std::nullopt}});
    }
  }

  // free_insert
  if (allow_growth) {
    for (int gap = 0; gap <= len; ++gap) {
      for (int i = 1; i <= w.n; ++i) {
        for (int j = 1; j <= w.n; ++j) {
          if (i == j) continue;
          for (int e : {+1, -1}) {
            const GeneratorLetter g{i, j, e};
            BraidWord nw = w;
            nw.letters.insert(nw.letters.begin() + gap, {g, g.inverse()});
            out.push_back({std::move(nw), {RuleKind::free_insert, gap, g}});
          }
        }
      }
    }
  }

  // free_reduce
  for (int m = 0; m + 1 < len; ++m) {
    if (w.letters[m + 1] == w.letters[m].inverse()) {
      BraidWord nw = w;
      nw.letters.erase(nw.letters.begin() + m, nw.letters.begin() + m + 2);
      out.push_back({std::move(nw), {RuleKind::free_reduce, m, std::nullopt}});
    }
  }

  // involutive
  if (mode == GroupMode::gn2) {
    for (int m = 0; m < len; ++m) {
      BraidWord nw = w;
      nw.letters[m] = nw.letters[m].inverse();
      out.push_back({std::move(nw), {RuleKind::involutive, m, std::nullopt}});
    }
  }

  // r3
  for (int m = 0; m + 2 < len; ++m) {
    if (r3_window(w.letters[m], w.letters[m + 1], w.letters[m + 2])) {
      out.push_back({with_window_reversed(w, m), {RuleKind::r3, m, std::nullopt}});
    }
  }

  // virtualize
  if (mode == GroupMode::tilde) {
    for (int m = 0; m < len; ++m) {
      BraidWord nw = w;
      nw.letters[m] = nw.letters[m].virtualized();
      out.push_back({std::move(nw), {RuleKind::virtualize, m, std::nullopt}});
    }
  }

  return out;
}

BraidWord apply_step(const BraidWord& w, const RewriteStep& step) {
  const int len = static_cast<int>(w.size());
  const int m = step.pos;
  switch (step.rule) {
    case RuleKind::far_comm: {
      if (m < 0 || m + 1 >= len || !disjoint_pairs(w.letters[m], w.letters[m + 1])) {
        throw PreconditionError("far_comm does not apply at this position");
      }
      BraidWord out = w;
      std::swap(out.letters[m], out.letters[m + 1]);
      return out;
    }
    case RuleKind::free_insert: {
      if (!step.letter || m < 0 || m > len) {
        throw PreconditionError("free_insert needs a letter and a gap in range");
      }
      validate_letter(*step.letter, w.n);
      BraidWord out = w;
      out.letters.insert(out.letters.begin() + m, {*step.letter, step.letter->inverse()});
      return out;
    }
    case RuleKind::free_reduce: {
      if (m < 0 || m + 1 >= len || w.letters[m + 1] != w.letters[m].inverse()) {
        throw PreconditionError("free_reduce does not apply at this position");
      }
      BraidWord out = w;
      out.letters.erase(out.letters.begin() + m, out.letters.begin() + m + 2);
      return out;
    }
    case RuleKind::involutive: {
      if (m < 0 || m >= len) {
        throw PreconditionError("involutive position out of range");
      }
      BraidWord out = w;
      out.letters[m] = out.letters[m].inverse();
      return out;
    }
    case RuleKind::r3: {
      if (m < 0 || m + 2 >= len ||
          !r3_window(w.letters[m], w.letters[m + 1], w.letters[m + 2])) {
        throw PreconditionError("r3 does not apply at this position");
      }
      return with_window_reversed(w, m);
    }
    case RuleKind::virtualize: {
      if (m < 0 || m >= len) {
        throw PreconditionError("virtualize position out of range");
      }
      BraidWord out = w;
      out.letters[m] = out.letters[m].virtualized();
      return out;
    }
  }
  throw PreconditionError("unknown rule");
}

RewriteStep invert_step(const BraidWord& before, const RewriteStep& step) {
  switch (step.rule) {
    case RuleKind::free_reduce:
      return {RuleKind::free_insert, step.pos, before.letters[step.pos]};
    case RuleKind::free_insert:
      return {RuleKind::free_reduce, step.pos, std::nullopt};
    default:
      return step;  // the remaining rules are involutions at the same position
  }
}

std::map<std::pair<int, int>, int> pair_exponent_sums(const BraidWord& w) {
  w.validate();
  std::map<std::pair<int, int>, int> sums;
  for (int i = 1; i <= w.n; ++i) {
    for (int j = i + 1; j <= w.n; ++j) {
      sums[{i, j}] = 0;
    }
  }
  for (const GeneratorLetter& g : w.letters) {
    sums[{std::min(g.over, g.under), std::max(g.over, g.under)}] += g.exponent;
  }
  return sums;
}

SearchBounds default_bounds(const BraidWord& w1, const BraidWord& w2) {
  return {std::max(w1.size(), w2.size()) + 4, 1000000};
}

namespace {

bool invariant_compatible(const BraidWord& w1, const BraidWord& w2, GroupMode mode) {
  const auto s1 = pair_exponent_sums(w1);
  const auto s2 = pair_exponent_sums(w2);
  if (mode == GroupMode::gn2) {
    for (const auto& [pair, v] : s1) {
      if (((v - s2.at(pair)) & 1) != 0) return false;
    }
    return true;
  }
  return s1 == s2;
}

struct VisitEntry {
  int parent = -1;  // index into the same side's entries; -1 for the root
  RewriteStep step;
  BraidWord word;
};

struct SearchSide {
  std::vector<VisitEntry> entries;
  std::unordered_map<std::string, int> index;
  std::vector<int> frontier;
  bool open = true;
  std::size_t budget = 0;

  void init(const BraidWord& root, std::size_t max_entries) {
    budget = std::max<std::size_t>(max_entries, 1);
    entries.push_back({-1, {}, root});
    index.emplace(encode(root), 0);
    frontier.push_back(0);
  }
};

std::vector<RewriteStep> join_traces(const SearchSide& fwd, int fwd_idx,
                                     const SearchSide& bwd, int bwd_idx) {
  std::vector<RewriteStep> steps;
  for (int cur = fwd_idx; fwd.entries[cur].parent != -1; cur = fwd.entries[cur].parent) {
    steps.push_back(fwd.entries[cur].step);
  }
  std::reverse(steps.begin(), steps.end());
  // walk the backward chain from the meeting word toward w2, inverting each edge
  for (int cur = bwd_idx; bwd.entries[cur].parent != -1; cur = bwd.entries[cur].parent) {
    const int par = bwd.entries[cur].parent;
    steps.push_back(invert_step(bwd.entries[par].word, bwd.entries[cur].step));
  }
  return steps;
}

}  // namespace

EquivalenceVerdict equivalent(const BraidWord& w1, const BraidWord& w2,
                              GroupMode mode, const SearchBounds& bounds) {
  w1.validate();
  w2.validate();
  if (w1.n != w2.n) {
    throw PreconditionError("cannot compare words with different strand counts");
  }

  EquivalenceVerdict verdict;
  if (w1 == w2) {
    verdict.status = Verdict::equal;
    return verdict;
  }
  if (!invariant_compatible(w1, w2, mode)) {
    verdict.stats.separated_by_invariant = true;
    return verdict;
  }

  SearchSide fwd, bwd;
  fwd.init(w1, bounds.max_states / 2);
  bwd.init(w2, bounds.max_states / 2);
  verdict.stats.states_explored = 2;

  // Expands one breadth-first level of `self`; returns the meeting pair of
  // entry indices (self, other) if a word already known to `other` appears.
  const auto expand = [&](SearchSide& self, SearchSide& other)
      -> std::optional<std::pair<int, int>> {
    std::vector<int> next;
    for (int ei : self.frontier) {
      if (!self.open) break;
      for (Neighbor& nb : neighbors(self.entries[ei].word, mode, true)) {
        if (nb.word.size() > bounds.max_len) continue;
        std::string key = encode(nb.word);
        if (self.index.contains(key)) continue;
        if (self.entries.size() >= self.budget) {
          self.open = false;
          break;
        }
        const int idx = static_cast<int>(self.entries.size());
        self.entries.push_back({ei, nb.step, std::move(nb.word)});
        self.index.emplace(std::move(key), idx);
        next.push_back(idx);
        ++verdict.stats.states_explored;
        if (auto it = other.index.find(encode(self.entries[idx].word));
            it != other.index.end()) {
          return std::pair{idx, it->second};
        }
      }
    }
    self.frontier = std::move(next);
    verdict.stats.frontier_peak =
        std::max<std::uint64_t>(verdict.stats.frontier_peak, self.frontier.size());
    if (self.frontier.empty()) self.open = false;
    return std::nullopt;
  };

  while (fwd.open || bwd.open) {
    if (fwd.open) {
      if (auto meet = expand(fwd, bwd)) {
        verdict.status = Verdict::equal;
        verdict.trace = join_traces(fwd, meet->first, bwd, meet->second);
        return verdict;
      }
    }
    if (bwd.open) {
      if (auto meet = expand(bwd, fwd)) {
        verdict.status = Verdict::equal;
        verdict.trace = join_traces(fwd, meet->second, bwd, meet->first);
        return verdict;
      }
    }
  }
  return verdict;
}

EquivalenceVerdict equivalent(const BraidWord& w1, const BraidWord& w2, GroupMode mode) {
  return equivalent(w1, w2, mode, default_bounds(w1, w2));
}

namespace {

// Classical one-step moves on a virtual-free diagram word.
std::vector<DiagramWord> sigma_neighbors(const DiagramWord& w, std::size_t max_len) {
  const int len = static_cast<int>(w.size());
  std::vector<DiagramWord> out;
  // far commutativity
  for (int m = 0; m + 1 < len; ++m) {
    const int d = w.letters[m].pos - w.letters[m + 1].pos;
    if (d >= 2 || d <= -2) {
      DiagramWord nw = w;
      std::swap(nw.letters[m], nw.letters[m + 1]);
      out.push_back(std::move(nw));
    }
  }
  // free insertion
  if (w.size() + 2 <= max_len) {
    for (int gap = 0; gap <= len; ++gap) {
      for (int p = 1; p <= w.n - 1; ++p) {
        for (int e : {+1, -1}) {
          DiagramWord nw = w;
          nw.letters.insert(nw.letters.begin() + gap,
                            {DiagramLetter{p, e}, DiagramLetter{p, -e}});
          out.push_back(std::move(nw));
        }
      }
    }
  }
  // free reduction
  for (int m = 0; m + 1 < len; ++m) {
    if (w.letters[m].pos == w.letters[m + 1].pos &&
        w.letters[m].exponent == -w.letters[m + 1].exponent) {
      DiagramWord nw = w;
      nw.letters.erase(nw.letters.begin() + m, nw.letters.begin() + m + 2);
      out.push_back(std::move(nw));
    }
  }
  // braid relation: positions (x, y, x) with |x-y| = 1, uniform exponent
  for (int m = 0; m + 2 < len; ++m) {
    const auto& a = w.letters[m];
    const auto& b = w.letters[m + 1];
    const auto& c = w.letters[m + 2];
    if (a.exponent == b.exponent && b.exponent == c.exponent && a.pos == c.pos &&
        (b.pos == a.pos + 1 || b.pos == a.pos - 1)) {
      DiagramWord nw = w;
      nw.letters[m].pos = b.pos;
      nw.letters[m + 1].pos = a.pos;
      nw.letters[m + 2].pos = b.pos;
      out.push_back(std::move(nw));
    }
  }
  return out;
}

}  // namespace

SigmaVerdict sigma_equivalent(const DiagramWord& a, const DiagramWord& b,
                              const SearchBounds& bounds) {
  a.validate();
  b.validate();
  if (a.n != b.n) {
    throw PreconditionError("cannot compare diagrams with different strand counts");
  }
  if (a.has_virtual() || b.has_virtual()) {
    throw PreconditionError("classical equivalence is defined for virtual-free diagrams");
  }

  SigmaVerdict verdict;
  if (a == b) {
    verdict.status = Verdict::equal;
    return verdict;
  }

  struct Side {
    std::unordered_map<std::string, int> index;
    std::vector<DiagramWord> words;
    std::vector<int> frontier;
    bool open = true;
    std::size_t budget = 0;
  };
  Side fwd, bwd;
  const auto init = [&](Side& s, const DiagramWord& root) {
    s.budget = std::max<std::size_t>(bounds.max_states / 2, 1);
    s.words.push_back(root);
    s.index.emplace(encode(root), 0);
    s.frontier.push_back(0);
  };
  init(fwd, a);
  init(bwd, b);
  verdict.stats.states_explored = 2;

  const auto expand = [&](Side& self, Side& other) -> bool {
    std::vector<int> next;
    for (int ei : self.frontier) {
      if (!self.open) break;
      for (DiagramWord& nw : sigma_neighbors(self.words[ei], bounds.max_len)) {
        if (nw.size() > bounds.max_len) continue;
        std::string key = encode(nw);
        if (self.index.contains(key)) continue;
        if (self.words.size() >= self.budget) {
          self.open = false;
          break;
        }
        const bool met = other.index.contains(key);
        const int idx = static_cast<int>(self.words.size());
        self.words.push_back(std::move(nw));
        self.index.emplace(std::move(key), idx);
        next.push_back(idx);
        ++verdict.stats.states_explored;
        if (met) return true;
      }
    }
    self.frontier = std::move(next);
    verdict.stats.frontier_peak =
        std::max<std::uint64_t>(verdict.stats.frontier_peak, self.frontier.size());
    if (self.frontier.empty()) self.open = false;
    return false;
  };

  while (fwd.open || bwd.open) {
    if (fwd.open && expand(fwd, bwd)) {
      verdict.status = Verdict::equal;
      return verdict;
    }
    if (bwd.open && expand(bwd, fwd)) {
      verdict.status = Verdict::equal;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace vbraid
