#include "vbraid/text_io.hpp"

#include <charconv>
#include <sstream>

namespace vbraid {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int_exact(std::string_view s, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" +
                     std::string(s) + "'");
  }
  return value;
}

int parse_header(const std::vector<std::string>& tokens) {
  if (tokens.empty() || !tokens.front().starts_with("n=")) {
    throw ParseError("missing 'n=<int>' header");
  }
  return parse_int_exact(std::string_view(tokens.front()).substr(2), "strand count");
}

// a[i,j] optionally followed by ^-1
GeneratorLetter parse_letter_token(const std::string& tok) {
  std::string_view s = tok;
  if (!s.starts_with("a[")) {
    throw ParseError("bad letter token '" + tok + "'");
  }
  s.remove_prefix(2);
  const auto comma = s.find(',');
  const auto close = s.find(']');
  if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
    throw ParseError("bad letter token '" + tok + "'");
  }
  GeneratorLetter g;
  g.over = parse_int_exact(s.substr(0, comma), "strand index");
  g.under = parse_int_exact(s.substr(comma + 1, close - comma - 1), "strand index");
  const std::string_view rest = s.substr(close + 1);
  if (rest.empty()) {
    g.exponent = +1;
  } else if (rest == "^-1") {
    g.exponent = -1;
  } else {
    throw ParseError("bad exponent in token '" + tok + "'");
  }
  return g;
}

DiagramLetter parse_diagram_token(const std::string& tok) {
  std::string_view s = tok;
  if (s.empty() || (s.front() != 's' && s.front() != 'v')) {
    throw ParseError("bad diagram token '" + tok + "'");
  }
  const bool virt = s.front() == 'v';
  s.remove_prefix(1);
  std::string_view digits = s;
  int exponent = virt ? 0 : +1;
  if (const auto caret = s.find('^'); caret != std::string_view::npos) {
    if (virt || s.substr(caret) != "^-1") {
      throw ParseError("bad exponent in token '" + tok + "'");
    }
    exponent = -1;
    digits = s.substr(0, caret);
  }
  return {parse_int_exact(digits, "crossing position"), exponent};
}

}  // namespace

std::string render_letter(const GeneratorLetter& g) {
  std::string out = "a[" + std::to_string(g.over) + "," + std::to_string(g.under) + "]";
  if (g.exponent < 0) out += "^-1";
  return out;
}

std::string render_word(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.n);
  for (const GeneratorLetter& g : w.letters) {
    out += " " + render_letter(g);
  }
  return out;
}

BraidWord parse_word(std::string_view text) {
  const auto tokens = tokenize(text);
  BraidWord w;
  w.n = parse_header(tokens);
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    w.letters.push_back(parse_letter_token(tokens[t]));
  }
  try {
    w.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid word: ") + e.what());
  }
  return w;
}

std::string render_diagram_letter(const DiagramLetter& l) {
  if (l.is_virtual()) return "v" + std::to_string(l.pos);
  std::string out = "s" + std::to_string(l.pos);
  if (l.exponent < 0) out += "^-1";
  return out;
}

std::string render_diagram(const DiagramWord& dw) {
  std::string out = "n=" + std::to_string(dw.n);
  for (const DiagramLetter& l : dw.letters) {
    out += " " + render_diagram_letter(l);
  }
  return out;
}

DiagramWord parse_diagram(std::string_view text) {
  const auto tokens = tokenize(text);
  DiagramWord dw;
  dw.n = parse_header(tokens);
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    dw.letters.push_back(parse_diagram_token(tokens[t]));
  }
  try {
    dw.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid diagram: ") + e.what());
  }
  return dw;
}

std::string render_sign_set(const SignSet& s) {
  std::string out = "n=" + std::to_string(s.n()) + " ";
  for (int i = 1; i <= s.n(); ++i) {
    for (int j = i + 1; j <= s.n(); ++j) {
      out += s.sign(i, j) > 0 ? '+' : '-';
    }
  }
  return out;
}

SignSet parse_sign_set(std::string_view text) {
  const auto tokens = tokenize(text);
  const int n = parse_header(tokens);
  if (n < 2) {
    throw ParseError("invalid sign set: strand count must be at least 2");
  }
  if (tokens.size() != 2) {
    throw ParseError("expected exactly one sign token after the header");
  }
  const std::string& signs = tokens[1];
  if (signs.size() != SignSet::pair_count(n)) {
    throw ParseError("expected " + std::to_string(SignSet::pair_count(n)) +
                     " signs for n=" + std::to_string(n) + ", got " +
                     std::to_string(signs.size()));
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == '+') {
      bits |= std::uint64_t{1} << k;
    } else if (signs[k] != '-') {
      throw ParseError("sign characters must be + or -");
    }
  }
  return SignSet::from_bits(n, bits);
}

std::string render_step(const RewriteStep& step) {
  std::string out = std::string(rule_name(step.rule)) + "@" + std::to_string(step.pos + 1);
  if (step.letter) out += ":" + render_letter(*step.letter);
  return out;
}

std::string render_trace(const std::vector<RewriteStep>& trace) {
  std::string out;
  for (const RewriteStep& s : trace) {
    if (!out.empty()) out += " ";
    out += render_step(s);
  }
  return out;
}

std::string_view mode_name(GroupMode mode) {
  switch (mode) {
    case GroupMode::pbn: return "pbn";
    case GroupMode::tilde: return "tilde";
    case GroupMode::gn2: return "gn2";
  }
  return "?";
}

GroupMode mode_from_name(std::string_view name) {
  if (name == "pbn") return GroupMode::pbn;
  if (name == "tilde") return GroupMode::tilde;
  if (name == "gn2") return GroupMode::gn2;
  throw ParseError("unknown group mode '" + std::string(name) + "', expected pbn, tilde, or gn2");
}

}  // namespace vbraid
