#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "wallkit/errors.hpp"
#include "wallkit/presentation.hpp"

namespace wallkit {

namespace {

constexpr std::string_view kSuperscriptInverse = "⁻¹";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> names, std::size_t line)
      : text_(text), names_(names), line_(line) {}

  Word parse() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in word '" + std::string(text_) + "'", line_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  Word parse_sequence() {
    Word out;
    while (!at_end() && text_[pos_] != ')') {
      Word item = parse_item();
      out.insert(out.end(), item.begin(), item.end());
    }
    return out;
  }

  Word parse_item() {
    Word atom = parse_atom();
    for (;;) {
      skip_space();
      if (text_.substr(pos_).starts_with(kSuperscriptInverse)) {
        pos_ += kSuperscriptInverse.size();
        atom = inverse(atom);
      } else if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        atom = power(atom, parse_exponent());
      } else {
        return atom;
      }
    }
  }

  long parse_exponent() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail("bad exponent");
    }
    if (v > 1000000 || v < -1000000) fail("exponent out of range");
    return v;
  }

  Word parse_atom() {
    skip_space();
    if (text_[pos_] == '(') {
      ++pos_;
      Word inner = parse_sequence();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    std::size_t best = names_.size();
    std::size_t best_len = 0;
    auto rest = text_.substr(pos_);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].size() > best_len && rest.starts_with(names_[i])) {
        best = i;
        best_len = names_[i].size();
      }
    }
    if (best == names_.size()) {
      if (rest.front() == '1') {
        ++pos_;
        return {};
      }
      std::size_t end = 0;
      while (end < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[end])) ||
                                   rest[end] == '_' || rest[end] == '\'')) {
        ++end;
      }
      if (end == 0) fail("unexpected '" + std::string(1, rest.front()) + "'");
      throw UnknownGenerator("unknown generator '" + std::string(rest.substr(0, end)) + "'", line_);
    }
    pos_ += best_len;
    return Word{Letter(static_cast<std::uint32_t>(best), false)};
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '^' ||
        c == '#' || c == ':') {
      return false;
    }
  }
  return !(s == "1");
}

Word parse_word_at(std::string_view text, std::span<const std::string> generators,
                   std::size_t line) {
  return WordParser(text, generators, line).parse();
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  return parse_word_at(text, generators, 0);
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<Word> relators;
  Rational lambda(1, 6);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no);
    auto key = trim(line.substr(0, colon));
    auto value = trim(line.substr(colon + 1));
    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate gens line", line_no);
      have_gens = true;
      std::istringstream in{std::string(value)};
      std::set<std::string> seen;
      for (std::string name; in >> name;) {
        if (!valid_name(name)) throw ParseError("bad generator name '" + name + "'", line_no);
        if (!seen.insert(name).second) {
          throw ParseError("duplicate generator '" + name + "'", line_no);
        }
        gens.push_back(name);
      }
    } else if (key == "rel") {
      if (!have_gens) throw ParseError("rel before gens", line_no);
      Word w = parse_word_at(value, gens, line_no);
      if (cyclic_reduce(w).core.empty()) {
        throw EmptyRelator("line " + std::to_string(line_no) + ": relator '" +
                           std::string(value) + "' reduces to the empty word");
      }
      relators.push_back(std::move(w));
    } else if (key == "lambda") {
      try {
        lambda = parse_rational(value);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      if (lambda <= 0 || lambda >= 1) throw ParseError("lambda must lie in (0,1)", line_no);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  if (!have_gens) throw ParseError("missing gens line");
  return Presentation(std::move(gens), std::move(relators), lambda);
}

}  // namespace wallkit
