#include "eta/presentation.hpp"

#include <cctype>
#include <limits>

#include "eta/error.hpp"

namespace eta {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    expect('<');
    skip_space();
    if (peek() != '|') {
      while (true) {
        skip_space();
        const std::size_t line = line_, column = column_;
        std::string name = identifier();
        if (name.empty()) fail("expected a generator name");
        for (const auto& g : p.generators) {
          if (g == name) throw ParseError("duplicate generator '" + name + "'", line, column);
        }
        p.generators.push_back(std::move(name));
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('|');
    generators_ = &p.generators;
    skip_space();
    if (peek() != '>') {
      while (true) {
        p.relators.push_back(relator());
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('>');
    skip_space();
    if (!at_end()) fail("unexpected text after '>'");
    return p;
  }

 private:
  Word relator() {
    Word lhs = word();
    skip_space();
    if (peek() == '=') {
      advance();
      Word rhs = word();
      append(lhs, inverse(rhs));
    }
    return lhs;
  }

  Word word() {
    skip_space();
    if (peek() == '1') {
      advance();
      return {};
    }
    Word w;
    bool any = false;
    while (true) {
      skip_space();
      const char c = peek();
      if (!(is_ident_start(c) || c == '(' || c == '[')) break;
      append(w, factor());
      any = true;
    }
    if (!any) fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
    return w;
  }

  Word factor() {
    Word base = atom();
    while (true) {
      skip_space();
      if (peek() != '^') break;
      advance();
      skip_space();
      const char c = peek();
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        base = power(base, exponent());
      } else if (is_ident_start(c) || c == '(' || c == '[') {
        Word by = atom();
        Word conj = inverse(by);
        append(conj, base);
        append(conj, by);
        base = std::move(conj);
      } else {
        fail("malformed exponent");
      }
    }
    return base;
  }

  long long exponent() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("exponent too large");
      advance();
    }
    return negative ? -value : value;
  }

  Word atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      advance();
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      advance();
      Word acc = word();
      skip_space();
      if (peek() != ',') fail("commutator needs at least two entries");
      while (peek() == ',') {
        advance();
        acc = commutator(acc, word());
        skip_space();
      }
      expect(']');
      return acc;
    }
    return generator_run();
  }

  // Identifier characters split into declared generator names.
  Word generator_run() {
    const std::size_t line = line_, column = column_;
    const std::size_t start = pos_;
    std::size_t end = start;
    while (end < text_.size() && is_ident_char(text_[end])) ++end;
    if (end == start) fail("expected a generator");
    Word w;
    std::size_t i = start;
    while (i < end) {
      std::size_t best_len = 0;
      std::uint32_t best = 0;
      for (std::size_t g = 0; g < generators_->size(); ++g) {
        const std::string& name = (*generators_)[g];
        if (name.size() > best_len && name.size() <= end - i &&
            text_.compare(i, name.size(), name) == 0) {
          best_len = name.size();
          best = static_cast<std::uint32_t>(g);
        }
      }
      if (best_len == 0) {
        throw ParseError("unknown symbol '" + std::string(text_.substr(start, end - start)) + "'",
                         line, column + (i - start));
      }
      w.push_back(Letter{best, false});
      i += best_len;
    }
    while (pos_ < end) advance();
    return w;
  }

  std::string identifier() {
    std::string s;
    if (!is_ident_start(peek())) return s;
    while (is_ident_char(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) {
      if (c == ')' || c == ']' || c == '>') fail(std::string("unbalanced brackets: expected '") + c + "'");
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  const std::vector<std::string>* generators_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long run = static_cast<long long>(j - i);
    if (!out.empty()) out += ' ';
    if (w[i].generator >= names.size()) throw Error("letter outside generator range");
    out += names[w[i].generator];
    if (w[i].inverse) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += '^' + std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i > 0) out += ", ";
    out += p.generators[i];
  }
  out += p.generators.empty() ? "| " : " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i > 0) out += ", ";
    out += render_word(p.relators[i], p.generators);
  }
  out += p.relators.empty() ? ">" : " >";
  return out;
}

void validate(const Presentation& p) {
  for (const Word& r : p.relators) {
    for (const Letter& l : r) {
      if (l.generator >= p.generators.size()) {
        throw Error("relator mentions undeclared generator " + std::to_string(l.generator));
      }
    }
  }
}

}  // namespace eta
