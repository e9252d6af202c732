#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eta/word.hpp"

namespace eta {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Grammar:
//   presentation := '<' [ident {',' ident}] '|' [relator {',' relator}] '>'
//   relator      := word ['=' word]
//   word         := factor {factor} | '1'
//   factor       := atom {'^' exponent}
//   atom         := generator | '(' word ')' | '[' word ',' word {',' word} ']'
//   exponent     := ['-'] digits | atom          (x^y is y^-1 x y)
// Generators inside words are matched by longest declared name, so with
// generators a, b the text "ab" reads as a b. Commutators are left-normed:
// [x,y] = x^-1 y^-1 x y and [x,y,z] = [[x,y],z].
Presentation parse_presentation(std::string_view text);

std::string render_word(const Word& w, const std::vector<std::string>& names);
std::string render_presentation(const Presentation& p);

// Every letter refers to a declared generator.
void validate(const Presentation& p);

}  // namespace eta
