#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eta/perm.hpp"

namespace eta {

// One generator or its inverse.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
// Free reduction followed by cancellation of matching ends.
Word cyclic_reduce(const Word& w);
void append(Word& w, const Word& tail);
Word power(const Word& w, long long exponent);
Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b

// Exponent sum of each generator (abelianized word).
std::vector<long long> exponent_sums(const Word& w, std::size_t num_generators);

// Evaluates a word over permutations; inverses[i] must be generators[i]^-1.
Perm evaluate(const Word& w, std::span<const Perm> generators, std::span<const Perm> inverses,
              std::size_t degree);

}  // namespace eta
