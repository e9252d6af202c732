#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eta/finite_group.hpp"

namespace eta {

// Element orders (pinned, reports depend on them):
//   Cn       a^k at index k, k = 0..n-1
//   D2n      r^i s^j at index j*n + i, (r^i s^a)(r^k s^b) = r^(i + (-1)^a k) s^(a+b)
//   Q8       1, -1, i, -i, j, -j, k, -k
//   S3, A4   (even) permutations of {0..n-1} in lexicographic order of image lists,
//            multiplied left to right
//   AxB      (a, b) at index a*|B| + b; "CmxCnxCk" nests to the left
//   V4       C2xC2
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t order);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = "");

// Throws eta::Error for unknown names.
FiniteGroup builtin_group(std::string_view name);
// Representative names, used in help text and the corpus.
std::vector<std::string> builtin_examples();

}  // namespace eta
