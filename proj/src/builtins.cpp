#include "eta/builtins.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "eta/error.hpp"

namespace eta {

namespace {

std::string power_name(const char* sym, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return std::string(sym) + "^" + std::to_string(k);
}

// Table over all permutations in `perms`, product left to right.
FiniteGroup perm_table_group(std::string name, std::vector<std::vector<Point>> perms) {
  std::sort(perms.begin(), perms.end());
  const std::size_t n = perms.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Point> c(perms[a].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[b][perms[a][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), c);
      if (it == perms.end() || *it != c) throw InternalError("permutation set not closed");
      table[a][b] = static_cast<Element>(it - perms.begin());
    }
  }
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(Perm(p).to_cycle_string());
  return FiniteGroup(std::move(name), std::move(names), std::move(table));
}

bool is_even(const std::vector<Point>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

std::vector<std::vector<Point>> all_perms(std::size_t n, bool even_only) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::vector<std::vector<Point>> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return 0;
  return v;
}

FiniteGroup simple_builtin(std::string_view name) {
  if (name == "Q8") return quaternion_group();
  if (name == "V4") return direct_product(cyclic_group(2), cyclic_group(2), "V4");
  if (name.size() >= 2) {
    const std::size_t k = parse_size(name.substr(1));
    if (k > 0) {
      switch (name[0]) {
        case 'C': return cyclic_group(k);
        case 'D':
          if (k >= 2 && k % 2 == 0) return dihedral_group(k);
          break;
        case 'S':
          if (k <= 5) return symmetric_group(k);
          break;
        case 'A':
          if (k <= 5) return alternating_group(k);
          break;
      }
    }
  }
  throw Error("unknown builtin group '" + std::string(name) + "'");
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0 || n > 4096) throw Error("cyclic group order out of range");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : power_name("a", a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup("C" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0 || order > 4096) throw Error("dihedral group order must be even");
  const std::size_t n = order / 2;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, a = x / n;
    std::string nm = power_name("r", i);
    if (a == 1) nm += nm.empty() ? "s" : " s";
    names.push_back(nm.empty() ? "e" : nm);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, b = y / n;
      const std::size_t r = a == 0 ? (i + k) % n : (i + n - k) % n;
      table[x][y] = static_cast<Element>(((a + b) % 2) * n + r);
    }
  }
  return FiniteGroup("D" + std::to_string(order), std::move(names), std::move(table));
}

FiniteGroup quaternion_group() {
  // unit u in {1,i,j,k} as 0..3; element index 2u + (negative ? 1 : 0)
  static constexpr std::array<std::array<int, 4>, 4> unit_prod{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> sign{{
      {0, 0, 0, 0},
      {0, 1, 0, 1},  // i*i = -1, i*k = -j
      {0, 1, 1, 0},  // j*i = -k, j*j = -1
      {0, 0, 1, 1},  // k*j = -i, k*k = -1
  }};
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2) ^ (y % 2) ^ sign[u][v];
      table[x][y] = static_cast<Element>(2 * unit_prod[u][v] + s);
    }
  }
  return FiniteGroup("Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, std::move(table));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error("symmetric group degree out of range");
  return perm_table_group("S" + std::to_string(n), all_perms(n, false));
}

FiniteGroup alternating_group(std::size_t n) {
  if (n == 0 || n > 5) throw Error("alternating group degree out of range");
  return perm_table_group("A" + std::to_string(n), all_perms(n, true));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > 4096) throw Error("direct product too large");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("(" + a.element_names()[x / nb] + "," + b.element_names()[x % nb] + ")");
    for (std::size_t y = 0; y < n; ++y) {
      table[x][y] = static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
    }
  }
  if (name.empty()) name = a.name() + "x" + b.name();
  return FiniteGroup(std::move(name), std::move(names), std::move(table));
}

FiniteGroup builtin_group(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = name.find('x', start);
    parts.push_back(name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  FiniteGroup g = simple_builtin(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, simple_builtin(parts[i]));
  return g;
}

std::vector<std::string> builtin_examples() {
  return {"C1", "C2", "C6", "V4", "C2xC4", "D8", "Q8", "S3", "A4"};
}

}  // namespace eta
