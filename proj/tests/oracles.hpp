// Independent reference computations used by the tests. Nothing here calls
// the library's group algorithms; they are brute force on purpose.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

// left-to-right product, matching the library: (p*q)(x) = q(p(x))
inline Images mul(const Images& p, const Images& q) {
  Images r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

inline std::set<Images> closure(const std::vector<Images>& gens, std::size_t degree) {
  Images id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Images> seen{id};
  std::vector<Images> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Images& g : gens) {
      Images y = mul(queue[head], g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

// Diagonal of a Smith form by plain gcd elimination on long long entries.
// Small inputs only.
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<long long> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    // move a non-zero entry of least absolute value to (t,t)
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) pr = i, pc = j;
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      const long long q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
      clean = clean && a[i][t] == 0;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      const long long q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      clean = clean && a[t][j] == 0;
    }
    if (!clean) continue;
    // divisibility: fold a row that breaks it into row t
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

// Invariant factors (> 1) of Z^k / rows.
inline std::vector<std::uint64_t> cokernel(const std::vector<std::vector<long long>>& rows, std::size_t k) {
  std::vector<long long> d = smith_diagonal(rows);
  std::vector<std::uint64_t> out;
  for (std::size_t i = d.size(); i < k; ++i) out.push_back(0);  // free part
  for (long long x : d)
    if (x > 1) out.push_back(static_cast<std::uint64_t>(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Z-tensor of finite abelian groups given by any cyclic orders: generators
// e_ij with a_i e_ij = 0 and b_j e_ij = 0.
inline std::vector<std::uint64_t> z_tensor(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t k = a.size() * b.size();
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::vector<long long> r(k, 0), s(k, 0);
      r[i * b.size() + j] = static_cast<long long>(a[i]);
      s[i * b.size() + j] = static_cast<long long>(b[j]);
      rows.push_back(r);
      rows.push_back(s);
    }
  if (k == 0) return {};
  return cokernel(rows, k);
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// A finite abelian group given as an explicit set of vectors in
// prod C_{mod[c]}; invariants recovered from the sizes of the p^k-torsion.
struct ExplicitAbelian {
  std::vector<std::uint64_t> mod;
  std::set<std::vector<std::uint64_t>> elements;

  std::uint64_t order_of(const std::vector<std::uint64_t>& v) const {
    std::uint64_t o = 1;
    for (std::size_t c = 0; c < v.size(); ++c) {
      const std::uint64_t oc = mod[c] / std::gcd(mod[c], v[c]);
      o = std::lcm(o, oc);
    }
    return o;
  }

  // Invariant factors, ascending divisor chain.
  std::vector<std::uint64_t> invariants() const {
    std::map<std::uint64_t, std::vector<std::uint64_t>> primary;  // p -> exponents of cyclic p-parts
    std::uint64_t n = elements.size();
    for (std::uint64_t p : primes_of(n)) {
      // t_k = #{x : p^k x = 0}; number of cyclic factors of order >= p^k is log_p(t_k / t_{k-1})
      std::vector<std::uint64_t> t{1};
      std::uint64_t pk = 1;
      while (true) {
        pk *= p;
        std::uint64_t count = 0;
        for (const auto& v : elements)
          if (pk % order_of(v) == 0) ++count;
        t.push_back(count);
        if (count == t[t.size() - 2] && t.size() > 2) break;
        if (pk > n) break;
      }
      std::vector<std::uint64_t> at_least;  // at_least[k-1] = #factors of order >= p^k
      for (std::size_t k = 1; k < t.size(); ++k) {
        std::uint64_t ratio = t[k] / t[k - 1], e = 0;
        while (ratio > 1) ratio /= p, ++e;
        at_least.push_back(e);
      }
      for (std::size_t k = 0; k < at_least.size(); ++k) {
        const std::uint64_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (std::uint64_t c = next; c < at_least[k]; ++c) primary[p].push_back(k + 1);
      }
    }
    // combine primary parts into a divisor chain
    std::size_t len = 0;
    for (auto& [p, v] : primary) {
      std::sort(v.rbegin(), v.rend());
      len = std::max(len, v.size());
    }
    std::vector<std::uint64_t> out(len, 1);
    for (auto& [p, v] : primary)
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t q = 1;
        for (std::uint64_t e = 0; e < v[i]; ++e) q *= p;
        out[len - 1 - i] *= q;
      }
    return out;
  }
};

inline ExplicitAbelian closure(const std::vector<std::uint64_t>& mod, const std::vector<std::vector<std::uint64_t>>& gens) {
  ExplicitAbelian g{mod, {}};
  std::vector<std::uint64_t> zero(mod.size(), 0);
  g.elements.insert(zero);
  std::vector<std::vector<std::uint64_t>> queue{zero};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& s : gens) {
      std::vector<std::uint64_t> y = queue[head];
      for (std::size_t c = 0; c < y.size(); ++c) y[c] = (y[c] + s[c]) % mod[c];
      if (g.elements.insert(y).second) queue.push_back(y);
    }
  return g;
}

// Delta of an abelian group prod C_{n_i}, computed inside its Z-tensor square
// prod_{i,j} C_gcd(n_i, n_j) as the subgroup generated by all g (x) g.
inline ExplicitAbelian delta_bilinear(const std::vector<std::uint64_t>& n) {
  const std::size_t r = n.size();
  std::vector<std::uint64_t> mod;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) mod.push_back(std::gcd(n[i], n[j]));
  std::vector<std::vector<std::uint64_t>> gens;
  std::vector<std::uint64_t> x(r, 0);
  while (true) {
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) v.push_back((x[i] * x[j]) % std::gcd(n[i], n[j]));
    gens.push_back(v);
    std::size_t c = 0;
    while (c < r && ++x[c] == n[c]) x[c++] = 0;
    if (c == r) break;
  }
  return closure(mod, gens);
}

}  // namespace oracle
