#include "eta/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eta/error.hpp"

namespace eta {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix shapes do not match for multiplication");
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
    }
  }
  return r;
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m.at(i, j) = v;
      }
    }
    previous = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(target, j) += factor * m.at(source, j);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, target) += factor * m.at(i, source);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool finished = false;
    while (true) {
      // Pivot: least absolute value, first occurrence in row-major order.
      std::size_t pr = rows;
      std::size_t pc = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const BigInt& x = a.at(i, j);
          if (x == 0) continue;
          if (pr == rows || abs(x) < best) {
            best = abs(x);
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        finished = true;
        break;
      }
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        BigInt q = a.at(i, t) / a.at(t, t);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        BigInt q = a.at(t, j) / a.at(t, t);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (finished) break;
    if (a.at(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a.at(t, j) = -a.at(t, j);
      for (std::size_t j = 0; j < rows; ++j) u.at(t, j) = -u.at(t, j);
    }
  }

  SmithForm out;
  out.diagonal.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = a.at(i, i);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw Error("abelian group order overflows 64 bits");
  return a * b;
}

}  // namespace

AbelianInvariants::AbelianInvariants(std::vector<std::uint64_t> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error("invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw Error("invariant factors must form a divisor chain");
    }
  }
}

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  // Primary decomposition, then largest prime powers go to the last factor.
  std::map<std::uint64_t, std::vector<std::uint64_t>> powers;
  for (std::uint64_t n : orders) {
    if (n == 0) throw Error("infinite cyclic factor in a finite abelian group");
    for (std::uint64_t p : prime_divisors(n)) {
      std::uint64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
  }
  std::size_t k = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    k = std::max(k, qs.size());
  }
  std::vector<std::uint64_t> factors(k, 1);
  for (const auto& [p, qs] : powers) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      factors[k - 1 - i] = checked_mul(factors[k - 1 - i], qs[i]);
    }
  }
  return AbelianInvariants(std::move(factors));
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t n = 1;
  for (std::uint64_t d : factors_) n = checked_mul(n, d);
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(factors_[i]);
  }
  return s + "]";
}

AbelianInvariants z_tensor(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<std::uint64_t> orders;
  for (std::uint64_t d : a.factors()) {
    for (std::uint64_t e : b.factors()) orders.push_back(std::gcd(d, e));
  }
  return AbelianInvariants::from_cyclic_orders(orders);
}

AbelianInvariants delta_of_abelian(const AbelianInvariants& a) {
  const auto& n = a.factors();
  std::vector<std::uint64_t> orders(n.begin(), n.end());
  for (std::size_t j = 0; j < n.size(); ++j) {
    for (std::size_t k = j + 1; k < n.size(); ++k) orders.push_back(std::gcd(n[j], n[k]));
  }
  return AbelianInvariants::from_cyclic_orders(orders);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<std::uint64_t> pi_set(std::uint64_t group_order) {
  if (group_order == 0) throw Error("pi set of a group of order 0");
  return prime_divisors(group_order);
}

std::vector<std::uint64_t> pi_set(const AbelianInvariants& a) {
  // The largest invariant factor is the exponent.
  return a.is_trivial() ? std::vector<std::uint64_t>{} : prime_divisors(a.factors().back());
}

namespace {

using Wide = __int128;

long long mod_floor(Wide x, long long m) {
  Wide r = x % m;
  if (r < 0) r += m;
  return static_cast<long long>(r);
}

// x * a + y * b = g >= 0
long long extended_gcd(long long a, long long b, long long& x, long long& y) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

}  // namespace

AbelianInvariants invariants_from_relations(const std::vector<std::vector<long long>>& rows,
                                            std::size_t num_generators, std::uint64_t modulus) {
  if (modulus == 0) throw Error("relation lattice modulus must be positive");
  if (modulus > (1ULL << 62)) throw Error("relation lattice modulus too large");
  const auto m = static_cast<long long>(modulus);
  const std::size_t k = num_generators;
  // Upper-triangular basis; pivots stay in (0, m] and divide m.
  std::vector<std::vector<long long>> basis(k, std::vector<long long>(k, 0));
  for (std::size_t j = 0; j < k; ++j) basis[j][j] = m;

  for (const auto& input : rows) {
    if (input.size() != k) throw Error("relation row has the wrong length");
    std::vector<long long> r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = mod_floor(input[j], m);
    for (std::size_t j = 0; j < k; ++j) {
      if (r[j] == 0) continue;
      auto& b = basis[j];
      long long x = 0, y = 0;
      const long long g = extended_gcd(b[j], r[j], x, y);
      const long long bj = b[j] / g;
      const long long rj = r[j] / g;
      std::vector<long long> nb(k, 0), nr(k, 0);
      for (std::size_t c = j; c < k; ++c) {
        nb[c] = mod_floor(static_cast<Wide>(x) * b[c] + static_cast<Wide>(y) * r[c], m);
        nr[c] = mod_floor(static_cast<Wide>(rj) * b[c] - static_cast<Wide>(bj) * r[c], m);
      }
      nb[j] = g;  // g divides m, keep it off zero
      nr[j] = 0;
      b = std::move(nb);
      r = std::move(nr);
    }
  }

  IntMatrix lattice(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) lattice.at(i, j) = static_cast<long>(basis[i][j]);
  }
  std::vector<std::uint64_t> factors;
  for (const BigInt& d : smith_normal_form(lattice).diagonal) {
    if (d > 1) factors.push_back(d.get_ui());
  }
  return AbelianInvariants(std::move(factors));
}

}  // namespace eta
