#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eta {

using BigInt = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt determinant(const IntMatrix& m);

// left * input * right = diag(diagonal), padded with zeros to input's shape.
// diagonal[i] divides diagonal[i+1]; all entries non-negative.
struct SmithForm {
  std::vector<BigInt> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Finite abelian group as its invariant factors d1 | d2 | ... | dk, each > 1.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;
  // Validates a divisor chain.
  explicit AbelianInvariants(std::vector<std::uint64_t> factors);
  // Any cyclic decomposition; orders of 1 are ignored, 0 is rejected.
  static AbelianInvariants from_cyclic_orders(const std::vector<std::uint64_t>& orders);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::uint64_t order() const;
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

AbelianInvariants z_tensor(const AbelianInvariants& a, const AbelianInvariants& b);

// Product of the C_{n_i} and of C_{gcd(n_j, n_k)} for j < k, with the n_i
// taken from the divisor chain of `a`.
AbelianInvariants delta_of_abelian(const AbelianInvariants& a);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> pi_set(std::uint64_t group_order);
std::vector<std::uint64_t> pi_set(const AbelianInvariants& a);

// Invariants of Z^k modulo the rows (exponent vectors of relators). The
// lattice must contain modulus * Z^k, which holds whenever the quotient is
// finite of exponent dividing modulus.
AbelianInvariants invariants_from_relations(const std::vector<std::vector<long long>>& rows,
                                            std::size_t num_generators, std::uint64_t modulus);

}  // namespace eta
