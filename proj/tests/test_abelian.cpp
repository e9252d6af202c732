#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eta/abelian.hpp"
#include "eta/error.hpp"
#include "oracles.hpp"

using namespace eta;

namespace {

using Factors = std::vector<std::uint64_t>;

std::vector<long long> diag_ll(const SmithForm& s) {
  std::vector<long long> out;
  for (const BigInt& d : s.diagonal) out.push_back(d.get_si());
  return out;
}

IntMatrix diagonal_matrix(const SmithForm& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) d.at(i, i) = s.diagonal[i];
  return d;
}

void check_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.left * m * s.right == diagonal_matrix(s, m.rows(), m.cols()));
  CHECK(abs(determinant(s.left)) == 1);
  CHECK(abs(determinant(s.right)) == 1);
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    CHECK(s.diagonal[i] >= 0);
    if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    else CHECK(s.diagonal[i + 1] == 0);
  }
}

AbelianInvariants inv(Factors f) { return AbelianInvariants::from_cyclic_orders(f); }

Factors random_orders(std::mt19937& rng, int max_len, int max_n) {
  std::uniform_int_distribution<int> len(0, max_len), val(1, max_n);
  Factors out(len(rng));
  for (auto& x : out) x = val(rng);
  return out;
}

}  // namespace

TEST_CASE("smith form examples") {
  CHECK(diag_ll(smith_normal_form(IntMatrix::identity(2))) == std::vector<long long>{1, 1});
  CHECK(diag_ll(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}))) == std::vector<long long>{1, 6});
  CHECK(diag_ll(smith_normal_form(IntMatrix::from_rows({{0}}))) == std::vector<long long>{0});
  CHECK(diag_ll(smith_normal_form(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}))) ==
        std::vector<long long>{2, 6, 12});
  check_smith(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  check_smith(IntMatrix::from_rows({{0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("smith form transforms on random matrices") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-30, 30), dim(1, 5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = t % 3 == 0 ? entry(rng) / 7 : entry(rng);
    const IntMatrix m = IntMatrix::from_rows(rows);
    check_smith(m);
    // diagonal agrees with the plain elimination oracle on non-zero entries
    std::vector<long long> got;
    for (const BigInt& d : smith_normal_form(m).diagonal)
      if (d != 0) got.push_back(d.get_si());
    CHECK(got == oracle::smith_diagonal(rows));
  }
}

TEST_CASE("invariant factors") {
  CHECK(inv({6, 4}).factors() == Factors{2, 12});
  CHECK(inv({1, 1}).factors().empty());
  CHECK(inv({2, 2, 4}).order() == 16);
  CHECK(inv({12}).to_string() == "[12]");
  CHECK_THROWS_AS(AbelianInvariants(Factors{4, 2}), Error);
  CHECK_THROWS_AS(AbelianInvariants(Factors{1}), Error);
  CHECK_THROWS_AS(inv({0}), Error);
}

TEST_CASE("z-tensor examples") {
  CHECK(z_tensor(inv({2}), inv({2})).factors() == Factors{2});
  CHECK(z_tensor(inv({6}), inv({4})).factors() == Factors{2});
  CHECK(z_tensor(inv({}), inv({5, 5})).factors().empty());
  CHECK(z_tensor(inv({2, 6}), inv({2})).factors() == Factors{2, 2});
  CHECK(z_tensor(inv({2, 2}), inv({2, 2})).factors() == Factors{2, 2, 2, 2});
}

TEST_CASE("z-tensor agrees with the relation-matrix oracle") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Factors a = random_orders(rng, 3, 12), b = random_orders(rng, 3, 12);
    CHECK(z_tensor(inv(a), inv(b)).factors() == oracle::z_tensor(a, b));
  }
}

TEST_CASE("z-tensor is commutative and associative") {
  std::mt19937 rng(12);
  for (int t = 0; t < 150; ++t) {
    const auto a = inv(random_orders(rng, 3, 16)), b = inv(random_orders(rng, 3, 16)),
               c = inv(random_orders(rng, 2, 16));
    CHECK(z_tensor(a, b) == z_tensor(b, a));
    CHECK(z_tensor(z_tensor(a, b), c) == z_tensor(a, z_tensor(b, c)));
  }
}

TEST_CASE("diagonal formula examples") {
  CHECK(delta_of_abelian(inv({7})).factors() == Factors{7});
  CHECK(delta_of_abelian(inv({2, 4})).factors() == Factors{2, 2, 4});
  CHECK(delta_of_abelian(inv({})).factors().empty());
  CHECK(delta_of_abelian(inv({2, 2, 2})).factors() == Factors{2, 2, 2, 2, 2, 2});
}

TEST_CASE("diagonal formula against the bilinear oracle") {
  const std::vector<Factors> groups{{2}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {4, 4}, {2, 2, 2}, {2, 8}, {3, 6}};
  for (const Factors& g : groups) {
    const auto brute = oracle::delta_bilinear(g);
    const auto formula = delta_of_abelian(inv(g));
    CHECK(brute.elements.size() == formula.order());
    CHECK(brute.invariants() == formula.factors());
  }
}

TEST_CASE("pi sets") {
  CHECK(pi_set(1).empty());
  CHECK(pi_set(inv({6})) == Factors{2, 3});
  CHECK(pi_set(12) == Factors{2, 3});
  CHECK(prime_divisors(97) == Factors{97});
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto a = inv(random_orders(rng, 3, 20));
    CHECK(pi_set(delta_of_abelian(a)) == pi_set(a));
  }
}

TEST_CASE("invariants from relation rows") {
  // <a, b | a^4, b^6, a^2 b^3>
  // 2x2 minors 24, 12, -12 with coprime entries: cyclic of order 12
  CHECK(invariants_from_relations({{4, 0}, {0, 6}, {2, 3}}, 2, 12).factors() == Factors{12});
  CHECK(invariants_from_relations({{4, 0}, {0, 6}}, 2, 12).factors() == Factors{2, 12});
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::vector<long long>> rows{{12, 0, 0}, {0, 12, 0}, {0, 0, 12}};
    for (int k = 0; k < 3; ++k) rows.push_back({e(rng), e(rng), e(rng)});
    CHECK(invariants_from_relations(rows, 3, 12).factors() == oracle::cokernel(rows, 3));
  }
  CHECK(invariants_from_relations({}, 0, 1).factors().empty());
}
