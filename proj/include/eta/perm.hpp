#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace eta {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1}. Products act left to right:
// (p * q)(x) = q(p(x)), matching the right-action notation x^g.
class Perm {
 public:
  Perm() : images_{0} {}
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  bool is_identity() const;

  // Smallest moved point, or degree() when this is the identity.
  Point first_moved() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b
Perm conjugate(const Perm& x, const Perm& by);  // by^-1 x by
Perm power(const Perm& p, long long exponent);
std::uint64_t element_order(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace eta
