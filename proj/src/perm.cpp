#include "eta/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eta/error.hpp"

namespace eta {

Perm::Perm(std::size_t degree) : images_(degree == 0 ? 1 : degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    images_.push_back(0);
    return;
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error("permutation images are not a bijection on 0.." +
                  std::to_string(images_.size() - 1));
    }
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<Point>> cycles) {
  Perm p(degree);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    const Point* c = cycle.begin();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = c[i];
      Point to = c[(i + 1) % cycle.size()];
      if (from >= p.degree() || to >= p.degree()) throw Error("cycle point out of range");
      p.images_[from] = to;
    }
  }
  return Perm(std::vector<Point>(p.images_));
}

Perm Perm::operator*(const Perm& q) const {
  if (degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(degree()) +
                         " and " + std::to_string(q.degree()));
  }
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = q.images_[images_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Point Perm::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return static_cast<Point>(x);
  }
  return static_cast<Point>(images_.size());
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!done[x]) {
      if (!first) out << ' ';
      out << x;
      first = false;
      done[x] = true;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm conjugate(const Perm& x, const Perm& by) { return by.inverse() * x * by; }

Perm power(const Perm& p, long long exponent) {
  Perm base = exponent < 0 ? p.inverse() : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Perm result(p.degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Perm& p) {
  // lcm of cycle lengths
  std::vector<bool> done(p.degree(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    Point x = static_cast<Point>(start);
    while (!done[x]) {
      done[x] = true;
      x = p[x];
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace eta
