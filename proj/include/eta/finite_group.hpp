#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eta/perm_group.hpp"

namespace eta {

using Element = std::uint32_t;

// Finite group given by its multiplication table. The element order of the
// table is the canonical order used in every report.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group
  // Validates closure, identity, inverses and associativity.
  FiniteGroup(std::string name, std::vector<std::string> element_names,
              std::vector<std::vector<Element>> table);

  // Elements listed breadth-first from the identity over the generators.
  static FiniteGroup from_perm_group(std::string name, const PermGroup& group,
                                     std::size_t limit = 4096);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  const std::vector<std::string>& element_names() const { return names_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  // a^b = b^-1 a b
  Element conj(Element a, Element b) const { return mul(mul(inv(b), a), b); }
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Element pow(Element a, long long n) const;
  std::uint64_t element_order(Element a) const;

  bool is_abelian() const;
  std::vector<Element> all_elements() const;
  // Closure of the given elements under the product.
  std::vector<Element> subgroup_generated(std::span<const Element> gens) const;
  bool is_subgroup(std::span<const Element> subset) const;
  std::vector<Element> derived_subgroup() const;
  std::vector<Element> center() const;

  // Right regular representation: g acts by x -> x g, on order() points.
  Perm regular_perm(Element g) const;
  PermGroup regular_perm_group() const;

  // Subgroup as a group in its own right; elements keep the given order.
  FiniteGroup subgroup(std::string name, std::span<const Element> elements) const;

  const std::vector<std::vector<Element>> table_rows() const;

 private:
  std::string name_;
  std::size_t order_ = 1;
  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

}  // namespace eta
