#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eta/finite_group.hpp"

namespace eta {

// Right action of an acting group on an acted group: apply(g, h) = g^h.
class ActionTable {
 public:
  ActionTable() = default;
  ActionTable(std::size_t acted_order, std::size_t acting_order, std::vector<Element> images);
  // rows[h][g] = g^h
  static ActionTable from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t acted_order() const { return acted_; }
  std::size_t acting_order() const { return acting_; }
  Element apply(Element g, Element h) const { return images_[h * acted_ + g]; }
  std::vector<std::vector<Element>> rows() const;
  bool operator==(const ActionTable&) const = default;

 private:
  std::size_t acted_ = 1;
  std::size_t acting_ = 1;
  std::vector<Element> images_{0};
};

ActionTable trivial_action(std::size_t acted_order, std::size_t acting_order);
// g^h = h^-1 g h inside one group.
ActionTable conjugation_action(const FiniteGroup& group);

struct ActionPair {
  std::string name;
  FiniteGroup G;
  FiniteGroup H;
  ActionTable on_G;  // H acting on G
  ActionTable on_H;  // G acting on H
};

ActionPair trivial_pair(const FiniteGroup& G, const FiniteGroup& H);
ActionPair conjugation_pair(const FiniteGroup& G);  // G with itself
// N and K subgroups of `ambient` normalizing each other; both actions are
// conjugation inside ambient. Elements keep the ambient order.
ActionPair subgroup_conjugation_pair(const FiniteGroup& ambient, std::span<const Element> N,
                                     std::span<const Element> K, std::string name = "");
// (G,H) <-> (H,G) with the tables exchanged.
ActionPair swapped(const ActionPair& pair);

struct ActionViolation {
  std::string axiom;  // "bijection", "product", "identity", "composition"
  std::vector<Element> witness;
  std::string detail;
};

struct ActionReport {
  std::size_t instances_checked = 0;
  std::vector<ActionViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Throws InvalidAction on size mismatch.
ActionReport validate_action(const ActionTable& table, const FiniteGroup& acted,
                             const FiniteGroup& acting);

struct CompatibilityFailure {
  // family 1: x = g, y = g1 in G, z = h in H; values in G
  // family 2: x = h, y = h1 in H, z = g in G; values in H
  int family;
  Element x, y, z;
  Element lhs, rhs;
};

struct CompatibilityReport {
  std::size_t triples_checked = 0;
  std::vector<CompatibilityFailure> failures;
  bool compatible() const { return failures.empty(); }
};

// Exhaustive over both families. Throws InvalidAction if either table fails
// validate_action.
CompatibilityReport check_compatibility(const ActionPair& pair);

}  // namespace eta
