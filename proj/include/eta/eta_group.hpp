#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eta/abelian.hpp"
#include "eta/action.hpp"
#include "eta/coset_enum.hpp"
#include "eta/perm_group.hpp"
#include "eta/presentation.hpp"

namespace eta {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool passed() const;
  void add(std::string name, bool ok, std::string detail = "");
};

// Generators: g<i> for each non-identity i in G, then h<j> for each
// non-identity j in H (indices in the Cayley table order). Relators: the
// multiplication tables of G and H, then both commutator families over all
// (g, g1, h) and (g, h, h1) with g, h non-identity.
Presentation build_eta_presentation(const ActionPair& pair);

// The carrier is the regular representation on the cosets of the trivial
// subgroup. Every carrier element x is determined by its key x[0].
class EtaGroup {
 public:
  const ActionPair& pair() const { return pair_; }
  const Presentation& presentation() const { return presentation_; }
  const PermGroup& carrier() const { return *carrier_; }
  std::shared_ptr<const PermGroup> carrier_ptr() const { return carrier_; }
  std::size_t order() const { return carrier_->order(); }
  std::size_t cosets_defined() const { return cosets_defined_; }

  const Perm& embed_G(Element g) const { return embed_G_[g]; }
  const Perm& embed_H(Element h) const { return embed_H_[h]; }
  const Perm& embed_G_inverse(Element g) const { return embed_G_inv_[g]; }
  const Perm& embed_H_inverse(Element h) const { return embed_H_inv_[h]; }

  // [g, h^phi] = g^-1 (h^phi)^-1 g h^phi
  Point tensor_key(Element g, Element h) const { return tensor_keys_[g * pair_.H.order() + h]; }
  Perm tensor(Element g, Element h) const;
  const PermGroup& tensor_subgroup() const { return tensor_subgroup_; }

  // Subgroup of the carrier generated by the given elements.
  PermGroup generate(std::span<const Perm> elements) const;
  PermGroup embedded_G(std::span<const Element> subset) const;
  PermGroup embedded_H(std::span<const Element> subset) const;
  // Carrier element with the given key.
  Perm element(Point key) const { return carrier_->transversal(0, key); }

 private:
  friend EtaGroup construct_eta(const ActionPair&, std::size_t);

  ActionPair pair_;
  Presentation presentation_;
  std::shared_ptr<const PermGroup> carrier_;
  std::size_t cosets_defined_ = 0;
  std::vector<Perm> embed_G_, embed_H_, embed_G_inv_, embed_H_inv_;
  std::vector<Point> tensor_keys_;
  PermGroup tensor_subgroup_;
};

// Throws IncompatibleActions, CapacityError (with the cosets defined), or
// InternalError when an embedding is not an injective homomorphism or the
// tensor subgroup is not normal.
EtaGroup construct_eta(const ActionPair& pair, std::size_t max_cosets = kDefaultMaxCosets);

struct TensorSet {
  std::vector<Point> keys;                            // distinct, first-seen order
  std::vector<std::pair<Element, Element>> witness;   // one (a, b) per key
  std::size_t size() const { return keys.size(); }
};

// Checks N <= G and K <= H are subgroups and mutually invariant.
void check_invariant_pair(const ActionPair& pair, std::span<const Element> N, std::span<const Element> K);
TensorSet tensor_set(const EtaGroup& E, std::span<const Element> N, std::span<const Element> K);

CheckReport check_decomposition(const EtaGroup& E);

AbelianInvariants trivial_action_baseline(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace eta
