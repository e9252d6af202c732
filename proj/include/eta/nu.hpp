#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eta/eta_group.hpp"

namespace eta {

class NuGroup {
 public:
  const FiniteGroup& group() const { return eta_.pair().G; }
  const EtaGroup& eta() const { return eta_; }
  const PermGroup& delta() const { return delta_; }
  const PermGroup& mu() const { return *mu_; }
  const std::vector<Element>& derived_elements() const { return derived_; }
  const GroupHom& rho() const { return *rho_; }
  const GroupHom& rho_prime() const { return *rho_prime_; }
  // Checks done while constructing: rho well defined and onto, rho' onto G',
  // |tensor| = |mu| |G'|, mu central.
  const CheckReport& construction_checks() const { return checks_; }

 private:
  friend NuGroup construct_nu(const FiniteGroup&, std::size_t);

  EtaGroup eta_;
  PermGroup delta_;
  std::shared_ptr<const PermGroup> mu_;
  std::vector<Element> derived_;
  std::shared_ptr<const GroupHom> rho_, rho_prime_;
  CheckReport checks_;
};

// Throws CapacityError, or IncompatibleActions if conjugation were ever
// rejected by the compatibility check.
NuGroup construct_nu(const FiniteGroup& G, std::size_t max_cosets = kDefaultMaxCosets);

CheckReport check_nu_derived_decomposition(const NuGroup& N);

struct PiReport {
  std::vector<std::uint64_t> pi_G, pi_G_elements, pi_tensor, pi_delta, pi_abelianization, pi_delta_abelianization;
  AbelianInvariants abelianization, delta_formula, delta_invariants;
  CheckReport checks;
};

PiReport periodicity_and_pi(const NuGroup& N);

}  // namespace eta
