#include "eta/nu.hpp"

#include <algorithm>
#include <set>

#include "eta/error.hpp"

namespace eta {

NuGroup construct_nu(const FiniteGroup& G, std::size_t max_cosets) {
  NuGroup N;
  const ActionPair pair = conjugation_pair(G);
  if (!check_compatibility(pair).compatible()) {
    throw IncompatibleActions("conjugation actions of " + G.name() + " rejected");
  }
  N.eta_ = construct_eta(pair, max_cosets);
  const EtaGroup& E = N.eta_;

  std::vector<Perm> diag;
  std::set<Point> seen{0};
  for (Element g = 0; g < G.order(); ++g) {
    if (seen.insert(E.tensor_key(g, g)).second) diag.push_back(E.tensor(g, g));
  }
  N.delta_ = E.generate(diag);

  auto target = std::make_shared<const PermGroup>(G.regular_perm_group());
  std::vector<Perm> images;
  for (Element g = 0; g < G.order(); ++g) {
    if (g != G.identity()) images.push_back(G.regular_perm(g));
  }
  for (Element h = 0; h < G.order(); ++h) {
    if (h != G.identity()) images.push_back(G.regular_perm(h));
  }
  N.rho_ = std::make_shared<const GroupHom>(E.carrier_ptr(), target, images, E.presentation().relators);
  N.rho_->check_well_defined();
  N.checks_.add("rho_onto", N.rho_->image().order() == G.order());

  auto T = std::make_shared<const PermGroup>(E.tensor_subgroup());
  std::vector<Perm> t_images;
  for (const Perm& t : T->generators()) t_images.push_back(N.rho_->image_of(t));
  N.rho_prime_ = std::make_shared<const GroupHom>(T, target, t_images);
  N.rho_prime_->check_well_defined();

  N.derived_ = G.derived_subgroup();
  const PermGroup image = N.rho_prime_->image();
  bool inside = image.order() == N.derived_.size();
  for (const Perm& p : image.generators()) {
    inside = inside && std::binary_search(N.derived_.begin(), N.derived_.end(), p[G.identity()]);
  }
  N.checks_.add("rho_prime_onto_derived", inside,
                "|image| = " + std::to_string(image.order()) + ", |G'| = " + std::to_string(N.derived_.size()));

  N.mu_ = std::make_shared<const PermGroup>(hom_kernel(*N.rho_prime_));
  const std::uint64_t mu_order = N.mu_->order();
  N.checks_.add("quotient_order", T->order() == mu_order * N.derived_.size(),
                std::to_string(T->order()) + " = " + std::to_string(mu_order) + "*" +
                    std::to_string(N.derived_.size()));

  std::string witness;
  for (const Perm& m : N.mu_->generators()) {
    for (const Perm& c : E.carrier().generators()) {
      if (c[m[0]] != m[c[0]] && witness.empty()) witness = "mu element with key " + std::to_string(m[0]);
    }
  }
  N.checks_.add("mu_central", witness.empty(), witness);
  return N;
}

CheckReport check_nu_derived_decomposition(const NuGroup& N) {
  CheckReport report;
  const EtaGroup& E = N.eta();
  const PermGroup& T = E.tensor_subgroup();
  const PermGroup nu_prime = derived_subgroup(E.carrier());
  const PermGroup Gp = E.embedded_G(N.derived_elements());
  const PermGroup Hp = E.embedded_H(N.derived_elements());
  const std::uint64_t d = N.derived_elements().size();

  report.add("derived_order", nu_prime.order() == T.order() * d * d,
             std::to_string(nu_prime.order()) + " = " + std::to_string(T.order()) + "*" + std::to_string(d) +
                 "^2");

  bool meet = true;
  for (const Perm& g : Gp.elements()) meet = meet && (g.is_identity() || !T.base_orbit_contains(g[0]));
  report.add("tensor_meets_derived_G_trivially", meet);

  std::vector<Perm> tg = T.generators();
  tg.insert(tg.end(), Gp.generators().begin(), Gp.generators().end());
  const PermGroup TG = E.generate(tg);
  meet = true;
  for (const Perm& h : Hp.elements()) meet = meet && (h.is_identity() || !TG.base_orbit_contains(h[0]));
  report.add("tensor_derived_G_meets_derived_H_trivially", meet);

  tg.insert(tg.end(), Hp.generators().begin(), Hp.generators().end());
  const PermGroup all = E.generate(tg);
  report.add("factors_generate_derived", same_group(all, nu_prime),
             "|<T,G',H'>| = " + std::to_string(all.order()));
  return report;
}

namespace {

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string set_text(const std::vector<std::uint64_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

PiReport periodicity_and_pi(const NuGroup& N) {
  PiReport r;
  const FiniteGroup& G = N.group();
  r.pi_G = pi_set(G.order());
  std::set<std::uint64_t> from_elements;
  for (Element g = 0; g < G.order(); ++g) {
    for (std::uint64_t p : prime_divisors(G.element_order(g))) from_elements.insert(p);
  }
  r.pi_G_elements.assign(from_elements.begin(), from_elements.end());
  r.pi_tensor = pi_set(N.eta().tensor_subgroup().order());
  r.pi_delta = pi_set(N.delta().order());
  r.checks.add("pi_from_orders_matches_elements", r.pi_G == r.pi_G_elements);
  if (G.order() > 1) {
    r.checks.add("pi_G_in_pi_tensor", subset_of(r.pi_G, r.pi_tensor),
                 set_text(r.pi_G) + " vs " + set_text(r.pi_tensor));
  }

  r.abelianization = abelian_invariants_of(G.regular_perm_group());
  r.delta_formula = delta_of_abelian(r.abelianization);
  r.pi_abelianization = pi_set(r.abelianization);
  r.pi_delta_abelianization = pi_set(r.delta_formula);
  r.delta_invariants = abelian_invariants_of(N.delta());
  r.checks.add("delta_abelianization_divides_delta", N.delta().order() % r.delta_formula.order() == 0,
               std::to_string(r.delta_formula.order()) + " | " + std::to_string(N.delta().order()));
  r.checks.add("pi_abelianization_equals_pi_delta_abelianization", r.pi_abelianization == r.pi_delta_abelianization);
  if (G.is_abelian()) {
    r.checks.add("abelian_delta_matches_formula", r.delta_invariants == r.delta_formula,
                 r.delta_invariants.to_string() + " vs " + r.delta_formula.to_string());
  }
  return r;
}

}  // namespace eta
