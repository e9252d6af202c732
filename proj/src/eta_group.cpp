#include "eta/eta_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "eta/error.hpp"

namespace eta {

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

struct Symbols {
  std::vector<std::int64_t> g, h;  // generator index or -1 for the identity

  Word of_g(Element x) const { return g[x] < 0 ? Word{} : Word{Letter{static_cast<std::uint32_t>(g[x]), false}}; }
  Word of_h(Element x) const { return h[x] < 0 ? Word{} : Word{Letter{static_cast<std::uint32_t>(h[x]), false}}; }
};

Symbols assign_symbols(const ActionPair& pair, std::vector<std::string>* names) {
  Symbols s;
  std::uint32_t next = 0;
  for (Element x = 0; x < pair.G.order(); ++x) {
    if (x == pair.G.identity()) {
      s.g.push_back(-1);
    } else {
      s.g.push_back(next++);
      if (names) names->push_back("g" + std::to_string(x));
    }
  }
  for (Element x = 0; x < pair.H.order(); ++x) {
    if (x == pair.H.identity()) {
      s.h.push_back(-1);
    } else {
      s.h.push_back(next++);
      if (names) names->push_back("h" + std::to_string(x));
    }
  }
  return s;
}

void table_relators(const FiniteGroup& A, Word (Symbols::*of)(Element) const, const Symbols& s,
                    std::vector<Word>& out) {
  for (Element a = 0; a < A.order(); ++a) {
    if (a == A.identity()) continue;
    for (Element b = 0; b < A.order(); ++b) {
      if (b == A.identity()) continue;
      Word w = (s.*of)(a);
      append(w, (s.*of)(b));
      append(w, inverse((s.*of)(A.mul(a, b))));
      out.push_back(std::move(w));
    }
  }
}

Word conjugated(const Word& x, const Word& by) {
  Word w = inverse(by);
  append(w, x);
  append(w, by);
  return w;
}

}  // namespace

namespace {

// Both families with the conjugators g1, h1 drawn from the given lists.
Presentation eta_relators(const ActionPair& pair, std::span<const Element> conj_G,
                          std::span<const Element> conj_H) {
  const FiniteGroup& G = pair.G;
  const FiniteGroup& H = pair.H;
  Presentation p;
  const Symbols s = assign_symbols(pair, &p.generators);
  table_relators(G, &Symbols::of_g, s, p.relators);
  table_relators(H, &Symbols::of_h, s, p.relators);
  for (Element g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    for (Element g1 : conj_G) {
      for (Element h = 0; h < H.order(); ++h) {
        if (h == H.identity()) continue;
        Word w = conjugated(commutator(s.of_g(g), s.of_h(h)), s.of_g(g1));
        append(w, inverse(commutator(s.of_g(G.conj(g, g1)), s.of_h(pair.on_H.apply(h, g1)))));
        p.relators.push_back(std::move(w));
      }
    }
  }
  for (Element g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    for (Element h = 0; h < H.order(); ++h) {
      if (h == H.identity()) continue;
      for (Element h1 : conj_H) {
        Word w = conjugated(commutator(s.of_g(g), s.of_h(h)), s.of_h(h1));
        append(w, inverse(commutator(s.of_g(pair.on_G.apply(g, h1)), s.of_h(H.conj(h, h1)))));
        p.relators.push_back(std::move(w));
      }
    }
  }
  return p;
}

// Greedy generating set in element order.
std::vector<Element> generating_set(const FiniteGroup& A) {
  std::vector<Element> gens;
  std::vector<Element> span{A.identity()};
  for (Element a = 0; a < A.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = A.subgroup_generated(gens);
  }
  return gens;
}

}  // namespace

Presentation build_eta_presentation(const ActionPair& pair) {
  const CompatibilityReport compat = check_compatibility(pair);
  if (!compat.compatible()) {
    const auto& f = compat.failures.front();
    throw IncompatibleActions("actions are not compatible: family " + std::to_string(f.family) +
                              " fails at (" + std::to_string(f.x) + ", " + std::to_string(f.y) + ", " +
                              std::to_string(f.z) + ")");
  }
  return eta_relators(pair, pair.G.all_elements(), pair.H.all_elements());
}

Perm EtaGroup::tensor(Element g, Element h) const {
  return embed_G_inv_[g] * embed_H_inv_[h] * embed_G_[g] * embed_H_[h];
}

PermGroup EtaGroup::generate(std::span<const Perm> elements) const {
  return generate_within(*carrier_, elements);
}

PermGroup EtaGroup::embedded_G(std::span<const Element> subset) const {
  std::vector<Perm> v;
  for (Element g : subset) v.push_back(embed_G_[g]);
  return generate(v);
}

PermGroup EtaGroup::embedded_H(std::span<const Element> subset) const {
  std::vector<Perm> v;
  for (Element h : subset) v.push_back(embed_H_[h]);
  return generate(v);
}

namespace {

void check_embedding(const FiniteGroup& A, const std::vector<Perm>& e, const char* which) {
  std::vector<Point> keys(A.order());
  std::unordered_set<Point> distinct;
  for (Element a = 0; a < A.order(); ++a) {
    keys[a] = e[a][0];
    distinct.insert(keys[a]);
  }
  if (distinct.size() != A.order()) {
    throw InternalError(std::string("embedding of ") + which + " is not injective");
  }
  for (Element a = 0; a < A.order(); ++a) {
    for (Element b = 0; b < A.order(); ++b) {
      if (e[b][keys[a]] != keys[A.mul(a, b)]) {
        throw InternalError(std::string("embedding of ") + which + " is not a homomorphism");
      }
    }
  }
}

}  // namespace

EtaGroup construct_eta(const ActionPair& pair, std::size_t max_cosets) {
  EtaGroup E;
  E.pair_ = pair;
  E.presentation_ = build_eta_presentation(pair);
  // Enumerate with the conjugators restricted to generating sets, then
  // require every relator of the full presentation to fix coset 0. The action
  // on the cosets of the trivial subgroup is regular, so this shows the full
  // relators hold and the two presentations define the same group.
  const Presentation reduced =
      eta_relators(pair, generating_set(pair.G), generating_set(pair.H));
  CosetTable table = todd_coxeter(reduced, {}, max_cosets);
  E.cosets_defined_ = table.cosets_defined();
  auto full_relators_hold = [&] {
    return std::all_of(E.presentation_.relators.begin(), E.presentation_.relators.end(),
                       [&](const Word& r) { return table.act(0, r) == 0; });
  };
  if (table.complete() && !full_relators_hold()) {
    table = todd_coxeter(E.presentation_, {}, max_cosets);
    E.cosets_defined_ += table.cosets_defined();
  }
  if (!table.complete()) {
    throw CapacityError("coset enumeration exceeded " + std::to_string(max_cosets) + " cosets",
                        E.cosets_defined_);
  }
  RegularRepresentation rep = regular_representation(table);
  E.carrier_ = std::make_shared<const PermGroup>(std::move(rep.group));
  const std::size_t n = E.carrier_->degree();
  const Symbols s = assign_symbols(pair, nullptr);
  auto embed = [&](const std::vector<std::int64_t>& sym, std::vector<Perm>& out, std::vector<Perm>& inv) {
    for (std::int64_t i : sym) {
      out.push_back(i < 0 ? Perm(n) : rep.generator_images[static_cast<std::size_t>(i)]);
      inv.push_back(out.back().inverse());
    }
  };
  embed(s.g, E.embed_G_, E.embed_G_inv_);
  embed(s.h, E.embed_H_, E.embed_H_inv_);
  check_embedding(pair.G, E.embed_G_, "G");
  check_embedding(pair.H, E.embed_H_, "H");

  const std::size_t nG = pair.G.order(), nH = pair.H.order();
  E.tensor_keys_.resize(nG * nH);
  for (Element g = 0; g < nG; ++g) {
    for (Element h = 0; h < nH; ++h) {
      const Point k = E.embed_G_inv_[g][0];
      E.tensor_keys_[g * nH + h] = E.embed_H_[h][E.embed_G_[g][E.embed_H_inv_[h][k]]];
    }
  }
  // Greedy generation straight from the keys: membership of a carrier element
  // in a semiregular subgroup is decided by its key.
  std::vector<Perm> gens;
  PermGroup T(n, {}, E.carrier_->options());
  for (Element g = 0; g < nG; ++g) {
    for (Element h = 0; h < nH; ++h) {
      const Point k = E.tensor_keys_[g * nH + h];
      if (k == 0 || T.base_orbit_contains(k)) continue;
      gens.push_back(E.tensor(g, h));
      T = PermGroup(n, gens, E.carrier_->options());
    }
  }
  E.tensor_subgroup_ = std::move(T);
  if (!is_normal(E.tensor_subgroup_, *E.carrier_)) {
    throw InternalError("tensor subgroup is not normal in the carrier");
  }
  return E;
}

void check_invariant_pair(const ActionPair& pair, std::span<const Element> N, std::span<const Element> K) {
  if (!pair.G.is_subgroup(N)) throw Error("N is not a subgroup of G");
  if (!pair.H.is_subgroup(K)) throw Error("K is not a subgroup of H");
  std::vector<bool> inN(pair.G.order(), false), inK(pair.H.order(), false);
  for (Element a : N) inN[a] = true;
  for (Element b : K) inK[b] = true;
  for (Element a : N) {
    for (Element b : K) {
      if (!inN[pair.on_G.apply(a, b)]) {
        throw InvarianceError("N is not K-invariant: witness (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      if (!inK[pair.on_H.apply(b, a)]) {
        throw InvarianceError("K is not N-invariant: witness (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
}

TensorSet tensor_set(const EtaGroup& E, std::span<const Element> N, std::span<const Element> K) {
  check_invariant_pair(E.pair(), N, K);
  TensorSet ts;
  std::unordered_set<Point> seen;
  for (Element a : N) {
    for (Element b : K) {
      const Point k = E.tensor_key(a, b);
      if (seen.insert(k).second) {
        ts.keys.push_back(k);
        ts.witness.emplace_back(a, b);
      }
    }
  }
  return ts;
}

CheckReport check_decomposition(const EtaGroup& E) {
  CheckReport report;
  const FiniteGroup& G = E.pair().G;
  const FiniteGroup& H = E.pair().H;
  const PermGroup& T = E.tensor_subgroup();

  std::string witness;
  for (Element g = 0; g < G.order() && witness.empty(); ++g) {
    if (g != G.identity() && T.base_orbit_contains(E.embed_G(g)[0])) witness = "g" + std::to_string(g);
  }
  report.add("tensor_meets_G_trivially", witness.empty(), witness.empty() ? "" : "shared element " + witness);

  std::vector<Perm> tg = T.generators();
  for (Element g = 0; g < G.order(); ++g) tg.push_back(E.embed_G(g));
  const PermGroup TG = E.generate(tg);
  witness.clear();
  for (Element h = 0; h < H.order() && witness.empty(); ++h) {
    if (h != H.identity() && TG.base_orbit_contains(E.embed_H(h)[0])) witness = "h" + std::to_string(h);
  }
  report.add("tensor_G_meets_H_trivially", witness.empty(), witness.empty() ? "" : "shared element " + witness);

  const std::uint64_t product = T.order() * G.order() * H.order();
  report.add("order_identity", E.order() == product,
             std::to_string(E.order()) + " = " + std::to_string(T.order()) + "*" + std::to_string(G.order()) +
                 "*" + std::to_string(H.order()));
  report.add("tensor_normal", is_normal(T, E.carrier()));
  return report;
}

AbelianInvariants trivial_action_baseline(const FiniteGroup& G, const FiniteGroup& H) {
  return z_tensor(abelian_invariants_of(G.regular_perm_group()), abelian_invariants_of(H.regular_perm_group()));
}

}  // namespace eta
