#include "eta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "eta/builtins.hpp"
#include "eta/error.hpp"
#include "eta/eta_group.hpp"
#include "eta/nu.hpp"

namespace eta {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

Json ClaimReport::to_json(bool with_timing) const {
  Json j;
  j["claim"] = claim;
  j["anchor"] = anchor;
  j["instance"] = instance;
  j["verdict"] = verdict_name(verdict);
  j["checked"] = checked;
  if (!witness.is_null()) j["witness"] = witness;
  if (!details.empty()) j["details"] = details;
  if (with_timing) j["ms"] = millis;
  return j;
}

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog{
      {"compatibility", "compatible mutual actions: g^(h^g1) = ((g^(g1^-1))^h)^g1 and the mirror"},
      {"defining_relations", "[g,h^phi]^g1 = [g^g1,(h^g1)^phi], [g,h^phi]^(h1^phi) = [g^h1,(h^h1)^phi]"},
      {"decomposition", "eta(G,H) = ([G,H^phi] . G) . H^phi"},
      {"trivial_action_oracle", "trivial actions: G (x) H = G^ab (x)_Z H^ab"},
      {"tensor_conjugation_identities",
       "[g,h^phi]^[x,y^phi] = [g,h^phi]^(x^-1 x^y) = [g,h^phi]^((y^-x y)^phi); "
       "[g^-1 g^h,y^phi] = [g,h^phi]^-1 [g,h^phi]^(y^phi)"},
      {"tensor_subgroup_machinery", "finite T(N,K) forces [N,K^phi] finite: normal subset, S = [N,K^phi,K^phi], squares"},
      {"centralizer_bound", "normal subset X: [<X> : C(x)] <= |X|"},
      {"tensor_square_orders", "|T(G)| <= |[G,G^phi]|, <T(G)> = [G,G^phi], |nu(G)| = |[G,G^phi]| |G|^2"},
      {"derived_decomposition", "nu(G)' = ([G,G^phi] . G') . (G')^phi"},
      {"quotient_identity", "[G,G^phi]/mu(G) = G', mu(G) central in nu(G)"},
      {"pi_containment", "pi(G) contained in pi([G,G^phi])"},
      {"diagonal_formula", "Delta(G^ab) = prod C_ni x prod_(j<k) C_gcd(nj,nk), image of Delta(G)"},
  };
  return catalog;
}

bool both_actions_trivial(const ActionPair& pair) {
  return pair.on_G == trivial_action(pair.G.order(), pair.H.order()) &&
         pair.on_H == trivial_action(pair.H.order(), pair.G.order());
}

// ---------------------------------------------------------------------------
// corpus

Instance incompatible_example() {
  const FiniteGroup S3 = symmetric_group(3);
  const FiniteGroup C2 = cyclic_group(2);
  // first transposition in element order
  Element t = 0;
  for (Element x = 0; x < S3.order(); ++x) {
    if (S3.element_order(x) == 2) {
      t = x;
      break;
    }
  }
  std::vector<Element> on_S3(2 * S3.order());
  for (Element g = 0; g < S3.order(); ++g) {
    on_S3[g] = g;
    on_S3[S3.order() + g] = S3.conj(g, t);
  }
  ActionPair pair{"S3,C2 incompatible", S3, C2, ActionTable(S3.order(), 2, std::move(on_S3)),
                  trivial_action(2, S3.order())};
  return {pair.name, pair, false, true};
}

namespace {

Instance nu_instance(const std::string& builtin) {
  FiniteGroup G = builtin_group(builtin);
  return {"nu(" + builtin + ")", conjugation_pair(G), true, false};
}

Instance trivial_instance(const std::string& a, const std::string& b) {
  ActionPair p = trivial_pair(builtin_group(a), builtin_group(b));
  p.name = "eta(" + a + "," + b + ") trivial";
  return {p.name, p, false, false};
}

Instance normal_instance(const std::string& ambient_name, const std::string& label,
                         const std::function<std::vector<Element>(const FiniteGroup&)>& pick) {
  const FiniteGroup A = builtin_group(ambient_name);
  const std::vector<Element> N = pick(A);
  const std::vector<Element> all = A.all_elements();
  ActionPair p = subgroup_conjugation_pair(A, N, all, "eta(" + label + "," + ambient_name + ") conjugation");
  p.G = A.subgroup(label, N);
  p.H = A.subgroup(ambient_name, all);
  return {p.name, p, false, false};
}

std::vector<Element> elements_of_order_dividing(const FiniteGroup& A, std::uint64_t d) {
  std::vector<Element> gens;
  for (Element x = 0; x < A.order(); ++x) {
    if (d % A.element_order(x) == 0) gens.push_back(x);
  }
  return A.subgroup_generated(gens);
}

}  // namespace

std::vector<Instance> default_corpus() {
  std::vector<Instance> corpus;
  for (int n = 2; n <= 12; ++n) corpus.push_back(nu_instance("C" + std::to_string(n)));
  for (const char* g : {"V4", "C2xC4", "C2xC6", "D6", "D8", "D10", "D12", "Q8", "S3", "A4"}) {
    corpus.push_back(nu_instance(g));
  }
  const std::vector<std::pair<const char*, const char*>> trivial{
      {"C1", "C5"},   {"C2", "C2"},  {"C2", "C3"},   {"C2", "C4"},  {"C4", "C6"},  {"C3", "C9"},
      {"C6", "C10"},  {"C8", "C12"}, {"C12", "C12"}, {"V4", "C4"},  {"V4", "C2xC4"}, {"C2xC6", "C6"},
      {"S3", "C2"},   {"S3", "C3"},  {"S3", "S3"},   {"D8", "C2"},  {"D8", "C4"},  {"Q8", "V4"},
      {"A4", "C3"},   {"A4", "C2"},  {"D10", "C5"},  {"D12", "C6"}, {"Q8", "D8"},
  };
  for (const auto& [a, b] : trivial) corpus.push_back(trivial_instance(a, b));
  // normal subgroups with the ambient group, both acting by conjugation
  corpus.push_back(normal_instance("S3", "A3", [](const FiniteGroup& A) { return elements_of_order_dividing(A, 3); }));
  corpus.push_back(normal_instance("A4", "V4", [](const FiniteGroup& A) { return elements_of_order_dividing(A, 2); }));
  corpus.push_back(normal_instance("D8", "C4", [](const FiniteGroup&) { return std::vector<Element>{0, 1, 2, 3}; }));
  corpus.push_back(normal_instance("Q8", "Z", [](const FiniteGroup& A) { return A.center(); }));
  corpus.push_back(incompatible_example());
  return corpus;
}

// ---------------------------------------------------------------------------
// carrier arithmetic on keys

namespace {

// A carrier element as a product of known permutations; evaluating the
// product at a point costs one lookup per factor.
struct Elt {
  std::vector<std::pair<const Perm*, const Perm*>> f;  // (factor, inverse)

  Point at(Point p) const {
    for (const auto& [x, xi] : f) p = (*x)[p];
    return p;
  }
  Point key() const { return at(0); }
  Elt inv() const {
    Elt r;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r.f.emplace_back(it->second, it->first);
    return r;
  }
  Elt operator*(const Elt& o) const {
    Elt r = *this;
    r.f.insert(r.f.end(), o.f.begin(), o.f.end());
    return r;
  }
  Elt conj(const Elt& by) const { return by.inv() * *this * by; }
};

Elt comm(const Elt& a, const Elt& b) { return a.inv() * b.inv() * a * b; }

struct Arith {
  const EtaGroup& E;
  Elt g(Element x) const { return {{{&E.embed_G(x), &E.embed_G_inverse(x)}}}; }
  Elt h(Element y) const { return {{{&E.embed_H(y), &E.embed_H_inverse(y)}}}; }
  Elt t(Element x, Element y) const { return comm(g(x), h(y)); }
};

std::string elem_name(const FiniteGroup& A, Element x) { return A.element_names()[x]; }

Json tuple_json(std::initializer_list<std::pair<const char*, std::string>> kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

std::string subset_text(const FiniteGroup& A, const std::vector<Element>& s) {
  if (s.size() == A.order()) return A.name();
  if (s.size() == 1) return "1";
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + elem_name(A, s[i]);
  return out + "}";
}

struct Ctx {
  const Instance& inst;
  const RunOptions& opt;
  const EtaGroup* E = nullptr;
  const NuGroup* N = nullptr;
};

using ClaimFn = std::function<void(const Ctx&, ClaimReport&)>;

void fail(ClaimReport& r, Json witness) {
  if (r.verdict != Verdict::fail) {
    r.verdict = Verdict::fail;
    r.witness = std::move(witness);
  }
}

void report_checks(ClaimReport& r, const CheckReport& checks) {
  for (const Check& c : checks.checks) {
    ++r.checked;
    Json j = Json::object();
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    r.details[c.name] = j;
    if (!c.passed) fail(r, tuple_json({{"check", c.name}, {"detail", c.detail}}));
  }
}

// --- claims ---------------------------------------------------------------

void claim_compatibility(const Ctx& c, ClaimReport& r) {
  const ActionPair& p = c.inst.pair;
  const CompatibilityReport rep = check_compatibility(p);
  r.checked = rep.triples_checked;
  r.details["expected"] = c.inst.expect_incompatible ? "incompatible" : "compatible";
  r.details["failing_triples"] = rep.failures.size();
  if (c.inst.expect_incompatible) {
    if (rep.compatible()) {
      fail(r, tuple_json({{"reason", "incompatible pair accepted"}}));
      return;
    }
    // prefer a family-1 failure whose conjugator has order 3
    auto it = std::find_if(rep.failures.begin(), rep.failures.end(), [&](const CompatibilityFailure& f) {
      return f.family == 1 && p.G.element_order(f.y) == 3;
    });
    r.details["order_3_conjugator_fails"] = it != rep.failures.end();
    const auto& f = it != rep.failures.end() ? *it : rep.failures.front();
    const FiniteGroup& A = f.family == 1 ? p.G : p.H;
    const FiniteGroup& B = f.family == 1 ? p.H : p.G;
    Json w;
    w["family"] = f.family;
    w["x"] = elem_name(A, f.x);
    w["y"] = elem_name(A, f.y);
    w["z"] = elem_name(B, f.z);
    w["lhs"] = elem_name(A, f.lhs);
    w["rhs"] = elem_name(A, f.rhs);
    w["order_of_y"] = A.element_order(f.y);
    r.details["failing_triple"] = w;
    if (it == rep.failures.end()) fail(r, tuple_json({{"reason", "no failing triple with a conjugator of order 3"}}));
    return;
  }
  if (!rep.compatible()) {
    const auto& f = rep.failures.front();
    fail(r, Json{{"family", f.family}, {"x", f.x}, {"y", f.y}, {"z", f.z}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
}

void claim_defining_relations(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  const ActionPair& p = E.pair();
  const Arith a{E};
  for (Element g = 0; g < p.G.order(); ++g) {
    for (Element h = 0; h < p.H.order(); ++h) {
      const Elt t = a.t(g, h);
      for (Element g1 = 0; g1 < p.G.order(); ++g1) {
        ++r.checked;
        if (t.conj(a.g(g1)).key() != E.tensor_key(p.G.conj(g, g1), p.on_H.apply(h, g1))) {
          fail(r, tuple_json({{"family", "G"}, {"g", elem_name(p.G, g)}, {"h", elem_name(p.H, h)},
                              {"g1", elem_name(p.G, g1)}}));
        }
      }
      for (Element h1 = 0; h1 < p.H.order(); ++h1) {
        ++r.checked;
        if (t.conj(a.h(h1)).key() != E.tensor_key(p.on_G.apply(g, h1), p.H.conj(h, h1))) {
          fail(r, tuple_json({{"family", "H"}, {"g", elem_name(p.G, g)}, {"h", elem_name(p.H, h)},
                              {"h1", elem_name(p.H, h1)}}));
        }
      }
    }
  }
}

void claim_decomposition(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  r.details["eta_order"] = E.order();
  r.details["tensor_order"] = E.tensor_subgroup().order();
  r.details["G_order"] = E.pair().G.order();
  r.details["H_order"] = E.pair().H.order();
  r.details["cosets_defined"] = E.cosets_defined();
  report_checks(r, check_decomposition(E));
}

void claim_trivial_oracle(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  const AbelianInvariants enumerated = abelian_invariants_of(E.tensor_subgroup());
  const AbelianInvariants oracle = trivial_action_baseline(E.pair().G, E.pair().H);
  r.checked = 1;
  r.details["enumerated"] = enumerated.to_string();
  r.details["oracle"] = oracle.to_string();
  // the tensor subgroup must itself be abelian with exactly these invariants
  const bool abelian_T = derived_subgroup(E.tensor_subgroup()).is_trivial();
  r.details["tensor_abelian"] = abelian_T;
  if (!(enumerated == oracle) || !abelian_T || E.tensor_subgroup().order() != oracle.order()) {
    fail(r, tuple_json({{"enumerated", enumerated.to_string()}, {"oracle", oracle.to_string()}}));
  }
}

void claim_identities(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  const ActionPair& p = E.pair();
  const FiniteGroup& G = p.G;
  const FiniteGroup& H = p.H;
  const Arith a{E};
  std::uint64_t checked_a = 0, checked_b = 0, checked_mirror = 0;
  std::uint64_t literal_checked = 0, literal_failures = 0;
  const bool literal_applies = c.inst.nu;
  for (Element g = 0; g < G.order(); ++g) {
    for (Element h = 0; h < H.order(); ++h) {
      const Elt t = a.t(g, h);
      for (Element x = 0; x < G.order(); ++x) {
        for (Element y = 0; y < H.order(); ++y) {
          ++checked_a;
          const Point lhs = t.conj(a.t(x, y)).key();
          const Element via_G = G.mul(G.inv(x), p.on_G.apply(x, y));
          const Element via_H = H.mul(p.on_H.apply(H.inv(y), x), y);
          if (lhs != t.conj(a.g(via_G)).key() || lhs != t.conj(a.h(via_H)).key()) {
            fail(r, tuple_json({{"identity", "a"}, {"g", elem_name(G, g)}, {"h", elem_name(H, h)},
                                {"x", elem_name(G, x)}, {"y", elem_name(H, y)}}));
          }
          if (literal_applies) {
            // [g,h] read inside the G copy (G = H here)
            ++literal_checked;
            const Elt gh = comm(a.g(g), a.g(h));
            if (gh.conj(a.t(x, y)).key() != gh.conj(a.g(via_G)).key()) ++literal_failures;
          }
        }
      }
      for (Element y = 0; y < H.order(); ++y) {
        ++checked_b;
        const Element g1 = G.mul(G.inv(g), p.on_G.apply(g, h));
        const Point lhs = E.tensor_key(g1, y);
        const Point rhs = (t.inv() * t.conj(a.h(y))).key();
        if (lhs != rhs) {
          fail(r, tuple_json({{"identity", "b"}, {"g", elem_name(G, g)}, {"h", elem_name(H, h)},
                              {"y", elem_name(H, y)}}));
        }
      }
    }
  }
  // mirror of (b) with the roles of G and H^phi exchanged
  for (Element h = 0; h < H.order(); ++h) {
    for (Element g = 0; g < G.order(); ++g) {
      const Elt s = comm(a.h(h), a.g(g));
      const Element h1 = H.mul(H.inv(h), p.on_H.apply(h, g));
      for (Element x = 0; x < G.order(); ++x) {
        ++checked_mirror;
        if (comm(a.h(h1), a.g(x)).key() != (s.inv() * s.conj(a.g(x))).key()) {
          fail(r, tuple_json({{"identity", "b mirrored"}, {"h", elem_name(H, h)}, {"g", elem_name(G, g)},
                              {"x", elem_name(G, x)}}));
        }
      }
    }
  }
  r.checked = checked_a + checked_b + checked_mirror;
  r.details["a_tuples"] = checked_a;
  r.details["b_tuples"] = checked_b + checked_mirror;
  if (literal_applies) {
    Json lit;
    lit["reading"] = "[g,h]^[x,y^phi] = [g,h]^(x^-1 x^y), [g,h] taken in G";
    lit["tuples"] = literal_checked;
    lit["failures"] = literal_failures;
    lit["counts_toward_verdict"] = false;
    r.details["literal_reading"] = lit;
  }
}

struct KeySet {
  std::unordered_map<Point, std::size_t> index;
  bool contains(Point k) const { return index.count(k) != 0; }
};

struct SubgroupData {
  std::vector<Element> N, K;
  TensorSet T;
  KeySet keys;
  PermGroup L;  // <N, K^phi>
};

SubgroupData subgroup_data(const EtaGroup& E, const std::vector<Element>& N, const std::vector<Element>& K) {
  SubgroupData d{N, K, tensor_set(E, N, K), {}, {}};
  for (std::size_t i = 0; i < d.T.keys.size(); ++i) d.keys.index.emplace(d.T.keys[i], i);
  std::vector<Perm> gens;
  for (Element n : N) gens.push_back(E.embed_G(n));
  for (Element k : K) gens.push_back(E.embed_H(k));
  d.L = E.generate(gens);
  return d;
}

std::string choice_text(const ActionPair& p, const SubgroupData& d) {
  return "N=" + subset_text(p.G, d.N) + " K=" + subset_text(p.H, d.K);
}

// Key-set subgroup generated by commutators [m, k^phi]; elements of M are
// materialized once.
void claim_machinery(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  const ActionPair& p = E.pair();
  const Arith a{E};
  Json choices = Json::array();
  for (const auto& [Nv, Kv] : subgroup_choices(p)) {
    const SubgroupData d = subgroup_data(E, Nv, Kv);
    const std::string label = choice_text(p, d);
    Json cj;
    cj["choice"] = label;
    cj["tensor_set_size"] = d.T.size();
    auto record = [&](const char* name, bool ok, Json extra = nullptr) {
      ++r.checked;
      cj[name] = ok;
      if (!ok) {
        Json w = extra.is_null() ? Json::object() : extra;
        w["choice"] = label;
        w["check"] = name;
        fail(r, w);
      }
    };

    // (1) normal subset
    bool ok = true;
    Json w1;
    for (std::size_t i = 0; i < d.T.size() && ok; ++i) {
      const Elt t = a.t(d.T.witness[i].first, d.T.witness[i].second);
      for (Element n : d.N) {
        if (!d.keys.contains(t.conj(a.g(n)).key())) {
          ok = false;
          w1 = tuple_json({{"a", elem_name(p.G, d.T.witness[i].first)}, {"b", elem_name(p.H, d.T.witness[i].second)},
                           {"by", "g " + elem_name(p.G, n)}});
          break;
        }
      }
      for (Element k : d.K) {
        if (!ok) break;
        if (!d.keys.contains(t.conj(a.h(k)).key())) {
          ok = false;
          w1 = tuple_json({{"a", elem_name(p.G, d.T.witness[i].first)}, {"b", elem_name(p.H, d.T.witness[i].second)},
                           {"by", "h " + elem_name(p.H, k)}});
        }
      }
    }
    record("normal_subset", ok, w1);

    // (2) M = [N,K^phi] normal in L
    std::vector<Perm> tperms;
    for (const auto& [x, y] : d.T.witness) tperms.push_back(E.tensor(x, y));
    const PermGroup M = E.generate(tperms);
    cj["M_order"] = M.order();
    cj["L_order"] = d.L.order();
    record("M_normal_in_L", is_normal(M, d.L));

    // (3) S = [M, K^phi]
    const std::vector<Perm> m_elems = M.elements();
    std::vector<Perm> s_gens;
    for (const Perm& m : m_elems) {
      for (Element k : d.K) s_gens.push_back(commutator(m, E.embed_H(k)));
    }
    const PermGroup S = E.generate(s_gens);
    cj["S_order"] = S.order();
    record("S_normal_in_L", is_normal(S, d.L));
    ok = true;
    Json w3;
    std::vector<Perm> x_gens;
    for (Element n : d.N) {
      for (Element k : d.K) {
        const Elt t = a.t(n, k);
        for (Element h : d.K) {
          const Elt x = comm(t, a.h(h));
          const Element nh = p.on_G.apply(n, h), kh = p.H.conj(k, h);
          const bool in_T = d.keys.contains(E.tensor_key(nh, kh));
          if (!in_T || x.key() != (t.inv() * a.t(nh, kh)).key()) {
            if (ok) {
              w3 = tuple_json({{"n", elem_name(p.G, n)}, {"k", elem_name(p.H, k)}, {"h", elem_name(p.H, h)}});
            }
            ok = false;
          }
          x_gens.push_back(commutator(E.tensor(n, k), E.embed_H(h)));
        }
      }
    }
    record("X_in_T_inverse_T", ok, w3);
    const PermGroup M_prime = derived_subgroup(M);
    const bool M_abelian = M_prime.is_trivial();
    std::vector<Perm> with_x = x_gens, with_s = S.generators();
    with_x.insert(with_x.end(), M_prime.generators().begin(), M_prime.generators().end());
    with_s.insert(with_s.end(), M_prime.generators().begin(), M_prime.generators().end());
    cj["X_generates_S_modulo"] = M_abelian ? "nothing (M abelian)" : "M'";
    record("X_generates_S", E.generate(with_x).order() == E.generate(with_s).order());

    // (4) hypothesis: M abelian
    cj["M_abelian"] = M_abelian;
    if (M_abelian) {
      ok = true;
      Json w4;
      for (Element n : d.N) {
        for (Element h : d.K) {
          const Elt m = a.t(n, h);
          const Element n1 = p.G.mul(p.G.inv(n), p.on_G.apply(n, h));
          for (Element k : d.K) {
            const Elt x = comm(m, a.h(k));
            const bool same = x.key() == E.tensor_key(n1, k);
            const bool square = (x * x).key() == E.tensor_key(p.G.mul(n1, n1), k);
            if ((!same || !square) && ok) {
              ok = false;
              w4 = tuple_json({{"n", elem_name(p.G, n)}, {"h", elem_name(p.H, h)}, {"k", elem_name(p.H, k)}});
            }
          }
        }
      }
      record("square_of_triple_commutator", ok, w4);
    }

    // (5) hypothesis: K^phi centralizes M
    bool centralizes = true;
    for (Element k : d.K) {
      for (const Perm& m : M.generators()) {
        centralizes = centralizes && E.embed_H(k)[m[0]] == m[E.embed_H(k)[0]];
      }
    }
    cj["K_centralizes_M"] = centralizes;
    if (centralizes) {
      ok = true;
      Json w5;
      for (Element n : d.N) {
        for (Element k : d.K) {
          const Elt t = a.t(n, k);
          if ((t * t).key() != E.tensor_key(n, p.H.mul(k, k)) && ok) {
            ok = false;
            w5 = tuple_json({{"n", elem_name(p.G, n)}, {"k", elem_name(p.H, k)}});
          }
        }
      }
      record("square_of_tensor", ok, w5);
    }
    choices.push_back(cj);
  }
  r.details["choices"] = choices;
}

void claim_centralizer(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  const ActionPair& p = E.pair();
  const Arith a{E};
  Json choices = Json::array();
  for (const auto& [Nv, Kv] : subgroup_choices(p)) {
    const SubgroupData d = subgroup_data(E, Nv, Kv);
    // conjugacy classes of L on the tensor keys
    std::unordered_map<Point, Perm> materialized;
    auto apply = [&](Point key, Point pt) -> Point {
      auto it = d.keys.index.find(key);
      if (it != d.keys.index.end()) {
        const auto& [x, y] = d.T.witness[it->second];
        return a.t(x, y).at(pt);
      }
      auto m = materialized.find(key);
      if (m == materialized.end()) m = materialized.emplace(key, E.element(key)).first;
      return m->second[pt];
    };
    std::unordered_map<Point, std::uint64_t> class_of;
    std::vector<std::uint64_t> class_size;
    std::uint64_t worst = 0;
    for (Point k0 : d.T.keys) {
      if (class_of.count(k0)) continue;
      const std::uint64_t id = class_size.size();
      std::vector<Point> queue{k0};
      class_of[k0] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t j = 0; j < d.L.generators().size(); ++j) {
          const Perm& z = d.L.generators()[j];
          const Point conj = z[apply(queue[head], d.L.generator_inverse(j)[0])];
          if (class_of.emplace(conj, id).second) queue.push_back(conj);
        }
      }
      class_size.push_back(queue.size());
    }
    for (Point k : d.T.keys) {
      ++r.checked;
      const std::uint64_t index = class_size[class_of[k]];
      worst = std::max(worst, index);
      if (index > d.T.size()) {
        const auto& [x, y] = d.T.witness[d.keys.index.at(k)];
        fail(r, tuple_json({{"choice", choice_text(p, d)}, {"a", elem_name(p.G, x)}, {"b", elem_name(p.H, y)},
                            {"index", std::to_string(index)}, {"bound", std::to_string(d.T.size())}}));
      }
    }
    Json cj;
    cj["choice"] = choice_text(p, d);
    cj["tensor_set_size"] = d.T.size();
    cj["largest_index"] = worst;
    choices.push_back(cj);
  }
  r.details["choices"] = choices;
}

void claim_square_orders(const Ctx& c, ClaimReport& r) {
  const EtaGroup& E = *c.E;
  const FiniteGroup& G = E.pair().G;
  const std::vector<Element> all = G.all_elements();
  const TensorSet ts = tensor_set(E, all, all);
  std::vector<Perm> tperms;
  for (const auto& [x, y] : ts.witness) tperms.push_back(E.tensor(x, y));
  const PermGroup generated = E.generate(tperms);
  const std::uint64_t T = E.tensor_subgroup().order();
  r.details["tensor_set_size"] = ts.size();
  r.details["tensor_square_order"] = T;
  r.details["nu_order"] = E.order();
  CheckReport checks;
  checks.add("tensor_set_within_order", ts.size() <= T, std::to_string(ts.size()) + " <= " + std::to_string(T));
  checks.add("tensor_set_generates", same_group(generated, E.tensor_subgroup()));
  checks.add("nu_order", E.order() == T * G.order() * G.order(),
             std::to_string(E.order()) + " = " + std::to_string(T) + "*" + std::to_string(G.order()) + "^2");
  report_checks(r, checks);
}

void claim_derived(const Ctx& c, ClaimReport& r) {
  r.details["derived_G_order"] = c.N->derived_elements().size();
  report_checks(r, check_nu_derived_decomposition(*c.N));
}

void claim_quotient(const Ctx& c, ClaimReport& r) {
  r.details["tensor_square_order"] = c.E->tensor_subgroup().order();
  r.details["mu_order"] = c.N->mu().order();
  r.details["derived_G_order"] = c.N->derived_elements().size();
  report_checks(r, c.N->construction_checks());
}

Json primes_json(const std::vector<std::uint64_t>& v) { return Json(v); }

void claim_pi(const Ctx& c, ClaimReport& r) {
  const PiReport pr = periodicity_and_pi(*c.N);
  r.details["pi_G"] = primes_json(pr.pi_G);
  r.details["pi_tensor_square"] = primes_json(pr.pi_tensor);
  r.details["pi_delta"] = primes_json(pr.pi_delta);
  CheckReport checks;
  for (const Check& ch : pr.checks.checks) {
    if (ch.name == "pi_G_in_pi_tensor" || ch.name == "pi_from_orders_matches_elements") checks.checks.push_back(ch);
  }
  report_checks(r, checks);
}

void claim_diagonal(const Ctx& c, ClaimReport& r) {
  const PiReport pr = periodicity_and_pi(*c.N);
  r.details["abelianization"] = pr.abelianization.to_string();
  r.details["delta_formula"] = pr.delta_formula.to_string();
  r.details["delta_order"] = c.N->delta().order();
  r.details["delta_invariants"] = pr.delta_invariants.to_string();
  CheckReport checks;
  for (const Check& ch : pr.checks.checks) {
    if (ch.name != "pi_G_in_pi_tensor" && ch.name != "pi_from_orders_matches_elements") checks.checks.push_back(ch);
  }
  report_checks(r, checks);
}

struct ClaimDef {
  const char* id;
  enum Needs { pair_only, eta, nu } needs;
  ClaimFn fn;
  std::function<bool(const Ctx&)> applies;
};

const std::vector<ClaimDef>& claim_defs() {
  auto always = [](const Ctx&) { return true; };
  static const std::vector<ClaimDef> defs{
      {"compatibility", ClaimDef::pair_only, claim_compatibility, always},
      {"defining_relations", ClaimDef::eta, claim_defining_relations, always},
      {"decomposition", ClaimDef::eta, claim_decomposition, always},
      {"trivial_action_oracle", ClaimDef::eta, claim_trivial_oracle,
       [](const Ctx& c) {
         return both_actions_trivial(c.inst.pair) && c.inst.pair.G.order() <= 12 && c.inst.pair.H.order() <= 12;
       }},
      {"tensor_conjugation_identities", ClaimDef::eta, claim_identities, always},
      {"tensor_subgroup_machinery", ClaimDef::eta, claim_machinery, always},
      {"centralizer_bound", ClaimDef::eta, claim_centralizer, always},
      {"tensor_square_orders", ClaimDef::nu, claim_square_orders, always},
      {"derived_decomposition", ClaimDef::nu, claim_derived, always},
      {"quotient_identity", ClaimDef::nu, claim_quotient, always},
      {"pi_containment", ClaimDef::nu, claim_pi, [](const Ctx& c) { return c.inst.pair.G.order() > 1; }},
      {"diagonal_formula", ClaimDef::nu, claim_diagonal, always},
  };
  return defs;
}

bool selected(const std::string& id, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  return std::any_of(filters.begin(), filters.end(),
                     [&](const std::string& f) { return id.compare(0, f.size(), f) == 0; });
}

const char* anchor_of(const std::string& id) {
  for (const ClaimInfo& ci : claim_catalog()) {
    if (id == ci.id) return ci.anchor;
  }
  return "";
}

}  // namespace

std::vector<std::pair<std::vector<Element>, std::vector<Element>>> subgroup_choices(const ActionPair& pair,
                                                                                    std::size_t proper) {
  auto candidates = [](const FiniteGroup& A) {
    std::vector<std::vector<Element>> out;
    auto add = [&](std::vector<Element> s) {
      std::sort(s.begin(), s.end());
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    };
    add(A.all_elements());
    add(A.derived_subgroup());
    add(A.center());
    for (Element x = 0; x < A.order(); ++x) {
      const Element one[] = {x};
      add(A.subgroup_generated(one));
    }
    return out;
  };
  const auto cn = candidates(pair.G);
  const auto ck = candidates(pair.H);
  std::vector<std::pair<std::vector<Element>, std::vector<Element>>> out{{cn[0], ck[0]}};
  for (const auto& N : cn) {
    for (const auto& K : ck) {
      if (out.size() > proper) return out;
      if (N.size() <= 1 || K.size() <= 1) continue;
      if (N.size() == pair.G.order() && K.size() == pair.H.order()) continue;
      try {
        check_invariant_pair(pair, N, K);
      } catch (const InvarianceError&) {
        continue;
      }
      out.emplace_back(N, K);
    }
  }
  return out;
}

std::vector<ClaimReport> run_instance(const Instance& inst, const RunOptions& opt) {
  std::vector<ClaimReport> out;
  std::optional<EtaGroup> eta;
  std::optional<NuGroup> nu;
  std::optional<Json> blocked;  // reason the carrier is unavailable
  Verdict blocked_verdict = Verdict::skipped;
  bool tried = false;
  auto ensure = [&](ClaimDef::Needs needs) {
    if (tried) return;
    tried = true;
    try {
      if (inst.nu && needs != ClaimDef::pair_only) {
        nu.emplace(construct_nu(inst.pair.G, opt.max_cosets));
      } else {
        eta.emplace(construct_eta(inst.pair, opt.max_cosets));
      }
    } catch (const CapacityError& e) {
      blocked = Json{{"reason", "capacity exceeded"}, {"cosets_defined", e.cosets_defined()},
                     {"max_cosets", opt.max_cosets}};
    } catch (const Error& e) {
      blocked = Json{{"reason", e.what()}};
      blocked_verdict = Verdict::fail;
    }
  };

  for (const ClaimDef& def : claim_defs()) {
    if (!selected(def.id, opt.filters)) continue;
    if (inst.expect_incompatible && def.needs != ClaimDef::pair_only) continue;
    if (def.needs == ClaimDef::nu && !inst.nu) continue;
    ClaimReport r;
    r.claim = def.id;
    r.anchor = anchor_of(def.id);
    r.instance = inst.name;
    const auto t0 = std::chrono::steady_clock::now();
    Ctx ctx{inst, opt};
    if (!def.applies(ctx)) continue;
    if (def.needs != ClaimDef::pair_only) {
      ensure(def.needs);
      if (blocked) {
        r.verdict = blocked_verdict;
        r.witness = *blocked;
        out.push_back(std::move(r));
        continue;
      }
      ctx.E = nu ? &nu->eta() : &*eta;
      ctx.N = nu ? &*nu : nullptr;
      if (def.needs == ClaimDef::nu && !ctx.N) continue;
      if (std::string(def.id) == "tensor_conjugation_identities" && ctx.E->order() > opt.identity_carrier_limit) {
        continue;
      }
    }
    try {
      def.fn(ctx, r);
    } catch (const Error& e) {
      r.verdict = Verdict::fail;
      r.witness = Json{{"error", e.what()}};
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClaimReport> run_corpus(const std::vector<Instance>& corpus, const RunOptions& options) {
  std::vector<std::vector<ClaimReport>> results(corpus.size());
  std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, corpus.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) results[i] = run_instance(corpus[i], options);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<ClaimReport> out;
  for (auto& v : results) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

bool any_failure(const std::vector<ClaimReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.verdict == Verdict::fail; });
}

}  // namespace eta
