#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "eta/action.hpp"
#include "eta/builtins.hpp"
#include "eta/error.hpp"
#include "eta/eta_group.hpp"
#include "eta/verify.hpp"
#include "oracles.hpp"

using namespace eta;

namespace {

std::vector<Element> all(const FiniteGroup& g) { return g.all_elements(); }

std::vector<std::uint64_t> cyclic_orders_of_abelianization(const FiniteGroup& g) {
  return abelian_invariants_of(g.regular_perm_group()).factors();
}

}  // namespace

TEST_CASE("presentation shape") {
  const FiniteGroup c2 = cyclic_group(2);
  const Presentation p = build_eta_presentation(trivial_pair(c2, c2));
  CHECK(p.generators == std::vector<std::string>{"g1", "h1"});
  // two squares, then (g, g1, h) with g1 in {1, a}, then (g, h, h1) likewise
  CHECK(p.relators.size() == 6);
  CHECK(build_eta_presentation(conjugation_pair(c2)).relators.size() == 6);

  // trivial G: only the relations of H
  const FiniteGroup c3 = cyclic_group(3);
  const Presentation only_h = build_eta_presentation(trivial_pair(FiniteGroup(), c3));
  CHECK(only_h.generators == std::vector<std::string>{"h1", "h2"});
  const Presentation no_g = build_eta_presentation(trivial_pair(c3, FiniteGroup()));
  CHECK(no_g.relators.size() == only_h.relators.size());
  const EtaGroup E = construct_eta(trivial_pair(FiniteGroup(), c3));
  CHECK(E.order() == 3);
  CHECK(E.tensor_subgroup().order() == 1);

  CHECK_THROWS_AS(build_eta_presentation(incompatible_example().pair), IncompatibleActions);
}

TEST_CASE("small eta groups") {
  const FiniteGroup c2 = cyclic_group(2), c3 = cyclic_group(3);
  const EtaGroup a = construct_eta(trivial_pair(c2, c2));
  CHECK(a.tensor_subgroup().order() == 2);
  CHECK(a.order() == 8);
  const EtaGroup b = construct_eta(trivial_pair(c2, c3));
  CHECK(b.tensor_subgroup().order() == 1);
  CHECK(b.order() == 6);
  const EtaGroup v = construct_eta(conjugation_pair(builtin_group("V4")));
  CHECK(v.tensor_subgroup().order() == 16);
  CHECK(v.order() == 256);
  const EtaGroup t = construct_eta(trivial_pair(FiniteGroup(), FiniteGroup()));
  CHECK(t.order() == 1);
  CHECK(check_decomposition(t).passed());
}

TEST_CASE("tensor keys match carrier commutators") {
  const EtaGroup E = construct_eta(conjugation_pair(builtin_group("S3")));
  const ActionPair& p = E.pair();
  for (Element g : all(p.G))
    for (Element h : all(p.H)) {
      const Perm t = E.embed_G_inverse(g) * E.embed_H_inverse(h) * E.embed_G(g) * E.embed_H(h);
      CHECK(E.tensor(g, h) == t);
      CHECK(E.tensor_key(g, h) == t[0]);
      CHECK(E.element(t[0]) == t);
    }
  // embeddings are homomorphisms
  for (Element x : all(p.G))
    for (Element y : all(p.G)) CHECK(E.embed_G(x) * E.embed_G(y) == E.embed_G(p.G.mul(x, y)));
}

TEST_CASE("tensor sets") {
  const FiniteGroup c2 = cyclic_group(2);
  const EtaGroup E = construct_eta(trivial_pair(c2, c2));
  const std::vector<Element> one{0}, full{0, 1};
  CHECK(tensor_set(E, one, full).size() == 1);
  CHECK(tensor_set(E, full, one).size() == 1);
  const TensorSet ts = tensor_set(E, full, full);
  CHECK(ts.size() == 2);
  // brute force: distinct commutators
  std::set<Point> keys;
  for (Element g : full)
    for (Element h : full) keys.insert(E.tensor(g, h)[0]);
  CHECK(keys.size() == 2);
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(E.tensor_key(ts.witness[i].first, ts.witness[i].second) == ts.keys[i]);

  const FiniteGroup s3 = builtin_group("S3");
  const ActionPair p = conjugation_pair(s3);
  const auto a3 = s3.derived_subgroup();
  CHECK_NOTHROW(check_invariant_pair(p, a3, all(s3)));
  const std::vector<Element> transposition = s3.subgroup_generated(std::vector<Element>{1});
  REQUIRE(transposition.size() == 2);
  CHECK_THROWS_AS(check_invariant_pair(p, transposition, all(s3)), InvarianceError);
  CHECK_THROWS_AS(check_invariant_pair(p, std::vector<Element>{0, 1, 2}, all(s3)), Error);
}

TEST_CASE("decomposition over the corpus") {
  for (const Instance& inst : default_corpus()) {
    if (inst.expect_incompatible) continue;
    const EtaGroup E = construct_eta(inst.pair);
    const CheckReport r = check_decomposition(E);
    CHECK_MESSAGE(r.passed(), inst.name);
    CHECK(E.order() == E.tensor_subgroup().order() * inst.pair.G.order() * inst.pair.H.order());
  }
}

TEST_CASE("trivial-action baseline") {
  CHECK(trivial_action_baseline(cyclic_group(2), cyclic_group(2)).factors() == std::vector<std::uint64_t>{2});
  CHECK(trivial_action_baseline(builtin_group("C2xC6"), cyclic_group(2)).factors() ==
        std::vector<std::uint64_t>{2, 2});
  CHECK(trivial_action_baseline(FiniteGroup(), builtin_group("S3")).factors().empty());
  // independent oracle on abelianizations
  for (const char* a : {"S3", "D8", "Q8", "C4", "A4"})
    for (const char* b : {"C2", "C6", "V4", "D10"}) {
      const FiniteGroup A = builtin_group(a), B = builtin_group(b);
      CHECK(trivial_action_baseline(A, B).factors() ==
            oracle::z_tensor(cyclic_orders_of_abelianization(A), cyclic_orders_of_abelianization(B)));
    }
  // enumerated tensor subgroup equals the baseline under trivial actions
  for (const char* a : {"S3", "C4", "V4"})
    for (const char* b : {"C2", "C6", "Q8"}) {
      const FiniteGroup A = builtin_group(a), B = builtin_group(b);
      const EtaGroup E = construct_eta(trivial_pair(A, B));
      CHECK(abelian_invariants_of(E.tensor_subgroup()) == trivial_action_baseline(A, B));
    }
}

TEST_CASE("capacity errors report progress") {
  try {
    construct_eta(conjugation_pair(builtin_group("S3")), 10);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.cosets_defined() >= 10);
  }
}

TEST_CASE("relabeling the group does not change eta") {
  std::mt19937 rng(17);
  for (const char* name : {"S3", "Q8", "D8"}) {
    const FiniteGroup g = builtin_group(name);
    std::vector<Element> perm(g.order());
    for (Element i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Element> back(perm.size());
    for (Element i = 0; i < perm.size(); ++i) back[perm[i]] = i;
    std::vector<std::vector<Element>> table(g.order(), std::vector<Element>(g.order()));
    std::vector<std::string> names;
    for (Element i = 0; i < g.order(); ++i) {
      names.push_back(g.element_names()[perm[i]]);
      for (Element j = 0; j < g.order(); ++j) table[i][j] = back[g.mul(perm[i], perm[j])];
    }
    const FiniteGroup h(name, names, table);
    const EtaGroup a = construct_eta(conjugation_pair(g));
    const EtaGroup b = construct_eta(conjugation_pair(h));
    CHECK(a.order() == b.order());
    CHECK(abelian_invariants_of(a.tensor_subgroup()) == abelian_invariants_of(b.tensor_subgroup()));
    CHECK(abelian_invariants_of(a.carrier()) == abelian_invariants_of(b.carrier()));
  }
}
