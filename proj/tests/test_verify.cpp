#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "eta/builtins.hpp"
#include "eta/error.hpp"
#include "eta/json_io.hpp"
#include "eta/verify.hpp"

using namespace eta;

namespace {

std::vector<Instance> small_corpus() {
  std::vector<Instance> out;
  for (const Instance& i : default_corpus())
    if (i.name == "nu(S3)" || i.name == "eta(C2,C2) trivial" || i.name == "nu(C4)" || i.expect_incompatible)
      out.push_back(i);
  return out;
}

std::string dump(const std::vector<ClaimReport>& rs) {
  std::string s;
  for (const auto& r : rs) s += r.to_json(false).dump() + "\n";
  return s;
}

}  // namespace

TEST_CASE("corpus composition") {
  const auto corpus = default_corpus();
  std::set<std::string> names;
  std::size_t nu = 0, trivial = 0, incompatible = 0;
  for (const Instance& i : corpus) {
    CHECK(names.insert(i.name).second);
    nu += i.nu;
    trivial += both_actions_trivial(i.pair);
    incompatible += i.expect_incompatible;
  }
  CHECK(nu >= 12);
  CHECK(trivial >= 10);
  CHECK(incompatible == 1);
  CHECK(corpus.size() >= 12);
}

TEST_CASE("catalog ids are unique and anchored") {
  std::set<std::string> ids;
  for (const ClaimInfo& c : claim_catalog()) {
    CHECK(ids.insert(c.id).second);
    CHECK(std::string(c.anchor).size() > 0);
  }
  CHECK(ids.count("tensor_conjugation_identities"));
  CHECK(ids.count("decomposition"));
}

TEST_CASE("small corpus passes and is deterministic") {
  RunOptions opt;
  opt.threads = 2;
  const auto a = run_corpus(small_corpus(), opt);
  opt.threads = 1;
  const auto b = run_corpus(small_corpus(), opt);
  CHECK_FALSE(any_failure(a));
  CHECK(dump(a) == dump(b));
  for (const auto& r : a) {
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.witness.is_null());
  }
}

TEST_CASE("tuple counts for the C2 trivial pair") {
  RunOptions opt;
  opt.filters = {"tensor_conjugation_identities"};
  Instance inst;
  for (const Instance& i : default_corpus())
    if (i.name == "eta(C2,C2) trivial") inst = i;
  const auto rs = run_instance(inst, opt);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == Verdict::pass);
  CHECK(rs[0].details["b_tuples"] == 16);
}

TEST_CASE("filters select by id prefix") {
  RunOptions opt;
  opt.filters = {"tensor_"};
  const auto rs = run_corpus(small_corpus(), opt);
  REQUIRE_FALSE(rs.empty());
  for (const auto& r : rs) CHECK(r.claim.rfind("tensor_", 0) == 0);
}

TEST_CASE("capacity overflow is a skip, not a failure") {
  RunOptions opt;
  opt.max_cosets = 10;
  const auto rs = run_corpus(small_corpus(), opt);
  CHECK_FALSE(any_failure(rs));
  std::size_t skipped = 0;
  for (const auto& r : rs)
    if (r.verdict == Verdict::skipped) {
      ++skipped;
      CHECK(r.witness.contains("cosets_defined"));
      CHECK(r.witness["max_cosets"] == 10);
    }
  CHECK(skipped > 0);
}

TEST_CASE("empty corpus gives an empty report") {
  CHECK(run_corpus({}, RunOptions{}).empty());
}

TEST_CASE("a wrong expectation fails reproducibly with a witness") {
  Instance inst;
  inst.name = "C2 marked incompatible";
  inst.pair = trivial_pair(cyclic_group(2), cyclic_group(2));
  inst.expect_incompatible = true;
  RunOptions opt;
  opt.filters = {"compatibility"};
  const auto a = run_instance(inst, opt);
  const auto b = run_instance(inst, opt);
  REQUIRE(a.size() == 1);
  CHECK(a[0].verdict == Verdict::fail);
  CHECK_FALSE(a[0].witness.is_null());
  CHECK(dump(a) == dump(b));
}

TEST_CASE("subgroup choices start with the full pair") {
  const ActionPair p = conjugation_pair(builtin_group("S3"));
  const auto choices = subgroup_choices(p);
  REQUIRE(choices.size() >= 2);
  CHECK(choices[0].first.size() == 6);
  CHECK(choices[0].second.size() == 6);
  for (const auto& [N, K] : choices) CHECK_NOTHROW(check_invariant_pair(p, N, K));
}

TEST_CASE("json input") {
  const Json g = parse_json_text(R"({"name": "C3", "elements": ["e","a","b"], "table": [[0,1,2],[1,2,0],[2,0,1]]})");
  CHECK(group_from_json(g).order() == 3);
  CHECK(group_from_json(parse_json_text(R"("D8")")).order() == 8);
  CHECK(group_from_json(parse_json_text(R"({"degree": 3, "generators": [[1,0,2],[1,2,0]]})")).order() == 6);
  CHECK(group_from_json(parse_json_text(R"({"presentation": "< a | a^5 >"})")).order() == 5);

  try {
    parse_json_text("{\n  \"G\": [1,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  const ActionPair p = pair_from_json(parse_json_text(R"({"schema": 1, "G": "S3", "H": "S3", "actions": "conjugation"})"));
  CHECK(check_compatibility(p).compatible());
  const ActionPair back = pair_from_json(pair_to_json(incompatible_example().pair));
  CHECK(back.on_G == incompatible_example().pair.on_G);
  CHECK_FALSE(check_compatibility(back).compatible());

  const auto corpus = corpus_from_json(parse_json_text(
      R"({"schema": 1, "instances": [{"nu": "C3"}, {"pair": {"G": "C2", "H": "C3", "actions": "trivial"}}]})"));
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].nu);
  CHECK_FALSE(corpus[1].nu);
}
