#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eta/action.hpp"
#include "eta/coset_enum.hpp"

namespace eta {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, skipped };
const char* verdict_name(Verdict v);

struct ClaimReport {
  std::string claim;
  std::string anchor;
  std::string instance;
  Verdict verdict = Verdict::pass;
  std::uint64_t checked = 0;
  Json witness;  // null unless the verdict is fail (or skipped, with the reason)
  Json details = Json::object();
  double millis = 0;

  Json to_json(bool with_timing) const;
};

struct Instance {
  std::string name;
  ActionPair pair;
  bool nu = false;                  // conjugation self-pair; nu claims apply
  bool expect_incompatible = false;
};

std::vector<Instance> default_corpus();
// The S3 / C2 pair: C2 acts on S3 by conjugation by a transposition, S3 acts
// trivially on C2.
Instance incompatible_example();

struct ClaimInfo {
  const char* id;
  const char* anchor;
};
const std::vector<ClaimInfo>& claim_catalog();

struct RunOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::vector<std::string> filters;  // claim ids or prefixes; empty = all
  std::size_t threads = 0;           // 0 = hardware concurrency
  std::size_t identity_carrier_limit = 10'000;
};

bool both_actions_trivial(const ActionPair& pair);

// Subgroup pairs (N, K) used by the machinery and centralizer claims: the
// full pair first, then up to `proper` mutually invariant proper pairs with
// N and K non-trivial.
std::vector<std::pair<std::vector<Element>, std::vector<Element>>> subgroup_choices(const ActionPair& pair,
                                                                                    std::size_t proper = 3);

std::vector<ClaimReport> run_instance(const Instance& instance, const RunOptions& options);
// Reports ordered by (instance, claim) position.
std::vector<ClaimReport> run_corpus(const std::vector<Instance>& corpus, const RunOptions& options);
bool any_failure(const std::vector<ClaimReport>& reports);

}  // namespace eta
