#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eta/action.hpp"
#include "eta/nu.hpp"
#include "eta/verify.hpp"

namespace eta {

inline constexpr int kSchemaVersion = 1;

// Parses JSON text; errors become ParseError with line and column.
Json parse_json_text(std::string_view text);
std::string read_file(const std::string& path);

// A group spec is one of
//   {"builtin": "D8"}
//   {"name": .., "elements": [..], "table": [[..], ..]}
//   {"name": .., "degree": n, "generators": [[images], ..]}
//   {"name": .., "presentation": "< a, b | .. >"}
// A bare JSON string is read as a builtin name.
FiniteGroup group_from_json(const Json& spec, std::size_t max_cosets = kDefaultMaxCosets);
FiniteGroup group_from_presentation(const std::string& text, const std::string& name,
                                    std::size_t max_cosets = kDefaultMaxCosets);

// {"schema": 1, "name": .., "G": spec, "H": spec,
//  "H_on_G": [[..]], "G_on_H": [[..]]}  (row h lists g^h)
// or "actions": "trivial" | "conjugation" in place of the two tables.
ActionPair pair_from_json(const Json& spec, std::size_t max_cosets = kDefaultMaxCosets);

// {"schema": 1, "instances": [{"nu": spec} | {"pair": pair-spec}, ..]}
std::vector<Instance> corpus_from_json(const Json& spec, std::size_t max_cosets = kDefaultMaxCosets);

// Full table form, readable by group_from_json / pair_from_json.
Json group_to_json(const FiniteGroup& G);
Json pair_to_json(const ActionPair& pair);
// Name and order only, as embedded in reports.
Json group_summary_json(const FiniteGroup& G);
Json pair_summary_json(const ActionPair& pair);
Json check_report_json(const CheckReport& report);
Json invariants_json(const AbelianInvariants& a);

Json tensor_report(const EtaGroup& E);
Json nu_report(const NuGroup& N);

}  // namespace eta
