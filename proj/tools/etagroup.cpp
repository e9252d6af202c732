// etagroup: tensor products, nu(G) and the verification suite from the shell.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eta/abelian.hpp"
#include "eta/builtins.hpp"
#include "eta/error.hpp"
#include "eta/eta_group.hpp"
#include "eta/json_io.hpp"
#include "eta/nu.hpp"
#include "eta/verify.hpp"

using namespace eta;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kInvalidAction = 3, kIncompatible = 4, kCapacity = 5 };

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("ETA_MAX_COSETS")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "etagroup: ignoring malformed ETA_MAX_COSETS='" << env << "'\n";
  }
  return kDefaultMaxCosets;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void pretty_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) std::cerr << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

struct GroupInput {
  std::vector<std::string> builtins;
  std::vector<std::string> files;
  std::string presentation;
};

FiniteGroup load_group(const std::string& builtin, const std::string& file, const std::string& presentation,
                       std::size_t max_cosets) {
  if (!builtin.empty()) return builtin_group(builtin);
  if (!file.empty()) return group_from_json(parse_json_text(read_file(file)), max_cosets);
  if (!presentation.empty()) return group_from_presentation(presentation, "P", max_cosets);
  throw ParseError("no group given (use --builtin, --group or --presentation)");
}

struct PairInput {
  std::vector<std::string> builtins;
  std::vector<std::string> groups;
  std::string pair_file;
  bool trivial = false;
  bool conjugation = false;
};

void add_pair_options(CLI::App* cmd, PairInput& in) {
  cmd->add_option("--builtin", in.builtins, "G and H as builtin names (one name means G = H)")->expected(1, 2);
  cmd->add_option("--group", in.groups, "G and H as group files (JSON)")->expected(1, 2);
  cmd->add_option("--pair", in.pair_file, "action pair file (JSON)");
  cmd->add_flag("--trivial-actions", in.trivial, "both groups act trivially");
  cmd->add_flag("--conjugation", in.conjugation, "G = H acting on itself by conjugation");
}

ActionPair load_pair(const PairInput& in, std::size_t max_cosets) {
  if (!in.pair_file.empty()) return pair_from_json(parse_json_text(read_file(in.pair_file)), max_cosets);
  std::vector<FiniteGroup> gs;
  for (const auto& b : in.builtins) gs.push_back(builtin_group(b));
  for (const auto& f : in.groups) gs.push_back(group_from_json(parse_json_text(read_file(f)), max_cosets));
  if (gs.empty()) throw ParseError("no groups given (use --builtin, --group or --pair)");
  if (gs.size() == 1) gs.push_back(gs[0]);
  if (gs.size() != 2) throw ParseError("expected exactly two groups");
  if (in.trivial == in.conjugation) throw ParseError("choose one of --trivial-actions or --conjugation");
  if (in.trivial) return trivial_pair(gs[0], gs[1]);
  if (!(gs[0].table_rows() == gs[1].table_rows())) throw InvalidAction("--conjugation needs G = H");
  return conjugation_pair(gs[0]);
}

AbelianInvariants parse_invariants(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::vector<std::uint64_t> orders;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      orders.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("'" + tok + "' is not a positive integer in '" + text + "'");
    }
  }
  try {
    return AbelianInvariants::from_cyclic_orders(orders);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json primes(const std::vector<std::uint64_t>& v) { return Json(v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-abelian tensor products via eta(G,H): construction and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t max_cosets = default_max_cosets();
  bool pretty = false;
  app.add_option("--max-cosets", max_cosets, "coset table capacity (default $ETA_MAX_COSETS or 1000000)");
  app.add_flag("--pretty", pretty, "human-readable table on standard error");

  PairInput tensor_in;
  auto* tensor = app.add_subcommand("tensor", "build eta(G,H) and its tensor subgroup [G,H^phi]");
  add_pair_options(tensor, tensor_in);

  PairInput compat_in;
  auto* compat = app.add_subcommand("compat", "check that the two actions are compatible");
  add_pair_options(compat, compat_in);

  std::string nu_builtin, nu_file, nu_presentation;
  auto* nu = app.add_subcommand("nu", "build nu(G) with Delta(G), mu(G) and all checks");
  nu->add_option("--builtin", nu_builtin, "builtin group name (e.g. D8, Q8, C6, S3, A4, C2xC4)");
  nu->add_option("--group", nu_file, "group file (JSON)");
  nu->add_option("--presentation", nu_presentation, "presentation text, e.g. \"< a, b | a^2, b^3, (a b)^2 >\"");

  std::vector<std::string> filters;
  std::string corpus_file;
  bool timings = false;
  std::size_t threads = 0;
  auto* verify = app.add_subcommand("verify", "run every claim over the corpus, one JSON line per report");
  verify->add_option("--filter", filters, "claim id or prefix (repeatable)");
  verify->add_option("--corpus", corpus_file, "corpus file (JSON) instead of the builtin corpus");
  verify->add_flag("--timings", timings, "include per-report milliseconds (output no longer byte-stable)");
  verify->add_option("--threads", threads, "worker threads (default: hardware concurrency)");

  auto* abelian = app.add_subcommand("abelian", "integer utilities: Smith form, Z-tensor, Delta formula, pi sets");
  abelian->require_subcommand(1);
  std::string matrix_text;
  auto* snf = abelian->add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix_text, "JSON rows, e.g. \"[[2,0],[0,3]]\"")->required();
  std::string ta, tb;
  auto* ztensor = abelian->add_subcommand("tensor", "Z-tensor product of two finite abelian groups");
  ztensor->add_option("A", ta, "cyclic orders, e.g. \"[2,6]\"")->required();
  ztensor->add_option("B", tb, "cyclic orders")->required();
  std::string da;
  auto* delta = abelian->add_subcommand("delta", "invariants of prod C_ni x prod_(j<k) C_gcd(nj,nk)");
  delta->add_option("A", da, "cyclic orders")->required();
  std::string pa;
  std::uint64_t porder = 0;
  auto* pi = abelian->add_subcommand("pi", "prime divisors of a group order");
  pi->add_option("A", pa, "cyclic orders");
  pi->add_option("--order", porder, "group order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*tensor) {
      const ActionPair pair = load_pair(tensor_in, max_cosets);
      const CompatibilityReport rep = check_compatibility(pair);
      if (!rep.compatible()) {
        const auto& f = rep.failures.front();
        Json j{{"schema", kSchemaVersion}, {"command", "tensor"}, {"input", pair_summary_json(pair)}, {"compatible", false},
               {"failing_triple", {{"family", f.family}, {"x", f.x}, {"y", f.y}, {"z", f.z}, {"lhs", f.lhs}, {"rhs", f.rhs}}}};
        emit(j);
        return kIncompatible;
      }
      const EtaGroup E = construct_eta(pair, max_cosets);
      const Json j = tensor_report(E);
      emit(j);
      if (pretty) {
        pretty_rows({{"pair", pair.name},
                     {"|eta(G,H)|", scalar(j["eta_order"])},
                     {"|G (x) H|", scalar(j["tensor_order"])},
                     {"tensor set", scalar(j["tensor_set_size"])},
                     {"decomposition", j["all_passed"].get<bool>() ? "pass" : "FAIL"}});
      }
      return j["all_passed"].get<bool>() ? kOk : kFail;
    }
    if (*compat) {
      const ActionPair pair = load_pair(compat_in, max_cosets);
      const CompatibilityReport rep = check_compatibility(pair);
      Json j{{"schema", kSchemaVersion}, {"command", "compat"}, {"input", pair_summary_json(pair)},
             {"compatible", rep.compatible()}, {"triples_checked", rep.triples_checked}};
      Json fails = Json::array();
      for (const auto& f : rep.failures) {
        fails.push_back({{"family", f.family}, {"x", f.x}, {"y", f.y}, {"z", f.z}, {"lhs", f.lhs}, {"rhs", f.rhs}});
      }
      j["failures"] = fails;
      emit(j);
      if (pretty) {
        pretty_rows({{"pair", pair.name}, {"triples", std::to_string(rep.triples_checked)},
                     {"failures", std::to_string(rep.failures.size())}});
      }
      return rep.compatible() ? kOk : kIncompatible;
    }
    if (*nu) {
      const FiniteGroup G = load_group(nu_builtin, nu_file, nu_presentation, max_cosets);
      const NuGroup N = construct_nu(G, max_cosets);
      const Json j = nu_report(N);
      emit(j);
      if (pretty) {
        pretty_rows({{"group", G.name()},
                     {"|G|", std::to_string(G.order())},
                     {"|nu(G)|", scalar(j["nu_order"])},
                     {"|G (x) G|", scalar(j["tensor_square_order"])},
                     {"|Delta(G)|", scalar(j["delta_order"])},
                     {"|mu(G)|", scalar(j["mu_order"])},
                     {"|G'|", scalar(j["derived_order"])},
                     {"pi(G)", j["pi"]["G"].dump()},
                     {"pi(G (x) G)", j["pi"]["tensor_square"].dump()},
                     {"checks", j["all_passed"].get<bool>() ? "pass" : "FAIL"}});
      }
      return j["all_passed"].get<bool>() ? kOk : kFail;
    }
    if (*verify) {
      RunOptions opt;
      opt.max_cosets = max_cosets;
      opt.filters = filters;
      opt.threads = threads;
      const std::vector<Instance> corpus = corpus_file.empty()
                                               ? default_corpus()
                                               : corpus_from_json(parse_json_text(read_file(corpus_file)), max_cosets);
      const std::vector<ClaimReport> reports = run_corpus(corpus, opt);
      for (const ClaimReport& r : reports) std::cout << r.to_json(timings).dump() << "\n";
      if (pretty) {
        std::size_t wi = 8, wc = 5;
        for (const auto& r : reports) {
          wi = std::max(wi, r.instance.size());
          wc = std::max(wc, r.claim.size());
        }
        std::size_t pass = 0, fail = 0, skip = 0;
        for (const auto& r : reports) {
          std::cerr << std::left << std::setw(static_cast<int>(wi) + 2) << r.instance
                    << std::setw(static_cast<int>(wc) + 2) << r.claim << verdict_name(r.verdict) << "\n";
          (r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? fail : skip)++;
        }
        std::cerr << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
      }
      return any_failure(reports) ? kFail : kOk;
    }
    if (*abelian) {
      Json j{{"schema", kSchemaVersion}, {"command", "abelian"}};
      if (*snf) {
        const Json rows = parse_json_text(matrix_text);
        std::vector<std::vector<long long>> m;
        try {
          m = rows.get<std::vector<std::vector<long long>>>();
        } catch (const nlohmann::json::exception&) {
          throw ParseError("matrix must be a JSON array of integer rows");
        }
        for (const auto& r : m) {
          if (r.size() != m.front().size()) throw ParseError("matrix rows differ in length");
        }
        const IntMatrix M = IntMatrix::from_rows(m);
        const SmithForm s = smith_normal_form(M);
        auto to_json = [](const IntMatrix& x) {
          Json out = Json::array();
          for (std::size_t i = 0; i < x.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < x.cols(); ++k) row.push_back(x.at(i, k).get_str());
            out.push_back(row);
          }
          return out;
        };
        Json diag = Json::array();
        for (const BigInt& d : s.diagonal) diag.push_back(d.get_str());
        j["operation"] = "snf";
        j["diagonal"] = diag;
        j["left"] = to_json(s.left);
        j["right"] = to_json(s.right);
      } else if (*ztensor) {
        j["operation"] = "tensor";
        j["result"] = invariants_json(z_tensor(parse_invariants(ta), parse_invariants(tb)));
      } else if (*delta) {
        j["operation"] = "delta";
        j["result"] = invariants_json(delta_of_abelian(parse_invariants(da)));
      } else if (*pi) {
        j["operation"] = "pi";
        if (!pa.empty()) {
          j["result"] = primes(pi_set(parse_invariants(pa)));
        } else if (porder > 0) {
          j["result"] = primes(pi_set(porder));
        } else {
          throw ParseError("pi needs cyclic orders or --order");
        }
      }
      emit(j);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "etagroup: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidAction& e) {
    std::cerr << "etagroup: invalid action: " << e.what() << "\n";
    return kInvalidAction;
  } catch (const IncompatibleActions& e) {
    std::cerr << "etagroup: " << e.what() << "\n";
    return kIncompatible;
  } catch (const CapacityError& e) {
    std::cerr << "etagroup: " << e.what() << " (" << e.cosets_defined() << " cosets defined)\n";
    return kCapacity;
  } catch (const InternalError& e) {
    std::cerr << "etagroup: internal error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    // unknown builtins and malformed groups are input errors
    std::cerr << "etagroup: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
