// Command-line front end: solve a market, decompose the result into a
// lottery, draw seeded samples, and audit the mechanism's properties.
// All output is JSON on stdout; errors go to stderr with exit code 2 and a
// failed audit exits 1.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mps/circulation.hpp"
#include "mps/constraints.hpp"
#include "mps/decompose.hpp"
#include "mps/eating.hpp"
#include "mps/errors.hpp"
#include "mps/fosd.hpp"
#include "mps/json_io.hpp"
#include "mps/market.hpp"
#include "mps/oracles.hpp"

namespace {

using mps::Json;

enum class Command { Solve, Decompose, Sample, Audit, Oracle, Compare };

struct RunConfig {
  Command command = Command::Solve;
  std::string market_path;
  std::optional<uint64_t> seed;
  bool trace = false;
  bool emit_system = false;
  bool general_d = false;
  int max_sp_objects = 5;
  int max_enum_agents = 5;
  int max_enum_objects = 5;
  int max_anon_agents = 6;
};

mps::Market load_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mps::ParseError("cannot open market file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return mps::parse_market(buffer.str());
}

mps::MpsResult solve(const mps::Market& market, const RunConfig& config) {
  if (market.demand > 1 || config.general_d) return mps::mps_general(market);
  return mps::mps_unit(market);
}

void print(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_solve(const mps::Market& market, const RunConfig& config) {
  const mps::MpsResult result = solve(market, config);
  Json out = mps::allocation_to_json(market, result.allocation);
  if (config.trace) out["trace"] = mps::trace_to_json(market, result.trace);
  print(out);
  return 0;
}

int run_decompose(const mps::Market& market, const RunConfig& config) {
  const mps::MpsResult result = solve(market, config);
  print(mps::lottery_to_json(market, mps::decompose(market, result.allocation)));
  return 0;
}

int run_sample(const mps::Market& market, const RunConfig& config) {
  const mps::MpsResult result = solve(market, config);
  const mps::Lottery lottery = mps::decompose(market, result.allocation);
  const auto& drawn = mps::sample(lottery, *config.seed);
  Json out;
  out["seed"] = *config.seed;
  out["assignment"] = mps::assignment_to_json(market, drawn);
  print(out);
  return 0;
}

int run_audit(const mps::Market& market, const RunConfig& config) {
  const mps::MpsResult result = solve(market, config);
  const mps::RandomAllocation& mu = result.allocation;

  Json reports = Json::array();
  bool all_pass = true;
  const auto add = [&](const std::string& property, const mps::AuditReport& report) {
    reports.push_back(mps::report_to_json(market, property, report));
    all_pass = all_pass && report.pass;
  };

  mps::AuditReport membership;
  membership.pass = mps::delta_d_system(market).contains(mu);
  if (!membership.pass) membership.detail = "output violates the marginal system";
  add("implementable", membership);

  mps::AuditReport efficient;
  efficient.pass =
      mps::sd_efficient(market, mu).status == mps::LpCertificate::Status::OptimumZero;
  if (!efficient.pass) efficient.detail = "a dominating implementable allocation exists";
  add("sd_efficient", efficient);

  add("envy_free", mps::envy_free(market, mu));

  if (market.num_agents() <= config.max_anon_agents) {
    std::vector<int> pi(market.num_agents());
    std::iota(pi.begin(), pi.end(), 0);
    mps::AuditReport anonymity;
    do {
      anonymity = mps::anonymity_audit(market, pi);
      if (!anonymity.pass) break;
    } while (std::next_permutation(pi.begin(), pi.end()));
    add("anonymous", anonymity);
  }

  if (market.demand == 1 && market.num_objects() <= config.max_sp_objects)
    add("weak_strategyproof", mps::weak_sp_audit(market, {config.max_sp_objects}));

  Json out;
  out["reports"] = reports;
  out["all_pass"] = all_pass;
  if (config.emit_system) {
    out["system"] = mps::system_to_json(
        market, market.demand == 1 && !config.general_d ? mps::lcs_system_unit(market)
                                                        : mps::lcs_system_general(market));
  }
  print(out);
  return all_pass ? 0 : 1;
}

int run_oracle(const mps::Market& market, const RunConfig& config) {
  Json out;
  const auto allocations =
      mps::enumerate_allowable(market, {config.max_enum_agents, config.max_enum_objects});
  out["allowable_count"] = allocations.size();

  const mps::FeasibilityReport feasibility = mps::validate_feasibility(market);
  out["feasible"] = feasibility.feasible;
  out["cap_sum_ok"] = feasibility.cap_sum_ok;
  out["min_sum_ok"] = feasibility.min_sum_ok;

  if (feasibility.feasible) {
    const mps::MpsResult result = solve(market, config);
    const mps::LpCertificate certificate = mps::sd_efficient(market, result.allocation);
    out["sd_certificate"] =
        certificate.status == mps::LpCertificate::Status::OptimumZero ? "optimum_zero"
                                                                      : "improvement_found";
    if (market.demand == 1)
      out["rsd"] = mps::allocation_to_json(market, mps::rsd(market))["allocation"];
  }
  print(out);
  return 0;
}

int run_compare(const mps::Market& market, const RunConfig& config) {
  if (market.demand != 1) throw mps::ValidationError("compare: demand must be 1");
  const mps::RandomAllocation mine = solve(market, config).allocation;
  const mps::RandomAllocation baseline = mps::rsd(market);

  Json verdicts;
  for (int i = 0; i < market.num_agents(); ++i) {
    const char* verdict = "incomparable";
    switch (mps::fosd_compare(market.prefs[i], mine.row(i), baseline.row(i))) {
      case mps::FosdResult::Equal:
        verdict = "equal";
        break;
      case mps::FosdResult::StrictlyDominates:
        verdict = "mps_dominates";
        break;
      case mps::FosdResult::StrictlyDominated:
        verdict = "rsd_dominates";
        break;
      case mps::FosdResult::Incomparable:
        break;
    }
    verdicts[market.agent_ids[i]] = verdict;
  }

  Json out;
  out["mps"] = mps::allocation_to_json(market, mine)["allocation"];
  out["rsd"] = mps::allocation_to_json(market, baseline)["allocation"];
  out["verdicts"] = verdicts;
  print(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact random assignment with minimum quotas and capacities"};
  app.require_subcommand(1);
  RunConfig config;

  const auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("market", config.market_path, "market JSON file")->required();
    cmd->add_flag("--general-d", config.general_d,
                  "use the general-demand engine even when demand is 1");
    return cmd;
  };

  auto* cmd_solve = add_common(app.add_subcommand("solve", "compute the random allocation"));
  cmd_solve->add_flag("--trace", config.trace, "include the step-by-step eating trace");

  add_common(app.add_subcommand("decompose", "write the allocation as a lottery"));

  auto* cmd_sample = add_common(app.add_subcommand("sample", "draw one deterministic assignment"));
  uint64_t seed_value = 0;
  cmd_sample->add_option("--seed", seed_value, "64-bit sample seed")->required();

  auto* cmd_audit = add_common(app.add_subcommand("audit", "verify the mechanism's properties"));
  cmd_audit->add_flag("--emit-system", config.emit_system, "include the constraint rows");
  cmd_audit->add_option("--max-sp-objects", config.max_sp_objects,
                        "misreport audit cap on object count");
  cmd_audit->add_option("--max-anon-agents", config.max_anon_agents,
                        "agent-permutation audit cap");

  auto* cmd_oracle =
      add_common(app.add_subcommand("oracle", "brute-force enumeration and certificates"));
  cmd_oracle->add_option("--max-agents", config.max_enum_agents, "enumeration cap on agents");
  cmd_oracle->add_option("--max-objects", config.max_enum_objects, "enumeration cap on objects");

  add_common(app.add_subcommand("compare", "allocation vs the serial-dictatorship baseline"));

  CLI11_PARSE(app, argc, argv);

  try {
    const mps::Market market = load_market(config.market_path);
    for (const std::string& warning : market.warnings) std::cerr << "warning: " << warning << "\n";
    if (app.got_subcommand("solve")) return run_solve(market, config);
    if (app.got_subcommand("decompose")) return run_decompose(market, config);
    if (app.got_subcommand("sample")) {
      config.seed = seed_value;
      return run_sample(market, config);
    }
    if (app.got_subcommand("audit")) return run_audit(market, config);
    if (app.got_subcommand("oracle")) return run_oracle(market, config);
    if (app.got_subcommand("compare")) return run_compare(market, config);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
