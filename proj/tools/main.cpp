#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "contractforge/dp.hpp"
#include "contractforge/errors.hpp"
#include "contractforge/hardness.hpp"
#include "contractforge/json_io.hpp"
#include "contractforge/oracle.hpp"
#include "contractforge/random_gen.hpp"
#include "contractforge/rna.hpp"

using namespace contractforge;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json(const std::string& path) { return json::parse(slurp(path)); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

long long env_budget() {
  const char* env = std::getenv("CONTRACT_FORGE_BUDGET");
  if (env == nullptr) return kDefaultBudget;
  const std::string text(env);
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != text.size() || value <= 0) {
    throw std::invalid_argument("CONTRACT_FORGE_BUDGET must be a positive integer");
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact contract solvers, reductions, and instance generators"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string method = "auto";
  long long budget = 0;
  int jobs = 1;
  std::string profile_path;
  std::string payment_path;
  std::string m_override_text;
  std::string r_text;
  int agents = 2;
  int actions = 2;
  unsigned long long seed = 0;
  bool want_id = false;

  const char* input_help = "instance file, or - for standard input";

  auto* solve_cmd = app.add_subcommand("solve", "Optimal payments for a discrete instance");
  solve_cmd->add_option("input", input, input_help);
  solve_cmd->add_option("--method", method, "dp, oracle, or auto")
      ->check(CLI::IsMember({"auto", "dp", "oracle"}));
  auto* solve_budget = solve_cmd->add_option("--budget", budget, "max oracle assignments")
                           ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--jobs", jobs, "oracle worker threads")->check(CLI::PositiveNumber);

  auto* simulate_cmd = app.add_subcommand("simulate", "Best responses under given payments");
  simulate_cmd->add_option("input", input, input_help);
  simulate_cmd->add_option("--profile", profile_path, "payments file")->required();

  auto* approx_cmd =
      app.add_subcommand("rna-approx", "Threshold contract for a real-number-action instance");
  approx_cmd->add_option("input", input, input_help);

  auto* rna_sim_cmd =
      app.add_subcommand("rna-simulate", "Best responses under a real-number-action payment");
  rna_sim_cmd->add_option("input", input, input_help);
  rna_sim_cmd->add_option("--payment", payment_path, "payment file")->required();

  auto* reduce_cmd =
      app.add_subcommand("reduce-da-to-rna", "Embed a discrete instance into [0,1]");
  reduce_cmd->add_option("input", input, input_help);
  auto* m_opt = reduce_cmd->add_option("--M", m_override_text,
                                       "offset constant (default max cost/reward + 1)");

  auto* gen_nae_cmd =
      app.add_subcommand("gen-nae", "Hardness instance from a NAE3SAT formula");
  gen_nae_cmd->add_option("input", input, "formula file, or - for standard input");

  auto* gen_random_cmd = app.add_subcommand("gen-random", "Random instance");
  gen_random_cmd->add_option("--agents", agents, "number of agents")->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--actions", actions, "number of actions")->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--seed", seed, "generator seed");
  gen_random_cmd->add_flag("--id", want_id, "force increasing differences");

  auto* check_cmd = app.add_subcommand("check-id", "Detect an increasing-differences ordering");
  check_cmd->add_option("input", input, input_help);

  auto* decide_cmd = app.add_subcommand("decide", "Is a payoff of at least r achievable?");
  decide_cmd->add_option("input", input, input_help);
  decide_cmd->add_option("--r", r_text, "payoff threshold (integer or p/q)")->required();
  auto* decide_budget = decide_cmd->add_option("--budget", budget, "max oracle assignments")
                            ->check(CLI::PositiveNumber);
  decide_cmd->add_option("--jobs", jobs, "oracle worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (solve_cmd->parsed()) {
      DaInstance inst = da_instance_from_json(read_json(input));
      SolveOptions options;
      options.method = method == "dp"       ? SolveOptions::Method::kDp
                       : method == "oracle" ? SolveOptions::Method::kOracle
                                            : SolveOptions::Method::kAuto;
      options.budget = solve_budget->count() > 0 ? budget : env_budget();
      options.jobs = jobs;
      emit(to_json(solve(inst, options)));
    } else if (simulate_cmd->parsed()) {
      DaInstance inst = da_instance_from_json(read_json(input));
      PaymentProfile profile = payment_profile_from_json(read_json(profile_path));
      validate(profile, inst);
      emit(to_json(simulate(inst, profile)));
    } else if (approx_cmd->parsed()) {
      emit(to_json(approx_contract(rna_instance_from_json(read_json(input)))));
    } else if (rna_sim_cmd->parsed()) {
      RnaInstance inst = rna_instance_from_json(read_json(input));
      emit(to_json(rna_simulate(inst, rna_payment_from_json(read_json(payment_path)))));
    } else if (reduce_cmd->parsed()) {
      DaInstance inst = da_instance_from_json(read_json(input));
      std::optional<Rational> m_override;
      if (m_opt->count() > 0) m_override = Rational::parse(m_override_text);
      emit(to_json(da_to_rna(inst, m_override)));
    } else if (gen_nae_cmd->parsed()) {
      emit(to_json(generate_mac(parse_nae3sat(slurp(input)))));
    } else if (gen_random_cmd->parsed()) {
      RandomIdSpec spec;
      spec.n = agents;
      spec.m = actions;
      spec.seed = seed;
      emit(to_json(want_id ? gen_random_id(spec) : gen_random_instance(spec)));
    } else if (check_cmd->parsed()) {
      DaInstance inst = da_instance_from_json(read_json(input));
      std::optional<IdOrdering> ordering = detect_ordering(inst);
      json out{{"increasing_differences", ordering.has_value()}};
      if (ordering.has_value()) {
        out["agent_order"] = ordering->agent_order;
        out["action_order"] = ordering->action_order;
      }
      emit(out);
    } else if (decide_cmd->parsed()) {
      DaInstance inst = da_instance_from_json(read_json(input));
      const long long b = decide_budget->count() > 0 ? budget : env_budget();
      emit(json{{"result", decide_mac(inst, Rational::parse(r_text), b, jobs)}});
    }
  } catch (const NotIncreasingDifferences& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InvalidFormula& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const MisalignedStep& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
