// Command-line front end: division sweeps, strategy verification, comb
// construction, band listing and centralized values, emitted as CSV/JSON.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "blotto/analytic.hpp"
#include "blotto/construct.hpp"
#include "blotto/intgame.hpp"
#include "blotto/io.hpp"
#include "blotto/security.hpp"
#include "blotto/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const blotto::error& e) {
  switch (e.code()) {
    case blotto::errc::parse_error:
    case blotto::errc::invalid_strategy:
      return kExitUsage;
    case blotto::errc::budget_order:
    case blotto::errc::out_of_range:
    case blotto::errc::unsupported_values:
    case blotto::errc::boundary_case:
    case blotto::errc::infeasible_division:
    case blotto::errc::infeasible_gap:
    case blotto::errc::bad_division:
    case blotto::errc::too_large:
    case blotto::errc::dimension_mismatch:
      return kExitInfeasible;
    case blotto::errc::io_error:
    case blotto::errc::internal:
      return kExitInternal;
  }
  return kExitInternal;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) blotto::fail(blotto::errc::io_error, out_path + ": cannot open for writing");
  out << text;
  if (!out) blotto::fail(blotto::errc::io_error, out_path + ": write failed");
}

struct SweepArgs {
  long b = 0, e = 0, b1_max = 0, starts = 64;
  std::uint64_t seed = 0;
  std::string tol = "0";
  std::string out;
};

struct VerifyArgs {
  std::string strategy_path;
  std::string b, e;
  std::string reading = "closed";
  std::string out;
};

struct ConstructArgs {
  std::string b, e, b1;
  long k1 = 1;
  std::string out;
};

struct BandsArgs {
  std::string b, e;
  std::string b1_max;  // optional override of the default half budget
};

struct CentralizedArgs {
  std::string b, e;
};

int run_sweep_cmd(const SweepArgs& a) {
  auto rows = blotto::run_sweep(a.b, a.e, a.b1_max, a.starts, a.seed, blotto::Rational::parse(a.tol));
  emit(blotto::sweep_csv_string(rows), a.out);
  return kExitOk;
}

int run_verify_cmd(const VerifyArgs& a) {
  blotto::GameConfig cfg(blotto::Rational::parse(a.b), blotto::Rational::parse(a.e));
  blotto::AtomicStrategy f = blotto::load_strategy(a.strategy_path);
  auto reading = a.reading == "strict" ? blotto::Ss2Reading::strict : blotto::Ss2Reading::closed;
  blotto::SsCheckReport rep = blotto::is_security_strategy(cfg, f, reading);
  emit(blotto::report_to_json(rep, reading).dump(2) + "\n", a.out);
  return kExitOk;
}

int run_construct_cmd(const ConstructArgs& a) {
  blotto::GameConfig cfg(blotto::Rational::parse(a.b), blotto::Rational::parse(a.e));
  blotto::PartitionInfo pi = blotto::partition_of(cfg);
  auto [f1, f2] = blotto::comb_distributed(pi, a.k1, blotto::Rational::parse(a.b1));
  if (a.out.empty()) {
    blotto::json j{{"f1", blotto::strategy_to_json(f1)}, {"f2", blotto::strategy_to_json(f2)}};
    std::cout << j.dump(2) << "\n";
  } else {
    blotto::save_strategy(a.out + ".f1.json", f1);
    blotto::save_strategy(a.out + ".f2.json", f2);
    std::cout << a.out << ".f1.json\n" << a.out << ".f2.json\n";
  }
  return kExitOk;
}

int run_bands_cmd(const BandsArgs& a) {
  blotto::GameConfig cfg(blotto::Rational::parse(a.b), blotto::Rational::parse(a.e));
  blotto::PartitionInfo pi = blotto::partition_of(cfg);
  blotto::Rational b_half =
      a.b1_max.empty() ? cfg.B / blotto::Rational(2) : blotto::Rational::parse(a.b1_max);
  auto bs = blotto::bands(pi, b_half);
  std::cout << blotto::bands_to_json(bs, b_half).dump(2) << "\n";
  return kExitOk;
}

int run_centralized_cmd(const CentralizedArgs& a) {
  blotto::GameConfig cfg(blotto::Rational::parse(a.b), blotto::Rational::parse(a.e));
  blotto::json j{{"formula", blotto::centralized_value(cfg).to_string()}};
  if (cfg.B.is_integer() && cfg.E.is_integer()) {
    auto lp = blotto::centralized_value_int(cfg.B.to_long(), cfg.E.to_long());
    j["lp"] = lp.value.to_string();
  } else {
    j["lp"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verifier for the two-battlefield team Blotto game"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep divisions B1 = 0..b1-max of the integer game");
  sweep_cmd->add_option("--b", sweep.b, "Team budget (integer)")->required();
  sweep_cmd->add_option("--e", sweep.e, "Enemy budget (integer)")->required();
  sweep_cmd->add_option("--b1-max", sweep.b1_max, "Largest division to sweep")->required();
  sweep_cmd->add_option("--starts", sweep.starts, "Random restarts per division")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Random seed")->capture_default_str();
  sweep_cmd->add_option("--tol", sweep.tol, "Stop when a round improves by at most this rational")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV output path (stdout when omitted)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a strategy file against the security conditions");
  verify_cmd->add_option("strategy", verify.strategy_path, "Strategy JSON file")->required();
  verify_cmd->add_option("--b", verify.b, "Team budget (rational)")->required();
  verify_cmd->add_option("--e", verify.e, "Enemy budget (rational)")->required();
  verify_cmd->add_option("--ss2-reading", verify.reading, "Right endpoint reading: closed|strict")
      ->check(CLI::IsMember({"closed", "strict"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Report output path (stdout when omitted)");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build the two-factor comb profile for a division");
  construct_cmd->add_option("--b", construct.b, "Team budget (rational)")->required();
  construct_cmd->add_option("--e", construct.e, "Enemy budget (rational)")->required();
  construct_cmd->add_option("--k1", construct.k1, "Factor of the partition index")->required();
  construct_cmd->add_option("--b1", construct.b1, "Sub-player 1 budget (rational)")->required();
  construct_cmd->add_option("--out", construct.out, "Output path prefix (stdout when omitted)");

  BandsArgs bands;
  auto* bands_cmd = app.add_subcommand("bands", "List divisions that recover the centralized value");
  bands_cmd->add_option("--b", bands.b, "Team budget (rational)")->required();
  bands_cmd->add_option("--e", bands.e, "Enemy budget (rational)")->required();
  bands_cmd->add_option("--b1-max", bands.b1_max, "Keep bands meeting [0, this] (default B/2)");

  CentralizedArgs centralized;
  auto* centralized_cmd =
      app.add_subcommand("centralized", "Centralized security value: formula and integer-game LP");
  centralized_cmd->add_option("--b", centralized.b, "Team budget (rational)")->required();
  centralized_cmd->add_option("--e", centralized.e, "Enemy budget (rational)")->required();

  try {
    app.parse(argc, argv);
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep);
    if (verify_cmd->parsed()) return run_verify_cmd(verify);
    if (construct_cmd->parsed()) return run_construct_cmd(construct);
    if (bands_cmd->parsed()) return run_bands_cmd(bands);
    if (centralized_cmd->parsed()) return run_centralized_cmd(centralized);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const blotto::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
