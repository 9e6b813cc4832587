#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torelli/cli.hpp"

namespace {

bool parse_modulus(const std::string& text, torelli::Int& modulus,
                   std::string& message) {
  if (!torelli::detail::looks_like_integer(text)) {
    message = "modulus must be an integer, got '" + text + "'";
    return false;
  }
  modulus = torelli::Int(text);
  if (modulus < 2) {
    message = "modulus must be at least 2";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Torelli multitwist calculator: classifies reduction-system graph "
      "edges, decides Torelli membership of multitwists, decomposes them "
      "into separating twists and bounding-pair maps, and cross-checks "
      "every verdict against the symplectic action on homology."};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text"}))
      ->capture_default_str();

  torelli::Command cmd;
  std::string modulus_text;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cmd.input, "Graph file, or - for stdin")
        ->required();
  };

  auto* classify_cmd =
      app.add_subcommand("classify", "Print the a/b/c type of every edge");
  add_input(classify_cmd);
  classify_cmd->callback(
      [&] { cmd.kind = torelli::Command::Kind::classify; });

  auto* check = app.add_subcommand(
      "check-torelli", "Decide whether the weighted multitwist is Torelli");
  add_input(check);
  check->callback(
      [&] { cmd.kind = torelli::Command::Kind::check_torelli; });

  auto* rank_cmd = app.add_subcommand(
      "rank", "Rank of the Torelli multitwist group of the graph");
  add_input(rank_cmd);
  rank_cmd->callback([&] { cmd.kind = torelli::Command::Kind::rank; });

  auto* dec = app.add_subcommand(
      "decompose",
      "Factor a Torelli multitwist into separating twists and BP maps");
  add_input(dec);
  dec->callback([&] { cmd.kind = torelli::Command::Kind::decompose; });

  auto* mod = app.add_subcommand(
      "check-mod", "Decide triviality of the homology action mod m");
  mod->add_option("m", modulus_text, "Modulus (integer >= 2)")->required();
  add_input(mod);
  mod->callback([&] { cmd.kind = torelli::Command::Kind::check_mod; });

  auto* verify = app.add_subcommand(
      "verify-homology",
      "Compare the combinatorial verdict with the homology action");
  add_input(verify);
  verify->callback(
      [&] { cmd.kind = torelli::Command::Kind::verify_homology; });

  auto* bounds = app.add_subcommand(
      "bounds", "Report rank, vertex and omega counts, genus, and bounds");
  add_input(bounds);
  bounds->callback([&] { cmd.kind = torelli::Command::Kind::bounds; });

  auto* extremal = app.add_subcommand(
      "gen-extremal", "Emit the extremal rank-(2g-3) model of genus g");
  extremal->add_option("g", cmd.genus_arg, "Genus (>= 2)")->required();
  extremal->callback(
      [&] { cmd.kind = torelli::Command::Kind::gen_extremal; });

  auto* random_cmd = app.add_subcommand(
      "gen-random", "Emit a seeded random valid model of genus g");
  random_cmd->add_option("g", cmd.genus_arg, "Genus (>= 2)")->required();
  random_cmd->add_option("seed", cmd.seed, "Seed")->required();
  random_cmd->callback(
      [&] { cmd.kind = torelli::Command::Kind::gen_random; });

  auto* demo = app.add_subcommand(
      "conjecture-demo",
      "Show a nontrivial multitransvection acting as the identity");
  demo->callback(
      [&] { cmd.kind = torelli::Command::Kind::conjecture_demo; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return torelli::exit_input_error;
  }

  if (cmd.kind == torelli::Command::Kind::check_mod) {
    std::string message;
    if (!parse_modulus(modulus_text, cmd.modulus, message)) {
      std::cerr << "error: " << message << '\n';
      return torelli::exit_input_error;
    }
  }
  if ((cmd.kind == torelli::Command::Kind::gen_extremal ||
       cmd.kind == torelli::Command::Kind::gen_random) &&
      cmd.genus_arg < 2) {
    std::cerr << "error: genus must be at least 2\n";
    return torelli::exit_input_error;
  }

  return torelli::run_command(cmd, std::cin, std::cout, std::cerr);
}
