#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "torelli/homology.hpp"
#include "torelli/surface.hpp"
#include "torelli/text_format.hpp"
#include "torelli/torelli.hpp"

namespace torelli {

/// A fully validated command-line request.
struct Command {
  enum class Kind {
    classify,
    check_torelli,
    rank,
    decompose,
    check_mod,
    verify_homology,
    bounds,
    gen_extremal,
    gen_random,
    conjecture_demo,
  };

  Kind kind = Kind::classify;
  std::string input;            ///< file path, or "-" for standard input
  Int modulus = 0;              ///< check_mod
  std::size_t genus_arg = 0;    ///< gen_extremal / gen_random
  std::uint64_t seed = 0;       ///< gen_random
};

/// Exit status convention: 0 for success and YES-style verdicts, 1 for
/// NO-style verdicts, 2 for input errors.
enum ExitStatus : int {
  exit_yes = 0,
  exit_no = 1,
  exit_input_error = 2,
};

namespace detail {

inline bool command_reads_input(Command::Kind kind) {
  switch (kind) {
    case Command::Kind::classify:
    case Command::Kind::check_torelli:
    case Command::Kind::rank:
    case Command::Kind::decompose:
    case Command::Kind::check_mod:
    case Command::Kind::verify_homology:
    case Command::Kind::bounds:
      return true;
    default:
      return false;
  }
}

inline std::string slurp(const Command& cmd, std::istream& standard_input) {
  if (cmd.input == "-") {
    std::ostringstream buffer;
    buffer << standard_input.rdbuf();
    return buffer.str();
  }
  std::ifstream file(cmd.input);
  if (!file) throw Error("cannot open file '" + cmd.input + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline SurfaceModel surface_from(const ParsedInput& parsed) {
  for (const VertexId& id : parsed.graph.vertex_ids()) {
    if (!parsed.explicit_genus.count(id))
      throw Error("vertex '" + id +
                  "' has no genus attribute (required by this command)");
  }
  SurfaceModel model = parsed.surface();
  const auto report = validate(model);
  if (!report.valid())
    throw Error("invalid surface model: " +
                report.violations.front().describe());
  return model;
}

inline void render_bounds(const BoundsReport& report, std::ostream& out) {
  out << "rank " << report.rank << '\n';
  out << "vertices " << report.vertex_count << '\n';
  out << "omega " << report.omega_count << '\n';
  out << "genus " << report.genus_value << '\n';
  out << "rank<=vertices-1: " << report.rank << " <= "
      << report.vertex_count - 1 << ' '
      << (report.rank_le_vertices_holds ? "OK" : "VIOLATED") << " slack "
      << report.rank_vertices_slack << '\n';
  if (report.genus_clause_applies) {
    out << "rank+omega<=2*genus-3: " << report.rank + report.omega_count
        << " <= " << 2 * static_cast<long long>(report.genus_value) - 3 << ' '
        << (report.rank_omega_holds ? "OK" : "VIOLATED") << " slack "
        << report.rank_omega_slack << '\n';
  } else {
    out << "rank+omega<=2*genus-3: skipped (genus < 2)\n";
  }
}

}  // namespace detail

/// Executes a command, writing the report to `out` and diagnostics to
/// `err`; `standard_input` backs the "-" input path.  Output bytes are
/// deterministic for a fixed command and input.
inline int run_command(const Command& cmd, std::istream& standard_input,
                       std::ostream& out, std::ostream& err) {
  try {
    std::optional<ParsedInput> maybe_parsed;
    if (detail::command_reads_input(cmd.kind))
      maybe_parsed = parse_graph_text(detail::slurp(cmd, standard_input));
    auto parsed_input = [&]() -> const ParsedInput& { return *maybe_parsed; };

    switch (cmd.kind) {
      case Command::Kind::classify: {
        const ParsedInput& parsed = parsed_input();
        const EdgeClassification cls = classify(parsed.graph);
        for (const auto& e : parsed.graph.edges()) {
          switch (cls.type_of(e.id)) {
            case EdgeType::a:
              out << e.id << " a\n";
              break;
            case EdgeType::b:
              out << e.id << " b " << *cls.b_class_of(e.id) << '\n';
              break;
            case EdgeType::c:
              out << e.id << " c\n";
              break;
          }
        }
        return exit_yes;
      }

      case Command::Kind::check_torelli: {
        const Multitwist twist = parsed_input().multitwist();
        if (auto violation = torelli_violation(twist)) {
          out << "NO " << violation->describe() << '\n';
          return exit_no;
        }
        out << "YES\n";
        return exit_yes;
      }

      case Command::Kind::rank: {
        out << torelli_rank(classify(parsed_input().graph)) << '\n';
        return exit_yes;
      }

      case Command::Kind::decompose: {
        const Multitwist twist = parsed_input().multitwist();
        try {
          for (const TwistFactor& factor : decompose(twist)) {
            if (const auto* sep = std::get_if<SeparatingTwist>(&factor)) {
              out << "SEP " << sep->edge << ' ' << sep->exponent << '\n';
            } else {
              const auto& bp = std::get<BoundingPairMap>(factor);
              out << "BP " << bp.edge_plus << ' ' << bp.edge_minus << ' '
                  << bp.exponent << '\n';
            }
          }
          return exit_yes;
        } catch (const NotInTorelliError& e) {
          out << "NO " << e.violation().describe() << '\n';
          return exit_no;
        }
      }

      case Command::Kind::check_mod: {
        const Multitwist twist = parsed_input().multitwist();
        if (is_gamma_m(twist, cmd.modulus)) {
          out << "YES\n";
          return exit_yes;
        }
        out << "NO\n";
        return exit_no;
      }

      case Command::Kind::verify_homology: {
        const ParsedInput& parsed = parsed_input();
        const SurfaceModel model = detail::surface_from(parsed);
        const Multitwist twist = parsed.multitwist();
        const bool combinatorial = is_torelli(twist);
        const bool homological =
            is_identity_action(build_model(model), twist);
        out << "is-torelli " << (combinatorial ? "YES" : "NO") << '\n';
        out << "identity-action " << (homological ? "YES" : "NO") << '\n';
        out << (combinatorial == homological ? "AGREE" : "DISAGREE") << '\n';
        return combinatorial == homological ? exit_yes : exit_no;
      }

      case Command::Kind::bounds: {
        const SurfaceModel model = detail::surface_from(parsed_input());
        const BoundsReport report = check_bounds(model);
        detail::render_bounds(report, out);
        const bool ok = report.rank_le_vertices_holds &&
                        (!report.genus_clause_applies ||
                         report.rank_omega_holds);
        return ok ? exit_yes : exit_no;
      }

      case Command::Kind::gen_extremal: {
        out << to_graph_text(gen_extremal(cmd.genus_arg));
        return exit_yes;
      }

      case Command::Kind::gen_random: {
        out << to_graph_text(gen_random(cmd.genus_arg, cmd.seed));
        return exit_yes;
      }

      case Command::Kind::conjecture_demo: {
        const ConjectureWitness witness = conjecture_counterexample();
        out << "lattice-rank " << witness.lattice.rank() << '\n';
        bool all_nonzero = true;
        for (std::size_t i = 0; i < witness.factors.size(); ++i) {
          out << 'v' << i + 1;
          for (const Int& x : witness.factors[i].first) out << ' ' << x;
          out << '\n';
          if (witness.factors[i].second == 0) all_nonzero = false;
        }
        out << "exponents";
        for (const auto& [v, m] : witness.factors) out << ' ' << m;
        out << '\n';
        out << "exponents-all-nonzero " << (all_nonzero ? "YES" : "NO")
            << '\n';
        const bool identity = witness.product.is_identity();
        out << "product-is-identity " << (identity ? "YES" : "NO") << '\n';
        return identity && all_nonzero ? exit_yes : exit_no;
      }
    }
    throw Error("unhandled command");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace torelli
