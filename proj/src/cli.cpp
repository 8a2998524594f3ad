#include "a2d/cli.hpp"

#include <algorithm>
#include <map>

#include <CLI11.hpp>

#include "a2d/report.hpp"

namespace a2d {

namespace {

struct Options {
  std::size_t max_dim = 4;
  std::size_t steps = 3;
  std::string format = "markdown";
  std::string structure = "a";
  std::string role;  // torsor for catalog, point for the discrete structure
  std::string method = "closed";
  bool allow_large = false;
};

void add_common(CLI::App* cmd, Options& o, bool steps) {
  cmd->add_option("--max-dim", o.max_dim, "catalog dimension bound");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_flag("--allow-large", o.allow_large, "permit bounds above the hard cap (slow)");
  if (steps) cmd->add_option("--steps", o.steps, "pushout steps / coproduct summands");
}

std::size_t effective_cap(const Options& o, std::ostream& err) {
  if (o.max_dim <= kHardDimensionCap) return kHardDimensionCap;
  if (!o.allow_large) {
    throw InputError("--max-dim " + std::to_string(o.max_dim) + " exceeds the hard cap of " +
                     std::to_string(kHardDimensionCap) + " (pass --allow-large to override)");
  }
  err << "warning: --max-dim " << o.max_dim << " is above the hard cap of " << kHardDimensionCap
      << "; hom-space enumeration grows as 2^(n·m) and this run may not finish\n";
  return o.max_dim;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded verifier for model structures on k[x]/x^2-comodules over GF(2)", "a2d"};
  app.require_subcommand(1, 1);
  Options o;

  auto* catalog_cmd = app.add_subcommand("catalog", "object and morphism counts with normal forms");
  add_common(catalog_cmd, o, false);
  catalog_cmd->add_option("--role", o.role, "site")->check(CLI::IsMember({"torsor", "point", "overlap"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the model category axioms on a catalog");
  add_common(verify_cmd, o, false);
  verify_cmd->add_option("--structure", o.structure, "structure")->check(CLI::IsMember({"a", "b", "discrete", "a-literal"}));
  verify_cmd->add_option("--role", o.role, "site of the discrete structure")
      ->check(CLI::IsMember({"torsor", "point", "overlap"}));

  auto* cof_cmd = app.add_subcommand("cof", "cofibration verdicts and method agreement");
  add_common(cof_cmd, o, true);
  cof_cmd->add_option("--method", o.method, "method")->check(CLI::IsMember({"closed", "llp", "generate"}));

  auto* theorem_cmd = app.add_subcommand("theorem", "bounded descent counterexample certificate");
  add_common(theorem_cmd, o, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    const Format format = format_from_string(o.format);
    if (catalog_cmd->parsed()) {
      const std::size_t cap = effective_cap(o, err);
      const Catalog cat(o.max_dim, o.role.empty() ? Role::Torsor : role_from_string(o.role), cap);
      out << render(summarize(cat), format);
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      const std::size_t cap = effective_cap(o, err);
      ModelStructure ms = o.structure == "a"           ? structure_a()
                          : o.structure == "b"         ? structure_b()
                          : o.structure == "a-literal" ? structure_a_literal(std::max<std::size_t>(4, o.max_dim))
                                                       : discrete_structure(o.role.empty() ? Role::Point
                                                                                           : role_from_string(o.role));
      const Catalog cat(o.max_dim, ms.role, cap);
      const AxiomReport report = verify_axioms(ms, cat);
      out << render(report, format);
      return report.all_passed() ? kExitPass : kExitCheckFailed;
    }
    if (cof_cmd->parsed()) {
      const std::size_t cap = effective_cap(o, err);
      const Catalog cat(o.max_dim, Role::Torsor, cap);
      static const std::map<std::string, std::string> names{
          {"closed", "closed_form"}, {"llp", "llp_bounded"}, {"generate", "generation_bounded"}};
      const CofReport report = cof_report(cat, names.at(o.method), 4, o.steps, std::max<std::size_t>(4, o.max_dim));
      out << render(report, format);
      return report.all_agree() ? kExitPass : kExitCheckFailed;
    }
    if (o.max_dim < 2) throw InputError("theorem needs --max-dim ≥ 2");
    effective_cap(o, err);
    TransferBounds bounds = default_transfer_bounds(o.max_dim);
    bounds.steps = o.steps;
    const DescentReport report = run_theorem(o.max_dim, bounds);
    out << render(report, format);
    return equalizer_check(report) ? kExitPass : kExitCheckFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }
}

}  // namespace a2d
