#pragma once

// Command-line front end. run() parses arguments, dispatches to one
// subcommand and returns the exit code: 0 on success or PASS, 1 when a check
// fails or a requested colimit does not exist, 2 on parse or configuration
// errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetcat/colimit.hpp"
#include "posetcat/continuity.hpp"
#include "posetcat/delta.hpp"
#include "posetcat/kan_extension.hpp"
#include "posetcat/poset.hpp"
#include "posetcat/simplicial.hpp"
#include "posetcat/text_format.hpp"

namespace posetcat::cli {

enum ExitCode { Success = 0, Negative = 1, ConfigError = 2 };

enum class Format { Text, Machine };

struct RunConfig {
  std::string command;
  std::string poset, poset2, sset, diagram, functor;
  std::string target = "pos";
  std::string output;
  Format format = Format::Text;
  int truncation = -1;
  int bound = -1;
  int cap = -1;
  int max_n = 5;
  int verify_bound = -1;
};

namespace detail {

/// Accumulates a report in either format; text lines and key=value pairs
/// are kept separately so each command states both once.
class Report {
 public:
  explicit Report(Format f) : format_(f) {}

  void text(const std::string& line) {
    if (format_ == Format::Text) out_ << line << "\n";
  }
  template <typename T>
  void kv(const std::string& key, const T& value) {
    if (format_ == Format::Machine) out_ << key << "=" << value << "\n";
  }
  void raw(const std::string& block) { out_ << block; }
  bool machine() const { return format_ == Format::Machine; }
  std::string str() const { return out_.str(); }

 private:
  Format format_;
  std::ostringstream out_;
};

inline std::string leg_text(const MonotoneMap& leg) {
  std::string out;
  for (int x = 0; x < leg.source().size(); ++x) {
    out += (x ? "," : "") + leg.source().element(x) + "->" + leg.target().element(leg(x));
  }
  return out;
}

inline std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

inline int cmd_nerve(const RunConfig& cfg, Report& r) {
  if (cfg.truncation < 0) throw Error(ErrorKind::Parse, "--trunc must be non-negative");
  const auto p = load_poset(cfg.poset);
  SimplicialData data = nerve(p.poset, cfg.truncation).data();
  data.name = "N_" + p.name;
  r.raw(write_sset(make_sset(std::move(data))));
  return Success;
}

/// Shared by check and reconstruct. Returns the report, or nullopt after
/// reporting a broken identity.
inline std::optional<ContinuityReport> continuity_of(const RunConfig& cfg, Report& r) {
  SimplicialData data = parse_sset_data(read_file(cfg.sset));
  if (auto violation = find_identity_violation(data)) {
    r.text("simplicial identities: FAIL " + violation->message());
    r.kv("result", "FAIL");
    r.kv("check.simplicial-identities", "FAIL");
    r.kv("witness.simplicial-identities", violation->message());
    return std::nullopt;
  }
  auto x = std::make_shared<const TruncatedSimplicialSet>(make_sset(std::move(data)));
  return check_continuity(x);
}

inline int cmd_check(const RunConfig& cfg, Report& r) {
  auto report = continuity_of(cfg, r);
  if (!report) return Negative;
  r.raw(r.machine() ? to_machine(*report) : to_text(*report));
  return report->passed() ? Success : Negative;
}

inline int cmd_reconstruct(const RunConfig& cfg, Report& r) {
  auto report = continuity_of(cfg, r);
  if (!report) return Negative;
  if (!report->passed()) {
    r.raw(r.machine() ? to_machine(*report) : to_text(*report));
    return Negative;
  }
  const FinPoset& p = *report->reconstruction->poset;
  if (r.machine()) {
    r.kv("result", "PASS");
    r.kv("poset", describe(p));
  } else {
    r.raw(write_poset(std::filesystem::path(cfg.sset).stem().string(), p));
  }
  return Success;
}

inline int cmd_colimit(const RunConfig& cfg, Report& r) {
  const auto d = load_diagram(cfg.diagram);
  const Cocone pos = colimit_pos(d.diagram);
  std::optional<Cocone> result;
  std::string missing;
  if (cfg.target == "pos") {
    result = pos;
  } else if (cfg.target == "tos") {
    result = colimit_tos(d.diagram);
    if (!result) missing = "colimit in Pos is " + describe(*pos.apex) + ", which is not totally ordered";
  } else {
    result = colimit_delta(d.diagram);
    if (!result) missing = missing_delta_colimit_reason(d.diagram, pos);
  }
  r.kv("diagram", d.name);
  r.kv("category", cfg.target);
  if (!result) {
    r.text("colimit of " + d.name + " does not exist in " + cfg.target + ": " + missing);
    r.kv("exists", "false");
    r.kv("reason", missing);
    return Negative;
  }
  r.kv("exists", "true");
  r.kv("apex", describe(*result->apex));
  r.text("colimit of " + d.name + " in " + cfg.target + ": " + describe(*result->apex));
  for (int k = 0; k < d.diagram.node_count(); ++k) {
    r.kv("leg." + d.diagram.node_id(k), leg_text(result->legs[k]));
    r.text("  leg " + d.diagram.node_id(k) + ": " + leg_text(result->legs[k]));
  }
  if (cfg.verify_bound >= 0) {
    const UniversalReport u = verify_universal(d.diagram, *result, cfg.verify_bound);
    r.kv("universal", pass_fail(u.passed()));
    r.kv("universal.cocones_tested", u.cocones_tested());
    r.text("universal property up to " + std::to_string(cfg.verify_bound) + " points: " + pass_fail(u.passed()) +
           " (" + std::to_string(u.cocones_tested()) + " cocones)");
    for (std::size_t k = 0; k < u.witnesses.size(); ++k) {
      r.kv("universal.witness." + std::to_string(k), u.witnesses[k]);
      r.text("  " + u.witnesses[k]);
    }
    if (!u.passed()) return Negative;
  }
  return Success;
}

inline int cmd_extensions(const RunConfig& cfg, Report& r) {
  const auto p = load_poset(cfg.poset);
  const auto orders = linear_extension_orders(p.poset);
  const bool recovered = intersection_of_extensions(p.poset) == p.poset.relation();
  r.kv("count", orders.size());
  r.text(std::to_string(orders.size()) + " linear extensions of " + p.name);
  for (std::size_t k = 0; k < orders.size(); ++k) {
    std::string line;
    for (std::size_t j = 0; j < orders[k].size(); ++j) line += (j ? " < " : "") + p.poset.element(orders[k][j]);
    r.kv("extension." + std::to_string(k), line);
    r.text("  " + line);
  }
  r.kv("intersection", pass_fail(recovered));
  r.text("intersection recovers the order: " + pass_fail(recovered));
  return recovered ? Success : Negative;
}

inline int cmd_density(const RunConfig& cfg, Report& r) {
  const auto p = load_poset(cfg.poset);
  const int bound = cfg.bound >= 0 ? cfg.bound : height(p.poset);
  const DensityReport d = density_colimit(share(p.poset), bound);
  r.kv("bound", bound);
  r.kv("apex", describe(*d.colimit.apex));
  r.kv("canonical_iso", pass_fail(d.canonical_is_iso));
  r.kv("stable", pass_fail(d.stable));
  r.kv("result", pass_fail(d.passed()));
  r.text("density colimit of " + p.name + " over chains of length <= " + std::to_string(bound) + ": " +
         pass_fail(d.passed()));
  r.text("  apex: " + describe(*d.colimit.apex));
  r.text("  canonical map is an isomorphism: " + pass_fail(d.canonical_is_iso));
  r.text("  stable at the next bound: " + pass_fail(d.stable));
  return d.passed() ? Success : Negative;
}

inline int cmd_extend(const RunConfig& cfg, Report& r) {
  const auto f = load_functor(cfg.functor);
  const auto p = load_poset(cfg.poset);
  const int bound = cfg.bound >= 0 ? cfg.bound : height(p.poset);
  const ExtensionResult e = extend(f, p.poset, bound, cfg.cap);
  r.kv("functor", f.name());
  r.kv("value", describe(*e.value));
  r.kv("stabilization", e.stabilization);
  r.kv("chains", e.diagram.chains.size());
  r.text("extension of " + f.name() + " at " + p.name + ": " + describe(*e.value));
  r.text("  stabilized at bound " + std::to_string(e.stabilization) + " over " +
         std::to_string(e.diagram.chains.size()) + " chains");
  return Success;
}

inline int cmd_verify_identities(const RunConfig& cfg, Report& r) {
  if (cfg.max_n < 0) throw Error(ErrorKind::Parse, "--max-n must be non-negative");
  const IdentityReport report = verify_simplicial_identities(cfg.max_n);
  r.kv("instances", report.instances.size());
  r.kv("failures", report.failures());
  r.kv("result", pass_fail(report.passed()));
  r.text("simplicial identities up to [" + std::to_string(cfg.max_n) + "]: " + pass_fail(report.passed()) + " (" +
         std::to_string(report.instances.size()) + " instances, " + std::to_string(report.failures()) +
         " failures)");
  for (std::size_t k = 0; k < report.instances.size(); ++k)
    if (!report.verdicts[k]) r.text("  fails: " + report.instances[k].label);
  return report.passed() ? Success : Negative;
}

inline int cmd_homcount(const RunConfig& cfg, Report& r) {
  const auto p = load_poset(cfg.poset);
  const auto q = load_poset(cfg.poset2);
  const int k = cfg.truncation >= 0 ? cfg.truncation : 1;
  const FullFaithfulReport w = fully_faithful_witness(share(p.poset), share(q.poset), k);
  r.kv("monotone_maps", w.monotone_maps);
  r.kv("simplicial_maps", w.simplicial_maps);
  r.kv("result", pass_fail(w.passed()));
  r.text("monotone maps " + p.name + " -> " + q.name + ": " + std::to_string(w.monotone_maps));
  r.text("simplicial maps of nerves (truncation " + std::to_string(k) + "): " + std::to_string(w.simplicial_maps));
  r.text("bijection: " + pass_fail(w.passed()));
  return w.passed() ? Success : Negative;
}

inline int dispatch(const RunConfig& cfg, Report& r) {
  if (cfg.command == "nerve") return cmd_nerve(cfg, r);
  if (cfg.command == "check") return cmd_check(cfg, r);
  if (cfg.command == "reconstruct") return cmd_reconstruct(cfg, r);
  if (cfg.command == "colimit") return cmd_colimit(cfg, r);
  if (cfg.command == "extensions") return cmd_extensions(cfg, r);
  if (cfg.command == "density") return cmd_density(cfg, r);
  if (cfg.command == "extend") return cmd_extend(cfg, r);
  if (cfg.command == "verify-identities") return cmd_verify_identities(cfg, r);
  if (cfg.command == "homcount") return cmd_homcount(cfg, r);
  throw Error(ErrorKind::Parse, "unknown command '" + cfg.command + "'");
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Finite posets, the simplex category and nerves", "posetcat"};
  app.require_subcommand(1, 1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", cfg.output, "Write the report to this file");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    s->add_option("--out", cfg.output, "Write the report to this file");
    return s;
  };
  auto* nerve_cmd = sub("nerve", "Write the truncated nerve of a poset");
  nerve_cmd->add_option("--poset", cfg.poset)->required();
  nerve_cmd->add_option("--trunc", cfg.truncation)->required();
  auto* check_cmd = sub("check", "Run the continuity checks on a simplicial set");
  check_cmd->add_option("--sset", cfg.sset)->required();
  auto* reconstruct_cmd = sub("reconstruct", "Recover the poset whose nerve a simplicial set is");
  reconstruct_cmd->add_option("--sset", cfg.sset)->required();
  auto* colimit_cmd = sub("colimit", "Colimit of a diagram of posets");
  colimit_cmd->add_option("--diagram", cfg.diagram)->required();
  colimit_cmd->add_option("--in", cfg.target)->check(CLI::IsMember({"pos", "tos", "delta"}));
  colimit_cmd->add_option("--verify", cfg.verify_bound, "Check the universal property against apexes up to this size");
  auto* extensions_cmd = sub("extensions", "Linear extensions of a poset");
  extensions_cmd->add_option("--poset", cfg.poset)->required();
  auto* density_cmd = sub("density", "Poset as the colimit of its chains");
  density_cmd->add_option("--poset", cfg.poset)->required();
  density_cmd->add_option("--bound", cfg.bound);
  auto* extend_cmd = sub("extend", "Extend a functor on the simplex category to a poset");
  extend_cmd->add_option("--functor", cfg.functor)->required();
  extend_cmd->add_option("--poset", cfg.poset)->required();
  extend_cmd->add_option("--bound", cfg.bound);
  extend_cmd->add_option("--cap", cfg.cap);
  auto* identities_cmd = sub("verify-identities", "Check the simplicial identities in the simplex category");
  identities_cmd->add_option("--max-n", cfg.max_n);
  auto* homcount_cmd = sub("homcount", "Compare monotone maps with simplicial maps of nerves");
  homcount_cmd->add_option("--poset", cfg.poset)->required();
  homcount_cmd->add_option("--poset2", cfg.poset2)->required();
  homcount_cmd->add_option("--trunc", cfg.truncation);

  std::vector<std::string> argv_store{"posetcat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ConfigError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "machine" ? Format::Machine : Format::Text;

  detail::Report report(cfg.format);
  int code = Success;
  try {
    code = detail::dispatch(cfg, report);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonStabilized) {
      err << "error: " << e.what() << "\n";
      return Negative;
    }
    err << "error: " << e.what() << "\n";
    return ConfigError;
  }
  if (cfg.output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return ConfigError;
    }
    file << report.str();
  }
  return code;
}

}  // namespace posetcat::cli
