#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gtp/cli.hpp"
#include "gtp/error.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gtp - generalized tensor products over finite carriers: bounded\n"
      "rewrite saturation, entanglement verdicts, and exhaustive audits"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<int> bound;
  bool no_stability = false;
  std::string cache_dir;
  std::string out_path;
  std::string format = "report";
  std::string word;
  std::string audit_check;
  std::optional<int> audit_n;
  bool audit_count = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--bound", bound, "saturation bound (overrides the config)");
    cmd->add_flag("--no-stability", no_stability, "skip the bound+1 stability check");
    cmd->add_option("--cache-dir", cache_dir,
                    "saturation cache directory (default: $GTP_CACHE_DIR)");
    cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    cmd->add_option("--format", format, "output format: report (default) or csv");
  };

  CLI::App* saturate = app.add_subcommand("saturate", "compute the class partition");
  CLI::App* census = app.add_subcommand("census", "class counts and verdict totals");
  CLI::App* entangled =
      app.add_subcommand("entangled", "entanglement verdict for one word");
  entangled->add_option("word", word, "word in (x,y)+(x,y) syntax");
  CLI::App* canon = app.add_subcommand("canon", "canonical form and freeness verdict");
  canon->add_option("word", word, "word in (x,y)+(x,y) syntax");
  CLI::App* audit = app.add_subcommand("audit", "exhaustive structure audits");
  audit->add_flag("--count", audit_count, "count operations and identity-closure ops");
  audit->add_option("--check", audit_check,
                    "one of: count, selector, assoc, comm, union-dist, canon");
  audit->add_option("--n", audit_n, "carrier size for enumeration audits");
  CLI::App* action_check =
      app.add_subcommand("action-check", "compatibility, well-definedness, invariance");
  CLI::App* refine =
      app.add_subcommand("refine", "refinement surjection between two rule systems");
  for (CLI::App* cmd : {saturate, census, entangled, canon, audit, action_check, refine})
    add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;  // 0 is --help / --version
  }

  try {
    gtp::cli::Invocation inv;
    inv.command = app.get_subcommands().front()->get_name();

    inv.config = config_path.empty() ? nlohmann::json::object()
                                     : gtp::cli::load_config_file(config_path);
    if (bound) inv.config["bound"] = *bound;
    if (no_stability) inv.config["stability"] = false;
    if (!word.empty()) inv.config["word"] = word;
    if (audit_count) audit_check = "count";
    if (!audit_check.empty()) inv.config["audit"]["check"] = audit_check;
    if (audit_n) inv.config["audit"]["n"] = *audit_n;

    if (!cache_dir.empty()) {
      inv.cache_dir = cache_dir;
    } else if (const char* env = std::getenv("GTP_CACHE_DIR"); env && *env) {
      inv.cache_dir = std::string(env);
    }

    const nlohmann::json report = gtp::cli::run_command(inv);
    const std::string text = gtp::cli::render(report, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw gtp::ConfigError("cannot write to " + out_path);
      out << text;
    }
    return 0;
  } catch (const gtp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const gtp::ResourceLimitError& e) {
    std::cerr << "resource ceiling: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
