#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

using namespace dunkl::lab;

int main(int argc, char** argv) {
  CLI::App app{"dunkl_lab: numerical checks for the rank-one Dunkl calculus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DUNKL_LAB_VERSION);

  std::string config_path;
  std::map<std::string, std::string> flags;
  const std::vector<std::pair<std::string, std::string>> options{
      {"alpha", "Dunkl parameter, > -1/2"},
      {"k", "remainder order, >= 1"},
      {"p", "L^p exponent, >= 1"},
      {"q", "Besov q, comma list, 'inf' allowed"},
      {"beta", "Besov smoothness in (0, 1), comma list"},
      {"function", "catalog entry, e.g. gaussian(1)"},
      {"grid", "min,max,count[,log|linear]"},
      {"window", "seminorm window min,max"},
      {"tol", "relative quadrature tolerance"},
      {"spread", "admissible c_high / c_low"},
      {"out", "output path (stdout if omitted)"},
      {"format", "json or csv"},
      {"seed", "seed for spot-check points"},
  };

  const std::map<std::string, std::string> about{
      {"verify-identities", "theta kernel, remainder and iterated-integral identities"},
      {"operator-properties", "translation, Taylor and commutation properties"},
      {"equivalence", "modulus versus K-functional on a grid"},
      {"besov", "Besov seminorms and window stability"},
      {"catalog", "list the test-function catalog"},
  };
  for (const std::string& name : command_names()) {
    const auto it = about.find(name);
    CLI::App* sub = app.add_subcommand(name, it == about.end() ? std::string() : it->second);
    sub->add_option("--config", config_path, "key = value scenario file");
    for (const auto& [key, help] : options) sub->add_option("--" + key, flags[key], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  CommandResult result;
  ScenarioConfig config;
  try {
    if (!config_path.empty()) config = load_config_file(config_path);
    // Flags override the file; iterate in declaration order for stable errors.
    for (const auto& [key, help] : options) {
      if (app.get_subcommands().front()->count("--" + key) > 0) apply_setting(config, key, flags[key]);
    }
    result = run_command(command, config);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string text = render(result, config.format);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "cannot write '" << config.out << "'\n";
      return kExitConfig;
    }
  }
  for (const auto& e : result.report["errors"]) std::cerr << "error: " << e["message"].get<std::string>() << '\n';
  return result.exit_code;
}
