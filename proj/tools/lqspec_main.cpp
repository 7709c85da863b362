// lqspec <validate|render|beta|gamma|tau|report> --config PATH [--out DIR]
//
// Exit: 0 ok, 1 gate failed, 2 solver failed, 3 config error, 4 other error,
// 5 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lqspec/config.hpp"
#include "lqspec/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lq spectra of planar nonlinear IFS measures"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  for (const char* name : {"validate", "render", "beta", "gamma", "tau", "report"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (overrides output_dir in the config)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 5;
  }

  const auto command = lqspec::parse_command(app.get_subcommands().front()->get_name());
  try {
    const lqspec::RunConfig cfg = lqspec::load_config(config_path);
    const std::string dir = out_dir.empty() ? cfg.output_dir : out_dir;
    return lqspec::run(cfg, *command, dir, std::cerr);
  } catch (const lqspec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
