#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dsc/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"disperscan: two-photon dispersion-cancellation interferometry"};
  app.require_subcommand(1);

  std::string config_path;
  dsc::RunOverrides overrides;
  std::string engine, output_dir, materials;
  bool plot = false;
  bool oracle = false;

  CLI::App* run = app.add_subcommand("run", "run a scan from a config file");
  run->add_option("--config", config_path, "configuration file (JSON)")
      ->required();
  run->add_option("--engine", engine, "analytic | oracle | both");
  run->add_flag("--oracle", oracle,
                "run the mode-operator oracle side by side (engine = both)");
  run->add_option("--output-dir", output_dir, "directory for CSV/SVG output");
  run->add_option("--materials", materials, "materials file override");
  run->add_flag("--plot", plot, "also write the SVG plot");

  CLI::App* mats = app.add_subcommand("materials", "materials file utilities");
  CLI::App* list = mats->add_subcommand("list", "print materials with sources");
  std::string list_path = "data/materials.json";
  list->add_option("--file", list_path, "materials file path");
  mats->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (!engine.empty()) overrides.engine = engine;
    if (oracle) overrides.engine = "both";
    if (!output_dir.empty()) overrides.output_dir = output_dir;
    if (!materials.empty()) overrides.materials_file = materials;
    if (plot) overrides.plot = true;
    return dsc::run(config_path, overrides, std::cout, std::cerr);
  }
  if (list->parsed())
    return dsc::materials_list(list_path, std::cout, std::cerr);
  return 1;
}
