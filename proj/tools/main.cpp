#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "iwahori/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "iwahori: Tits groups of extended affine Weyl groups, descent for "
      "inner twists, and Hecke-algebra presentations"};
  app.require_subcommand(1);

  std::string descriptor_path;
  std::string format = "json";
  iwahori::CommandOptions opt;

  const std::vector<std::string> names{
      "describe",      "verify-coxeter", "ftg-identities",   "ses-check",
      "descent-check", "hecke-check",    "emit-presentation"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("descriptor", descriptor_path,
                    "path to a group descriptor file")
        ->required();
    sub->add_option("--radius", opt.radius, "word/ball radius (default 6)");
    sub->add_option("--seed", opt.seed, "seed for sampled checks (default 0)");
    sub->add_flag("--include-e7", opt.include_e7,
                  "allow the heavy E7 sweeps");
    sub->add_option("--format", format, "json|text (default json)")
        ->check(CLI::IsMember({"json", "text"}));
    if (name == "emit-presentation")
      sub->add_option("--level", opt.level, "filtration level n (default 0)");
  }

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  std::ifstream in(descriptor_path);
  if (!in) {
    std::cerr << "error: cannot open descriptor file '" << descriptor_path
              << "'\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  iwahori::Report rep = iwahori::run_command(cmd, buf.str(), opt);
  if (format == "json")
    std::cout << rep.body.dump(2) << "\n";
  else
    std::cout << iwahori::render_text(rep);
  std::cerr << "timing_ms: " << rep.timing_ms << "\n";
  return rep.exit_code;
}
