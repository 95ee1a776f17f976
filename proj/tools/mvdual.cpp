// mvdual: classify, dualize and enumerate homs between compact products of
// Lukasiewicz chains and extended multisets.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvdual/commands.hpp"
#include "mvdual/error.hpp"

int main(int argc, char** argv) {
  using namespace mvdual;

  CLI::App app{"Compact products of Lukasiewicz chains and their dual extended multisets"};
  app.require_subcommand(1);

  std::string format = "text";
  OracleConfig config;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for L_inf sampling")->capture_default_str();
  app.add_option("--bound", config.hom_bound, "Oracle bound on |B|^|A| and |A|")->capture_default_str();
  app.add_option("--samples", config.samples, "Samples per check on L_inf factors")
      ->capture_default_str();

  std::string object;
  auto* classify = app.add_subcommand("classify", "Structural properties of an algebra, multiset or profile");
  classify->add_option("object", object, "e.g. \"L2 * Linf\", \"{a:1}\", \"profile{1:omega}\" or @file")
      ->required();

  auto* dual = app.add_subcommand("dual", "The dual object: algebra <-> extended multiset");
  dual->add_option("object", object, "Algebra or multiset, or @file")->required();

  std::string source, target, mode = "count";
  auto* homs = app.add_subcommand("homs", "Count or list morphisms / continuous homs");
  homs->add_option("source", source, "Source object or @file")->required();
  homs->add_option("target", target, "Target object or @file")->required();
  homs->add_option("--mode", mode, "count or list")
      ->check(CLI::IsMember({"count", "list"}))
      ->capture_default_str();

  std::string term, algebra;
  std::vector<std::string> bindings;
  auto* eval = app.add_subcommand("eval", "Evaluate an MV term in an algebra");
  eval->add_option("term", term, "Term, e.g. \"~x (+) y\", or @file")->required();
  eval->add_option("--algebra", algebra, "Algebra the variables live in")->required();
  eval->add_option("--let", bindings, "Binding name=element, e.g. x=(1/2,1)");

  std::string scale = "small";
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "Run the verification suites");
  selftest->add_option("--scale", scale, "small or full")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();
  std::vector<int> only;
  selftest->add_option("--suite", only, "Run only the given suite ids (repeatable)");
  selftest->add_flag("--inject-fault", inject_fault, "Plant a failing check (for testing the harness)");

  CLI11_PARSE(app, argc, argv);

  const OutputFormat out = format == "json" ? OutputFormat::json : OutputFormat::text;
  CommandResult result;
  try {
    if (*classify) {
      result = cmd_classify(resolve_input(object));
    } else if (*dual) {
      result = cmd_dual(resolve_input(object));
    } else if (*homs) {
      result = cmd_homs(resolve_input(source), resolve_input(target),
                        mode == "list" ? HomsMode::list : HomsMode::count);
    } else if (*eval) {
      result = cmd_eval(resolve_input(term), resolve_input(algebra), bindings);
    } else if (*selftest) {
      config.element_bound = std::max(config.element_bound, config.hom_bound);
      result = cmd_selftest({scale == "full" ? Scale::full : Scale::small, config, inject_fault, only});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (result.ok() || out == OutputFormat::json) {
    std::cout << result.render(out) << "\n";
  } else {
    if (!result.text.empty() && result.text.rfind("error: ", 0) != 0) std::cout << result.text << "\n";
    for (const auto& d : result.diagnostics) std::cerr << "error: " << d << "\n";
  }
  return result.exit_code;
}
