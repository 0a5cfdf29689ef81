#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "tower/error.hpp"
#include "tower_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace tower::cli;

  CLI::App app{"Exact arithmetic, relation reports and enumerations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_option("--prec", options.precision, "Precision in bits for interval output and comparison")
      ->default_val(kDefaultPrecision);
  app.add_option("--format", options.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"plain", Format::Plain},
                                                                        {"json-lines", Format::JsonLines}}))
      ->default_str("plain");

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expression", expression)->required();

  std::string lhs;
  std::string rhs;
  auto* cmp = app.add_subcommand("cmp", "Compare two expressions (exit 2 when indistinguishable)");
  cmp->add_option("lhs", lhs)->required();
  cmp->add_option("rhs", rhs)->required();

  std::string path;
  auto* relcheck = app.add_subcommand("relcheck", "Classify a relation file ('-' for stdin)");
  relcheck->add_option("path", path)->required();

  std::string what;
  std::vector<std::string> args;
  auto* enumerate = app.add_subcommand("enum", "pair P Q | unpair R | dyadic N | dyadic-index D");
  enumerate->add_option("what", what)->required();
  enumerate->add_option("args", args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(expression, options, std::cout);
    if (*cmp) return cmd_cmp(lhs, rhs, options, std::cout);
    if (*relcheck) return cmd_relcheck(path, options, std::cin, std::cout);
    if (*enumerate) return cmd_enum(what, args, options, std::cout);
  } catch (const tower::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
