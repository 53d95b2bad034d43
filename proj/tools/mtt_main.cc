// mtt: check programs, evaluate expressions, run the law suite.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mtt/checker.h"
#include "mtt/laws.h"
#include "mtt/parser.h"

namespace {

std::optional<std::string> slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

std::uint64_t parse_seed(const std::string &text) {
  std::size_t used = 0;
  std::uint64_t v = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument("bad seed '" + text + "'");
  return v;
}

int cmd_check(const std::string &file) {
  auto source = slurp(file);
  if (!source) {
    std::cerr << "mtt: cannot read " << file << "\n";
    return 2;
  }
  try {
    auto module = mtt::check_source(*source);
    for (const auto &d : module.definitions())
      std::cout << d.name << " : " << mtt::show(d.type) << "\n";
    return 0;
  } catch (const mtt::SourceError &e) {
    std::cerr << mtt::format_error(file, e) << "\n";
    return 1;
  }
}

int cmd_eval(const std::string &expr, const std::string &load) {
  std::optional<mtt::CheckedModule> module;
  if (!load.empty()) {
    auto source = slurp(load);
    if (!source) {
      std::cerr << "mtt: cannot read " << load << "\n";
      return 2;
    }
    try {
      module = mtt::check_source(*source);
    } catch (const mtt::SourceError &e) {
      std::cerr << mtt::format_error(load, e) << "\n";
      return 1;
    }
  }
  try {
    auto result = mtt::evaluate(expr, module ? &*module : nullptr);
    std::cout << mtt::show(result.value) << "\n";
    return 0;
  } catch (const mtt::SourceError &e) {
    std::cerr << mtt::format_error("<expr>", e) << "\n";
    return 1;
  } catch (const mtt::SemanticError &e) {
    std::cerr << "<expr>: " << e.what() << "\n";
    return 1;
  }
}

int cmd_laws(const mtt::LawOptions &options) {
  auto reports = mtt::run_laws(options);
  std::cout << mtt::to_json(reports).dump(2) << "\n";
  for (const auto &r : reports)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Moore-path type theory kernel"};
  app.require_subcommand(1);

  std::string file;
  auto *check = app.add_subcommand("check", "Type-check a .mtt program");
  check->add_option("FILE", file, "Program to check")->required();

  std::string expr, load;
  auto *eval = app.add_subcommand("eval", "Evaluate a closed expression");
  eval->add_option("EXPR", expr, "Expression")->required();
  eval->add_option("--load", load, "Bring the definitions of a program into scope");

  mtt::LawOptions options;
  std::string seed, ring = "rationals";
  if (const char *env = std::getenv("MTT_SEED")) seed = env;
  auto *laws = app.add_subcommand("laws", "Run the law suite and print a JSON report");
  laws->add_option("--seed", seed, "Base seed (default $MTT_SEED or 0x4D4F4F5245)");
  laws->add_option("--count", options.count, "Instances per law before scaling")
      ->check(CLI::PositiveNumber);
  laws->add_option("--filter", options.filter, "Comma-separated law id prefixes");
  laws->add_option("--ring", ring, "Scalar ring")
      ->check(CLI::IsMember({"rationals", "integers", "trivial"}));
  laws->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  laws->add_flag("--timings", options.timings, "Record elapsed milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  if (*check) return cmd_check(file);
  if (*eval) return cmd_eval(expr, load);
  try {
    if (!seed.empty()) options.seed = parse_seed(seed);
  } catch (const std::exception &) {
    std::cerr << "mtt: invalid seed '" << seed << "'\n";
    return 2;
  }
  options.ring = mtt::RingInstance::parse(ring);
  return cmd_laws(options);
}
