#ifndef MTT_LAWS_H
#define MTT_LAWS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtt/gen.h"
#include "mtt/ring.h"

namespace mtt {

using Json = nlohmann::ordered_json;

/// One property. `check` runs a single generated instance and returns a
/// description of the inputs when the property fails there.
struct Law {
  std::string id;
  std::string summary;
  /// Instances per run are count * scale, at least 1; `fixed` overrides.
  double scale = 1.0;
  std::optional<std::size_t> fixed;
  std::function<std::optional<Json>(Gen &)> check;

  std::size_t instances(std::size_t count) const;
};

/// Every law, in a fixed order; a law's position is its index for seeding.
const std::vector<Law> &law_registry();

struct LawOptions {
  std::uint64_t seed = SampleSpec::kDefaultSeed;
  std::size_t count = 1000;
  RingInstance ring{};
  /// Comma-separated id prefixes; empty selects everything.
  std::string filter;
  unsigned jobs = 1;
  /// Wall-clock timings make reports differ between runs, so they are
  /// recorded only on request.
  bool timings = false;
};

struct LawReport {
  std::string id;
  std::size_t instances = 0;
  bool passed = true;
  Json counterexample;  // null when passed
  std::optional<double> elapsed_ms;

  Json to_json() const;
};

bool law_selected(const std::string &id, const std::string &filter);

/// Runs the selected laws, each on its own generator seeded with
/// seed ^ index, so the result does not depend on `jobs`.
std::vector<LawReport> run_laws(const LawOptions &options);

Json to_json(const std::vector<LawReport> &reports);

}  // namespace mtt

#endif  // MTT_LAWS_H
