#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gabra/units.hpp"

namespace gabra {

using Json = nlohmann::ordered_json;

enum class Subcommand { Check, Units, Symmetric, Closure, Sweep };
enum class OutputFormat { Text, Json };

/// Stable process exit statuses.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitBadInput = 2,
  kExitCapExceeded = 3,
};

struct CliConfig {
  Subcommand subcommand = Subcommand::Check;
  std::string group_spec;
  unsigned prime = 2;
  std::uint64_t cap = kDefaultCap;
  OutputFormat format = OutputFormat::Text;
  bool list_elements = false;
  std::uint64_t seed = 1;

  // closure only
  bool with_symmetric = false;
  std::vector<std::string> extra_generators;  // formal sums
  unsigned random_generators = 0;
};

/// Field order is part of the output contract.
Json to_json(const ConjectureReport& report);
ConjectureReport report_from_json(const Json& j);

std::string to_text(const ConjectureReport& report);

/// Catalog groups of order <= 16 whose order is a power of p, in sweep order.
std::vector<std::string> sweep_catalog(unsigned p);

/// Cap from GABRA_CAP if set and valid, else kDefaultCap. Throws
/// InvalidInput for an unparsable or zero value.
std::uint64_t cap_from_environment();

/// Executes one command, writing results to `out` and diagnostics to `err`.
/// The conjecture verdict never affects the returned status.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gabra
