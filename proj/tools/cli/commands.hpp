#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_codec.hpp"
#include "gfm/modaction.hpp"

namespace gfm::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kBudget = 3,
  kPrecondition = 4,
};

struct CommandRequest {
  std::string verb;
  json payload;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

struct CommandResult {
  json report;
  int exit_code;
};

/// Every verb accepted by run(), sorted.
const std::vector<std::string>& verbs();

/// Never throws: failures become {"verb", "error": {"kind", "message"}}
/// with a nonzero exit code.
CommandResult run(const CommandRequest& request);

/// Serializes a report: compact single line, or indented with `pretty`.
std::string render(const json& report, bool pretty);

}  // namespace gfm::cli
