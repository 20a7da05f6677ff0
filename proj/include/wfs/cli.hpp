#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace wfs::cli {

struct DispatchResult {
  int code = 0;
  std::string output;
};

/// Runs one command. `args` excludes the program name. Exit codes: 0 success,
/// 1 verification failure or computation error, 2 bad flags or configuration.
DispatchResult dispatch(const std::vector<std::string>& args);

/// The text rendering of a json document produced by dispatch.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace wfs::cli
