#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumfree/json_io.hpp"

namespace sumfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandEnvelope {
  /// Space-separated subcommand path, e.g. "st build".
  std::string command;
  /// Options given on the command line, by long name.
  Json arguments = Json::object();
  /// JSON result (or structured error) written to stdout.
  Json payload;
  /// Non-JSON stdout content (DOT, edge lists, help text); replaces payload.
  std::optional<std::string> text;
  /// Hypothesis flags, budgets, timings; written to stderr.
  Json diagnostics = Json::object();
  /// Free-form stderr message, used for usage errors.
  std::string message;
  bool pretty = false;
  int exit_status = kExitOk;
};

/// Parses argv (without the program name) and runs the selected command.
/// Never throws: failures are reported through the envelope.
CommandEnvelope dispatch(const std::vector<std::string>& args);

/// The stdout bytes for an envelope (newline-terminated).
std::string render_stdout(const CommandEnvelope& env);
/// The stderr bytes for an envelope.
std::string render_stderr(const CommandEnvelope& env);

}  // namespace sumfree::cli
