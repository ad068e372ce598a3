#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bolalg/report.hpp"

namespace bolalg::cli {

enum class Status { pass, fail, error };

std::string_view to_string(Status s);
/// 0 pass, 1 fail, 2 error.
int exit_code(Status s);

/// What one invocation produced; emitted as a table or as JSON.
struct CommandReport {
  std::string command;
  Status status = Status::pass;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  std::int64_t timing_us = 0;
  std::string message;

  void add(const Report& report, const std::string& prefix = {});
  void add(Check check) { checks.push_back(std::move(check)); }
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  /// Status from the checks unless an error was recorded.
  void settle();

  friend bool operator==(const CommandReport&, const CommandReport&);
};

enum class Format { human, machine };

inline constexpr std::string_view report_schema = "bolalg-report/1";

std::string emit_report(const CommandReport& report, Format format);
/// Inverse of emit_report(..., Format::machine). Throws bolalg::ParseError.
CommandReport parse_machine_report(std::string_view text);

/// Runs one command line (argv[0] is the program name). The report is
/// written to `out`, usage text and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Names of all subcommands, in table order.
std::vector<std::string> subcommand_names();

}  // namespace bolalg::cli
