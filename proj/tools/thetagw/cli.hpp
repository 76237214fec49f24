#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thetagw/invariants.hpp"
#include "thetagw/spin_parity.hpp"
#include "verify.hpp"

namespace thetagw::cli {

enum class Command { invariant, verify, table };
enum class Format { json, csv, text };

struct CliConfig {
  Command command = Command::invariant;
  int degree = 1;
  int h = 0;
  std::optional<Parity> parity;
  std::optional<std::vector<int>> alphas;
  Suite suite = Suite::all;
  std::optional<int> hmax;
  std::optional<int> kmax;
  std::optional<int> alpha_budget;
  std::optional<int> max_insertions;
  int jobs = 1;
  Format format = Format::json;
  bool with_float = false;
  bool quiet = false;
};

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// "1,0,3" -> {1, 0, 3}; "" -> {}. Throws std::invalid_argument on negative
/// or non-numeric entries.
std::vector<int> parse_alphas(std::string_view text);

/// {"degree", "h", "parity", "alphas", "chi", "value"} for one evaluated query.
nlohmann::ordered_json invariant_record(const InvariantQuery& q, const Rational& value, bool with_float);

/// Parses `args` (without the program name) and dispatches. Usage errors are
/// reported on `err` as a JSON object {"error": ...}.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run_invariant(const CliConfig& cfg, std::ostream& out);
int run_verify(const CliConfig& cfg, std::ostream& out);
int run_table(const CliConfig& cfg, std::ostream& out);

}  // namespace thetagw::cli
