#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetagw::cli {

enum class Suite { degeneration, hankel, torsion, parity, etale, all };

std::string_view to_string(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view text);
/// `all` expands to every concrete suite, in declaration order.
std::vector<Suite> expand(Suite s);

struct VerifyBounds {
  int degeneration_hmax = 10;
  int torsion_hmax = 50;
  int twisted_hmax = 30;
  int etale_hmax = 12;
  int parity_hmax = 5;
  int kmax = 8;
  int alpha_budget = 6;
  int max_insertions = 4;

  /// Applies --hmax / --kmax / --alpha-budget / --max-insertions overrides.
  static VerifyBounds with_overrides(std::optional<int> hmax, std::optional<int> kmax, std::optional<int> alpha_budget,
                                     std::optional<int> max_insertions);
};

struct CheckResult {
  Suite suite = Suite::all;
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::vector<Suite> suites;
  std::vector<CheckResult> checks;
  /// Library operations exercised by at least one check.
  std::set<std::string> coverage;
  /// Operations the selected suites are expected to exercise but did not.
  std::vector<std::string> missing_coverage;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && missing_coverage.empty(); }
};

/// Every operation of the hankel, spin-parity, invariants, degeneration and
/// torsion modules, as named in coverage reports.
const std::vector<std::string>& operations_for(Suite s);

/// Runs the selected suites. Checks fan out over `jobs` threads; the report
/// keeps them in parameter order regardless of completion order.
VerifyReport run_suites(std::span<const Suite> suites, const VerifyBounds& bounds, int jobs);

/// Multisets of nonnegative exponents, weakly increasing, with at most
/// `max_length` entries summing to at most `budget`; shorter first, then
/// lexicographic.
std::vector<std::vector<int>> insertion_multisets(int budget, int max_length);

}  // namespace thetagw::cli
