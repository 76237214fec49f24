#include "cli.hpp"

#include <charconv>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

namespace thetagw::cli {

namespace {

constexpr std::string_view kCsvHeader = "degree,h,parity,alphas,chi,value";

std::string join_alphas(std::span<const int> alphas) {
  std::string out;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alphas[i]);
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_csv_row(std::ostream& out, const InvariantQuery& q, const Rational& value, bool with_float) {
  out << q.degree << ',' << q.genus << ',' << to_string(q.parity) << ",\"" << join_alphas(q.alphas) << "\"," << q.chi()
      << ',' << value.to_string();
  if (with_float) out << ',' << format_double(value.to_double());
  out << '\n';
}

void write_csv_header(std::ostream& out, bool with_float) {
  out << kCsvHeader;
  if (with_float) out << ",float";
  out << '\n';
}

void write_text(std::ostream& out, const InvariantQuery& q, const Rational& value, bool with_float) {
  out << "degree=" << q.degree << " h=" << q.genus << " parity=" << to_string(q.parity) << " alphas=["
      << join_alphas(q.alphas) << "] chi=" << q.chi() << " value=" << value.to_string();
  if (with_float) out << " float=" << format_double(value.to_double());
  out << '\n';
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + text + "'");
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_positive(const std::optional<int>& v, const char* flag) {
  if (v && *v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
}

}  // namespace

std::vector<int> parse_alphas(std::string_view text) {
  std::vector<int> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed descendant exponent '" + std::string(item) + "'");
    }
    if (value < 0) throw std::invalid_argument("descendant exponents must be nonnegative");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

nlohmann::ordered_json invariant_record(const InvariantQuery& q, const Rational& value, bool with_float) {
  nlohmann::ordered_json j;
  j["degree"] = q.degree;
  j["h"] = q.genus;
  j["parity"] = std::string(to_string(q.parity));
  j["alphas"] = q.alphas;
  j["chi"] = q.chi();
  j["value"] = value.to_string();
  if (with_float) j["float"] = value.to_double();
  return j;
}

int run_invariant(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.parity) throw UsageError("--parity is required");
  const InvariantQuery q{cfg.degree, cfg.h, *cfg.parity, cfg.alphas.value_or(std::vector<int>{})};
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Rational value = evaluate(q);
  switch (cfg.format) {
    case Format::json:
      out << invariant_record(q, value, cfg.with_float).dump() << '\n';
      break;
    case Format::csv:
      write_csv_header(out, cfg.with_float);
      write_csv_row(out, q, value, cfg.with_float);
      break;
    case Format::text:
      write_text(out, q, value, cfg.with_float);
      break;
  }
  return kExitOk;
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  require_positive(cfg.hmax, "--hmax");
  require_positive(cfg.kmax, "--kmax");
  require_positive(cfg.alpha_budget, "--alpha-budget");
  require_positive(cfg.max_insertions, "--max-insertions");
  const VerifyBounds bounds = VerifyBounds::with_overrides(cfg.hmax, cfg.kmax, cfg.alpha_budget, cfg.max_insertions);
  const Suite selected[] = {cfg.suite};
  const VerifyReport report = run_suites(selected, bounds, cfg.jobs);

  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["suites"] = nlohmann::ordered_json::array();
    for (Suite s : report.suites) j["suites"].push_back(std::string(to_string(s)));
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
      nlohmann::ordered_json row;
      row["suite"] = std::string(to_string(c.suite));
      row["name"] = c.name;
      row["pass"] = c.pass;
      if (!c.pass) {
        row["lhs"] = c.lhs;
        row["rhs"] = c.rhs;
      }
      j["checks"].push_back(row);
    }
    j["coverage"] = report.coverage;
    j["missing_coverage"] = report.missing_coverage;
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    out << j.dump(2) << '\n';
  } else {
    for (const CheckResult& c : report.checks) {
      if (c.pass && cfg.quiet) continue;
      out << (c.pass ? "PASS " : "FAIL ") << to_string(c.suite) << ": " << c.name;
      if (!c.pass) out << "  lhs=" << c.lhs << " rhs=" << c.rhs;
      out << '\n';
    }
    for (Suite s : report.suites) {
      std::size_t total = 0;
      std::size_t passed = 0;
      for (const CheckResult& c : report.checks) {
        if (c.suite != s) continue;
        ++total;
        if (c.pass) ++passed;
      }
      out << "suite " << to_string(s) << ": " << passed << "/" << total << " passed\n";
    }
    out << "coverage:";
    for (const std::string& op : report.coverage) out << ' ' << op;
    out << '\n';
    if (!report.missing_coverage.empty()) {
      out << "FAIL coverage: missing";
      for (const std::string& op : report.missing_coverage) out << ' ' << op;
      out << '\n';
    } else {
      out << "PASS coverage: every operation of the selected suites exercised\n";
    }
    out << (report.ok() ? "OK " : "FAILED ") << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

int run_table(const CliConfig& cfg, std::ostream& out) {
  if (cfg.degree != 1 && cfg.degree != 2) throw UsageError("--degree must be 1 or 2");
  require_positive(cfg.hmax, "--hmax");
  require_positive(cfg.alpha_budget, "--alpha-budget");
  require_positive(cfg.max_insertions, "--max-insertions");
  if (cfg.format == Format::text) throw UsageError("table supports --format csv or json");

  std::vector<std::vector<int>> multisets;
  if (cfg.alphas) {
    multisets.push_back(*cfg.alphas);
  } else {
    multisets = insertion_multisets(cfg.alpha_budget.value_or(2), cfg.max_insertions.value_or(3));
  }
  std::vector<Parity> parities;
  if (cfg.parity) {
    parities.push_back(*cfg.parity);
  } else {
    parities = {Parity::even, Parity::odd};
  }

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (cfg.format == Format::csv) write_csv_header(out, cfg.with_float);
  for (int h = 0; h <= cfg.hmax.value_or(3); ++h) {
    for (Parity p : parities) {
      for (const auto& alphas : multisets) {
        const InvariantQuery q{cfg.degree, h, p, alphas};
        const Rational value = evaluate(q);
        if (cfg.format == Format::csv) {
          write_csv_row(out, q, value, cfg.with_float);
        } else {
          rows.push_back(invariant_record(q, value, cfg.with_float));
        }
      }
    }
  }
  if (cfg.format == Format::json) out << rows.dump(2) << '\n';
  return kExitOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact low-degree Gromov-Witten invariants of theta-characteristic surfaces"};
  app.name("thetagw");
  app.require_subcommand(1);

  CliConfig cfg;
  std::string parity_text;
  std::string alphas_text;
  std::string format_text;
  std::string suite_text = "all";
  int hmax = 0;
  int kmax = 0;
  int alpha_budget = 0;
  int max_insertions = 0;

  auto* inv = app.add_subcommand("invariant", "Evaluate one invariant");
  inv->add_option("--degree", cfg.degree, "Degree d (1 or 2)")->required();
  inv->add_option("--genus", cfg.h, "Genus of the canonical curve D")->required();
  inv->add_option("--parity", parity_text, "h^0(L) mod 2: even or odd")->required();
  inv->add_option("--alphas", alphas_text, "Comma-separated descendant exponents");
  inv->add_option("--format", format_text, "json (default), csv or text");
  inv->add_flag("--float", cfg.with_float, "Add a decimal approximation next to the exact value");

  auto* ver = app.add_subcommand("verify", "Run exact verification suites");
  ver->add_option("--suite", suite_text, "degeneration, hankel, torsion, parity, etale or all");
  auto* hmax_opt = ver->add_option("--hmax", hmax, "Genus bound for every genus sweep");
  auto* kmax_opt = ver->add_option("--kmax", kmax, "Hankel size bound");
  auto* budget_opt = ver->add_option("--alpha-budget,--alpha_budget", alpha_budget, "Bound on the sum of exponents");
  auto* maxins_opt = ver->add_option("--max-insertions", max_insertions, "Bound on the number of insertions");
  ver->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--format", format_text, "text (default) or json");
  ver->add_flag("--quiet", cfg.quiet, "Only print failing checks and the summary");

  auto* tab = app.add_subcommand("table", "Emit a grid of invariant values");
  tab->add_option("--degree", cfg.degree, "Degree d (1 or 2)")->required();
  auto* thmax_opt = tab->add_option("--hmax", hmax, "Largest genus (default 3)");
  auto* tbudget_opt = tab->add_option("--alpha-budget,--alpha_budget", alpha_budget, "Bound on the sum of exponents (default 2)");
  auto* tmaxins_opt = tab->add_option("--max-insertions", max_insertions, "Bound on the number of insertions (default 3)");
  tab->add_option("--parity", parity_text, "Restrict to one parity");
  tab->add_option("--alphas", alphas_text, "Restrict to one insertion list");
  tab->add_option("--format", format_text, "csv (default) or json");
  tab->add_flag("--float", cfg.with_float, "Add a decimal column");

  auto usage_error = [&](const std::string& message) {
    err << nlohmann::json{{"error", message}}.dump() << '\n';
    return kExitUsage;
  };

  std::vector<const char*> argv{"thetagw"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    for (const CLI::App* sub : {static_cast<const CLI::App*>(inv), static_cast<const CLI::App*>(ver),
                                static_cast<const CLI::App*>(tab)}) {
      if (sub->parsed()) {
        out << sub->help();
        return kExitOk;
      }
    }
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  try {
    if (inv->parsed()) {
      cfg.command = Command::invariant;
      cfg.format = format_text.empty() ? Format::json : parse_format(format_text);
      cfg.parity = parse_parity(parity_text);
      cfg.alphas = parse_alphas(alphas_text);
      return run_invariant(cfg, out);
    }
    if (ver->parsed()) {
      cfg.command = Command::verify;
      cfg.suite = parse_suite(suite_text);
      cfg.format = format_text.empty() ? Format::text : parse_format(format_text);
      if (cfg.format == Format::csv) throw UsageError("verify supports --format text or json");
      if (hmax_opt->count()) cfg.hmax = hmax;
      if (kmax_opt->count()) cfg.kmax = kmax;
      if (budget_opt->count()) cfg.alpha_budget = alpha_budget;
      if (maxins_opt->count()) cfg.max_insertions = max_insertions;
      return run_verify(cfg, out);
    }
    cfg.command = Command::table;
    cfg.format = format_text.empty() ? Format::csv : parse_format(format_text);
    if (!parity_text.empty()) cfg.parity = parse_parity(parity_text);
    if (tab->get_option("--alphas")->count()) cfg.alphas = parse_alphas(alphas_text);
    if (thmax_opt->count()) cfg.hmax = hmax;
    if (tbudget_opt->count()) cfg.alpha_budget = alpha_budget;
    if (tmaxins_opt->count()) cfg.max_insertions = max_insertions;
    return run_table(cfg, out);
  } catch (const UsageError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
}

}  // namespace thetagw::cli
