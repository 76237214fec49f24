#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "thetagw/thetagw.hpp"

namespace thetagw::cli {

namespace {

struct Task {
  Suite suite;
  std::string name;
  std::vector<std::string> covers;
  std::function<CheckResult()> run;
};

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string describe(const ZMonomial& m) { return m.to_string(); }
std::string describe(const Rational& r) { return r.to_string(); }
std::string describe(bool b) { return b ? "true" : "false"; }
std::string describe(long v) { return std::to_string(v); }
std::string describe(const BigInt& v) { return v.get_str(); }

template <typename T>
CheckResult compare(const T& lhs, const T& rhs) {
  CheckResult r;
  r.pass = (lhs == rhs);
  r.lhs = describe(lhs);
  r.rhs = describe(rhs);
  return r;
}

class TaskList {
 public:
  template <typename Fn>
  void add(Suite suite, std::string name, std::vector<std::string> covers, Fn fn) {
    tasks_.push_back({suite, std::move(name), std::move(covers), std::function<CheckResult()>(std::move(fn))});
  }
  std::vector<Task>& tasks() { return tasks_; }

 private:
  std::vector<Task> tasks_;
};

constexpr Parity kParities[] = {Parity::even, Parity::odd};

std::string tag(int h, Parity p) { return "h=" + std::to_string(h) + " parity=" + std::string(to_string(p)); }

// Independent route to sqrt(1-x) coefficients: (-1)^j binom(1/2, j).
Rational generalized_binomial_sqrt(int j) {
  Rational numerator(1);
  for (int i = 0; i < j; ++i) numerator *= Rational(1, 2) - Rational(i);
  return sign_power(j) * numerator / Rational(factorial(j));
}

void add_degeneration(TaskList& list, const VerifyBounds& b) {
  const Suite s = Suite::degeneration;
  list.add(s, "degree-one tau_1 constant", {"degree1"}, [] {
    return compare(degree1({1, 0, Parity::even, {1}}), Rational(-1, 12));
  });
  for (int h = 0; h <= b.degeneration_hmax; ++h) {
    for (Parity p : kParities) {
      list.add(s, "relative cap value " + tag(h, p), {"relative_values", "signed_double_cover_sum"}, [h, p] {
        return compare(relative_values(h, p).cap_split_unit, signed_double_cover_sum(h, p, CoverWeighting::unweighted));
      });
    }
  }
  list.add(s, "relative bubble values from degree-one blocks",
           {"relative_values", "relative_split_channel", "degree1"}, [] {
             const RelativeValues v = relative_values(0, Parity::even);
             const std::vector<int> tau1{1};
             CheckResult r = compare(v.bubble_split_tau1, relative_split_channel(tau1));
             r.pass = r.pass && v.bubble_single_tau1 == degree1({1, 0, Parity::even, {1}}) &&
                      v.bubble_single_unit == degree1({1, 0, Parity::even, {}});
             return r;
           });

  const auto multisets = insertion_multisets(b.alpha_budget, b.max_insertions);
  for (const auto& alphas : multisets) {
    list.add(s, "genus-zero specialization alphas=[" + join(alphas) + "]", {"degree2", "degree2_over_p1"}, [alphas] {
      return compare(degree2({2, 0, Parity::even, alphas}), degree2_over_p1(alphas));
    });
  }
  for (int h = 0; h <= b.degeneration_hmax; ++h) {
    for (Parity p : kParities) {
      for (const auto& alphas : multisets) {
        list.add(s, "gluing " + tag(h, p) + " alphas=[" + join(alphas) + "]",
                 {"check_degree2_gluing", "degree2", "relative_split_channel", "relative_tangent_channel"},
                 [h, p, alphas] {
                   CheckResult r = compare(degree2({2, h, p, alphas}), glued_degree2(h, p, alphas));
                   r.pass = r.pass && check_degree2_gluing(h, p, alphas);
                   return r;
                 });
      }
    }
  }
  for (const auto& alphas : multisets) {
    if (alphas.size() + 1 > static_cast<std::size_t>(b.max_insertions)) continue;
    list.add(s, "split channel unit insertion alphas=[" + join(alphas) + "]", {"relative_split_channel"}, [alphas] {
      std::vector<int> extended = alphas;
      extended.insert(extended.begin(), 0);
      return compare(relative_split_channel(extended), Rational(2) * relative_split_channel(alphas));
    });
    if (alphas.size() >= 2) {
      list.add(s, "split channel symmetry alphas=[" + join(alphas) + "]", {"relative_split_channel"}, [alphas] {
        std::vector<int> reversed(alphas.rbegin(), alphas.rend());
        return compare(relative_split_channel(reversed), relative_split_channel(alphas));
      });
    }
  }
  for (int h = 0; h <= b.degeneration_hmax; ++h) {
    list.add(s, "chi bookkeeping h=" + std::to_string(h), {"chi_constraint"}, [h] {
      const std::vector<int> tau1{1};
      const long chi = required_chi(2, h, tau1);
      long worst = chi;
      for (const GluingSplit& split : enumerate_gluing_splits(2, chi, chi - 4, chi + 4)) {
        const long glued = chi_constraint(split.chi1, split.chi2, split.eta);
        if (glued != chi) worst = glued;
      }
      return compare(worst, chi);
    });
  }
}

void add_hankel(TaskList& list, const VerifyBounds& b) {
  const Suite s = Suite::hankel;
  for (int j = 0; j <= 2 * b.kmax + 2; ++j) {
    list.add(s, "sqrt coefficient j=" + std::to_string(j), {"sqrt_coeff"}, [j] {
      return compare(sqrt_coeff(j), ZMonomial{generalized_binomial_sqrt(j), j});
    });
  }
  for (int k = 1; k <= b.kmax; ++k) {
    for (int shift : {1, 2}) {
      list.add(s, "hankel determinant k=" + std::to_string(k) + " shift=" + std::to_string(shift), {"hankel_det"},
               [k, shift] { return compare(hankel_det(k, shift), hankel_det_closed_form(k, shift)); });
    }
  }
  for (int k = 1; k <= b.kmax; ++k) {
    list.add(s, "solve B leading term k=" + std::to_string(k), {"solve_b"}, [k] {
      return compare(solve_b(k).b(k), ZMonomial{Rational(-4).pow(-k), k});
    });
    list.add(s, "solve B back-substitution k=" + std::to_string(k), {"solve_b"}, [k] {
      const BSolution sol = solve_b(k);
      const GradedHankel m = GradedHankel::build(k, 1);
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        ZMonomial lhs{Rational(0), k + 1 + i};
        for (int j = 0; j < k; ++j) {
          const ZMonomial term = m.entry(i, j) * sol.unknowns[static_cast<std::size_t>(j)];
          ok = ok && term.degree == lhs.degree;
          lhs.coeff += term.coeff;
        }
        const ZMonomial rhs = sqrt_coeff(k + 1 + i);
        ok = ok && lhs == ZMonomial{-rhs.coeff, rhs.degree};
      }
      return compare(ok, true);
    });
  }
  for (int k = 0; k <= b.kmax; ++k) {
    list.add(s, "branch congruence k=" + std::to_string(k) + " n=" + std::to_string(2 * k + 1),
             {"verify_branch_congruence"}, [k] { return compare(verify_branch_congruence(k, 2 * k + 1), true); });
    list.add(s, "branch congruence k=" + std::to_string(k) + " n=" + std::to_string(2 * k + 2),
             {"verify_branch_congruence"}, [k] { return compare(verify_branch_congruence(k, 2 * k + 2), false); });
  }
  list.add(s, "torsion exponents from solvability boundary", {"verify_branch_congruence", "cone_multiplicity_table"},
           [kmax = b.kmax] {
             const auto table = cone_multiplicity_table(kmax, ConeFamily::prime);
             std::vector<long> from_boundary;
             std::vector<long> from_table;
             for (int i = 0; i <= kmax; ++i) {
               from_boundary.push_back(max_solvable_order(i));
               from_table.push_back(table[static_cast<std::size_t>(i)].multiplicity);
             }
             CheckResult r;
             r.pass = from_boundary == from_table;
             r.lhs = join(std::vector<int>(from_boundary.begin(), from_boundary.end()));
             r.rhs = join(std::vector<int>(from_table.begin(), from_table.end()));
             return r;
           });
}

void add_torsion(TaskList& list, const VerifyBounds& b) {
  const Suite s = Suite::torsion;
  for (int h = 2; h <= b.torsion_hmax; ++h) {
    list.add(s, "branched-cover identity h=" + std::to_string(h), {"n0_identity", "build_ledger"}, [h] {
      CheckResult r = compare(n0_component_value(h), -pow2(h - 2));
      r.pass = r.pass && n0_identity(h);
      return r;
    });
    list.add(s, "torsion degrees h=" + std::to_string(h), {"torsion_degrees", "build_ledger"}, [h] {
      const TorsionLedger ledger = build_ledger(h);
      Rational half_sum(0);
      for (int j = 0; j <= h - 2; ++j) half_sum += Rational(binomial(2L * h + 2, h - 2 - j)) * Rational(ledger.a[j], 2);
      const TorsionDegrees d = torsion_degrees(h);
      return compare(d.over_lambda_prime + d.over_lambda_dblprime, half_sum);
    });
  }
  const int jmax = std::max(30, b.torsion_hmax - 2);
  list.add(s, "cone sums reproduce b_j for j<=" + std::to_string(jmax), {"cone_multiplicity_table", "build_ledger"},
           [jmax] {
             const TorsionLedger ledger = build_ledger(jmax + 2);
             long mismatches = 0;
             for (int j = 0; j <= jmax; ++j) {
               const auto family = (j % 2 == 0) ? ConeFamily::prime : ConeFamily::dblprime;
               if (signed_cone_sum(cone_multiplicity_table(j / 2, family)) != ledger.b[j]) ++mismatches;
             }
             return compare(mismatches, 0L);
           });
  for (int h = 2; h <= std::min(b.twisted_hmax, b.torsion_hmax); ++h) {
    list.add(s, "twisted breakdown h=" + std::to_string(h), {"twisted_breakdown"}, [h] {
      const TwistedBreakdown t = twisted_breakdown(h);
      return compare(t.total - Rational(t.etale_count) * t.per_etale, Rational(h - 2) * pow2(2L * h - 3));
    });
    for (Parity p : kParities) {
      list.add(s, "tau_1 decomposition " + tag(h, p), {"degree2_tau1_decomposition", "degree2"}, [h, p] {
        const Tau1Decomposition d = degree2_tau1_decomposition(h, p);
        const Rational expected = parity_sign(p) * pow2(h) * Rational(-1, 3);
        CheckResult r = compare(d.grand_total, degree2({2, h, p, {1}}));
        r.pass = r.pass && d.grand_total == expected;
        return r;
      });
      list.add(s, "branched-cover assembly " + tag(h, p), {"degree2_tau1_decomposition", "n0_identity"}, [h, p] {
        return compare(parity_sign(p) * n0_component_value(h), degree2_tau1_decomposition(h, p).n0_total);
      });
    }
  }
}

void add_parity(TaskList& list, const VerifyBounds& b) {
  const Suite s = Suite::parity;
  for (int h = 1; h <= std::min(b.parity_hmax, 6); ++h) {
    list.add(s, "Arf census h=" + std::to_string(h), {"arf_census_bruteforce", "parity_census"}, [h] {
      const ParityCensus brute = arf_census_bruteforce(h);
      const ParityCensus closed = parity_census(h);
      CheckResult r = compare(brute.even_count, closed.even_count);
      r.pass = r.pass && brute == closed;
      return r;
    });
  }
  for (int h = 0; h <= std::max(b.parity_hmax, 12); ++h) {
    list.add(s, "census gap h=" + std::to_string(h), {"parity_census"}, [h] {
      const ParityCensus c = parity_census(h);
      CheckResult r = compare(BigInt(c.even_count - c.odd_count), pow2(h).numerator());
      r.pass = r.pass && c.even_count + c.odd_count == c.total;
      return r;
    });
  }
}

void add_etale(TaskList& list, const VerifyBounds& b) {
  const Suite s = Suite::etale;
  for (int h = 0; h <= b.etale_hmax; ++h) {
    for (Parity p : kParities) {
      list.add(s, "weighted cover sum " + tag(h, p), {"signed_double_cover_sum", "degree2"}, [h, p] {
        const Rational weighted = signed_double_cover_sum(h, p, CoverWeighting::weighted);
        CheckResult r = compare(weighted, degree2({2, h, p, {}}));
        r.pass = r.pass && weighted == parity_sign(p) * pow2(h - 1);
        return r;
      });
      list.add(s, "unweighted cover sum " + tag(h, p), {"signed_double_cover_sum"}, [h, p] {
        return compare(signed_double_cover_sum(h, p, CoverWeighting::unweighted), parity_sign(p) * pow2(h));
      });
      list.add(s, "connected cover sum " + tag(h, p), {"signed_double_cover_sum"}, [h, p] {
        return compare(signed_double_cover_sum(h, p, CoverWeighting::connected_weighted),
                       signed_double_cover_sum(h, p, CoverWeighting::weighted) - Rational(1, 2));
      });
    }
  }
}

CheckResult guarded(const Task& task) {
  CheckResult r;
  try {
    r = task.run();
  } catch (const std::exception& e) {
    r.pass = false;
    r.lhs = std::string("exception: ") + e.what();
    r.rhs = "";
  }
  r.suite = task.suite;
  r.name = task.name;
  return r;
}

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::degeneration: return "degeneration";
    case Suite::hankel: return "hankel";
    case Suite::torsion: return "torsion";
    case Suite::parity: return "parity";
    case Suite::etale: return "etale";
    case Suite::all: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::degeneration, Suite::hankel, Suite::torsion, Suite::parity, Suite::etale, Suite::all}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

std::vector<Suite> expand(Suite s) {
  if (s != Suite::all) return {s};
  return {Suite::degeneration, Suite::hankel, Suite::torsion, Suite::parity, Suite::etale};
}

VerifyBounds VerifyBounds::with_overrides(std::optional<int> hmax, std::optional<int> kmax,
                                          std::optional<int> alpha_budget, std::optional<int> max_insertions) {
  VerifyBounds b;
  if (hmax) {
    b.degeneration_hmax = b.torsion_hmax = b.twisted_hmax = b.etale_hmax = *hmax;
    b.parity_hmax = std::min(*hmax, 6);
  }
  if (kmax) b.kmax = *kmax;
  if (alpha_budget) b.alpha_budget = *alpha_budget;
  if (max_insertions) b.max_insertions = *max_insertions;
  return b;
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::size_t VerifyReport::failed() const { return checks.size() - passed(); }

const std::vector<std::string>& operations_for(Suite s) {
  static const std::vector<std::string> degeneration{"degree1",
                                                     "degree2",
                                                     "degree2_over_p1",
                                                     "relative_values",
                                                     "relative_split_channel",
                                                     "relative_tangent_channel",
                                                     "check_degree2_gluing",
                                                     "chi_constraint"};
  static const std::vector<std::string> hankel{"sqrt_coeff", "hankel_det", "solve_b", "verify_branch_congruence"};
  static const std::vector<std::string> torsion{"build_ledger",       "n0_identity",       "torsion_degrees",
                                                "cone_multiplicity_table", "twisted_breakdown", "degree2_tau1_decomposition"};
  static const std::vector<std::string> parity{"parity_census", "arf_census_bruteforce"};
  static const std::vector<std::string> etale{"signed_double_cover_sum"};
  static const std::vector<std::string> none;
  switch (s) {
    case Suite::degeneration: return degeneration;
    case Suite::hankel: return hankel;
    case Suite::torsion: return torsion;
    case Suite::parity: return parity;
    case Suite::etale: return etale;
    case Suite::all: return none;
  }
  return none;
}

VerifyReport run_suites(std::span<const Suite> suites, const VerifyBounds& bounds, int jobs) {
  TaskList list;
  VerifyReport report;
  for (Suite requested : suites) {
    for (Suite s : expand(requested)) {
      if (std::find(report.suites.begin(), report.suites.end(), s) != report.suites.end()) continue;
      report.suites.push_back(s);
      switch (s) {
        case Suite::degeneration: add_degeneration(list, bounds); break;
        case Suite::hankel: add_hankel(list, bounds); break;
        case Suite::torsion: add_torsion(list, bounds); break;
        case Suite::parity: add_parity(list, bounds); break;
        case Suite::etale: add_etale(list, bounds); break;
        case Suite::all: break;
      }
    }
  }

  auto& tasks = list.tasks();
  report.checks.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) report.checks[i] = guarded(tasks[i]);
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const Task& t : tasks) report.coverage.insert(t.covers.begin(), t.covers.end());
  for (Suite s : report.suites) {
    for (const std::string& op : operations_for(s)) {
      if (!report.coverage.contains(op)) report.missing_coverage.push_back(op);
    }
  }
  return report;
}

std::vector<std::vector<int>> insertion_multisets(int budget, int max_length) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int, int)> extend = [&](int length, int min_value, int remaining) {
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
      return;
    }
    for (int v = min_value; v <= remaining; ++v) {
      current.push_back(v);
      extend(length, v, remaining - v);
      current.pop_back();
    }
  };
  for (int length = 0; length <= max_length; ++length) extend(length, 0, budget);
  return out;
}

}  // namespace thetagw::cli
