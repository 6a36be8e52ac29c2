#include "acceptance.hpp"

#include "constants.hpp"
#include "samplers.hpp"
#include "nsz/errors.hpp"
#include "nsz/json_io.hpp"
#include "nsz/lp/tcs_solver.hpp"
#include "nsz/ord_proofs.hpp"
#include "nsz/php_dual.hpp"

#include <json.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nsz::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
  const AcceptanceOptions& options;
  Clock::time_point deadline;
};

/// ok + one line of detail.
struct Verdict {
  bool ok = false;
  std::string detail;
};

struct Check {
  std::string label;
  bool stretch = false;
  std::function<Verdict(const Context&)> run;
};

Verdict expect_equal(const Rational& got, const Rational& want) {
  return {got == want, "got " + to_fraction(got) + ", expected " + to_fraction(want)};
}

Rational solve_value(Family family, int n, lp::SupportMode mode, const Context& ctx) {
  lp::TcsRequest req;
  req.family = family;
  req.n = n;
  req.mode = mode;
  req.want_certificate = false;
  req.simplex.deadline = ctx.deadline;
  return lp::solve_tcs(req).value;
}

Verdict against_reference(const std::string& table, const std::string& column, int n, const Rational& value) {
  auto ref = find_reference(table, column, n);
  if (!ref) throw ParameterError("no reference value for " + table + "/" + column + " n=" + std::to_string(n));
  bool ok = ref->matches(value);
  std::string shown = ref->kind == Reference::Kind::Repeating ? repeating_decimal(value)
                      : ref->kind == Reference::Kind::Rounded ? to_decimal(value, ref->places)
                                                              : to_fraction(value);
  return {ok, "got " + to_fraction(value) + " (" + shown + "), expected " + ref->text};
}

Check lp_check(const std::string& table, const std::string& column, Family family, int n, lp::SupportMode mode,
               bool stretch) {
  std::string label = to_string(family) + "(" + std::to_string(n) + ") " + lp::to_string(mode) + " optimum";
  return {label, stretch, [=](const Context& ctx) {
            return against_reference(table, column, n, solve_value(family, n, mode, ctx));
          }};
}

std::vector<Check> criterion_checks(int id) {
  std::vector<Check> checks;
  switch (id) {
    case 1:
      checks.push_back(lp_check("PHP_DUAL_OPTIMA", "full", Family::Php, 3, lp::SupportMode::Full, false));
      checks.push_back(lp_check("PHP_DUAL_OPTIMA", "full", Family::Php, 4, lp::SupportMode::Full, true));
      break;
    case 2:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back(
            lp_check("PHP_DUAL_OPTIMA", "restricted", Family::Php, n, lp::SupportMode::Restricted, n == 6));
      }
      break;
    case 3:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back({"value of D, n=" + std::to_string(n), false, [n](const Context&) {
                            return against_reference("PHP_D_VALUES", "value_of_D", n, php_dual::dual_value(n));
                          }});
      }
      break;
    case 4:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back({"lower bound, n=" + std::to_string(n), false, [n](const Context&) {
                            auto ref = *find_reference("PHP_D_VALUES", "lower_bound", n);
                            auto bound = php_dual::php_lower_bound(n);
                            std::string got = bound.decimal(ref.places);
                            return Verdict{ref.matches_decimal(got), "sqrt(" + to_fraction(bound.squared()) +
                                                                         ") rounds to " + got + ", expected " +
                                                                         ref.text};
                          }});
      }
      break;
    case 5:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back({"E(D) closed form, n=" + std::to_string(n), false, [n](const Context&) {
                            Rational formula(factorial(n - 2), power(Integer(n - 1), n - 2));
                            formula.canonicalize();
                            auto v = expect_equal(php_dual::exp_d_brute(n), formula);
                            v.ok = v.ok && php_dual::exp_d_closed(n) == formula;
                            return v;
                          }});
        checks.push_back({"E(D^2) closed form and bound, n=" + std::to_string(n), false, [n](const Context&) {
                            Rational brute = php_dual::norm_d_squared_brute(n);
                            Rational bound = php_dual::norm_d_squared_bound(n);
                            auto v = expect_equal(php_dual::norm_d_squared_closed(n), brute);
                            v.detail += "; bound " + to_fraction(bound);
                            v.ok = v.ok && brute <= bound;
                            return v;
                          }});
      }
      break;
    case 6:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back({"expectation laws on random weakenings, n=" + std::to_string(n), false,
                          [n](const Context& ctx) {
                            Rng rng(ctx.options.seed + static_cast<std::uint64_t>(n));
                            const Rational scale(power(Integer(2), n - 2));
                            int samples = ctx.options.samples;
                            for (int s = 0; s < samples; ++s) {
                              HoleSets h = random_holesets(n, rng);
                              Rational base = php_dual::exp_dw(n, h);
                              std::uint32_t flip = random_other_pigeons(h, rng);
                              Rational flipped = php_dual::exp_dw(n, php_dual::flip(h, flip));
                              Rational sign = std::popcount(flip) % 2 == 0 ? 1 : -1;
                              if (flipped != sign * base) return Verdict{false, "flip law fails at sample " + std::to_string(s)};
                              if (php_dual::exp_dw_signed(n, h) != scale * base) {
                                return Verdict{false, "signed-weakening law fails at sample " + std::to_string(s)};
                              }
                              HoleSets open = h;
                              for (int i = 0; i < n; ++i) {
                                if (i != h.first && i != h.second) {
                                  open.masks[i] = open.full_mask();
                                  break;
                                }
                              }
                              if (php_dual::exp_dw(n, open) != 0) {
                                return Verdict{false, "unrestricted-pigeon law fails at sample " + std::to_string(s)};
                              }
                              int skip = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                              Polynomial p = random_polynomial_ignoring(n, skip, rng);
                              std::uint32_t rest = ((1u << n) - 1) & ~(1u << skip);
                              if (php_dual::exp_dp(n, p) != php_dual::exp_jp(n, rest, p)) {
                                return Verdict{false, "one-pigeon-ignored law fails at sample " + std::to_string(s)};
                              }
                            }
                            return Verdict{true, std::to_string(samples) + " samples"};
                          }});
      }
      break;
    case 7:
      for (int n = 3; n <= 7; ++n) {
        checks.push_back({"ORD(" + std::to_string(n) + ") explicit proof", n == 7, [n](const Context& ctx) {
                            auto cert = ord_proofs::build_ord_proof(n);
                            auto verified = verify_certificate(cert, ctx.options.threads);
                            auto partition = ord_proofs::check_partition(cert, ctx.options.threads);
                            Rational tcs = cert.total_coefficient_size();
                            Rational want = (1 << n) - n;
                            std::ostringstream d;
                            d << "verified " << (verified.ok ? "yes" : "no") << " on " << verified.points_checked
                              << " points, partition " << (partition.ok ? "yes" : "no") << ", TCS " << tcs
                              << " (expected " << want << ")";
                            return Verdict{verified.ok && partition.ok && tcs == want &&
                                               ord_proofs::check_nice_transitivity(cert),
                                           d.str()};
                          }});
      }
      break;
    case 8:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back(lp_check("ORD_OPTIMA", "full", Family::Ord, n, lp::SupportMode::Full, n == 6));
      }
      for (int n = 3; n <= 6; ++n) {
        checks.push_back({"ORD(" + std::to_string(n) + ") no-minimum optimum", false, [n](const Context& ctx) {
                            Rational value = solve_value(Family::Ord, n, lp::SupportMode::Restricted, ctx);
                            auto v = against_reference("ORD_RESTRICTED", "no_minimum", n, value);
                            v.ok = v.ok && value == n * (n - 1) * (n - 2) / 3;
                            return v;
                          }});
      }
      break;
    case 9:
      checks.push_back({"ORD(4) restriction transform", false, [](const Context& ctx) {
                          std::optional<ProofCertificate> input;
                          if (ctx.options.witness_path) {
                            input = json_io::certificate_from_json(json_io::read_file(*ctx.options.witness_path));
                          } else {
                            lp::TcsRequest req;
                            req.family = Family::Ord;
                            req.n = 4;
                            req.mode = lp::SupportMode::Restricted;
                            req.method = lp::TcsMethod::Primal;
                            req.simplex.deadline = ctx.deadline;
                            input = lp::solve_tcs(req).certificate;
                          }
                          if (!input) return Verdict{false, "no restricted certificate"};
                          const int n = input->system().n();
                          auto on_support = verify_certificate_on(*input, assignments_no_minimum(n));
                          if (!on_support.ok) return Verdict{false, "input fails on a tournament without a minimum"};
                          auto full = ord_proofs::restrict_to_no_min(*input);
                          auto verified = verify_certificate(full, ctx.options.threads);
                          Rational tin = input->total_coefficient_size();
                          Rational tout = full.total_coefficient_size();
                          Rational cap = (n + 1) * tin + n;
                          return Verdict{verified.ok && tout <= cap, "TCS " + to_fraction(tin) + " -> " +
                                                                         to_fraction(tout) + " (cap " +
                                                                         to_fraction(cap) + "), verified " +
                                                                         (verified.ok ? "yes" : "no")};
                        }});
      break;
    case 10:
      for (int n = 3; n <= 7; ++n) {
        checks.push_back({"ORD(" + std::to_string(n) + ") sum-of-squares proof", n == 7, [n](const Context& ctx) {
                            auto cert = ord_proofs::build_sos_ord_proof(n);
                            auto verified = verify_certificate(cert, ctx.options.threads);
                            bool block = ord_proofs::check_building_block(n);
                            return Verdict{verified.ok && block,
                                           "identity " + std::string(verified.ok ? "holds" : "fails") + " on " +
                                               std::to_string(verified.points_checked) + " points, building block " +
                                               (block ? "holds" : "fails") + ", TCS " +
                                               to_fraction(cert.total_coefficient_size())};
                          }});
      }
      break;
    case 11:
      for (int n = 3; n <= 6; ++n) {
        checks.push_back({"resolution-like failure value, n=" + std::to_string(n), false, [n](const Context&) {
                            Rational brute = php_dual::resolution_failure_brute(n);
                            auto v = expect_equal(php_dual::resolution_failure_closed(n), brute);
                            v.detail = "closed form " + to_fraction(php_dual::resolution_failure_closed(n)) +
                                       ", summation " + to_fraction(brute) + ", normalized " +
                                       to_decimal(brute / php_dual::max_abs_exp_dw(n).max_abs, 3) + " (report only)";
                            return v;
                          }});
        checks.push_back({"intermediate observations, n=" + std::to_string(n), false, [n](const Context&) {
                            auto c = php_dual::failure_observations_closed(n);
                            auto b = php_dual::failure_observations_brute(n);
                            std::ostringstream d;
                            d << "closed (" << c.others_avoid_first_hole << ", " << c.first_in_rest_avoid << ", "
                              << c.first_two_in_rest_avoid << "), summation (" << b.others_avoid_first_hole << ", "
                              << b.first_in_rest_avoid << ", " << b.first_two_in_rest_avoid << ")";
                            return Verdict{c.others_avoid_first_hole == b.others_avoid_first_hole &&
                                               c.first_in_rest_avoid == b.first_in_rest_avoid &&
                                               c.first_two_in_rest_avoid == b.first_two_in_rest_avoid,
                                           d.str()};
                          }});
      }
      break;
    default:
      throw ParameterError("unknown criterion " + std::to_string(id));
  }
  return checks;
}

}  // namespace

std::string to_string(AcceptanceLevel level) { return level == AcceptanceLevel::Quick ? "quick" : "full"; }

AcceptanceLevel parse_level(std::string_view text) {
  if (text == "quick") return AcceptanceLevel::Quick;
  if (text == "full") return AcceptanceLevel::Full;
  throw ParameterError("level must be quick or full");
}

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}; }

std::string criterion_title(int id) {
  switch (id) {
    case 1: return "PHP full-cube dual optimum";
    case 2: return "PHP one-hole-per-pigeon dual optima";
    case 3: return "dual value of D";
    case 4: return "closed-form lower bound";
    case 5: return "E(D) and E(D^2) closed forms";
    case 6: return "expectation laws for E(DW)";
    case 7: return "explicit ORD proof";
    case 8: return "ORD LP optima";
    case 9: return "restriction transform";
    case 10: return "sum-of-squares ORD proof";
    case 11: return "resolution-like failure value";
    default: throw ParameterError("unknown criterion " + std::to_string(id));
  }
}

bool CriterionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.status != "fail"; });
}

std::string CriterionReport::summary_line() const {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int not_run = 0;
  for (const auto& c : checks) {
    if (c.status == "pass") ++pass;
    else if (c.status == "fail") ++fail;
    else if (c.status == "skipped") ++skipped;
    else ++not_run;
  }
  std::ostringstream out;
  out << "criterion " << id << ": " << (passed() ? "PASS" : "FAIL") << "  " << title << "  (" << pass << " passed";
  if (fail > 0) out << ", " << fail << " failed";
  if (skipped > 0) out << ", " << skipped << " skipped";
  if (not_run > 0) out << ", " << not_run << " not run";
  out << ")  [" << std::fixed << std::setprecision(1) << seconds << " s]";
  return out.str();
}

CriterionReport run_criterion(int id, const AcceptanceOptions& options) {
  CriterionReport report;
  report.id = id;
  report.title = criterion_title(id);
  auto start = Clock::now();
  for (auto& check : criterion_checks(id)) {
    CheckOutcome out;
    out.label = check.label;
    out.stretch = check.stretch;
    if (check.stretch && options.level == AcceptanceLevel::Quick) {
      out.status = "not run";
      out.detail = "stretch check, full level only";
      report.checks.push_back(out);
      continue;
    }
    auto t0 = Clock::now();
    Context ctx{options, t0 + options.budget};
    try {
      Verdict v = check.run(ctx);
      out.status = v.ok ? "pass" : "fail";
      out.detail = v.detail;
    } catch (const TimeoutError& e) {
      out.status = check.stretch ? "skipped" : "fail";
      out.detail = std::string("budget exceeded: ") + e.what();
    } catch (const std::exception& e) {
      out.status = "fail";
      out.detail = e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.checks.push_back(out);
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& options, std::ostream* log) {
  std::vector<CriterionReport> reports;
  for (int id : criterion_ids()) {
    reports.push_back(run_criterion(id, options));
    if (log != nullptr) *log << reports.back().summary_line() << std::endl;
  }
  return reports;
}

std::string report_to_json(const std::vector<CriterionReport>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json cr;
    cr["criterion"] = r.id;
    cr["title"] = r.title;
    cr["pass"] = r.passed();
    cr["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      cr["checks"].push_back({{"label", c.label}, {"status", c.status}, {"stretch", c.stretch}, {"detail", c.detail}});
    }
    j.push_back(cr);
  }
  return j.dump(2) + "\n";
}

}  // namespace nsz::cli
