#include "commands.hpp"

#include "acceptance.hpp"
#include "tables.hpp"
#include "nsz/errors.hpp"
#include "nsz/json_io.hpp"
#include "nsz/lp/tcs_solver.hpp"
#include "nsz/ord_proofs.hpp"
#include "nsz/php_dual.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>

namespace nsz::cli {

namespace {

struct Globals {
  std::string out;
  std::string format = "md";
  unsigned threads = 0;
  std::uint64_t seed = 20240601;
};

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.out.empty()) {
    out << text;
  } else {
    json_io::write_file(g.out, text);
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw ParameterError("bad range '" + text + "', expected A..B");
  }
}

std::string masks_text(const HoleSets& h) {
  std::string s;
  for (int i = 0; i < h.n; ++i) {
    if (i > 0) s += ' ';
    s += '{';
    bool first = true;
    for (int j = 0; j < h.n - 1; ++j) {
      if ((h.masks[i] >> j) & 1u) {
        if (!first) s += ',';
        s += std::to_string(j + 1);
        first = false;
      }
    }
    s += '}';
  }
  return s;
}

std::string dual_report(int n) {
  auto extremal = php_dual::max_abs_exp_dw(n);
  auto conj = php_dual::conjectured_extremal_weakening(n);
  Rational conj_value = abs(php_dual::exp_dw(n, conj));
  Rational closed = php_dual::norm_d_squared_closed(n);
  Rational brute = php_dual::norm_d_squared_brute(n);
  Rational value = php_dual::dual_value(n);
  auto bound = php_dual::php_lower_bound(n);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["E_D"] = to_fraction(php_dual::exp_d_closed(n));
  j["E_D_brute"] = to_fraction(php_dual::exp_d_brute(n));
  j["E_D2_closed"] = to_fraction(closed);
  j["E_D2_brute"] = to_fraction(brute);
  j["E_D2_bound"] = to_fraction(php_dual::norm_d_squared_bound(n));
  j["max_expDW"] = to_fraction(extremal.max_abs);
  j["max_expDW_witness"] = {{"axiom_pigeons", {extremal.witness.first + 1, extremal.witness.second + 1}},
                            {"axiom_hole", extremal.witness.hole + 1},
                            {"holes", masks_text(extremal.witness)}};
  j["dual_value"] = to_fraction(value);
  j["dual_value_decimal"] = to_decimal(value, 3);
  j["lower_bound_squared"] = to_fraction(bound.squared());
  j["lower_bound_decimal"] = bound.decimal(3);
  j["lower_bound_at_most_dual_value"] = bound.at_most(value);
  j["conjectured_weakening"] = masks_text(conj);
  j["conjecture_match"] = conj_value == extremal.max_abs;
  j["resolution_failure_closed"] = to_fraction(php_dual::resolution_failure_closed(n));
  j["resolution_failure_brute"] = to_fraction(php_dual::resolution_failure_brute(n));
  return j.dump(2) + "\n";
}

lp::Support support_named(const AxiomSystem& sys, const std::string& name) {
  if (name == "full") return lp::Support::full(sys);
  if (name == "restricted") return lp::make_support(sys, lp::SupportMode::Restricted);
  throw ParameterError("support must be full or restricted");
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nullstellensatz and sum-of-squares certificates for PHP and ORD"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "md", "json"}));
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware)");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  int status = 0;

  // sys export
  auto* sys = app.add_subcommand("sys", "Axiom systems");
  sys->require_subcommand(1);
  auto* sys_export = sys->add_subcommand("export", "Write a system as JSON");
  std::string family = "php";
  int n = 3;
  sys_export->add_option("--family", family)->required()->check(CLI::IsMember({"php", "ord"}));
  sys_export->add_option("--n", n)->required();
  sys_export->callback([&] { emit(g, out, json_io::system_to_json(build_family(parse_family(family), n))); });

  // lp solve
  auto* lp_cmd = app.add_subcommand("lp", "Total coefficient size programs");
  lp_cmd->require_subcommand(1);
  auto* lp_solve = lp_cmd->add_subcommand("solve", "Solve the primal or dual program");
  std::string mode = "full";
  std::string support = "full";
  std::string side = "dual";
  std::string witness;
  bool congen = false;
  int budget = 600;
  lp_solve->add_option("--family", family)->required()->check(CLI::IsMember({"php", "ord"}));
  lp_solve->add_option("--n", n)->required();
  lp_solve->add_option("--mode", mode)->check(CLI::IsMember({"full", "restricted", "resolution-like"}));
  lp_solve->add_option("--support", support, "Support for resolution-like mode")
      ->check(CLI::IsMember({"full", "restricted"}));
  lp_solve->add_option("--side", side)->check(CLI::IsMember({"primal", "dual"}));
  lp_solve->add_flag("--congen", congen, "Symmetric column generation");
  lp_solve->add_option("--witness", witness, "Witness file (default: <out>.witness.json)");
  lp_solve->add_option("--budget", budget, "Seconds before giving up");
  lp_solve->callback([&] {
    lp::TcsRequest req;
    req.family = parse_family(family);
    req.n = n;
    req.proof = mode == "resolution-like" ? lp::ProofSystem::ResolutionLike : lp::ProofSystem::Nullstellensatz;
    req.mode = lp::parse_support_mode(mode == "resolution-like" ? support : mode);
    req.method = congen ? lp::TcsMethod::ColumnGeneration : (side == "primal" ? lp::TcsMethod::Primal : lp::TcsMethod::Dual);
    req.want_certificate = side == "primal";
    req.simplex.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(budget);
    auto result = lp::solve_tcs(req);

    json_io::LpResultRecord rec;
    rec.status = "optimal";
    rec.value = result.value;
    rec.family = family;
    rec.n = n;
    rec.mode = mode;
    rec.side = side;
    rec.method = lp::to_string(result.method);
    rec.pivots = result.pivots;
    rec.rounds = result.rounds;
    std::string path = !witness.empty() ? witness : g.out.empty() ? "" : g.out + ".witness.json";
    if (!path.empty()) {
      if (side == "primal") {
        if (!result.certificate) throw StructuralError("solver produced no certificate");
        json_io::write_file(path, json_io::certificate_to_json(*result.certificate));
      } else {
        json_io::write_file(path, json_io::functional_to_json(result.dual));
      }
      rec.witness_path = path;
    }
    emit(g, out, json_io::lp_result_to_json(rec));
  });

  // php dual-report
  auto* php_cmd = app.add_subcommand("php", "The explicit PHP dual functional");
  php_cmd->require_subcommand(1);
  auto* report = php_cmd->add_subcommand("dual-report", "Closed forms, summations and the dual value");
  report->add_option("--n", n)->required()->check(CLI::Range(3, 6));
  report->callback([&] { emit(g, out, dual_report(n)); });

  // ord
  auto* ord_cmd = app.add_subcommand("ord", "Explicit ORD certificates");
  ord_cmd->require_subcommand(1);
  auto* build = ord_cmd->add_subcommand("build-proof", "Recursive Nullstellensatz proof");
  build->add_option("--n", n)->required()->check(CLI::Range(3, 11));
  build->callback([&] { emit(g, out, json_io::certificate_to_json(ord_proofs::build_ord_proof(n))); });
  auto* sos = ord_cmd->add_subcommand("build-sos", "Sum-of-squares proof");
  sos->add_option("--n", n)->required()->check(CLI::Range(3, 11));
  sos->callback([&] { emit(g, out, json_io::certificate_to_json(ord_proofs::build_sos_ord_proof(n))); });
  auto* restrict_cmd = ord_cmd->add_subcommand("restrict", "Lift a proof valid without a minimum to a full proof");
  std::string input;
  restrict_cmd->add_option("--in", input)->required();
  restrict_cmd->callback([&] {
    auto cert = json_io::certificate_from_json(json_io::read_file(input));
    emit(g, out, json_io::certificate_to_json(ord_proofs::restrict_to_no_min(cert)));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a certificate pointwise");
  std::string verify_support = "full";
  verify->add_option("--in", input)->required();
  verify->add_option("--support", verify_support)->check(CLI::IsMember({"full", "restricted"}));
  verify->callback([&] {
    auto cert = json_io::certificate_from_json(json_io::read_file(input));
    auto result = verify_support == "full"
                      ? verify_certificate(cert, g.threads)
                      : verify_certificate_on(cert, support_named(cert.system(), verify_support).points, g.threads);
    nlohmann::ordered_json j;
    j["valid"] = result.ok;
    j["points_checked"] = result.points_checked;
    j["total_coefficient_size"] = to_fraction(cert.total_coefficient_size());
    if (result.witness) j["witness"] = format_bits(*result.witness, cert.system().var_count());
    emit(g, out, j.dump(2) + "\n");
    if (!result.ok) status = 1;
  });

  // table
  auto* table = app.add_subcommand("table", "Reproduce a reference table");
  std::string table_id;
  std::string range = "3..6";
  std::vector<std::string> columns;
  table->add_option("id", table_id, "PHP_DUAL_OPTIMA, PHP_D_VALUES, ORD_OPTIMA or ORD_RESTRICTED")->required();
  table->add_option("--n-range", range, "A..B");
  table->add_option("--columns", columns, "Column subset");
  table->add_option("--budget", budget, "Seconds per cell");
  table->callback([&] {
    TableSpec spec;
    spec.id = parse_table_id(table_id);
    std::tie(spec.n_min, spec.n_max) = parse_range(range);
    spec.columns = columns;
    spec.cell_budget = std::chrono::seconds(budget);
    spec.threads = g.threads;
    auto result = reproduce_table(spec);
    emit(g, out, g.format == "csv" ? render_csv(result) : g.format == "json" ? render_json(result) : render_markdown(result));
    if (!result.all_match()) status = 1;
  });

  // accept
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  std::string level = "quick";
  std::vector<int> only;
  AcceptanceOptions opts;
  accept->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  accept->add_option("--criterion", only, "Run only these criteria");
  accept->add_option("--witness", witness, "Restricted ORD(4) certificate for the restriction check");
  accept->add_option("--samples", opts.samples, "Random weakenings per n");
  accept->add_option("--budget", budget, "Seconds per check");
  accept->callback([&] {
    opts.level = parse_level(level);
    opts.seed = g.seed;
    opts.threads = g.threads;
    opts.budget = std::chrono::seconds(budget);
    if (!witness.empty()) opts.witness_path = witness;
    std::vector<CriterionReport> reports;
    if (only.empty()) {
      reports = run_acceptance(opts, &out);
    } else {
      for (int id : only) {
        reports.push_back(run_criterion(id, opts));
        out << reports.back().summary_line() << std::endl;
      }
    }
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        if (c.status == "fail") err << "  criterion " << r.id << " / " << c.label << ": " << c.detail << "\n";
      }
    }
    if (!g.out.empty()) json_io::write_file(g.out, report_to_json(reports));
    for (const auto& r : reports) {
      if (!r.passed()) status = 1;
    }
  });

  // Global flags are accepted after the subcommand too.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace nsz::cli
