#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qes/commutators.hpp"
#include "qes/rabi.hpp"
#include "qes/sampling.hpp"
#include "qes/subspace.hpp"

using nlohmann::ordered_json;
using namespace qes;

namespace {

constexpr int kSchema = 1;
constexpr double kListedTolerance = 5e-5;
constexpr double kEnergyTolerance = 1e-5;
constexpr double kFockTolerance = 1e-5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

ordered_json to_json(const Check& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

CheckStatus worst(const std::vector<Check>& checks) {
  CheckStatus out = CheckStatus::pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::paper_discrepancy) out = CheckStatus::paper_discrepancy;
  }
  return out;
}

std::string fixed(double v, int digits = 5) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("QES_SEED must be a non-negative integer");
    }
  }
  return 0;
}

Rational parse_parameter(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + " must be a rational p or p/q");
  }
}

ordered_json envelope(const std::string& command, ordered_json inputs) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

int exit_code(CheckStatus s) { return s == CheckStatus::pass ? 0 : 1; }

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  int family = 1;
  int n = 0;
  int samples = 8;
  int max_n = 8;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> s, alpha, nu;
};

int run_verify(const VerifyOptions& o, bool json) {
  if (o.n < 0 || o.n > o.max_n) throw UsageError("--n must be in 0.." + std::to_string(o.max_n));
  if (o.samples < 1) throw UsageError("--samples must be positive");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(o.seed);
  SampleSource source(seed);

  std::vector<Check> checks;
  ordered_json samples = ordered_json::array();
  std::size_t applications = 0;
  for (int i = 0; i < o.samples; ++i) {
    Rational s = source.non_integer();
    Rational alpha = source.non_integer();
    Rational nu = source.non_integer();
    if (o.s) s = parse_parameter("s", *o.s);
    if (o.alpha) alpha = parse_parameter("alpha", *o.alpha);
    if (o.nu) nu = parse_parameter("nu", *o.nu);
    FamilySpec spec;
    try {
      spec = FamilySpec::make(o.family, o.n, s, alpha, nu);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    const auto report = verify_invariance(spec);
    applications += report.applications;
    ordered_json mismatches = ordered_json::array();
    for (const auto& m : report.mismatches)
      mismatches.push_back({{"generator", to_string(m.generator)}, {"element", m.source.label()}, {"detail", m.detail}});

    const SubspaceBasis subspace(spec);
    const auto ops = family_operators(spec);
    bool homomorphism = true;
    try {
      const auto jp = subspace.matrix_rep(ops.plus);
      const auto jm = subspace.matrix_rep(ops.minus);
      homomorphism = subspace.matrix_rep(commutator(ops.plus, ops.minus)) == commutator(jp, jm) &&
                     subspace.matrix_rep(ops.plus * ops.minus) == jp * jm;
    } catch (const NotPreserved&) {
      homomorphism = false;
    }
    checks.push_back({"invariance " + spec.str(), report.passed() ? CheckStatus::pass : CheckStatus::fail,
                      std::to_string(report.applications) + " applications, " +
                          std::to_string(report.mismatches.size()) + " mismatches"});
    checks.push_back({"homomorphism " + spec.str(), homomorphism ? CheckStatus::pass : CheckStatus::fail,
                      "rep(J+J-) and rep([J+,J-])"});
    samples.push_back({{"s", spec.s.str()},
                       {"alpha", spec.alpha.str()},
                       {"nu", spec.nu.str()},
                       {"applications", report.applications},
                       {"mismatches", mismatches},
                       {"homomorphism", homomorphism}});
  }
  const CheckStatus status = worst(checks);
  const std::size_t per_sample = applications / static_cast<std::size_t>(o.samples);

  if (json) {
    ordered_json j = envelope("verify", {{"family", o.family}, {"N", o.n}, {"samples", o.samples}, {"seed", seed}});
    j["status"] = to_string(status);
    j["dimension"] = per_sample / 2;
    j["applications_per_sample"] = per_sample;
    j["applications"] = applications;
    j["samples"] = samples;
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back(to_json(c));
    j["timings"] = {{"total_seconds", elapsed(start)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "family " << o.family << ", N=" << o.n << ", seed " << seed << '\n';
    for (const auto& c : checks) std::cout << "  [" << to_string(c.status) << "] " << c.name << ": " << c.detail << '\n';
    std::cout << to_string(status) << ", " << per_sample << " basis applications checked per sample, " << o.samples
              << " samples\n";
  }
  return exit_code(status);
}

// ----------------------------------------------------------- commutators

struct CommutatorOptions {
  std::optional<int> family;
  bool all = false;
  int samples = 8;
  std::optional<std::uint64_t> seed;
  bool dump_operators = false;
};

ordered_json commutator_block(int k, const StructureReport& r, bool dump_operators) {
  ordered_json constants = ordered_json::array();
  for (const auto& c : r.constants)
    constants.push_back({{"name", c.name},
                         {"table", c.table.str()},
                         {"derived", c.derived.str()},
                         {"status", c.matches() ? "pass" : "paper-discrepancy"},
                         {"sample_mismatches", c.sample_mismatches}});
  ordered_json block{{"family", k},
                     {"status", to_string(r.status())},
                     {"samples", r.samples},
                     {"structure_shape_ok", r.structure_shape_ok},
                     {"table_residual_failures", r.table_failures},
                     {"derived_closed", r.derived.closed},
                     {"derived_failure", r.derived.failure},
                     {"derived_residual_zero", r.derived_residual_zero},
                     {"derivation_idempotent", r.derivation_idempotent},
                     {"constants", constants}};
  if (dump_operators) {
    const Parameters p{Rational(7, 3), Rational(-5, 4), Rational(2, 7), Rational(2)};
    block["structure_operator_example"] = {{"s", "7/3"}, {"alpha", "-5/4"}, {"nu", "2/7"}, {"N", "2"},
                                           {"S", structure_operator(k, p).str()}};
  }
  return block;
}

int run_commutators(const CommutatorOptions& o, bool json) {
  if (o.all == o.family.has_value()) throw UsageError("give exactly one of --family or --all");
  if (o.samples < 1) throw UsageError("--samples must be positive");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(o.seed);
  std::vector<int> families;
  if (o.all) families = {1, 2, 3, 4, 5, 6};
  else families = {*o.family};

  std::vector<Check> checks;
  ordered_json blocks = ordered_json::array();
  for (int k : families) {
    const auto report = verify_structure_relations(k, o.samples, seed);
    checks.push_back({"family " + std::to_string(k), report.status(), ""});
    blocks.push_back(commutator_block(k, report, o.dump_operators));
    if (!json) {
      std::cout << "family " << k << ": " << to_string(report.status()) << " (shape "
                << (report.structure_shape_ok ? "ok" : "bad") << ", table residual nonzero at " << report.table_failures
                << "/" << report.samples << " samples, derived constants "
                << (report.derived_residual_zero ? "close exactly" : "do not close") << ")\n";
      for (const auto& c : report.constants) {
        std::cout << "  " << std::left << std::setw(4) << c.name << " table " << c.table.str();
        if (!c.matches()) std::cout << "   derived " << c.derived.str() << "   [paper-discrepancy]";
        std::cout << '\n';
      }
      if (!report.derived.failure.empty()) std::cout << "  derive_constants: " << report.derived.failure << '\n';
      if (o.dump_operators) std::cout << "  S at s=7/3 alpha=-5/4 nu=2/7 N=2: " << blocks.back()["structure_operator_example"]["S"].get<std::string>() << '\n';
    }
  }
  const CheckStatus status = worst(checks);
  if (json) {
    ordered_json inputs{{"families", families}, {"samples", o.samples}, {"seed", seed}};
    ordered_json j = envelope("commutators", inputs);
    j["status"] = to_string(status);
    j["families"] = blocks;
    j["timings"] = {{"total_seconds", elapsed(start)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(status) << '\n';
  }
  return exit_code(status);
}

// ------------------------------------------------------------------ rabi

ordered_json poly_json(const std::map<int, double>& terms) {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : terms) j[std::to_string(e)] = c;
  return j;
}

struct RabiBlock {
  ordered_json json;
  std::vector<Check> checks;
  std::vector<std::string> text;
};

RabiBlock rabi_block(int N, SolutionType type, int cutoff, bool eigenfunctions) {
  RabiBlock out;
  const RabiConfig config = RabiConfig::make(N, type);
  const int dim = N + 1;
  const auto gauge = verify_gauge_identity(config);
  const auto result = solve_frequencies(config);
  const double energy = energy_value(N);

  out.checks.push_back({"gauge identity", gauge.holds() ? CheckStatus::pass : CheckStatus::fail,
                        gauge.holds() ? "exact" : "residual " + gauge.residual.str("z")});
  out.checks.push_back({"adjugate certificate", result.adjugate_certificate ? CheckStatus::pass : CheckStatus::fail,
                        "(M0+lambda)adj = det I"});

  ordered_json roots = ordered_json::array();
  for (std::size_t i = 0; i < result.roots.size(); ++i) {
    const auto& root = result.roots[i];
    const auto fock = fock_truncation_check(N, root.ratio, cutoff);
    const bool fock_ok = fock.discrepancy() <= kFockTolerance;
    out.checks.push_back({"fock at " + fixed(root.ratio), fock_ok ? CheckStatus::pass : CheckStatus::fail,
                          "discrepancy " + fixed(fock.discrepancy(), 12)});
    ordered_json r{{"ratio", root.ratio},
                   {"omega0", root.omega0},
                   {"lambda", root.lambda_value},
                   {"lambda_interval", {root.lambda.lower.str(), root.lambda.upper.str()}},
                   {"coefficients", root.coefficients},
                   {"null_residual", root.null_residual},
                   {"fock_discrepancy", fock.discrepancy()},
                   {"fock_discrepancy_even", fock.discrepancy_even},
                   {"fock_discrepancy_odd", fock.discrepancy_odd}};
    std::vector<std::string> vector_polys;
    for (const auto& p : root.null_vector) vector_polys.push_back(p.str("lambda"));
    r["null_vector"] = vector_polys;
    out.text.push_back("  2w/w0 = " + fixed(root.ratio, 10) + "  (w0 = " + fixed(root.omega0, 10) +
                       ", fock discrepancy " + fixed(fock.discrepancy(), 12) + ")");
    if (eigenfunctions) {
      const auto ef = assemble_eigenfunction(result, i);
      ordered_json terms = ordered_json::array();
      for (const auto& t : ef.terms) {
        terms.push_back({{"n", t.n},
                         {"alpha_n", t.alpha_n.str()},
                         {"coefficient", t.coefficient},
                         {"psi2_value", t.psi2.value.str("z")},
                         {"psi2_slope", t.psi2.slope.str("z")},
                         {"psi1_value", t.psi1.value.str("z")},
                         {"psi1_slope", t.psi1.slope.str("z")}});
        out.text.push_back("    c" + std::to_string(t.n) + " = " + fixed(t.coefficient, 10) + "  on 1F1(" +
                           t.alpha_n.str() + "; " + config.s.str() + "; " + config.scale.str() + "*z^2)");
      }
      r["eigenfunction"] = {{"gauge", (config.gauge.with_z ? "z*exp(" : "exp(") + config.gauge.eta.str() + "*z^2)"},
                            {"fundamental", "1F1(" + config.alpha.str() + "; " + config.s.str() + "; " +
                                                config.scale.str() + "*z^2)"},
                            {"rule_value", ef.rule.value_coeff.str("z")},
                            {"rule_slope", ef.rule.slope_coeff.str("z")},
                            {"terms", terms},
                            {"psi2_value", poly_json(ef.psi2_value)},
                            {"psi2_slope", poly_json(ef.psi2_slope)},
                            {"psi1_value", poly_json(ef.psi1_value)},
                            {"psi1_slope", poly_json(ef.psi1_slope)}};
    }
    roots.push_back(std::move(r));
  }

  // Listed values for this dimension, if any.
  ordered_json listed = ordered_json::array();
  for (const auto& row : listed_table()) {
    if (row.dimension != dim) continue;
    const bool energy_ok = std::abs(row.energy - energy) <= kEnergyTolerance;
    out.checks.push_back({"listed E/w " + fixed(row.energy), energy_ok ? CheckStatus::pass : CheckStatus::paper_discrepancy,
                          "computed " + fixed(energy, 8)});
    for (double value : type == SolutionType::I ? row.type_i : row.type_ii) {
      double nearest = std::nan("");
      for (const auto& root : result.roots)
        if (std::isnan(nearest) || std::abs(root.ratio - value) < std::abs(nearest - value)) nearest = root.ratio;
      const bool found = !std::isnan(nearest) && std::abs(nearest - value) <= kListedTolerance;
      const auto fock = fock_truncation_check(N, value, cutoff);
      out.checks.push_back({"listed 2w/w0 " + fixed(value), found ? CheckStatus::pass : CheckStatus::paper_discrepancy,
                            std::isnan(nearest) ? "no computed root" : "nearest computed " + fixed(nearest, 8) +
                                                                           ", fock discrepancy " + fixed(fock.discrepancy(), 8)});
      listed.push_back({{"value", value},
                        {"nearest_computed", std::isnan(nearest) ? ordered_json(nullptr) : ordered_json(nearest)},
                        {"in_root_set", found},
                        {"fock_discrepancy", fock.discrepancy()}});
    }
  }

  ordered_json claims = ordered_json::array();
  if (N == 2)
    for (const auto& claim : closed_form_claims()) {
      if (claim.type != type) continue;
      const auto report = check_claim(claim);
      out.checks.push_back({"closed form " + claim.expression,
                            report.in_root_set ? CheckStatus::pass : CheckStatus::paper_discrepancy,
                            "2w/w0 = " + fixed(claim.ratio, 8) + ", coefficient residual " +
                                fixed(report.coefficient_residual, 8)});
      claims.push_back({{"expression", claim.expression},
                        {"ratio", claim.ratio},
                        {"coefficients", claim.coefficients},
                        {"in_root_set", report.in_root_set},
                        {"nearest_computed", std::isnan(report.nearest_root) ? ordered_json(nullptr)
                                                                              : ordered_json(report.nearest_root)},
                        {"coefficient_residual", report.coefficient_residual}});
    }

  out.json = {{"N", N},
              {"dimension", dim},
              {"type", to_string(type)},
              {"s", config.s.str()},
              {"alpha", config.alpha.str()},
              {"g_over_omega", config.g.str()},
              {"g_over_omega_value", coupling_value()},
              {"E_over_omega", config.energy.str()},
              {"E_over_omega_value", energy},
              {"eta", config.gauge.eta.str()},
              {"scale", config.scale.str()},
              {"offset", config.offset.str()},
              {"determinant", result.determinant.str("lambda")},
              {"growth_rate", result.growth_rate.str()},
              {"bargmann_normalizable", result.bargmann_normalizable},
              {"roots", roots},
              {"listed", listed},
              {"closed_forms", claims}};
  ordered_json check_list = ordered_json::array();
  for (const auto& c : out.checks) check_list.push_back(to_json(c));
  out.json["checks"] = check_list;
  out.json["status"] = to_string(worst(out.checks));
  return out;
}

struct RabiOptions {
  int n = 2;
  std::string type = "I";
  int cutoff = 300;
  bool eigenfunctions = false;
};

int run_rabi(const RabiOptions& o, bool json) {
  if (o.n < 0 || o.n > 12) throw UsageError("--n must be in 0..12");
  if (o.cutoff < 100) throw UsageError("--cutoff must be at least 100");
  SolutionType type;
  try {
    type = parse_solution_type(o.type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  auto block = rabi_block(o.n, type, o.cutoff, o.eigenfunctions);
  const CheckStatus status = worst(block.checks);
  if (json) {
    ordered_json j = envelope("rabi", {{"N", o.n}, {"type", to_string(type)}, {"cutoff", o.cutoff}});
    j["status"] = to_string(status);
    j["result"] = block.json;
    j["timings"] = {{"total_seconds", elapsed(start)}};
    std::cout << j.dump(2) << '\n';
  } else {
    const auto& r = block.json;
    std::cout << "dim " << r["dimension"].get<int>() << ", type " << to_string(type) << ", g/w = "
              << r["g_over_omega"].get<std::string>() << " = " << fixed(coupling_value(), 8)
              << ", E/w = " << r["E_over_omega"].get<std::string>() << " = " << fixed(energy_value(o.n), 5) << '\n';
    std::cout << "det(M0 + lambda) = " << r["determinant"].get<std::string>() << '\n';
    for (const auto& line : block.text) std::cout << line << '\n';
    for (const auto& c : block.checks) std::cout << "  [" << to_string(c.status) << "] " << c.name << ": " << c.detail << '\n';
    std::cout << to_string(status) << '\n';
  }
  return exit_code(status);
}

// ---------------------------------------------------------------- table1

int run_table1(int cutoff, bool csv, bool json) {
  if (cutoff < 100) throw UsageError("--cutoff must be at least 100");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Check> checks;
  ordered_json rows = ordered_json::array();
  if (csv) std::cout << "dimension,type,kind,ratio,nearest_computed,in_root_set,E_over_omega\n";
  for (const auto& row : listed_table()) {
    for (SolutionType type : {SolutionType::I, SolutionType::II}) {
      const int N = row.dimension - 1;
      auto block = rabi_block(N, type, cutoff, false);
      for (const auto& c : block.checks) checks.push_back(c);
      if (csv) {
        for (const auto& root : block.json["roots"])
          std::cout << row.dimension << ',' << to_string(type) << ",computed," << fixed(root["ratio"].get<double>(), 10)
                    << ",," << "," << fixed(energy_value(N), 10) << '\n';
        for (const auto& listed : block.json["listed"])
          std::cout << row.dimension << ',' << to_string(type) << ",listed," << fixed(listed["value"].get<double>())
                    << ',' << (listed["nearest_computed"].is_null() ? "" : fixed(listed["nearest_computed"].get<double>(), 10))
                    << ',' << (listed["in_root_set"].get<bool>() ? "true" : "false") << ',' << fixed(row.energy) << '\n';
      } else if (!json) {
        std::cout << "dim " << row.dimension << " type " << std::left << std::setw(3) << to_string(type)
                  << " E/w " << fixed(energy_value(N)) << "  computed:";
        for (const auto& root : block.json["roots"]) std::cout << ' ' << fixed(root["ratio"].get<double>());
        std::cout << "  listed:";
        for (const auto& listed : block.json["listed"])
          std::cout << ' ' << fixed(listed["value"].get<double>()) << (listed["in_root_set"].get<bool>() ? "" : "(absent)");
        std::cout << '\n';
      }
      rows.push_back(block.json);
    }
  }
  const CheckStatus status = worst(checks);
  if (json) {
    ordered_json j = envelope("table1", {{"cutoff", cutoff}});
    j["status"] = to_string(status);
    j["rows"] = rows;
    j["timings"] = {{"total_seconds", elapsed(start)}};
    std::cout << j.dump(2) << '\n';
  } else if (!csv) {
    std::cout << to_string(status) << '\n';
  }
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quasi-exactly solvable operator families and the two-photon Rabi reduction"};
  app.require_subcommand(0, 1);
  bool json = false;
  bool table1_flag = false;
  app.add_flag("--json", json, "Emit the versioned JSON report");
  app.add_flag("--table1", table1_flag, "Shortcut for the table1 subcommand");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check invariance and action formulas of one family");
  verify_cmd->add_option("--family", verify.family, "Family id")->required()->check(CLI::Range(1, 6));
  verify_cmd->add_option("--n", verify.n, "Subspace index N")->required();
  verify_cmd->add_option("--samples", verify.samples, "Random parameter samples");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest accepted N");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed (default QES_SEED or 0)");
  verify_cmd->add_option("--s", verify.s, "Fix s (p or p/q)");
  verify_cmd->add_option("--alpha", verify.alpha, "Fix alpha (p or p/q)");
  verify_cmd->add_option("--nu", verify.nu, "Fix nu (p or p/q)");
  verify_cmd->add_flag("--json", json, "Emit the versioned JSON report");

  CommutatorOptions comm;
  auto* comm_cmd = app.add_subcommand("commutators", "Check the structure relations against the listed constants");
  comm_cmd->add_option("--family", comm.family, "Family id")->check(CLI::Range(1, 6));
  comm_cmd->add_flag("--all", comm.all, "All six families");
  comm_cmd->add_option("--samples", comm.samples, "Random parameter samples");
  comm_cmd->add_option("--seed", comm.seed, "Sampling seed (default QES_SEED or 0)");
  comm_cmd->add_flag("--operators", comm.dump_operators, "Also print S_k at a fixed parameter point");
  comm_cmd->add_flag("--json", json, "Emit the versioned JSON report");

  RabiOptions rabi;
  auto* rabi_cmd = app.add_subcommand("rabi", "Solve the two-photon Rabi reduction for one dimension");
  rabi_cmd->add_option("--n", rabi.n, "Subspace index N (dimension N+1)")->required();
  rabi_cmd->add_option("--type", rabi.type, "Solution type I or II");
  rabi_cmd->add_option("--cutoff", rabi.cutoff, "Photon cutoff of the Fock check");
  rabi_cmd->add_flag("--eigenfunctions", rabi.eigenfunctions, "Dump eigenfunction coefficients");
  rabi_cmd->add_flag("--json", json, "Emit the versioned JSON report");

  int table_cutoff = 300;
  bool csv = false;
  auto* table_cmd = app.add_subcommand("table1", "Full grid of dimensions 3,5,6,7,8 for both types");
  table_cmd->add_option("--cutoff", table_cutoff, "Photon cutoff of the Fock check");
  table_cmd->add_flag("--csv", csv, "Emit CSV");
  table_cmd->add_flag("--json", json, "Emit the versioned JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return run_verify(verify, json);
    if (*comm_cmd) return run_commutators(comm, json);
    if (*rabi_cmd) return run_rabi(rabi, json);
    if (*table_cmd || table1_flag) return run_table1(table_cutoff, csv, json);
    throw UsageError("a subcommand is required\n" + app.help());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
