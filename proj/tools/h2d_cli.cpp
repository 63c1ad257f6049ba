// h2d: spectrum, wavefunction tables and verification suites for the planar
// hydrogen atom.
//
//   h2d eigen --n-max 4
//   h2d table --space momentum --n 1 --m 1 --grid 0.05:20:40:log --angle 0
//   h2d verify all --n-max 4 --out report.json
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include "h2d/tables.hpp"
#include "h2d/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values have no JSON literal; they are written as strings.
ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

ordered_json to_json(const h2d::VerificationReport& r) {
  ordered_json j;
  j["check_name"] = r.check_name;
  j["grid_desc"] = r.grid_desc;
  j["max_abs_err"] = number(r.max_abs_err);
  j["max_rel_err"] = number(r.max_rel_err);
  j["tolerance"] = number(r.tolerance);
  j["metric"] = h2d::to_string(r.metric);
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  j["comparisons"] = r.comparisons;
  return j;
}

std::string utc_stamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes to `path`, or stdout when empty. Binary mode keeps LF endings.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << text;
}

struct EigenArgs {
  int n_max = 10;
  std::string format = "csv";
  std::string out;
};

int run_eigen(const EigenArgs& a) {
  const auto rows = h2d::tables::eigen_table(a.n_max);
  std::ostringstream os;
  if (a.format == "csv") {
    h2d::tables::write_eigen_csv(os, rows);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) j.push_back({{"n", r.n}, {"q0", r.q0}, {"energy", r.energy}});
    os << j.dump(2) << '\n';
  }
  emit(a.out, os.str());
  return 0;
}

struct TableArgs {
  std::string space = "position";
  int n = 0;
  int m = 0;
  std::string grid = "0:10:101";
  double angle = 0.0;
  std::string mesh;
  std::string format = "csv";
  std::string out;
};

int run_table(const TableArgs& a) {
  const auto space = a.space == "position" ? h2d::tables::Space::position : h2d::tables::Space::momentum;
  std::optional<h2d::QuantumNumbers> qn;
  std::optional<h2d::GridSpec> grid;
  std::vector<double> angles{a.angle};
  try {
    qn.emplace(a.n, a.m);
    grid = h2d::GridSpec::parse(a.grid);
    if (!a.mesh.empty()) angles = h2d::GridSpec::parse(a.mesh).values();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (grid->min < 0.0) throw UsageError("grid: radial coordinate must be >= 0");
  const auto rows = h2d::tables::wave_table(space, *qn, *grid, angles);
  const bool mesh = !a.mesh.empty();
  std::ostringstream os;
  if (a.format == "csv") {
    h2d::tables::write_wave_csv(os, space, rows, mesh);
  } else {
    const char* coord = space == h2d::tables::Space::position ? "rho" : "p";
    const char* ang = space == h2d::tables::Space::position ? "phi" : "phi_p";
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row[coord] = r.coordinate;
      if (mesh) row[ang] = r.angle;
      row["re_psi"] = r.psi.real();
      row["im_psi"] = r.psi.imag();
      row["abs2_psi"] = std::norm(r.psi);
      j.push_back(row);
    }
    os << j.dump(2) << '\n';
  }
  emit(a.out, os.str());
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n_max;
  std::optional<double> tol;
  std::string out;
  bool stamp = false;
};

int run_verify(const VerifyArgs& a) {
  h2d::verify::SuiteOptions opts{a.n_max, a.tol};
  const auto reports = h2d::verify::run_suite(a.suite, opts);
  ordered_json j = ordered_json::array();
  bool all_pass = true;
  const std::string stamp = a.stamp ? utc_stamp() : std::string{};
  for (const auto& r : reports) {
    auto o = to_json(r);
    if (a.stamp) o["generated_at"] = stamp;
    j.push_back(std::move(o));
    all_pass = all_pass && r.pass;
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.check_name << "  err=" << r.applicable_error()
              << " tol=" << r.tolerance << '\n';
  }
  emit(a.out, j.dump(2) + "\n");
  return all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar hydrogen atom: spectrum, wavefunctions and verification suites"};
  app.require_subcommand(1);

  EigenArgs ea;
  auto* eigen = app.add_subcommand("eigen", "Bound-state spectrum E_n = -1/(n+1/2)^2");
  eigen->add_option("--n-max", ea.n_max, "Largest principal index")->check(CLI::Range(0, 50));
  eigen->add_option("--format", ea.format)->check(CLI::IsMember({"csv", "json"}));
  eigen->add_option("--out", ea.out, "Output file (default stdout)");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Wavefunction slice at fixed angle");
  table->add_option("--space", ta.space)->check(CLI::IsMember({"position", "momentum"}));
  table->add_option("--n", ta.n)->required();
  table->add_option("--m", ta.m);
  table->add_option("--grid", ta.grid, "min:max:points[:log]");
  table->add_option("--angle", ta.angle, "phi or phi_p");
  table->add_option("--mesh", ta.mesh, "Angle grid min:max:points; emits the outer product");
  table->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", ta.out, "Output file (default stdout)");

  VerifyArgs va;
  std::vector<std::string> suites = h2d::verify::suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run verification suites, JSON report");
  verify->add_option("suite", va.suite)->check(CLI::IsMember(suites));
  verify->add_option("--n-max", va.n_max, "Cap on the principal index")->check(CLI::Range(0, 10));
  verify->add_option("--tol", va.tol, "Tolerance applied to every check")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", va.out, "Report file (default stdout)");
  verify->add_flag("--stamp", va.stamp, "Add a UTC timestamp to each report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eigen) return run_eigen(ea);
    if (*table) return run_table(ta);
    return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
