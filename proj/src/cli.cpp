#include "polya/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polya/bounds.hpp"
#include "polya/domains.hpp"
#include "polya/errors.hpp"
#include "polya/output.hpp"
#include "polya/spectra.hpp"
#include "polya/verify.hpp"

namespace polya::cli {

namespace {

using io::Cell;
using io::OutputRecord;

struct Common {
  std::string format = "csv";
  std::optional<double> tolerance;
};

struct EigArgs {
  std::string domain;
  std::string bc = "dirichlet";
  long long count = 10;
};

struct CheckArgs {
  std::string campaign;
  std::string domain;
  std::string bc = "dirichlet";
  long long k = 100;
  std::string family;
  double radius = 1.0;
  int axis = 0;
  int p = 0;
  std::string base;
  double length = 0.0;
};

struct BoundsArgs {
  int n = 0;
  double volume = 1.0;
  std::optional<double> length;
  long long k_min = 1;
  long long k_max = 10;
  bool chain = false;
  int n_max = 50;
};

struct ScanArgs {
  std::string base;
  std::string bc = "dirichlet";
  double l_min = 0.0;
  std::optional<double> l_max;
  int steps = 1;
  long long k = 100;
};

Cell optional_cell(const std::optional<long long>& v) {
  return v ? Cell{*v} : Cell{std::monostate{}};
}

void append_report_rows(const verify::CheckReport& report, OutputRecord& rec) {
  rec.columns = {"name", "k", "bound", "value", "margin", "relative_margin", "holds"};
  for (const auto& r : report.details) {
    rec.rows.push_back({r.name, r.k, r.bound_value, r.eigenvalue, r.margin,
                        bounds::relative_margin(r), r.holds});
  }
  rec.summary = {{"campaign", report.campaign},
                 {"domain", report.domain.to_string()},
                 {"bc", to_string(report.bc)},
                 {"k_first", report.k_first},
                 {"k_last", report.k_last},
                 {"first_violation", optional_cell(report.first_violation)},
                 {"violations", static_cast<long long>(report.violations)},
                 {"worst_margin", report.worst_margin}};
}

int run_eig(const EigArgs& a, const EnumerationLimits& limits, OutputRecord& rec) {
  const Domain d = parse_domain(a.domain);
  const BoundaryCondition bc = parse_boundary_condition(a.bc);
  if (a.count < 1) throw DomainError("--count must be >= 1");
  const Spectrum s = eigenvalues(d, bc, static_cast<std::size_t>(a.count), limits);
  rec.inputs = {{"domain", d.to_string()}, {"bc", to_string(bc)}, {"count", std::to_string(a.count)}};
  rec.columns = {"k", "eigenvalue", "mode"};
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    rec.rows.push_back({static_cast<long long>(i + 1), s.values[i], s.modes[i]});
  }
  return kExitClean;
}

TilingFamily make_family(const CheckArgs& a) {
  if (a.family == "disk-sector") return disk_sector_family(a.radius);
  if (a.family == "box-slab") {
    if (a.domain.empty()) throw DomainError("--family box-slab needs --domain with a box");
    return box_slab_family(parse_domain(a.domain), a.axis);
  }
  throw DomainError("--family must be disk-sector or box-slab, got '" + a.family + "'");
}

int run_check(const CheckArgs& a, const Common& common, const EnumerationLimits& limits,
              OutputRecord& rec) {
  verify::CheckOptions options;
  options.tolerance = common.tolerance;
  options.limits = limits;
  const BoundaryCondition bc = parse_boundary_condition(a.bc);
  rec.inputs = {{"campaign", a.campaign}, {"bc", to_string(bc)}, {"k", std::to_string(a.k)}};

  auto require_domain = [&]() {
    if (a.domain.empty()) throw DomainError("--campaign " + a.campaign + " needs --domain");
    const Domain d = parse_domain(a.domain);
    rec.inputs.emplace_back("domain", d.to_string());
    return d;
  };

  verify::CheckReport report = [&]() -> verify::CheckReport {
    if (a.campaign == "polya") return verify::check_polya(require_domain(), bc, a.k, options);
    if (a.campaign == "kroger") return verify::check_kroger(require_domain(), a.k, options);
    if (a.campaign == "interlace") {
      const TilingFamily family = make_family(a);
      rec.inputs.emplace_back("family", family.description);
      rec.inputs.emplace_back("p", std::to_string(a.p));
      return verify::check_tiling_interlacing(family, bc, a.p, a.k, options);
    }
    if (a.campaign == "chain") {
      if (a.base.empty()) throw DomainError("--campaign chain needs --base");
      const Domain base = parse_domain(a.base);
      rec.inputs.emplace_back("base", base.to_string());
      rec.inputs.emplace_back("l", io::format_double(a.length));
      return verify::check_counting_chain(base, a.length, a.k, options);
    }
    throw DomainError("unknown campaign '" + a.campaign + "'");
  }();
  append_report_rows(report, rec);
  rec.summary.emplace_back("eventual_index", verify::eventual_index(report));
  return report.clean() ? kExitClean : kExitViolation;
}

int run_weyl(const CheckArgs& a, const Common& common, const EnumerationLimits& limits,
             OutputRecord& rec) {
  verify::CheckOptions options;
  options.tolerance = common.tolerance;
  options.limits = limits;
  if (a.domain.empty()) throw DomainError("--campaign weyl needs --domain");
  const Domain d = parse_domain(a.domain);
  const BoundaryCondition bc = parse_boundary_condition(a.bc);
  const verify::WeylRemainder w = verify::weyl_remainder_stats(d, bc, a.k, options);
  rec.inputs = {{"campaign", "weyl"}, {"domain", d.to_string()}, {"bc", to_string(bc)},
                {"k", std::to_string(a.k)}};
  rec.columns = {"k", "ratio"};
  for (std::size_t i = 0; i < w.ratios.size(); ++i) {
    rec.rows.push_back({w.window_first + static_cast<long long>(i), w.ratios[i]});
  }
  rec.summary = {{"mean_ratio", w.mean_ratio},
                 {"window_first", w.window_first},
                 {"window_last", w.window_last}};
  return kExitClean;
}

int run_bounds(const BoundsArgs& a, OutputRecord& rec) {
  if (a.chain) {
    if (a.n_max < 2) throw DomainError("--n-max must be >= 2");
    rec.inputs = {{"chain", "true"}, {"n_max", std::to_string(a.n_max)}};
    rec.columns = {"n",          "beta",            "inner",          "outer",
                   "alpha",      "beta_lt_inner",   "beta_lt_outer",  "inner_lt_alpha",
                   "alpha_lt_outer", "alpha_lt_one", "beta_lt_alpha"};
    for (int n = 2; n <= a.n_max; ++n) {
      const bounds::AlphaChain c = bounds::alpha_chain(n);
      rec.rows.push_back({static_cast<long long>(n), c.beta, c.inner, c.outer, c.alpha,
                          c.beta_below_inner, c.beta_below_outer, c.inner_below_alpha,
                          c.alpha_below_outer, c.alpha_below_one, c.beta_below_alpha});
    }
    return kExitClean;
  }
  if (a.n < 1) throw DomainError("--n must be >= 1");
  if (!std::isfinite(a.volume) || a.volume <= 0.0) throw DomainError("--volume must be > 0");
  if (a.k_min < 1 || a.k_max < a.k_min) throw DomainError("need 1 <= --k-min <= --k-max");
  if (a.length && (!std::isfinite(*a.length) || *a.length <= 0.0)) {
    throw DomainError("--l must be > 0");
  }
  rec.inputs = {{"n", std::to_string(a.n)},
                {"volume", io::format_double(a.volume)},
                {"k_min", std::to_string(a.k_min)},
                {"k_max", std::to_string(a.k_max)}};
  if (a.length) rec.inputs.emplace_back("l", io::format_double(*a.length));
  rec.columns = {"n",     "k",           "alpha_n",          "beta_n",        "polya_threshold",
                 "kroger", "li_yau_individual", "li_yau_sum", "weyl_one_term", "improved_cylinder"};
  const Cell alpha_n = a.n >= 2 ? Cell{bounds::alpha(a.n)} : Cell{};
  for (long long k = a.k_min; k <= a.k_max; ++k) {
    // The cylinder bound reads the domain as an (n-1)-dimensional base times [0, l].
    Cell improved;
    if (a.length && a.n >= 3) {
      improved = bounds::improved_cylinder_bound(a.n - 1, a.volume / *a.length, *a.length, k);
    }
    rec.rows.push_back({static_cast<long long>(a.n), k, alpha_n, bounds::li_yau_beta(a.n),
                        bounds::polya_threshold(a.n, a.volume, k),
                        bounds::kroger_bound(a.n, a.volume, k),
                        bounds::li_yau_individual_bound(a.n, a.volume, k),
                        bounds::li_yau_sum_bound(a.n, a.volume, k),
                        bounds::weyl_one_term(a.n, a.volume, k), improved});
  }
  return kExitClean;
}

int run_scan(const ScanArgs& a, const Common& common, const EnumerationLimits& limits,
             OutputRecord& rec) {
  if (!(a.l_min > 0.0) || !std::isfinite(a.l_min)) throw DomainError("--l-min must be > 0");
  if (a.steps < 1) throw DomainError("--steps must be >= 1");
  if (a.l_max && !(*a.l_max > a.l_min && std::isfinite(*a.l_max))) {
    throw DomainError("--l-max must exceed --l-min");
  }
  if (a.steps > 1 && !a.l_max) throw DomainError("--steps > 1 needs --l-max");
  const double l_max = a.l_max.value_or(a.l_min);
  const Domain base = parse_domain(a.base);
  const BoundaryCondition bc = parse_boundary_condition(a.bc);
  std::vector<double> lengths;
  for (int i = 0; i < a.steps; ++i) {
    if (a.steps == 1 || i == 0) {
      lengths.push_back(a.l_min);
    } else if (i == a.steps - 1) {
      lengths.push_back(l_max);
    } else {
      lengths.push_back(a.l_min + (l_max - a.l_min) * i / (a.steps - 1));
    }
  }
  verify::CheckOptions options;
  options.tolerance = common.tolerance;
  options.limits = limits;
  const auto results = verify::thin_cylinder_scan(base, lengths, a.k, bc, options);
  rec.inputs = {{"base", base.to_string()},   {"bc", to_string(bc)},
                {"l_min", io::format_double(a.l_min)}, {"l_max", io::format_double(l_max)},
                {"steps", std::to_string(a.steps)}, {"k", std::to_string(a.k)}};
  rec.columns = {"l", "first_violation", "violations", "worst_margin"};
  for (const auto& r : results) {
    rec.rows.push_back({r.parameter, optional_cell(r.report.first_violation),
                        static_cast<long long>(r.report.violations), r.report.worst_margin});
  }
  return kExitClean;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplace eigenvalues of separable domains and Pólya-type bound checks", "polya"};
  app.require_subcommand(1);

  Common common;
  double tolerance = 0.0;
  app.add_option("--format", common.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  EigArgs eig;
  auto* eig_cmd = app.add_subcommand("eig", "List the first eigenvalues of a domain");
  eig_cmd->add_option("--domain", eig.domain, "Domain description")->required();
  eig_cmd->add_option("--bc", eig.bc, "dirichlet or neumann");
  eig_cmd->add_option("--count", eig.count, "Number of eigenvalues");
  eig_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a verification campaign");
  check_cmd->add_option("--campaign", check.campaign, "polya, kroger, interlace, chain or weyl")
      ->required()
      ->check(CLI::IsMember({"polya", "kroger", "interlace", "chain", "weyl"}));
  check_cmd->add_option("--domain", check.domain, "Domain description");
  check_cmd->add_option("--bc", check.bc, "dirichlet or neumann");
  check_cmd->add_option("--k", check.k, "Index horizon K");
  check_cmd->add_option("--family", check.family, "Tiling family: disk-sector or box-slab");
  check_cmd->add_option("--r", check.radius, "Disk radius for disk-sector");
  check_cmd->add_option("--axis", check.axis, "Cut axis for box-slab");
  check_cmd->add_option("--p", check.p, "Tiling order p >= 2");
  check_cmd->add_option("--base", check.base, "Cylinder base domain");
  check_cmd->add_option("--l", check.length, "Cylinder length");
  auto* check_tol = check_cmd->add_option("--tolerance", tolerance,
                                         "Relative violation tolerance (negative: required margin)");
  check_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  BoundsArgs bnd;
  double bounds_length = 0.0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate closed-form bounds and constants");
  bounds_cmd->add_option("--n", bnd.n, "Dimension");
  bounds_cmd->add_option("--volume", bnd.volume, "Domain volume");
  auto* bounds_l = bounds_cmd->add_option("--l", bounds_length, "Cylinder length");
  bounds_cmd->add_option("--k-min", bnd.k_min, "First index");
  bounds_cmd->add_option("--k-max", bnd.k_max, "Last index");
  bounds_cmd->add_flag("--chain", bnd.chain, "Emit the alpha chain comparisons per n");
  bounds_cmd->add_option("--n-max", bnd.n_max, "Largest n for --chain");
  bounds_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Pólya check on base x [0, l] over a range of l");
  scan_cmd->add_option("--base", scan.base, "Base domain")->required();
  scan_cmd->add_option("--bc", scan.bc, "dirichlet or neumann");
  scan_cmd->add_option("--l-min", scan.l_min, "Smallest length")->required();
  scan_cmd->add_option("--l-max", scan.l_max, "Largest length");
  scan_cmd->add_option("--steps", scan.steps, "Number of lengths");
  scan_cmd->add_option("--k", scan.k, "Index horizon K");
  auto* scan_tol = scan_cmd->add_option("--tolerance", tolerance,
                                         "Relative violation tolerance (negative: required margin)");
  scan_cmd->add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "polya: " << e.what() << '\n';
    return kExitError;
  }

  try {
    const EnumerationLimits limits = EnumerationLimits::from_environment();
    if (check_tol->count() > 0 || scan_tol->count() > 0) {
      // Negative values are allowed: they demand a margin of at least |tolerance|.
      if (!std::isfinite(tolerance)) throw DomainError("--tolerance must be finite");
      common.tolerance = tolerance;
    }
    if (bounds_l->count() > 0) bnd.length = bounds_length;

    OutputRecord rec;
    int code = kExitClean;
    if (*eig_cmd) {
      rec.command = "eig";
      code = run_eig(eig, limits, rec);
    } else if (*check_cmd) {
      rec.command = "check";
      code = check.campaign == "weyl" ? run_weyl(check, common, limits, rec)
                                      : run_check(check, common, limits, rec);
    } else if (*bounds_cmd) {
      rec.command = "bounds";
      code = run_bounds(bnd, rec);
    } else {
      rec.command = "scan";
      code = run_scan(scan, common, limits, rec);
    }
    io::write(rec, io::parse_format(common.format), out);
    return code;
  } catch (const Error& e) {
    err << "polya: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace polya::cli
