#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polya/bounds.hpp"
#include "polya/domains.hpp"
#include "polya/errors.hpp"
#include "polya/specfun.hpp"
#include "polya/spectra.hpp"
#include "polya/verify.hpp"

namespace py = pybind11;

namespace {

polya::verify::CheckOptions make_options(std::optional<double> tolerance, std::size_t max_modes) {
  polya::verify::CheckOptions options;
  options.tolerance = tolerance;
  options.limits.max_modes = max_modes;
  return options;
}

polya::EnumerationLimits limits_of(std::size_t max_modes) {
  polya::EnumerationLimits limits;
  limits.max_modes = max_modes;
  return limits;
}

void bind_errors(py::module_& m) {
  static py::exception<polya::Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<polya::DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<polya::ParseError> parse_error(m, "ParseError", domain_error.ptr());
  static py::exception<polya::NumericFailure> numeric_failure(m, "NumericFailure", error.ptr());
  static py::exception<polya::CapacityError> capacity_error(m, "CapacityError", error.ptr());
  // Most specific first.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const polya::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const polya::DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const polya::NumericFailure& e) {
      py::set_error(numeric_failure, e.what());
    } catch (const polya::CapacityError& e) {
      py::set_error(capacity_error, e.what());
    } catch (const polya::Error& e) {
      py::set_error(error, e.what());
    }
  });
}

void bind_specfun(py::module_& m) {
  using namespace polya::specfun;
  m.def("ln_gamma", &ln_gamma, py::arg("x"));
  m.def("gamma_half_integer", &gamma_half_integer, py::arg("two_x"));
  m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
  m.def("bessel_j_prime", &bessel_j_prime, py::arg("nu"), py::arg("x"));
  m.def("bessel_zero", py::overload_cast<double, int>(&bessel_zero), py::arg("nu"), py::arg("k"));
  m.def("bessel_prime_zero", py::overload_cast<double, int>(&bessel_prime_zero), py::arg("nu"),
        py::arg("k"));
  m.def("bessel_zeros_below", &bessel_zeros_below, py::arg("nu"), py::arg("x_max"));
  m.def("bessel_prime_zeros_below", &bessel_prime_zeros_below, py::arg("nu"), py::arg("x_max"));
}

void bind_domains(py::module_& m) {
  using polya::Domain;
  py::enum_<polya::BoundaryCondition>(m, "BoundaryCondition")
      .value("Dirichlet", polya::BoundaryCondition::Dirichlet)
      .value("Neumann", polya::BoundaryCondition::Neumann);

  py::class_<Domain>(m, "Domain")
      .def_static("interval", &Domain::interval, py::arg("length"))
      .def_static("box", &Domain::box, py::arg("sides"))
      .def_static("disk", &Domain::disk, py::arg("radius"))
      .def_static("sector", &Domain::sector, py::arg("radius"), py::arg("angle"))
      .def_static("product", &Domain::product, py::arg("left"), py::arg("right"))
      .def_static("parse", [](const std::string& text) { return polya::parse_domain(text); })
      .def_property_readonly("dimension", [](const Domain& d) { return polya::dimension(d); })
      .def_property_readonly("measure", [](const Domain& d) { return polya::measure(d); })
      .def_property_readonly("boundary_measure",
                             [](const Domain& d) { return polya::boundary_measure(d); })
      .def("__str__", &Domain::to_string)
      .def("__repr__", [](const Domain& d) { return "Domain.parse('" + d.to_string() + "')"; })
      .def("__eq__", [](const Domain& a, const Domain& b) { return a == b; });

  m.def("parse_domain", [](const std::string& text) { return polya::parse_domain(text); });

  py::class_<polya::TilingFamily>(m, "TilingFamily")
      .def_readonly("base", &polya::TilingFamily::base)
      .def_readonly("description", &polya::TilingFamily::description)
      .def("subdomain_at", [](const polya::TilingFamily& f, int p) { return f.subdomain_at(p); });
  m.def("disk_sector_family", &polya::disk_sector_family, py::arg("radius"));
  m.def("box_slab_family", &polya::box_slab_family, py::arg("base"), py::arg("axis"));
}

void bind_spectra(py::module_& m) {
  using polya::BoundaryCondition;
  using polya::Domain;
  m.attr("DEFAULT_MAX_MODES") = polya::kDefaultMaxModes;

  py::class_<polya::Spectrum>(m, "Spectrum")
      .def_readonly("domain", &polya::Spectrum::domain)
      .def_readonly("bc", &polya::Spectrum::bc)
      .def_readonly("values", &polya::Spectrum::values)
      .def_readonly("modes", &polya::Spectrum::modes)
      .def("__len__", [](const polya::Spectrum& s) { return s.values.size(); });

  m.def(
      "eigenvalues",
      [](const Domain& d, BoundaryCondition bc, std::size_t count, std::size_t max_modes) {
        return polya::eigenvalues(d, bc, count, limits_of(max_modes));
      },
      py::arg("domain"), py::arg("bc"), py::arg("count"),
      py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "counting",
      [](const Domain& d, BoundaryCondition bc, double lambda, std::size_t max_modes) {
        return polya::counting(d, bc, lambda, limits_of(max_modes));
      },
      py::arg("domain"), py::arg("bc"), py::arg("lam"),
      py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "cylinder_counting",
      [](const Domain& base, BoundaryCondition bc, double length, double lambda,
         std::size_t max_modes) {
        return polya::cylinder_counting(polya::SpectrumSource{base, bc}, length, lambda,
                                        limits_of(max_modes));
      },
      py::arg("base"), py::arg("bc"), py::arg("length"), py::arg("lam"),
      py::arg("max_modes") = polya::kDefaultMaxModes);
}

void bind_bounds(py::module_& m) {
  namespace b = polya::bounds;
  py::class_<b::BoundReport>(m, "BoundReport")
      .def_readonly("name", &b::BoundReport::name)
      .def_readonly("n", &b::BoundReport::n)
      .def_readonly("k", &b::BoundReport::k)
      .def_readonly("bound_value", &b::BoundReport::bound_value)
      .def_readonly("eigenvalue", &b::BoundReport::eigenvalue)
      .def_readonly("margin", &b::BoundReport::margin)
      .def_readonly("holds", &b::BoundReport::holds);

  m.def("unit_ball_volume", &b::unit_ball_volume, py::arg("n"));
  m.def("polya_threshold", &b::polya_threshold, py::arg("n"), py::arg("volume"), py::arg("k"));
  m.def("weyl_one_term", &b::weyl_one_term, py::arg("n"), py::arg("volume"), py::arg("k"));
  m.def("weyl_two_term", &b::weyl_two_term, py::arg("domain"), py::arg("bc"), py::arg("k"));
  m.def("kroger_bound", &b::kroger_bound, py::arg("n"), py::arg("volume"), py::arg("k"));
  m.def("li_yau_beta", &b::li_yau_beta, py::arg("n"));
  m.def("li_yau_sum_bound", &b::li_yau_sum_bound, py::arg("n"), py::arg("volume"), py::arg("k"));
  m.def("li_yau_individual_bound", &b::li_yau_individual_bound, py::arg("n"), py::arg("volume"),
        py::arg("k"));
  m.def("alpha", &b::alpha, py::arg("n"));
  m.def("alpha_asymptotic", &b::alpha_asymptotic, py::arg("n"));
  m.def("improved_cylinder_bound", &b::improved_cylinder_bound, py::arg("n_base"),
        py::arg("base_volume"), py::arg("length"), py::arg("k"),
        py::arg("allow_one_dimensional_base") = false);
  m.def("wendel_bounds", [](int n) {
    const auto w = b::wendel_bounds(n);
    return py::make_tuple(w.lower, w.upper);
  }, py::arg("n"));

  py::class_<b::AlphaChain>(m, "AlphaChain")
      .def_readonly("n", &b::AlphaChain::n)
      .def_readonly("beta", &b::AlphaChain::beta)
      .def_readonly("inner", &b::AlphaChain::inner)
      .def_readonly("outer", &b::AlphaChain::outer)
      .def_readonly("alpha", &b::AlphaChain::alpha)
      .def_readonly("beta_below_inner", &b::AlphaChain::beta_below_inner)
      .def_readonly("beta_below_outer", &b::AlphaChain::beta_below_outer)
      .def_readonly("inner_below_alpha", &b::AlphaChain::inner_below_alpha)
      .def_readonly("alpha_below_outer", &b::AlphaChain::alpha_below_outer)
      .def_readonly("alpha_below_one", &b::AlphaChain::alpha_below_one)
      .def_readonly("beta_below_alpha", &b::AlphaChain::beta_below_alpha);
  m.def("alpha_chain", &b::alpha_chain, py::arg("n"));
}

void bind_verify(py::module_& m) {
  namespace v = polya::verify;
  using polya::BoundaryCondition;
  using polya::Domain;

  py::class_<v::CheckReport>(m, "CheckReport")
      .def_readonly("campaign", &v::CheckReport::campaign)
      .def_readonly("domain", &v::CheckReport::domain)
      .def_readonly("bc", &v::CheckReport::bc)
      .def_readonly("k_first", &v::CheckReport::k_first)
      .def_readonly("k_last", &v::CheckReport::k_last)
      .def_readonly("first_violation", &v::CheckReport::first_violation)
      .def_readonly("violations", &v::CheckReport::violations)
      .def_readonly("worst_margin", &v::CheckReport::worst_margin)
      .def_readonly("details", &v::CheckReport::details)
      .def_property_readonly("clean", &v::CheckReport::clean);

  py::class_<v::ScanResult>(m, "ScanResult")
      .def_readonly("parameter", &v::ScanResult::parameter)
      .def_readonly("report", &v::ScanResult::report);

  py::class_<v::WeylRemainder>(m, "WeylRemainder")
      .def_readonly("mean_ratio", &v::WeylRemainder::mean_ratio)
      .def_readonly("window_first", &v::WeylRemainder::window_first)
      .def_readonly("window_last", &v::WeylRemainder::window_last)
      .def_readonly("ratios", &v::WeylRemainder::ratios);

  py::class_<v::BoundsRow>(m, "BoundsRow")
      .def_readonly("k", &v::BoundsRow::k)
      .def_readonly("eigenvalue", &v::BoundsRow::eigenvalue)
      .def_readonly("polya", &v::BoundsRow::polya)
      .def_readonly("li_yau", &v::BoundsRow::li_yau)
      .def_readonly("improved", &v::BoundsRow::improved)
      .def_readonly("ratio", &v::BoundsRow::ratio);

  py::class_<v::BoundsComparison>(m, "BoundsComparison")
      .def_readonly("cylinder", &v::BoundsComparison::cylinder)
      .def_readonly("rows", &v::BoundsComparison::rows)
      .def_readonly("improved_dominates", &v::BoundsComparison::improved_dominates)
      .def_readonly("eigenvalues_above_improved", &v::BoundsComparison::eigenvalues_above_improved)
      .def_readonly("ratio_spread", &v::BoundsComparison::ratio_spread);

  m.def(
      "check_polya",
      [](const Domain& d, BoundaryCondition bc, long long K, std::optional<double> tol,
         std::size_t max_modes) { return v::check_polya(d, bc, K, make_options(tol, max_modes)); },
      py::arg("domain"), py::arg("bc"), py::arg("K"), py::arg("tolerance") = py::none(),
      py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "check_kroger",
      [](const Domain& d, long long K, std::optional<double> tol, std::size_t max_modes) {
        return v::check_kroger(d, K, make_options(tol, max_modes));
      },
      py::arg("domain"), py::arg("K"), py::arg("tolerance") = py::none(),
      py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "eventual_index",
      [](const Domain& d, BoundaryCondition bc, long long K) { return v::eventual_index(d, bc, K); },
      py::arg("domain"), py::arg("bc"), py::arg("K"));
  m.def(
      "check_tiling_interlacing",
      [](const polya::TilingFamily& f, BoundaryCondition bc, int p, long long K,
         std::optional<double> tol, std::size_t max_modes) {
        return v::check_tiling_interlacing(f, bc, p, K, make_options(tol, max_modes));
      },
      py::arg("family"), py::arg("bc"), py::arg("p"), py::arg("K"),
      py::arg("tolerance") = py::none(), py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "check_counting_chain",
      [](const Domain& base, double length, long long K, std::optional<double> tol,
         std::size_t max_modes) {
        return v::check_counting_chain(base, length, K, make_options(tol, max_modes));
      },
      py::arg("base"), py::arg("length"), py::arg("K"), py::arg("tolerance") = py::none(),
      py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "thin_cylinder_scan",
      [](const Domain& base, const std::vector<double>& lengths, long long K, BoundaryCondition bc,
         std::optional<double> tol, std::size_t max_modes) {
        return v::thin_cylinder_scan(base, lengths, K, bc, make_options(tol, max_modes));
      },
      py::arg("base"), py::arg("lengths"), py::arg("K"),
      py::arg("bc") = BoundaryCondition::Dirichlet, py::arg("tolerance") = py::none(),
      py::arg("max_modes") = polya::kDefaultMaxModes);
  m.def(
      "compare_bounds",
      [](const Domain& base, double length, long long K) {
        return v::compare_bounds(base, length, K);
      },
      py::arg("base"), py::arg("length"), py::arg("K"));
  m.def(
      "weyl_remainder_stats",
      [](const Domain& d, BoundaryCondition bc, long long K) {
        return v::weyl_remainder_stats(d, bc, K);
      },
      py::arg("domain"), py::arg("bc"), py::arg("K"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Laplace eigenvalues of separable domains and Pólya-type bound checks";
  bind_errors(m);
  bind_specfun(m);
  bind_domains(m);
  bind_spectra(m);
  bind_bounds(m);
  bind_verify(m);
}
