#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "suitalab/bergman.hpp"
#include "suitalab/domain.hpp"
#include "suitalab/errors.hpp"
#include "suitalab/indicatrix.hpp"
#include "suitalab/metric.hpp"
#include "suitalab/normalization.hpp"
#include "suitalab/scaling.hpp"
#include "suitalab/suita.hpp"

namespace py = pybind11;
using namespace suitalab;

namespace {

CVec to_cvec(const std::vector<cdouble>& xs) {
    CVec z(static_cast<int>(xs.size()));
    for (int i = 0; i < z.dim(); ++i) z[i] = xs[i];
    return z;
}

std::vector<cdouble> from_cvec(const CVec& z) {
    std::vector<cdouble> xs(z.dim());
    for (int i = 0; i < z.dim(); ++i) xs[i] = z[i];
    return xs;
}

py::dict estimate_dict(const VolumeEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["std_error"] = e.std_error;
    d["samples"] = e.samples;
    d["seed"] = e.seed;
    d["bounding_radius"] = e.bounding_radius;
    return d;
}

py::dict result_dict(const SuitaResult& r) {
    py::dict d;
    d["kernel"] = r.kernel;
    d["F"] = r.F;
    d["F_error"] = r.F_error;
    d["volume"] = r.volume_value();
    d["volume_sigma"] = r.volume_sigma();
    d["tau"] = metric_tag_name(r.tau);
    d["notes"] = r.notes;
    if (r.mc_estimate) d["mc"] = estimate_dict(*r.mc_estimate);
    return d;
}

MetricTag tag_of(const std::string& tau) {
    if (tau == "k") return MetricTag::kobayashi;
    if (tau == "c") return MetricTag::caratheodory;
    throw std::invalid_argument("tau must be 'k' or 'c'");
}

Method method_of(const std::string& method, std::int64_t N, std::uint64_t seed) {
    if (method == "exact") return Method::exact();
    if (method == "mc") return Method::mc(N, seed);
    throw std::invalid_argument("method must be 'exact' or 'mc'");
}

}  // namespace

PYBIND11_MODULE(_suitalab, m) {
    m.doc() = "Bergman kernels, invariant metrics, indicatrix volumes and the product "
              "F = K * lambda(indicatrix) on model domains in C^2";

    py::register_exception<capability_error>(m, "CapabilityError");

    py::class_<DomainSpec>(m, "DomainSpec")
        .def_static("ball", &DomainSpec::ball, py::arg("n") = 2)
        .def_static("egg", &DomainSpec::egg, py::arg("mu"))
        .def_static("siegel", &DomainSpec::siegel, py::arg("n") = 2)
        .def_property_readonly("dim", &DomainSpec::dim)
        .def_property_readonly("name", &DomainSpec::name)
        .def("contains", [](const DomainSpec& s, const std::vector<cdouble>& z) {
            return s.contains(to_cvec(z));
        })
        .def("defining_value", [](const DomainSpec& s, const std::vector<cdouble>& z) {
            return s.defining_value(to_cvec(z));
        })
        .def("volume", &DomainSpec::volume)
        .def("minkowski_gauge", [](const DomainSpec& s, const std::vector<cdouble>& v) {
            return s.minkowski_gauge(to_cvec(v));
        })
        .def("to_json", [](const DomainSpec& s) { return s.to_json().dump(); })
        .def_static("from_json", [](const std::string& text) {
            return DomainSpec::from_json(nlohmann::json::parse(text));
        });

    m.def("cayley", [](const std::vector<cdouble>& z) { return from_cvec(cayley(to_cvec(z))); });
    m.def("cayley_inverse",
          [](const std::vector<cdouble>& w) { return from_cvec(cayley_inverse(to_cvec(w))); });

    m.def("kernel_ball",
          [](int n, const std::vector<cdouble>& z) { return kernel_ball(n, to_cvec(z)); },
          py::arg("n"), py::arg("z"));
    m.def("kernel_egg_axis", &kernel_egg_axis, py::arg("mu"), py::arg("p"));
    m.def("kernel_siegel",
          [](int n, const std::vector<cdouble>& z) { return kernel_siegel(n, to_cvec(z)); },
          py::arg("n"), py::arg("z"));
    m.def("reinhardt_kernel",
          [](const DomainSpec& spec, const std::vector<cdouble>& z, int max_degree) {
              SeriesValue s = reinhardt_kernel(spec, to_cvec(z), max_degree);
              py::dict d;
              d["value"] = s.value;
              d["converged"] = s.converged;
              d["last_increment_ratio"] = s.last_increment_ratio;
              return d;
          },
          py::arg("spec"), py::arg("z"), py::arg("max_degree") = 60);

    m.def("kobayashi_ball",
          [](const std::vector<cdouble>& z, const std::vector<cdouble>& v) {
              return kobayashi_ball(to_cvec(z), to_cvec(v));
          });
    m.def("kobayashi_siegel",
          [](const std::vector<cdouble>& z, const std::vector<cdouble>& v) {
              return kobayashi_siegel(to_cvec(z), to_cvec(v));
          });

    py::class_<Ellipsoid2C>(m, "Ellipsoid2C")
        .def(py::init<double, double>(), py::arg("A"), py::arg("B"))
        .def_readonly("A", &Ellipsoid2C::A)
        .def_readonly("B", &Ellipsoid2C::B)
        .def("volume", &Ellipsoid2C::volume);
    m.def("wu_outer_ellipsoid", &wu_outer_ellipsoid, py::arg("mu"), py::arg("p"));
    m.def("inscribed_ellipsoid", &inscribed_ellipsoid, py::arg("mu"), py::arg("p"));
    m.def("ellipsoid_volume", &ellipsoid_volume);

    py::class_<MetricOracle>(m, "MetricOracle")
        .def("__call__", [](const MetricOracle& o, const std::vector<cdouble>& v) {
            return o(to_cvec(v));
        })
        .def("below_unit", [](const MetricOracle& o, const std::vector<cdouble>& v) {
            return o.below_unit(to_cvec(v));
        })
        .def_property_readonly("base_point",
                               [](const MetricOracle& o) { return from_cvec(o.base_point()); })
        .def("exact_indicatrix_volume", [](const MetricOracle& o) -> py::object {
            auto v = o.exact_indicatrix_volume();
            return v ? py::cast(*v) : py::none();
        });
    m.def("ball_metric", [](const std::vector<cdouble>& z) {
        return MetricOracle::ball_at(to_cvec(z));
    });
    m.def("siegel_metric", [](const std::vector<cdouble>& z) {
        return MetricOracle::siegel_at(to_cvec(z));
    });
    m.def("gauge_metric", [](const DomainSpec& spec) { return MetricOracle::gauge(spec); });
    m.def("ellipsoid_metric", [](const Ellipsoid2C& e) {
        return MetricOracle::ellipsoid(e, MetricOracle::Provenance::exact);
    });

    m.def("bounding_radius", &bounding_radius, py::arg("oracle"), py::arg("n_dirs") = 2048,
          py::arg("safety_factor") = 1.25);
    m.def("mc_volume",
          [](const MetricOracle& o, std::int64_t N, std::uint64_t seed) {
              return estimate_dict(mc_volume(o, N, seed));
          },
          py::arg("oracle"), py::arg("N"), py::arg("seed"));
    m.def("radial_distance", &radial_distance, py::arg("o1"), py::arg("o2"),
          py::arg("n_dirs") = 4096);

    m.def("suita_invariant",
          [](const DomainSpec& spec, const std::vector<cdouble>& z, const std::string& tau,
             const std::string& method, std::int64_t N, std::uint64_t seed) {
              return result_dict(
                  suita_invariant(spec, to_cvec(z), tag_of(tau), method_of(method, N, seed)));
          },
          py::arg("spec"), py::arg("z"), py::arg("tau") = "k", py::arg("method") = "exact",
          py::arg("N") = 1'000'000, py::arg("seed") = 0);

    m.def("egg_f_bounds",
          [](double mu, double p) {
              BoundPair b = egg_f_bounds(mu, p);
              return py::make_tuple(b.lower, b.upper);
          },
          py::arg("mu"), py::arg("p"));

    m.def("segment_scan", [](double mu, const std::vector<double>& ps) {
        py::list rows;
        for (const auto& r : segment_scan(mu, ps)) {
            py::dict d;
            d["mu"] = r.mu;
            d["p"] = r.p;
            d["kernel"] = r.kernel;
            d["vol_lower"] = r.vol_lower ? py::cast(*r.vol_lower) : py::none();
            d["vol_upper"] = r.vol_upper;
            d["F_lower"] = r.F_lower ? py::cast(*r.F_lower) : py::none();
            d["F_upper"] = r.F_upper;
            rows.append(d);
        }
        return rows;
    });

    m.def("orbit_value_note", [](double mu, const std::vector<double>& ps) {
        OrbitReport r = orbit_value_note(mu, ps);
        py::dict d;
        d["mu"] = r.mu;
        d["supported"] = r.supported;
        d["contains_one"] = r.contains_one;
        d["upper_at_origin_limit"] = r.upper_at_origin_limit;
        d["sup_lower"] = r.sup_lower;
        d["sup_lower_p"] = r.sup_lower_p;
        d["certified_above_one"] = r.certified_above_one;
        d["summary"] = r.summary;
        return d;
    });

    py::class_<ScalingSequence>(m, "ScalingSequence")
        .def_property_readonly("size",
                               [](const ScalingSequence& s) { return s.steps.size(); })
        .def("delta", [](const ScalingSequence& s, int idx) { return s.steps.at(idx).delta_j; });
    m.def("build_sequence",
          [](const DomainSpec& spec, const std::vector<cdouble>& p0, int count, double rate) {
              return build_sequence(spec, to_cvec(p0), count, rate);
          },
          py::arg("spec"), py::arg("p0"), py::arg("count"), py::arg("rate"));
    m.def("scaled_contains",
          [](const ScalingSequence& seq, int j, const std::vector<cdouble>& z) {
              return scaled_contains(seq, j, to_cvec(z));
          });
    m.def("scaled_invariants",
          [](const ScalingSequence& seq, int j, const std::string& tau,
             const std::string& method, std::int64_t N, std::uint64_t seed) {
              return result_dict(scaled_invariants(seq, j, tag_of(tau), method_of(method, N, seed)));
          },
          py::arg("seq"), py::arg("j"), py::arg("tau") = "k", py::arg("method") = "exact",
          py::arg("N") = 1'000'000, py::arg("seed") = 0);
    m.def("convergence_report",
          [](const ScalingSequence& seq, const std::string& tau, std::int64_t N,
             std::uint64_t seed, int n_dirs) {
              py::list rows;
              for (const auto& r : convergence_report(seq, tag_of(tau), N, seed, n_dirs)) {
                  py::dict d;
                  d["j"] = r.j;
                  d["delta"] = r.delta;
                  d["kernel"] = r.kernel;
                  d["kernel_err_abs"] = r.kernel_err_abs;
                  d["vol"] = r.vol;
                  d["vol_sigma"] = r.vol_sigma;
                  d["F"] = r.F;
                  d["F_sigma"] = r.F_sigma;
                  d["radial_dist"] = r.radial_dist;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("seq"), py::arg("tau") = "k", py::arg("N") = 1'000'000, py::arg("seed") = 0,
          py::arg("n_dirs") = 4096);

    m.attr("__version__") = "0.1.0";
}
