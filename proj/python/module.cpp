#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "urnmix/oracle.hpp"
#include "urnmix/reports.hpp"
#include "urnmix/shuffle.hpp"
#include "urnmix/spectral.hpp"
#include "urnmix/symmetric.hpp"
#include "urnmix/version.hpp"
#include "urnmix/zonal.hpp"

#include <sstream>

namespace py = pybind11;
using namespace urnmix;

namespace {

py::object to_py_int(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_fraction(const Rational& value) {
    return py::module_::import("fractions")
        .attr("Fraction")(value.numerator(), value.denominator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact urn-walk distributions, mixing curves, and oracles";
    m.attr("__version__") = std::string(kVersion);

    py::class_<Composition>(m, "Composition")
        .def(py::init<std::vector<int>>(), py::arg("parts"))
        .def_property_readonly("parts", &Composition::parts)
        .def_property_readonly("urns", &Composition::urns)
        .def_property_readonly("balls", &Composition::balls)
        .def("label", &Composition::label, py::arg("sep") = '|')
        .def("__len__", &Composition::urns)
        .def("__getitem__",
             [](const Composition& c, std::size_t i) {
                 if (i >= static_cast<std::size_t>(c.urns()))
                     throw py::index_error();
                 return c[i];
             })
        .def("__eq__", [](const Composition& a, const Composition& b) { return a == b; })
        .def("__repr__",
             [](const Composition& c) { return "Composition([" + c.label(',') + "])"; });

    m.def("compositions", &compositions, py::arg("urns"), py::arg("balls"),
          "All compositions in the fixed lexicographically decreasing order.");
    m.def("composition_rank", &composition_rank, py::arg("composition"));
    m.def(
        "multinomial",
        [](const Composition& k) { return to_py_int(multinomial(k)); },
        py::arg("composition"), "Exact multinomial coefficient as a Python int.");
    m.def("monomial_symmetric_at_type", &monomial_symmetric_at_type, py::arg("k"),
          py::arg("l"));
    m.def(
        "elementary_symmetric",
        [](int j, const std::vector<std::complex<double>>& values) {
            return elementary_symmetric(j, values);
        },
        py::arg("j"), py::arg("values"));

    m.def("zonal_value", &zonal_value, py::arg("k"), py::arg("l"),
          "Single spherical value, exact integer bookkeeping inside.");
    py::class_<ZonalTable>(m, "ZonalTable")
        .def_property_readonly("urns", &ZonalTable::urns)
        .def_property_readonly("balls", &ZonalTable::balls)
        .def("__len__", &ZonalTable::size)
        .def_property_readonly("index", &ZonalTable::index)
        .def("value",
             py::overload_cast<std::size_t, std::size_t>(&ZonalTable::value, py::const_),
             py::arg("k_rank"), py::arg("l_rank"))
        .def("value",
             py::overload_cast<const Composition&, const Composition&>(&ZonalTable::value,
                                                                       py::const_),
             py::arg("k"), py::arg("l"));
    m.def("zonal_table", &zonal_table, py::arg("urns"), py::arg("balls"),
          py::arg("max_types") = kDefaultTableCap);

    py::enum_<ShuffleKind>(m, "ShuffleKind")
        .value("ANY_OTHER", ShuffleKind::AnyOther)
        .value("CYCLIC_LEFT", ShuffleKind::CyclicLeft)
        .value("CYCLIC_BIDIRECTIONAL", ShuffleKind::CyclicBidirectional);
    m.def("parse_shuffle", &parse_shuffle, py::arg("name"),
          "any-other | cyclic-left | cyclic-bidir");
    m.def("shuffle_name",
          [](ShuffleKind kind) { return std::string(shuffle_name(kind)); });

    py::class_<UrnConfiguration>(m, "UrnConfiguration")
        .def(py::init<std::vector<int>, int>(), py::arg("assignment"), py::arg("urns"))
        .def_static("initial", &UrnConfiguration::initial, py::arg("urns"),
                    py::arg("balls"))
        .def_property_readonly("assignment", &UrnConfiguration::assignment)
        .def_property_readonly("urns", &UrnConfiguration::urns)
        .def_property_readonly("balls", &UrnConfiguration::balls)
        .def("type", &UrnConfiguration::type)
        .def("__eq__", [](const UrnConfiguration& a, const UrnConfiguration& b) {
            return a == b;
        });
    m.def("hamming_distance", &hamming_distance, py::arg("a"), py::arg("b"));
    m.def(
        "transition_probability",
        [](ShuffleKind kind, const UrnConfiguration& from, const UrnConfiguration& to) {
            return to_fraction(transition_probability(kind, from, to));
        },
        py::arg("shuffle"), py::arg("from_config"), py::arg("to_config"),
        "One-step probability as an exact fractions.Fraction.");
    m.def("fourier_coefficient", &fourier_coefficient, py::arg("shuffle"), py::arg("k"));
    m.def("fourier_coefficient_numeric", &fourier_coefficient_numeric, py::arg("shuffle"),
          py::arg("k"));

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<std::vector<int>, std::vector<int>, int>(), py::arg("colors"),
             py::arg("permutation"), py::arg("modulus"))
        .def_property_readonly("colors", &GroupElement::colors)
        .def_property_readonly("permutation", &GroupElement::permutation)
        .def_property_readonly("modulus", &GroupElement::modulus);
    m.def("group_element_type", &group_element_type, py::arg("g"));
    m.def("act", &act, py::arg("g"), py::arg("configuration"));

    py::class_<TypeDistribution>(m, "TypeDistribution")
        .def_static("uniform", &TypeDistribution::uniform, py::arg("urns"),
                    py::arg("balls"))
        .def_static("initial", &TypeDistribution::initial, py::arg("urns"),
                    py::arg("balls"))
        .def_property_readonly("urns", &TypeDistribution::urns)
        .def_property_readonly("balls", &TypeDistribution::balls)
        .def_property_readonly("masses", &TypeDistribution::masses)
        .def("mass_per_state",
             py::overload_cast<std::size_t>(&TypeDistribution::mass_per_state, py::const_),
             py::arg("rank"))
        .def("mass_per_state",
             py::overload_cast<const Composition&>(&TypeDistribution::mass_per_state,
                                                   py::const_),
             py::arg("type"))
        .def("total_mass", &TypeDistribution::total_mass);

    m.def("distribution_after",
          py::overload_cast<ShuffleKind, int, int, int, std::size_t>(&distribution_after),
          py::arg("shuffle"), py::arg("steps"), py::arg("urns"), py::arg("balls"),
          py::arg("max_types") = kDefaultTableCap);
    m.def("distribution_after_elementary", &distribution_after_elementary,
          py::arg("steps"), py::arg("urns"), py::arg("balls"));
    m.def("tv_distance", &tv_distance, py::arg("a"), py::arg("b"));

    py::class_<TvBound>(m, "TvBound")
        .def_readonly("value", &TvBound::value)
        .def_readonly("squared", &TvBound::squared);
    m.def("tv_upper_bound", &tv_upper_bound, py::arg("shuffle"), py::arg("steps"),
          py::arg("urns"), py::arg("balls"),
          py::arg("max_types") = kDefaultSpectralCap);

    py::class_<CutoffEstimate>(m, "CutoffEstimate")
        .def_readonly("steps", &CutoffEstimate::steps)
        .def_readonly("guarantee", &CutoffEstimate::guarantee)
        .def_readonly("offset_by_quarter", &CutoffEstimate::offset_by_quarter);
    m.def("cutoff_threshold", &cutoff_threshold, py::arg("urns"), py::arg("balls"),
          py::arg("c"));

    py::enum_<Parity>(m, "Parity").value("EVEN", Parity::Even).value("ODD", Parity::Odd);
    m.def("limit_distribution", &limit_distribution, py::arg("urns"), py::arg("balls"),
          py::arg("parity"));

    py::class_<DenseKernel>(m, "DenseKernel")
        .def_property_readonly("urns", &DenseKernel::urns)
        .def_property_readonly("balls", &DenseKernel::balls)
        .def_property_readonly("states", &DenseKernel::states)
        .def_property_readonly("denominator", &DenseKernel::denominator)
        .def("entry",
             [](const DenseKernel& k, std::size_t from, std::size_t to) {
                 return to_fraction(k.entry(from, to));
             },
             py::arg("from_state"), py::arg("to_state"))
        .def("row_sum", [](const DenseKernel& k, std::size_t from) {
            return to_fraction(k.row_sum(from));
        });
    m.def("build_kernel", &build_kernel, py::arg("shuffle"), py::arg("urns"),
          py::arg("balls"), py::arg("max_states") = kDefaultStateCap);

    py::class_<PowerDistribution>(m, "PowerDistribution")
        .def_property_readonly("states", &PowerDistribution::states)
        .def_property_readonly("steps", &PowerDistribution::steps)
        .def("mass", &PowerDistribution::mass, py::arg("state"))
        .def("collapse_to_types", &PowerDistribution::collapse_to_types);
    m.def("power_distribution", &power_distribution, py::arg("kernel"), py::arg("steps"));

    m.def("configuration_index", &configuration_index, py::arg("configuration"));
    m.def("configuration_from_index", &configuration_from_index, py::arg("index"),
          py::arg("urns"), py::arg("balls"));

    py::class_<EmpiricalDistribution>(m, "EmpiricalDistribution")
        .def_readonly("urns", &EmpiricalDistribution::urns)
        .def_readonly("balls", &EmpiricalDistribution::balls)
        .def_readonly("steps", &EmpiricalDistribution::steps)
        .def_readonly("trials", &EmpiricalDistribution::trials)
        .def_readonly("seed", &EmpiricalDistribution::seed)
        .def_readonly("counts", &EmpiricalDistribution::counts)
        .def_property_readonly_static(
            "rng", [](py::object) { return std::string(EmpiricalDistribution::kRngName); });
    m.def("simulate", &simulate, py::arg("shuffle"), py::arg("urns"), py::arg("balls"),
          py::arg("steps"), py::arg("trials"), py::arg("seed"),
          py::arg("max_states") = kDefaultStateCap);
    m.def("empirical_tv", &empirical_tv, py::arg("sample"), py::arg("exact"));

    m.def(
        "tv_curve_csv",
        [](ShuffleKind kind, int urns, int balls, int max_steps, std::size_t max_types) {
            reports::TvCurveOptions options;
            options.shuffle = kind;
            options.urns = urns;
            options.balls = balls;
            options.max_steps = max_steps;
            options.max_types = max_types;
            std::ostringstream out;
            reports::write_tv_curve_csv(out, options);
            return out.str();
        },
        py::arg("shuffle"), py::arg("urns"), py::arg("balls"), py::arg("max_steps"),
        py::arg("max_types") = kDefaultTableCap,
        "The mixing-curve CSV as a string, identical to the CLI output.");
}
