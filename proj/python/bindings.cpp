#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellsurf/configuration.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/kodaira.hpp"
#include "ellsurf/monodromy.hpp"
#include "ellsurf/weierstrass.hpp"

namespace py = pybind11;
using namespace ellsurf;

namespace {

WeierstrassModel model(const std::string& a, const std::string& b) {
    return WeierstrassModel(parse_poly(a), parse_poly(b));
}

std::vector<Poly> polys(const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parse_poly(t));
    return out;
}

py::dict report_dict(const InvariantReport& r) {
    py::dict d;
    d["deg_L"] = r.deg_L;
    d["p_g"] = r.p_g;
    d["h11"] = r.h11;
    d["rho_tr"] = r.rho_tr;
    d["counts"] = py::make_tuple(r.counts.a, r.counts.b, r.counts.c, r.counts.d, r.counts.e);
    d["delta"] = r.delta;
    return d;
}

SearchProblem problem(unsigned degree, const std::string& over0, const std::string& over1728,
                      const std::string& over_inf) {
    return {degree, parse_cycle_type(over0), parse_cycle_type(over1728), parse_cycle_type(over_inf)};
}

}  // namespace

PYBIND11_MODULE(_ellsurf, m) {
    m.doc() = "Singular-fiber configurations of elliptic surfaces";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ClassificationError>(m, "ClassificationError", domain.ptr());

    // Fiber types travel as strings: "I5", "I0*", "IV*".
    m.def("euler_number", [](const std::string& t) { return euler_number(parse_fiber_type(t)); });
    m.def("lattice_contribution", [](const std::string& t) { return lattice_contribution(parse_fiber_type(t)); });
    m.def("twist_type", [](const std::string& t) { return twist_type(parse_fiber_type(t)).to_string(); });
    m.def("base_change_type",
          [](const std::string& t, unsigned e) { return base_change_type(parse_fiber_type(t), e).to_string(); },
          py::arg("type"), py::arg("e"));
    m.def("classify_local",
          [](std::optional<std::int64_t> c4, std::optional<std::int64_t> c6, std::int64_t delta) {
              auto v = [](std::optional<std::int64_t> x) { return x ? Valuation(*x) : Valuation::infinity(); };
              return classify_local(minimalize(LocalData(v(c4), v(c6), delta)).data).to_string();
          },
          py::arg("c4"), py::arg("c6"), py::arg("delta"), "None stands for an infinite valuation.");

    m.def("classify",
          [](const std::string& a, const std::string& b, const std::vector<std::string>& refine_with) {
              const std::vector<Poly> refine = polys(refine_with);
              const ModelClassification mc = classify_places(model(a, b), refine);
              py::list places;
              for (const auto& cp : mc.places) {
                  places.append(py::make_tuple(cp.place.to_string(), cp.type.to_string(), cp.place.point_count()));
              }
              py::dict d;
              d["places"] = places;
              d["deg_L"] = mc.deg_L;
              d["euler_sum"] = mc.euler_sum;
              return d;
          },
          py::arg("A"), py::arg("B"), py::arg("refine_with") = std::vector<std::string>{},
          "Singular fibers of y^2 = x^3 + A x + B as (place, type, points) tuples.");
    m.def("classify_text",
          [](const std::string& text) { return format_classification(classify_places(parse_model(text))); });
    m.def("quadratic_twist",
          [](const std::string& a, const std::string& b, const std::string& f) {
              const WeierstrassModel t = quadratic_twist(model(a, b), parse_poly(f));
              return py::make_tuple(to_string(t.a()), to_string(t.b()));
          },
          py::arg("A"), py::arg("B"), py::arg("f"));

    py::class_<Configuration>(m, "Configuration")
        .def(py::init([](unsigned genus, const std::vector<std::pair<std::string, std::string>>& fibers) {
                 std::vector<Fiber> fs;
                 for (const auto& [label, type] : fibers) fs.push_back({label, parse_fiber_type(type)});
                 return Configuration(genus, std::move(fs));
             }),
             py::arg("genus"), py::arg("fibers"))
        .def_static("parse", [](const std::string& text) { return parse_configuration(text); })
        .def_property_readonly("genus", &Configuration::genus)
        .def_property_readonly("fibers",
                               [](const Configuration& c) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& f : c.fibers()) out.emplace_back(f.label, f.type.to_string());
                                   return out;
                               })
        .def_property_readonly("deg_L", &Configuration::deg_L)
        .def("__len__", &Configuration::size)
        .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
        .def("__str__", [](const Configuration& c) { return to_string(c); })
        .def("__repr__", [](const Configuration& c) {
            std::string s = "Configuration(genus=" + std::to_string(c.genus()) + ", [";
            for (std::size_t i = 0; i < c.size(); ++i) {
                s += (i ? ", " : "") + c.fibers()[i].label + ": " + c.fibers()[i].type.to_string();
            }
            return s + "])";
        });

    m.def("report", [](const Configuration& c) { return report_dict(report(c)); });
    m.def("is_extremal", [](const Configuration& c, bool j_constant) { return to_string(is_extremal(c, j_constant)); },
          py::arg("configuration"), py::arg("j_constant"));
    m.def("twist",
          [](const Configuration& c, const std::vector<std::string>& sites) {
              const TwistResult t = twist(c, sites);
              return py::make_tuple(t.configuration, t.predicted_delta_change);
          },
          py::arg("configuration"), py::arg("sites"));
    m.def("star_minimal_twist", &star_minimal_twist);
    m.def("minimal_delta_twist", &minimal_delta_twist);
    m.def("base_change",
          [](const Configuration& c, unsigned degree, const std::map<std::string, std::vector<unsigned>>& ram) {
              return base_change(c, Cover{degree, ram});
          },
          py::arg("configuration"), py::arg("degree"), py::arg("ramification"));
    m.def("torelli_verdict",
          [](std::int64_t p_g, bool j_constant, bool extremal) {
              return to_string(torelli_verdict(p_g, j_constant, extremal));
          },
          py::arg("p_g"), py::arg("j_constant"), py::arg("extremal"));
    m.def("family_bound_s_max", &family_bound_s_max, py::arg("genus"), py::arg("deg_L"));

    py::class_<Witness>(m, "Witness")
        .def_property_readonly("sigma0", [](const Witness& w) { return w.sigma0.to_string(); })
        .def_property_readonly("sigma1", [](const Witness& w) { return w.sigma1.to_string(); })
        .def_property_readonly("product", [](const Witness& w) { return (w.sigma0 * w.sigma1).to_string(); })
        .def("__str__", &format_witness);

    m.def("search",
          [](unsigned degree, const std::string& over0, const std::string& over1728, const std::string& over_inf,
             unsigned workers) {
              SearchOutcome s;
              {
                  py::gil_scoped_release release;
                  s = search(problem(degree, over0, over1728, over_inf), SearchOptions{16, workers});
              }
              return py::make_tuple(s.witness ? py::cast(*s.witness) : py::none(), s.candidates);
          },
          py::arg("degree"), py::arg("over0"), py::arg("over1728"), py::arg("over_inf"), py::arg("workers") = 1,
          "Returns (witness or None, candidates examined).");
    m.def("verify_witness",
          [](unsigned degree, const std::string& over0, const std::string& over1728, const std::string& over_inf,
             const std::string& sigma0, const std::string& sigma1) {
              return verify_witness(problem(degree, over0, over1728, over_inf),
                                    Witness{parse_perm(sigma0, degree), parse_perm(sigma1, degree)});
          },
          py::arg("degree"), py::arg("over0"), py::arg("over1728"), py::arg("over_inf"), py::arg("sigma0"),
          py::arg("sigma1"));
    m.def("survey",
          [](unsigned degree, unsigned workers) {
              std::vector<SurveyEntry> entries;
              {
                  py::gil_scoped_release release;
                  entries = survey_partitions(degree, SearchOptions{16, workers});
              }
              py::dict out;
              for (const auto& e : entries) out[py::str(e.over_inf.to_string())] = e.realizable;
              return out;
          },
          py::arg("degree") = 12, py::arg("workers") = 1);
}
