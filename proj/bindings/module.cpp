#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "plqi/certify.hpp"
#include "plqi/constructions.hpp"
#include "plqi/distortion.hpp"
#include "plqi/io.hpp"

namespace py = pybind11;
using namespace plqi;

namespace {

py::dict certificate_dict(const PLDeltaCertificate& cert) {
  py::dict d;
  d["n"] = cert.n;
  d["M_obs"] = cert.m_obs;
  d["M"] = cert.m_bound;
  d["theta"] = cert.theta ? py::object(py::float_(*cert.theta)) : py::none();
  d["N1"] = cert.n1 ? py::object(py::float_(*cert.n1)) : py::none();
  d["N"] = cert.big_n ? py::object(py::float_(*cert.big_n)) : py::none();
  d["k_simplex"] = cert.k_simplex;
  d["k_global"] =
      cert.k_global ? py::object(py::float_(*cert.k_global)) : py::none();
  d["convex_carrier"] = cert.convex_carrier;
  return d;
}

py::dict report_dict(const DistortionReport& r) {
  py::dict d;
  d["seed"] = r.seed;
  d["pair_count"] = r.pair_count;
  d["min_ratio"] = r.min_ratio;
  d["max_ratio"] = r.max_ratio;
  py::dict wmin, wmax;
  wmin["x"] = r.argmin.x;
  wmin["y"] = r.argmin.y;
  wmin["ratio"] = r.argmin.ratio;
  wmax["x"] = r.argmax.x;
  wmax["y"] = r.argmax.y;
  wmax["ratio"] = r.argmax.ratio;
  d["witnesses"] = py::dict(py::arg("min") = wmin, py::arg("max") = wmax);
  return d;
}

SamplePlan make_plan(std::uint64_t seed, int pair_count,
                     double within_simplex_fraction) {
  SamplePlan plan;
  plan.seed = seed;
  plan.pair_count = pair_count;
  plan.within_simplex_fraction = within_simplex_fraction;
  return plan;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "PL quasi-isometry certification: simplicial complexes, "
            "bi-Lipschitz certificates, and the explicit constructions";

  py::register_exception<Error>(m, "Error");

  // --- geometry ---------------------------------------------------------
  py::class_<Simplex>(m, "Simplex")
      .def(py::init<std::vector<Vec>>(), py::arg("vertices"))
      .def_property_readonly("dim", &Simplex::dim)
      .def_property_readonly("ambient_dim", &Simplex::ambient_dim)
      .def_property_readonly("diameter", &Simplex::diameter)
      .def("vertex", &Simplex::vertex)
      .def("centroid", &Simplex::centroid);

  m.def("degeneracy_measure", &degeneracy_measure);
  m.def(
      "barycentric_coordinates",
      [](const Vec& p, const Simplex& s) {
        const auto b = barycentric_coordinates(p, s);
        return py::make_tuple(b.weights, b.residual);
      },
      py::arg("p"), py::arg("simplex"),
      "Affine weights of the projection of p onto the simplex hull, plus "
      "the distance to the hull");
  m.def(
      "point_from_barycentric",
      [](const Vec& weights, const Simplex& s) {
        return point_from_barycentric({weights, 0.0}, s);
      },
      py::arg("weights"), py::arg("simplex"));
  m.def("dihedral_angle", &dihedral_angle, py::arg("simplex"), py::arg("i"),
        py::arg("j"));
  m.def(
      "clip_segment",
      [](const Simplex& s, const Vec& a, const Vec& b) -> py::object {
        const auto r = clip_segment(s, a, b);
        if (!r.has_value()) return py::none();
        return py::make_tuple((*r)[0], (*r)[1]);
      },
      py::arg("simplex"), py::arg("a"), py::arg("b"));

  // --- complexes ---------------------------------------------------------
  py::class_<Complex>(m, "Complex")
      .def(py::init<int, std::vector<Vec>, std::vector<std::vector<int>>>(),
           py::arg("ambient_dim"), py::arg("vertices"),
           py::arg("maximal_simplices"))
      .def_property_readonly("ambient_dim", &Complex::ambient_dim)
      .def_property_readonly("vertex_count", &Complex::vertex_count)
      .def_property_readonly("simplex_count", &Complex::simplex_count)
      .def("vertex", &Complex::vertex)
      .def("maximal_simplices", &Complex::maximal_simplices)
      .def("validate",
           [](const Complex& c) {
             const auto report = c.validate();
             py::list issues;
             for (const auto& issue : report.issues)
               issues.append(issue.message);
             py::dict d;
             d["valid"] = report.valid();
             d["issues"] = issues;
             return d;
           })
      .def("locate",
           [](const Complex& c, const Vec& p) -> py::object {
             const auto loc = c.locate(p);
             if (!loc.has_value()) return py::none();
             py::dict d;
             d["simplex_id"] = loc->simplex_id;
             d["weights"] = loc->coords.weights;
             d["residual"] = loc->coords.residual;
             return d;
           })
      .def("facet_angle_margin", [](const Complex& c) -> py::object {
        const auto margin = c.facet_angle_margin();
        if (margin.vacuous()) return py::none();
        return py::float_(*margin.theta);
      });

  // --- simplicial maps ---------------------------------------------------
  py::class_<SimplicialMap>(m, "SimplicialMap")
      .def(py::init<Complex, Complex, std::vector<int>>(), py::arg("source"),
           py::arg("target"), py::arg("vertex_images"))
      .def_property_readonly("source", &SimplicialMap::source)
      .def_property_readonly("target", &SimplicialMap::target)
      .def_property_readonly("vertex_images", &SimplicialMap::vertex_images)
      .def("validate",
           [](const SimplicialMap& m_) {
             const auto r = m_.validate();
             py::dict d;
             d["simplicial"] = r.simplicial;
             d["homeomorphism"] = r.homeomorphism;
             d["issues"] = r.issues;
             return d;
           })
      .def("evaluate", &SimplicialMap::evaluate, py::arg("p"))
      .def("inverse", &SimplicialMap::inverse);
  m.def("compose", &compose, py::arg("m1"), py::arg("m2"),
        "m2 after m1 (the middle complexes must agree)");
  m.def("identity_map", &identity_map);

  // --- certificates ------------------------------------------------------
  m.def("n1_constant", &n1_constant, py::arg("theta"));
  m.def("prop31_bound", &prop31_bound, py::arg("m"), py::arg("theta"),
        py::arg("n"));
  m.def("vertex_ratio_bound", &vertex_ratio_bound);
  m.def(
      "certify",
      [](const SimplicialMap& m_, const std::string& convexity,
         std::uint64_t seed) {
        ConvexityHint hint = ConvexityHint::Auto;
        if (convexity == "assume") hint = ConvexityHint::Assume;
        if (convexity == "none") hint = ConvexityHint::None;
        return certificate_dict(certify(m_, hint, seed));
      },
      py::arg("map"), py::arg("convexity") = "auto", py::arg("seed") = 0);
  m.def(
      "triangle_inequality_check",
      [](double theta, int trials, std::uint64_t seed) {
        const auto r = triangle_inequality_check(theta, trials, seed);
        py::dict d;
        d["theta"] = r.theta;
        d["n1"] = r.n1;
        d["seed"] = r.seed;
        d["trials"] = r.trials;
        d["violations"] = r.violations;
        d["max_lhs_over_rhs"] = r.max_lhs_over_rhs;
        d["pass"] = r.pass();
        return d;
      },
      py::arg("theta"), py::arg("trials") = 100000, py::arg("seed") = 0);

  // --- analytic maps and constructions -----------------------------------
  py::class_<AnalyticMap>(m, "AnalyticMap")
      .def_static("identity", &AnalyticMap::identity, py::arg("dim"))
      .def_static("scale", &AnalyticMap::scale, py::arg("dim"),
                  py::arg("factor"))
      .def_static("translate", &AnalyticMap::translate, py::arg("offset"))
      .def_static("negate", &AnalyticMap::negate, py::arg("dim"))
      .def_static("cone", &AnalyticMap::cone, py::arg("axis"),
                  py::arg("inner_slope") = 0.25, py::arg("outer_slope") = 0.5)
      .def_static(
          "case1",
          [](const std::vector<std::pair<Vec, double>>& discs) {
            DiscSequence ds;
            for (const auto& [center, radius] : discs)
              ds.push_back({center, radius});
            return AnalyticMap::case1(std::move(ds));
          },
          py::arg("discs"), "discs as (center, radius) pairs")
      .def_static("compose", &AnalyticMap::compose, py::arg("children"))
      .def_property_readonly("dim", &AnalyticMap::dim)
      .def_property_readonly("kind", &AnalyticMap::kind_name)
      .def("evaluate", &AnalyticMap::evaluate, py::arg("x"))
      .def("__call__", &AnalyticMap::evaluate, py::arg("x"));

  m.def("disc_swap_complexes", &disc_swap_complexes, py::arg("n"));
  m.def("disc_swap_vertex_map", &disc_swap_vertex_map, py::arg("n"));
  m.def("disc_swap_map", &disc_swap_map, py::arg("n"));
  m.def(
      "witness_discs",
      [](const AnalyticMap& f, int terms, double max_radius,
         std::uint64_t seed) -> py::object {
        SearchBudget budget;
        budget.terms = terms;
        budget.max_radius = max_radius;
        const auto w = witness_discs(f, budget, seed);
        if (!w.has_value()) return py::none();
        py::list discs;
        for (const Disc& d : w->discs)
          discs.append(py::make_tuple(d.center, d.radius));
        py::dict out;
        out["points"] = w->points;
        out["discs"] = discs;
        out["violations"] = check_disc_conditions(f, *w);
        return out;
      },
      py::arg("f"), py::arg("terms") = 20, py::arg("max_radius") = 1e9,
      py::arg("seed") = 0,
      "Greedy witness search; None when displacement stays bounded");
  m.def(
      "divergent_sequence",
      [](const AnalyticMap& f, int terms, double max_radius,
         std::uint64_t seed) -> py::object {
        SearchBudget budget;
        budget.terms = terms;
        budget.max_radius = max_radius;
        const auto seq = divergent_sequence(f, budget, seed);
        if (!seq.has_value()) return py::none();
        return py::cast(*seq);
      },
      py::arg("f"), py::arg("terms") = 20, py::arg("max_radius") = 1e9,
      py::arg("seed") = 0);
  m.def("commutator_series", &commutator_series, py::arg("f"), py::arg("g"),
        py::arg("points"));

  // --- distortion lab ----------------------------------------------------
  py::class_<MapUnderTest>(m, "MapUnderTest")
      .def_static("pl", &MapUnderTest::pl, py::arg("map"))
      .def_static(
          "analytic",
          [](const AnalyticMap& f, const Vec& center, double radius) {
            return MapUnderTest::analytic(f, {center, radius});
          },
          py::arg("map"), py::arg("center"), py::arg("radius"))
      .def_static(
          "callable",
          [](std::function<Vec(const Vec&)> fn, const Vec& center,
             double radius) {
            return MapUnderTest::callable(std::move(fn), {center, radius});
          },
          py::arg("fn"), py::arg("center"), py::arg("radius"))
      .def("evaluate", &MapUnderTest::evaluate, py::arg("x"));

  m.def(
      "sample_distortion",
      [](const MapUnderTest& m_, std::uint64_t seed, int pairs,
         double within_simplex_fraction) {
        return report_dict(sample_distortion(
            m_, make_plan(seed, pairs, within_simplex_fraction)));
      },
      py::arg("map"), py::arg("seed") = 0, py::arg("pairs") = 1000,
      py::arg("within_simplex_fraction") = 0.5);
  m.def(
      "qi_constants",
      [](const MapUnderTest& m_, std::uint64_t seed, int pairs, double cap) {
        const auto est =
            qi_constants(m_, make_plan(seed, pairs, 0.5), cap);
        py::dict d;
        d["M_hat"] = est.m_hat;
        d["finite"] = est.finite;
        d["cap"] = est.cap;
        d["strata"] = est.strata;
        return d;
      },
      py::arg("map"), py::arg("seed") = 0, py::arg("pairs") = 1000,
      py::arg("cap") = 1e6);
  m.def("equivalence_gap", &equivalence_gap, py::arg("f"), py::arg("g"),
        py::arg("center"), py::arg("radii"),
        py::arg("samples_per_radius") = 1000, py::arg("seed") = 0);
  m.def(
      "bound_check",
      [](double min_ratio, double max_ratio, double k, double slack) {
        DistortionReport r;
        r.min_ratio = min_ratio;
        r.max_ratio = max_ratio;
        const auto c = bound_check(r, k, slack);
        return py::make_tuple(c.pass, c.margin);
      },
      py::arg("min_ratio"), py::arg("max_ratio"), py::arg("k"),
      py::arg("slack") = kCheckSlack);

  // --- file formats -------------------------------------------------------
  m.def("load_complex", &load_complex, py::arg("path"));
  m.def("save_complex", &save_complex, py::arg("path"), py::arg("complex"));
  m.def("load_map", &load_map, py::arg("path"));
  m.def("save_map", &save_map, py::arg("path"), py::arg("source_path"),
        py::arg("target_path"), py::arg("vertex_images"));
  m.def("load_analytic", &load_analytic, py::arg("path"));
  m.def("save_analytic", &save_analytic, py::arg("path"), py::arg("map"));
}
