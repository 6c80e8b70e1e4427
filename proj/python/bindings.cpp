#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "transurf/algebra/verify.hpp"
#include "transurf/genesis.hpp"
#include "transurf/io.hpp"
#include "transurf/weingarten.hpp"

namespace py = pybind11;
using namespace transurf;

namespace {

io::SurfaceSpec spec_from(const std::string& surface_json) {
  return io::parse_surface(io::Json::parse(surface_json));
}

py::dict sample_dict(const CurvatureSample& s) {
  py::dict d;
  d["x"] = s.x;
  d["y"] = s.y;
  d["H"] = s.H;
  d["K"] = s.K;
  d["W"] = s.W;
  d["valid"] = s.valid;
  if (!s.valid) d["reason"] = s.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature, linear Weingarten fits and exact identity checks for translation surfaces";

  py::register_exception<io::SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<expr::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NoAdmissibleSamples>(m, "NoAdmissibleSamples", PyExc_RuntimeError);

  m.def(
      "curvature",
      [](const std::string& surface_json, double x, double y) {
        return sample_dict(translation_curvature(spec_from(surface_json).build(), x, y));
      },
      py::arg("surface_json"), py::arg("x"), py::arg("y"));

  m.def(
      "sample",
      [](const std::string& surface_json, const std::string& grid) {
        py::list out;
        for (const auto& s : sample_grid(spec_from(surface_json).build(), cli::parse_grid(grid))) {
          out.append(sample_dict(s));
        }
        return out;
      },
      py::arg("surface_json"), py::arg("grid"));

  m.def(
      "fit",
      [](const std::string& surface_json, const std::string& grid) {
        const auto samples = sample_grid(spec_from(surface_json).build(), cli::parse_grid(grid));
        return io::to_json(fit_linear_weingarten(samples)).dump();
      },
      py::arg("surface_json"), py::arg("grid"));

  m.def(
      "audit",
      [](std::uint64_t seed, int trials) { return io::to_json(theorem_audit(seed, trials)).dump(); },
      py::arg("seed") = 7, py::arg("trials") = 100);

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        algebra::VerifyOptions options;
        options.seed = seed;
        return io::to_json(algebra::run_suite(suite, options)).dump();
      },
      py::arg("suite") = "all", py::arg("seed") = 0);

  m.def(
      "generate",
      [](const std::string& family, double lambda, const std::string& profile) {
        FamilySpec spec;
        spec.family = parse_family(family);
        spec.lambda = lambda;
        spec.profile = profile;
        return io::to_json(io::family_spec(spec)).dump();
      },
      py::arg("family"), py::arg("lambda_") = 1.0, py::arg("profile") = "t^2");

  m.def(
      "integrate_profile",
      [](double lambda, double x_end, double step) {
        py::list out;
        for (const auto& r : integrate_separated_profile(lambda, x_end, step)) out.append(py::make_tuple(r.x, r.f, r.fp));
        return out;
      },
      py::arg("lambda_"), py::arg("x_end"), py::arg("step") = 1e-3);

  m.def(
      "mesh",
      [](const std::string& surface_json, const std::string& grid) {
        return io::mesh_obj(spec_from(surface_json).build(), cli::parse_grid(grid)).obj;
      },
      py::arg("surface_json"), py::arg("grid"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
