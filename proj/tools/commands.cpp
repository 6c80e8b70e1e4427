#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "transurf/algebra/verify.hpp"
#include "transurf/genesis.hpp"
#include "transurf/io.hpp"
#include "transurf/weingarten.hpp"

namespace transurf::cli {

namespace {


double parse_number(std::string_view s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad number in " + what);
  return v;
}

int parse_count(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad count in " + what);
  return v;
}

void parse_axis(std::string_view axis, double& start, double& stop, int& count) {
  const std::string text(axis);
  const auto c1 = axis.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : axis.find(':', c1 + 1);
  if (c2 == std::string_view::npos || axis.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument("grid axis '" + text + "' must be start:stop:count");
  }
  start = parse_number(axis.substr(0, c1), text);
  stop = parse_number(axis.substr(c1 + 1, c2 - c1 - 1), text);
  count = parse_count(axis.substr(c2 + 1), text);
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("grid must be start:stop:count,start:stop:count");
  }
  GridSpec g;
  parse_axis(std::string_view(text).substr(0, comma), g.x_start, g.x_stop, g.x_count);
  parse_axis(std::string_view(text).substr(comma + 1), g.y_start, g.y_stop, g.y_count);
  g.validate();
  return g;
}

namespace {

struct SurfaceOptions {
  std::string family;
  double lambda = 1.0;
  std::string profile = "t^2";
  std::string f, g;
  std::string ambient;
  std::string surface_file;
};

void add_surface_options(CLI::App* cmd, SurfaceOptions& o) {
  cmd->add_option("--family", o.family, "plane | cylinder | scherk | paraboloid");
  cmd->add_option("--lambda", o.lambda, "Scherk separation constant");
  cmd->add_option("--profile", o.profile, "cylinder profile f(t)");
  cmd->add_option("--f", o.f, "profile f(t)");
  cmd->add_option("--g", o.g, "profile g(t)");
  cmd->add_option("--ambient", o.ambient, "euclidean | lorentz-spacelike | lorentz-timelike-xz | lorentz-timelike-yz");
  cmd->add_option("--surface", o.surface_file, "surface JSON file");
}

io::SurfaceSpec resolve_surface(const SurfaceOptions& o) {
  const int sources = (!o.family.empty()) + (!o.surface_file.empty()) + (!o.f.empty() || !o.g.empty());
  if (sources != 1) throw io::SpecError("give exactly one of --family, --surface, or --f/--g");
  io::SurfaceSpec spec;
  if (!o.family.empty()) {
    FamilySpec fam;
    try {
      fam.family = parse_family(o.family);
    } catch (const std::invalid_argument& e) {
      throw io::SpecError(e.what());
    }
    fam.lambda = o.lambda;
    fam.profile = o.profile;
    spec = io::family_spec(fam);
  } else if (!o.surface_file.empty()) {
    spec = io::read_surface_file(o.surface_file);
  } else {
    spec.f = o.f.empty() ? "0" : o.f;
    spec.g = o.g.empty() ? "0" : o.g;
  }
  if (!o.ambient.empty()) {
    try {
      spec.ambient = parse_ambient(o.ambient);
    } catch (const std::invalid_argument& e) {
      throw io::SpecError(e.what());
    }
  }
  (void)spec.build();
  return spec;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    io::atomic_write(path, content);
  }
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature, linear Weingarten fits and identity checks for translation surfaces", "transurf"};
  app.require_subcommand(1);

  SurfaceOptions surf;
  std::string grid_text;
  std::string out_path;
  std::uint64_t seed = 0;

  auto* curvature = app.add_subcommand("curvature", "Sample H, K and W on a grid (CSV)");
  add_surface_options(curvature, surf);
  curvature->add_option("--grid", grid_text, "x0:x1:nx,y0:y1:ny")->required();
  curvature->add_option("--out", out_path, "output file (default: stdout)");

  auto* fit = app.add_subcommand("fit", "Fit aH + bK = c and classify (JSON)");
  add_surface_options(fit, surf);
  fit->add_option("--grid", grid_text, "x0:x1:nx,y0:y1:ny")->required();
  fit->add_option("--out", out_path, "output file (default: stdout)");

  auto* mesh = app.add_subcommand("mesh", "Export the sampled surface as Wavefront OBJ");
  add_surface_options(mesh, surf);
  mesh->add_option("--grid", grid_text, "x0:x1:nx,y0:y1:ny")->required();
  mesh->add_option("--out", out_path, "output file (default: stdout)");

  std::string suite = "all";
  std::string mutation = "none";
  auto* verify = app.add_subcommand("verify", "Replay the exact identity suites (JSON)");
  verify->add_option("--suite", suite, "c0 | c1 | lorentzian | all")
      ->check(CLI::IsMember({"c0", "c1", "lorentzian", "all"}));
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--out", out_path, "output file (default: stdout)");
  verify->add_option("--inject-mutation", mutation)->group("");

  std::string family;
  double lambda = 1.0;
  std::string profile = "t^2";
  bool check = false;
  std::optional<double> x_end;
  double step = 1e-3;
  std::string table_path;
  auto* generate = app.add_subcommand("generate", "Emit a classified surface as surface JSON");
  generate->add_option("family", family, "plane | cylinder | scherk | paraboloid")->required();
  generate->add_option("--lambda", lambda, "Scherk separation constant");
  generate->add_option("--profile", profile, "cylinder profile f(t)");
  generate->add_flag("--check", check, "integrate the separated profile ODE and compare with the closed form");
  generate->add_option("--x-end", x_end, "ODE end point (default 0.5/lambda)");
  generate->add_option("--step", step, "RK4 step");
  generate->add_option("--table", table_path, "write the RK4 profile table (CSV) here");
  generate->add_option("--out", out_path, "output file (default: stdout)");
  generate->add_option("--seed", seed, "unused; accepted for uniformity");

  for (auto* cmd : {curvature, fit, mesh}) cmd->add_option("--seed", seed, "unused; accepted for uniformity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (curvature->parsed() || fit->parsed() || mesh->parsed()) {
      const GridSpec grid = parse_grid(grid_text);
      const io::SurfaceSpec spec = resolve_surface(surf);
      const TranslationSurface surface = spec.build();
      if (curvature->parsed()) {
        std::vector<CurvatureSample> samples;
        try {
          samples = sample_grid(surface, grid);
        } catch (const NoAdmissibleSamples& e) {
          err << "error: " << e.what() << "\n";
          return kNothingValid;
        }
        emit(io::samples_csv(samples), out_path, out);
        return kOk;
      }
      if (fit->parsed()) {
        WeingartenFit result;
        try {
          result = fit_linear_weingarten(sample_grid(surface, grid));
        } catch (const NoAdmissibleSamples& e) {
          err << "error: " << e.what() << "\n";
          return kNothingValid;
        } catch (const InsufficientData& e) {
          err << "error: " << e.what() << "\n";
          return kNothingValid;
        }
        emit(dump(io::to_json(result)), out_path, out);
        if (result.verdict.verdict == Verdict::GeneralLinearWeingarten) {
          err << "warning: " << result.verdict.warning << "\n";
          return kTheoremViolation;
        }
        return kOk;
      }
      io::Mesh m;
      try {
        m = io::mesh_obj(surface, grid);
      } catch (const io::NoValidCells& e) {
        err << "error: " << e.what() << "\n";
        return kNothingValid;
      }
      emit(m.obj, out_path, out);
      return kOk;
    }

    if (verify->parsed()) {
      algebra::VerifyOptions options;
      options.seed = seed;
      options.mutation = algebra::parse_mutation(mutation);
      const auto reports = algebra::run_suite(suite, options);
      const bool passed =
          std::all_of(reports.begin(), reports.end(), [](const algebra::Report& r) { return r.passed(); });
      io::Json doc;
      doc["suite"] = suite;
      doc["seed"] = seed;
      doc["passed"] = passed;
      doc["reports"] = io::to_json(reports);
      const std::string text = dump(doc);
      out << text;
      if (!out_path.empty()) io::atomic_write(out_path, text);
      return passed ? kOk : kVerifyFailed;
    }

    // generate
    FamilySpec fam;
    fam.family = parse_family(family);
    fam.lambda = lambda;
    fam.profile = profile;
    io::Json doc = io::to_json(io::family_spec(fam));
    if (check || !table_path.empty()) {
      if (fam.family != Family::Scherk) throw io::SpecError("--check and --table apply to the scherk family");
      const double end = x_end.value_or(0.5 / lambda);
      const ProfileTable table = integrate_separated_profile(lambda, end, step);
      if (!table_path.empty()) io::atomic_write(table_path, io::profile_csv(table));
      if (check) {
        double worst = 0.0;
        for (const auto& r : table) worst = std::max(worst, std::abs(r.f - separated_profile_exact(lambda, r.x)));
        io::Json c;
        c["lambda"] = lambda;
        c["x_end"] = end;
        c["step"] = step;
        c["max_deviation"] = worst;
        doc["check"] = c;
      }
    }
    emit(dump(doc), out_path, out);
    return kOk;
  } catch (const io::SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BlowUp& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace transurf::cli
