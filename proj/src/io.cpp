#include "transurf/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace transurf::io {

TranslationSurface SurfaceSpec::build() const {
  TranslationSurface s;
  try {
    s.f = Profile::parse(f);
    s.g = Profile::parse(g);
  } catch (const std::exception& e) {
    throw SpecError(std::string("invalid profile: ") + e.what());
  }
  s.ambient = ambient;
  if (domain_f) s.domain_f = *domain_f;
  if (domain_g) s.domain_g = *domain_g;
  return s;
}

SurfaceSpec family_spec(const FamilySpec& family) {
  SurfaceSpec spec;
  try {
    spec.f = family_profile_f(family);
    spec.g = family_profile_g(family);
    (void)Profile::parse(spec.f);
  } catch (const std::exception& e) {
    throw SpecError(e.what());
  }
  if (family.family == Family::Scherk) {
    const double w = scherk_half_width(family.lambda);
    spec.domain_f = Interval{-w, w};
    spec.domain_g = Interval{-w, w};
  }
  return spec;
}

namespace {

FamilySpec family_from(const Json& obj) {
  FamilySpec family;
  try {
    family.family = parse_family(obj.at("family").get<std::string>());
    if (obj.contains("lambda")) family.lambda = obj.at("lambda").get<double>();
    if (obj.contains("profile")) family.profile = obj.at("profile").get<std::string>();
  } catch (const Json::exception& e) {
    throw SpecError(std::string("bad family object: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  return family;
}

Interval interval_from(const Json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw SpecError(std::string(key) + " must be an array [lo, hi]");
  }
  Interval out{v[0].get<double>(), v[1].get<double>()};
  if (!(out.lo < out.hi)) throw SpecError(std::string(key) + " needs lo < hi");
  return out;
}

}  // namespace

SurfaceSpec parse_surface(const Json& doc) {
  if (!doc.is_object()) throw SpecError("surface document must be a JSON object");
  SurfaceSpec spec;
  if (doc.contains("ambient")) {
    try {
      spec.ambient = parse_ambient(doc.at("ambient").get<std::string>());
    } catch (const std::exception& e) {
      throw SpecError(e.what());
    }
  }
  for (const char* key : {"f", "g"}) {
    if (!doc.contains(key)) throw SpecError(std::string("missing '") + key + "'");
    const Json& slot = doc.at(key);
    const bool is_f = key[0] == 'f';
    if (slot.is_string()) {
      (is_f ? spec.f : spec.g) = slot.get<std::string>();
    } else if (slot.is_object()) {
      const SurfaceSpec fam = family_spec(family_from(slot));
      (is_f ? spec.f : spec.g) = is_f ? fam.f : fam.g;
      auto& dom = is_f ? spec.domain_f : spec.domain_g;
      if (!dom) dom = is_f ? fam.domain_f : fam.domain_g;
    } else {
      throw SpecError(std::string("'") + key + "' must be an expression string or a family object");
    }
  }
  if (doc.contains("domain_f")) spec.domain_f = interval_from(doc.at("domain_f"), "domain_f");
  if (doc.contains("domain_g")) spec.domain_g = interval_from(doc.at("domain_g"), "domain_g");
  (void)spec.build();
  return spec;
}

SurfaceSpec read_surface_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  return parse_surface(doc);
}

Json to_json(const SurfaceSpec& spec) {
  Json out;
  out["ambient"] = std::string(to_string(spec.ambient));
  out["f"] = spec.f;
  out["g"] = spec.g;
  if (spec.domain_f) out["domain_f"] = {spec.domain_f->lo, spec.domain_f->hi};
  if (spec.domain_g) out["domain_g"] = {spec.domain_g->lo, spec.domain_g->hi};
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string samples_csv(const std::vector<CurvatureSample>& samples) {
  std::string out = "x,y,H,K,W,valid\n";
  for (const auto& s : samples) {
    out += format_double(s.x) + ',' + format_double(s.y) + ',' + format_double(s.H) + ',' + format_double(s.K) +
           ',' + format_double(s.W) + ',' + (s.valid ? "1" : "0") + '\n';
  }
  return out;
}

std::string profile_csv(const ProfileTable& table) {
  std::string out = "x,f,fp\n";
  for (const auto& r : table) {
    out += format_double(r.x) + ',' + format_double(r.f) + ',' + format_double(r.fp) + '\n';
  }
  return out;
}

Json to_json(const WeingartenFit& fit) {
  Json out;
  out["a"] = fit.a;
  out["b"] = fit.b;
  out["c"] = fit.c;
  out["rms_residual"] = fit.rms_residual;
  out["max_residual"] = fit.max_residual;
  out["rank"] = fit.rank_estimate;
  out["verdict"] = std::string(to_string(fit.verdict.verdict));
  switch (fit.verdict.verdict) {
    case Verdict::ConstantMeanCurvature: out["h"] = fit.verdict.h; break;
    case Verdict::ConstantGaussCurvature: out["k"] = fit.verdict.k; break;
    case Verdict::BothConstant:
      out["h"] = fit.verdict.h;
      out["k"] = fit.verdict.k;
      break;
    default: break;
  }
  if (!fit.verdict.reason.empty()) out["reason"] = fit.verdict.reason;
  if (!fit.verdict.warning.empty()) out["warning"] = fit.verdict.warning;
  out["samples_used"] = fit.samples_used;
  out["samples_invalid"] = fit.samples_invalid;
  return out;
}

Json to_json(const AuditReport& report) {
  Json out;
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  out["skipped"] = report.skipped;
  Json counts = Json::object();
  for (Verdict v : {Verdict::ConstantMeanCurvature, Verdict::ConstantGaussCurvature, Verdict::BothConstant,
                    Verdict::GeneralLinearWeingarten, Verdict::NotLinearWeingarten, Verdict::Degenerate}) {
    counts[std::string(to_string(v))] = report.count(v);
  }
  out["counts"] = counts;
  Json details = Json::array();
  for (const auto& t : report.details) {
    Json d;
    d["index"] = t.index;
    d["f"] = t.f;
    d["g"] = t.g;
    if (t.skipped) {
      d["skipped"] = true;
    } else {
      d["verdict"] = std::string(to_string(t.verdict));
      d["rms_residual"] = t.rms_residual;
    }
    details.push_back(d);
  }
  out["details"] = details;
  return out;
}

Json to_json(const algebra::Report& report) {
  Json out;
  out["suite"] = report.suite;
  out["mode"] = std::string(algebra::to_string(report.mode));
  if (report.reading) out["reading"] = std::string(algebra::to_string(*report.reading));
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json step;
    step["name"] = s.name;
    step["status"] = s.pass ? "pass" : "fail";
    if (!s.witness.empty()) step["witness"] = s.witness;
    if (!s.note.empty()) step["note"] = s.note;
    steps.push_back(step);
  }
  out["steps"] = steps;
  if (report.cofactor) out["cofactor"] = *report.cofactor;
  return out;
}

Json to_json(const std::vector<algebra::Report>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Mesh mesh_obj(const TranslationSurface& surface, const GridSpec& grid) {
  std::vector<CurvatureSample> samples;
  try {
    samples = sample_grid(surface, grid);
  } catch (const NoAdmissibleSamples&) {
    throw NoValidCells();
  }
  const int nx = grid.x_count, ny = grid.y_count;
  std::vector<std::size_t> index(samples.size(), 0);
  Mesh mesh;
  std::string& out = mesh.obj;
  out = "o translation_surface\n";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!samples[k].valid) continue;
    const Eigen::Vector3d p = surface.position(samples[k].x, samples[k].y);
    out += "v " + format_double(p.x()) + ' ' + format_double(p.y()) + ' ' + format_double(p.z()) + '\n';
    index[k] = ++mesh.vertices;
  }
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const std::size_t c00 = index[j * nx + i], c10 = index[j * nx + i + 1];
      const std::size_t c11 = index[(j + 1) * nx + i + 1], c01 = index[(j + 1) * nx + i];
      if (c00 == 0 || c10 == 0 || c11 == 0 || c01 == 0) continue;
      out += "f " + std::to_string(c00) + ' ' + std::to_string(c10) + ' ' + std::to_string(c11) + ' ' +
             std::to_string(c01) + '\n';
      ++mesh.faces;
    }
  }
  if (mesh.faces == 0) throw NoValidCells();
  return mesh;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace transurf::io
