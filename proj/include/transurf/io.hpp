#pragma once

// File formats: surface JSON, sample CSV, profile CSV, fit/audit/verification
// JSON and Wavefront OBJ meshes.

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "transurf/algebra/verify.hpp"
#include "transurf/genesis.hpp"
#include "transurf/surface.hpp"
#include "transurf/weingarten.hpp"

namespace transurf::io {

using Json = nlohmann::ordered_json;

/// Malformed surface document or family parameters.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Textual description of a translation surface, as read from or written to
/// surface JSON.
struct SurfaceSpec {
  std::string f = "0";
  std::string g = "0";
  Ambient ambient = Ambient::Euclidean;
  std::optional<Interval> domain_f;
  std::optional<Interval> domain_g;

  /// Throws SpecError for unparsable profiles.
  TranslationSurface build() const;
};

SurfaceSpec family_spec(const FamilySpec& family);

/// Accepts expression strings or {"family": ..., "lambda": ..., "profile": ...}
/// objects in the f and g slots. Throws SpecError.
SurfaceSpec parse_surface(const Json& doc);
SurfaceSpec read_surface_file(const std::filesystem::path& path);
Json to_json(const SurfaceSpec& spec);

/// Doubles with 17 significant digits.
std::string format_double(double v);

std::string samples_csv(const std::vector<CurvatureSample>& samples);
std::string profile_csv(const ProfileTable& table);

Json to_json(const WeingartenFit& fit);
Json to_json(const AuditReport& report);
Json to_json(const algebra::Report& report);
Json to_json(const std::vector<algebra::Report>& reports);

class NoValidCells : public std::runtime_error {
 public:
  NoValidCells() : std::runtime_error("no valid grid cell") {}
};

struct Mesh {
  std::string obj;
  std::size_t vertices = 0;
  std::size_t faces = 0;
};

/// One vertex per valid sample (row-major) and a quad per cell whose four
/// corners are valid. Throws NoValidCells when there is no quad.
Mesh mesh_obj(const TranslationSurface& surface, const GridSpec& grid);

/// Writes to a sibling temporary file and renames it into place.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace transurf::io
