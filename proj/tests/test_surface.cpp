#include <doctest.h>

#include <cmath>
#include <random>

#include "transurf/genesis.hpp"
#include "transurf/surface.hpp"
#include "transurf/weingarten.hpp"

using namespace transurf;

namespace {

TranslationSurface surface(std::string f, std::string g, Ambient ambient = Ambient::Euclidean) {
  TranslationSurface s;
  s.f = Profile::parse(f);
  s.g = Profile::parse(g);
  s.ambient = ambient;
  return s;
}

bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-3});
}

}  // namespace

TEST_CASE("closed-form curvature at hand-checked points") {
  const auto plane = translation_curvature(surface("0", "0"), 0.4, -1.3);
  CHECK(plane.valid);
  CHECK(plane.H == 0);
  CHECK(plane.K == 0);
  CHECK(plane.W == 1);

  const auto scherk = translation_curvature(make_family({Family::Scherk, 1.0, ""}), 0, 0);
  CHECK(std::abs(scherk.H) < 1e-15);
  CHECK(scherk.K == doctest::Approx(-1).epsilon(1e-15));
  CHECK(scherk.W == 1);

  const auto para = translation_curvature(surface("t^2", "t^2"), 0, 0);
  CHECK(para.H == doctest::Approx(2));
  CHECK(para.K == doctest::Approx(4));
  CHECK(para.W == 1);

  for (double y : {-2.0, 0.0, 0.7}) {
    const auto cyl = translation_curvature(surface("t^2", "0"), 1, y);
    CHECK(cyl.K == 0);
    CHECK(cyl.W == doctest::Approx(5));
    CHECK(cyl.H == doctest::Approx(2 / (2 * std::pow(5.0, 1.5))).epsilon(1e-14));
    CHECK(cyl.H == doctest::Approx(0.089443).epsilon(1e-5));
  }

  const auto spacelike = translation_curvature(surface("t^2/4", "0", Ambient::LorentzSpacelike), 0, 0);
  CHECK(spacelike.valid);
  CHECK(spacelike.K == 0);
  CHECK(spacelike.H == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(spacelike.W == 1);
}

TEST_CASE("general immersion agrees with the translation formulas") {
  const auto plane = general_curvature(graph_immersion(surface("0", "0"), 0.2, 0.1), Ambient::Euclidean);
  CHECK(plane.H == 0);
  CHECK(plane.K == 0);

  const auto s1 = make_family({Family::Scherk, 1.0, ""});
  const auto a = translation_curvature(s1, 0, 0), b = general_curvature(graph_immersion(s1, 0, 0), s1.ambient);
  CHECK(std::abs(a.H - b.H) < 1e-12);
  CHECK(std::abs(a.K - b.K) < 1e-12);

  const auto para = surface("t^2", "t^2");
  const auto c = translation_curvature(para, 0.3, -0.2);
  const auto d = general_curvature(graph_immersion(para, 0.3, -0.2), para.ambient);
  CHECK(std::abs(c.H - d.H) < 1e-12);
  CHECK(std::abs(c.K - d.K) < 1e-12);
}

TEST_CASE("oracle equivalence on random profiles, every ambient") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(-0.8, 0.8);
  for (Ambient ambient : {Ambient::Euclidean, Ambient::LorentzSpacelike, Ambient::LorentzTimelikeXZ,
                          Ambient::LorentzTimelikeYZ}) {
    int compared = 0;
    for (int i = 0; i < 50; ++i) {
      const auto s = surface(random_profile(rng), random_profile(rng), ambient);
      for (int k = 0; k < 20; ++k) {
        const double x = coord(rng), y = coord(rng);
        const auto t = translation_curvature(s, x, y);
        if (!t.valid) continue;
        CurvatureSample g;
        try {
          g = general_curvature(graph_immersion(s, x, y), ambient);
        } catch (const DegenerateMetric&) {
          continue;
        }
        INFO(to_string(ambient), " f=", s.f.source(), " g=", s.g.source(), " at ", x, ",", y);
        CHECK(rel_close(t.H, g.H, 1e-10));
        CHECK(rel_close(t.K, g.K, 1e-10));
        ++compared;
      }
    }
    CHECK(compared > 200);
  }
}

TEST_CASE("swapping the profiles swaps the sample point") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-0.8, 0.8);
  for (int i = 0; i < 50; ++i) {
    const std::string f = random_profile(rng), g = random_profile(rng);
    const auto fg = surface(f, g), gf = surface(g, f);
    const double x = coord(rng), y = coord(rng);
    const auto a = translation_curvature(fg, x, y), b = translation_curvature(gf, y, x);
    REQUIRE(a.valid == b.valid);
    if (!a.valid) continue;
    CHECK(rel_close(a.H, b.H, 1e-13));
    CHECK(rel_close(a.K, b.K, 1e-13));
  }
}

TEST_CASE("linear g gives a flat surface") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coord(-0.8, 0.8), slope(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const auto s = surface(random_profile(rng), std::to_string(std::abs(slope(rng))) + "*t + 0.5");
    const auto c = translation_curvature(s, coord(rng), coord(rng));
    if (c.valid) CHECK(c.K == 0);
  }
}

TEST_CASE("negating both profiles flips H and keeps K") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(-0.8, 0.8);
  for (int i = 0; i < 50; ++i) {
    const std::string f = random_profile(rng), g = random_profile(rng);
    const auto p = surface(f, g), n = surface("-(" + f + ")", "-(" + g + ")");
    const double x = coord(rng), y = coord(rng);
    const auto a = translation_curvature(p, x, y), b = translation_curvature(n, x, y);
    REQUIRE(a.valid == b.valid);
    if (!a.valid) continue;
    CHECK(a.H == -b.H);
    CHECK(a.K == b.K);
  }
}

TEST_CASE("invalid samples are flagged, not thrown") {
  // W = 1 - 4x^2 on the spacelike graph z = x^2.
  const auto s = surface("t^2", "0", Ambient::LorentzSpacelike);
  CHECK(translation_curvature(s, 0.4, 0).valid);
  const auto out = translation_curvature(s, 0.6, 0);
  CHECK_FALSE(out.valid);
  CHECK_FALSE(out.reason.empty());
  CHECK_FALSE(translation_curvature(surface("t", "0", Ambient::LorentzSpacelike), 0, 0).valid);

  const auto pole = translation_curvature(surface("log(t)", "0"), -1, 0);
  CHECK_FALSE(pole.valid);
  CHECK_FALSE(pole.reason.empty());

  const auto grid = sample_grid(s, GridSpec{-1, 1, 11, 0, 1, 2});
  REQUIRE(grid.size() == 22);
  for (const auto& c : grid) CHECK(c.valid == (std::abs(c.x) < 0.5 - 1e-12));
}

TEST_CASE("grid sampling") {
  const auto plane = sample_grid(surface("0", "0"), GridSpec{0, 1, 3, 0, 1, 3});
  REQUIRE(plane.size() == 9);
  for (const auto& c : plane) {
    CHECK(c.H == 0);
    CHECK(c.K == 0);
  }
  // row-major, x fastest
  CHECK(plane[1].x == 0.5);
  CHECK(plane[1].y == 0);
  CHECK(plane[3].y == 0.5);

  const auto scherk = sample_grid(make_family({Family::Scherk, 1.0, ""}), GridSpec{-1, 1, 11, -1, 1, 11});
  REQUIRE(scherk.size() == 121);
  double worst = 0;
  for (const auto& c : scherk) {
    CHECK(c.valid);
    worst = std::max(worst, std::abs(c.H));
  }
  CHECK(worst < 1e-10);

  CHECK_THROWS_AS(sample_grid(surface("t", "0", Ambient::LorentzSpacelike), GridSpec{0, 1, 3, 0, 1, 3}),
                  NoAdmissibleSamples);
  CHECK_THROWS_AS(sample_grid(surface("0", "0"), GridSpec{0, 1, 1, 0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(sample_grid(surface("0", "0"), GridSpec{1, 0, 3, 0, 1, 3}), std::invalid_argument);
  // Scherk lambda = 1 lives in |x|, |y| < pi/2 minus a margin.
  CHECK_THROWS_AS(sample_grid(make_family({Family::Scherk, 1.0, ""}), GridSpec{-2, 2, 3, -1, 1, 3}),
                  std::invalid_argument);
}

TEST_CASE("table profiles interpolate with Hermite cubics") {
  std::vector<TableProfile::Row> rows;
  for (int i = 0; i <= 10; ++i) {
    const double x = i * 0.1;
    rows.push_back({x, x * x * x, 3 * x * x});
  }
  const TableProfile table(rows);
  // cubic data is reproduced exactly by cubic Hermite pieces
  for (double t : {0.0, 0.05, 0.33, 0.999, 1.0}) {
    const Jet3 j = table.jet(t);
    CHECK(j.c0 == doctest::Approx(t * t * t).epsilon(1e-12));
    CHECK(j.c1 == doctest::Approx(3 * t * t).epsilon(1e-12));
    CHECK(j.c2 == doctest::Approx(6 * t).epsilon(1e-10));
  }
  CHECK_THROWS_AS(table.jet(1.5), DomainError);
}
