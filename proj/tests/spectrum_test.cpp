#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fidzero/spectrum.hpp"

using namespace fidzero;

namespace {
constexpr double kPi = std::numbers::pi;
const ModelSpec kKitaev = ModelSpec::kitaev();

double grid_min_gap(const ModelSpec& model, int size_l, Complex gamma) {
  double best = std::numeric_limits<double>::infinity();
  for (const Momentum& k : momentum_grid(model, size_l).points)
    best = std::min(best, re_gap(model, k, gamma));
  return best;
}
}  // namespace

TEST_CASE("re_gap closed form") {
  // k = pi/2, mu = 0.3i: radicand = 0.36 - 0.09 = 0.27 up to rounding.
  CHECK(re_gap(kKitaev, {kPi / 2, 0.0}, Complex{0.0, 0.3}) ==
        doctest::Approx(2.0 * std::sqrt(0.27)).epsilon(1e-12));

  // On the zero ray of k = 2pi/3 (real part 0.5, branch point 0.27 < 0.81)
  // the real parts of the two bands coincide.
  CHECK(re_gap(kKitaev, {2 * kPi / 3, 0.0}, Complex{0.5, 0.9}) < 1e-12);
}

TEST_CASE("e_min finds interior zeros and reports them as exact") {
  const GapResult r = e_min(kKitaev, Complex{0.5, 0.9});
  CHECK(r.value == 0.0);
  CHECK(r.converged);
}

TEST_CASE("e_min on the gapped real axis") {
  const GapResult r = e_min(kKitaev, Complex{0.0, 0.0});
  CHECK(r.value == doctest::Approx(1.2).epsilon(1e-9));
  CHECK(r.argmin_momentum.kx == doctest::Approx(kPi / 2).epsilon(1e-6));
  CHECK(r.converged);
}

TEST_CASE("e_min resolution validation and refinement monotonicity") {
  CHECK_THROWS_AS(e_min(kKitaev, Complex{}, EminOptions{32, true}),
                  std::invalid_argument);
  CHECK_NOTHROW(e_min(kKitaev, Complex{}, EminOptions{0, true}));

  // Doubling the unrefined sampling never loses the coarser grid's points.
  const Complex gamma{0.37, 0.41};
  const double e64 = e_min(kKitaev, gamma, EminOptions{64, false}).value;
  const double e128 = e_min(kKitaev, gamma, EminOptions{128, false}).value;
  const double e256 = e_min(kKitaev, gamma, EminOptions{256, false}).value;
  CHECK(e128 <= e64);
  CHECK(e256 <= e128);
}

TEST_CASE("finite-lattice gaps are bounded below by the continuum minimum") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 0; n < 25; ++n) {
    const Complex gamma{u(rng), u(rng)};
    const double cont = e_min(kKitaev, gamma).value;
    CHECK(grid_min_gap(kKitaev, 16, gamma) >= cont - 1e-10);
  }
}

TEST_CASE("zero locus of a single momentum") {
  // Kitaev, k = pi/4: vertical ray at -cos(pi/4) starting at 0.6|sin(pi/4)|.
  CHECK(zero_locus_real_part(kKitaev, {kPi / 4, 0.0}) ==
        doctest::Approx(-std::cos(kPi / 4)).epsilon(1e-15));
  CHECK(zero_locus_im_bound_sq(kKitaev, {kPi / 4, 0.0}) ==
        doctest::Approx(0.18).epsilon(1e-12));

  // Haldane at the Dirac momentum: the ray starts on the real axis at the
  // phase boundary 3*sqrt(3)/4 for the default parameters.
  const ModelSpec hal = ModelSpec::haldane();
  const Momentum dirac{4 * kPi / (3 * std::numbers::sqrt3), 0.0};
  CHECK(std::abs(zero_locus_real_part(hal, dirac) +
                 3.0 * std::numbers::sqrt3 / 4.0) < 1e-14);
  CHECK(zero_locus_im_bound_sq(hal, dirac) < 1e-15);
}

TEST_CASE("continuum bound: closed forms in 1d") {
  // Ellipse: bound(x) = delta * sqrt(1 - x^2) inside |x| <= 1, +inf outside.
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  for (int n = 0; n < 50; ++n) {
    const double x = u(rng);
    CHECK(continuum_im_bound(kKitaev, x) ==
          doctest::Approx(0.6 * std::sqrt(1.0 - x * x)).epsilon(1e-12));
  }
  CHECK(continuum_im_bound(kKitaev, 0.0) == doctest::Approx(0.6));
  CHECK(continuum_im_bound(kKitaev, 1.0) == 0.0);
  CHECK(std::isinf(continuum_im_bound(kKitaev, 1.0000001)));

  const ModelSpec ssh = ModelSpec::ssh(-0.7);
  CHECK(continuum_im_bound(ssh, 0.0) == doctest::Approx(0.7));
  CHECK(std::isinf(continuum_im_bound(ssh, 0.71)));
}

TEST_CASE("continuum bound: qwz sweep against the closed form") {
  // Minimizing 2 - cos^2 kx - cos^2 ky on cos kx + cos ky = -x pushes one
  // cosine to +-1, giving bound^2 = 1 - (|x| - 1)^2 for |x| <= 2.
  const ModelSpec qwz = ModelSpec::qwz();
  for (const double x : {0.0, 0.3, 0.5, 1.0, 1.3, 1.7, 1.95, -0.8, -1.6}) {
    const double expect = std::sqrt(1.0 - (std::abs(x) - 1.0) *
                                              (std::abs(x) - 1.0));
    CHECK(std::abs(continuum_im_bound(qwz, x) - expect) < 1e-3);
  }
  CHECK(continuum_im_bound(qwz, 0.0) < 1e-6);
  CHECK(std::isinf(continuum_im_bound(qwz, 2.05)));
}

TEST_CASE("membership frozen cases") {
  CHECK(zero_region_membership(kKitaev, Complex{0.5, 0.9}));
  CHECK_FALSE(zero_region_membership(kKitaev, Complex{1.2, 0.05}));
  CHECK_FALSE(zero_region_membership(kKitaev, Complex{0.5, 0.3}));
  CHECK(zero_region_membership(ModelSpec::qwz(), Complex{}));
}

TEST_CASE("membership agrees with the continuum gap minimum") {
  // Points well away from the region boundary: inside the zero region the
  // continuum minimum vanishes, outside it stays finite.
  struct Setup {
    ModelSpec model;
    double x_range, y_range;
  };
  const Setup setups[] = {
      {ModelSpec::kitaev(), 1.5, 1.2},
      {ModelSpec::ssh(), 1.5, 1.2},
      {ModelSpec::haldane(), 1.6, 1.2},
      {ModelSpec::qwz(), 2.5, 1.2},
  };
  std::mt19937 rng(43);
  for (const Setup& s : setups) {
    std::uniform_real_distribution<double> ux(-s.x_range, s.x_range);
    std::uniform_real_distribution<double> uy(-s.y_range, s.y_range);
    int tested = 0;
    const auto crits = critical_points(s.model);
    while (tested < 25) {
      const Complex gamma{ux(rng), uy(rng)};
      bool near_edge = false;
      for (const double c : crits)
        near_edge = near_edge || std::abs(std::abs(gamma.real()) -
                                          std::abs(c)) < 1e-3;
      if (near_edge) continue;
      const double bound = continuum_im_bound(s.model, gamma.real());
      if (std::isfinite(bound) &&
          std::abs(std::abs(gamma.imag()) - bound) < 1e-3)
        continue;
      ++tested;
      const bool member = zero_region_membership(s.model, gamma);
      const bool closes = e_min(s.model, gamma).value < 1e-8;
      CHECK(member == closes);
    }
  }
}
