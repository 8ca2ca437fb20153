#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fidzero/fidelity.hpp"

using namespace fidzero;

namespace {
constexpr double kPi = std::numbers::pi;
const ModelSpec kKitaev = ModelSpec::kitaev();
}  // namespace

TEST_CASE("fidelity of a point with itself is 1") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 0; n < 50; ++n) {
    const Complex gamma{u(rng), u(rng)};
    const Momentum k{std::abs(u(rng)) * 2.0, 0.0};
    const double f = mode_fidelity(kKitaev, k, gamma, gamma);
    CHECK(std::abs(f - 1.0) < 1e-12);
  }
  const auto total = total_fidelity(kKitaev, 16, Complex{0.4, 0.3},
                                    Complex{0.4, 0.3});
  CHECK(std::abs(total.value - 1.0) < 1e-10);
}

TEST_CASE("fidelity is symmetric and clamped to [0, 1]") {
  std::mt19937 rng(32);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> uk(0.0, kPi);
  for (int n = 0; n < 200; ++n) {
    const Momentum k{uk(rng), 0.0};
    const Complex a{u(rng), u(rng)};
    const Complex b = a + Complex{0.005, 0.005};
    const double fab = mode_fidelity(kKitaev, k, a, b, Strictness::lenient);
    const double fba = mode_fidelity(kKitaev, k, b, a, Strictness::lenient);
    CHECK(fab == fba);  // the two overlaps swap roles, the product commutes
    CHECK(fab >= 0.0);
    CHECK(fab <= 1.0);
  }
}

TEST_CASE("mode fidelity dips across a transition and not away from it") {
  // k = pi: the off-diagonal pairing term vanishes, so the two sides of
  // mu = 1 have orthogonal ground states even for a tiny displacement.
  const Complex eps{0.0005, 0.0005};
  const double f_cross = mode_fidelity(kKitaev, {kPi, 0.0}, Complex{1.0} + eps,
                                       Complex{1.0} - eps);
  CHECK(f_cross < 0.05);

  const double f_far = mode_fidelity(kKitaev, {kPi / 2, 0.0},
                                     Complex{3.005, 0.005},
                                     Complex{2.995, -0.005});
  CHECK(f_far > 0.999);
}

TEST_CASE("mode fidelity detects straddling of the zero ray") {
  // Mode k has its zero ray at real part w = -cos k, starting at
  // |Im gamma| = sqrt(B), B = delta^2 sin^2 k. A displacement crossing the
  // ray inside that region swaps the ground state; one parallel to it does
  // not.
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> uk(0.2, kPi - 0.2);
  for (int n = 0; n < 60; ++n) {
    const double k = uk(rng);
    const double w = -std::cos(k);
    const double cap_b = 0.36 * std::sin(k) * std::sin(k);
    const double y = std::sqrt(1.2 * cap_b + 0.09);

    const double f_cross =
        mode_fidelity(kKitaev, {k, 0.0}, Complex{w + 0.004, y},
                      Complex{w - 0.004, y});
    CHECK(f_cross < 0.5);

    const double f_beside =
        mode_fidelity(kKitaev, {k, 0.0}, Complex{w + 0.058, y},
                      Complex{w + 0.05, y});
    CHECK(f_beside > 0.5);
  }
}

TEST_CASE("conjugating gamma and the displacement mirrors the result") {
  std::mt19937 rng(34);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  const Complex dg = kDefaultDisplacement;
  for (int n = 0; n < 100; ++n) {
    const Complex gamma{u(rng), u(rng)};
    const auto direct = f_min(kKitaev, 16, gamma, dg);
    const auto mirror = f_min(kKitaev, 16, std::conj(gamma), std::conj(dg));
    CHECK(direct.value == mirror.value);
    CHECK(direct.argmin_index == mirror.argmin_index);
  }
}

TEST_CASE("total fidelity is the product of the mode factors in grid order") {
  const auto grid = momentum_grid(kKitaev, 16);
  std::mt19937 rng(35);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int n = 0; n < 20; ++n) {
    const Complex a{u(rng), u(rng)};
    const Complex b = a + Complex{0.01, 0.01};
    FidelityFlags flags;
    double product = 1.0;
    for (const Momentum& k : grid.points)
      product *= mode_fidelity(kKitaev, k, a, b, Strictness::strict, &flags);
    const auto total = total_fidelity(kKitaev, grid, a, b);
    CHECK(total.value == product);
  }
}

TEST_CASE("f_min finds the dipping mode and reports its momentum") {
  {
    // gamma sits on the k = pi/4 ray (w = -cos(pi/4), B = 0.18, y^2 > B).
    const auto r = f_min(kKitaev, 16, Complex{-0.7071, 0.9});
    CHECK(r.value < 0.1);
    CHECK(r.argmin_index == 2);
    CHECK(r.argmin_momentum.kx == doctest::Approx(kPi / 4));
  }
  {
    // Same real part but below the branch point of the ray: no zero there.
    const auto r = f_min(kKitaev, 16, Complex{-0.7071, 0.3});
    CHECK(r.value > 0.9);
  }
}

TEST_CASE("fused cell evaluation matches the individual reductions") {
  const auto grid = momentum_grid(kKitaev, 16);
  std::mt19937 rng(36);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  for (int n = 0; n < 40; ++n) {
    const Complex gamma{u(rng), u(rng)};
    const auto cell =
        cell_fidelity(kKitaev, grid, gamma, kDefaultDisplacement);
    const auto fm = f_min(kKitaev, grid, gamma, kDefaultDisplacement);
    const auto half = 0.5 * kDefaultDisplacement;
    const auto tot = total_fidelity(kKitaev, grid, gamma + half, gamma - half);
    CHECK(cell.f_min == fm.value);
    CHECK(cell.argmin_index == fm.argmin_index);
    CHECK(cell.total == tot.value);
  }
}

TEST_CASE("exceptional point handling") {
  // gamma + dg/2 lands on mu = -1 up to one rounding, where the k = 0 mode
  // is defective.
  const Complex dg = kDefaultDisplacement;
  const Complex gamma = Complex{-1.0, 0.0} - 0.5 * dg;

  CHECK_THROWS_AS((void)f_min(kKitaev, 16, gamma, dg, Strictness::strict),
                  DegenerateModeError);

  const auto r = f_min(kKitaev, 16, gamma, dg, Strictness::lenient);
  CHECK(r.value == 0.0);
  CHECK(r.flags.exceptional_point);
  CHECK(r.flags.lenient_mode);
  CHECK(r.argmin_index == 0);

  // The direct mode call at the exact degeneracy behaves the same way.
  CHECK_THROWS_AS((void)mode_fidelity(kKitaev, {0.0, 0.0}, Complex{-1.0, 0.0},
                                      Complex{-1.01, -0.01}),
                  DegenerateModeError);
  FidelityFlags flags;
  const double f =
      mode_fidelity(kKitaev, {0.0, 0.0}, Complex{-1.0, 0.0},
                    Complex{-1.01, -0.01}, Strictness::lenient, &flags);
  CHECK(f == 0.0);
  CHECK(flags.exceptional_point);
  CHECK(flags.lenient_mode);
}

TEST_CASE("a real-part tie is computed, not refused") {
  // On the imaginary axis the k = pi/2 bands have Re E+ = Re E- once
  // |Im gamma| exceeds the branch point at 0.6.
  FidelityFlags flags;
  const double f = mode_fidelity(kKitaev, {kPi / 2, 0.0}, Complex{0.0, 0.8},
                                 Complex{0.0, 0.9}, Strictness::strict,
                                 &flags);
  CHECK(flags.real_part_tie);
  CHECK_FALSE(flags.exceptional_point);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);
}

TEST_CASE("a zero displacement is rejected") {
  CHECK_THROWS_AS((void)f_min(kKitaev, 16, Complex{0.5, 0.5}, Complex{}),
                  std::invalid_argument);
}
