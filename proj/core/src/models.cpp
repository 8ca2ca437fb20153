#include "fidzero/models.hpp"

#include <algorithm>
#include <cmath>

namespace fidzero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ModelSpec ModelSpec::kitaev(double delta, bool full_zone) {
  ModelSpec m;
  m.kind = ModelKind::kitaev;
  m.delta = delta;
  m.kitaev_full_zone = full_zone;
  m.validate();
  return m;
}

ModelSpec ModelSpec::ssh(double t2) {
  ModelSpec m;
  m.kind = ModelKind::ssh;
  m.t2 = t2;
  m.validate();
  return m;
}

ModelSpec ModelSpec::haldane(double t1, double t2, double theta) {
  ModelSpec m;
  m.kind = ModelKind::haldane;
  m.t1 = t1;
  m.t2 = t2;
  m.theta = theta;
  m.validate();
  return m;
}

ModelSpec ModelSpec::qwz() {
  ModelSpec m;
  m.kind = ModelKind::qwz;
  m.validate();
  return m;
}

ModelSpec ModelSpec::by_name(const std::string& name) {
  if (name == "kitaev") return kitaev();
  if (name == "ssh") return ssh();
  if (name == "haldane") return haldane();
  if (name == "qwz") return qwz();
  throw std::invalid_argument("unknown model: " + name);
}

int ModelSpec::dimension() const {
  return (kind == ModelKind::kitaev || kind == ModelKind::ssh) ? 1 : 2;
}

std::string ModelSpec::name() const {
  switch (kind) {
    case ModelKind::kitaev: return "kitaev";
    case ModelKind::ssh: return "ssh";
    case ModelKind::haldane: return "haldane";
    case ModelKind::qwz: return "qwz";
  }
  throw std::invalid_argument("unknown model kind");
}

std::string ModelSpec::driving_symbol() const {
  switch (kind) {
    case ModelKind::kitaev: return "mu";
    case ModelKind::ssh: return "t1";
    case ModelKind::haldane: return "M";
    case ModelKind::qwz: return "u";
  }
  throw std::invalid_argument("unknown model kind");
}

void ModelSpec::validate() const {
  switch (kind) {
    case ModelKind::kitaev:
      if (!std::isfinite(delta) || delta == 0.0)
        throw std::invalid_argument("kitaev: delta must be finite and nonzero");
      break;
    case ModelKind::ssh:
      if (!std::isfinite(t2) || t2 == 0.0)
        throw std::invalid_argument("ssh: t2 must be finite and nonzero");
      break;
    case ModelKind::haldane:
      if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(theta))
        throw std::invalid_argument("haldane: t1, t2, theta must be finite");
      break;
    case ModelKind::qwz:
      break;
  }
}

MomentumGrid momentum_grid(const ModelSpec& model, int size_l) {
  model.validate();
  if (size_l < 2)
    throw std::invalid_argument("momentum_grid: L must be at least 2");
  const int one_d = model.dimension() == 1;
  if (one_d && size_l % 2 != 0)
    throw std::invalid_argument("momentum_grid: L must be even for 1d models");

  MomentumGrid g;
  g.kind = model.kind;
  g.size_l = size_l;
  const double L = size_l;
  switch (model.kind) {
    case ModelKind::kitaev:
      if (model.kitaev_full_zone) {
        for (int m = -size_l / 2 + 1; m <= size_l / 2; ++m)
          g.points.push_back({2.0 * kPi * m / L, 0.0});
      } else {
        for (int m = 0; m <= size_l / 2; ++m)
          g.points.push_back({2.0 * kPi * m / L, 0.0});
      }
      break;
    case ModelKind::ssh:
      for (int m = -size_l / 2 + 1; m <= size_l / 2; ++m)
        g.points.push_back({2.0 * kPi * m / L, 0.0});
      break;
    case ModelKind::haldane:
      for (int mx = 1; mx <= size_l; ++mx)
        for (int my = 1; my <= size_l; ++my)
          g.points.push_back(
              {2.0 * kPi * mx / (kSqrt3 * L), 4.0 * kPi * my / (3.0 * L)});
      break;
    case ModelKind::qwz:
      for (int mx = 1; mx <= size_l; ++mx)
        for (int my = 1; my <= size_l; ++my)
          g.points.push_back({2.0 * kPi * mx / L, 2.0 * kPi * my / L});
      break;
  }
  return g;
}

DVector d_vector(const ModelSpec& model, const Momentum& k, Complex gamma) {
  model.validate();
  if (!is_finite(gamma))
    throw std::invalid_argument("d_vector: non-finite driving parameter");

  switch (model.kind) {
    case ModelKind::kitaev: {
      // mu = gamma, t = 1
      return DVector{Complex{}, Complex{},
                     Complex{-model.delta * std::sin(k.kx)},
                     -gamma - std::cos(k.kx)};
    }
    case ModelKind::ssh: {
      // t1 = gamma
      return DVector{Complex{}, gamma + model.t2 * std::cos(k.kx),
                     Complex{model.t2 * std::sin(k.kx)}, Complex{}};
    }
    case ModelKind::haldane: {
      // M = gamma
      const double a = kSqrt3 * 0.5 * k.kx;  // sqrt(3)/2 kx
      const double b = 1.5 * k.ky;           // 3/2 ky
      const double ca = std::cos(a), sa = std::sin(a);
      const double c2a = std::cos(2.0 * a), s2a = std::sin(2.0 * a);
      const double cb = std::cos(b);
      const double d0 =
          2.0 * model.t2 * std::cos(model.theta) * (c2a + 2.0 * ca * cb);
      const double d1 =
          model.t1 * (std::cos(k.ky) + 2.0 * ca * std::cos(0.5 * k.ky));
      const double d2 =
          model.t1 * (std::sin(k.ky) - 2.0 * ca * std::sin(0.5 * k.ky));
      const double w =
          2.0 * model.t2 * std::sin(model.theta) * (s2a - 2.0 * sa * cb);
      return DVector{Complex{d0}, Complex{d1}, Complex{d2}, gamma - w};
    }
    case ModelKind::qwz: {
      // u = gamma
      return DVector{Complex{}, Complex{std::sin(k.kx)},
                     Complex{std::sin(k.ky)},
                     gamma + std::cos(k.kx) + std::cos(k.ky)};
    }
  }
  throw std::invalid_argument("unknown model kind");
}

std::vector<double> critical_points(const ModelSpec& model) {
  model.validate();
  switch (model.kind) {
    case ModelKind::kitaev:
      return {-1.0, 1.0};
    case ModelKind::ssh:
      return {-std::abs(model.t2), std::abs(model.t2)};
    case ModelKind::haldane: {
      const double c =
          std::abs(3.0 * kSqrt3 * model.t2 * std::sin(model.theta));
      return {-c, c};
    }
    case ModelKind::qwz:
      return {-2.0, 0.0, 2.0};
  }
  throw std::invalid_argument("unknown model kind");
}

}  // namespace fidzero
