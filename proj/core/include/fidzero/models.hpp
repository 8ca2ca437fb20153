#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "fidzero/eig2.hpp"

namespace fidzero {

enum class ModelKind { kitaev, ssh, haldane, qwz };

/// Momentum in the Brillouin zone; one-dimensional models use kx only.
struct Momentum {
  double kx = 0.0;
  double ky = 0.0;
};

/// A lattice model together with its fixed real parameters. The driving
/// parameter gamma (mu, t1, M, u respectively) is passed separately and may
/// be complex.
struct ModelSpec {
  ModelKind kind = ModelKind::kitaev;
  double delta = 0.6;   // Kitaev pairing amplitude; the hopping t is 1
  double t1 = 1.0;      // Haldane nearest-neighbor hopping
  double t2 = -1.0;     // SSH inter-cell hopping / Haldane NNN hopping
  double theta = kDefaultTheta;  // Haldane flux phase
  bool kitaev_full_zone = false;

  static constexpr double kDefaultTheta = std::numbers::pi / 6.0;

  static ModelSpec kitaev(double delta = 0.6, bool full_zone = false);
  static ModelSpec ssh(double t2 = -1.0);
  static ModelSpec haldane(double t1 = 1.0, double t2 = 0.5,
                           double theta = kDefaultTheta);
  static ModelSpec qwz();
  /// "kitaev" | "ssh" | "haldane" | "qwz" with that model's defaults.
  static ModelSpec by_name(const std::string& name);

  int dimension() const;  // 1 or 2
  std::string name() const;
  /// Symbol of the complexified driving parameter: mu, t1, M, u.
  std::string driving_symbol() const;
  void validate() const;  // throws std::invalid_argument
};

/// Momentum quantization for a finite lattice of linear size L:
///   Kitaev:  k = 2 pi m / L, m = 0..L/2 (L even); with the full-zone
///            option m = -L/2+1..L/2 instead
///   SSH:     k = 2 pi m / L, m = -L/2+1..L/2 (L even)
///   Haldane: kx = 2 pi mx / (sqrt(3) L), ky = 4 pi my / (3 L), mx,my = 1..L
///   QWZ:     kx = 2 pi mx / L, ky = 2 pi my / L, mx,my = 1..L
/// 2d grids are ordered lexicographically, mx outer, my inner. Momenta are
/// stored as generated (QWZ reaches 2 pi rather than 0); trigonometric
/// evaluation reduces them exactly.
struct MomentumGrid {
  ModelKind kind = ModelKind::kitaev;
  int size_l = 0;
  std::vector<Momentum> points;
};

MomentumGrid momentum_grid(const ModelSpec& model, int size_l);

DVector d_vector(const ModelSpec& model, const Momentum& k, Complex gamma);

/// Real critical values of the driving parameter, ascending.
std::vector<double> critical_points(const ModelSpec& model);

}  // namespace fidzero
