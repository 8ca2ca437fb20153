#pragma once

#include "fidzero/models.hpp"

namespace fidzero {

/// |Re(E_+ - E_-)| = 2 |Re sqrt(d1^2 + d2^2 + d3^2)| at one momentum.
double re_gap(const ModelSpec& model, const Momentum& k, Complex gamma);

struct GapResult {
  double value = 0.0;
  Momentum argmin_momentum{};
  bool converged = false;
};

struct EminOptions {
  /// Coarse samples per Brillouin-zone dimension; 0 picks the default
  /// (1024 in 1d, 256 per axis in 2d). Minimum 64.
  int resolution = 0;
  bool refine = true;
};

/// Minimum of re_gap over the continuous Brillouin zone: a uniform coarse
/// sampling followed (optionally) by local per-coordinate descent around the
/// best sample. Refined values below 1e-10 are reported as exactly 0.
GapResult e_min(const ModelSpec& model, Complex gamma, EminOptions opts = {});

/// For one momentum, the real part of the energy gap vanishes on a vertical
/// locus in the complex driving-parameter plane:
///   Re(gamma) = zero_locus_real_part(k),
///   Im(gamma)^2 >= zero_locus_im_bound_sq(k).
double zero_locus_real_part(const ModelSpec& model, const Momentum& k);
double zero_locus_im_bound_sq(const ModelSpec& model, const Momentum& k);

/// Smallest |Im gamma| at which the continuous-momentum zero locus reaches
/// the vertical line Re gamma = re_gamma; +infinity when no momentum attains
/// that real part. Closed form in 1d, dense level-set sweep in 2d.
double continuum_im_bound(const ModelSpec& model, double re_gamma);

/// Whether gamma lies in the continuum support of the zero locus, i.e. some
/// continuous momentum has Re(E_+ - E_-) = 0 there.
bool zero_region_membership(const ModelSpec& model, Complex gamma);

}  // namespace fidzero
