#pragma once

#include "fidzero/scan.hpp"

namespace fidzero {

/// A finite-size zero locus: the pair of vertical rays Re(gamma) =
/// real_part, |Im(gamma)| >= im_abs_min, generated by one or more grid
/// momenta (merged when distinct momenta give the same line).
struct ZeroLine {
  ModelKind kind = ModelKind::kitaev;
  double real_part = 0.0;
  double im_abs_min = 0.0;
  std::vector<Momentum> momenta;
};

/// One line per distinct locus real part over momentum_grid(L), sorted
/// ascending. Real parts agreeing within 1e-9 merge into one line with the
/// smaller im_abs_min and the union of generating momenta.
std::vector<ZeroLine> analytic_zero_lines(const ModelSpec& model, int size_l);

/// Closed rim of the 1d chain's continuum zero-support region: samples of
/// -cos k + i delta sin k for k on [0, 2pi).
std::vector<Complex> kitaev_region_boundary(double delta, int samples);

struct DetectedLine {
  double real_part = 0.0;  // mean of the refined roots in the cluster
  double im_min = 0.0;     // imaginary-part range the cluster spans
  double im_max = 0.0;
  int support = 0;  // per-row detections merged into this line
};

struct UnconfirmedPoint {
  double re = 0.0, im = 0.0;
  double fmin = 0.0;
};

struct ZeroExtraction {
  std::vector<DetectedLine> lines;  // sorted by real_part
  std::vector<UnconfirmedPoint> unconfirmed;
};

/// Zero detection on a scanned F_min grid. Candidates are per-row interior
/// local minima below the threshold; each is refined along the row by
/// bisection on the sign of Im(d1^2+d2^2+d3^2) of its argmin mode (the
/// square root's branch-cut crossing) to 1e-10 and confirmed only when the
/// radicand at the root lies on the negative real axis. Confirmed roots are
/// clustered into vertical lines by real-coordinate proximity (half a grid
/// step); dips without a crossing are reported unconfirmed.
/// The default threshold is deliberately high: at coarse grid steps the
/// nearest column can sit several dip half-widths off a line, where the dip
/// bottoms out near 0.95. Confirmation by the sign-change bisection is
/// parameter-free, so a loose candidate gate costs only rejected candidates
/// (reported unconfirmed), never false lines.
ZeroExtraction extract_zeros(const ScanResult& scan, double threshold = 0.99);

struct BoundaryEstimate {
  ModelKind kind = ModelKind::kitaev;
  int size_l = 0;
  double min_real = 0.0, max_real = 0.0;
  double critical_lo = 0.0, critical_hi = 0.0;
  double gap_to_critical = 0.0;  // worse of the two sides
  double continuum_bound = 0.0;  // largest |real part| the locus can reach
};

/// Extremal zero-line real parts at size L against the model's critical
/// values.
BoundaryEstimate boundary_estimate(const ModelSpec& model, int size_l);

double continuum_real_part_bound(const ModelSpec& model);

/// boundary_estimate per L, in the given order.
std::vector<BoundaryEstimate> run_convergence_study(
    const ModelSpec& model, const std::vector<int>& l_list);

}  // namespace fidzero
