#include "fidzero/zeros.hpp"

#include <algorithm>
#include <cmath>

namespace fidzero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMergeTol = 1e-9;    // real parts closer than this are one line
constexpr double kBisectTol = 1e-10;  // root refinement width

}  // namespace

std::vector<ZeroLine> analytic_zero_lines(const ModelSpec& model,
                                          int size_l) {
  const MomentumGrid grid = momentum_grid(model, size_l);
  struct Entry {
    double w;
    double bound_sq;
    Momentum k;
  };
  std::vector<Entry> entries;
  entries.reserve(grid.points.size());
  for (const Momentum& k : grid.points)
    entries.push_back(
        {zero_locus_real_part(model, k), zero_locus_im_bound_sq(model, k), k});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.w < b.w; });

  std::vector<ZeroLine> lines;
  for (const Entry& e : entries) {
    if (lines.empty() || e.w - lines.back().real_part > kMergeTol) {
      ZeroLine line;
      line.kind = model.kind;
      line.real_part = e.w;
      line.im_abs_min = std::sqrt(e.bound_sq);
      line.momenta = {e.k};
      lines.push_back(std::move(line));
    } else {
      ZeroLine& line = lines.back();
      line.im_abs_min = std::min(line.im_abs_min, std::sqrt(e.bound_sq));
      line.momenta.push_back(e.k);
    }
  }
  return lines;
}

std::vector<Complex> kitaev_region_boundary(double delta, int samples) {
  if (delta == 0.0 || !std::isfinite(delta))
    throw std::invalid_argument(
        "kitaev_region_boundary: delta must be finite and nonzero");
  if (samples < 2)
    throw std::invalid_argument(
        "kitaev_region_boundary: need at least 2 samples");
  std::vector<Complex> curve;
  curve.reserve(samples);
  for (int j = 0; j < samples; ++j) {
    const double k = 2.0 * kPi * j / samples;
    curve.emplace_back(-std::cos(k), delta * std::sin(k));
  }
  return curve;
}

ZeroExtraction extract_zeros(const ScanResult& scan, double threshold) {
  if (scan.fmin.empty())
    throw std::invalid_argument("extract_zeros: scan has no f_min grid");
  const ScanConfig& cfg = scan.config;
  const MomentumGrid grid = momentum_grid(cfg.model, cfg.size_l);

  ZeroExtraction out;
  struct Root {
    double x;
    double im;
  };
  std::vector<Root> roots;
  std::vector<double> row_roots;

  for (int r = 0; r < cfg.n_im; ++r) {
    const double im = cfg.im_at(r);
    row_roots.clear();
    for (int c = 1; c + 1 < cfg.n_re; ++c) {
      const double f = scan.fmin[scan.index(r, c)];
      if (f >= threshold) continue;
      if (f > scan.fmin[scan.index(r, c - 1)] ||
          f > scan.fmin[scan.index(r, c + 1)])
        continue;

      int mode = scan.argmin.empty() ? -1 : scan.argmin[scan.index(r, c)];
      if (mode < 0)
        mode = f_min(cfg.model, grid, {cfg.re_at(c), im}, cfg.delta_gamma,
                     Strictness::lenient)
                   .argmin_index;
      const Momentum k = grid.points[mode];
      const auto im_s = [&](double x) {
        return radicand(d_vector(cfg.model, k, {x, im})).imag();
      };

      double lo = cfg.re_at(c - 1), hi = cfg.re_at(c + 1);
      const double flo = im_s(lo), fhi = im_s(hi);
      bool confirmed = false;
      double root = 0.0;
      if (flo * fhi < 0.0) {
        const bool lo_positive = flo > 0.0;
        while (hi - lo > kBisectTol) {
          const double mid = 0.5 * (lo + hi);
          const double fm = im_s(mid);
          if (fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((fm > 0.0) == lo_positive)
            lo = mid;
          else
            hi = mid;
        }
        root = 0.5 * (lo + hi);
        // The crossing is a zero only if the radicand actually passes over
        // the square root's branch cut there.
        confirmed = radicand(d_vector(cfg.model, k, {root, im})).real() < 0.0;
      }
      if (confirmed)
        row_roots.push_back(root);
      else
        out.unconfirmed.push_back({cfg.re_at(c), im, f});
    }
    std::sort(row_roots.begin(), row_roots.end());
    for (std::size_t i = 0; i < row_roots.size(); ++i) {
      if (i > 0 && row_roots[i] - row_roots[i - 1] < 1e-8) continue;
      roots.push_back({row_roots[i], im});
    }
  }

  std::stable_sort(roots.begin(), roots.end(),
                   [](const Root& a, const Root& b) { return a.x < b.x; });
  const double cluster_tol = 0.5 * cfg.re_step();
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i + 1;
    while (j < roots.size() && roots[j].x - roots[j - 1].x <= cluster_tol)
      ++j;
    DetectedLine line;
    double sum = 0.0;
    line.im_min = roots[i].im;
    line.im_max = roots[i].im;
    for (std::size_t m = i; m < j; ++m) {
      sum += roots[m].x;
      line.im_min = std::min(line.im_min, roots[m].im);
      line.im_max = std::max(line.im_max, roots[m].im);
    }
    line.support = static_cast<int>(j - i);
    line.real_part = sum / line.support;
    out.lines.push_back(line);
    i = j;
  }
  return out;
}

BoundaryEstimate boundary_estimate(const ModelSpec& model, int size_l) {
  const std::vector<ZeroLine> lines = analytic_zero_lines(model, size_l);
  const std::vector<double> crit = critical_points(model);
  BoundaryEstimate est;
  est.kind = model.kind;
  est.size_l = size_l;
  est.min_real = lines.front().real_part;
  est.max_real = lines.back().real_part;
  est.critical_lo = crit.front();
  est.critical_hi = crit.back();
  est.gap_to_critical = std::max(std::abs(est.max_real - est.critical_hi),
                                 std::abs(est.min_real - est.critical_lo));
  est.continuum_bound = continuum_real_part_bound(model);
  return est;
}

double continuum_real_part_bound(const ModelSpec& model) {
  const std::vector<double> crit = critical_points(model);
  return std::max(std::abs(crit.front()), std::abs(crit.back()));
}

std::vector<BoundaryEstimate> run_convergence_study(
    const ModelSpec& model, const std::vector<int>& l_list) {
  if (l_list.empty())
    throw std::invalid_argument("convergence study: empty L list");
  std::vector<BoundaryEstimate> table;
  table.reserve(l_list.size());
  for (int l : l_list) table.push_back(boundary_estimate(model, l));
  return table;
}

}  // namespace fidzero
