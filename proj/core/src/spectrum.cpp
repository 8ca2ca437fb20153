#include "fidzero/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace fidzero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Bounds below this (squared scale) are trigonometric rounding noise at
// momenta that are exact multiples of pi; they are genuine zeros.
constexpr double kBoundSnapSq = 1e-24;

// Refined gap values below this are reported as exactly zero.
constexpr double kZeroSnap = 1e-10;

double snap_sq(double b) { return b < kBoundSnapSq ? 0.0 : b; }

struct BzDomain {
  int dims = 1;
  double width[2] = {2.0 * kPi, 0.0};
};

BzDomain bz_domain(const ModelSpec& model) {
  switch (model.kind) {
    case ModelKind::kitaev:
    case ModelKind::ssh:
      return {1, {2.0 * kPi, 0.0}};
    case ModelKind::haldane:
      // Fundamental domain of the gap function: it is invariant under the
      // glide (kx, ky) -> (kx + 2pi/sqrt(3), ky + 2pi/3), so one quarter of
      // the plain rectangular period suffices.
      return {2, {2.0 * kPi / kSqrt3, 4.0 * kPi / 3.0}};
    case ModelKind::qwz:
      return {2, {2.0 * kPi, 2.0 * kPi}};
  }
  throw std::invalid_argument("unknown model kind");
}

// Golden-section line minimization on [a, b]; returns the best point seen.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498948;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  double best_t = fc <= fd ? c : d;
  double best_f = std::min(fc, fd);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      if (fc < best_f) {
        best_f = fc;
        best_t = c;
      }
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      if (fd < best_f) {
        best_f = fd;
        best_t = d;
      }
    }
  }
  return {best_t, best_f};
}

// Streaming level-set sweep for the 2d models: minimum of the bound B over
// the curve w = re, detected by sign changes of w - re along grid edges of a
// full closed period (linear interpolation of B along the edge), plus exact
// node hits.
double sweep_min_bound_sq(const ModelSpec& model, double re) {
  constexpr int n = 1024;
  const bool haldane = model.kind == ModelKind::haldane;
  const double q = -4.0 * model.t2 * std::sin(model.theta);
  const double t1sq = model.t1 * model.t1;

  // Per-axis tables. Haldane works in a = sqrt(3)/2 kx, b = 3/2 ky, both
  // spanning [0, 2pi]; QWZ directly in kx, ky over [0, 2pi].
  std::vector<double> ca(n + 1), sa(n + 1), c2a(n + 1), cb(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = 2.0 * kPi * i / n;
    ca[i] = std::cos(t);
    sa[i] = std::sin(t);
    c2a[i] = std::cos(2.0 * t);
    cb[i] = std::cos(t);
  }

  double best = kInf;
  std::vector<double> fprev(n + 1), bprev(n + 1), fcur(n + 1), bcur(n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double w, bound;
      if (haldane) {
        w = q * sa[i] * (cb[j] - ca[i]);
        bound = t1sq * (3.0 + 2.0 * c2a[i] + 4.0 * ca[i] * cb[j]);
      } else {
        w = -ca[i] - ca[j];
        bound = 2.0 - ca[i] * ca[i] - ca[j] * ca[j];
      }
      const double f = w - re;
      fcur[j] = f;
      bcur[j] = bound;
      if (f == 0.0) best = std::min(best, bound);
      if (j > 0 && fcur[j - 1] * f < 0.0) {
        const double t = fcur[j - 1] / (fcur[j - 1] - f);
        best = std::min(best, bcur[j - 1] + t * (bound - bcur[j - 1]));
      }
      if (i > 0 && fprev[j] * f < 0.0) {
        const double t = fprev[j] / (fprev[j] - f);
        best = std::min(best, bprev[j] + t * (bound - bprev[j]));
      }
    }
    fcur.swap(fprev);
    bcur.swap(bprev);
  }
  return best;
}

}  // namespace

double re_gap(const ModelSpec& model, const Momentum& k, Complex gamma) {
  const Complex s = radicand(d_vector(model, k, gamma));
  return 2.0 * std::abs(std::sqrt(s).real());
}

GapResult e_min(const ModelSpec& model, Complex gamma, EminOptions opts) {
  model.validate();
  if (opts.resolution != 0 && opts.resolution < 64)
    throw std::invalid_argument("e_min: resolution must be at least 64");

  const BzDomain dom = bz_domain(model);
  const int n =
      opts.resolution != 0 ? opts.resolution : (dom.dims == 1 ? 1024 : 256);

  const auto eval = [&](const double* x) {
    return re_gap(model, {x[0], dom.dims == 2 ? x[1] : 0.0}, gamma);
  };

  GapResult out;
  double x[2] = {0.0, 0.0};
  double best = kInf;
  if (dom.dims == 1) {
    for (int j = 0; j < n; ++j) {
      const double p[2] = {dom.width[0] * j / n, 0.0};
      const double f = eval(p);
      if (f < best) {
        best = f;
        x[0] = p[0];
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double p[2] = {dom.width[0] * i / n, dom.width[1] * j / n};
        const double f = eval(p);
        if (f < best) {
          best = f;
          x[0] = p[0];
          x[1] = p[1];
        }
      }
    }
  }

  if (opts.refine) {
    double base[2], mult = 1.0;
    for (int c = 0; c < dom.dims; ++c) base[c] = dom.width[c] / n;
    const double coarse_step = std::max(base[0], dom.dims == 2 ? base[1] : 0.0);
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
      if (best < kZeroSnap) {
        converged = true;
        break;
      }
      // Near the zero floor the gap slope can exceed 1, so a 1e-8 step
      // still leaves values above the snap threshold; small values push
      // the refinement further down.
      const double step_tol = best < 1e-5 ? 1e-12 : 1e-8;
      if (mult * coarse_step < step_tol) {
        converged = true;
        break;
      }
      double moved_frac = 0.0;
      for (int c = 0; c < dom.dims; ++c) {
        const double h = mult * base[c];
        const auto line = [&](double t) {
          double p[2] = {x[0], x[1]};
          p[c] = t;
          return eval(p);
        };
        const auto [t, ft] =
            golden_min(line, x[c] - h, x[c] + h, std::max(h * 1e-2, 1e-14));
        if (ft < best) {
          moved_frac = std::max(moved_frac, std::abs(t - x[c]) / h);
          x[c] = t;
          best = ft;
        }
      }
      mult = moved_frac >= 0.5 ? std::min(2.0 * mult, 1.0) : 0.5 * mult;
    }
    out.converged = converged;
    if (best < kZeroSnap) best = 0.0;
    for (int c = 0; c < dom.dims; ++c) {
      x[c] = std::fmod(x[c], dom.width[c]);
      if (x[c] < 0.0) x[c] += dom.width[c];
    }
  }

  out.value = best;
  out.argmin_momentum = {x[0], dom.dims == 2 ? x[1] : 0.0};
  return out;
}

double zero_locus_real_part(const ModelSpec& model, const Momentum& k) {
  switch (model.kind) {
    case ModelKind::kitaev:
      return -std::cos(k.kx);
    case ModelKind::ssh:
      return -model.t2 * std::cos(k.kx);
    case ModelKind::haldane: {
      const double a = kSqrt3 * 0.5 * k.kx;
      const double b = 1.5 * k.ky;
      return -4.0 * model.t2 * std::sin(model.theta) * std::sin(a) *
             (std::cos(b) - std::cos(a));
    }
    case ModelKind::qwz:
      return -std::cos(k.kx) - std::cos(k.ky);
  }
  throw std::invalid_argument("unknown model kind");
}

double zero_locus_im_bound_sq(const ModelSpec& model, const Momentum& k) {
  double b = 0.0;
  switch (model.kind) {
    case ModelKind::kitaev: {
      const double s = std::sin(k.kx);
      b = model.delta * model.delta * s * s;
      break;
    }
    case ModelKind::ssh: {
      const double s = std::sin(k.kx);
      b = model.t2 * model.t2 * s * s;
      break;
    }
    case ModelKind::haldane: {
      const double a = kSqrt3 * 0.5 * k.kx;
      const double bb = 1.5 * k.ky;
      b = model.t1 * model.t1 *
          (3.0 + 2.0 * std::cos(2.0 * a) +
           4.0 * std::cos(a) * std::cos(bb));
      break;
    }
    case ModelKind::qwz: {
      const double cx = std::cos(k.kx);
      const double cy = std::cos(k.ky);
      b = 2.0 - cx * cx - cy * cy;
      break;
    }
  }
  return snap_sq(std::max(0.0, b));
}

double continuum_im_bound(const ModelSpec& model, double re_gamma) {
  model.validate();
  switch (model.kind) {
    case ModelKind::kitaev: {
      if (std::abs(re_gamma) > 1.0) return kInf;
      const double b =
          model.delta * model.delta * (1.0 - re_gamma * re_gamma);
      return std::sqrt(snap_sq(std::max(0.0, b)));
    }
    case ModelKind::ssh: {
      if (std::abs(re_gamma) > std::abs(model.t2)) return kInf;
      const double b = model.t2 * model.t2 - re_gamma * re_gamma;
      return std::sqrt(snap_sq(std::max(0.0, b)));
    }
    case ModelKind::haldane:
    case ModelKind::qwz: {
      const double b = sweep_min_bound_sq(model, re_gamma);
      if (b == kInf) return kInf;
      return std::sqrt(snap_sq(std::max(0.0, b)));
    }
  }
  throw std::invalid_argument("unknown model kind");
}

bool zero_region_membership(const ModelSpec& model, Complex gamma) {
  const double bound = continuum_im_bound(model, gamma.real());
  return std::abs(gamma.imag()) >= bound;
}

}  // namespace fidzero
