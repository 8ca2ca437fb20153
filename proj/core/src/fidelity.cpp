#include "fidzero/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace fidzero {

namespace {

void record(FidelityFlags* flags, const ModeSolution& m) {
  if (!flags) return;
  if (m.degeneracy == Degeneracy::real_part_tie) flags->real_part_tie = true;
  if (m.degeneracy == Degeneracy::exceptional_point)
    flags->exceptional_point = true;
}

void check_displacement(Complex delta_gamma) {
  if (delta_gamma == Complex{})
    throw std::invalid_argument("fidelity: delta_gamma must be nonzero");
}

}  // namespace

double mode_fidelity(const ModeSolution& a, const ModeSolution& b,
                     Strictness strictness, FidelityFlags* flags) {
  record(flags, a);
  record(flags, b);
  if (a.degeneracy == Degeneracy::exceptional_point ||
      b.degeneracy == Degeneracy::exceptional_point) {
    if (strictness == Strictness::strict)
      throw DegenerateModeError("mode_fidelity: exceptional point");
    if (flags) flags->lenient_mode = true;
    return 0.0;
  }
  const OverlapPair p = ground_overlap_pair(a, b, Strictness::lenient);
  const double raw = std::sqrt(std::abs(p.a_with_b * p.b_with_a));
  return std::min(raw, 1.0);
}

double mode_fidelity(const ModelSpec& model, const Momentum& k,
                     Complex gamma_a, Complex gamma_b, Strictness strictness,
                     FidelityFlags* flags) {
  const ModeSolution a = eig2x2(d_vector(model, k, gamma_a));
  const ModeSolution b = eig2x2(d_vector(model, k, gamma_b));
  return mode_fidelity(a, b, strictness, flags);
}

FidelityResult total_fidelity(const ModelSpec& model, const MomentumGrid& grid,
                              Complex gamma_a, Complex gamma_b,
                              Strictness strictness) {
  FidelityResult out;
  double product = 1.0;
  for (const Momentum& k : grid.points)
    product *= mode_fidelity(model, k, gamma_a, gamma_b, strictness,
                             &out.flags);
  out.value = product;
  return out;
}

FidelityResult total_fidelity(const ModelSpec& model, int size_l,
                              Complex gamma_a, Complex gamma_b,
                              Strictness strictness) {
  return total_fidelity(model, momentum_grid(model, size_l), gamma_a, gamma_b,
                        strictness);
}

FidelityResult f_min(const ModelSpec& model, const MomentumGrid& grid,
                     Complex gamma, Complex delta_gamma,
                     Strictness strictness) {
  check_displacement(delta_gamma);
  const Complex half = 0.5 * delta_gamma;
  FidelityResult out;
  double best = 1.0;
  int best_index = -1;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const double f = mode_fidelity(model, grid.points[i], gamma + half,
                                   gamma - half, strictness, &out.flags);
    if (best_index < 0 || f < best) {
      best = f;
      best_index = static_cast<int>(i);
    }
  }
  out.value = best;
  out.argmin_index = best_index;
  if (best_index >= 0) out.argmin_momentum = grid.points[best_index];
  return out;
}

FidelityResult f_min(const ModelSpec& model, int size_l, Complex gamma,
                     Complex delta_gamma, Strictness strictness) {
  return f_min(model, momentum_grid(model, size_l), gamma, delta_gamma,
               strictness);
}

CellFidelity cell_fidelity(const ModelSpec& model, const MomentumGrid& grid,
                           Complex gamma, Complex delta_gamma,
                           Strictness strictness) {
  check_displacement(delta_gamma);
  const Complex half = 0.5 * delta_gamma;
  CellFidelity out;
  double best = 1.0;
  int best_index = -1;
  double product = 1.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const double f = mode_fidelity(model, grid.points[i], gamma + half,
                                   gamma - half, strictness, &out.flags);
    product *= f;
    if (best_index < 0 || f < best) {
      best = f;
      best_index = static_cast<int>(i);
    }
  }
  out.f_min = best;
  out.total = product;
  out.argmin_index = best_index;
  if (best_index >= 0) out.argmin_momentum = grid.points[best_index];
  return out;
}

}  // namespace fidzero
