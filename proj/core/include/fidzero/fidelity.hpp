#pragma once

#include "fidzero/models.hpp"

namespace fidzero {

/// Default parameter displacement for fidelity evaluation. Both components
/// nonzero so the displacement crosses zero lines parallel to the imaginary
/// axis.
inline constexpr Complex kDefaultDisplacement{0.01, 0.01};

struct FidelityFlags {
  bool real_part_tie = false;
  bool exceptional_point = false;
  bool lenient_mode = false;

  void merge(const FidelityFlags& other) {
    real_part_tie = real_part_tie || other.real_part_tie;
    exceptional_point = exceptional_point || other.exceptional_point;
    lenient_mode = lenient_mode || other.lenient_mode;
  }
  bool any() const {
    return real_part_tie || exceptional_point || lenient_mode;
  }
};

struct FidelityResult {
  double value = 1.0;
  Momentum argmin_momentum{};  // meaningful for f_min only
  int argmin_index = -1;       // index into the momentum grid, -1 if n/a
  FidelityFlags flags;
};

/// Fidelity factor of one momentum mode between two solved parameter points:
/// sqrt(|<psi_L_g(a)|psi_R_g(b)><psi_L_g(b)|psi_R_g(a)>|), each point using
/// its own ground label, clamped to at most 1 (the raw biorthogonal value
/// can exceed 1 by O(|delta gamma|) near gap-closing curves).
///
/// An exceptional point on either side throws DegenerateModeError in strict
/// mode; in lenient mode the factor is 0 (the zero-overlap limit) and the
/// flags record it. A real-part tie is computed normally and flagged.
double mode_fidelity(const ModeSolution& a, const ModeSolution& b,
                     Strictness strictness = Strictness::strict,
                     FidelityFlags* flags = nullptr);

double mode_fidelity(const ModelSpec& model, const Momentum& k,
                     Complex gamma_a, Complex gamma_b,
                     Strictness strictness = Strictness::strict,
                     FidelityFlags* flags = nullptr);

/// Product of mode_fidelity over the momentum grid, in grid order.
FidelityResult total_fidelity(const ModelSpec& model, const MomentumGrid& grid,
                              Complex gamma_a, Complex gamma_b,
                              Strictness strictness = Strictness::strict);
FidelityResult total_fidelity(const ModelSpec& model, int size_l,
                              Complex gamma_a, Complex gamma_b,
                              Strictness strictness = Strictness::strict);

/// Minimum over the grid of mode_fidelity(gamma + dg/2, gamma - dg/2), with
/// the argmin momentum. Ties keep the first (lowest-index) mode.
FidelityResult f_min(const ModelSpec& model, const MomentumGrid& grid,
                     Complex gamma, Complex delta_gamma = kDefaultDisplacement,
                     Strictness strictness = Strictness::strict);
FidelityResult f_min(const ModelSpec& model, int size_l, Complex gamma,
                     Complex delta_gamma = kDefaultDisplacement,
                     Strictness strictness = Strictness::strict);

/// One pass over the grid producing everything a scan cell needs. The
/// reductions run in grid order, so the fields are bitwise identical to the
/// corresponding individual f_min / total_fidelity results.
struct CellFidelity {
  double f_min = 1.0;
  double total = 1.0;
  int argmin_index = -1;
  Momentum argmin_momentum{};
  FidelityFlags flags;
};

CellFidelity cell_fidelity(const ModelSpec& model, const MomentumGrid& grid,
                           Complex gamma, Complex delta_gamma,
                           Strictness strictness = Strictness::strict);

}  // namespace fidzero
