#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace fidzero {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

/// Pauli decomposition H = d0*I + d1*sx + d2*sy + d3*sz of a two-band Bloch
/// Hamiltonian. Components may be complex. Finiteness is enforced on
/// construction.
struct DVector {
  Complex d0{}, d1{}, d2{}, d3{};

  DVector() = default;
  DVector(Complex c0, Complex c1, Complex c2, Complex c3);
};

/// d1^2 + d2^2 + d3^2, the quantity under the square root of the dispersion.
Complex radicand(const DVector& d);

enum class Degeneracy { none, real_part_tie, exceptional_point };
enum class Branch { plus, minus };
enum class Strictness { strict, lenient };

struct DegenerateModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form eigensystem of the 2x2 Hamiltonian described by a DVector.
///
/// E_pm = d0 +- sqrt(d1^2 + d2^2 + d3^2) with the principal square root.
/// Right vectors are Euclidean-normalized; left vectors solve the adjoint
/// problem H^+ psi_L = E^* psi_L and are rescaled so <psi_L|psi_R> = 1 per
/// branch. At an exceptional point (radicand ~ 0) that rescaling does not
/// exist; the left vectors are then only Euclidean-normalized and the
/// degeneracy flag is set.
///
/// ground_label marks the branch with the smaller Re(E); when the real parts
/// tie the branch with the smaller Im(E) is labeled ground and the
/// real_part_tie flag is set.
struct ModeSolution {
  Complex e_plus{}, e_minus{};
  Vec2 psi_r_plus{}, psi_r_minus{};
  Vec2 psi_l_plus{}, psi_l_minus{};
  Branch ground_label = Branch::minus;
  Degeneracy degeneracy = Degeneracy::none;

  Complex ground_energy() const;
  Complex excited_energy() const;
  const Vec2& right_ground() const;
  const Vec2& right_excited() const;
  const Vec2& left_ground() const;
  const Vec2& left_excited() const;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const Vec2& a, const Vec2& b);

ModeSolution eig2x2(const DVector& d);

struct OverlapPair {
  Complex a_with_b{};  // <psi_L_g(a)|psi_R_g(b)>
  Complex b_with_a{};  // <psi_L_g(b)|psi_R_g(a)>
  bool degenerate_input = false;
};

/// Cross overlaps between the ground states of two solved modes. In strict
/// mode any degeneracy flag on either input raises DegenerateModeError; in
/// lenient mode the overlaps are computed with the labels as they stand and
/// the result is marked.
OverlapPair ground_overlap_pair(const ModeSolution& a, const ModeSolution& b,
                                Strictness strictness = Strictness::strict);

}  // namespace fidzero
