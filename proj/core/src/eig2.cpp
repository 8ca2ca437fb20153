#include "fidzero/eig2.hpp"

#include <cmath>

namespace fidzero {

namespace {

constexpr double kExceptionalTol = 1e-24;  // on |d1^2+d2^2+d3^2|
constexpr double kFallbackTol = 1e-13;     // closed-form component magnitude
constexpr double kTieTol = 1e-12;          // Re-degeneracy of the two bands

const Complex kI{0.0, 1.0};

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool both_tiny(const Vec2& v) {
  return std::abs(v[0]) < kFallbackTol && std::abs(v[1]) < kFallbackTol;
}

// Unnormalized right eigenvector for the reduced eigenvalue lam = E - d0.
// The primary column (d3 + lam, d1 + i d2) degenerates when lam ~ -d3 and
// d1 + i d2 ~ 0; the second closed form covers that corner.
Vec2 right_closed_form(const DVector& d, Complex lam) {
  Vec2 v{d.d3 + lam, d.d1 + kI * d.d2};
  if (both_tiny(v)) v = {d.d1 - kI * d.d2, lam - d.d3};
  return v;
}

// Row vector g with the property that conj(g) is a left eigenvector of H for
// the branch lam: the adjoint problem is the same closed form with every
// component conjugated.
Vec2 left_closed_form(const DVector& d, Complex lam) {
  Vec2 g{d.d3 + lam, d.d1 - kI * d.d2};
  if (both_tiny(g)) g = {d.d1 + kI * d.d2, lam - d.d3};
  return g;
}

Vec2 euclid_normalized(const Vec2& v) {
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / n, v[1] / n};
}

void build_branch(const DVector& d, Complex lam, Vec2& right, Vec2& left) {
  right = euclid_normalized(right_closed_form(d, lam));
  const Vec2 g = left_closed_form(d, lam);
  // <conj(g)|right> is the plain dot product g . right; rescale so the
  // biorthogonal overlap is exactly 1.
  const Complex c = g[0] * right[0] + g[1] * right[1];
  left = {std::conj(g[0] / c), std::conj(g[1] / c)};
}

}  // namespace

DVector::DVector(Complex c0, Complex c1, Complex c2, Complex c3)
    : d0(c0), d1(c1), d2(c2), d3(c3) {
  if (!(is_finite(d0) && is_finite(d1) && is_finite(d2) && is_finite(d3)))
    throw std::invalid_argument("DVector: non-finite component");
}

Complex radicand(const DVector& d) {
  return d.d1 * d.d1 + d.d2 * d.d2 + d.d3 * d.d3;
}

Complex inner(const Vec2& a, const Vec2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Complex ModeSolution::ground_energy() const {
  return ground_label == Branch::minus ? e_minus : e_plus;
}

Complex ModeSolution::excited_energy() const {
  return ground_label == Branch::minus ? e_plus : e_minus;
}

const Vec2& ModeSolution::right_ground() const {
  return ground_label == Branch::minus ? psi_r_minus : psi_r_plus;
}

const Vec2& ModeSolution::right_excited() const {
  return ground_label == Branch::minus ? psi_r_plus : psi_r_minus;
}

const Vec2& ModeSolution::left_ground() const {
  return ground_label == Branch::minus ? psi_l_minus : psi_l_plus;
}

const Vec2& ModeSolution::left_excited() const {
  return ground_label == Branch::minus ? psi_l_plus : psi_l_minus;
}

ModeSolution eig2x2(const DVector& d) {
  ModeSolution m;
  const Complex s = radicand(d);

  if (std::abs(s) < kExceptionalTol) {
    // Defective (or trivially degenerate) point: both reduced eigenvalues
    // vanish and no biorthogonal normalization exists.
    m.degeneracy = Degeneracy::exceptional_point;
    m.e_plus = m.e_minus = d.d0;
    Vec2 v = right_closed_form(d, Complex{});
    if (both_tiny(v)) v = {Complex{1.0}, Complex{}};
    m.psi_r_plus = m.psi_r_minus = euclid_normalized(v);
    Vec2 g = left_closed_form(d, Complex{});
    if (both_tiny(g)) g = {Complex{1.0}, Complex{}};
    const Vec2 w{std::conj(g[0]), std::conj(g[1])};
    m.psi_l_plus = m.psi_l_minus = euclid_normalized(w);
    m.ground_label = Branch::minus;
    return m;
  }

  const Complex lam = std::sqrt(s);
  m.e_plus = d.d0 + lam;
  m.e_minus = d.d0 - lam;
  build_branch(d, lam, m.psi_r_plus, m.psi_l_plus);
  build_branch(d, -lam, m.psi_r_minus, m.psi_l_minus);

  const double re_gap = m.e_plus.real() - m.e_minus.real();
  const double scale = 1.0 + std::abs(m.e_plus) + std::abs(m.e_minus);
  if (std::abs(re_gap) <= kTieTol * scale) {
    m.degeneracy = Degeneracy::real_part_tie;
    m.ground_label =
        m.e_plus.imag() < m.e_minus.imag() ? Branch::plus : Branch::minus;
  } else {
    m.ground_label = re_gap < 0.0 ? Branch::plus : Branch::minus;
  }
  return m;
}

OverlapPair ground_overlap_pair(const ModeSolution& a, const ModeSolution& b,
                                Strictness strictness) {
  OverlapPair out;
  if (a.degeneracy != Degeneracy::none || b.degeneracy != Degeneracy::none) {
    if (strictness == Strictness::strict)
      throw DegenerateModeError(
          "ground_overlap_pair: degenerate mode solution");
    out.degenerate_input = true;
  }
  out.a_with_b = inner(a.left_ground(), b.right_ground());
  out.b_with_a = inner(b.left_ground(), a.right_ground());
  return out;
}

}  // namespace fidzero
