#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fidzero/fidelity.hpp"
#include "fidzero/spectrum.hpp"

namespace fidzero {

namespace quantity {
constexpr unsigned kFmin = 1u;
constexpr unsigned kEmin = 2u;
constexpr unsigned kTotal = 4u;
constexpr unsigned kAll = kFmin | kEmin | kTotal;
}  // namespace quantity

struct ResolutionCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rectangular window in the complex driving-parameter plane sampled on an
/// inclusive n_re x n_im grid (endpoints are grid nodes).
struct ScanConfig {
  ModelSpec model;
  int size_l = 16;
  double re_min = -1.5, re_max = 1.5;
  double im_min = -1.5, im_max = 1.5;
  int n_re = 2, n_im = 2;
  Complex delta_gamma = kDefaultDisplacement;
  unsigned quantities = quantity::kFmin;
  int emin_resolution = 0;  // 0 = model default
  bool emin_refine = true;
  Strictness strictness = Strictness::lenient;
  int threads = 0;  // 0 = hardware concurrency
  std::size_t cell_cap = 4'000'000;

  void validate() const;  // std::invalid_argument / ResolutionCapError
  double re_at(int col) const;
  double im_at(int row) const;
  double re_step() const;
  double im_step() const;

  /// Deterministic encoding of every value-affecting field (threads and the
  /// cap are excluded); keys checkpoint compatibility.
  std::string canonical_string() const;
};

namespace cellflag {
constexpr std::uint8_t kTie = 1u;
constexpr std::uint8_t kEp = 2u;
}  // namespace cellflag

/// Row-major grids (row = imaginary part, ascending; column = real part,
/// ascending). Only requested quantity grids are populated.
struct ScanResult {
  ScanConfig config;
  std::vector<double> fmin;
  std::vector<double> emin;
  std::vector<double> total;
  std::vector<std::int32_t> argmin;  // f_min argmin mode index, -1 if unset
  std::vector<std::uint8_t> cell_flags;
  int rows_completed = 0;
  double wall_seconds = 0.0;

  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * config.n_re + col;
  }
};

/// Sidecar file recording completed rows so an interrupted scan can resume.
/// The file is keyed by a hash of ScanConfig::canonical_string(); a stale or
/// foreign checkpoint is discarded.
struct ScanCheckpoint {
  std::string file;
  int chunk_rows = 16;
};

ScanResult run_plane_scan(const ScanConfig& config);
ScanResult run_plane_scan(const ScanConfig& config,
                          const ScanCheckpoint& checkpoint);

struct PathScanConfig {
  ModelSpec model;
  int size_l = 16;
  double fixed_im = 0.0;
  double re_min = -1.5, re_max = 1.5;
  int n_points = 2;
  Complex delta_gamma = kDefaultDisplacement;
  Strictness strictness = Strictness::lenient;

  void validate() const;
  double re_at(int i) const;
};

/// Horizontal path sweep: total fidelity across the displacement plus both
/// branches' Re(E) for every grid mode at the path point itself.
struct PathScanResult {
  PathScanConfig config;
  MomentumGrid grid;
  std::vector<double> re;         // n_points
  std::vector<double> total_fid;  // n_points
  /// n_points x (2 |grid|), row-major: [i][2j] = Re E_+ of mode j,
  /// [i][2j+1] = Re E_- of mode j.
  std::vector<double> re_energy;
};

PathScanResult run_path_scan(const PathScanConfig& config);

}  // namespace fidzero
