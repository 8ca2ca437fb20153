#pragma once

#include <string>

namespace fidzero::cli {

/// One command-line option value: the raw text and whether the user gave it.
/// Options left ungiven fall back to the config file, then to the default.
struct OptText {
  std::string text;
  bool given = false;
};

struct ScanArgs {
  OptText model, delta, t1, t2, theta, size_l, window, res, dgamma, quantities,
      emin_res, emin_refine, threads, cap, out;
  OptText full_zone, strict, argmin, resume, gnuplot;
  std::string config_path;
};

struct PathArgs {
  OptText model, delta, t1, t2, theta, size_l, im, window, points, dgamma, out;
  OptText full_zone, strict, gnuplot;
  std::string config_path;
};

struct ZerosArgs {
  OptText model, delta, t1, t2, theta, size_l, scan_dir, threshold, out;
  OptText full_zone;
  std::string config_path;
};

struct ConvergeArgs {
  OptText model, delta, t1, t2, theta, l_list, out;
  OptText full_zone;
  std::string config_path;
};

int run_scan(const ScanArgs& args);
int run_path(const PathArgs& args);
int run_zeros(const ZerosArgs& args);
int run_converge(const ConvergeArgs& args);
int run_models();

}  // namespace fidzero::cli
