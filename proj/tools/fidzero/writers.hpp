#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fidzero/scan.hpp"
#include "fidzero/zeros.hpp"
#include "util.hpp"

namespace fidzero::cli {

inline constexpr const char* kToolName = "fidzero";
inline constexpr const char* kToolVersion = "0.1.0";

/// CSV files: '#' comment lines, then comma-separated rows; numbers carry 17
/// significant digits; LF line endings (streams opened in binary mode).
void write_grid_csv(const std::string& path,
                    const std::vector<std::string>& comments,
                    const std::vector<double>& grid, int n_re, int n_im);

void write_argmin_csv(const std::string& path,
                      const std::vector<std::string>& comments,
                      const std::vector<std::int32_t>& grid, int n_re,
                      int n_im);

void write_path_csv(const std::string& path,
                    const std::vector<std::string>& comments,
                    const PathScanResult& res);

void write_convergence_csv(const std::string& path,
                           const std::vector<std::string>& comments,
                           const std::vector<BoundaryEstimate>& table);

void write_json_file(const std::string& path, const json& j);

std::vector<double> read_grid_csv(const std::string& path, int n_re,
                                  int n_im);
std::vector<std::int32_t> read_argmin_csv(const std::string& path, int n_re,
                                          int n_im);

/// Run manifest: schema v1, with the resolved config echo and an inventory
/// of emitted files (SHA-256 + size). Construction records the start time;
/// write() stamps the finish time and emits manifest.json in the out dir.
class Manifest {
 public:
  Manifest(const std::string& command, std::string out_dir, json config,
           const ModelSpec& model);

  json& root() { return j_; }
  void add_warning(const std::string& text);
  void add_output(const std::string& file_name);
  void write();

 private:
  std::string out_dir_;
  json j_;
};

}  // namespace fidzero::cli
