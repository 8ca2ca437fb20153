#include "writers.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "fidzero/models.hpp"

namespace fidzero::cli {
namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

void put_comments(std::ofstream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open for reading: " + path);
  return in;
}

std::vector<std::string> data_lines(std::ifstream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

void write_grid_csv(const std::string& path,
                    const std::vector<std::string>& comments,
                    const std::vector<double>& grid, int n_re, int n_im) {
  if (grid.size() != static_cast<std::size_t>(n_re) * n_im)
    throw std::invalid_argument("grid size does not match resolution");
  auto out = open_out(path);
  put_comments(out, comments);
  for (int r = 0; r < n_im; ++r) {
    for (int c = 0; c < n_re; ++c) {
      if (c) out << ',';
      out << fmt17(grid[static_cast<std::size_t>(r) * n_re + c]);
    }
    out << '\n';
  }
}

void write_argmin_csv(const std::string& path,
                      const std::vector<std::string>& comments,
                      const std::vector<std::int32_t>& grid, int n_re,
                      int n_im) {
  if (grid.size() != static_cast<std::size_t>(n_re) * n_im)
    throw std::invalid_argument("grid size does not match resolution");
  auto out = open_out(path);
  put_comments(out, comments);
  for (int r = 0; r < n_im; ++r) {
    for (int c = 0; c < n_re; ++c) {
      if (c) out << ',';
      out << grid[static_cast<std::size_t>(r) * n_re + c];
    }
    out << '\n';
  }
}

void write_path_csv(const std::string& path,
                    const std::vector<std::string>& comments,
                    const PathScanResult& res) {
  auto out = open_out(path);
  put_comments(out, comments);
  const std::size_t modes = res.grid.points.size();
  out << "# columns: re, total_fidelity";
  for (std::size_t j = 0; j < modes; ++j)
    out << ", re_e_plus_" << j << ", re_e_minus_" << j;
  out << '\n';
  for (int i = 0; i < res.config.n_points; ++i) {
    out << fmt17(res.re[i]) << ',' << fmt17(res.total_fid[i]);
    for (std::size_t j = 0; j < modes; ++j) {
      const std::size_t base = (static_cast<std::size_t>(i) * modes + j) * 2;
      out << ',' << fmt17(res.re_energy[base]) << ','
          << fmt17(res.re_energy[base + 1]);
    }
    out << '\n';
  }
}

void write_convergence_csv(const std::string& path,
                           const std::vector<std::string>& comments,
                           const std::vector<BoundaryEstimate>& table) {
  auto out = open_out(path);
  put_comments(out, comments);
  out << "# columns: L, min_real, max_real, critical_lo, critical_hi, "
         "gap_to_critical, continuum_bound\n";
  for (const auto& row : table) {
    out << row.size_l << ',' << fmt17(row.min_real) << ','
        << fmt17(row.max_real) << ',' << fmt17(row.critical_lo) << ','
        << fmt17(row.critical_hi) << ',' << fmt17(row.gap_to_critical) << ','
        << fmt17(row.continuum_bound) << '\n';
  }
}

void write_json_file(const std::string& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

std::vector<double> read_grid_csv(const std::string& path, int n_re,
                                  int n_im) {
  auto in = open_in(path);
  auto lines = data_lines(in);
  if (lines.size() != static_cast<std::size_t>(n_im))
    throw std::invalid_argument(path + ": expected " + std::to_string(n_im) +
                                " data rows, found " +
                                std::to_string(lines.size()));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n_re) * n_im);
  for (const auto& line : lines) {
    auto cells = split_csv(line);
    if (cells.size() != static_cast<std::size_t>(n_re))
      throw std::invalid_argument(path + ": expected " + std::to_string(n_re) +
                                  " columns per row");
    for (const auto& cell : cells) grid.push_back(parse_double("cell", cell));
  }
  return grid;
}

std::vector<std::int32_t> read_argmin_csv(const std::string& path, int n_re,
                                          int n_im) {
  auto in = open_in(path);
  auto lines = data_lines(in);
  if (lines.size() != static_cast<std::size_t>(n_im))
    throw std::invalid_argument(path + ": expected " + std::to_string(n_im) +
                                " data rows, found " +
                                std::to_string(lines.size()));
  std::vector<std::int32_t> grid;
  grid.reserve(static_cast<std::size_t>(n_re) * n_im);
  for (const auto& line : lines) {
    auto cells = split_csv(line);
    if (cells.size() != static_cast<std::size_t>(n_re))
      throw std::invalid_argument(path + ": expected " + std::to_string(n_re) +
                                  " columns per row");
    for (const auto& cell : cells)
      grid.push_back(static_cast<std::int32_t>(parse_int("cell", cell)));
  }
  return grid;
}

Manifest::Manifest(const std::string& command, std::string out_dir,
                   json config, const ModelSpec& model)
    : out_dir_(std::move(out_dir)) {
  j_["v"] = 1;
  j_["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j_["command"] = command;
  j_["config"] = std::move(config);
  j_["model"] = {{"name", model.name()},
                 {"dimension", model.dimension()},
                 {"driving", model.driving_symbol()}};
  j_["warnings"] = json::array();
  j_["outputs"] = json::array();
  j_["timestamps"] = {{"started", iso8601_utc_now()}};
}

void Manifest::add_warning(const std::string& text) {
  j_["warnings"].push_back(text);
}

void Manifest::add_output(const std::string& file_name) {
  const std::string full = path_join(out_dir_, file_name);
  j_["outputs"].push_back({{"file", file_name},
                           {"sha256", sha256_hex_file(full)},
                           {"bytes", std::filesystem::file_size(full)}});
}

void Manifest::write() {
  j_["timestamps"]["finished"] = iso8601_utc_now();
  write_json_file(path_join(out_dir_, "manifest.json"), j_);
}

}  // namespace fidzero::cli
