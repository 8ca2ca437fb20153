#include "fidzero/scan.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

namespace fidzero {

namespace {

constexpr const char* kCheckpointMagic = "fidzero-scan-checkpoint v1";

std::string fmt_double(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int effective_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs work(row) for row in [begin, end) on the requested number of threads.
// Each row writes only its own output slices, so execution order cannot
// change the result.
template <typename Work>
void for_each_row(int begin, int end, int threads, Work&& work) {
  const int n = end - begin;
  if (n <= 0) return;
  const int t = std::min(effective_threads(threads), n);
  if (t <= 1) {
    for (int r = begin; r < end; ++r) work(r);
    return;
  }
  std::atomic<int> next{begin};
  std::atomic<bool> failed{false};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto body = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const int r = next.fetch_add(1);
      if (r >= end) return;
      try {
        work(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int i = 0; i < t; ++i) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

struct CheckpointIo {
  const ScanConfig& config;
  std::string file_path;
  std::string header;

  CheckpointIo(const ScanConfig& c, std::string path)
      : config(c), file_path(std::move(path)) {
    header = std::string(kCheckpointMagic) + " ";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(
                      fnv1a(config.canonical_string())));
    header += buf;
  }

  int doubles_per_row() const {
    int n = 0;
    if (config.quantities & quantity::kFmin) ++n;
    if (config.quantities & quantity::kEmin) ++n;
    if (config.quantities & quantity::kTotal) ++n;
    return n * config.n_re;
  }

  // Parses one checkpoint line into the result grids; returns false on any
  // malformed or out-of-sequence content.
  bool parse_row(const std::string& line, int expect_row,
                 ScanResult& out) const {
    const char* p = line.data();
    const char* endp = line.data() + line.size();
    auto read_double = [&](double& v) {
      while (p < endp && *p == ' ') ++p;
      const auto r = std::from_chars(p, endp, v);
      if (r.ec != std::errc{}) return false;
      p = r.ptr;
      return true;
    };
    auto read_int = [&](long& v) {
      while (p < endp && *p == ' ') ++p;
      const auto r = std::from_chars(p, endp, v);
      if (r.ec != std::errc{}) return false;
      p = r.ptr;
      return true;
    };
    long row = -1;
    if (!read_int(row) || row != expect_row) return false;
    const std::size_t base = out.index(expect_row, 0);
    for (int c = 0; c < config.n_re; ++c) {
      double v;
      if (config.quantities & quantity::kFmin) {
        if (!read_double(v)) return false;
        out.fmin[base + c] = v;
      }
      if (config.quantities & quantity::kEmin) {
        if (!read_double(v)) return false;
        out.emin[base + c] = v;
      }
      if (config.quantities & quantity::kTotal) {
        if (!read_double(v)) return false;
        out.total[base + c] = v;
      }
      long iv;
      if (config.quantities & quantity::kFmin) {
        if (!read_int(iv)) return false;
        out.argmin[base + c] = static_cast<std::int32_t>(iv);
      }
      if (!read_int(iv) || iv < 0 || iv > 255) return false;
      out.cell_flags[base + c] = static_cast<std::uint8_t>(iv);
    }
    while (p < endp && *p == ' ') ++p;
    return p == endp;
  }

  void append_row(std::string& buf, int row, const ScanResult& res) const {
    buf += std::to_string(row);
    const std::size_t base = res.index(row, 0);
    for (int c = 0; c < config.n_re; ++c) {
      if (config.quantities & quantity::kFmin) {
        buf += ' ';
        buf += fmt_double(res.fmin[base + c]);
      }
      if (config.quantities & quantity::kEmin) {
        buf += ' ';
        buf += fmt_double(res.emin[base + c]);
      }
      if (config.quantities & quantity::kTotal) {
        buf += ' ';
        buf += fmt_double(res.total[base + c]);
      }
      if (config.quantities & quantity::kFmin) {
        buf += ' ';
        buf += std::to_string(res.argmin[base + c]);
      }
      buf += ' ';
      buf += std::to_string(static_cast<int>(res.cell_flags[base + c]));
    }
    buf += '\n';
  }

  // Loads contiguous leading rows; returns how many were recovered.
  int load(ScanResult& out) const {
    std::ifstream in(file_path, std::ios::binary);
    if (!in) return 0;
    std::string line;
    if (!std::getline(in, line) || line != header) return 0;
    int rows = 0;
    while (rows < config.n_im && std::getline(in, line)) {
      if (!parse_row(line, rows, out)) break;
      ++rows;
    }
    return rows;
  }

  // Rewrites the file to exactly header + rows [0, count): a clean baseline
  // that drops any torn trailing line before new chunks are appended.
  void rewrite(const ScanResult& res, int count) const {
    std::ofstream outf(file_path, std::ios::binary | std::ios::trunc);
    outf << header << '\n';
    std::string buf;
    for (int r = 0; r < count; ++r) append_row(buf, r, res);
    outf << buf;
  }

  void append(const ScanResult& res, int row_begin, int row_end) const {
    std::ofstream outf(file_path, std::ios::binary | std::ios::app);
    std::string buf;
    for (int r = row_begin; r < row_end; ++r) append_row(buf, r, res);
    outf << buf;
    outf.flush();
  }
};

ScanResult run_scan_impl(const ScanConfig& config,
                         const ScanCheckpoint* checkpoint) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  ScanResult res;
  res.config = config;
  const std::size_t cells =
      static_cast<std::size_t>(config.n_re) * config.n_im;
  if (config.quantities & quantity::kFmin) {
    res.fmin.assign(cells, 0.0);
    res.argmin.assign(cells, -1);
  }
  if (config.quantities & quantity::kEmin) res.emin.assign(cells, 0.0);
  if (config.quantities & quantity::kTotal) res.total.assign(cells, 0.0);
  res.cell_flags.assign(cells, 0);

  const MomentumGrid grid = momentum_grid(config.model, config.size_l);
  const bool want_fid =
      config.quantities & (quantity::kFmin | quantity::kTotal);
  const EminOptions emin_opts{config.emin_resolution, config.emin_refine};

  auto scan_row = [&](int r) {
    const double im = config.im_at(r);
    const std::size_t base = res.index(r, 0);
    for (int c = 0; c < config.n_re; ++c) {
      const Complex gamma{config.re_at(c), im};
      std::uint8_t flags = 0;
      if (want_fid) {
        const CellFidelity cf = cell_fidelity(
            config.model, grid, gamma, config.delta_gamma, config.strictness);
        if (config.quantities & quantity::kFmin) {
          res.fmin[base + c] = cf.f_min;
          res.argmin[base + c] = cf.argmin_index;
        }
        if (config.quantities & quantity::kTotal)
          res.total[base + c] = cf.total;
        if (cf.flags.real_part_tie) flags |= cellflag::kTie;
        if (cf.flags.exceptional_point) flags |= cellflag::kEp;
      }
      if (config.quantities & quantity::kEmin)
        res.emin[base + c] =
            e_min(config.model, gamma, emin_opts).value;
      res.cell_flags[base + c] = flags;
    }
  };

  int done = 0;
  if (checkpoint && !checkpoint->file.empty()) {
    CheckpointIo io(config, checkpoint->file);
    done = io.load(res);
    io.rewrite(res, done);
    const int chunk = std::max(1, checkpoint->chunk_rows);
    while (done < config.n_im) {
      const int upto = std::min(config.n_im, done + chunk);
      for_each_row(done, upto, config.threads, scan_row);
      io.append(res, done, upto);
      done = upto;
    }
  } else {
    for_each_row(0, config.n_im, config.threads, scan_row);
    done = config.n_im;
  }

  res.rows_completed = done;
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace

void ScanConfig::validate() const {
  model.validate();
  if (size_l < 2 || (model.dimension() == 1 && size_l % 2 != 0))
    throw std::invalid_argument(
        "scan: L must be >= 2 and even for 1d models");
  if (!(re_min < re_max) || !(im_min < im_max))
    throw std::invalid_argument("scan: window must have positive extent");
  if (n_re < 2 || n_im < 2)
    throw std::invalid_argument("scan: res must be at least 2x2");
  if (quantities == 0 || (quantities & ~quantity::kAll) != 0)
    throw std::invalid_argument("scan: unknown quantities selection");
  if ((quantities & (quantity::kFmin | quantity::kTotal)) &&
      delta_gamma == Complex{})
    throw std::invalid_argument("scan: dgamma must be nonzero");
  if (emin_resolution != 0 && emin_resolution < 64)
    throw std::invalid_argument("scan: emin.res must be 0 or >= 64");
  if (threads < 0) throw std::invalid_argument("scan: threads must be >= 0");
  const std::size_t cells = static_cast<std::size_t>(n_re) * n_im;
  if (cells > cell_cap)
    throw ResolutionCapError("scan: " + std::to_string(cells) +
                             " cells exceed the cap of " +
                             std::to_string(cell_cap));
}

double ScanConfig::re_at(int col) const {
  return re_min + (re_max - re_min) * col / (n_re - 1);
}

double ScanConfig::im_at(int row) const {
  return im_min + (im_max - im_min) * row / (n_im - 1);
}

double ScanConfig::re_step() const { return (re_max - re_min) / (n_re - 1); }

double ScanConfig::im_step() const { return (im_max - im_min) / (n_im - 1); }

std::string ScanConfig::canonical_string() const {
  std::string s;
  s += "model=" + model.name();
  s += ";delta=" + fmt_double(model.delta);
  s += ";t1=" + fmt_double(model.t1);
  s += ";t2=" + fmt_double(model.t2);
  s += ";theta=" + fmt_double(model.theta);
  s += ";full_zone=" + std::to_string(model.kitaev_full_zone ? 1 : 0);
  s += ";L=" + std::to_string(size_l);
  s += ";window=" + fmt_double(re_min) + "," + fmt_double(re_max) + "," +
       fmt_double(im_min) + "," + fmt_double(im_max);
  s += ";res=" + std::to_string(n_re) + "," + std::to_string(n_im);
  s += ";dgamma=" + fmt_double(delta_gamma.real()) + "," +
       fmt_double(delta_gamma.imag());
  s += ";quantities=" + std::to_string(quantities);
  s += ";emin_res=" + std::to_string(emin_resolution);
  s += ";emin_refine=" + std::to_string(emin_refine ? 1 : 0);
  s += ";strict=" +
       std::to_string(strictness == Strictness::strict ? 1 : 0);
  return s;
}

ScanResult run_plane_scan(const ScanConfig& config) {
  return run_scan_impl(config, nullptr);
}

ScanResult run_plane_scan(const ScanConfig& config,
                          const ScanCheckpoint& checkpoint) {
  return run_scan_impl(config, &checkpoint);
}

void PathScanConfig::validate() const {
  model.validate();
  if (size_l < 2 || (model.dimension() == 1 && size_l % 2 != 0))
    throw std::invalid_argument(
        "path: L must be >= 2 and even for 1d models");
  if (!(re_min < re_max))
    throw std::invalid_argument("path: re range must have positive extent");
  if (n_points < 2)
    throw std::invalid_argument("path: need at least 2 points");
  if (delta_gamma == Complex{})
    throw std::invalid_argument("path: dgamma must be nonzero");
}

double PathScanConfig::re_at(int i) const {
  return re_min + (re_max - re_min) * i / (n_points - 1);
}

PathScanResult run_path_scan(const PathScanConfig& config) {
  config.validate();
  PathScanResult out;
  out.config = config;
  out.grid = momentum_grid(config.model, config.size_l);
  const std::size_t modes = out.grid.points.size();
  out.re.resize(config.n_points);
  out.total_fid.resize(config.n_points);
  out.re_energy.resize(config.n_points * 2 * modes);
  const Complex half = 0.5 * config.delta_gamma;
  for (int i = 0; i < config.n_points; ++i) {
    const Complex gamma{config.re_at(i), config.fixed_im};
    out.re[i] = gamma.real();
    out.total_fid[i] = total_fidelity(config.model, out.grid, gamma + half,
                                      gamma - half, config.strictness)
                           .value;
    for (std::size_t j = 0; j < modes; ++j) {
      const ModeSolution sol =
          eig2x2(d_vector(config.model, out.grid.points[j], gamma));
      out.re_energy[(i * modes + j) * 2] = sol.e_plus.real();
      out.re_energy[(i * modes + j) * 2 + 1] = sol.e_minus.real();
    }
  }
  return out;
}

}  // namespace fidzero
