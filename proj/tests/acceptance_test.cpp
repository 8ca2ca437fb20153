// Standalone acceptance runner. Prints one [PASS]/[FAIL] line per criterion
// and exits with the number of failures. Each criterion pins its own
// tolerances; no shared configuration.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fidzero/fidelity.hpp"
#include "fidzero/scan.hpp"
#include "fidzero/spectrum.hpp"
#include "fidzero/zeros.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace fidzero;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

Vec2 apply_h(const DVector& d, const Vec2& v) {
  const Complex i{0.0, 1.0};
  return {(d.d0 + d.d3) * v[0] + (d.d1 - i * d.d2) * v[1],
          (d.d1 + i * d.d2) * v[0] + (d.d0 - d.d3) * v[1]};
}

// 1. Biorthogonality over 10^4 seeded random complex DVectors.
void criterion_1() {
  Stopwatch sw;
  std::mt19937 rng(9001);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rc = [&] { return Complex(u(rng), u(rng)); };

  double worst_cross = 0.0, worst_res = 0.0, worst_trace = 0.0;
  int n = 0;
  while (n < 10000) {
    const DVector d{rc(), rc(), rc(), rc()};
    if (std::abs(radicand(d)) < 1e-9) continue;  // exclude exceptional points
    ++n;
    const ModeSolution m = eig2x2(d);

    worst_cross = std::max({worst_cross, std::abs(inner(m.psi_l_plus, m.psi_r_minus)),
                            std::abs(inner(m.psi_l_minus, m.psi_r_plus))});

    for (const auto& [e, v] : {std::pair{m.e_plus, m.psi_r_plus},
                               std::pair{m.e_minus, m.psi_r_minus}}) {
      const Vec2 hv = apply_h(d, v);
      worst_res = std::max({worst_res, std::abs(hv[0] - e * v[0]),
                            std::abs(hv[1] - e * v[1])});
    }

    const double scale = 1.0 + std::abs(m.e_plus) + std::abs(m.e_minus);
    worst_trace = std::max(
        worst_trace, std::abs(m.e_plus + m.e_minus - 2.0 * d.d0) / scale);
  }

  const double t = sw.seconds();
  const bool ok =
      worst_cross < 1e-10 && worst_res < 1e-12 && worst_trace < 1e-12 && t < 5.0;
  report(1, ok,
         fmt("biorthogonality over 10000 modes: cross %.2e (<1e-10), "
             "residual %.2e (<1e-12), trace %.2e (<1e-12), %.2f s (<5)",
             worst_cross, worst_res, worst_trace, t));
}

// 2. Path sweep along mu_I = 0.5: total-fidelity dips below 0.5 coincide
// with Re(E) zero crossings, at the enumerated real coordinates.
void criterion_2() {
  Stopwatch sw;
  PathScanConfig pc;
  pc.model = ModelSpec::kitaev(0.6);
  pc.size_l = 16;
  pc.fixed_im = 0.5;
  pc.re_min = -1.5;
  pc.re_max = 1.5;
  pc.n_points = 3001;
  pc.delta_gamma = {0.001, 0.001};
  const PathScanResult path = run_path_scan(pc);
  const double step = (pc.re_max - pc.re_min) / (pc.n_points - 1);

  std::vector<double> dips;
  for (int i = 1; i + 1 < pc.n_points; ++i)
    if (path.total_fid[i] < 0.5 && path.total_fid[i] <= path.total_fid[i - 1] &&
        path.total_fid[i] <= path.total_fid[i + 1])
      dips.push_back(path.re[i]);

  // A real zero crossing of Re(E_pm) is a branch-cut crossing of the
  // radicand: Im(s) changes sign while Re(s) < 0.
  std::vector<double> crossings;
  for (const Momentum& k : path.grid.points) {
    std::vector<Complex> s(pc.n_points);
    for (int i = 0; i < pc.n_points; ++i)
      s[i] = radicand(d_vector(pc.model, k, Complex(path.re[i], pc.fixed_im)));
    for (int i = 0; i < pc.n_points; ++i) {
      if (s[i].imag() == 0.0 && s[i].real() < 0.0) crossings.push_back(path.re[i]);
      if (i + 1 == pc.n_points) break;
      if (s[i].imag() * s[i + 1].imag() < 0.0 && s[i].real() < 0.0 &&
          s[i + 1].real() < 0.0) {
        const double w0 = std::abs(s[i].imag()), w1 = std::abs(s[i + 1].imag());
        crossings.push_back(path.re[i] + step * w0 / (w0 + w1));
      }
    }
  }

  auto near_any = [](double x, const std::vector<double>& xs, double tol) {
    return std::any_of(xs.begin(), xs.end(),
                       [&](double v) { return std::abs(x - v) <= tol; });
  };

  bool coincide = true;
  for (double d : dips) coincide = coincide && near_any(d, crossings, step + 1e-12);
  for (double c : crossings) coincide = coincide && near_any(c, dips, step + 1e-12);

  std::vector<double> expected;
  const double cos2_floor = 1.0 - (0.5 / 0.6) * (0.5 / 0.6);
  for (int m = 0; m <= 8; ++m) {
    const double c = std::cos(2.0 * std::numbers::pi * m / 16.0);
    if (c * c >= cos2_floor) expected.push_back(-c);
  }
  bool located = true;
  for (double e : expected) located = located && near_any(e, dips, 1e-3);
  for (double d : dips) located = located && near_any(d, expected, 1e-3);

  const double t = sw.seconds();
  const bool ok = coincide && located && t < 10.0;
  report(2, ok,
         fmt("path sweep 3001 points: %zu dips vs %zu crossings within one "
             "step %s, coordinates match %zu-value enumeration to 1e-3 %s, "
             "%.2f s (<10)",
             dips.size(), crossings.size(), coincide ? "yes" : "NO",
             expected.size(), located ? "yes" : "NO", t));
}

// 3. Refined E_min vanishes exactly on the closed-form region.
void criterion_3() {
  Stopwatch sw;
  const ModelSpec model = ModelSpec::kitaev(0.6);
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng), y = u(rng);
    const bool inside = std::abs(x) <= 1.0 && x * x + (y / 0.6) * (y / 0.6) >= 1.0;
    const bool vanishes = e_min(model, Complex(x, y)).value < 1e-8;
    if (inside != vanishes) ++mismatches;
  }
  const double t = sw.seconds();
  const bool ok = mismatches == 0 && t < 30.0;
  report(3, ok,
         fmt("region equivalence on 200 random mu: %d mismatches (=0), "
             "%.2f s (<30)",
             mismatches, t));
}

// 4. Two-dimensional models: detected lines vs analytic lines at L=8.
void criterion_4() {
  Stopwatch sw;
  struct Case {
    ModelSpec model;
    double re0, re1, im0, im1;
  };
  const Case cases[] = {
      {ModelSpec::haldane(), -1.5, 1.5, -1.5, 1.5},
      {ModelSpec::qwz(), -2.5, 2.5, -2.0, 2.0},
  };

  bool ok = true;
  std::ostringstream note;
  for (const Case& c : cases) {
    ScanConfig cfg;
    cfg.model = c.model;
    cfg.size_l = 8;
    cfg.re_min = c.re0;
    cfg.re_max = c.re1;
    cfg.im_min = c.im0;
    cfg.im_max = c.im1;
    cfg.n_re = 201;
    cfg.n_im = 201;
    cfg.delta_gamma = {0.01, 0.01};
    const ScanResult scan = run_plane_scan(cfg);
    const ZeroExtraction ex = extract_zeros(scan, 0.99);
    const double half = cfg.re_step() / 2.0;

    std::vector<ZeroLine> in_window;
    for (const ZeroLine& a : analytic_zero_lines(c.model, cfg.size_l))
      if (a.real_part >= c.re0 - 1e-12 && a.real_part <= c.re1 + 1e-12 &&
          (c.im1 >= a.im_abs_min - 1e-12 || c.im0 <= -a.im_abs_min + 1e-12))
        in_window.push_back(a);

    int matched = 0;
    double max_dist = 0.0;
    for (const ZeroLine& a : in_window) {
      double best = 1e30;
      for (const DetectedLine& d : ex.lines)
        best = std::min(best, std::abs(d.real_part - a.real_part));
      if (best <= half) {
        ++matched;
        max_dist = std::max(max_dist, best);
      }
    }
    int stray = 0;
    for (const DetectedLine& d : ex.lines) {
      double best = 1e30;
      for (const ZeroLine& a : in_window)
        best = std::min(best, std::abs(d.real_part - a.real_part));
      if (best > half) ++stray;
    }

    ok = ok && matched == static_cast<int>(in_window.size()) && stray == 0;
    note << c.model.name() << " " << matched << "/" << in_window.size()
         << " lines matched (max dist " << max_dist << ", half step " << half
         << "), " << stray << " stray; ";
  }

  const double t = sw.seconds();
  ok = ok && t < 300.0;
  report(4, ok, note.str() + fmt("%.1f s (<300)", t));
}

// 5. Critical-point recovery from zero-line extremes.
void criterion_5() {
  const BoundaryEstimate bk = boundary_estimate(ModelSpec::kitaev(0.6), 16);
  const BoundaryEstimate bq = boundary_estimate(ModelSpec::qwz(), 8);
  const bool kitaev_exact =
      std::max(std::abs(bk.min_real), std::abs(bk.max_real)) == 1.0;
  const bool qwz_exact =
      std::max(std::abs(bq.min_real), std::abs(bq.max_real)) == 2.0;

  const double bound = 3.0 * std::sqrt(3.0) / 4.0;
  const auto study = run_convergence_study(ModelSpec::haldane(), {8, 16, 32, 64});
  bool haldane_ok = study.size() == 4;
  for (const BoundaryEstimate& b : study)
    haldane_ok = haldane_ok &&
                 std::max(std::abs(b.min_real), std::abs(b.max_real)) <=
                     bound + 1e-12 &&
                 b.gap_to_critical > 0.0;
  for (std::size_t i = 1; i < study.size(); ++i)
    haldane_ok = haldane_ok &&
                 study[i].gap_to_critical < study[i - 1].gap_to_critical;
  haldane_ok = haldane_ok && study.back().gap_to_critical < 0.02;

  const bool ok = kitaev_exact && qwz_exact && haldane_ok;
  report(5, ok,
         fmt("critical points: kitaev max|re| %.17g (=1 exact %s), qwz %.17g "
             "(=2 exact %s), haldane gaps %.4f/%.4f/%.4f/%.4f decreasing with "
             "L=64 gap <0.02 %s",
             std::max(std::abs(bk.min_real), std::abs(bk.max_real)),
             kitaev_exact ? "yes" : "NO",
             std::max(std::abs(bq.min_real), std::abs(bq.max_real)),
             qwz_exact ? "yes" : "NO", study[0].gap_to_critical,
             study[1].gap_to_critical, study[2].gap_to_critical,
             study[3].gap_to_critical, haldane_ok ? "yes" : "NO"));
}

// 6. QWZ u=0 zero line at every even L, and the scan sees it.
void criterion_6() {
  bool line_ok = true;
  int checked = 0;
  for (int L : {4, 6, 8, 10, 12, 14, 16, 32, 64, 128}) {
    ++checked;
    bool found = false;
    for (const ZeroLine& z : analytic_zero_lines(ModelSpec::qwz(), L))
      found = found ||
              (std::abs(z.real_part) <= 1e-12 && z.im_abs_min <= 1e-12);
    line_ok = line_ok && found;
  }

  ScanConfig cfg;
  cfg.model = ModelSpec::qwz();
  cfg.size_l = 8;
  cfg.re_min = cfg.im_min = -0.02;
  cfg.re_max = cfg.im_max = 0.02;
  cfg.n_re = cfg.n_im = 3;
  cfg.delta_gamma = {0.01, 0.01};
  const ScanResult r = run_plane_scan(cfg);
  const double f0 = r.fmin[r.index(1, 1)];

  const bool ok = line_ok && f0 < 0.1;
  report(6, ok,
         fmt("qwz u=0: axis-crossing analytic line at %d even sizes %s, "
             "scanned F_min at 0+0i is %.3e (<0.1)",
             checked, line_ok ? "yes" : "NO", f0));
}

// 7. Windows beyond the critical coupling hold no zeros and a finite gap.
void criterion_7() {
  ScanConfig cfg;
  cfg.model = ModelSpec::kitaev(0.6);
  cfg.size_l = 16;
  cfg.re_min = 1.05;
  cfg.re_max = 1.5;
  cfg.im_min = -0.5;
  cfg.im_max = 0.5;
  cfg.n_re = 46;
  cfg.n_im = 21;
  cfg.quantities = quantity::kFmin | quantity::kEmin;
  const ScanResult r = run_plane_scan(cfg);
  const ZeroExtraction ex = extract_zeros(r, 0.99);
  const double emin_floor = *std::min_element(r.emin.begin(), r.emin.end());

  const bool ok = ex.lines.empty() && emin_floor > 0.0;
  report(7, ok,
         fmt("exterior window mu_R in [1.05,1.5]: %zu confirmed lines (=0), "
             "min E_min %.3e (>0)",
             ex.lines.size(), emin_floor));
}

// 8. Thread-count determinism of the scan command's CSV output.
void criterion_8() {
  const std::string tmp = "acceptance_tmp";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  auto run = [&](int threads, const std::string& dir) {
    const std::string cmd =
        std::string("'") + FIDZERO_CLI_PATH +
        "' scan --model kitaev -L 16 '--window=-1.5,1.5,-0.9,0.9' "
        "--res 121,61 --threads " +
        std::to_string(threads) + " -o " + tmp + "/" + dir + " >" + tmp +
        "/log_" + dir + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto digest = [&](const std::string& dir) {
    const auto m = nlohmann::json::parse(slurp(tmp + "/" + dir + "/manifest.json"));
    for (const auto& o : m["outputs"])
      if (o["file"] == "fmin.csv") return o["sha256"].get<std::string>();
    return std::string();
  };

  const int rc1 = run(1, "t1");
  const int rcn = run(4, "t4");
  const std::string csv1 = slurp(tmp + "/t1/fmin.csv");
  const std::string csvn = slurp(tmp + "/t4/fmin.csv");
  const std::string d1 = digest("t1"), dn = digest("t4");

  const bool ok = rc1 == 0 && rcn == 0 && !csv1.empty() && csv1 == csvn &&
                  !d1.empty() && d1 == dn;
  report(8, ok,
         fmt("scan determinism threads 1 vs 4: exit %d/%d, %zu-byte CSVs %s, "
             "digests %s",
             rc1, rcn, csv1.size(),
             csv1 == csvn && !csv1.empty() ? "identical" : "DIFFER",
             d1 == dn && !d1.empty() ? "identical" : "DIFFER"));
}

// 9. SSH at t2=-1 reproduces the Kitaev chain at Delta=1 under mu = -gamma.
void criterion_9() {
  const ModelSpec ssh = ModelSpec::ssh(-1.0);
  const ModelSpec kit = ModelSpec::kitaev(1.0);
  std::mt19937 rng(543);
  std::uniform_real_distribution<double> uk(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> ug(-2.0, 2.0);

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Momentum k{uk(rng), 0.0};
    const Complex gamma(ug(rng), ug(rng));
    worst = std::max(worst,
                     std::abs(re_gap(ssh, k, gamma) - re_gap(kit, k, -gamma)));
    const ModeSolution ms = eig2x2(d_vector(ssh, k, gamma));
    const ModeSolution mk = eig2x2(d_vector(kit, k, -gamma));
    worst = std::max(worst, std::abs((ms.e_plus - ms.e_minus) -
                                     (mk.e_plus - mk.e_minus)));
  }

  const bool ok = worst <= 1e-12;
  report(9, ok,
         fmt("ssh/kitaev mapping at 1000 random (k, gamma): worst gap "
             "difference %.2e (<=1e-12)",
             worst));
}

}  // namespace

int main() {
  struct Entry {
    int n;
    void (*fn)();
  };
  const Entry entries[] = {{1, criterion_1}, {2, criterion_2}, {3, criterion_3},
                           {4, criterion_4}, {5, criterion_5}, {6, criterion_6},
                           {7, criterion_7}, {8, criterion_8}, {9, criterion_9}};
  for (const Entry& e : entries) {
    try {
      e.fn();
    } catch (const std::exception& ex) {
      report(e.n, false, std::string("unexpected exception: ") + ex.what());
    }
  }
  return g_failures;
}
