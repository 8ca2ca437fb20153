#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "fidzero/scan.hpp"
#include "fidzero/zeros.hpp"
#include "util.hpp"
#include "writers.hpp"

namespace fidzero::cli {
namespace {

struct ModelArgsView {
  const OptText* model;
  const OptText* delta;
  const OptText* t1;
  const OptText* t2;
  const OptText* theta;
  const OptText* full_zone;
};

ModelSpec resolve_model(ConfigResolver& cfg, const ModelArgsView& a) {
  ModelOptions mo;
  mo.model = cfg.resolve("model", a.model->given, a.model->text, "kitaev");
  mo.delta =
      parse_double("delta", cfg.resolve("delta", a.delta->given, a.delta->text,
                                        canon_double(ModelOptions{}.delta)));
  mo.t1 = parse_double("t1", cfg.resolve("t1", a.t1->given, a.t1->text,
                                         canon_double(ModelOptions{}.t1)));
  const std::string t2_default = mo.model == "haldane" ? "0.5" : "-1";
  mo.t2 =
      parse_double("t2", cfg.resolve("t2", a.t2->given, a.t2->text, t2_default));
  mo.theta = parse_double(
      "theta", cfg.resolve("theta", a.theta->given, a.theta->text,
                           canon_double(ModelSpec::kDefaultTheta)));
  mo.full_zone = parse_bool(
      "full-zone", cfg.resolve("full-zone", a.full_zone->given,
                               a.full_zone->text, "false"));
  cfg.canonicalize("delta", canon_double(mo.delta));
  cfg.canonicalize("t1", canon_double(mo.t1));
  cfg.canonicalize("t2", canon_double(mo.t2));
  cfg.canonicalize("theta", canon_double(mo.theta));
  cfg.canonicalize("full-zone", canon_bool(mo.full_zone));
  return make_model(mo);
}

std::pair<double, double> resolve_pair(ConfigResolver& cfg,
                                       const std::string& key,
                                       const OptText& opt,
                                       const std::string& default_text) {
  const std::string text = cfg.resolve(key, opt.given, opt.text, default_text);
  auto parts = split_csv(text);
  if (parts.size() != 2)
    throw std::invalid_argument(key + ": expected two comma-separated values, got '" +
                                text + "'");
  double a = parse_double(key, parts[0]);
  double b = parse_double(key, parts[1]);
  cfg.canonicalize(key, canon_double(a) + "," + canon_double(b));
  return {a, b};
}

unsigned parse_quantities(const std::string& text) {
  unsigned mask = 0;
  for (const auto& tok : split_csv(text)) {
    if (tok == "fmin")
      mask |= quantity::kFmin;
    else if (tok == "emin")
      mask |= quantity::kEmin;
    else if (tok == "total")
      mask |= quantity::kTotal;
    else if (tok == "all")
      mask |= quantity::kAll;
    else
      throw std::invalid_argument(
          "quantities: unknown quantity '" + tok +
          "' (expected fmin, emin, total, or all)");
  }
  return mask;
}

std::string quantities_canon(unsigned mask) {
  std::string s;
  if (mask & quantity::kFmin) s += "fmin";
  if (mask & quantity::kEmin) s += s.empty() ? "emin" : ",emin";
  if (mask & quantity::kTotal) s += s.empty() ? "total" : ",total";
  return s;
}

bool resolve_flag(ConfigResolver& cfg, const std::string& key,
                  const OptText& opt) {
  bool v = parse_bool(key, cfg.resolve(key, opt.given, opt.text, "false"));
  cfg.canonicalize(key, canon_bool(v));
  return v;
}

struct ResolvedScan {
  ScanConfig config;
  bool argmin_out = false;
  bool resume = false;
  bool gnuplot = false;
  std::string out_dir;
};

ResolvedScan resolve_scan(ConfigResolver& cfg, const ScanArgs& a) {
  ResolvedScan r;
  r.config.model = resolve_model(
      cfg, {&a.model, &a.delta, &a.t1, &a.t2, &a.theta, &a.full_zone});
  r.config.size_l =
      parse_int("L", cfg.resolve("L", a.size_l.given, a.size_l.text, "16"));
  cfg.canonicalize("L", std::to_string(r.config.size_l));

  const std::string window =
      cfg.resolve("window", a.window.given, a.window.text, "-1.5,1.5,-1.5,1.5");
  auto wp = split_csv(window);
  if (wp.size() != 4)
    throw std::invalid_argument(
        "window: expected re_min,re_max,im_min,im_max, got '" + window + "'");
  r.config.re_min = parse_double("window", wp[0]);
  r.config.re_max = parse_double("window", wp[1]);
  r.config.im_min = parse_double("window", wp[2]);
  r.config.im_max = parse_double("window", wp[3]);
  cfg.canonicalize("window", canon_double(r.config.re_min) + "," +
                                 canon_double(r.config.re_max) + "," +
                                 canon_double(r.config.im_min) + "," +
                                 canon_double(r.config.im_max));

  const std::string res = cfg.resolve("res", a.res.given, a.res.text, "301,301");
  auto rp = split_csv(res);
  if (rp.size() != 2)
    throw std::invalid_argument("res: expected n_re,n_im, got '" + res + "'");
  r.config.n_re = parse_int("res", rp[0]);
  r.config.n_im = parse_int("res", rp[1]);
  cfg.canonicalize("res", std::to_string(r.config.n_re) + "," +
                              std::to_string(r.config.n_im));

  auto [dre, dim] = resolve_pair(cfg, "dgamma", a.dgamma, "0.01,0.01");
  r.config.delta_gamma = Complex(dre, dim);

  r.config.quantities = parse_quantities(
      cfg.resolve("quantities", a.quantities.given, a.quantities.text, "fmin"));
  cfg.canonicalize("quantities", quantities_canon(r.config.quantities));

  r.config.emin_resolution = parse_int(
      "emin.res", cfg.resolve("emin.res", a.emin_res.given, a.emin_res.text, "0"));
  cfg.canonicalize("emin.res", std::to_string(r.config.emin_resolution));
  r.config.emin_refine =
      parse_bool("emin.refine", cfg.resolve("emin.refine", a.emin_refine.given,
                                            a.emin_refine.text, "true"));
  cfg.canonicalize("emin.refine", canon_bool(r.config.emin_refine));

  r.config.strictness = resolve_flag(cfg, "strict", a.strict)
                            ? Strictness::strict
                            : Strictness::lenient;
  r.config.threads =
      parse_int("threads", cfg.resolve("threads", a.threads.given,
                                       a.threads.text, "0"));
  cfg.canonicalize("threads", std::to_string(r.config.threads));
  r.config.cell_cap = static_cast<std::size_t>(
      parse_ll("cap", cfg.resolve("cap", a.cap.given, a.cap.text, "4000000")));
  cfg.canonicalize("cap", std::to_string(r.config.cell_cap));

  r.argmin_out = resolve_flag(cfg, "argmin", a.argmin);
  r.resume = resolve_flag(cfg, "resume", a.resume);
  r.gnuplot = resolve_flag(cfg, "gnuplot-hints", a.gnuplot);
  r.out_dir = cfg.resolve("out", a.out.given, a.out.text, ".");

  r.config.validate();
  return r;
}

std::string model_comment(const ModelSpec& m) {
  switch (m.kind) {
    case ModelKind::kitaev: {
      std::string s = "kitaev; delta = " + canon_double(m.delta);
      if (m.kitaev_full_zone) s += "; full-zone";
      return s;
    }
    case ModelKind::ssh:
      return "ssh; t2 = " + canon_double(m.t2);
    case ModelKind::haldane:
      return "haldane; t1 = " + canon_double(m.t1) +
             "; t2 = " + canon_double(m.t2) +
             "; theta = " + canon_double(m.theta);
    case ModelKind::qwz:
      return "qwz";
  }
  return {};
}

std::string dgamma_comment(Complex d) {
  return "dgamma = " + canon_double(d.real()) + " + " +
         canon_double(d.imag()) +
         "i; fidelity between gamma - dgamma/2 and gamma + dgamma/2";
}

std::vector<std::string> scan_comments(const ResolvedScan& rs,
                                       std::size_t modes, const char* what) {
  const ScanConfig& c = rs.config;
  std::vector<std::string> v;
  v.push_back(std::string(kToolName) + " " + kToolVersion + " scan: " + what);
  v.push_back("model = " + model_comment(c.model) +
              "; gamma = complexified " + c.model.driving_symbol());
  v.push_back("L = " + std::to_string(c.size_l) + " (" +
              std::to_string(modes) + " modes)");
  v.push_back("window: re in [" + canon_double(c.re_min) + ", " +
              canon_double(c.re_max) + "], im in [" + canon_double(c.im_min) +
              ", " + canon_double(c.im_max) + "]");
  v.push_back("res = " + std::to_string(c.n_re) + " x " +
              std::to_string(c.n_im) +
              "; rows = im ascending, cols = re ascending");
  return v;
}

void add_gnuplot_grid_hints(std::vector<std::string>& v, const ScanConfig& c,
                            const std::string& file) {
  v.push_back("gnuplot: set datafile separator \",\"");
  v.push_back("gnuplot: set view map");
  v.push_back("gnuplot: splot \"" + file + "\" matrix using (" +
              canon_double(c.re_min) + " + $1*" + canon_double(c.re_step()) +
              "):(" + canon_double(c.im_min) + " + $2*" +
              canon_double(c.im_step()) + "):3 with image");
}

std::string momentum_comment(const MomentumGrid& grid, std::size_t j) {
  const Momentum& k = grid.points[j];
  std::string s = "mode " + std::to_string(j) + ": k = ";
  if (grid.kind == ModelKind::haldane || grid.kind == ModelKind::qwz)
    s += "(" + canon_double(k.kx) + ", " + canon_double(k.ky) + ")";
  else
    s += canon_double(k.kx);
  return s;
}

json momenta_json(const ModelSpec& model, const std::vector<Momentum>& ks) {
  json arr = json::array();
  for (const auto& k : ks) {
    if (model.dimension() == 2)
      arr.push_back({k.kx, k.ky});
    else
      arr.push_back({k.kx});
  }
  return arr;
}

json analytic_lines_json(const ModelSpec& model, int size_l,
                         const std::vector<ZeroLine>& lines) {
  json j;
  j["v"] = 1;
  j["model"] = model.name();
  j["L"] = size_l;
  json arr = json::array();
  for (const auto& line : lines) {
    arr.push_back({{"real_part", line.real_part},
                   {"im_abs_min", line.im_abs_min},
                   {"momenta", momenta_json(model, line.momenta)}});
  }
  j["lines"] = std::move(arr);
  return j;
}

}  // namespace

int run_scan(const ScanArgs& args) {
  ConfigResolver cfg;
  if (!args.config_path.empty()) cfg.load_file(args.config_path);
  ResolvedScan rs = resolve_scan(cfg, args);
  const ScanConfig& c = rs.config;
  ensure_directory(rs.out_dir);

  Manifest manifest("scan", rs.out_dir, cfg.resolved_json(), c.model);

  ScanResult result;
  if (rs.resume) {
    ScanCheckpoint ck;
    ck.file = path_join(rs.out_dir, "scan.checkpoint");
    result = run_plane_scan(c, ck);
  } else {
    result = run_plane_scan(c);
  }

  const MomentumGrid grid = momentum_grid(c.model, c.size_l);

  if (c.quantities & quantity::kFmin) {
    auto comments = scan_comments(rs, grid.points.size(),
                                  "minimum mode fidelity f_min");
    comments.push_back(dgamma_comment(c.delta_gamma));
    if (rs.gnuplot) add_gnuplot_grid_hints(comments, c, "fmin.csv");
    write_grid_csv(path_join(rs.out_dir, "fmin.csv"), comments, result.fmin,
                   c.n_re, c.n_im);
    manifest.add_output("fmin.csv");
    if (rs.argmin_out) {
      auto acomments = scan_comments(rs, grid.points.size(),
                                     "f_min argmin mode index (-1 = unset)");
      acomments.push_back(dgamma_comment(c.delta_gamma));
      for (std::size_t j = 0; j < grid.points.size(); ++j)
        acomments.push_back(momentum_comment(grid, j));
      write_argmin_csv(path_join(rs.out_dir, "argmin.csv"), acomments,
                       result.argmin, c.n_re, c.n_im);
      manifest.add_output("argmin.csv");
    }
  }
  if (c.quantities & quantity::kEmin) {
    auto comments = scan_comments(rs, grid.points.size(),
                                  "minimum real-part energy gap e_min");
    comments.push_back(
        "emin: res = " + std::to_string(c.emin_resolution) +
        (c.emin_resolution == 0 ? " (model default)" : "") +
        ", refine = " + canon_bool(c.emin_refine));
    if (rs.gnuplot) add_gnuplot_grid_hints(comments, c, "emin.csv");
    write_grid_csv(path_join(rs.out_dir, "emin.csv"), comments, result.emin,
                   c.n_re, c.n_im);
    manifest.add_output("emin.csv");
  }
  if (c.quantities & quantity::kTotal) {
    auto comments = scan_comments(rs, grid.points.size(),
                                  "total fidelity (product over grid modes)");
    comments.push_back(dgamma_comment(c.delta_gamma));
    if (rs.gnuplot) add_gnuplot_grid_hints(comments, c, "total.csv");
    write_grid_csv(path_join(rs.out_dir, "total.csv"), comments, result.total,
                   c.n_re, c.n_im);
    manifest.add_output("total.csv");
  }

  std::size_t ties = 0, eps = 0;
  for (auto f : result.cell_flags) {
    if (f & cellflag::kTie) ++ties;
    if (f & cellflag::kEp) ++eps;
  }
  manifest.root()["grid"] = {{"n_re", c.n_re},
                             {"n_im", c.n_im},
                             {"modes", grid.points.size()}};
  manifest.root()["flags"] = {{"real_part_tie_cells", ties},
                              {"exceptional_point_cells", eps}};
  manifest.root()["wall_seconds"] = result.wall_seconds;
  if (eps)
    manifest.add_warning(std::to_string(eps) +
                         " cell(s) hit an exceptional point; fidelity 0 "
                         "recorded there (lenient mode)");
  if (ties)
    manifest.add_warning(std::to_string(ties) +
                         " cell(s) had a real-part tie when selecting the "
                         "ground mode");
  manifest.write();
  return 0;
}

namespace {

struct ResolvedPath {
  PathScanConfig config;
  bool gnuplot = false;
  std::string out_dir;
};

ResolvedPath resolve_path(ConfigResolver& cfg, const PathArgs& a) {
  ResolvedPath r;
  r.config.model = resolve_model(
      cfg, {&a.model, &a.delta, &a.t1, &a.t2, &a.theta, &a.full_zone});
  r.config.size_l =
      parse_int("L", cfg.resolve("L", a.size_l.given, a.size_l.text, "16"));
  cfg.canonicalize("L", std::to_string(r.config.size_l));
  r.config.fixed_im =
      parse_double("im", cfg.resolve("im", a.im.given, a.im.text, "0"));
  cfg.canonicalize("im", canon_double(r.config.fixed_im));
  auto [lo, hi] = resolve_pair(cfg, "window", a.window, "-1.5,1.5");
  r.config.re_min = lo;
  r.config.re_max = hi;
  r.config.n_points = parse_int(
      "points", cfg.resolve("points", a.points.given, a.points.text, "601"));
  cfg.canonicalize("points", std::to_string(r.config.n_points));
  auto [dre, dim] = resolve_pair(cfg, "dgamma", a.dgamma, "0.01,0.01");
  r.config.delta_gamma = Complex(dre, dim);
  r.config.strictness = resolve_flag(cfg, "strict", a.strict)
                            ? Strictness::strict
                            : Strictness::lenient;
  r.gnuplot = resolve_flag(cfg, "gnuplot-hints", a.gnuplot);
  r.out_dir = cfg.resolve("out", a.out.given, a.out.text, ".");
  r.config.validate();
  return r;
}

}  // namespace

int run_path(const PathArgs& args) {
  ConfigResolver cfg;
  if (!args.config_path.empty()) cfg.load_file(args.config_path);
  ResolvedPath rp = resolve_path(cfg, args);
  const PathScanConfig& c = rp.config;
  ensure_directory(rp.out_dir);

  Manifest manifest("path", rp.out_dir, cfg.resolved_json(), c.model);
  PathScanResult result = run_path_scan(c);

  std::vector<std::string> comments;
  comments.push_back(std::string(kToolName) + " " + kToolVersion +
                     " path: total fidelity and Re(E) along a horizontal "
                     "parameter path");
  comments.push_back("model = " + model_comment(c.model) +
                     "; gamma = complexified " + c.model.driving_symbol());
  comments.push_back("L = " + std::to_string(c.size_l) + " (" +
                     std::to_string(result.grid.points.size()) + " modes)");
  comments.push_back("path: re in [" + canon_double(c.re_min) + ", " +
                     canon_double(c.re_max) + "], im = " +
                     canon_double(c.fixed_im) + ", " +
                     std::to_string(c.n_points) + " points");
  comments.push_back(dgamma_comment(c.delta_gamma));
  for (std::size_t j = 0; j < result.grid.points.size(); ++j)
    comments.push_back(momentum_comment(result.grid, j));
  if (rp.gnuplot) {
    comments.push_back("gnuplot: set datafile separator \",\"");
    comments.push_back(
        "gnuplot: plot \"path.csv\" using 1:2 with lines title \"total "
        "fidelity\"");
  }
  write_path_csv(path_join(rp.out_dir, "path.csv"), comments, result);
  manifest.add_output("path.csv");
  manifest.root()["grid"] = {{"points", c.n_points},
                             {"modes", result.grid.points.size()}};
  manifest.write();
  return 0;
}

int run_zeros(const ZerosArgs& args) {
  ConfigResolver cfg;
  if (!args.config_path.empty()) cfg.load_file(args.config_path);
  const std::string scan_dir =
      cfg.resolve("scan", args.scan_dir.given, args.scan_dir.text, "");
  const double threshold = parse_double(
      "threshold",
      cfg.resolve("threshold", args.threshold.given, args.threshold.text,
                  "0.99"));
  if (!(threshold > 0.0) || !(threshold <= 1.0))
    throw std::invalid_argument("threshold: must lie in (0, 1], got " +
                                canon_double(threshold));
  cfg.canonicalize("threshold", canon_double(threshold));
  const std::string out_dir =
      cfg.resolve("out", args.out.given, args.out.text, ".");
  ensure_directory(out_dir);

  if (scan_dir.empty()) {
    ModelSpec model =
        resolve_model(cfg, {&args.model, &args.delta, &args.t1, &args.t2,
                            &args.theta, &args.full_zone});
    const int size_l = parse_int(
        "L", cfg.resolve("L", args.size_l.given, args.size_l.text, "16"));
    cfg.canonicalize("L", std::to_string(size_l));

    auto lines = analytic_zero_lines(model, size_l);
    Manifest manifest("zeros", out_dir, cfg.resolved_json(), model);
    write_json_file(path_join(out_dir, "zeros_analytic.json"),
                    analytic_lines_json(model, size_l, lines));
    manifest.add_output("zeros_analytic.json");
    manifest.root()["lines"] = lines.size();
    manifest.write();
    return 0;
  }

  const std::string man_path = path_join(scan_dir, "manifest.json");
  json man = json::parse(read_text_file(man_path));
  if (!man.is_object() || man.value("command", std::string()) != "scan")
    throw std::invalid_argument("scan: " + man_path +
                                " is not a scan manifest");
  ConfigResolver scan_cfg;
  scan_cfg.load_file(man_path);
  ResolvedScan rs = resolve_scan(scan_cfg, ScanArgs{});
  const ScanConfig& sc = rs.config;
  if (!(sc.quantities & quantity::kFmin))
    throw std::invalid_argument(
        "scan: " + scan_dir + " has no f_min grid to extract zeros from");

  ScanResult scan;
  scan.config = sc;
  scan.fmin = read_grid_csv(path_join(scan_dir, "fmin.csv"), sc.n_re, sc.n_im);
  const std::string argmin_path = path_join(scan_dir, "argmin.csv");
  if (std::filesystem::exists(argmin_path))
    scan.argmin = read_argmin_csv(argmin_path, sc.n_re, sc.n_im);
  scan.rows_completed = sc.n_im;

  ZeroExtraction extraction = extract_zeros(scan, threshold);
  auto analytic = analytic_zero_lines(sc.model, sc.size_l);
  const double half_step = sc.re_step() / 2.0;

  Manifest manifest("zeros", out_dir, cfg.resolved_json(), sc.model);
  if (args.model.given)
    manifest.add_warning(
        "model options ignored: the scan manifest fixes the model");

  write_json_file(path_join(out_dir, "zeros_analytic.json"),
                  analytic_lines_json(sc.model, sc.size_l, analytic));
  manifest.add_output("zeros_analytic.json");

  json det;
  det["v"] = 1;
  det["threshold"] = threshold;
  det["half_step"] = half_step;
  json dlines = json::array();
  for (const auto& line : extraction.lines)
    dlines.push_back({{"real_part", line.real_part},
                      {"im_min", line.im_min},
                      {"im_max", line.im_max},
                      {"support", line.support}});
  det["lines"] = std::move(dlines);
  json unconf = json::array();
  for (const auto& p : extraction.unconfirmed)
    unconf.push_back({{"re", p.re}, {"im", p.im}, {"fmin", p.fmin}});
  det["unconfirmed"] = std::move(unconf);
  write_json_file(path_join(out_dir, "zeros_detected.json"), det);
  manifest.add_output("zeros_detected.json");

  std::vector<double> in_window;
  for (const auto& line : analytic) {
    if (line.real_part < sc.re_min - 1e-12 ||
        line.real_part > sc.re_max + 1e-12)
      continue;
    const bool reaches = sc.im_max >= line.im_abs_min - 1e-12 ||
                         sc.im_min <= -line.im_abs_min + 1e-12;
    if (reaches) in_window.push_back(line.real_part);
  }
  json comparison;
  comparison["v"] = 1;
  comparison["half_step"] = half_step;
  comparison["analytic_in_window"] = in_window;
  json detected_reals = json::array();
  for (const auto& line : extraction.lines)
    detected_reals.push_back(line.real_part);
  comparison["detected"] = detected_reals;

  json matches = json::array();
  json unmatched_a = json::array();
  json unmatched_d = json::array();
  double max_dist = 0.0;
  bool all_matched = true;
  for (double a : in_window) {
    bool found = false;
    double best = 0.0, best_d = 0.0;
    for (const auto& line : extraction.lines) {
      const double dist = std::abs(line.real_part - a);
      if (!found || dist < best_d) {
        found = true;
        best = line.real_part;
        best_d = dist;
      }
    }
    if (found && best_d <= half_step) {
      matches.push_back(
          {{"analytic", a}, {"detected", best}, {"distance", best_d}});
      if (best_d > max_dist) max_dist = best_d;
    } else {
      unmatched_a.push_back(a);
      all_matched = false;
    }
  }
  for (const auto& line : extraction.lines) {
    double best_d = -1.0;
    for (double a : in_window) {
      const double dist = std::abs(line.real_part - a);
      if (best_d < 0.0 || dist < best_d) best_d = dist;
    }
    if (best_d < 0.0 || best_d > half_step) {
      unmatched_d.push_back(line.real_part);
      all_matched = false;
    }
  }
  comparison["matches"] = std::move(matches);
  comparison["unmatched_analytic"] = std::move(unmatched_a);
  comparison["unmatched_detected"] = std::move(unmatched_d);
  comparison["max_match_distance"] = max_dist;
  comparison["all_matched"] = all_matched;
  write_json_file(path_join(out_dir, "comparison.json"), comparison);
  manifest.add_output("comparison.json");

  manifest.root()["scan"] = {{"dir", scan_dir},
                             {"config", sc.canonical_string()}};
  manifest.root()["lines"] = {{"analytic", analytic.size()},
                              {"analytic_in_window", in_window.size()},
                              {"detected", extraction.lines.size()},
                              {"unconfirmed", extraction.unconfirmed.size()}};
  manifest.root()["all_matched"] = all_matched;
  manifest.write();
  return 0;
}

int run_converge(const ConvergeArgs& args) {
  ConfigResolver cfg;
  if (!args.config_path.empty()) cfg.load_file(args.config_path);
  ModelSpec model =
      resolve_model(cfg, {&args.model, &args.delta, &args.t1, &args.t2,
                          &args.theta, &args.full_zone});
  const std::string l_text =
      cfg.resolve("L", args.l_list.given, args.l_list.text, "8,16,32,64");
  std::vector<int> sizes;
  for (const auto& tok : split_csv(l_text)) sizes.push_back(parse_int("L", tok));
  std::string canon;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    canon += (i ? "," : "") + std::to_string(sizes[i]);
  cfg.canonicalize("L", canon);
  const std::string out_dir =
      cfg.resolve("out", args.out.given, args.out.text, ".");
  ensure_directory(out_dir);

  auto table = run_convergence_study(model, sizes);

  Manifest manifest("converge", out_dir, cfg.resolved_json(), model);
  std::vector<std::string> comments;
  comments.push_back(std::string(kToolName) + " " + kToolVersion +
                     " converge: zero-line boundary vs critical points");
  comments.push_back("model = " + model_comment(model) +
                     "; gamma = complexified " + model.driving_symbol());
  comments.push_back("L = " + canon);
  write_convergence_csv(path_join(out_dir, "convergence.csv"), comments,
                        table);
  manifest.add_output("convergence.csv");
  manifest.root()["rows"] = table.size();
  manifest.write();
  return 0;
}

int run_models() {
  const ModelSpec specs[] = {ModelSpec::kitaev(), ModelSpec::ssh(),
                             ModelSpec::haldane(), ModelSpec::qwz()};
  std::printf("%-9s %-4s %-8s %-44s %s\n", "model", "dim", "driving",
              "defaults", "critical points");
  for (const ModelSpec& m : specs) {
    std::string defaults;
    switch (m.kind) {
      case ModelKind::kitaev:
        defaults = "delta=" + canon_double(m.delta);
        break;
      case ModelKind::ssh:
        defaults = "t2=" + canon_double(m.t2);
        break;
      case ModelKind::haldane:
        defaults = "t1=" + canon_double(m.t1) + ", t2=" + canon_double(m.t2) +
                   ", theta=" + canon_double(m.theta);
        break;
      case ModelKind::qwz:
        defaults = "(none)";
        break;
    }
    std::string crit;
    for (double c : critical_points(m))
      crit += (crit.empty() ? "" : ", ") + canon_double(c);
    std::printf("%-9s %-4d %-8s %-44s %s\n", m.name().c_str(), m.dimension(),
                m.driving_symbol().c_str(), defaults.c_str(), crit.c_str());
  }
  std::printf(
      "\nkitaev samples the half zone k = 2 pi m / L, m = 0..L/2 by default; "
      "--full-zone samples m = -L/2+1..L/2.\n");
  return 0;
}

}  // namespace fidzero::cli
