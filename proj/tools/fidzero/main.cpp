#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fidzero/eig2.hpp"
#include "fidzero/scan.hpp"
#include "json.hpp"
#include "writers.hpp"

namespace {

using fidzero::cli::OptText;

void add_text(CLI::App* cmd, const std::string& flag, OptText& slot,
              const std::string& desc) {
  cmd->add_option_function<std::string>(
      flag,
      [&slot](const std::string& v) {
        slot.text = v;
        slot.given = true;
      },
      desc);
}

void add_switch(CLI::App* cmd, const std::string& flag, OptText& slot,
                const std::string& desc) {
  cmd->add_flag_callback(
      flag,
      [&slot]() {
        slot.text = "true";
        slot.given = true;
      },
      desc);
}

template <typename Args>
void add_model_options(CLI::App* cmd, Args& a) {
  add_text(cmd, "--model", a.model, "model name: kitaev, ssh, haldane, qwz");
  add_text(cmd, "--delta", a.delta, "kitaev pairing strength (default 0.6)");
  add_text(cmd, "--t1", a.t1, "nearest-neighbour hopping (default 1)");
  add_text(cmd, "--t2", a.t2,
           "second hopping: ssh inter-cell (default -1), haldane "
           "next-nearest (default 0.5)");
  add_text(cmd, "--theta", a.theta, "haldane flux phase (default pi/6)");
  add_switch(cmd, "--full-zone", a.full_zone,
             "kitaev only: sample the full Brillouin zone");
}

int dispatch(const std::function<int()>& body) {
  try {
    return body();
  } catch (const fidzero::ResolutionCapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const fidzero::DegenerateModeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fidzero::cli;

  CLI::App app{std::string(kToolName) +
               " - fidelity zeros of two-band lattice models in the complex "
               "parameter plane"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand(
      "scan", "sample f_min / e_min / total fidelity over a window of the "
              "complex parameter plane");
  add_model_options(scan, scan_args);
  add_text(scan, "-L,--size", scan_args.size_l, "chain/lattice size (default 16)");
  add_text(scan, "--window", scan_args.window,
           "re_min,re_max,im_min,im_max (default -1.5,1.5,-1.5,1.5; use "
           "--window=... for negative values)");
  add_text(scan, "--res", scan_args.res, "n_re,n_im grid nodes (default 301,301)");
  add_text(scan, "--dgamma", scan_args.dgamma,
           "displacement re,im between the two fidelity arguments (default "
           "0.01,0.01)");
  add_text(scan, "--quantities", scan_args.quantities,
           "comma list of fmin, emin, total, all (default fmin)");
  add_text(scan, "--emin.res", scan_args.emin_res,
           "e_min coarse resolution, 0 = model default (default 0)");
  add_text(scan, "--emin.refine", scan_args.emin_refine,
           "refine e_min minima locally: true/false (default true)");
  add_switch(scan, "--strict", scan_args.strict,
             "fail (exit 4) on exceptional points instead of recording 0");
  add_text(scan, "--threads", scan_args.threads,
           "worker threads, 0 = hardware concurrency (default 0)");
  add_text(scan, "--cap", scan_args.cap,
           "cell-count cap guarding runaway resolutions (default 4000000)");
  add_switch(scan, "--argmin", scan_args.argmin,
             "also write argmin.csv (f_min argmin mode index)");
  add_switch(scan, "--resume", scan_args.resume,
             "resume from / leave behind a row checkpoint in the out dir");
  add_switch(scan, "--gnuplot-hints", scan_args.gnuplot,
             "embed ready-to-paste gnuplot commands in CSV headers");
  add_text(scan, "-o,--out", scan_args.out, "output directory (default .)");
  scan->add_option("--config", scan_args.config_path,
                   "JSON config file (flat keys named like the long flags; a "
                   "manifest.json is accepted)");

  PathArgs path_args;
  CLI::App* path = app.add_subcommand(
      "path", "sweep a horizontal path: total fidelity and all Re(E) bands");
  add_model_options(path, path_args);
  add_text(path, "-L,--size", path_args.size_l, "chain/lattice size (default 16)");
  add_text(path, "--im", path_args.im,
           "fixed imaginary part of gamma (default 0)");
  add_text(path, "--window", path_args.window,
           "re_min,re_max (default -1.5,1.5)");
  add_text(path, "--points", path_args.points,
           "sample count along the path (default 601)");
  add_text(path, "--dgamma", path_args.dgamma,
           "displacement re,im (default 0.01,0.01)");
  add_switch(path, "--strict", path_args.strict,
             "fail (exit 4) on exceptional points");
  add_switch(path, "--gnuplot-hints", path_args.gnuplot,
             "embed gnuplot commands in the CSV header");
  add_text(path, "-o,--out", path_args.out, "output directory (default .)");
  path->add_option("--config", path_args.config_path, "JSON config file");

  ZerosArgs zeros_args;
  CLI::App* zeros = app.add_subcommand(
      "zeros", "analytic zero lines, and detection/comparison on a finished "
               "scan");
  add_model_options(zeros, zeros_args);
  add_text(zeros, "-L,--size", zeros_args.size_l,
           "chain/lattice size (default 16)");
  add_text(zeros, "--scan", zeros_args.scan_dir,
           "scan output directory to extract zeros from (model and L then "
           "come from its manifest)");
  add_text(zeros, "--threshold", zeros_args.threshold,
           "f_min dip threshold for zero candidates (default 0.99)");
  add_text(zeros, "-o,--out", zeros_args.out, "output directory (default .)");
  zeros->add_option("--config", zeros_args.config_path, "JSON config file");

  ConvergeArgs conv_args;
  CLI::App* converge = app.add_subcommand(
      "converge", "zero-line boundary vs critical points over a list of L");
  add_model_options(converge, conv_args);
  add_text(converge, "-L,--sizes", conv_args.l_list,
           "comma list of sizes (default 8,16,32,64)");
  add_text(converge, "-o,--out", conv_args.out, "output directory (default .)");
  converge->add_option("--config", conv_args.config_path, "JSON config file");

  CLI::App* models =
      app.add_subcommand("models", "list the built-in models and their "
                                   "critical points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (scan->parsed()) return dispatch([&] { return run_scan(scan_args); });
  if (path->parsed()) return dispatch([&] { return run_path(path_args); });
  if (zeros->parsed()) return dispatch([&] { return run_zeros(zeros_args); });
  if (converge->parsed())
    return dispatch([&] { return run_converge(conv_args); });
  if (models->parsed()) return dispatch([] { return run_models(); });
  return 2;
}
