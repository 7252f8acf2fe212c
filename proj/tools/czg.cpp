/* Copyright 2026 The czgrape Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
// czg: pulse-level CZ-gate optimization against an emulated experiment.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "czgrape/emulator.hpp"
#include "czgrape/grape.hpp"
#include "czgrape/rb.hpp"
#include "czgrape/record.hpp"
#include "czgrape/units.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace czgrape;

namespace {

struct RunSetup {
  Config cfg;
  DeviceParams device;
  EmulatorConfig emu;
  OptimizerConfig opt;
  PulseSequence seed_pulse;
  std::string hash;
};

RunSetup load_setup(const std::string& config_path, bool seed_set, uint64_t seed_override) {
  RunSetup s;
  s.cfg = Config::load(config_path);
  const std::string device_file = resolve_path(s.cfg, s.cfg.get_string("device.file"));
  if (!fs::exists(device_file))
    throw ConfigError("device file does not exist: " + device_file);
  s.device = load_device_params_file(device_file);

  if (s.cfg.has("distortion.file")) {
    s.emu.distortion = load_distortion(
        Config::load(resolve_path(s.cfg, s.cfg.get_string("distortion.file"))));
  } else {
    s.emu.distortion = load_distortion(s.cfg);
  }
  s.emu.dissipation = s.cfg.get_bool("emulator.dissipation", true);
  s.emu.measurement.sampled = s.cfg.get_string("measurement.mode", "exact") == "sampled";
  s.emu.measurement.shots = s.cfg.get_int("measurement.shots", 3000);
  s.emu.measurement.readout_error = s.cfg.get_bool("measurement.readout_error", false);
  s.emu.measurement.readout_correction =
      s.cfg.get_bool("measurement.readout_correction", true);

  uint64_t seed = static_cast<uint64_t>(s.cfg.get_int("run.seed", 0));
  if (seed_set) seed = seed_override;
  s.emu.measurement.seed = seed;

  const int proto = s.cfg.get_int("optimizer.protocol", s.cfg.get_int("run.protocol", 1));
  s.opt.protocol = proto == 2 ? Protocol::II : Protocol::I;
  s.opt.alpha = s.cfg.get_double("optimizer.alpha_GHz2", proto == 2 ? 0.1 : 0.03);
  s.opt.max_steps = s.cfg.get_int("optimizer.max_steps", 5);
  s.opt.grad_norm_tol = s.cfg.get_double("optimizer.grad_norm_tol", 1e-4);
  s.opt.pulse_change_tol = s.cfg.get_double("optimizer.pulse_change_tol", 0.0);
  s.opt.fidelity_target = s.cfg.get_double("optimizer.fidelity_target", 0.0);
  s.opt.descent = s.cfg.get_bool("optimizer.descent", true);
  s.opt.dissipative_model = s.cfg.get_bool("optimizer.dissipative_model", true);
  s.opt.seed = seed;

  FlattopParams fp;
  fp.gamma = mhz_to_radns(s.cfg.get_double("pulse.gamma_MHz"));
  fp.T = s.cfg.get_double("pulse.T_ns");
  fp.sigma = s.cfg.get_double("pulse.sigma_ns");
  s.seed_pulse = flattop(fp, s.cfg.get_double("pulse.tau_ns"));

  s.hash = config_hash(s.cfg);
  return s;
}

ExperimentProvider make_provider(const LabEmulator& emu, const std::vector<VecX>& states) {
  ExperimentProvider p;
  p.measure_chi = [&emu](const PulseSequence& seq) { return emu.measure_qpt(seq); };
  p.measure_states = [&emu, states](const PulseSequence& seq) {
    return emu.measure_qst_states(seq, states);
  };
  return p;
}

int cmd_optimize(const std::string& config_path, const std::string& output_dir,
                 bool seed_set, uint64_t seed, bool dry_run) {
  const RunSetup s = load_setup(config_path, seed_set, seed);
  s.opt.validate();
  const std::string outdir =
      output_dir.empty() ? s.cfg.get_string("run.output_dir", "runs/optimize") : output_dir;
  if (dry_run) {
    std::printf("dry-run: protocol %s, %d steps, alpha=%g GHz^2, %d segments of %g ns\n",
                s.opt.protocol == Protocol::I ? "I" : "II", s.opt.max_steps, s.opt.alpha,
                s.seed_pulse.segments(), s.seed_pulse.tau);
    std::printf("dry-run: output directory %s (not written), config hash %s\n",
                outdir.c_str(), s.hash.c_str());
    return 0;
  }
  fs::create_directories(outdir);
  const LabEmulator emu(s.device, s.emu);
  const std::vector<VecX> states = default_input_states();
  const auto records =
      run_optimization(s.opt, s.device, make_provider(emu, states), s.seed_pulse);
  std::printf("step   F_chi     F_Uexp    F_rho1    grad_norm\n");
  for (const auto& r : records) {
    std::printf("%4d   %.5f   %.5f   %.5f   %.4e\n", r.step, r.F_chi, r.F_Uexp,
                r.F_rho.empty() ? -1.0 : r.F_rho[0], r.grad_norm);
    save_pulse(r.pulse, outdir + "/pulse_step_" + std::to_string(r.step) + ".txt");
  }
  save_trajectory(outdir + "/trajectory.json", s.opt, s.device, s.emu, records, s.hash);
  save_fidelity_csv(outdir + "/fidelity.csv", records);
  std::printf("artifacts written to %s (config hash %s)\n", outdir.c_str(), s.hash.c_str());
  return 0;
}

int cmd_qpt(const std::string& config_path, const std::string& pulse_file,
            const std::string& output_dir, bool seed_set, uint64_t seed,
            bool fit_operator) {
  const RunSetup s = load_setup(config_path, seed_set, seed);
  if (!fs::exists(pulse_file)) throw ConfigError("pulse file does not exist: " + pulse_file);
  const PulseSequence pulse = load_pulse(pulse_file);
  const LabEmulator emu(s.device, s.emu);
  const Chi chi = emu.measure_qpt(pulse);
  std::printf("F_chi %.6f\n", process_fidelity(chi, chi_ideal_cz()));
  if (fit_operator) {
    const GateOperator gate = powell_fit(chi, cz_params());
    std::printf("F_Uexp %.6f%s\n", operator_fidelity(gate.u, ideal_cz_4()),
                gate.converged ? "" : " (fit not converged)");
  }
  if (!output_dir.empty()) {
    fs::create_directories(output_dir);
    save_chi_json(output_dir + "/chi.json", chi, s.hash);
  }
  return 0;
}

int cmd_chevron(const std::string& config_path, const std::string& output_dir,
                bool seed_set, uint64_t seed) {
  const RunSetup s = load_setup(config_path, seed_set, seed);
  const double center =
      s.cfg.has("chevron.amp_center_MHz")
          ? mhz_to_radns(s.cfg.get_double("chevron.amp_center_MHz"))
          : s.device.resonant_amplitude();
  const double span = mhz_to_radns(s.cfg.get_double("chevron.amp_span_MHz", 40.0));
  const int amp_points = s.cfg.get_int("chevron.amp_points", 41);
  const double t_max = s.cfg.get_double("chevron.time_max_ns", 2.0 * s.device.swap_period());
  const int time_points = s.cfg.get_int("chevron.time_points", 41);
  if (amp_points < 1 || time_points < 1)
    throw ConfigError("chevron: amplitude and time grids must be non-empty");
  std::vector<double> amps(amp_points), times(time_points);
  for (int i = 0; i < amp_points; ++i)
    amps[i] = center - 0.5 * span +
              (amp_points > 1 ? span * i / (amp_points - 1) : 0.0);
  for (int i = 0; i < time_points; ++i)
    times[i] = t_max * (i + 1) / time_points;
  const bool dissipative = s.cfg.get_bool("chevron.dissipative", s.emu.dissipation);
  const Eigen::MatrixXd p11 = chevron_scan(amps, times, s.device, dissipative);

  const std::string outdir =
      output_dir.empty() ? s.cfg.get_string("run.output_dir", "runs/chevron") : output_dir;
  fs::create_directories(outdir);
  std::ofstream csv(outdir + "/chevron.csv");
  csv << "detuning_MHz,time_ns,P11\n";
  char buf[96];
  for (int ia = 0; ia < amp_points; ++ia)
    for (int it = 0; it < time_points; ++it) {
      std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.8f\n", radns_to_mhz(amps[ia]),
                    times[it], p11(ia, it));
      csv << buf;
    }
  if (s.cfg.get_bool("chevron.fit", true)) {
    const ChevronFit fit = fit_chevron(p11, amps, times, s.device.g, center);
    std::printf("g_est_MHz %.4f\nresonance_est_MHz %.4f\nresidual %.4f\n",
                radns_to_mhz(fit.g), radns_to_mhz(fit.resonance), fit.residual);
  }
  std::printf("chevron grid %dx%d written to %s\n", amp_points, time_points, outdir.c_str());
  return 0;
}

int cmd_rb(const std::string& config_path, const std::string& pulse_file,
           const std::string& output_dir, bool seed_set, uint64_t seed) {
  const RunSetup s = load_setup(config_path, seed_set, seed);
  RbConfig rb_cfg;
  rb_cfg.seed = s.emu.measurement.seed;
  rb_cfg.sequences_per_length = s.cfg.get_int("rb.sequences_per_length", 30);
  if (s.cfg.has("rb.lengths")) {
    rb_cfg.lengths.clear();
    std::string spec = s.cfg.get_string("rb.lengths");
    size_t pos = 0;
    while (pos < spec.size()) {
      const size_t comma = spec.find(',', pos);
      rb_cfg.lengths.push_back(std::stoi(spec.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  GateChannel cz_impl;
  const LabEmulator emu(s.device, s.emu);
  PulseSequence pulse;
  if (pulse_file.empty()) {
    cz_impl = ideal_cz_channel();
  } else {
    if (!fs::exists(pulse_file))
      throw ConfigError("pulse file does not exist: " + pulse_file);
    pulse = load_pulse(pulse_file);
    cz_impl = [&emu, pulse](const Mat9& rho) { return emu.run_gate(pulse, rho); };
  }
  const RbRunResult result = run_rb(cz_impl, rb_cfg);
  const double f_rb = rb_fidelity(result);
  std::printf("p_ref %.6f%s\np_CZ %.6f%s\nF_RB %.6f\n", result.reference.p,
              result.reference.degenerate ? " (degenerate fit)" : "",
              result.interleaved.p,
              result.interleaved.degenerate ? " (degenerate fit)" : "", f_rb);

  const std::string outdir =
      output_dir.empty() ? s.cfg.get_string("run.output_dir", "runs/rb") : output_dir;
  fs::create_directories(outdir);
  std::ofstream csv(outdir + "/rb.csv");
  csv << "n,mean_P00,std_P00,kind\n";
  for (size_t i = 0; i < result.lengths.size(); ++i)
    csv << result.lengths[i] << "," << result.reference.mean[i] << ","
        << result.reference.stddev[i] << ",ref\n";
  for (size_t i = 0; i < result.lengths.size(); ++i)
    csv << result.lengths[i] << "," << result.interleaved.mean[i] << ","
        << result.interleaved.stddev[i] << ",interleaved\n";
  std::ofstream summary(outdir + "/rb_summary.json");
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\n  \"config_hash\": \"%s\",\n"
                "  \"reference\": {\"a\": %.8g, \"p\": %.8g, \"b\": %.8g},\n"
                "  \"interleaved\": {\"a\": %.8g, \"p\": %.8g, \"b\": %.8g},\n"
                "  \"F_RB\": %.8g\n}\n",
                s.hash.c_str(), result.reference.a, result.reference.p,
                result.reference.b, result.interleaved.a, result.interleaved.p,
                result.interleaved.b, f_rb);
  summary << buf;
  return 0;
}

int cmd_replay(const std::string& trajectory_path) {
  if (!fs::exists(trajectory_path))
    throw ConfigError("trajectory file does not exist: " + trajectory_path);
  const LoadedTrajectory traj = load_trajectory(trajectory_path);
  const ReplayResult res = replay_trajectory(traj);
  const double tol = traj.emulator.measurement.sampled ? 0.05 : 1e-9;
  std::printf("max_dev_F_chi %.3e\nmax_dev_F_rho %.3e\ntolerance %.3e\n", res.max_dev_chi,
              res.max_dev_rho, tol);
  const bool ok = res.max_dev_chi <= tol && res.max_dev_rho <= tol;
  std::printf("replay %s\n", ok ? "ok" : "MISMATCH");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"data-driven GRAPE optimization of a CZ gate on two coupled qutrits"};
  app.require_subcommand(1);

  std::string config_path, pulse_file, output_dir, trajectory_path;
  uint64_t seed = 0;
  int jobs = 0;
  bool dry_run = false, fit_operator = false;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path, "run configuration file");
    if (needs_config) opt->required();
    sub->add_option("--seed", seed, "RNG seed override");
    sub->add_option("--jobs", jobs, "worker threads (default: available cores)");
    sub->add_option("--output-dir", output_dir, "artifact directory");
  };

  CLI::App* optimize = app.add_subcommand("optimize", "run the data-driven GRAPE loop");
  add_common(optimize, true);
  optimize->add_flag("--dry-run", dry_run, "validate the config and print the plan");

  CLI::App* qpt = app.add_subcommand("qpt", "process tomography of a pulse");
  add_common(qpt, true);
  qpt->add_option("--pulse", pulse_file, "pulse file")->required();
  qpt->add_flag("--fit-operator", fit_operator, "also fit and report F(U_exp)");

  CLI::App* chevron = app.add_subcommand("chevron", "|11>-|20> chevron scan");
  add_common(chevron, true);

  CLI::App* rb = app.add_subcommand("rb", "interleaved randomized benchmarking");
  add_common(rb, true);
  rb->add_option("--pulse", pulse_file, "pulse file (omit for the ideal CZ)");

  CLI::App* replay = app.add_subcommand("replay", "re-measure a saved trajectory");
  replay->add_option("trajectory", trajectory_path, "trajectory JSON file")->required();

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  const bool seed_set = app.count_all() > 0 &&
                        (optimize->count("--seed") || qpt->count("--seed") ||
                         chevron->count("--seed") || rb->count("--seed"));
  try {
    if (optimize->parsed())
      return cmd_optimize(config_path, output_dir, seed_set, seed, dry_run);
    if (qpt->parsed())
      return cmd_qpt(config_path, pulse_file, output_dir, seed_set, seed, fit_operator);
    if (chevron->parsed()) return cmd_chevron(config_path, output_dir, seed_set, seed);
    if (rb->parsed()) return cmd_rb(config_path, pulse_file, output_dir, seed_set, seed);
    if (replay->parsed()) return cmd_replay(trajectory_path);
  } catch (const FitFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
