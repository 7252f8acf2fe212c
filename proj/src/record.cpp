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
#include "czgrape/record.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace czgrape {

namespace {

using nlohmann::json;

json complex_matrix_to_json(const MatX& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

MatX complex_matrix_from_json(const json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : 0;
  MatX m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = complexd(j[i][c][0].get<double>(), j[i][c][1].get<double>());
  return m;
}

json complex_vector_to_json(const VecX& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

VecX complex_vector_from_json(const json& j) {
  VecX v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = complexd(j[i][0].get<double>(), j[i][1].get<double>());
  return v;
}

json device_to_json(const DeviceParams& p) {
  // All values in the internal units (rad/ns, ns).
  return json{{"omega_A", p.omega_A}, {"omega_B", p.omega_B}, {"delta_A", p.delta_A},
              {"delta_B", p.delta_B}, {"g", p.g},             {"T1_A", p.T1_A},
              {"T1_B", p.T1_B},       {"Tphi_A", p.Tphi_A},   {"Tphi_B", p.Tphi_B},
              {"F0_A", p.F0_A},       {"F1_A", p.F1_A},       {"F0_B", p.F0_B},
              {"F1_B", p.F1_B}};
}

DeviceParams device_from_json(const json& j) {
  DeviceParams p;
  p.omega_A = j.at("omega_A");
  p.omega_B = j.at("omega_B");
  p.delta_A = j.at("delta_A");
  p.delta_B = j.at("delta_B");
  p.g = j.at("g");
  p.T1_A = j.at("T1_A");
  p.T1_B = j.at("T1_B");
  p.Tphi_A = j.at("Tphi_A");
  p.Tphi_B = j.at("Tphi_B");
  p.F0_A = j.at("F0_A");
  p.F1_A = j.at("F1_A");
  p.F0_B = j.at("F0_B");
  p.F1_B = j.at("F1_B");
  return p;
}

json emulator_to_json(const EmulatorConfig& e) {
  json stages = json::array();
  for (const auto& s : e.distortion.stages)
    stages.push_back({{"kind", s.kind == DistortionStage::Kind::ExponentialFilter
                                   ? "exponential-filter"
                                   : "amplitude-scale"},
                      {"value", s.value}});
  return json{{"distortion", {{"stages", stages}, {"fine_tau", e.distortion.fine_tau}}},
              {"measurement",
               {{"sampled", e.measurement.sampled},
                {"shots", e.measurement.shots},
                {"readout_error", e.measurement.readout_error},
                {"readout_correction", e.measurement.readout_correction},
                {"seed", e.measurement.seed}}},
              {"dissipation", e.dissipation}};
}

EmulatorConfig emulator_from_json(const json& j) {
  EmulatorConfig e;
  for (const auto& s : j.at("distortion").at("stages")) {
    DistortionStage stage;
    stage.kind = s.at("kind") == "exponential-filter"
                     ? DistortionStage::Kind::ExponentialFilter
                     : DistortionStage::Kind::AmplitudeScale;
    stage.value = s.at("value");
    e.distortion.stages.push_back(stage);
  }
  e.distortion.fine_tau = j.at("distortion").at("fine_tau");
  const auto& m = j.at("measurement");
  e.measurement.sampled = m.at("sampled");
  e.measurement.shots = m.at("shots");
  e.measurement.readout_error = m.at("readout_error");
  e.measurement.readout_correction = m.at("readout_correction");
  e.measurement.seed = m.at("seed");
  e.dissipation = j.at("dissipation");
  return e;
}

json config_to_json(const OptimizerConfig& c) {
  json states = json::array();
  for (const auto& psi : c.input_states) states.push_back(complex_vector_to_json(psi));
  return json{{"protocol", c.protocol == Protocol::I ? 1 : 2},
              {"alpha", c.alpha},
              {"max_steps", c.max_steps},
              {"grad_norm_tol", c.grad_norm_tol},
              {"pulse_change_tol", c.pulse_change_tol},
              {"fidelity_target", c.fidelity_target},
              {"descent", c.descent},
              {"average_pulses", c.average_pulses},
              {"dissipative_model", c.dissipative_model},
              {"input_states", states},
              {"seed", c.seed}};
}

OptimizerConfig optimizer_from_json(const json& j) {
  OptimizerConfig c;
  c.protocol = j.at("protocol") == 1 ? Protocol::I : Protocol::II;
  c.alpha = j.at("alpha");
  c.max_steps = j.at("max_steps");
  c.grad_norm_tol = j.at("grad_norm_tol");
  c.pulse_change_tol = j.at("pulse_change_tol");
  c.fidelity_target = j.at("fidelity_target");
  c.descent = j.at("descent");
  c.average_pulses = j.at("average_pulses");
  c.dissipative_model = j.at("dissipative_model");
  for (const auto& s : j.at("input_states")) c.input_states.push_back(complex_vector_from_json(s));
  c.seed = j.at("seed");
  return c;
}

json record_to_json(const IterationRecord& r) {
  json rhos = json::array();
  for (const auto& rho : r.rho_exp) rhos.push_back(complex_matrix_to_json(rho));
  json rec{{"step", r.step},
           {"tau_ns", r.pulse.tau},
           {"amplitudes", r.pulse.amplitudes},
           {"gradient", std::vector<double>(r.gradient.data(), r.gradient.data() + r.gradient.size())},
           {"grad_norm", r.grad_norm},
           {"F_chi", r.F_chi},
           {"F_Uexp", r.F_Uexp},
           {"F_rho", r.F_rho},
           {"has_chi", r.has_chi},
           {"rho_exp", rhos},
           {"wall_seconds", r.wall_seconds},
           {"seed", r.seed}};
  if (r.has_chi) rec["chi"] = complex_matrix_to_json(r.chi);
  return rec;
}

IterationRecord record_from_json(const json& j) {
  IterationRecord r;
  r.step = j.at("step");
  r.pulse.tau = j.at("tau_ns");
  r.pulse.amplitudes = j.at("amplitudes").get<std::vector<double>>();
  const auto grad = j.at("gradient").get<std::vector<double>>();
  r.gradient = Eigen::Map<const VecXd>(grad.data(), grad.size());
  r.grad_norm = j.at("grad_norm");
  r.F_chi = j.at("F_chi");
  r.F_Uexp = j.at("F_Uexp");
  r.F_rho = j.at("F_rho").get<std::vector<double>>();
  r.has_chi = j.at("has_chi");
  if (r.has_chi) r.chi = complex_matrix_from_json(j.at("chi"));
  for (const auto& rho : j.at("rho_exp")) r.rho_exp.push_back(complex_matrix_from_json(rho));
  r.wall_seconds = j.at("wall_seconds");
  r.seed = j.at("seed");
  return r;
}

}  // namespace

std::string config_hash(const Config& cfg) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [k, v] : cfg.raw()) {
    mix(k);
    mix("=");
    mix(v);
    mix(";");
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void save_trajectory(const std::string& path, const OptimizerConfig& config,
                     const DeviceParams& device, const EmulatorConfig& emulator,
                     const std::vector<IterationRecord>& records,
                     const std::string& hash) {
  json steps = json::array();
  for (const auto& r : records) steps.push_back(record_to_json(r));
  const json j{{"format", "czgrape-trajectory-1"},
               {"config_hash", hash},
               {"optimizer", config_to_json(config)},
               {"device", device_to_json(device)},
               {"emulator", emulator_to_json(emulator)},
               {"records", steps}};
  std::ofstream out(path);
  if (!out) throw RecordError("cannot write trajectory file: " + path);
  out << j.dump(2) << "\n";
}

LoadedTrajectory load_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RecordError("cannot read trajectory file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw RecordError("malformed trajectory file " + path + ": " + e.what());
  }
  if (j.value("format", "") != "czgrape-trajectory-1")
    throw RecordError("unrecognized trajectory format in " + path);
  LoadedTrajectory t;
  t.hash = j.at("config_hash");
  t.config = optimizer_from_json(j.at("optimizer"));
  t.device = device_from_json(j.at("device"));
  t.emulator = emulator_from_json(j.at("emulator"));
  for (const auto& r : j.at("records")) t.records.push_back(record_from_json(r));
  return t;
}

void save_fidelity_csv(const std::string& path, const std::vector<IterationRecord>& records) {
  std::ofstream out(path);
  if (!out) throw RecordError("cannot write CSV file: " + path);
  out << "step,F_chi,F_Uexp,F_rho_1,F_rho_2,F_rho_3,F_rho_4,grad_norm\n";
  char buf[64];
  for (const auto& r : records) {
    out << r.step;
    auto cell = [&](double v) {
      std::snprintf(buf, sizeof(buf), ",%.12g", v);
      out << buf;
    };
    cell(r.F_chi);
    cell(r.F_Uexp);
    for (int s = 0; s < 4; ++s)
      cell(s < static_cast<int>(r.F_rho.size()) ? r.F_rho[s] : -1.0);
    cell(r.grad_norm);
    out << "\n";
  }
}

void save_chi_json(const std::string& path, const Chi& chi, const std::string& hash) {
  const json j{{"format", "czgrape-chi-1"},
               {"config_hash", hash},
               {"chi", complex_matrix_to_json(chi)}};
  std::ofstream out(path);
  if (!out) throw RecordError("cannot write chi file: " + path);
  out << j.dump(2) << "\n";
}

ReplayResult replay_trajectory(const LoadedTrajectory& traj) {
  const LabEmulator emu(traj.device, traj.emulator);
  const std::vector<VecX> states =
      traj.config.input_states.empty() ? default_input_states() : traj.config.input_states;
  ReplayResult res;
  for (const auto& r : traj.records) {
    if (r.has_chi) {
      const Chi chi = emu.measure_qpt(r.pulse);
      res.max_dev_chi = std::max(
          res.max_dev_chi, std::abs(process_fidelity(chi, chi_ideal_cz()) - r.F_chi));
    }
    if (!r.F_rho.empty()) {
      const auto rhos = emu.measure_qst_states(r.pulse, states);
      for (size_t s = 0; s < rhos.size() && s < r.F_rho.size(); ++s) {
        const Mat4 ideal = restrict_computational(ideal_output_state(states[s]));
        res.max_dev_rho = std::max(
            res.max_dev_rho, std::abs(state_fidelity(rhos[s], ideal) - r.F_rho[s]));
      }
    }
  }
  return res;
}

}  // namespace czgrape
