// Copyright 2026 The fiveq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fiveq/serialization.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fiveq {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Pauli parse_pauli(const std::string& s) {
  if (s == "I") return Pauli::I;
  if (s == "X") return Pauli::X;
  if (s == "Y") return Pauli::Y;
  if (s == "Z") return Pauli::Z;
  malformed("unknown Pauli '" + s + "'");
}

std::array<double, kNumQubits> parse_t2(const Json& j) {
  std::array<double, kNumQubits> t2{};
  if (j.is_number()) {
    t2.fill(j.get<double>());
  } else if (j.is_array() && j.size() == kNumQubits) {
    for (std::size_t q = 0; q < kNumQubits; ++q) {
      t2[q] = j.at(q).get<double>();
    }
  } else {
    malformed("t2_ms must be a number or a list of 5 numbers");
  }
  return t2;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ChiMatrix& chi) {
  Json rows = Json::array();
  for (Eigen::Index k = 0; k < 4; ++k) {
    Json row = Json::array();
    for (Eigen::Index l = 0; l < 4; ++l) {
      row.push_back(complex_to_json(chi(k, l)));
    }
    rows.push_back(std::move(row));
  }
  Json basis = Json::array();
  for (auto label : kChiBasisLabels) {
    basis.push_back(std::string(label));
  }
  return Json{{"basis", std::move(basis)}, {"matrix", std::move(rows)}};
}

ChiMatrix chi_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array() || rows.size() != 4) {
    malformed("chi matrix must have 4 rows");
  }
  Matrix m(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    if (!rows[k].is_array() || rows[k].size() != 4) {
      malformed("chi matrix rows must have 4 entries");
    }
    for (std::size_t l = 0; l < 4; ++l) {
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = complex_from_json(rows[k][l]);
    }
  }
  return ChiMatrix(std::move(m));
}

Json to_json(const SyndromeTable& table) {
  Json out = Json::array();
  for (const auto& e : table.entries()) {
    out.push_back(Json{{"syndrome", syndrome_label(e.syndrome)},
                       {"condition", label(e.condition)},
                       {"correction", std::string(1, pauli_label(e.correction))},
                       {"phase", complex_to_json(e.phase)}});
  }
  return out;
}

SyndromeTable syndrome_table_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kNumSyndromes) {
    malformed("syndrome table must list 16 rows");
  }
  std::array<SyndromeEntry, kNumSyndromes> entries{};
  for (std::size_t i = 0; i < kNumSyndromes; ++i) {
    const Json& row = j[i];
    const auto s = parse_syndrome(row.at("syndrome").get<std::string>());
    const auto c = parse_condition(row.at("condition").get<std::string>());
    if (!s || !c) {
      malformed("bad syndrome or condition label");
    }
    entries[i] = {*s, *c, parse_pauli(row.at("correction").get<std::string>()),
                  complex_from_json(row.at("phase"))};
  }
  return SyndromeTable(entries);
}

NoiseSchedule noise_schedule_from_json(const Json& j) {
  if (!j.is_object()) {
    malformed("noise configuration must be an object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "t2_ms" && key != "duration_ms" && key != "uniform_dephasing_p" && key != "stages") {
      malformed("unknown noise key '" + key + "'");
    }
  }
  NoiseSchedule schedule;
  try {
    if (j.contains("t2_ms") || j.contains("duration_ms")) {
      std::array<double, kNumQubits> t2{};
      t2.fill(kDefaultT2Ms);
      if (j.contains("t2_ms")) {
        t2 = parse_t2(j["t2_ms"]);
      }
      const double total = j.value("duration_ms", kDefaultDurationMs);
      schedule.merge(NoiseSchedule::from_t2(t2, total));
    }
    if (j.contains("uniform_dephasing_p")) {
      schedule.merge(NoiseSchedule::uniform_dephasing(j["uniform_dephasing_p"].get<double>()));
    }
    if (j.contains("stages")) {
      const Json& stages = j["stages"];
      if (!stages.is_object()) {
        malformed("stages must be an object");
      }
      for (const auto& [name, list] : stages.items()) {
        const auto stage = parse_stage(name);
        if (!stage) {
          malformed("unknown stage '" + name + "'");
        }
        if (!list.is_array()) {
          malformed("stage '" + name + "' must be a list");
        }
        for (const auto& entry : list) {
          const auto kind = parse_channel(entry.at("channel").get<std::string>());
          if (!kind) {
            malformed("unknown channel in stage '" + name + "'");
          }
          schedule.add(*stage, {entry.at("qubit").get<int>(), *kind, entry.value("p", 0.0)});
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  schedule.validate();
  return schedule;
}

Json to_json(const NoiseSchedule& schedule) {
  Json stages = Json::object();
  for (NoiseStage s : kAllStages) {
    Json list = Json::array();
    for (const auto& spec : schedule.at(s)) {
      list.push_back(Json{{"qubit", spec.qubit},
                          {"channel", std::string(channel_label(spec.kind))},
                          {"p", spec.p}});
    }
    stages[std::string(stage_label(s))] = std::move(list);
  }
  return Json{{"stages", std::move(stages)}};
}

Json to_json(const ExperimentReport& report) {
  Json out{{"gate", std::string(gate_label(report.gate))},
           {"error", label(report.error)},
           {"fidelity", report.fidelity},
           {"chi_effective", to_json(report.chi_effective)},
           {"chi_ideal", to_json(report.chi_ideal)},
           {"unitality_deviation", report.unitality_deviation},
           {"identity_omission_delta", report.identity_omission_delta},
           {"identity_assumed", report.identity_assumed}};
  out["syndrome"] = report.syndrome ? Json(syndrome_label(*report.syndrome)) : Json(nullptr);
  return out;
}

Json to_json(const SweepResult& sweep) {
  Json experiments = Json::array();
  for (const auto& r : sweep.reports) {
    experiments.push_back(to_json(r));
  }
  Json means = Json::object();
  for (std::size_t g = 0; g < kAllGates.size(); ++g) {
    means[std::string(gate_label(kAllGates[g]))] = sweep.gate_means[g];
  }
  return Json{{"experiments", std::move(experiments)}, {"gate_means", std::move(means)}};
}

Json to_json(const std::array<BaselineGate, 3>& baseline) {
  Json gates = Json::array();
  const auto& conditions = all_conditions();
  for (const auto& b : baseline) {
    Json rows = Json::array();
    for (std::size_t c = 0; c < kNumConditions; ++c) {
      rows.push_back(Json{{"error", label(conditions[c])}, {"fidelity", b.fidelities[c]}});
    }
    gates.push_back(Json{{"gate", std::string(gate_label(b.gate))},
                         {"fidelities", std::move(rows)},
                         {"mean", b.mean}});
  }
  return Json{{"baseline", std::move(gates)}};
}

Json to_json(const std::array<AdvantageRow, 3>& advantage) {
  Json rows = Json::array();
  for (const auto& a : advantage) {
    rows.push_back(Json{{"gate", std::string(gate_label(a.gate))},
                        {"qec_mean", a.qec_mean},
                        {"baseline_mean", a.baseline_mean},
                        {"margin", a.margin},
                        {"advantage", a.margin > 0.0}});
  }
  return Json{{"advantage", std::move(rows)}};
}

std::string to_csv(const std::vector<ExperimentReport>& reports) {
  std::ostringstream os;
  os << "gate,error,fidelity\n";
  for (const auto& r : reports) {
    os << gate_label(r.gate) << ',' << label(r.error) << ',' << format_double(r.fidelity) << '\n';
  }
  return os.str();
}

std::string to_csv(const std::array<BaselineGate, 3>& baseline) {
  std::ostringstream os;
  os << "gate,error,fidelity\n";
  const auto& conditions = all_conditions();
  for (const auto& b : baseline) {
    for (std::size_t c = 0; c < kNumConditions; ++c) {
      os << gate_label(b.gate) << ',' << label(conditions[c]) << ','
         << format_double(b.fidelities[c]) << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const std::array<AdvantageRow, 3>& advantage) {
  std::ostringstream os;
  os << "gate,qec_mean,baseline_mean,margin\n";
  for (const auto& a : advantage) {
    os << gate_label(a.gate) << ',' << format_double(a.qec_mean) << ','
       << format_double(a.baseline_mean) << ',' << format_double(a.margin) << '\n';
  }
  return os.str();
}

}  // namespace fiveq
