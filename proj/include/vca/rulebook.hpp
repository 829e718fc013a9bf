/*
 *
 *    Copyright 2026 The vca Authors.
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 *
 */

// The diagnostic rule engine: pure functions from sensor snapshots to
// ordered diagnosis lists. Internal rules I-1..I-5 cover the engine and
// alarm symptoms, external rules E-1..E-5 cover speed, direction, oil,
// tyres and doors. Rules I-1..I-3 only apply to an engine that does not
// start; a running engine is never diagnosed with a no-start cause.

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vca/types.hpp"

namespace vca {

struct InternalSnapshot {
  bool engine_starts = true;
  bool engine_turns_over = true;
  bool engine_getting_petrol = true;
  bool lights_come_on = true;
  bool fuel_in_tank = true;
  bool alarm_bell_ringing = false;

  // An empty tank cannot feed the engine.
  bool valid() const { return fuel_in_tank || !engine_getting_petrol; }

  bool operator==(const InternalSnapshot&) const = default;
};

enum class Direction : std::uint8_t { Forward, Reverse, Neutral };
enum class Motion : std::uint8_t { Forward, Reverse, Stationary };

inline const char* direction_name(Direction d) {
  switch (d) {
    case Direction::Forward: return "forward";
    case Direction::Reverse: return "reverse";
    case Direction::Neutral: return "neutral";
  }
  return "?";
}

inline Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::Forward;
  if (s == "reverse") return Direction::Reverse;
  if (s == "neutral") return Direction::Neutral;
  throw Error(Errc::ParseError, "unknown direction: " + s);
}

inline const char* motion_name(Motion m) {
  switch (m) {
    case Motion::Forward: return "forward";
    case Motion::Reverse: return "reverse";
    case Motion::Stationary: return "stationary";
  }
  return "?";
}

inline Motion parse_motion(const std::string& s) {
  if (s == "forward") return Motion::Forward;
  if (s == "reverse") return Motion::Reverse;
  if (s == "stationary") return Motion::Stationary;
  throw Error(Errc::ParseError, "unknown motion: " + s);
}

struct ExternalSnapshot {
  double speed_kmh = 0.0;
  Direction commanded_direction = Direction::Neutral;
  Motion actual_motion = Motion::Stationary;
  bool oil_leak_detected = false;
  double oil_level_fraction = 1.0;
  std::array<double, 4> tyre_pressure_kpa = {220.0, 220.0, 220.0, 220.0};
  std::array<bool, 4> doors_closed = {true, true, true, true};

  bool valid() const {
    return (speed_kmh == 0.0) == (actual_motion == Motion::Stationary);
  }

  bool operator==(const ExternalSnapshot&) const = default;
};

enum class FaultKind : std::uint8_t {
  VehicleStolen,
  Battery,
  Starter,
  SparkPlugs,
  PetrolFinished,
  OilLeakage,
  Overspeed,
  DirectionInconsistency,
  TyreUnderinflated,
  DoorOpen,
};

inline const char* fault_kind_name(FaultKind k) {
  switch (k) {
    case FaultKind::VehicleStolen: return "VehicleStolen";
    case FaultKind::Battery: return "Battery";
    case FaultKind::Starter: return "Starter";
    case FaultKind::SparkPlugs: return "SparkPlugs";
    case FaultKind::PetrolFinished: return "PetrolFinished";
    case FaultKind::OilLeakage: return "OilLeakage";
    case FaultKind::Overspeed: return "Overspeed";
    case FaultKind::DirectionInconsistency: return "DirectionInconsistency";
    case FaultKind::TyreUnderinflated: return "TyreUnderinflated";
    case FaultKind::DoorOpen: return "DoorOpen";
  }
  return "?";
}

inline FaultKind parse_fault_kind(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(FaultKind::DoorOpen); ++i) {
    auto k = static_cast<FaultKind>(i);
    if (s == fault_kind_name(k)) return k;
  }
  throw Error(Errc::ParseError, "unknown fault kind: " + s);
}

// Report ordering rank; 1 is most severe.
inline int severity_rank(FaultKind k) {
  switch (k) {
    case FaultKind::VehicleStolen: return 1;
    case FaultKind::Battery: return 2;
    case FaultKind::Starter: return 3;
    case FaultKind::SparkPlugs: return 4;
    case FaultKind::PetrolFinished: return 5;
    case FaultKind::OilLeakage: return 6;
    case FaultKind::Overspeed: return 7;
    case FaultKind::DirectionInconsistency: return 8;
    case FaultKind::TyreUnderinflated: return 9;
    case FaultKind::DoorOpen: return 10;
  }
  return 99;
}

// A concrete fault conclusion; tyre and door faults carry a position.
struct Fault {
  FaultKind kind;
  std::optional<Position> position;

  bool operator==(const Fault&) const = default;

  std::string str() const {
    std::string s = fault_kind_name(kind);
    if (position) {
      s += '(';
      s += position_name(*position);
      s += ')';
    }
    return s;
  }
};

inline Fault make_fault(FaultKind k) { return Fault{k, std::nullopt}; }
inline Fault make_fault(FaultKind k, Position p) { return Fault{k, p}; }

// Fixed human-readable symptom line per fault.
inline std::string fault_message(const Fault& f) {
  switch (f.kind) {
    case FaultKind::VehicleStolen: return "someone has stolen the vehicle";
    case FaultKind::Battery: return "battery is not working properly";
    case FaultKind::Starter: return "problem is with the starter";
    case FaultKind::SparkPlugs: return "problem is with the spark plugs";
    case FaultKind::PetrolFinished: return "petrol has finished";
    case FaultKind::OilLeakage:
      return "oil is leaking or below the minimum level";
    case FaultKind::Overspeed:
      return "vehicle speed exceeds the configured limit";
    case FaultKind::DirectionInconsistency:
      return "commanded direction does not match actual motion";
    case FaultKind::TyreUnderinflated:
      return std::string("tyre ") + position_name(*f.position) +
             " is under-inflated";
    case FaultKind::DoorOpen:
      return std::string("door ") + position_name(*f.position) + " is open";
  }
  return "?";
}

struct Diagnosis {
  Fault fault;
  std::string rule_id;
  int severity = 0;
  std::string message;

  bool operator==(const Diagnosis&) const = default;
};

// Thresholds for the external checks. Not part of the rule logic itself;
// every value can be overridden from the CLI.
struct RuleConfig {
  double speed_limit_kmh = 120.0;
  double min_tyre_kpa = 180.0;
  double min_oil_fraction = 0.2;

  bool valid() const {
    return speed_limit_kmh > 0.0 && min_tyre_kpa > 0.0 &&
           min_oil_fraction > 0.0 && min_oil_fraction < 1.0;
  }
};

namespace detail {

inline Diagnosis make_diagnosis(const char* rule_id, Fault fault) {
  return Diagnosis{fault, rule_id, severity_rank(fault.kind),
                   fault_message(fault)};
}

inline void sort_diagnoses(std::vector<Diagnosis>& ds) {
  std::stable_sort(ds.begin(), ds.end(),
                   [](const Diagnosis& a, const Diagnosis& b) {
                     if (a.severity != b.severity) return a.severity < b.severity;
                     if (a.rule_id != b.rule_id) return a.rule_id < b.rule_id;
                     std::size_t pa = a.fault.position
                                          ? position_index(*a.fault.position)
                                          : 0;
                     std::size_t pb = b.fault.position
                                          ? position_index(*b.fault.position)
                                          : 0;
                     return pa < pb;
                   });
}

}  // namespace detail

// Internal checks I-1..I-5 over one snapshot. The returned list is sorted
// by severity rank, then rule id.
inline std::vector<Diagnosis> evaluate_internal_rules(
    const InternalSnapshot& s) {
  assert(s.valid());
  std::vector<Diagnosis> out;
  const bool no_start = !s.engine_starts;
  if (no_start && s.engine_turns_over && s.engine_getting_petrol) {
    out.push_back(detail::make_diagnosis("I-1", make_fault(FaultKind::SparkPlugs)));
  }
  if (no_start && !s.engine_turns_over && !s.lights_come_on) {
    out.push_back(detail::make_diagnosis("I-2", make_fault(FaultKind::Battery)));
  }
  if (no_start && !s.engine_turns_over && s.lights_come_on) {
    out.push_back(detail::make_diagnosis("I-3", make_fault(FaultKind::Starter)));
  }
  if (!s.fuel_in_tank) {
    out.push_back(detail::make_diagnosis("I-4", make_fault(FaultKind::PetrolFinished)));
  }
  if (s.alarm_bell_ringing) {
    out.push_back(detail::make_diagnosis("I-5", make_fault(FaultKind::VehicleStolen)));
  }
  detail::sort_diagnoses(out);
  return out;
}

// External checks E-1..E-5 over one snapshot with the given thresholds.
inline std::vector<Diagnosis> evaluate_external_rules(const ExternalSnapshot& s,
                                                      const RuleConfig& cfg) {
  assert(s.valid());
  assert(cfg.valid());
  std::vector<Diagnosis> out;
  if (s.speed_kmh > cfg.speed_limit_kmh) {
    out.push_back(detail::make_diagnosis("E-1", make_fault(FaultKind::Overspeed)));
  }
  const bool opposed =
      (s.commanded_direction == Direction::Forward &&
       s.actual_motion == Motion::Reverse) ||
      (s.commanded_direction == Direction::Reverse &&
       s.actual_motion == Motion::Forward);
  if (opposed) {
    out.push_back(detail::make_diagnosis(
        "E-2", make_fault(FaultKind::DirectionInconsistency)));
  }
  if (s.oil_leak_detected || s.oil_level_fraction < cfg.min_oil_fraction) {
    out.push_back(detail::make_diagnosis("E-3", make_fault(FaultKind::OilLeakage)));
  }
  for (Position p : kAllPositions) {
    if (s.tyre_pressure_kpa[position_index(p)] < cfg.min_tyre_kpa) {
      out.push_back(detail::make_diagnosis(
          "E-4", make_fault(FaultKind::TyreUnderinflated, p)));
    }
  }
  for (Position p : kAllPositions) {
    if (!s.doors_closed[position_index(p)]) {
      out.push_back(
          detail::make_diagnosis("E-5", make_fault(FaultKind::DoorOpen, p)));
    }
  }
  detail::sort_diagnoses(out);
  return out;
}

// Data-driven view of the same rules. The matchers are written against the
// antecedents independently of the evaluators above so the two routes can
// be cross-checked.
struct RuleDescriptor {
  std::string rule_id;
  std::string description;
  FaultKind fault;
  int severity;
  // Exactly one matcher is set, depending on the rule family.
  std::function<bool(const InternalSnapshot&)> internal_match;
  std::function<std::vector<Fault>(const ExternalSnapshot&, const RuleConfig&)>
      external_match;
};

inline const std::vector<RuleDescriptor>& rule_table() {
  static const std::vector<RuleDescriptor> table = [] {
    std::vector<RuleDescriptor> t;
    auto internal = [&t](const char* id, const char* desc, FaultKind fault,
                         std::function<bool(const InternalSnapshot&)> m) {
      t.push_back({id, desc, fault, severity_rank(fault), std::move(m), {}});
    };
    auto external =
        [&t](const char* id, const char* desc, FaultKind fault,
             std::function<std::vector<Fault>(const ExternalSnapshot&,
                                              const RuleConfig&)> m) {
          t.push_back({id, desc, fault, severity_rank(fault), {}, std::move(m)});
        };

    internal("I-1",
             "engine does not start, turns over, and is getting petrol",
             FaultKind::SparkPlugs, [](const InternalSnapshot& s) {
               return !s.engine_starts &&
                      (s.engine_turns_over && s.engine_getting_petrol);
             });
    internal("I-2",
             "engine does not start, does not turn over, lights do not come on",
             FaultKind::Battery, [](const InternalSnapshot& s) {
               return !(s.engine_starts || s.engine_turns_over ||
                        s.lights_come_on);
             });
    internal("I-3",
             "engine does not start, does not turn over, lights come on",
             FaultKind::Starter, [](const InternalSnapshot& s) {
               return !s.engine_starts && !s.engine_turns_over &&
                      s.lights_come_on;
             });
    internal("I-4", "no petrol in the fuel tank", FaultKind::PetrolFinished,
             [](const InternalSnapshot& s) { return !s.fuel_in_tank; });
    internal("I-5", "alarm bell is ringing", FaultKind::VehicleStolen,
             [](const InternalSnapshot& s) { return s.alarm_bell_ringing; });

    external("E-1", "speed above the configured limit", FaultKind::Overspeed,
             [](const ExternalSnapshot& s, const RuleConfig& cfg) {
               std::vector<Fault> fs;
               if (s.speed_kmh > cfg.speed_limit_kmh)
                 fs.push_back(make_fault(FaultKind::Overspeed));
               return fs;
             });
    external("E-2", "commanded direction opposite to actual motion",
             FaultKind::DirectionInconsistency,
             [](const ExternalSnapshot& s, const RuleConfig&) {
               std::vector<Fault> fs;
               const bool fwd_back = s.commanded_direction == Direction::Forward &&
                                     s.actual_motion == Motion::Reverse;
               const bool back_fwd = s.commanded_direction == Direction::Reverse &&
                                     s.actual_motion == Motion::Forward;
               if (fwd_back || back_fwd)
                 fs.push_back(make_fault(FaultKind::DirectionInconsistency));
               return fs;
             });
    external("E-3", "oil leak detected or oil level below minimum",
             FaultKind::OilLeakage,
             [](const ExternalSnapshot& s, const RuleConfig& cfg) {
               std::vector<Fault> fs;
               if (s.oil_leak_detected ||
                   s.oil_level_fraction < cfg.min_oil_fraction)
                 fs.push_back(make_fault(FaultKind::OilLeakage));
               return fs;
             });
    external("E-4", "tyre pressure below the configured minimum",
             FaultKind::TyreUnderinflated,
             [](const ExternalSnapshot& s, const RuleConfig& cfg) {
               std::vector<Fault> fs;
               for (Position p : kAllPositions) {
                 if (s.tyre_pressure_kpa[position_index(p)] < cfg.min_tyre_kpa)
                   fs.push_back(make_fault(FaultKind::TyreUnderinflated, p));
               }
               return fs;
             });
    external("E-5", "door open", FaultKind::DoorOpen,
             [](const ExternalSnapshot& s, const RuleConfig&) {
               std::vector<Fault> fs;
               for (Position p : kAllPositions) {
                 if (!s.doors_closed[position_index(p)])
                   fs.push_back(make_fault(FaultKind::DoorOpen, p));
               }
               return fs;
             });
    return t;
  }();
  return table;
}

// Table-interpreting evaluators, used to cross-check the hard-coded ones.
inline std::vector<Diagnosis> evaluate_internal_by_table(
    const InternalSnapshot& s) {
  assert(s.valid());
  std::vector<Diagnosis> out;
  for (const RuleDescriptor& r : rule_table()) {
    if (r.internal_match && r.internal_match(s)) {
      out.push_back(detail::make_diagnosis(r.rule_id.c_str(),
                                           make_fault(r.fault)));
    }
  }
  detail::sort_diagnoses(out);
  return out;
}

inline std::vector<Diagnosis> evaluate_external_by_table(
    const ExternalSnapshot& s, const RuleConfig& cfg) {
  assert(s.valid());
  std::vector<Diagnosis> out;
  for (const RuleDescriptor& r : rule_table()) {
    if (!r.external_match) continue;
    for (const Fault& f : r.external_match(s, cfg)) {
      out.push_back(detail::make_diagnosis(r.rule_id.c_str(), f));
    }
  }
  detail::sort_diagnoses(out);
  return out;
}

// --- JSON ---

inline void to_json(Json& j, const InternalSnapshot& s) {
  j = Json{{"engine_starts", s.engine_starts},
           {"engine_turns_over", s.engine_turns_over},
           {"engine_getting_petrol", s.engine_getting_petrol},
           {"lights_come_on", s.lights_come_on},
           {"fuel_in_tank", s.fuel_in_tank},
           {"alarm_bell_ringing", s.alarm_bell_ringing}};
}

inline void from_json(const Json& j, InternalSnapshot& s) {
  j.at("engine_starts").get_to(s.engine_starts);
  j.at("engine_turns_over").get_to(s.engine_turns_over);
  j.at("engine_getting_petrol").get_to(s.engine_getting_petrol);
  j.at("lights_come_on").get_to(s.lights_come_on);
  j.at("fuel_in_tank").get_to(s.fuel_in_tank);
  j.at("alarm_bell_ringing").get_to(s.alarm_bell_ringing);
}

inline void to_json(Json& j, const ExternalSnapshot& s) {
  j = Json{{"speed_kmh", s.speed_kmh},
           {"commanded_direction", direction_name(s.commanded_direction)},
           {"actual_motion", motion_name(s.actual_motion)},
           {"oil_leak_detected", s.oil_leak_detected},
           {"oil_level_fraction", s.oil_level_fraction},
           {"tyre_pressure_kpa", s.tyre_pressure_kpa},
           {"doors_closed", s.doors_closed}};
}

inline void from_json(const Json& j, ExternalSnapshot& s) {
  j.at("speed_kmh").get_to(s.speed_kmh);
  s.commanded_direction = parse_direction(j.at("commanded_direction"));
  s.actual_motion = parse_motion(j.at("actual_motion"));
  j.at("oil_leak_detected").get_to(s.oil_leak_detected);
  j.at("oil_level_fraction").get_to(s.oil_level_fraction);
  j.at("tyre_pressure_kpa").get_to(s.tyre_pressure_kpa);
  j.at("doors_closed").get_to(s.doors_closed);
}

inline void to_json(Json& j, const Fault& f) {
  j = Json{{"kind", fault_kind_name(f.kind)}};
  if (f.position) j["position"] = position_name(*f.position);
}

inline void from_json(const Json& j, Fault& f) {
  f.kind = parse_fault_kind(j.at("kind"));
  if (j.contains("position")) {
    f.position = parse_position(j.at("position"));
  } else {
    f.position.reset();
  }
}

inline void to_json(Json& j, const Diagnosis& d) {
  j = Json{{"fault", d.fault},
           {"rule_id", d.rule_id},
           {"severity", d.severity},
           {"message", d.message}};
}

inline void from_json(const Json& j, Diagnosis& d) {
  j.at("fault").get_to(d.fault);
  j.at("rule_id").get_to(d.rule_id);
  j.at("severity").get_to(d.severity);
  j.at("message").get_to(d.message);
}

// Rule table export for documentation tooling.
inline Json rule_table_json() {
  Json arr = Json::array();
  for (const RuleDescriptor& r : rule_table()) {
    arr.push_back(Json{{"rule_id", r.rule_id},
                       {"description", r.description},
                       {"fault", fault_kind_name(r.fault)},
                       {"severity", r.severity}});
  }
  return arr;
}

}  // namespace vca
