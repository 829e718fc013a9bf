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

// Simulated vehicle. Component health flags stand in for real sensors;
// fault injections flip exactly the fields that make one rule antecedent
// true, so a diagnosis round trip is directly checkable.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "vca/rulebook.hpp"
#include "vca/types.hpp"

namespace vca {

struct VehicleState {
  std::string vehicle_id;
  bool battery_ok = true;
  bool starter_ok = true;
  bool spark_plugs_ok = true;
  bool alarm_triggered = false;
  bool oil_leak = false;
  bool sensor_failure = false;
  double fuel_fraction = 1.0;
  double speed_kmh = 0.0;
  Direction commanded_direction = Direction::Neutral;
  Motion actual_motion = Motion::Stationary;
  std::array<double, 4> tyre_pressure_kpa = {220.0, 220.0, 220.0, 220.0};
  std::array<bool, 4> doors_closed = {true, true, true, true};

  bool operator==(const VehicleState&) const = default;
};

using VehicleFleet = std::map<std::string, VehicleState>;

enum class FaultInjection : std::uint8_t {
  DeadBattery,
  BadStarter,
  FouledSparkPlugs,
  EmptyTank,
  Theft,
  OilLeak,
  UnderinflatedTyre,
  OpenDoor,
  Overspeed,
  DirectionMismatch,
  SensorFailure,
};

inline constexpr std::array<FaultInjection, 11> kAllInjections = {
    FaultInjection::DeadBattery,      FaultInjection::BadStarter,
    FaultInjection::FouledSparkPlugs, FaultInjection::EmptyTank,
    FaultInjection::Theft,            FaultInjection::OilLeak,
    FaultInjection::UnderinflatedTyre, FaultInjection::OpenDoor,
    FaultInjection::Overspeed,        FaultInjection::DirectionMismatch,
    FaultInjection::SensorFailure,
};

inline const char* injection_name(FaultInjection f) {
  switch (f) {
    case FaultInjection::DeadBattery: return "DeadBattery";
    case FaultInjection::BadStarter: return "BadStarter";
    case FaultInjection::FouledSparkPlugs: return "FouledSparkPlugs";
    case FaultInjection::EmptyTank: return "EmptyTank";
    case FaultInjection::Theft: return "Theft";
    case FaultInjection::OilLeak: return "OilLeak";
    case FaultInjection::UnderinflatedTyre: return "UnderinflatedTyre";
    case FaultInjection::OpenDoor: return "OpenDoor";
    case FaultInjection::Overspeed: return "Overspeed";
    case FaultInjection::DirectionMismatch: return "DirectionMismatch";
    case FaultInjection::SensorFailure: return "SensorFailure";
  }
  return "?";
}

inline bool injection_needs_position(FaultInjection f) {
  return f == FaultInjection::UnderinflatedTyre ||
         f == FaultInjection::OpenDoor;
}

// An injection plus its wheel/door position where one is required.
struct Injection {
  FaultInjection kind;
  std::optional<Position> position;

  bool operator==(const Injection&) const = default;
};

inline Injection parse_injection(const std::string& name,
                                 const std::optional<std::string>& pos) {
  for (FaultInjection f : kAllInjections) {
    if (name != injection_name(f)) continue;
    if (injection_needs_position(f)) {
      if (!pos) {
        throw Error(Errc::ParseError,
                    std::string(name) + " requires a position (FL|FR|RL|RR)");
      }
      return Injection{f, parse_position(*pos)};
    }
    if (pos) {
      throw Error(Errc::ParseError,
                  std::string(name) + " does not take a position");
    }
    return Injection{f, std::nullopt};
  }
  throw Error(Errc::ParseError, "unknown fault injection: " + name);
}

// The fault a successful check is expected to conclude for an injection.
inline Fault injected_fault(const Injection& inj) {
  switch (inj.kind) {
    case FaultInjection::DeadBattery: return make_fault(FaultKind::Battery);
    case FaultInjection::BadStarter: return make_fault(FaultKind::Starter);
    case FaultInjection::FouledSparkPlugs:
      return make_fault(FaultKind::SparkPlugs);
    case FaultInjection::EmptyTank:
      return make_fault(FaultKind::PetrolFinished);
    case FaultInjection::Theft: return make_fault(FaultKind::VehicleStolen);
    case FaultInjection::OilLeak: return make_fault(FaultKind::OilLeakage);
    case FaultInjection::UnderinflatedTyre:
      return make_fault(FaultKind::TyreUnderinflated, *inj.position);
    case FaultInjection::OpenDoor:
      return make_fault(FaultKind::DoorOpen, *inj.position);
    case FaultInjection::Overspeed: return make_fault(FaultKind::Overspeed);
    case FaultInjection::DirectionMismatch:
      return make_fault(FaultKind::DirectionInconsistency);
    case FaultInjection::SensorFailure:
      break;  // fatal; no diagnosis is ever produced
  }
  throw Error(Errc::ParseError, "SensorFailure has no mapped fault");
}

// Which check scope observes the injected symptom.
inline Scope injection_scope(FaultInjection f) {
  switch (f) {
    case FaultInjection::DeadBattery:
    case FaultInjection::BadStarter:
    case FaultInjection::FouledSparkPlugs:
    case FaultInjection::EmptyTank:
    case FaultInjection::Theft:
      return Scope::InternalOnly;
    default:
      return Scope::ExternalOnly;
  }
}

inline VehicleState new_vehicle(std::string vehicle_id) {
  VehicleState v;
  v.vehicle_id = std::move(vehicle_id);
  return v;
}

// Applies one symptom row. Injections compose field-wise; the latest write
// to a field wins.
inline VehicleState inject_fault(VehicleState v, const Injection& inj) {
  switch (inj.kind) {
    case FaultInjection::DeadBattery: v.battery_ok = false; break;
    case FaultInjection::BadStarter: v.starter_ok = false; break;
    case FaultInjection::FouledSparkPlugs: v.spark_plugs_ok = false; break;
    case FaultInjection::EmptyTank: v.fuel_fraction = 0.0; break;
    case FaultInjection::Theft: v.alarm_triggered = true; break;
    case FaultInjection::OilLeak: v.oil_leak = true; break;
    case FaultInjection::UnderinflatedTyre:
      v.tyre_pressure_kpa[position_index(*inj.position)] = 120.0;
      break;
    case FaultInjection::OpenDoor:
      v.doors_closed[position_index(*inj.position)] = false;
      break;
    case FaultInjection::Overspeed:
      v.speed_kmh = 150.0;
      v.commanded_direction = Direction::Forward;
      v.actual_motion = Motion::Forward;
      break;
    case FaultInjection::DirectionMismatch:
      v.speed_kmh = 5.0;
      v.commanded_direction = Direction::Reverse;
      v.actual_motion = Motion::Forward;
      break;
    case FaultInjection::SensorFailure: v.sensor_failure = true; break;
  }
  return v;
}

// Reverts one symptom row to its healthy values.
inline VehicleState clear_fault(VehicleState v, const Injection& inj) {
  switch (inj.kind) {
    case FaultInjection::DeadBattery: v.battery_ok = true; break;
    case FaultInjection::BadStarter: v.starter_ok = true; break;
    case FaultInjection::FouledSparkPlugs: v.spark_plugs_ok = true; break;
    case FaultInjection::EmptyTank: v.fuel_fraction = 1.0; break;
    case FaultInjection::Theft: v.alarm_triggered = false; break;
    case FaultInjection::OilLeak: v.oil_leak = false; break;
    case FaultInjection::UnderinflatedTyre:
      v.tyre_pressure_kpa[position_index(*inj.position)] = 220.0;
      break;
    case FaultInjection::OpenDoor:
      v.doors_closed[position_index(*inj.position)] = true;
      break;
    case FaultInjection::Overspeed:
    case FaultInjection::DirectionMismatch:
      v.speed_kmh = 0.0;
      v.commanded_direction = Direction::Neutral;
      v.actual_motion = Motion::Stationary;
      break;
    case FaultInjection::SensorFailure: v.sensor_failure = false; break;
  }
  return v;
}

// Pure projections of the vehicle onto sensor snapshots.

inline InternalSnapshot read_internal(const VehicleState& v) {
  if (v.sensor_failure) {
    throw Error(Errc::SensorFailure,
                "sensor failure on vehicle " + v.vehicle_id);
  }
  InternalSnapshot s;
  s.fuel_in_tank = v.fuel_fraction > 0.0;
  s.engine_turns_over = v.battery_ok && v.starter_ok;
  s.lights_come_on = v.battery_ok;
  s.engine_getting_petrol = s.fuel_in_tank;
  s.engine_starts =
      v.battery_ok && v.starter_ok && v.spark_plugs_ok && s.fuel_in_tank;
  s.alarm_bell_ringing = v.alarm_triggered;
  return s;
}

inline ExternalSnapshot read_external(const VehicleState& v) {
  if (v.sensor_failure) {
    throw Error(Errc::SensorFailure,
                "sensor failure on vehicle " + v.vehicle_id);
  }
  ExternalSnapshot s;
  s.speed_kmh = v.speed_kmh;
  s.commanded_direction = v.commanded_direction;
  s.actual_motion = v.actual_motion;
  s.oil_leak_detected = v.oil_leak;
  s.oil_level_fraction = 1.0;  // the simulated level sensor reads full
  s.tyre_pressure_kpa = v.tyre_pressure_kpa;
  s.doors_closed = v.doors_closed;
  return s;
}

// The snapshot(s) one check session reads.
struct SnapshotSet {
  std::optional<InternalSnapshot> internal;
  std::optional<ExternalSnapshot> external;

  bool operator==(const SnapshotSet&) const = default;
};

inline SnapshotSet read_snapshot(const VehicleState& v, Scope scope) {
  SnapshotSet set;
  if (scope == Scope::InternalOnly || scope == Scope::Full) {
    set.internal = read_internal(v);
  }
  if (scope == Scope::ExternalOnly || scope == Scope::Full) {
    set.external = read_external(v);
  }
  return set;
}

// --- JSON ---

inline void to_json(Json& j, const SnapshotSet& s) {
  j = Json::object();
  if (s.internal) j["internal"] = *s.internal;
  if (s.external) j["external"] = *s.external;
}

inline void from_json(const Json& j, SnapshotSet& s) {
  s.internal.reset();
  s.external.reset();
  if (j.contains("internal")) s.internal = j.at("internal").get<InternalSnapshot>();
  if (j.contains("external")) s.external = j.at("external").get<ExternalSnapshot>();
}

inline void to_json(Json& j, const VehicleState& v) {
  j = Json{{"vehicle_id", v.vehicle_id},
           {"battery_ok", v.battery_ok},
           {"starter_ok", v.starter_ok},
           {"spark_plugs_ok", v.spark_plugs_ok},
           {"alarm_triggered", v.alarm_triggered},
           {"oil_leak", v.oil_leak},
           {"sensor_failure", v.sensor_failure},
           {"fuel_fraction", v.fuel_fraction},
           {"speed_kmh", v.speed_kmh},
           {"commanded_direction", direction_name(v.commanded_direction)},
           {"actual_motion", motion_name(v.actual_motion)},
           {"tyre_pressure_kpa", v.tyre_pressure_kpa},
           {"doors_closed", v.doors_closed}};
}

inline void from_json(const Json& j, VehicleState& v) {
  j.at("vehicle_id").get_to(v.vehicle_id);
  j.at("battery_ok").get_to(v.battery_ok);
  j.at("starter_ok").get_to(v.starter_ok);
  j.at("spark_plugs_ok").get_to(v.spark_plugs_ok);
  j.at("alarm_triggered").get_to(v.alarm_triggered);
  j.at("oil_leak").get_to(v.oil_leak);
  j.at("sensor_failure").get_to(v.sensor_failure);
  j.at("fuel_fraction").get_to(v.fuel_fraction);
  j.at("speed_kmh").get_to(v.speed_kmh);
  v.commanded_direction = parse_direction(j.at("commanded_direction"));
  v.actual_motion = parse_motion(j.at("actual_motion"));
  j.at("tyre_pressure_kpa").get_to(v.tyre_pressure_kpa);
  j.at("doors_closed").get_to(v.doors_closed);
}

}  // namespace vca
