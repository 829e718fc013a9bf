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

// Report rendering. The text format is fixed and byte-stable:
//
//   VCA REPORT session=<id> vehicle=<id>
//   [<severity>] <fault>: <message> -- <action>
//   ...
//   SUMMARY: <n> fault(s)
//
// An empty diagnosis list renders the single body line "No fault found".
// A session aborted after a fatal error appends "; check incomplete" to
// the summary.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "vca/rulebook.hpp"
#include "vca/types.hpp"

namespace vca {

// Fixed recommended action per fault kind.
inline std::string recommended_action(FaultKind k) {
  switch (k) {
    case FaultKind::VehicleStolen: return "report theft to the authorities";
    case FaultKind::Battery: return "charge or replace battery";
    case FaultKind::Starter: return "service or replace the starter motor";
    case FaultKind::SparkPlugs: return "clean or replace the spark plugs";
    case FaultKind::PetrolFinished: return "refuel the tank";
    case FaultKind::OilLeakage: return "inspect the oil system and top up";
    case FaultKind::Overspeed: return "reduce speed";
    case FaultKind::DirectionInconsistency:
      return "inspect gearbox and transmission";
    case FaultKind::TyreUnderinflated:
      return "inflate tyre to the configured minimum pressure";
    case FaultKind::DoorOpen: return "close the door";
  }
  return "?";
}

struct ReportLine {
  int severity = 0;
  Fault fault;
  std::string message;
  std::string action;

  bool operator==(const ReportLine&) const = default;
};

struct Report {
  SessionId session;
  std::string vehicle_id;
  std::vector<ReportLine> lines;  // sorted by severity rank
  std::string verdict_summary;

  bool operator==(const Report&) const = default;

  std::string text() const {
    std::ostringstream os;
    os << "VCA REPORT session=" << session << " vehicle=" << vehicle_id
       << '\n';
    if (lines.empty()) {
      os << "No fault found\n";
    } else {
      for (const ReportLine& l : lines) {
        os << '[' << l.severity << "] " << l.fault.str() << ": " << l.message
           << " -- " << l.action << '\n';
      }
    }
    os << "SUMMARY: " << verdict_summary << '\n';
    return os.str();
  }
};

// Pure rendering of a diagnosis list. Equal inputs give byte-equal text.
inline Report report_render(const std::vector<Diagnosis>& diagnoses,
                            const std::string& vehicle_id,
                            const SessionId& session,
                            bool incomplete = false) {
  Report r;
  r.session = session;
  r.vehicle_id = vehicle_id;
  std::vector<Diagnosis> sorted = diagnoses;
  detail::sort_diagnoses(sorted);
  for (const Diagnosis& d : sorted) {
    r.lines.push_back(ReportLine{d.severity, d.fault, d.message,
                                 recommended_action(d.fault.kind)});
  }
  r.verdict_summary = std::to_string(r.lines.size()) + " fault(s)";
  if (incomplete) r.verdict_summary += "; check incomplete";
  return r;
}

inline void to_json(Json& j, const ReportLine& l) {
  j = Json{{"severity", l.severity},
           {"fault", l.fault},
           {"message", l.message},
           {"action", l.action}};
}

inline void from_json(const Json& j, ReportLine& l) {
  j.at("severity").get_to(l.severity);
  j.at("fault").get_to(l.fault);
  j.at("message").get_to(l.message);
  j.at("action").get_to(l.action);
}

inline void to_json(Json& j, const Report& r) {
  j = Json{{"session", r.session},
           {"vehicle_id", r.vehicle_id},
           {"lines", r.lines},
           {"verdict_summary", r.verdict_summary},
           {"text", r.text()}};
}

inline void from_json(const Json& j, Report& r) {
  j.at("session").get_to(r.session);
  j.at("vehicle_id").get_to(r.vehicle_id);
  j.at("lines").get_to(r.lines);
  j.at("verdict_summary").get_to(r.verdict_summary);
}

}  // namespace vca
