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

// The agent handlers. Each agent owns its state exclusively and talks to
// the rest of the system only through messages: a handler consumes one
// inbound message and returns the messages to send. The scheduler that
// drives delivery lives in runtime.hpp.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vca/message.hpp"
#include "vca/profile.hpp"
#include "vca/report.hpp"
#include "vca/rulebook.hpp"
#include "vca/types.hpp"
#include "vca/vehicle.hpp"

namespace vca {

// Text shown to a user on first contact and by the help command.
inline const char* operating_procedure() {
  return
      "Welcome to the vehicle check service.\n"
      "Operating procedure:\n"
      "  1. Register a vehicle:            vehicle-add <vehicle-id>\n"
      "  2. Request a check:               check <vehicle-id> <internal|external|full>\n"
      "  3. Read the delivered report; past reports: history <vehicle-id>\n"
      "Simulated faults: fault-inject <vehicle-id> <fault> [position],\n"
      "reverted with fault-clear. Store a profile with profile-set <user>\n"
      "[name=... vehicles=v1,v2 key=value ...].\n";
}

// Management: routes check requests to the right check agent, accumulates
// results, triggers reporting, greets new users and keeps their profiles.
class ManagementAgent {
 public:
  enum class Phase { Open, Reporting, Aborted };

  struct SessionRecord {
    std::string user_id;
    std::string vehicle_id;
    Scope scope = Scope::Full;
    std::vector<Diagnosis> diagnoses;
    SnapshotSet snapshots;
    bool internal_done = false;
    bool external_done = false;
    Phase phase = Phase::Open;
    std::optional<Report> partial_report;  // set when the session aborted
  };

  explicit ManagementAgent(ProfileStore& profiles) : profiles_(profiles) {}

  std::vector<Message> handle(const Message& m) {
    switch (m.kind) {
      case MessageKind::CheckRequest:
        return on_check_request(m);
      case MessageKind::SensorReply:
        return on_sensor_reply(m);
      case MessageKind::DiagnosisResult:
        return on_diagnosis_result(m);
      case MessageKind::Warning:
        return on_warning(m);
      case MessageKind::ProfileStore:
        return on_profile_store(m);
      default:
        return {};  // kinds Management does not act on
    }
  }

  const SessionRecord* session(const SessionId& id) const {
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : &it->second;
  }

  void close_session(const SessionId& id) { sessions_.erase(id); }

 private:
  std::vector<Message> on_check_request(const Message& m) {
    const auto& req = std::get<CheckRequestPayload>(m.payload);
    std::vector<Message> out;
    greet_if_new(req.user_id, m.session, out);

    SessionRecord rec;
    rec.user_id = req.user_id;
    rec.vehicle_id = req.vehicle_id;
    rec.scope = req.scope;
    sessions_[m.session] = std::move(rec);

    const bool internal_first = req.scope != Scope::ExternalOnly;
    out.push_back(make_message(
        m.session, AgentId::Management,
        internal_first ? AgentId::Internal : AgentId::External,
        DispatchPayload{req.vehicle_id, internal_first
                                            ? Scope::InternalOnly
                                            : Scope::ExternalOnly}));
    return out;
  }

  std::vector<Message> on_sensor_reply(const Message& m) {
    auto it = sessions_.find(m.session);
    if (it == sessions_.end()) return {};
    const auto& reply = std::get<SensorReplyPayload>(m.payload);
    if (reply.snapshots.internal)
      it->second.snapshots.internal = reply.snapshots.internal;
    if (reply.snapshots.external)
      it->second.snapshots.external = reply.snapshots.external;
    return {};
  }

  std::vector<Message> on_diagnosis_result(const Message& m) {
    auto it = sessions_.find(m.session);
    if (it == sessions_.end()) {
      throw Error(Errc::UnknownSession,
                  "diagnosis result for unknown session " + m.session);
    }
    SessionRecord& rec = it->second;
    const auto& result = std::get<DiagnosisResultPayload>(m.payload);
    rec.diagnoses.insert(rec.diagnoses.end(), result.diagnoses.begin(),
                         result.diagnoses.end());
    if (m.from == AgentId::Internal) rec.internal_done = true;
    if (m.from == AgentId::External) rec.external_done = true;

    std::vector<Message> out;
    if (rec.scope == Scope::Full && !rec.external_done) {
      out.push_back(make_message(
          m.session, AgentId::Management, AgentId::External,
          DispatchPayload{rec.vehicle_id, Scope::ExternalOnly}));
    } else {
      detail::sort_diagnoses(rec.diagnoses);
      rec.phase = Phase::Reporting;
      out.push_back(make_message(
          m.session, AgentId::Management, AgentId::Report,
          ReportRequestPayload{rec.vehicle_id, rec.diagnoses, rec.snapshots}));
    }
    return out;
  }

  // A fatal-recovery notification from the Watcher aborts the session with
  // a partial report marked incomplete.
  std::vector<Message> on_warning(const Message& m) {
    const auto& warn = std::get<WarningPayload>(m.payload);
    if (warn.reason != "fatal_recovery") return {};
    auto it = sessions_.find(m.session);
    if (it == sessions_.end()) return {};
    SessionRecord& rec = it->second;
    rec.phase = Phase::Aborted;
    detail::sort_diagnoses(rec.diagnoses);
    rec.partial_report = report_render(rec.diagnoses, rec.vehicle_id,
                                       m.session, /*incomplete=*/true);
    return {};
  }

  std::vector<Message> on_profile_store(const Message& m) {
    const auto& p = std::get<ProfileStorePayload>(m.payload);
    std::vector<Message> out;
    greet_if_new(p.profile.user_id, m.session, out);
    store_profile(profiles_, p.profile);
    return out;
  }

  void greet_if_new(const std::string& user_id, const SessionId& session,
                    std::vector<Message>& out) {
    if (profiles_.contains(user_id)) return;
    UserProfile p;
    p.user_id = user_id;
    p.name = user_id;
    store_profile(profiles_, p);
    out.push_back(make_message(session, AgentId::Management, AgentId::User,
                               GreetingPayload{user_id,
                                               operating_procedure()}));
  }

  ProfileStore& profiles_;
  std::map<SessionId, SessionRecord> sessions_;
};

namespace detail {

// Shared body of the two check agents: read the scoped snapshot, run the
// rules, reply with the sensor data and the diagnoses. A sensor failure
// becomes a FatalError message rather than an escaping exception.
inline std::vector<Message> run_check_agent(
    const Message& m, const VehicleFleet& fleet, AgentId self, Scope part,
    const RuleConfig& cfg) {
  const auto& dispatch = std::get<DispatchPayload>(m.payload);
  auto it = fleet.find(dispatch.vehicle_id);
  if (it == fleet.end()) {
    throw Error(Errc::UnknownVehicle,
                "unknown vehicle " + dispatch.vehicle_id);
  }
  try {
    SnapshotSet snaps = read_snapshot(it->second, part);
    std::vector<Diagnosis> diagnoses =
        part == Scope::InternalOnly
            ? evaluate_internal_rules(*snaps.internal)
            : evaluate_external_rules(*snaps.external, cfg);
    std::vector<Message> out;
    out.push_back(make_message(m.session, self, AgentId::Management,
                               SensorReplyPayload{dispatch.vehicle_id, snaps}));
    out.push_back(make_message(
        m.session, self, AgentId::Management,
        DiagnosisResultPayload{dispatch.vehicle_id, std::move(diagnoses)}));
    return out;
  } catch (const Error& e) {
    if (e.code() != Errc::SensorFailure) throw;
    return {make_message(m.session, self, AgentId::Management,
                         FatalErrorPayload{e.what(), dispatch.vehicle_id})};
  }
}

}  // namespace detail

class InternalAgent {
 public:
  explicit InternalAgent(const VehicleFleet& fleet) : fleet_(fleet) {}

  std::vector<Message> handle(const Message& m) {
    if (m.kind != MessageKind::Dispatch) return {};
    // internal rules take no thresholds
    return detail::run_check_agent(m, fleet_, AgentId::Internal,
                                   Scope::InternalOnly, RuleConfig{});
  }

 private:
  const VehicleFleet& fleet_;
};

class ExternalAgent {
 public:
  ExternalAgent(const VehicleFleet& fleet, RuleConfig cfg)
      : fleet_(fleet), cfg_(cfg) {}

  std::vector<Message> handle(const Message& m) {
    if (m.kind != MessageKind::Dispatch) return {};
    return detail::run_check_agent(m, fleet_, AgentId::External,
                                   Scope::ExternalOnly, cfg_);
  }

 private:
  const VehicleFleet& fleet_;
  RuleConfig cfg_;
};

class ReportAgent {
 public:
  std::vector<Message> handle(const Message& m) {
    if (m.kind != MessageKind::ReportRequest) return {};
    const auto& req = std::get<ReportRequestPayload>(m.payload);
    Report r = report_render(req.diagnoses, req.vehicle_id, m.session);
    return {make_message(m.session, AgentId::Report, AgentId::User,
                         ReportDeliveredPayload{std::move(r)})};
  }
};

}  // namespace vca
