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

// The typed message envelope carried on the bus. Each MessageKind has a
// fixed payload shape; the variant index always matches the kind.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vca/profile.hpp"
#include "vca/report.hpp"
#include "vca/rulebook.hpp"
#include "vca/types.hpp"
#include "vca/vehicle.hpp"

namespace vca {

struct CheckRequestPayload {
  std::string user_id;
  std::string vehicle_id;
  Scope scope = Scope::Full;
};

struct DispatchPayload {
  std::string vehicle_id;
  Scope check_scope = Scope::InternalOnly;  // InternalOnly or ExternalOnly
};

struct SensorReplyPayload {
  std::string vehicle_id;
  SnapshotSet snapshots;
};

struct DiagnosisResultPayload {
  std::string vehicle_id;
  std::vector<Diagnosis> diagnoses;
};

struct ReportRequestPayload {
  std::string vehicle_id;
  std::vector<Diagnosis> diagnoses;
  SnapshotSet snapshots;
};

struct ReportDeliveredPayload {
  Report report;
};

struct WarningPayload {
  std::string reason;
  std::string detail;
  std::optional<AgentId> terminated;
};

struct FatalErrorPayload {
  std::string reason;
  std::string vehicle_id;
};

struct ProfileStorePayload {
  UserProfile profile;
};

struct GreetingPayload {
  std::string user_id;
  std::string text;
};

using Payload =
    std::variant<CheckRequestPayload, DispatchPayload, SensorReplyPayload,
                 DiagnosisResultPayload, ReportRequestPayload,
                 ReportDeliveredPayload, WarningPayload, FatalErrorPayload,
                 ProfileStorePayload, GreetingPayload>;

inline MessageKind kind_of(const Payload& p) {
  switch (p.index()) {
    case 0: return MessageKind::CheckRequest;
    case 1: return MessageKind::Dispatch;
    case 2: return MessageKind::SensorReply;
    case 3: return MessageKind::DiagnosisResult;
    case 4: return MessageKind::ReportRequest;
    case 5: return MessageKind::ReportDelivered;
    case 6: return MessageKind::Warning;
    case 7: return MessageKind::FatalError;
    case 8: return MessageKind::ProfileStore;
    case 9: return MessageKind::Greeting;
  }
  return MessageKind::Warning;
}

struct Message {
  Seq seq = 0;  // assigned by the bus at send time
  SessionId session;
  AgentId from = AgentId::User;
  AgentId to = AgentId::Management;
  MessageKind kind = MessageKind::CheckRequest;
  Payload payload;
};

// Convenience constructor; kind derived from the payload alternative.
inline Message make_message(SessionId session, AgentId from, AgentId to,
                            Payload payload) {
  Message m;
  m.session = std::move(session);
  m.from = from;
  m.to = to;
  m.kind = kind_of(payload);
  m.payload = std::move(payload);
  return m;
}

inline Json payload_to_json(const Payload& p) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        Json j = Json::object();
        if constexpr (std::is_same_v<T, CheckRequestPayload>) {
          j["user_id"] = v.user_id;
          j["vehicle_id"] = v.vehicle_id;
          j["scope"] = scope_name(v.scope);
        } else if constexpr (std::is_same_v<T, DispatchPayload>) {
          j["vehicle_id"] = v.vehicle_id;
          j["check_scope"] = scope_name(v.check_scope);
        } else if constexpr (std::is_same_v<T, SensorReplyPayload>) {
          j["vehicle_id"] = v.vehicle_id;
          j["snapshots"] = v.snapshots;
        } else if constexpr (std::is_same_v<T, DiagnosisResultPayload>) {
          j["vehicle_id"] = v.vehicle_id;
          j["diagnoses"] = v.diagnoses;
        } else if constexpr (std::is_same_v<T, ReportRequestPayload>) {
          j["vehicle_id"] = v.vehicle_id;
          j["diagnoses"] = v.diagnoses;
          j["snapshots"] = v.snapshots;
        } else if constexpr (std::is_same_v<T, ReportDeliveredPayload>) {
          j["report"] = v.report;
        } else if constexpr (std::is_same_v<T, WarningPayload>) {
          j["reason"] = v.reason;
          j["detail"] = v.detail;
          if (v.terminated) j["terminated"] = agent_name(*v.terminated);
        } else if constexpr (std::is_same_v<T, FatalErrorPayload>) {
          j["reason"] = v.reason;
          j["vehicle_id"] = v.vehicle_id;
        } else if constexpr (std::is_same_v<T, ProfileStorePayload>) {
          j["profile"] = v.profile;
        } else if constexpr (std::is_same_v<T, GreetingPayload>) {
          j["user_id"] = v.user_id;
          j["text"] = v.text;
        }
        return j;
      },
      p);
}

inline Json message_to_json(const Message& m) {
  return Json{{"seq", m.seq},
              {"session", m.session},
              {"from", agent_name(m.from)},
              {"to", agent_name(m.to)},
              {"kind", kind_name(m.kind)},
              {"payload", payload_to_json(m.payload)}};
}

}  // namespace vca
