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

// Closed identity and enum sets shared across the library.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "vca/error.hpp"

namespace vca {

// All JSON the library emits or parses goes through this alias so that key
// order is insertion order and files serialize byte-stably.
using Json = nlohmann::ordered_json;

using Seq = std::uint64_t;
using SessionId = std::string;

// The six bus endpoints: the five agents plus the user.
enum class AgentId : std::uint8_t {
  User,
  Management,
  Internal,
  External,
  Watcher,
  Report,
};

inline constexpr std::array<AgentId, 6> kAllAgents = {
    AgentId::User,     AgentId::Management, AgentId::Internal,
    AgentId::External, AgentId::Watcher,    AgentId::Report,
};

inline const char* agent_name(AgentId id) {
  switch (id) {
    case AgentId::User: return "User";
    case AgentId::Management: return "Management";
    case AgentId::Internal: return "Internal";
    case AgentId::External: return "External";
    case AgentId::Watcher: return "Watcher";
    case AgentId::Report: return "Report";
  }
  return "?";
}

inline AgentId parse_agent(const std::string& s) {
  for (AgentId id : kAllAgents) {
    if (s == agent_name(id)) return id;
  }
  throw Error(Errc::ParseError, "unknown agent id: " + s);
}

enum class MessageKind : std::uint8_t {
  CheckRequest,
  Dispatch,
  SensorReply,
  DiagnosisResult,
  ReportRequest,
  ReportDelivered,
  Warning,
  FatalError,
  ProfileStore,
  Greeting,
};

inline constexpr std::array<MessageKind, 10> kAllMessageKinds = {
    MessageKind::CheckRequest,    MessageKind::Dispatch,
    MessageKind::SensorReply,     MessageKind::DiagnosisResult,
    MessageKind::ReportRequest,   MessageKind::ReportDelivered,
    MessageKind::Warning,         MessageKind::FatalError,
    MessageKind::ProfileStore,    MessageKind::Greeting,
};

inline const char* kind_name(MessageKind k) {
  switch (k) {
    case MessageKind::CheckRequest: return "CheckRequest";
    case MessageKind::Dispatch: return "Dispatch";
    case MessageKind::SensorReply: return "SensorReply";
    case MessageKind::DiagnosisResult: return "DiagnosisResult";
    case MessageKind::ReportRequest: return "ReportRequest";
    case MessageKind::ReportDelivered: return "ReportDelivered";
    case MessageKind::Warning: return "Warning";
    case MessageKind::FatalError: return "FatalError";
    case MessageKind::ProfileStore: return "ProfileStore";
    case MessageKind::Greeting: return "Greeting";
  }
  return "?";
}

// What a check session covers.
enum class Scope : std::uint8_t { InternalOnly, ExternalOnly, Full };

inline const char* scope_name(Scope s) {
  switch (s) {
    case Scope::InternalOnly: return "internal";
    case Scope::ExternalOnly: return "external";
    case Scope::Full: return "full";
  }
  return "?";
}

inline Scope parse_scope(const std::string& s) {
  if (s == "internal") return Scope::InternalOnly;
  if (s == "external") return Scope::ExternalOnly;
  if (s == "full") return Scope::Full;
  throw Error(Errc::ParseError,
              "unknown scope '" + s + "' (expected internal|external|full)");
}

// Wheel / door position, front-left through rear-right.
enum class Position : std::uint8_t { FL, FR, RL, RR };

inline constexpr std::array<Position, 4> kAllPositions = {
    Position::FL, Position::FR, Position::RL, Position::RR};

inline const char* position_name(Position p) {
  switch (p) {
    case Position::FL: return "FL";
    case Position::FR: return "FR";
    case Position::RL: return "RL";
    case Position::RR: return "RR";
  }
  return "?";
}

inline std::size_t position_index(Position p) {
  return static_cast<std::size_t>(p);
}

inline Position parse_position(const std::string& s) {
  for (Position p : kAllPositions) {
    if (s == position_name(p)) return p;
  }
  throw Error(Errc::ParseError,
              "unknown position '" + s + "' (expected FL|FR|RL|RR)");
}

}  // namespace vca
