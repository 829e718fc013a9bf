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

// The Watcher supervises every message (via the bus tap) against a
// per-session protocol FSM:
//
//   Idle -CheckRequest-> Requested
//   Requested|Collected -Dispatch-> InternalActive|ExternalActive
//   *Active -DiagnosisResult(from the active agent)-> Collected
//   Collected -ReportRequest-> Reporting
//   Reporting -ReportDelivered-> Idle
//
// Every legal transition pushes the prior state onto a checkpoint stack.
// A message whose kind is illegal in the current state draws
// Warning(OrderingViolation); a Dispatch while another check agent is
// active, or a DiagnosisResult from a non-active agent, draws
// Warning(Conflict); a FatalError always draws Fatal. Warnings never
// advance the FSM. Recovery after a Fatal terminates the active agent,
// pops the session back to the previously entered state and notifies
// Management.
//
// SensorReply, Greeting, ProfileStore and Warning are administrative
// traffic: the Watcher acknowledges them in any state without a
// transition.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vca/bus.hpp"
#include "vca/message.hpp"
#include "vca/types.hpp"

namespace vca {

enum class SessionFsmState : std::uint8_t {
  Idle,
  Requested,
  InternalActive,
  ExternalActive,
  Collected,
  Reporting,
};

inline const char* fsm_state_name(SessionFsmState s) {
  switch (s) {
    case SessionFsmState::Idle: return "Idle";
    case SessionFsmState::Requested: return "Requested";
    case SessionFsmState::InternalActive: return "InternalActive";
    case SessionFsmState::ExternalActive: return "ExternalActive";
    case SessionFsmState::Collected: return "Collected";
    case SessionFsmState::Reporting: return "Reporting";
  }
  return "?";
}

enum class VerdictKind : std::uint8_t { Ok, Warning, Fatal };
enum class WarningReason : std::uint8_t { OrderingViolation, Conflict };

struct Verdict {
  VerdictKind kind = VerdictKind::Ok;
  std::optional<WarningReason> reason;

  static Verdict ok() { return {VerdictKind::Ok, std::nullopt}; }
  static Verdict warning(WarningReason r) { return {VerdictKind::Warning, r}; }
  static Verdict fatal() { return {VerdictKind::Fatal, std::nullopt}; }

  bool operator==(const Verdict&) const = default;

  std::string str() const {
    switch (kind) {
      case VerdictKind::Ok: return "ok";
      case VerdictKind::Warning:
        return *reason == WarningReason::OrderingViolation
                   ? "warning:ordering_violation"
                   : "warning:conflict";
      case VerdictKind::Fatal: return "fatal";
    }
    return "?";
  }
};

inline Verdict parse_verdict(const std::string& s) {
  if (s == "ok") return Verdict::ok();
  if (s == "warning:ordering_violation")
    return Verdict::warning(WarningReason::OrderingViolation);
  if (s == "warning:conflict")
    return Verdict::warning(WarningReason::Conflict);
  if (s == "fatal") return Verdict::fatal();
  throw Error(Errc::ParseError, "unknown verdict: " + s);
}

struct WatcherEvent {
  Seq seq = 0;
  Verdict verdict;
  std::string note;  // not persisted; surfaced in verbose output

  bool operator==(const WatcherEvent& o) const {
    return seq == o.seq && verdict == o.verdict;
  }
};

inline void to_json(Json& j, const WatcherEvent& e) {
  j = Json{{"seq", e.seq}, {"verdict", e.verdict.str()}};
}

inline void from_json(const Json& j, WatcherEvent& e) {
  j.at("seq").get_to(e.seq);
  e.verdict = parse_verdict(j.at("verdict"));
  e.note.clear();
}

// Per-session supervision state.
struct SessionWatch {
  SessionFsmState state = SessionFsmState::Idle;
  std::vector<SessionFsmState> checkpoints;  // states entered before this one
  std::optional<AgentId> active_check_agent;
  bool fatal_pending = false;
  std::vector<WatcherEvent> events;  // non-Ok verdicts and logged drops
};

class WatcherAgent {
 public:
  explicit WatcherAgent(Bus& bus) : bus_(bus) {}

  // Classifies one observed message and advances the session FSM when the
  // message is legal. Total: every input yields a verdict.
  Verdict observe(const Message& m) {
    if (is_administrative(m.kind)) return Verdict::ok();

    SessionWatch& w = sessions_[m.session];
    Verdict v = classify(w, m);
    if (v.kind != VerdictKind::Ok) {
      w.events.push_back(WatcherEvent{m.seq, v, describe(w, m, v)});
    }
    if (v.kind == VerdictKind::Fatal) w.fatal_pending = true;
    return v;
  }

  // Recovery after a Fatal verdict: terminate the active agent, pop the
  // session to the previously entered state and notify Management.
  void recover(const SessionId& session) {
    auto it = sessions_.find(session);
    if (it == sessions_.end() || !it->second.fatal_pending) {
      throw Error(Errc::NothingToRecover,
                  "no fatal pending for session " + session);
    }
    SessionWatch& w = it->second;
    std::optional<AgentId> terminated = w.active_check_agent;
    if (terminated) bus_.terminate_agent(*terminated);

    if (w.checkpoints.empty()) {
      w.state = SessionFsmState::Idle;  // never underflows past Idle
    } else {
      w.state = w.checkpoints.back();
      w.checkpoints.pop_back();
    }
    w.active_check_agent = agent_for_state(w.state);
    w.fatal_pending = false;

    WarningPayload note;
    note.reason = "fatal_recovery";
    note.detail = terminated
                      ? std::string("terminated ") + agent_name(*terminated) +
                            ", resumed at " + fsm_state_name(w.state)
                      : std::string("resumed at ") + fsm_state_name(w.state);
    note.terminated = terminated;
    bus_.send(make_message(session, AgentId::Watcher, AgentId::Management,
                           std::move(note)));
  }

  // Records a dropped delivery (late traffic to a terminated agent).
  void log_drop(const SessionId& session, Seq seq, std::string note) {
    SessionWatch& w = sessions_[session];
    w.events.push_back(WatcherEvent{
        seq, Verdict::warning(WarningReason::Conflict), std::move(note)});
  }

  SessionFsmState state_of(const SessionId& session) const {
    auto it = sessions_.find(session);
    return it == sessions_.end() ? SessionFsmState::Idle : it->second.state;
  }

  const SessionWatch* session(const SessionId& id) const {
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : &it->second;
  }

  std::vector<WatcherEvent> events_of(const SessionId& id) const {
    auto it = sessions_.find(id);
    return it == sessions_.end() ? std::vector<WatcherEvent>{}
                                 : it->second.events;
  }

  static bool is_administrative(MessageKind k) {
    return k == MessageKind::SensorReply || k == MessageKind::Greeting ||
           k == MessageKind::ProfileStore || k == MessageKind::Warning;
  }

 private:
  static std::optional<AgentId> agent_for_state(SessionFsmState s) {
    if (s == SessionFsmState::InternalActive) return AgentId::Internal;
    if (s == SessionFsmState::ExternalActive) return AgentId::External;
    return std::nullopt;
  }

  Verdict classify(SessionWatch& w, const Message& m) {
    using S = SessionFsmState;
    switch (m.kind) {
      case MessageKind::FatalError:
        return Verdict::fatal();

      case MessageKind::CheckRequest:
        if (w.state == S::Idle) {
          enter(w, S::Requested);
          return Verdict::ok();
        }
        return Verdict::warning(WarningReason::OrderingViolation);

      case MessageKind::Dispatch: {
        if (m.to != AgentId::Internal && m.to != AgentId::External) {
          return Verdict::warning(WarningReason::OrderingViolation);
        }
        if (w.active_check_agent && *w.active_check_agent != m.to) {
          return Verdict::warning(WarningReason::Conflict);
        }
        if ((w.state == S::Requested || w.state == S::Collected) &&
            !w.active_check_agent) {
          enter(w, m.to == AgentId::Internal ? S::InternalActive
                                             : S::ExternalActive);
          w.active_check_agent = m.to;
          return Verdict::ok();
        }
        return Verdict::warning(WarningReason::OrderingViolation);
      }

      case MessageKind::DiagnosisResult:
        if (w.state == S::InternalActive || w.state == S::ExternalActive) {
          if (w.active_check_agent && m.from == *w.active_check_agent) {
            enter(w, S::Collected);
            w.active_check_agent.reset();
            return Verdict::ok();
          }
          return Verdict::warning(WarningReason::Conflict);
        }
        return Verdict::warning(WarningReason::OrderingViolation);

      case MessageKind::ReportRequest:
        if (w.state == S::Collected) {
          enter(w, S::Reporting);
          return Verdict::ok();
        }
        return Verdict::warning(WarningReason::OrderingViolation);

      case MessageKind::ReportDelivered:
        if (w.state == S::Reporting) {
          enter(w, S::Idle);
          return Verdict::ok();
        }
        return Verdict::warning(WarningReason::OrderingViolation);

      default:
        // administrative kinds are filtered in observe()
        return Verdict::warning(WarningReason::OrderingViolation);
    }
  }

  static void enter(SessionWatch& w, SessionFsmState next) {
    w.checkpoints.push_back(w.state);
    w.state = next;
  }

  static std::string describe(const SessionWatch& w, const Message& m,
                              const Verdict& v) {
    std::string d = v.str();
    d += ": ";
    d += kind_name(m.kind);
    d += " from ";
    d += agent_name(m.from);
    d += " in state ";
    d += fsm_state_name(w.state);
    return d;
  }

  Bus& bus_;
  std::map<SessionId, SessionWatch> sessions_;
};

}  // namespace vca
