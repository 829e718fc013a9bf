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

// Deterministic message transport. One global FIFO queue; every message
// not addressed to the Watcher gets an identical tap copy enqueued for the
// Watcher immediately before the primary copy, so the Watcher sees a total
// order over all traffic. Sequence numbers are assigned by the bus at send
// time and are strictly increasing for the life of the bus.
//
// Sending is safe from multiple threads; delivery is meant to be consumed
// by a single scheduler, which also reports primary deliveries back via
// note_primary_delivery() for activation tracking.

#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vca/message.hpp"
#include "vca/types.hpp"

namespace vca {

enum class AgentStatus : std::uint8_t { Registered, Active, Terminated };

inline const char* agent_status_name(AgentStatus s) {
  switch (s) {
    case AgentStatus::Registered: return "Registered";
    case AgentStatus::Active: return "Active";
    case AgentStatus::Terminated: return "Terminated";
  }
  return "?";
}

struct RegistryEntry {
  std::string role;
  AgentStatus status = AgentStatus::Registered;
};

class Bus {
 public:
  struct Delivery {
    Message msg;
    bool tap = false;  // true when this copy is addressed to the Watcher
  };

  void register_agent(AgentId id, std::string role) {
    std::lock_guard lock(mu_);
    auto [it, inserted] =
        registry_.try_emplace(id, RegistryEntry{std::move(role)});
    (void)it;
    if (!inserted) {
      throw Error(Errc::DuplicateAgent,
                  std::string("agent already registered: ") + agent_name(id));
    }
  }

  // Enqueues the message (tap copy first) and returns the assigned
  // sequence number as the acknowledgment.
  Seq send(Message msg) {
    std::lock_guard lock(mu_);
    check_registered(msg.from);
    check_registered(msg.to);
    if (registry_.at(msg.to).status == AgentStatus::Terminated) {
      throw Error(Errc::TerminatedRecipient,
                  std::string("recipient terminated: ") + agent_name(msg.to));
    }
    msg.seq = next_seq_++;
    if (msg.to != AgentId::Watcher) {
      queue_.push_back(Delivery{msg, /*tap=*/true});
    }
    queue_.push_back(Delivery{msg, /*tap=*/false});
    return msg.seq;
  }

  Delivery deliver_next() {
    std::lock_guard lock(mu_);
    if (queue_.empty()) {
      throw Error(Errc::EmptyQueue, "no message queued");
    }
    Delivery d = std::move(queue_.front());
    queue_.pop_front();
    transcript_.push_back(d);
    return d;
  }

  bool empty() const {
    std::lock_guard lock(mu_);
    return queue_.empty();
  }

  std::size_t queue_size() const {
    std::lock_guard lock(mu_);
    return queue_.size();
  }

  AgentStatus status(AgentId id) const {
    std::lock_guard lock(mu_);
    check_registered(id);
    return registry_.at(id).status;
  }

  std::map<AgentId, RegistryEntry> registry() const {
    std::lock_guard lock(mu_);
    return registry_;
  }

  std::size_t registered_count() const {
    std::lock_guard lock(mu_);
    return registry_.size();
  }

  // Marks the agent terminated; it receives no further deliveries. Any
  // activation it held is concluded.
  void terminate_agent(AgentId id) {
    std::lock_guard lock(mu_);
    check_registered(id);
    registry_.at(id).status = AgentStatus::Terminated;
    for (auto it = activation_.begin(); it != activation_.end();) {
      if (it->second == id) {
        it = activation_.erase(it);
      } else {
        ++it;
      }
    }
  }

  // Called by the scheduler for each primary delivery it acts on. Keeps
  // the per-session activation and the registry status in step with the
  // observed traffic.
  void note_primary_delivery(const Message& m) {
    std::lock_guard lock(mu_);
    if (m.kind == MessageKind::Dispatch &&
        (m.to == AgentId::Internal || m.to == AgentId::External)) {
      activation_[m.session] = m.to;
      auto it = registry_.find(m.to);
      if (it != registry_.end() && it->second.status != AgentStatus::Terminated) {
        it->second.status = AgentStatus::Active;
      }
    } else if (m.kind == MessageKind::DiagnosisResult) {
      auto it = activation_.find(m.session);
      if (it != activation_.end() && it->second == m.from) {
        activation_.erase(it);
        auto reg = registry_.find(m.from);
        if (reg != registry_.end() &&
            reg->second.status == AgentStatus::Active) {
          reg->second.status = AgentStatus::Registered;
        }
      }
    }
  }

  // The check agent last dispatched and not yet concluded in the session.
  std::optional<AgentId> current_activation(const SessionId& session) const {
    std::lock_guard lock(mu_);
    auto it = activation_.find(session);
    if (it == activation_.end()) return std::nullopt;
    return it->second;
  }

  // Everything delivered so far, in delivery order, tap copies included.
  std::vector<Delivery> transcript() const {
    std::lock_guard lock(mu_);
    return transcript_;
  }

  // One JSON object per delivered message, in delivery order.
  std::string export_transcript_jsonl() const {
    std::lock_guard lock(mu_);
    std::ostringstream os;
    for (const Delivery& d : transcript_) {
      os << message_to_json(d.msg).dump() << '\n';
    }
    return os.str();
  }

 private:
  void check_registered(AgentId id) const {
    if (registry_.find(id) == registry_.end()) {
      throw Error(Errc::UnknownAgent,
                  std::string("agent not registered: ") + agent_name(id));
    }
  }

  mutable std::mutex mu_;
  std::deque<Delivery> queue_;
  std::map<AgentId, RegistryEntry> registry_;
  std::map<SessionId, AgentId> activation_;
  std::vector<Delivery> transcript_;
  Seq next_seq_ = 0;
};

}  // namespace vca
