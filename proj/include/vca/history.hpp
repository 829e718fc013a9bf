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

// Append-only per-vehicle check history, one JSON record per line.

#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vca/report.hpp"
#include "vca/rulebook.hpp"
#include "vca/storage.hpp"
#include "vca/types.hpp"
#include "vca/vehicle.hpp"
#include "vca/watcher.hpp"

namespace vca {

// The persisted record of one complete check session.
struct CheckSession {
  std::string session_id;
  std::string vehicle_id;
  std::int64_t timestamp = 0;  // milliseconds, from the injected clock
  Scope scope = Scope::Full;
  SnapshotSet snapshots;
  std::vector<Diagnosis> diagnoses;
  std::string report_text;
  std::vector<WatcherEvent> watcher_events;

  // A session that saw a fatal verdict was aborted and re-renders with the
  // incomplete marker.
  bool incomplete() const {
    for (const WatcherEvent& e : watcher_events) {
      if (e.verdict.kind == VerdictKind::Fatal) return true;
    }
    return false;
  }

  bool operator==(const CheckSession&) const = default;
};

inline void to_json(Json& j, const CheckSession& s) {
  j = Json{{"session_id", s.session_id},
           {"vehicle_id", s.vehicle_id},
           {"timestamp", s.timestamp},
           {"scope", scope_name(s.scope)},
           {"snapshots", s.snapshots},
           {"diagnoses", s.diagnoses},
           {"report_text", s.report_text},
           {"watcher_events", s.watcher_events}};
}

inline void from_json(const Json& j, CheckSession& s) {
  j.at("session_id").get_to(s.session_id);
  j.at("vehicle_id").get_to(s.vehicle_id);
  j.at("timestamp").get_to(s.timestamp);
  s.scope = parse_scope(j.at("scope"));
  j.at("snapshots").get_to(s.snapshots);
  j.at("diagnoses").get_to(s.diagnoses);
  j.at("report_text").get_to(s.report_text);
  j.at("watcher_events").get_to(s.watcher_events);
}

class HistoryStore {
 public:
  explicit HistoryStore(std::filesystem::path file) : path_(std::move(file)) {}

  const std::filesystem::path& path() const { return path_; }

  // Appends the session as one line and flushes before returning.
  void append_session(const CheckSession& s) {
    ensure_index();
    if (ids_->count(s.session_id) > 0) {
      throw Error(Errc::DuplicateSession,
                  "session already stored: " + s.session_id);
    }
    append_jsonl(path_, Json(s));
    ids_->insert(s.session_id);
  }

  // All sessions for the vehicle, in append order. Unknown vehicles have
  // an empty history.
  std::vector<CheckSession> load_history(const std::string& vehicle_id) const {
    std::vector<CheckSession> out;
    for (const CheckSession& s : load_all()) {
      if (s.vehicle_id == vehicle_id) out.push_back(s);
    }
    return out;
  }

  std::vector<CheckSession> load_all() const {
    std::vector<CheckSession> out;
    for (auto& [lineno, j] : read_jsonl(path_)) {
      try {
        out.push_back(j.get<CheckSession>());
      } catch (const Json::exception& e) {
        throw Error(Errc::CorruptRecord,
                    "corrupt record in " + path_.string() + " at line " +
                        std::to_string(lineno) + ": " + e.what(),
                    static_cast<long>(lineno));
      }
    }
    return out;
  }

  std::size_t size() const { return load_all().size(); }

 private:
  void ensure_index() {
    if (ids_) return;
    ids_.emplace();
    for (const CheckSession& s : load_all()) ids_->insert(s.session_id);
  }

  std::filesystem::path path_;
  std::optional<std::set<std::string>> ids_;
};

struct ReplayMismatch {
  std::string session_id;
  std::size_t index = 0;
};

// Re-renders each session's report from its stored diagnoses and compares
// byte-wise with the stored text. Returns the first mismatch, if any.
inline std::optional<ReplayMismatch> verify_replay(
    const std::vector<CheckSession>& sessions) {
  for (std::size_t i = 0; i < sessions.size(); ++i) {
    const CheckSession& s = sessions[i];
    Report r = report_render(s.diagnoses, s.vehicle_id, s.session_id,
                             s.incomplete());
    if (r.text() != s.report_text) {
      return ReplayMismatch{s.session_id, i};
    }
  }
  return std::nullopt;
}

}  // namespace vca
