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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vca/storage.hpp"
#include "vca/types.hpp"

namespace vca {

struct UserProfile {
  std::string user_id;
  std::string name;
  std::vector<std::string> vehicle_ids;
  std::map<std::string, std::string> preferences;

  bool operator==(const UserProfile&) const = default;
};

inline void to_json(Json& j, const UserProfile& p) {
  j = Json{{"user_id", p.user_id},
           {"name", p.name},
           {"vehicle_ids", p.vehicle_ids},
           {"preferences", p.preferences}};
}

inline void from_json(const Json& j, UserProfile& p) {
  j.at("user_id").get_to(p.user_id);
  j.at("name").get_to(p.name);
  j.at("vehicle_ids").get_to(p.vehicle_ids);
  j.at("preferences").get_to(p.preferences);
}

// Personal profile database. Upserts append a line to profiles.jsonl; on
// load the latest record per user wins, so the file itself stays
// append-only.
class ProfileStore {
 public:
  ProfileStore() = default;

  explicit ProfileStore(std::filesystem::path path) : path_(std::move(path)) {
    for (auto& [lineno, j] : read_jsonl(*path_)) {
      (void)lineno;
      UserProfile p = j.get<UserProfile>();
      profiles_[p.user_id] = std::move(p);
    }
  }

  void upsert(const UserProfile& p) {
    profiles_[p.user_id] = p;
    if (path_) append_jsonl(*path_, Json(p));
  }

  bool contains(const std::string& user_id) const {
    return profiles_.count(user_id) > 0;
  }

  std::optional<UserProfile> get(const std::string& user_id) const {
    auto it = profiles_.find(user_id);
    if (it == profiles_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return profiles_.size(); }

 private:
  std::optional<std::filesystem::path> path_;
  std::map<std::string, UserProfile> profiles_;
};

// store_profile is the upsert operation behind the ProfileStore message.
inline void store_profile(ProfileStore& store, const UserProfile& p) {
  store.upsert(p);
}

}  // namespace vca
