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

// JSONL file helpers: one JSON object per line, UTF-8, LF-terminated,
// append-only.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "vca/types.hpp"

namespace vca {

// Appends one record as a single line and flushes before returning.
inline void append_jsonl(const std::filesystem::path& path, const Json& record) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) {
    throw Error(Errc::StorageFailure, "cannot open " + path.string());
  }
  out << record.dump() << '\n';
  out.flush();
  if (!out) {
    throw Error(Errc::StorageFailure, "write failed on " + path.string());
  }
}

// Reads every record with its 1-based line number. A missing file is an
// empty store. An unparseable line raises CorruptRecord carrying the line
// number.
inline std::vector<std::pair<std::size_t, Json>> read_jsonl(
    const std::filesystem::path& path) {
  std::vector<std::pair<std::size_t, Json>> records;
  std::ifstream in(path, std::ios::binary);
  if (!in) return records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw Error(Errc::CorruptRecord,
                  "corrupt record in " + path.string() + " at line " +
                      std::to_string(lineno),
                  static_cast<long>(lineno));
    }
    records.emplace_back(lineno, std::move(j));
  }
  return records;
}

}  // namespace vca
