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

#include <stdexcept>
#include <string>

namespace vca {

enum class Errc {
  DuplicateAgent,
  UnknownAgent,
  TerminatedRecipient,
  EmptyQueue,
  UnknownSession,
  NothingToRecover,
  SensorFailure,
  DuplicateSession,
  CorruptRecord,
  StorageFailure,
  UnknownVehicle,
  DuplicateVehicle,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateAgent: return "DuplicateAgent";
    case Errc::UnknownAgent: return "UnknownAgent";
    case Errc::TerminatedRecipient: return "TerminatedRecipient";
    case Errc::EmptyQueue: return "EmptyQueue";
    case Errc::UnknownSession: return "UnknownSession";
    case Errc::NothingToRecover: return "NothingToRecover";
    case Errc::SensorFailure: return "SensorFailure";
    case Errc::DuplicateSession: return "DuplicateSession";
    case Errc::CorruptRecord: return "CorruptRecord";
    case Errc::StorageFailure: return "StorageFailure";
    case Errc::UnknownVehicle: return "UnknownVehicle";
    case Errc::DuplicateVehicle: return "DuplicateVehicle";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

// Library-wide exception. `detail` carries a context value where one is
// meaningful (the 1-based line number for CorruptRecord).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, long detail = -1)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long detail_;
};

}  // namespace vca
