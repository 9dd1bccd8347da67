/*
 * Copyright 2026 The relmem-sim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "relmem/errors.hpp"

namespace relmem {

const char* to_string(Err e) {
  switch (e) {
    case Err::ZeroDimension: return "ZeroDimension";
    case Err::ColumnOutOfRow: return "ColumnOutOfRow";
    case Err::RowTooLarge: return "RowTooLarge";
    case Err::BadBusWidth: return "BadBusWidth";
    case Err::RowIndexOutOfBounds: return "RowIndexOutOfBounds";
    case Err::BaseTooShort: return "BaseTooShort";
    case Err::ScheduleInPast: return "ScheduleInPast";
    case Err::AddressUnaligned: return "AddressUnaligned";
    case Err::OutOfBackingStore: return "OutOfBackingStore";
    case Err::BackingStoreFull: return "BackingStoreFull";
    case Err::ColumnExceedsBuffer: return "ColumnExceedsBuffer";
    case Err::ReconfigureWhilePending: return "ReconfigureWhilePending";
    case Err::AddressOutOfEphemeralRange: return "AddressOutOfEphemeralRange";
    case Err::TooManyOutstanding: return "TooManyOutstanding";
    case Err::DoubleCommit: return "DoubleCommit";
    case Err::EngineNotConfigured: return "EngineNotConfigured";
    case Err::BadEngineConfig: return "BadEngineConfig";
    case Err::StraddlingAccess: return "StraddlingAccess";
    case Err::NonContiguousFields: return "NonContiguousFields";
    case Err::UnknownField: return "UnknownField";
    case Err::IndexOutOfBounds: return "IndexOutOfBounds";
    case Err::FieldMissing: return "FieldMissing";
    case Err::ConfigError: return "ConfigError";
    case Err::MissingBaseline: return "MissingBaseline";
    case Err::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownErr";
}

SimError::SimError(Err code, const std::string& msg)
    : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

void raise(Err code, const std::string& msg) { throw SimError(code, msg); }

}  // namespace relmem
