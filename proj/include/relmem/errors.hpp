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

#pragma once

#include <stdexcept>
#include <string>

namespace relmem {

/// Failure taxonomy shared by all modules. Each value names one contract
/// violation surfaced to callers. InvariantViolation marks a bug in the
/// simulator itself, not a caller mistake.
enum class Err {
  // geometry
  ZeroDimension,
  ColumnOutOfRow,
  RowTooLarge,
  BadBusWidth,
  RowIndexOutOfBounds,
  BaseTooShort,
  // memsim
  ScheduleInPast,
  AddressUnaligned,
  OutOfBackingStore,
  BackingStoreFull,
  // engine
  ColumnExceedsBuffer,
  ReconfigureWhilePending,
  AddressOutOfEphemeralRange,
  TooManyOutstanding,
  DoubleCommit,
  EngineNotConfigured,
  BadEngineConfig,
  // cache
  StraddlingAccess,
  // tables
  NonContiguousFields,
  UnknownField,
  IndexOutOfBounds,
  // bench
  FieldMissing,
  // cli
  ConfigError,
  MissingBaseline,
  // internal bookkeeping bugs
  InvariantViolation,
};

const char* to_string(Err e);

class SimError : public std::runtime_error {
 public:
  SimError(Err code, const std::string& msg);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void raise(Err code, const std::string& msg);

}  // namespace relmem
