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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relmem/geometry.hpp"
#include "relmem/memsim.hpp"

namespace relmem {

/// Engine revisions. BSL writes every extracted chunk to the data
/// scratch-pad individually and keeps a single memory read in flight.
/// PCK batches chunks in a packer register and writes once per full
/// register. MLP additionally keeps up to 16 independent memory reads
/// outstanding.
enum class EngineVariant { BSL, PCK, MLP };

const char* to_string(EngineVariant v);
std::optional<EngineVariant> parse_variant(const std::string& s);

inline constexpr std::uint32_t kMlpMaxOutstanding = 16;

struct EngineConfig {
  TableGeometry geometry;
  std::uint64_t table_base = 0;  // byte address of the row-major table
  EngineVariant variant = EngineVariant::BSL;
  std::uint32_t fetch_unit_count = 1;
  std::uint64_t reorg_capacity = 2ull * 1024 * 1024;
  std::uint64_t cache_line = 64;
  std::uint32_t max_cpu_outstanding = 16;
};

/// CPU-originated read trapped at the engine boundary: {A, ID}.
struct CpuReadTransaction {
  std::uint64_t addr = 0;  // ephemeral-region address, cache-line aligned
  std::uint64_t txn_id = 0;
  TimePs issue_time = 0;
};

/// The matching {ID, RD} reply. Payload is one full cache line.
struct CpuReadResponse {
  std::uint64_t txn_id = 0;
  std::vector<std::uint8_t> payload;
  TimePs completion_time = 0;
};

struct EngineStats {
  std::uint64_t transactions_accepted = 0;
  std::uint64_t responses_sent = 0;
  std::uint64_t buffer_hits = 0;
  std::uint64_t buffer_misses = 0;
  std::uint64_t descriptors_dispatched = 0;
  std::uint64_t spm_writes = 0;       // data scratch-pad write requests
  std::uint64_t bytes_committed = 0;  // packed bytes placed in the buffer
  std::uint32_t peak_unit_outstanding = 0;
  std::uint32_t peak_cpu_pending = 0;
};

/// Transaction-level model of the reorganization engine.
///
/// The pieces map onto the hardware roles: cpu_read() is the Trapper
/// boundary; completion bookkeeping and response release live in
/// commit_window() (the Monitor Bypass duties); descriptor generation and
/// dispatch pacing form the Requestor; each FetchUnit runs the
/// Reader -> Column Extractor -> Writer pipeline for one descriptor.
///
/// Driven exclusively by the single-threaded event kernel. Distinct engine
/// instances (each with their own kernel) are independent.
class RmeEngine {
 public:
  using ResponseHandler = std::function<void(const CpuReadResponse&)>;

  RmeEngine(EventKernel& kernel, MemoryPort& port, const TimingParams& timing,
            BusConfig bus);

  /// Geometry register map, offsets relative to the engine's config base:
  /// 0x00 row size, 0x04 row count, 0x08 column width, 0x0c row offset.
  void write_config_register(std::uint32_t offset, std::uint64_t value);
  TableGeometry staged_geometry() const { return staged_; }

  /// Applies a full configuration. The engine becomes IDLE-CONFIGURED with
  /// a cold (all-incomplete) buffer; the descriptor stream starts on the
  /// first trapped access.
  void configure(const EngineConfig& cfg);

  /// Clears completion metadata and zeroes the data scratch-pad, modeling
  /// a buffer re-initialization before a cold run.
  void reset_cold();

  /// Trapper entry point. The response handler fires exactly once, via the
  /// event kernel. Throws EngineNotConfigured, AddressUnaligned,
  /// AddressOutOfEphemeralRange or TooManyOutstanding synchronously.
  void cpu_read(const CpuReadTransaction& txn, ResponseHandler on_response);

  /// Runs the whole descriptor stream to completion (hot-buffer setup).
  /// Must be called with no CPU transactions pending.
  void prefill();

  /// Monitor Bypass commit entry: places packed bytes at write_addr, marks
  /// per-line arrival bits and releases any stalled transactions whose
  /// line just completed. Fetch units call this; tests may too. Throws
  /// DoubleCommit if any byte of the window was already committed.
  void commit_window(std::uint64_t write_addr, std::span<const std::uint8_t> bytes);

  bool configured() const { return configured_; }
  const EngineConfig& config() const { return cfg_; }
  std::uint64_t region_bytes() const { return region_bytes_; }
  std::uint64_t region_lines() const { return line_count_; }
  std::uint32_t cpu_pending() const { return pending_count_; }
  bool stream_done() const { return configured_ && next_row_ == cfg_.geometry.row_count; }

  bool line_complete(std::uint64_t line) const;
  std::uint64_t line_missing_bytes(std::uint64_t line) const;
  /// Descriptor write windows intersecting the given buffer line.
  std::uint64_t expected_chunks(std::uint64_t line) const;

  std::span<const std::uint8_t> spm_contents() const;
  /// Fault-injection hook for verification harnesses.
  void poke_spm(std::uint64_t offset, std::uint8_t value);

  const EngineStats& stats() const { return stats_; }

 private:
  struct FetchUnit {
    std::uint32_t id = 0;
    bool busy = false;           // BSL/PCK: descriptor in progress
    std::uint32_t outstanding = 0;  // MLP: in-flight memory reads
    std::vector<std::uint8_t> packer;  // PCK/MLP packer register contents
    std::uint64_t packer_start = 0;    // write_addr of packer byte 0
    std::uint64_t rows_in_packer = 0;
  };

  bool unit_ready(const FetchUnit& u) const;
  void activate();
  void pump_requestor();
  void assign_descriptor(FetchUnit& u, std::uint64_t row);
  void on_burst_complete(FetchUnit& u, const RequestDescriptor& d,
                         std::span<const std::uint8_t> burst);
  void packer_append(FetchUnit& u, std::uint64_t write_addr,
                     std::span<const std::uint8_t> bytes);
  void flush_packer(FetchUnit& u);
  void maybe_tail_flush(FetchUnit& u);
  void on_unit_ready();
  void release_line(std::uint64_t line);
  void deliver(std::uint64_t txn_id, std::uint64_t line, const ResponseHandler& handler);
  void check_transaction(std::uint64_t txn_id, std::uint64_t line,
                         const ResponseHandler& handler);

  std::uint64_t line_of(std::uint64_t addr) const { return addr / cfg_.cache_line; }

  EventKernel& kernel_;
  MemoryPort& port_;
  TimingParams timing_;
  BusConfig bus_;

  TableGeometry staged_{};
  EngineConfig cfg_{};
  bool configured_ = false;

  // Reorganization buffer: data scratch-pad plus per-line completion
  // metadata (a bit per byte, blocked into 64-bit words).
  std::vector<std::uint8_t> data_spm_;
  std::vector<std::uint64_t> arrived_bits_;
  std::vector<std::uint32_t> missing_bytes_;
  std::uint64_t region_bytes_ = 0;
  std::uint64_t line_count_ = 0;
  std::uint64_t blocks_per_line_ = 0;

  // Trapper state
  struct StalledTxn {
    std::uint64_t txn_id;
    ResponseHandler handler;
  };
  std::vector<std::vector<StalledTxn>> stalled_;
  std::uint32_t pending_count_ = 0;

  // Requestor state
  bool active_ = false;
  std::uint64_t next_row_ = 0;
  TimePs last_dispatch_ = 0;
  bool dispatched_any_ = false;
  bool pump_scheduled_ = false;

  std::vector<FetchUnit> units_;
  std::uint64_t next_req_id_ = 1;
  EngineStats stats_;
};

}  // namespace relmem
