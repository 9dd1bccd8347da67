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
#include <deque>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "relmem/errors.hpp"

namespace relmem {

/// All simulated time is integer picoseconds on one global timeline.
using TimePs = std::uint64_t;

/// Timing knobs for the memory/interconnect model. Every value is
/// overridable from the experiment config file; none comes from measured
/// hardware, so results built on them are meaningful as orderings and
/// trends, not absolutes.
struct TimingParams {
  TimePs dram_first_beat = 40000;  // request issue -> first beat
  TimePs dram_per_beat = 5000;     // each additional beat in a burst
  TimePs cdc_penalty = 10000;      // per traversal into/out of the engine clock domain
  std::uint32_t max_outstanding = 16;  // in-flight requests a memory port accepts
  TimePs pl_cycle = 10000;             // engine clock period (100 MHz)
  TimePs ps_cycle = 667;               // CPU clock period (~1.5 GHz)

  void validate() const;
};

/// Deterministic discrete-event kernel. Single-threaded by contract: one
/// kernel instance is driven by one thread. Ties at equal timestamps fire
/// in insertion order.
class EventKernel {
 public:
  using Action = std::function<void()>;

  TimePs now() const { return now_; }

  /// Queues `fn` to fire exactly once when the clock reaches `at`.
  /// Throws ScheduleInPast if `at` precedes the current time.
  void schedule(TimePs at, Action fn);
  void schedule_in(TimePs delay, Action fn) { schedule(now_ + delay, std::move(fn)); }

  /// Processes every event with timestamp <= t, then sets the clock to t.
  void advance_to(TimePs t);

  /// Processes events until `done()` returns true. Throws
  /// InvariantViolation if the queue drains first (a lost completion).
  void run_until(const std::function<bool()>& done);

  /// Drains the queue; returns the final clock value.
  TimePs run_until_idle();

  bool idle() const { return queue_.empty(); }
  std::uint64_t events_processed() const { return processed_; }

 private:
  struct Entry {
    TimePs at;
    std::uint64_t seq;
    Action fn;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  void pop_and_run();

  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  TimePs now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t processed_ = 0;
};

/// A read request as it appears at a memory port: bus-aligned address and
/// a beat count.
struct MemoryRequest {
  std::uint64_t req_id = 0;
  std::uint64_t addr = 0;
  std::uint64_t burst_len = 1;
};

/// One bus-width slice of a response. Beats of a request arrive in
/// ascending beat_index order.
struct MemoryResponseBeat {
  std::uint64_t req_id = 0;
  std::uint64_t beat_index = 0;
  std::span<const std::uint8_t> payload;  // bus_width bytes, valid during callback
  TimePs arrival = 0;
};

class MainMemory;

/// One request queue into main memory. The CPU-side route and the engine's
/// route own separate ports over the same backing store, mirroring a
/// controller with independent channels per initiator.
///
/// A request occupies a slot from issue until its last beat is delivered;
/// at most `max_outstanding` occupy slots at once, the rest wait in FIFO
/// order. Beat k of a request issued at time t arrives at
/// t + dram_first_beat + k * dram_per_beat.
class MemoryPort {
 public:
  using BeatHandler = std::function<void(const MemoryResponseBeat&)>;

  MemoryPort(EventKernel& kernel, MainMemory& memory, std::string name);

  /// Submits a read. `on_beat` fires once per beat, in order. Throws
  /// AddressUnaligned / OutOfBackingStore before accepting.
  void submit(const MemoryRequest& req, BeatHandler on_beat);

  std::uint64_t bytes_delivered() const { return bytes_delivered_; }
  std::uint64_t requests_issued() const { return requests_issued_; }
  std::uint64_t beats_delivered() const { return beats_delivered_; }
  std::uint32_t in_flight() const { return in_flight_; }
  const std::string& name() const { return name_; }

 private:
  struct Pending {
    MemoryRequest req;
    BeatHandler on_beat;
  };

  void issue(Pending p);
  void deliver_beat(const MemoryRequest& req, std::uint64_t beat,
                    const BeatHandler& on_beat, std::uint64_t* beats_left);

  EventKernel& kernel_;
  MainMemory& memory_;
  std::string name_;
  std::deque<Pending> wait_queue_;
  std::uint32_t in_flight_ = 0;
  std::uint64_t bytes_delivered_ = 0;
  std::uint64_t requests_issued_ = 0;
  std::uint64_t beats_delivered_ = 0;
};

/// Byte-addressable backing store plus the shared timing parameters.
/// Reads and writes via store_read/store_write are untimed host-side
/// operations (table loading, result checking); timed traffic goes
/// through a MemoryPort.
class MainMemory {
 public:
  MainMemory(EventKernel& kernel, TimingParams timing, std::uint64_t bus_width,
             std::uint64_t capacity);

  const TimingParams& timing() const { return timing_; }
  std::uint64_t bus_width() const { return bus_width_; }
  std::uint64_t capacity() const { return store_.size(); }
  EventKernel& kernel() { return kernel_; }

  void store_write(std::uint64_t addr, std::span<const std::uint8_t> bytes);
  std::vector<std::uint8_t> store_read(std::uint64_t addr, std::uint64_t len) const;
  std::span<const std::uint8_t> store_view(std::uint64_t addr, std::uint64_t len) const;

  /// Bump allocation for tables and materialized regions.
  /// Throws BackingStoreFull.
  std::uint64_t alloc(std::uint64_t len, std::uint64_t align = 64);

 private:
  friend class MemoryPort;

  EventKernel& kernel_;
  TimingParams timing_;
  std::uint64_t bus_width_;
  std::vector<std::uint8_t> store_;
  std::uint64_t alloc_cursor_ = 0;
};

}  // namespace relmem
