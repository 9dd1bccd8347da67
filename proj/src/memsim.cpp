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

#include "relmem/memsim.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <string>
#include <utility>

namespace relmem {

void TimingParams::validate() const {
  if (dram_first_beat == 0 || dram_per_beat == 0 || cdc_penalty == 0 || pl_cycle == 0 ||
      ps_cycle == 0 || max_outstanding == 0) {
    raise(Err::ConfigError, "all timing parameters must be >= 1");
  }
}

void EventKernel::schedule(TimePs at, Action fn) {
  if (at < now_) {
    raise(Err::ScheduleInPast, "schedule at " + std::to_string(at) + " < now " +
                                   std::to_string(now_));
  }
  queue_.push(Entry{at, next_seq_++, std::move(fn)});
}

void EventKernel::pop_and_run() {
  // Entry::fn is move-only in spirit; priority_queue::top is const, so the
  // action is recovered with a const_cast before pop. The entry is removed
  // before the action runs so the action may schedule freely.
  Action fn = std::move(const_cast<Entry&>(queue_.top()).fn);
  now_ = queue_.top().at;
  queue_.pop();
  ++processed_;
  fn();
}

void EventKernel::advance_to(TimePs t) {
  while (!queue_.empty() && queue_.top().at <= t) {
    pop_and_run();
  }
  now_ = std::max(now_, t);
}

void EventKernel::run_until(const std::function<bool()>& done) {
  while (!done()) {
    if (queue_.empty()) {
      raise(Err::InvariantViolation,
            "event queue drained while waiting for a completion");
    }
    pop_and_run();
  }
}

TimePs EventKernel::run_until_idle() {
  while (!queue_.empty()) {
    pop_and_run();
  }
  return now_;
}

MainMemory::MainMemory(EventKernel& kernel, TimingParams timing, std::uint64_t bus_width,
                       std::uint64_t capacity)
    : kernel_(kernel), timing_(timing), bus_width_(bus_width), store_(capacity, 0) {
  timing_.validate();
  if (bus_width_ == 0 || !std::has_single_bit(bus_width_)) {
    raise(Err::BadBusWidth, "bus_width must be a power of two >= 1");
  }
}

void MainMemory::store_write(std::uint64_t addr, std::span<const std::uint8_t> bytes) {
  if (addr + bytes.size() > store_.size()) {
    raise(Err::OutOfBackingStore, "write [" + std::to_string(addr) + ", " +
                                      std::to_string(addr + bytes.size()) + ") exceeds " +
                                      std::to_string(store_.size()));
  }
  std::copy(bytes.begin(), bytes.end(), store_.begin() + static_cast<std::ptrdiff_t>(addr));
}

std::vector<std::uint8_t> MainMemory::store_read(std::uint64_t addr,
                                                 std::uint64_t len) const {
  auto view = store_view(addr, len);
  return {view.begin(), view.end()};
}

std::span<const std::uint8_t> MainMemory::store_view(std::uint64_t addr,
                                                     std::uint64_t len) const {
  if (addr + len > store_.size()) {
    raise(Err::OutOfBackingStore, "read [" + std::to_string(addr) + ", " +
                                      std::to_string(addr + len) + ") exceeds " +
                                      std::to_string(store_.size()));
  }
  return std::span<const std::uint8_t>(store_).subspan(addr, len);
}

std::uint64_t MainMemory::alloc(std::uint64_t len, std::uint64_t align) {
  std::uint64_t base = (alloc_cursor_ + align - 1) / align * align;
  // Bursts are bus-width granular, so reserve up to the next beat boundary;
  // a fetch of the table's last row may legally over-read into the pad.
  std::uint64_t reserved = (len + bus_width_ - 1) / bus_width_ * bus_width_;
  if (base + reserved > store_.size()) {
    raise(Err::BackingStoreFull, "alloc of " + std::to_string(len) + " bytes at " +
                                     std::to_string(base) + " exceeds store");
  }
  alloc_cursor_ = base + reserved;
  return base;
}

MemoryPort::MemoryPort(EventKernel& kernel, MainMemory& memory, std::string name)
    : kernel_(kernel), memory_(memory), name_(std::move(name)) {}

void MemoryPort::submit(const MemoryRequest& req, BeatHandler on_beat) {
  if (req.burst_len == 0) {
    raise(Err::InvariantViolation, "burst_len must be >= 1");
  }
  if (req.addr % memory_.bus_width() != 0) {
    raise(Err::AddressUnaligned, "addr " + std::to_string(req.addr) +
                                     " not aligned to bus width " +
                                     std::to_string(memory_.bus_width()));
  }
  if (req.addr + req.burst_len * memory_.bus_width() > memory_.capacity()) {
    raise(Err::OutOfBackingStore, "burst past end of backing store");
  }
  if (in_flight_ < memory_.timing().max_outstanding) {
    issue(Pending{req, std::move(on_beat)});
  } else {
    wait_queue_.push_back(Pending{req, std::move(on_beat)});
  }
}

void MemoryPort::issue(Pending p) {
  ++in_flight_;
  ++requests_issued_;
  if (in_flight_ > memory_.timing().max_outstanding) {
    raise(Err::InvariantViolation, "port " + name_ + " exceeded max_outstanding");
  }
  const TimePs issue_time = kernel_.now();
  const std::uint64_t bw = memory_.bus_width();
  const auto timing = memory_.timing();
  // Per-request beat accounting guards against lost or duplicated beats.
  auto beats_left = std::make_shared<std::uint64_t>(p.req.burst_len);
  auto handler = std::make_shared<BeatHandler>(std::move(p.on_beat));
  const MemoryRequest req = p.req;
  for (std::uint64_t k = 0; k < req.burst_len; ++k) {
    const TimePs arrival = issue_time + timing.dram_first_beat + k * timing.dram_per_beat;
    kernel_.schedule(arrival, [this, req, k, bw, handler, beats_left] {
      if (*beats_left == 0) {
        raise(Err::InvariantViolation, "beat delivered after request completion");
      }
      MemoryResponseBeat beat;
      beat.req_id = req.req_id;
      beat.beat_index = k;
      beat.payload = memory_.store_view(req.addr + k * bw, bw);
      beat.arrival = kernel_.now();
      ++beats_delivered_;
      bytes_delivered_ += bw;
      --*beats_left;
      const bool last = (*beats_left == 0);
      (*handler)(beat);
      if (last) {
        --in_flight_;
        if (!wait_queue_.empty()) {
          Pending next = std::move(wait_queue_.front());
          wait_queue_.pop_front();
          issue(std::move(next));
        }
      }
    });
  }
}

}  // namespace relmem
