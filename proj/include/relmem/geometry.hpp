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
#include <span>
#include <vector>

#include "relmem/errors.hpp"

namespace relmem {

/// Geometry of one row-major table as seen by the reorganization engine:
/// row size R, row count N, width C of the contiguous column group of
/// interest, and its byte offset O from the start of each row.
///
/// All addresses produced from a TableGeometry are table-relative
/// (byte 0 = first byte of the table). Mapping onto simulated DRAM
/// addresses is the memory model's concern.
struct TableGeometry {
  std::uint64_t row_size = 0;       // R, bytes per row
  std::uint64_t row_count = 0;      // N, rows in the table
  std::uint64_t column_width = 0;   // C, bytes of the projected column group
  std::uint64_t column_offset = 0;  // O, byte offset of the group in the row

  std::uint64_t table_bytes() const { return row_size * row_count; }
  std::uint64_t packed_bytes() const { return column_width * row_count; }

  bool operator==(const TableGeometry&) const = default;
};

/// Width of one bus beat in bytes. Burst reads move data in units of this.
struct BusConfig {
  std::uint64_t bus_width = 16;

  bool operator==(const BusConfig&) const = default;
};

/// One per-row gather order for the fetch pipeline: where to read
/// (bus-aligned), how many beats, where the packed chunk lands in the
/// reorganization buffer, and how many bytes of the first beat are
/// noise before the useful window starts.
///
/// end_offset stores (P_i + C) mod B_w verbatim; the number of trailing
/// bytes to discard in the last beat is derived from it at the
/// extraction site via trailing_discard().
struct RequestDescriptor {
  std::uint64_t row_index = 0;   // i
  std::uint64_t read_addr = 0;   // bus-aligned source address
  std::uint64_t burst_len = 0;   // beats to transfer
  std::uint64_t write_addr = 0;  // destination offset in the packed buffer
  std::uint32_t lead_trim = 0;   // leading bytes of beat 0 to drop
  std::uint32_t end_offset = 0;  // (P_i + C) mod B_w

  std::uint64_t trailing_discard(const BusConfig& bus) const {
    return (bus.bus_width - end_offset) % bus.bus_width;
  }

  bool operator==(const RequestDescriptor&) const = default;
};

/// Largest row size accepted by default. The engine's math has no inherent
/// cap; this guards against misconfigured plans.
inline constexpr std::uint64_t kDefaultMaxRowSize = 4096;

/// Checks all TableGeometry invariants and the bus width, returning the
/// geometry unchanged. Throws ZeroDimension, ColumnOutOfRow, RowTooLarge
/// or BadBusWidth.
TableGeometry validate_geometry(const TableGeometry& g, const BusConfig& bus,
                                std::uint64_t max_row_size = kDefaultMaxRowSize);

/// P_i — absolute byte position where the useful data of row i starts.
std::uint64_t useful_position(const TableGeometry& g, std::uint64_t row);

/// Builds the descriptor for row i. Precondition: geometry validated.
RequestDescriptor make_descriptor(const TableGeometry& g, const BusConfig& bus,
                                  std::uint64_t row);

/// Descriptors for rows 0..N-1 in ascending order.
std::vector<RequestDescriptor> descriptor_stream(const TableGeometry& g,
                                                 const BusConfig& bus);

/// Ground-truth gather: concatenation over i of base[R*i+O .. R*i+O+C).
/// Brute-force byte scan, independent of the descriptor math; every other
/// reorganization path in the simulator is checked against this.
std::vector<std::uint8_t> oracle_gather(const TableGeometry& g,
                                        std::span<const std::uint8_t> base);

}  // namespace relmem
