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

#include "relmem/geometry.hpp"

#include <bit>
#include <string>

namespace relmem {

TableGeometry validate_geometry(const TableGeometry& g, const BusConfig& bus,
                                std::uint64_t max_row_size) {
  if (bus.bus_width == 0 || !std::has_single_bit(bus.bus_width)) {
    raise(Err::BadBusWidth, "bus_width must be a power of two >= 1, got " +
                                std::to_string(bus.bus_width));
  }
  if (g.row_size == 0 || g.row_count == 0 || g.column_width == 0) {
    raise(Err::ZeroDimension, "row_size, row_count and column_width must all be >= 1");
  }
  if (g.row_size > max_row_size) {
    raise(Err::RowTooLarge, "row_size " + std::to_string(g.row_size) +
                                " exceeds limit " + std::to_string(max_row_size));
  }
  if (g.column_offset + g.column_width > g.row_size) {
    raise(Err::ColumnOutOfRow,
          "column group [" + std::to_string(g.column_offset) + ", " +
              std::to_string(g.column_offset + g.column_width) + ") exceeds row size " +
              std::to_string(g.row_size));
  }
  return g;
}

std::uint64_t useful_position(const TableGeometry& g, std::uint64_t row) {
  if (row >= g.row_count) {
    raise(Err::RowIndexOutOfBounds,
          "row " + std::to_string(row) + " >= row_count " + std::to_string(g.row_count));
  }
  return g.row_size * row + g.column_offset;
}

RequestDescriptor make_descriptor(const TableGeometry& g, const BusConfig& bus,
                                  std::uint64_t row) {
  const std::uint64_t bw = bus.bus_width;
  const std::uint64_t pos = useful_position(g, row);
  RequestDescriptor d;
  d.row_index = row;
  d.read_addr = (pos / bw) * bw;
  d.burst_len = (pos % bw + g.column_width + bw - 1) / bw;
  d.write_addr = g.column_width * row;
  d.lead_trim = static_cast<std::uint32_t>(pos % bw);
  d.end_offset = static_cast<std::uint32_t>((pos + g.column_width) % bw);
  return d;
}

std::vector<RequestDescriptor> descriptor_stream(const TableGeometry& g,
                                                 const BusConfig& bus) {
  std::vector<RequestDescriptor> out;
  out.reserve(g.row_count);
  for (std::uint64_t i = 0; i < g.row_count; ++i) {
    out.push_back(make_descriptor(g, bus, i));
  }
  return out;
}

std::vector<std::uint8_t> oracle_gather(const TableGeometry& g,
                                        std::span<const std::uint8_t> base) {
  if (base.size() < g.table_bytes()) {
    raise(Err::BaseTooShort, "need " + std::to_string(g.table_bytes()) + " bytes, got " +
                                 std::to_string(base.size()));
  }
  std::vector<std::uint8_t> out;
  out.reserve(g.packed_bytes());
  for (std::uint64_t i = 0; i < g.row_count; ++i) {
    const std::uint64_t start = g.row_size * i + g.column_offset;
    for (std::uint64_t b = 0; b < g.column_width; ++b) {
      out.push_back(base[start + b]);
    }
  }
  return out;
}

}  // namespace relmem
