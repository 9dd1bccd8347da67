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
#include <string>
#include <vector>

#include "relmem/geometry.hpp"

namespace relmem::selfcheck {

/// Trivial reference interpreter for a descriptor stream: fetch the burst
/// beats, drop lead_trim bytes, keep column_width bytes, place them at
/// write_addr. Exists only to cross-check descriptor math against
/// oracle_gather; the engine does not share this code path.
std::vector<std::uint8_t> replay_descriptor_stream(const TableGeometry& g,
                                                   const BusConfig& bus,
                                                   std::span<const std::uint8_t> base);

struct CheckReport {
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Replays descriptor_stream over a pseudo-random byte table and compares
/// against oracle_gather for every geometry in the given grid.
CheckReport check_replay_grid(const std::vector<std::uint64_t>& row_sizes,
                              const std::vector<std::uint64_t>& column_widths,
                              const std::vector<std::uint64_t>& row_counts,
                              std::uint64_t bus_width = 16);

/// Reorganizes pseudo-random tables through the full engine simulation for
/// each variant and compares the final buffer contents with oracle_gather.
CheckReport check_engine_matches_oracle(std::uint64_t trials, std::uint64_t seed);

/// Runs every benchmark query over every path/mode/variant combination for
/// the given seeds and verifies all answers agree with the reference
/// evaluator.
CheckReport check_answer_invariance(const std::vector<std::uint64_t>& seeds,
                                    std::uint64_t row_count);

}  // namespace relmem::selfcheck
