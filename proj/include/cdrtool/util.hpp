/*
 * Copyright 2026 The cdrtool Authors.
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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cdrtool {

// Shortest round-trip decimal representation (std::to_chars general form).
std::string format_double(double v);

// Fixed-point representation with `precision` fractional digits.
std::string format_fixed(double v, int precision);

// Reads a whole file into `out`. Returns false if the file cannot be opened.
bool read_file(const std::string& path, std::string& out);

// Writes via a temporary file in the same directory and renames it over the
// target, removing the temporary on failure. Throws Error on I/O failure.
void write_file_atomic(const std::string& path, std::string_view content);

// SplitMix64 step; used for deterministic seed derivation.
uint64_t splitmix64(uint64_t state);

// Stable 64-bit hash of a string (FNV-1a), for seed stream derivation.
uint64_t fnv1a64(std::string_view s);

// Runs fn(begin, end) over [0, n) split into `threads` contiguous chunks.
// With threads <= 1 the call is a plain loop on the caller's thread. Chunk
// boundaries depend only on n and threads, never on scheduling.
void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

// Heterogeneous string hashing for unordered_map<std::string, T> lookups
// by string_view without temporary allocations.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

}  // namespace cdrtool
