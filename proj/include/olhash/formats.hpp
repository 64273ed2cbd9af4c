// Copyright 2026 The olhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "olhash/dataset.hpp"
#include "olhash/retrieval.hpp"
#include "olhash/snapshot.hpp"

namespace olhash::io {

// All formats are little-endian.
//
// Dataset "OHDS": magic[4] version:u16 n:u64 d:u32 label_flag:u8 | n*d f32 row-major | n u32 labels
// Model   "OHMD": magic[4] version:u16 d:u32 r:u32 T:u16 kernel_flag:u8 [m:u32] | mean f64 (m or d)
//                 | anchors m*d f64 (anchor by anchor) | T matrices (feature_dim x r) f64 column-major
//                 | crc32:u32 over every preceding byte
// Codes   "OHCB": magic[4] version:u16 n:u64 r:u32 T:u16 | n*T codes of ceil(r/8) bytes, item-major

inline constexpr std::uint16_t kFormatVersion = 1;
inline constexpr std::size_t kDatasetHeaderBytes = 19;
inline constexpr std::size_t kCodesHeaderBytes = 20;

std::vector<std::uint8_t>
encode_dataset(const Dataset& data);

Dataset
decode_dataset(std::span<const std::uint8_t> bytes);

/// Kernel bandwidth is not part of the format; snapshots with sigma != 1 are rejected.
std::vector<std::uint8_t>
encode_model(const ModelSnapshot& snapshot);

ModelSnapshot
decode_model(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t>
encode_codes(const CodeTable& table);

CodeTable
decode_codes(std::span<const std::uint8_t> bytes);

std::uint32_t
crc32(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t>
read_file(const std::filesystem::path& path);

void
write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

inline Dataset
read_dataset(const std::filesystem::path& path) {
    return decode_dataset(read_file(path));
}

inline void
write_dataset(const std::filesystem::path& path, const Dataset& data) {
    write_file(path, encode_dataset(data));
}

inline ModelSnapshot
load_model(const std::filesystem::path& path) {
    return decode_model(read_file(path));
}

inline void
save_model(const std::filesystem::path& path, const ModelSnapshot& snapshot) {
    write_file(path, encode_model(snapshot));
}

inline CodeTable
read_codes(const std::filesystem::path& path) {
    return decode_codes(read_file(path));
}

inline void
write_codes(const std::filesystem::path& path, const CodeTable& table) {
    write_file(path, encode_codes(table));
}

}  // namespace olhash::io
