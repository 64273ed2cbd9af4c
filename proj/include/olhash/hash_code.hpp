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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace olhash {

/// Fixed-length code of signs in {-1,+1}, packed one bit per sign (1 <-> +1, 0 <-> -1) into
/// 64-bit words. Bits past size() in the last word are always zero.
class HashCode {
 public:
    HashCode() = default;

    /// All bits -1.
    explicit HashCode(std::size_t bits);

    static HashCode
    from_signs(std::span<const int> signs);

    /// Bit k is taken from byte k/8, position k%8 (LSB first). Padding bits must be zero.
    static HashCode
    from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits);

    std::size_t
    size() const noexcept {
        return bits_;
    }

    /// +1 or -1.
    int
    sign(std::size_t k) const noexcept {
        return ((words_[k >> 6] >> (k & 63)) & 1u) ? 1 : -1;
    }

    bool
    bit(std::size_t k) const noexcept {
        return (words_[k >> 6] >> (k & 63)) & 1u;
    }

    void
    set_sign(std::size_t k, int sign) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (k & 63);
        if (sign >= 0) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }

    void
    flip(std::size_t k) noexcept {
        words_[k >> 6] ^= std::uint64_t{1} << (k & 63);
    }

    HashCode
    negated() const;

    std::vector<int>
    signs() const;

    /// ceil(size()/8) bytes in the on-disk bit order.
    std::vector<std::uint8_t>
    to_bytes() const;

    std::span<const std::uint64_t>
    words() const noexcept {
        return words_;
    }

    friend bool
    operator==(const HashCode&, const HashCode&) = default;

 private:
    void
    clear_tail() noexcept;

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Number of positions where the codes differ; XOR + popcount over words.
std::size_t
hamming_distance(const HashCode& a, const HashCode& b);

}  // namespace olhash
