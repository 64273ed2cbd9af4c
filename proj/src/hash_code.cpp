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

#include "olhash/hash_code.hpp"

#include <bit>
#include <string>

#include "olhash/error.hpp"

namespace olhash {

namespace {

constexpr std::size_t
word_count(std::size_t bits) {
    return (bits + 63) / 64;
}

}  // namespace

HashCode::HashCode(std::size_t bits) : bits_(bits), words_(word_count(bits), 0) {
}

HashCode
HashCode::from_signs(std::span<const int> signs) {
    HashCode code(signs.size());
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (signs[k] != 1 && signs[k] != -1) {
            throw InvalidArgument("hash code signs must be +1 or -1");
        }
        code.set_sign(k, signs[k]);
    }
    return code;
}

HashCode
HashCode::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits) {
    if (bytes.size() != (bits + 7) / 8) {
        throw FormatError("packed code has " + std::to_string(bytes.size()) + " bytes, expected " +
                          std::to_string((bits + 7) / 8));
    }
    HashCode code(bits);
    for (std::size_t b = 0; b < bytes.size(); ++b) {
        code.words_[b / 8] |= std::uint64_t{bytes[b]} << (8 * (b % 8));
    }
    const HashCode masked = [&] {
        HashCode c = code;
        c.clear_tail();
        return c;
    }();
    if (masked != code) {
        throw FormatError("packed code has non-zero padding bits");
    }
    return code;
}

HashCode
HashCode::negated() const {
    HashCode out = *this;
    for (auto& w : out.words_) {
        w = ~w;
    }
    out.clear_tail();
    return out;
}

std::vector<int>
HashCode::signs() const {
    std::vector<int> out(bits_);
    for (std::size_t k = 0; k < bits_; ++k) {
        out[k] = sign(k);
    }
    return out;
}

std::vector<std::uint8_t>
HashCode::to_bytes() const {
    std::vector<std::uint8_t> out((bits_ + 7) / 8);
    for (std::size_t b = 0; b < out.size(); ++b) {
        out[b] = static_cast<std::uint8_t>(words_[b / 8] >> (8 * (b % 8)));
    }
    return out;
}

void
HashCode::clear_tail() noexcept {
    const std::size_t rem = bits_ & 63;
    if (rem != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
}

std::size_t
hamming_distance(const HashCode& a, const HashCode& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("hamming_distance: code lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " differ");
    }
    const auto wa = a.words();
    const auto wb = b.words();
    std::size_t sum = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) {
        sum += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    }
    return sum;
}

}  // namespace olhash
