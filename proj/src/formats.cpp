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

#include "olhash/formats.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>

#include <zlib.h>

#include "olhash/error.hpp"

namespace olhash::io {

namespace {

constexpr char kDatasetMagic[4] = {'O', 'H', 'D', 'S'};
constexpr char kModelMagic[4] = {'O', 'H', 'M', 'D'};
constexpr char kCodesMagic[4] = {'O', 'H', 'C', 'B'};

class Writer {
 public:
    void
    magic(const char (&m)[4]) {
        bytes_.insert(bytes_.end(), m, m + 4);
    }

    template <typename T>
    void
    uint(T value) {
        for (std::size_t b = 0; b < sizeof(T); ++b) {
            bytes_.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
        }
    }

    void
    f32(float value) {
        uint(std::bit_cast<std::uint32_t>(value));
    }

    void
    f64(double value) {
        uint(std::bit_cast<std::uint64_t>(value));
    }

    void
    raw(std::span<const std::uint8_t> data) {
        bytes_.insert(bytes_.end(), data.begin(), data.end());
    }

    std::vector<std::uint8_t>&
    bytes() {
        return bytes_;
    }

 private:
    std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
    Reader(std::span<const std::uint8_t> bytes, const char* what) : bytes_(bytes), what_(what) {
    }

    void
    magic(const char (&m)[4]) {
        need(4);
        if (std::memcmp(bytes_.data() + pos_, m, 4) != 0) {
            throw FormatError(std::string(what_) + ": bad magic");
        }
        pos_ += 4;
    }

    template <typename T>
    T
    uint() {
        need(sizeof(T));
        T value = 0;
        for (std::size_t b = 0; b < sizeof(T); ++b) {
            value |= static_cast<T>(static_cast<T>(bytes_[pos_ + b]) << (8 * b));
        }
        pos_ += sizeof(T);
        return value;
    }

    float
    f32() {
        return std::bit_cast<float>(uint<std::uint32_t>());
    }

    double
    f64() {
        return std::bit_cast<double>(uint<std::uint64_t>());
    }

    std::span<const std::uint8_t>
    raw(std::size_t count) {
        need(count);
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    void
    version() {
        const auto v = uint<std::uint16_t>();
        if (v != kFormatVersion) {
            throw FormatError(std::string(what_) + ": unsupported version " + std::to_string(v));
        }
    }

    std::size_t
    remaining() const noexcept {
        return bytes_.size() - pos_;
    }

    void
    expect_remaining(std::size_t count) const {
        if (remaining() != count) {
            throw FormatError(std::string(what_) + ": expected " + std::to_string(count) + " payload bytes, found " +
                              std::to_string(remaining()));
        }
    }

 private:
    void
    need(std::size_t count) const {
        if (remaining() < count) {
            throw FormatError(std::string(what_) + ": truncated");
        }
    }

    std::span<const std::uint8_t> bytes_;
    const char* what_;
    std::size_t pos_ = 0;
};

// Guards size arithmetic on untrusted headers.
std::size_t
checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw FormatError(std::string(what) + ": size overflow");
    }
    return static_cast<std::size_t>(a * b);
}

}  // namespace

std::uint32_t
crc32(std::span<const std::uint8_t> bytes) {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    std::size_t offset = 0;
    while (offset < bytes.size()) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - offset, 1u << 30));
        crc = ::crc32(crc, bytes.data() + offset, chunk);
        offset += chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

std::vector<std::uint8_t>
encode_dataset(const Dataset& data) {
    data.validate();
    Writer w;
    w.magic(kDatasetMagic);
    w.uint<std::uint16_t>(kFormatVersion);
    w.uint<std::uint64_t>(data.size());
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(data.dim));
    w.uint<std::uint8_t>(data.labels ? 1 : 0);
    for (const Vector& row : data.rows) {
        for (Eigen::Index i = 0; i < row.size(); ++i) {
            w.f32(static_cast<float>(row[i]));
        }
    }
    if (data.labels) {
        for (const std::uint32_t label : *data.labels) {
            w.uint<std::uint32_t>(label);
        }
    }
    return std::move(w.bytes());
}

Dataset
decode_dataset(std::span<const std::uint8_t> bytes) {
    Reader r(bytes, "dataset file");
    r.magic(kDatasetMagic);
    r.version();
    const auto n = r.uint<std::uint64_t>();
    const auto d = r.uint<std::uint32_t>();
    const auto label_flag = r.uint<std::uint8_t>();
    if (label_flag > 1) {
        throw FormatError("dataset file: label flag must be 0 or 1");
    }
    if (d == 0 && n != 0) {
        throw FormatError("dataset file: zero dimension");
    }
    const std::size_t values = checked_mul(n, d, "dataset file");
    r.expect_remaining(checked_mul(values + (label_flag ? n : 0), 4, "dataset file"));

    Dataset data;
    data.dim = d;
    data.rows.reserve(n);
    for (std::uint64_t p = 0; p < n; ++p) {
        Vector row(static_cast<Eigen::Index>(d));
        for (Eigen::Index i = 0; i < row.size(); ++i) {
            row[i] = r.f32();
        }
        if (!row.allFinite()) {
            throw FormatError("dataset file: non-finite value in row " + std::to_string(p));
        }
        data.rows.push_back(std::move(row));
    }
    if (label_flag) {
        data.labels.emplace();
        data.labels->reserve(n);
        for (std::uint64_t p = 0; p < n; ++p) {
            data.labels->push_back(r.uint<std::uint32_t>());
        }
    }
    return data;
}

namespace {

void
check_fits(std::size_t value, std::size_t limit, const char* what) {
    if (value > limit) {
        throw InvalidArgument(std::string(what) + " does not fit the file format");
    }
}

}  // namespace

std::vector<std::uint8_t>
encode_model(const ModelSnapshot& snap) {
    snap.validate();
    if (snap.kernel && snap.kernel->sigma() != 1.0) {
        throw InvalidArgument("model file format stores kernel bandwidth 1 only");
    }
    check_fits(snap.models.size(), std::numeric_limits<std::uint16_t>::max(), "model count");
    check_fits(snap.input_dim, std::numeric_limits<std::uint32_t>::max(), "input dimension");
    check_fits(snap.bits(), std::numeric_limits<std::uint32_t>::max(), "code length");
    Writer w;
    w.magic(kModelMagic);
    w.uint<std::uint16_t>(kFormatVersion);
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(snap.input_dim));
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(snap.bits()));
    w.uint<std::uint16_t>(static_cast<std::uint16_t>(snap.models.size()));
    w.uint<std::uint8_t>(snap.kernel ? 1 : 0);
    if (snap.kernel) {
        w.uint<std::uint32_t>(static_cast<std::uint32_t>(snap.kernel->anchor_count()));
    }
    for (Eigen::Index i = 0; i < snap.mean.size(); ++i) {
        w.f64(snap.mean[i]);
    }
    if (snap.kernel) {
        const Matrix& anchors = snap.kernel->anchors();
        for (Eigen::Index p = 0; p < anchors.cols(); ++p) {
            for (Eigen::Index i = 0; i < anchors.rows(); ++i) {
                w.f64(anchors(i, p));
            }
        }
    }
    for (const HashModel& m : snap.models) {
        const Matrix& weights = m.weights();
        for (Eigen::Index k = 0; k < weights.cols(); ++k) {
            for (Eigen::Index i = 0; i < weights.rows(); ++i) {
                w.f64(weights(i, k));
            }
        }
    }
    const std::uint32_t crc = crc32(w.bytes());
    w.uint<std::uint32_t>(crc);
    return std::move(w.bytes());
}

ModelSnapshot
decode_model(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4) {
        throw FormatError("model file: truncated");
    }
    Reader r(bytes.first(bytes.size() - 4), "model file");
    r.magic(kModelMagic);
    Reader tail(bytes.last(4), "model file");
    if (tail.uint<std::uint32_t>() != crc32(bytes.first(bytes.size() - 4))) {
        throw FormatError("model file: CRC mismatch");
    }
    r.version();
    const auto d = r.uint<std::uint32_t>();
    const auto bits = r.uint<std::uint32_t>();
    const auto models = r.uint<std::uint16_t>();
    const auto kernel_flag = r.uint<std::uint8_t>();
    if (kernel_flag > 1) {
        throw FormatError("model file: kernel flag must be 0 or 1");
    }
    if (d == 0 || bits == 0 || models == 0) {
        throw FormatError("model file: zero dimension, code length or model count");
    }
    const std::uint32_t anchors = kernel_flag ? r.uint<std::uint32_t>() : 0;
    if (kernel_flag && anchors == 0) {
        throw FormatError("model file: kernel with zero anchors");
    }
    const std::size_t features = kernel_flag ? anchors : d;
    const std::size_t doubles = features + checked_mul(anchors, d, "model file") +
                                checked_mul(checked_mul(features, bits, "model file"), models, "model file");
    r.expect_remaining(checked_mul(doubles, 8, "model file"));

    ModelSnapshot snap;
    snap.input_dim = d;
    snap.mean.resize(static_cast<Eigen::Index>(features));
    for (Eigen::Index i = 0; i < snap.mean.size(); ++i) {
        snap.mean[i] = r.f64();
    }
    try {
        if (kernel_flag) {
            Matrix a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(anchors));
            for (Eigen::Index p = 0; p < a.cols(); ++p) {
                for (Eigen::Index i = 0; i < a.rows(); ++i) {
                    a(i, p) = r.f64();
                }
            }
            snap.kernel.emplace(std::move(a), 1.0);
        }
        for (std::uint16_t m = 0; m < models; ++m) {
            Matrix w(static_cast<Eigen::Index>(features), static_cast<Eigen::Index>(bits));
            for (Eigen::Index k = 0; k < w.cols(); ++k) {
                for (Eigen::Index i = 0; i < w.rows(); ++i) {
                    w(i, k) = r.f64();
                }
            }
            snap.models.emplace_back(std::move(w));
        }
        snap.validate();
    } catch (const InvalidArgument& e) {
        throw FormatError(std::string("model file: ") + e.what());
    }
    if (!snap.mean.allFinite()) {
        throw FormatError("model file: non-finite mean");
    }
    return snap;
}

std::vector<std::uint8_t>
encode_codes(const CodeTable& table) {
    table.validate();
    check_fits(table.models, std::numeric_limits<std::uint16_t>::max(), "model count");
    check_fits(table.bits, std::numeric_limits<std::uint32_t>::max(), "code length");
    Writer w;
    w.magic(kCodesMagic);
    w.uint<std::uint16_t>(kFormatVersion);
    w.uint<std::uint64_t>(table.size());
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(table.bits));
    w.uint<std::uint16_t>(static_cast<std::uint16_t>(table.models));
    for (const HashCode& c : table.codes) {
        w.raw(c.to_bytes());
    }
    return std::move(w.bytes());
}

CodeTable
decode_codes(std::span<const std::uint8_t> bytes) {
    Reader r(bytes, "codes file");
    r.magic(kCodesMagic);
    r.version();
    const auto n = r.uint<std::uint64_t>();
    const auto bits = r.uint<std::uint32_t>();
    const auto models = r.uint<std::uint16_t>();
    if (bits == 0 || models == 0) {
        throw FormatError("codes file: zero code length or model count");
    }
    const std::size_t per_code = (bits + 7) / 8;
    const std::size_t count = checked_mul(n, models, "codes file");
    r.expect_remaining(checked_mul(count, per_code, "codes file"));

    CodeTable table;
    table.models = models;
    table.bits = bits;
    table.codes.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        table.codes.push_back(HashCode::from_bytes(r.raw(per_code), bits));
    }
    return table;
}

std::vector<std::uint8_t>
read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw FormatError("error reading " + path.string());
    }
    return bytes;
}

void
write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("cannot write " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw FormatError("error writing " + path.string());
    }
}

}  // namespace olhash::io
