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

#include "olhash/snapshot.hpp"

#include "olhash/error.hpp"

namespace olhash {

void
ModelSnapshot::validate() const {
    if (input_dim == 0) {
        throw InvalidArgument("snapshot: input dimension must be positive");
    }
    if (models.empty()) {
        throw InvalidArgument("snapshot: no models");
    }
    const std::size_t want_features = kernel ? kernel->anchor_count() : input_dim;
    if (kernel) {
        detail::check_dim(kernel->input_dim(), input_dim, "snapshot kernel anchors");
    }
    detail::check_dim(feature_dim(), want_features, "snapshot mean");
    for (const HashModel& m : models) {
        detail::check_dim(m.dim(), want_features, "snapshot model rows");
        detail::check_dim(m.bits(), bits(), "snapshot model bits");
    }
}

Vector
ModelSnapshot::prepare(const Vector& x) const {
    detail::check_dim(static_cast<std::size_t>(x.size()), input_dim, "snapshot input");
    if (kernel) {
        return kernel->map_one(x) - mean;
    }
    return x - mean;
}

std::vector<HashCode>
ModelSnapshot::encode(const Vector& x) const {
    const Vector z = prepare(x);
    std::vector<HashCode> codes;
    codes.reserve(models.size());
    for (const HashModel& m : models) {
        codes.push_back(olhash::encode(m, z));
    }
    return codes;
}

}  // namespace olhash
