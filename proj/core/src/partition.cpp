/*
 * Copyright 2026 The lozenge Authors
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
#include "lozenge/partition.hpp"

#include <numeric>
#include <ostream>

#include "lozenge/exact.hpp"

namespace lozenge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw PreconditionError("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::rectangle(int width, int height) {
    if (width < 0 || height < 0)
        throw PreconditionError("rectangle sides must be nonnegative");
    if (width == 0 || height == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int index) const {
    if (index < 1 || index > length()) return 0;
    return parts_[static_cast<std::size_t>(index - 1)];
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition &p) {
    std::vector<int> columns(static_cast<std::size_t>(p.largest()), 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j) ++columns[static_cast<std::size_t>(j)];
    return Partition(std::move(columns));
}

Partition from_conjugate(const std::vector<int> &conjugate_parts) {
    return conjugate(Partition(conjugate_parts));
}

std::ostream &operator<<(std::ostream &os, const Partition &p) { return os << p.to_string(); }

} // namespace lozenge
