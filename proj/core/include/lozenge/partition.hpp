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
#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace lozenge {

/// Integer partition: weakly decreasing positive parts. Trailing zeros are
/// dropped on construction, so (2,1,0) and (2,1) compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// The rectangular shape (width^height); empty when either side is 0.
    static Partition rectangle(int width, int height);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; zero beyond the length.
    int part(int index) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

/// Transposed Young diagram.
Partition conjugate(const Partition &p);

/// The partition whose conjugate is the given weakly decreasing list (zeros
/// allowed). Throws PreconditionError if the list is not a partition.
Partition from_conjugate(const std::vector<int> &conjugate_parts);

std::ostream &operator<<(std::ostream &os, const Partition &p);

} // namespace lozenge
