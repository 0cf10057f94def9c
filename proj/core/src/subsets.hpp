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

#include <vector>

namespace lozenge::detail {

// Calls f with every strictly increasing k-subset of [0, n) in colex order.
template <typename F> void for_each_subset(int n, int k, F &&f) {
    if (k < 0 || k > n) return;
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(static_cast<const std::vector<int> &>(s));
        int i = 0;
        while (i < k) {
            const int limit = i + 1 == k ? n : s[static_cast<std::size_t>(i + 1)];
            if (s[static_cast<std::size_t>(i)] + 1 < limit) break;
            s[static_cast<std::size_t>(i)] = i;
            ++i;
        }
        if (i == k) return;
        ++s[static_cast<std::size_t>(i)];
    }
}

} // namespace lozenge::detail
