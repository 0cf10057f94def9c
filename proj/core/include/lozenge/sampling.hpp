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

#include <cstddef>
#include <cstdint>
#include <random>

#include "lozenge/matrix.hpp"
#include "lozenge/symfun.hpp"

namespace lozenge {

/// Deterministic generator for randomized identity checks.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// n pairwise distinct rationals with |numerator| and denominator at most
/// \p bound.
EvalPoint random_distinct_points(std::size_t n, SeededRng &rng, long bound = 13);

ExactMatrix random_integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi,
                                  SeededRng &rng);

SkewMatrix random_skew(std::size_t n, long lo, long hi, SeededRng &rng);

} // namespace lozenge
