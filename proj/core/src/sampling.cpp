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
#include "lozenge/sampling.hpp"

#include <set>

namespace lozenge {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix(seed ^ splitmix(stream))) {}

long SeededRng::uniform(long lo, long hi) {
    if (lo > hi) throw PreconditionError("empty sampling range");
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

EvalPoint random_distinct_points(std::size_t n, SeededRng &rng, long bound) {
    if (bound < 1) throw PreconditionError("bound must be positive");
    if (n > static_cast<std::size_t>(2 * bound + 1))
        throw PreconditionError("too many points for the bound");
    std::set<ExactRational> seen;
    std::vector<ExactRational> values;
    while (values.size() < n) {
        ExactRational v = make_rational(rng.uniform(-bound, bound), rng.uniform(1, bound));
        if (seen.insert(v).second) values.push_back(v);
    }
    return EvalPoint(std::move(values));
}

ExactMatrix random_integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi,
                                  SeededRng &rng) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

SkewMatrix random_skew(std::size_t n, long lo, long hi, SeededRng &rng) {
    std::vector<ExactRational> upper;
    for (std::size_t k = 0; k < n * (n - (n > 0 ? 1 : 0)) / 2; ++k)
        upper.push_back(rng.uniform(lo, hi));
    return SkewMatrix::from_upper(n, upper);
}

} // namespace lozenge
