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
#include "lozenge/boxcount.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

namespace {

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
int ceil_half(int v) { return -floor_half(-v); }

void require_positive(int a, int b, int c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw PreconditionError("a, b, c must be positive integers");
}

void check_guard(BoxDims d) {
    if (d.alpha < 0 || d.beta < 0 || d.gamma < 0)
        throw PreconditionError("box dimensions must be nonnegative");
}

// Counts fillings of cells [cell, alpha*beta) in row-major order.
long long fill(std::vector<int> &grid, int alpha, int beta, int gamma, int cell) {
    if (cell == alpha * beta) return 1;
    const int row = cell / beta;
    const int col = cell % beta;
    int cap = gamma;
    if (row > 0) cap = std::min(cap, grid[static_cast<std::size_t>(cell - beta)]);
    if (col > 0) cap = std::min(cap, grid[static_cast<std::size_t>(cell - 1)]);
    long long total = 0;
    for (int v = 0; v <= cap; ++v) {
        grid[static_cast<std::size_t>(cell)] = v;
        total += fill(grid, alpha, beta, gamma, cell + 1);
    }
    return total;
}

} // namespace

ExactInt macmahon_box(BoxDims d) {
    check_guard(d);
    ExactInt numerator = 1;
    ExactInt denominator = 1;
    for (int i = 1; i <= d.alpha; ++i)
        for (int j = 1; j <= d.beta; ++j)
            for (int k = 1; k <= d.gamma; ++k) {
                numerator *= i + j + k - 1;
                denominator *= i + j + k - 2;
            }
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw std::logic_error("box product is not integral");
    ExactInt result;
    mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return result;
}

ExactInt enumerate_plane_partitions(BoxDims d) {
    check_guard(d);
    if (d.alpha * d.beta > 16 || d.gamma > 8)
        throw PreconditionError("plane-partition enumeration guard: need alpha*beta <= 16 and gamma <= 8");
    if (d.alpha == 0 || d.beta == 0) return 1;
    std::vector<int> grid(static_cast<std::size_t>(d.alpha * d.beta), 0);
    return ExactInt(std::to_string(fill(grid, d.alpha, d.beta, d.gamma, 0)));
}

ExactInt theorem1_count(int a, int b, int c) {
    require_positive(a, b, c);
    if (a % 2 != b % 2 || b % 2 != c % 2)
        throw PreconditionError("parity: a, b, c must all have the same parity");
    return macmahon_box(ceil_half(a), ceil_half(b), ceil_half(c)) *
           macmahon_box(ceil_half(a + 1), floor_half(b), ceil_half(c)) *
           macmahon_box(ceil_half(a), ceil_half(b + 1), floor_half(c)) *
           macmahon_box(floor_half(a), ceil_half(b), ceil_half(c + 1));
}

ExactInt theorem4_count(int a, int b, int c) {
    require_positive(a, b, c);
    if (a % 2 != b % 2 || c % 2 == a % 2)
        throw PreconditionError("parity: a and b must share a parity that c does not have");
    const ExactInt middle = macmahon_box(floor_half(a + 1), floor_half(b + 1), floor_half(c + 1));
    return macmahon_box(floor_half(a + 2), floor_half(b), floor_half(c + 2)) * middle * middle *
           macmahon_box(floor_half(a), floor_half(b + 2), floor_half(c));
}

} // namespace lozenge
