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

#include "lozenge/exact.hpp"

namespace lozenge {

struct BoxDims {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
};

/// Number of plane partitions in an alpha x beta x gamma box, from the
/// product over (i,j,k) of (i+j+k-1)/(i+j+k-2). Any zero side gives 1.
ExactInt macmahon_box(BoxDims d);
inline ExactInt macmahon_box(int alpha, int beta, int gamma) {
    return macmahon_box(BoxDims{alpha, beta, gamma});
}

/// Backtracking count of alpha x beta arrays over [0, gamma] that weakly
/// decrease along rows and columns. Guarded to alpha*beta <= 16, gamma <= 8.
ExactInt enumerate_plane_partitions(BoxDims d);

/// Rhombus tilings of the hexagon with sides a, b+1, c, a+1, b, c+1 with
/// its central triangle removed. Requires a, b, c positive and of equal
/// parity.
ExactInt theorem1_count(int a, int b, int c);

/// Rhombus tilings of the same hexagon when a and b share a parity and c
/// does not, with the off-centre puncture (see
/// PuncturedHexagon::offset_puncture).
ExactInt theorem4_count(int a, int b, int c);

} // namespace lozenge
