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

#include <array>
#include <string>
#include <vector>

#include "lozenge/tiling.hpp"

namespace lozenge {

/// Orientation class of a rhombus, named by the path step it carries.
/// Flat rhombi are crossed by no path.
enum class RhombusKind { East, South, Flat };

/// Corners in triangular-lattice coordinates (u, v): the point where the
/// u-th line parallel to the c-sides meets the v-th line parallel to the
/// b-sides.
struct Rhombus {
    RhombusKind kind;
    std::array<LatticePoint, 4> corners;
};

/// Inverts the path bijection. Validates \p family first.
std::vector<Rhombus> tiling_rhombi(const PuncturedHexagon &h, const PathFamily &family);

/// SVG 1.1 document: one polygon per rhombus (class "rhombus", fill keyed by
/// orientation) and the puncture as a black triangle (class "puncture").
/// Throws PreconditionError for an invalid family.
std::string render_tiling_svg(const PuncturedHexagon &h, const PathFamily &family);

} // namespace lozenge
