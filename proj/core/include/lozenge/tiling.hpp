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
/**
 * @brief Punctured hexagons and their nonintersecting lattice-path model.
 *
 * The hexagon has sides a, b+1, c, a+1, b, c+1 (in order) with one unit
 * triangle removed. A rhombus tiling corresponds to a family of a+1
 * vertex-disjoint lattice paths with unit steps (x+1, y) and (x, y-1):
 * path i (1 <= i <= a) starts at A_i = (i-1, c+i), the exceptional path
 * starts at the puncture, and every path ends at one of
 * E_j = (b+j-1, j-1), 1 <= j <= a+1.
 *
 * Lattice points are midpoints of triangle edges parallel to the sides of
 * length a and a+1. Both step types advance x - y by one, so x - y runs from
 * -(c+1) on the side of length a to b on the side of length a+1.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lozenge/exact.hpp"

namespace lozenge {

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

enum class Step : std::uint8_t { East, South };

struct LatticePath {
    LatticePoint start;
    std::vector<Step> steps;

    LatticePoint end() const;
    std::vector<LatticePoint> vertices() const;
};

struct PathFamily {
    std::vector<LatticePath> paths;
};

class PuncturedHexagon {
public:
    /// Throws PreconditionError unless a, b, c are positive and the puncture
    /// is a lattice point of the hexagon off the side of length a.
    PuncturedHexagon(int a, int b, int c, LatticePoint puncture);

    /// Centrally punctured hexagon; a, b, c must share a parity. The
    /// puncture sits at ((a+b)/2, (a+c)/2).
    static PuncturedHexagon central(int a, int b, int c);

    /// a and b of one parity, c of the other. The removed triangle's side
    /// parallel to the a-sides is equidistant from them, its side parallel
    /// to the b-sides is two lattice lines nearer the side of length b+1,
    /// and its side parallel to the c-sides is one line nearer the side of
    /// length c+1. In path coordinates: ((a+b)/2, (a+c+1)/2).
    static PuncturedHexagon offset_puncture(int a, int b, int c);

    /// central() when a, b, c share a parity, offset_puncture() when only
    /// a and b do; requires a and b of equal parity.
    static LatticePoint default_puncture(int a, int b, int c);

    int a() const { return a_; }
    int b() const { return b_; }
    int c() const { return c_; }
    LatticePoint puncture() const { return puncture_; }

    /// Whether (x, y) is a path vertex of the (unpunctured) hexagon.
    bool contains(LatticePoint p) const;

    /// Unit triangles of the unpunctured hexagon.
    long triangle_count() const;

private:
    int a_;
    int b_;
    int c_;
    LatticePoint puncture_;
};

struct PathEndpoints {
    std::vector<LatticePoint> starts; ///< A_1..A_a, then the puncture
    std::vector<LatticePoint> ends;   ///< E_1..E_{a+1}
};

PathEndpoints start_end_points(const PuncturedHexagon &h);

/// Lattice paths from \p from to \p to with east and south unit steps.
ExactInt count_paths(LatticePoint from, LatticePoint to);

/// Brute-force count of nonintersecting path families (= rhombus tilings).
/// Guarded to a <= 4, b <= 6, c <= 6. \p threads = 0 uses the hardware
/// concurrency; the top-level branches are split across workers.
ExactInt enumerate_tilings(const PuncturedHexagon &h, unsigned threads = 0);

/// Visits every family in depth-first order: paths by start index, east
/// steps before south steps. Return false from \p visit to stop early.
/// Same size guard as enumerate_tilings.
void for_each_family(const PuncturedHexagon &h,
                     const std::function<bool(const PathFamily &)> &visit);

/// The family at 0-based position \p index of for_each_family's order.
std::optional<PathFamily> nth_family(const PuncturedHexagon &h, std::uint64_t index);

/// Throws PreconditionError describing the first defect: wrong path count,
/// wrong start, a path leaving the hexagon or not ending at some E_j, or two
/// paths sharing a vertex.
void validate_family(const PuncturedHexagon &h, const PathFamily &family);

/// Counts tilings by cutting every path at the diagonal through the
/// puncture: for each choice of crossing points M left and right of the
/// puncture, multiplies the nonintersecting-path determinants for
/// A -> M and for M (puncture included) -> E, then sums.
ExactInt count_via_path_determinants(const PuncturedHexagon &h);

/// Number of crossing-point choices that count_via_path_determinants sums
/// over.
std::uint64_t path_determinant_term_count(const PuncturedHexagon &h);

} // namespace lozenge
