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
#include "lozenge/render.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace lozenge {

std::vector<Rhombus> tiling_rhombi(const PuncturedHexagon &h, const PathFamily &family) {
    validate_family(h, family);

    std::vector<Rhombus> out;
    std::set<LatticePoint> on_path;
    for (const auto &path : family.paths) {
        LatticePoint p = path.start;
        on_path.insert(p);
        for (Step s : path.steps) {
            if (s == Step::East) {
                out.push_back({RhombusKind::East, {{{p.x, p.y}, {p.x + 1, p.y}, {p.x + 2, p.y + 1}, {p.x + 1, p.y + 1}}}});
                ++p.x;
            } else {
                out.push_back({RhombusKind::South, {{{p.x, p.y - 1}, {p.x + 1, p.y}, {p.x + 1, p.y + 1}, {p.x, p.y}}}});
                --p.y;
            }
            on_path.insert(p);
        }
    }

    // Interior edges no path crosses pair the two triangles on either side.
    for (int x = 0; x <= h.a() + h.b(); ++x)
        for (int y = 0; y <= h.a() + h.c(); ++y) {
            const LatticePoint p{x, y};
            const int d = x - y;
            if (d <= -(h.c() + 1) || d >= h.b() || !h.contains(p) || on_path.count(p)) continue;
            out.push_back({RhombusKind::Flat, {{{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}}}});
        }
    return out;
}

namespace {

constexpr double kScale = 40.0;
const double kRowHeight = std::sqrt(3.0) / 2.0;

struct Canvas {
    double min_x, max_y;

    std::string point(LatticePoint uv) const {
        const double px = (uv.x - 0.5 * uv.y - min_x) * kScale + kScale / 2;
        const double py = (max_y - uv.y * kRowHeight) * kScale + kScale / 2;
        std::ostringstream os;
        os << std::fixed << std::setprecision(3) << px << ',' << py;
        return os.str();
    }
};

const char *fill_for(RhombusKind k) {
    switch (k) {
    case RhombusKind::East: return "#f2c14e";
    case RhombusKind::South: return "#5b8e7d";
    case RhombusKind::Flat: return "#bc4b51";
    }
    return "#ffffff";
}

const char *name_for(RhombusKind k) {
    switch (k) {
    case RhombusKind::East: return "east";
    case RhombusKind::South: return "south";
    case RhombusKind::Flat: return "flat";
    }
    return "";
}

} // namespace

std::string render_tiling_svg(const PuncturedHexagon &h, const PathFamily &family) {
    const auto rhombi = tiling_rhombi(h, family);

    // Hexagon corners in (u, v), used for the viewport.
    const int a = h.a(), b = h.b(), c = h.c();
    const std::array<LatticePoint, 6> hull{{{0, c + 1}, {a, a + c + 1}, {a + b + 1, a + c + 1},
                                            {a + b + 1, a + 1}, {b, 0}, {0, 0}}};
    double min_x = 1e9, max_x = -1e9, max_y = -1e9;
    for (auto v : hull) {
        min_x = std::min(min_x, v.x - 0.5 * v.y);
        max_x = std::max(max_x, v.x - 0.5 * v.y);
        max_y = std::max(max_y, v.y * kRowHeight);
    }
    const Canvas canvas{min_x, max_y};
    const double width = (max_x - min_x + 1) * kScale;
    const double height = (max_y + 1) * kScale;

    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<title>Rhombus tiling of a punctured hexagon, a=" << a << " b=" << b << " c=" << c
       << "</title>\n"
       << "<g stroke=\"#222222\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
    for (const auto &r : rhombi) {
        os << "<polygon class=\"rhombus " << name_for(r.kind) << "\" fill=\"" << fill_for(r.kind)
           << "\" points=\"";
        for (std::size_t i = 0; i < r.corners.size(); ++i)
            os << (i ? " " : "") << canvas.point(r.corners[i]);
        os << "\"/>\n";
    }
    const LatticePoint p = h.puncture();
    os << "<polygon class=\"puncture\" fill=\"#000000\" points=\"" << canvas.point({p.x, p.y}) << ' '
       << canvas.point({p.x + 1, p.y + 1}) << ' ' << canvas.point({p.x, p.y + 1}) << "\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace lozenge
