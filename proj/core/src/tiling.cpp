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
#include "lozenge/tiling.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>

#include "lozenge/matrix.hpp"
#include "subsets.hpp"

namespace lozenge {

LatticePoint LatticePath::end() const {
    LatticePoint p = start;
    for (Step s : steps) {
        if (s == Step::East) ++p.x;
        else --p.y;
    }
    return p;
}

std::vector<LatticePoint> LatticePath::vertices() const {
    std::vector<LatticePoint> out;
    out.reserve(steps.size() + 1);
    LatticePoint p = start;
    out.push_back(p);
    for (Step s : steps) {
        if (s == Step::East) ++p.x;
        else --p.y;
        out.push_back(p);
    }
    return out;
}

PuncturedHexagon::PuncturedHexagon(int a, int b, int c, LatticePoint puncture)
    : a_(a), b_(b), c_(c), puncture_(puncture) {
    if (a <= 0 || b <= 0 || c <= 0) throw PreconditionError("a, b, c must be positive integers");
    if (!contains(puncture) || puncture.x - puncture.y <= -(c + 1))
        throw PreconditionError("puncture must lie inside the hexagon, off the side of length a");
}

PuncturedHexagon PuncturedHexagon::central(int a, int b, int c) {
    if (a % 2 != b % 2 || b % 2 != c % 2)
        throw PreconditionError("parity: the central puncture needs a, b, c of the same parity");
    return PuncturedHexagon(a, b, c, {(a + b) / 2, (a + c) / 2});
}

PuncturedHexagon PuncturedHexagon::offset_puncture(int a, int b, int c) {
    if (a % 2 != b % 2 || c % 2 == a % 2)
        throw PreconditionError("parity: the offset puncture needs a, b of one parity and c of the other");
    return PuncturedHexagon(a, b, c, {(a + b) / 2, (a + c + 1) / 2});
}

LatticePoint PuncturedHexagon::default_puncture(int a, int b, int c) {
    if (a % 2 != b % 2)
        throw PreconditionError("parity: a default puncture needs a and b of the same parity");
    return c % 2 == a % 2 ? LatticePoint{(a + b) / 2, (a + c) / 2}
                          : LatticePoint{(a + b) / 2, (a + c + 1) / 2};
}

bool PuncturedHexagon::contains(LatticePoint p) const {
    const int d = p.x - p.y;
    return p.x >= 0 && p.x <= a_ + b_ && p.y >= 0 && p.y <= a_ + c_ && d >= -(c_ + 1) && d <= b_;
}

long PuncturedHexagon::triangle_count() const {
    // Triangle vertices live on the (u, v) grid of line intersections.
    auto inside = [&](int u, int v) {
        return u >= 0 && u <= a_ + b_ + 1 && v >= 0 && v <= a_ + c_ + 1 && u - v >= -(c_ + 1) &&
               u - v <= b_;
    };
    long count = 0;
    for (int x = -1; x <= a_ + b_ + 1; ++x)
        for (int y = -1; y <= a_ + c_ + 1; ++y) {
            if (inside(x, y) && inside(x + 1, y + 1)) {
                count += inside(x + 1, y);
                count += inside(x, y + 1);
            }
        }
    return count;
}

PathEndpoints start_end_points(const PuncturedHexagon &h) {
    PathEndpoints pts;
    for (int i = 1; i <= h.a(); ++i) pts.starts.push_back({i - 1, h.c() + i});
    pts.starts.push_back(h.puncture());
    for (int j = 1; j <= h.a() + 1; ++j) pts.ends.push_back({h.b() + j - 1, j - 1});
    return pts;
}

ExactInt count_paths(LatticePoint from, LatticePoint to) {
    const int east = to.x - from.x;
    const int south = from.y - to.y;
    if (east < 0 || south < 0) return 0;
    return binomial(east + south, east);
}

namespace {

void check_search_guard(const PuncturedHexagon &h) {
    if (h.a() > 4 || h.b() > 6 || h.c() > 6)
        throw PreconditionError("enumeration guard: need a <= 4, b <= 6, c <= 6");
}

// Depth-first search over path families. Paths 0..a-1 start on the side of
// length a and, being mutually nonintersecting, path i ends at E_i or
// E_{i+1} (0-based). The exceptional path a starts at the puncture.
class FamilySearch {
public:
    explicit FamilySearch(const PuncturedHexagon &h)
        : a_(h.a()), b_(h.b()), c_(h.c()), puncture_(h.puncture()), width_(h.a() + h.b() + 1),
          height_(h.a() + h.c() + 1),
          occupied_(static_cast<std::size_t>(width_ * height_), 0),
          ways_(static_cast<std::size_t>(width_ * height_), 0) {
        for (int i = 0; i < a_; ++i) mark(start(i), 1);
        mark(puncture_, 1);
        family_.paths.resize(static_cast<std::size_t>(a_ + 1));
        for (int i = 0; i < a_; ++i) family_.paths[static_cast<std::size_t>(i)].start = start(i);
        family_.paths[static_cast<std::size_t>(a_)].start = puncture_;
    }

    LatticePoint start(int i) const { return {i, c_ + 1 + i}; }

    // Counting mode: the exceptional path is counted by dynamic programming.
    std::uint64_t count_from(int path) {
        if (path == a_) return count_last_path();
        const LatticePoint s = start(path);
        return count_walk(path, s.x, s.y);
    }

    // Every way to route path 0, as step lists.
    std::vector<std::vector<Step>> first_path_choices() {
        std::vector<std::vector<Step>> out;
        if (a_ == 0) return out;
        const LatticePoint s = start(0);
        collect_walk(0, s.x, s.y, out);
        return out;
    }

    void apply(int path, const std::vector<Step> &steps) {
        LatticePoint p = start(path);
        for (Step st : steps) {
            if (st == Step::East) ++p.x;
            else --p.y;
            mark(p, 1);
        }
        family_.paths[static_cast<std::size_t>(path)].steps = steps;
    }

    // Visiting mode; returns false once the visitor asks to stop.
    bool visit_from(int path, const std::function<bool(const PathFamily &)> &visit) {
        const LatticePoint s = path == a_ ? puncture_ : start(path);
        return visit_walk(path, s.x, s.y, visit);
    }

private:
    std::size_t at(LatticePoint p) const { return static_cast<std::size_t>(p.y * width_ + p.x); }
    bool free(int x, int y) const { return occupied_[static_cast<std::size_t>(y * width_ + x)] == 0; }
    void mark(LatticePoint p, std::uint8_t v) { occupied_[at(p)] = v; }

    // Can path \p path (< a) standing at (x, y) still reach E_path or E_path+1?
    bool can_finish(int path, int x, int y) const { return x <= b_ + path + 1 && y >= path; }

    template <typename OnEnd>
    auto walk(int path, int x, int y, OnEnd &&on_end, std::uint64_t &acc) -> bool {
        if (x - y == b_) {
            // Ended at E_{y} (0-based); only E_path and E_path+1 are admissible.
            if (y != path && y != path + 1) return true;
            return on_end(acc);
        }
        if (x + 1 < width_ && free(x + 1, y) && can_finish(path, x + 1, y)) {
            mark({x + 1, y}, 1);
            steps_.push_back(Step::East);
            const bool go = walk(path, x + 1, y, on_end, acc);
            steps_.pop_back();
            mark({x + 1, y}, 0);
            if (!go) return false;
        }
        if (y - 1 >= 0 && free(x, y - 1) && can_finish(path, x, y - 1)) {
            mark({x, y - 1}, 1);
            steps_.push_back(Step::South);
            const bool go = walk(path, x, y - 1, on_end, acc);
            steps_.pop_back();
            mark({x, y - 1}, 0);
            if (!go) return false;
        }
        return true;
    }

    std::uint64_t count_walk(int path, int x, int y) {
        std::uint64_t acc = 0;
        walk(path, x, y,
             [&](std::uint64_t &sum) {
                 sum += count_from(path + 1);
                 return true;
             },
             acc);
        return acc;
    }

    void collect_walk(int path, int x, int y, std::vector<std::vector<Step>> &out) {
        std::uint64_t unused = 0;
        walk(path, x, y,
             [&](std::uint64_t &) {
                 out.push_back(steps_);
                 return true;
             },
             unused);
    }

    bool visit_walk(int path, int x, int y, const std::function<bool(const PathFamily &)> &visit) {
        if (path == a_) return visit_last(x, y, visit);
        std::uint64_t unused = 0;
        const std::size_t depth = steps_.size();
        return walk(path, x, y,
                    [&](std::uint64_t &) {
                        family_.paths[static_cast<std::size_t>(path)].steps.assign(
                            steps_.begin() + static_cast<std::ptrdiff_t>(depth), steps_.end());
                        const LatticePoint next = path + 1 == a_ ? puncture_ : start(path + 1);
                        return visit_walk(path + 1, next.x, next.y, visit);
                    },
                    unused);
    }

    // The exceptional path may end at whichever E_j is still free.
    bool visit_last(int x, int y, const std::function<bool(const PathFamily &)> &visit) {
        if (x - y == b_) {
            if (y < 0 || y > a_) return true;
            auto &steps = family_.paths[static_cast<std::size_t>(a_)].steps;
            steps = last_steps_;
            return visit(family_);
        }
        if (x + 1 < width_ && free(x + 1, y)) {
            mark({x + 1, y}, 1);
            last_steps_.push_back(Step::East);
            const bool go = visit_last(x + 1, y, visit);
            last_steps_.pop_back();
            mark({x + 1, y}, 0);
            if (!go) return false;
        }
        if (y - 1 >= 0 && free(x, y - 1)) {
            mark({x, y - 1}, 1);
            last_steps_.push_back(Step::South);
            const bool go = visit_last(x, y - 1, visit);
            last_steps_.pop_back();
            mark({x, y - 1}, 0);
            if (!go) return false;
        }
        return true;
    }

    // Paths from the puncture to any free E_j through free vertices. Only the
    // rectangle right of and below the puncture is reachable.
    std::uint64_t count_last_path() {
        const int px = puncture_.x;
        const int py = puncture_.y;
        std::uint64_t total = 0;
        for (int x = px; x < width_; ++x) {
            for (int y = py; y >= 0; --y) {
                const int d = x - y;
                std::uint64_t &w = ways_[static_cast<std::size_t>(y * width_ + x)];
                if (d > b_) {
                    w = 0;
                    continue;
                }
                if (x == px && y == py) {
                    w = 1;
                } else if (!free(x, y)) {
                    w = 0;
                } else {
                    w = 0;
                    if (x > px) w += ways_[static_cast<std::size_t>(y * width_ + x - 1)];
                    if (y < py) w += ways_[static_cast<std::size_t>((y + 1) * width_ + x)];
                }
                if (d == b_ && y <= a_) total += w;
            }
        }
        return total;
    }

    int a_;
    int b_;
    int c_;
    LatticePoint puncture_;
    int width_;
    int height_;
    std::vector<std::uint8_t> occupied_;
    std::vector<std::uint64_t> ways_;
    std::vector<Step> steps_;
    std::vector<Step> last_steps_;
    PathFamily family_;
};

} // namespace

ExactInt enumerate_tilings(const PuncturedHexagon &h, unsigned threads) {
    check_search_guard(h);
    FamilySearch root(h);
    const auto choices = root.first_path_choices();

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, choices.size())));

    std::atomic<std::size_t> next{0};
    std::vector<std::uint64_t> partial(threads, 0);
    auto worker = [&](unsigned id) {
        for (std::size_t i = next.fetch_add(1); i < choices.size(); i = next.fetch_add(1)) {
            FamilySearch search(h);
            search.apply(0, choices[i]);
            partial[id] += search.count_from(1);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto &t : pool) t.join();
    }

    ExactInt total = 0;
    for (std::uint64_t p : partial) total += ExactInt(std::to_string(p));
    return total;
}

void for_each_family(const PuncturedHexagon &h,
                     const std::function<bool(const PathFamily &)> &visit) {
    check_search_guard(h);
    FamilySearch search(h);
    search.visit_from(0, visit);
}

std::optional<PathFamily> nth_family(const PuncturedHexagon &h, std::uint64_t index) {
    std::optional<PathFamily> found;
    std::uint64_t seen = 0;
    for_each_family(h, [&](const PathFamily &f) {
        if (seen++ == index) {
            found = f;
            return false;
        }
        return true;
    });
    return found;
}

void validate_family(const PuncturedHexagon &h, const PathFamily &family) {
    const auto pts = start_end_points(h);
    if (family.paths.size() != pts.starts.size())
        throw PreconditionError("family must contain a+1 paths");
    std::set<LatticePoint> seen;
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        const auto &path = family.paths[i];
        if (path.start != pts.starts[i])
            throw PreconditionError("path " + std::to_string(i + 1) + " has the wrong start point");
        for (const LatticePoint &v : path.vertices()) {
            if (!h.contains(v))
                throw PreconditionError("path " + std::to_string(i + 1) + " leaves the hexagon");
            if (!seen.insert(v).second)
                throw PreconditionError("paths intersect at (" + std::to_string(v.x) + "," +
                                        std::to_string(v.y) + ")");
        }
        const LatticePoint e = path.end();
        if (std::find(pts.ends.begin(), pts.ends.end(), e) == pts.ends.end())
            throw PreconditionError("path " + std::to_string(i + 1) + " does not end at an E point");
    }
}

namespace {

ExactInt path_matrix_det(const std::vector<LatticePoint> &from, const std::vector<LatticePoint> &to) {
    ExactMatrix m(from.size(), to.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < to.size(); ++j) m(i, j) = count_paths(from[i], to[j]);
    return to_integer(determinant(m));
}

} // namespace

std::uint64_t path_determinant_term_count(const PuncturedHexagon &h) {
    const int left = h.puncture().x;
    const int right = h.a() + h.b() - h.puncture().x;
    std::uint64_t terms = 0;
    for (int k = 0; k <= h.a(); ++k) {
        const ExactInt t = binomial(left, k) * binomial(right, h.a() - k);
        terms += t.get_ui();
    }
    return terms;
}

ExactInt count_via_path_determinants(const PuncturedHexagon &h) {
    const auto pts = start_end_points(h);
    const std::vector<LatticePoint> starts(pts.starts.begin(), pts.starts.end() - 1);
    const LatticePoint centre = h.puncture();
    // Crossing points on the diagonal through the puncture, x in [0, a+b].
    const int left = centre.x;
    const int right = h.a() + h.b() - centre.x;

    ExactInt total = 0;
    for (int k = 0; k <= h.a(); ++k) {
        detail::for_each_subset(left, k, [&](const std::vector<int> &lo) {
            detail::for_each_subset(right, h.a() - k, [&](const std::vector<int> &hi) {
                std::vector<LatticePoint> crossings;   // M without the puncture
                std::vector<LatticePoint> with_centre; // M_1..M_{a+1}
                for (int idx : lo) {
                    const int off = idx - left; // -left .. -1
                    crossings.push_back({centre.x + off, centre.y + off});
                }
                with_centre = crossings;
                with_centre.push_back(centre);
                for (int idx : hi) {
                    const int off = idx + 1; // 1 .. right
                    crossings.push_back({centre.x + off, centre.y + off});
                    with_centre.push_back({centre.x + off, centre.y + off});
                }
                const ExactInt upper = path_matrix_det(starts, crossings);
                if (upper == 0) return;
                total += upper * path_matrix_det(with_centre, pts.ends);
            });
        });
    }
    return total;
}

} // namespace lozenge
