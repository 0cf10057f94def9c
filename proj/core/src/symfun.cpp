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
#include "lozenge/symfun.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lozenge/matrix.hpp"
#include "subsets.hpp"

namespace lozenge {

EvalPoint EvalPoint::all_ones(std::size_t n) {
    return EvalPoint(std::vector<ExactRational>(n, ExactRational(1)));
}

EvalPoint EvalPoint::from_integers(const std::vector<long> &values) {
    std::vector<ExactRational> out;
    out.reserve(values.size());
    for (long v : values) out.push_back(make_rational(v));
    return EvalPoint(std::move(out));
}

bool EvalPoint::distinct() const {
    std::vector<ExactRational> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

EvalPoint EvalPoint::prefix(std::size_t n) const {
    if (n > values_.size()) throw PreconditionError("prefix longer than point");
    return EvalPoint(std::vector<ExactRational>(values_.begin(),
                                                values_.begin() + static_cast<std::ptrdiff_t>(n)));
}

EvalPoint EvalPoint::with(const ExactRational &extra) const {
    EvalPoint out = *this;
    out.values_.push_back(extra);
    return out;
}

std::string EvalPoint::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << lozenge::to_string(values_[i]);
    }
    os << ')';
    return os.str();
}

std::vector<ExactRational> elementary_syms(const EvalPoint &pts) {
    std::vector<ExactRational> e(pts.size() + 1, ExactRational(0));
    e[0] = 1;
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t s = j + 1; s >= 1; --s) e[s] += e[s - 1] * pts[j];
    return e;
}

ExactRational elementary_sym(int s, const EvalPoint &pts) {
    if (s < 0 || static_cast<std::size_t>(s) > pts.size()) return 0;
    return elementary_syms(pts)[static_cast<std::size_t>(s)];
}

ExactRational vandermonde(const EvalPoint &pts) {
    ExactRational out = 1;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) out *= pts[j] - pts[i];
    return out;
}

ExactRational schur_nk(const Partition &p, const EvalPoint &pts) {
    const auto e = elementary_syms(pts);
    const int n = static_cast<int>(pts.size());
    const Partition conj = conjugate(p);
    const int m = std::max(1, p.largest());
    ExactMatrix jt(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const int s = conj.part(i) - i + j;
            if (s >= 0 && s <= n)
                jt(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                    e[static_cast<std::size_t>(s)];
        }
    }
    return determinant(jt);
}

ExactRational schur_bidet(const Partition &p, const EvalPoint &pts) {
    if (!pts.distinct()) throw PreconditionError("schur_bidet requires distinct points");
    const std::size_t n = pts.size();
    if (static_cast<std::size_t>(p.length()) > n) return 0;
    ExactMatrix num(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto exponent =
            static_cast<unsigned long>(p.part(static_cast<int>(i) + 1)) + n - 1 - i;
        for (std::size_t j = 0; j < n; ++j) num(i, j) = power(pts[j], exponent);
    }
    // det(x_j^{n-i}) = prod_{i<j} (x_i - x_j)
    ExactRational den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) den *= pts[i] - pts[j];
    return determinant(num) / den;
}

ExactRational schur(const Partition &p, const EvalPoint &pts) {
    return pts.distinct() ? schur_bidet(p, pts) : schur_nk(p, pts);
}

namespace {

void require_same_parity(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
    if ((a - b) % 2 != 0) throw PreconditionError("a and b must have the same parity");
}

} // namespace

RabPair rab_pair(int a, int b, const RabIndex &index) {
    require_same_parity(a, b);
    const int half = (a + b) / 2;
    const int k = index.k;
    if (k < 0 || k > a || index.i.size() != static_cast<std::size_t>(a + 1))
        throw PreconditionError("malformed index vector");
    const auto at = [&](int h) { return index.i[static_cast<std::size_t>(h - 1)]; };
    if (at(k + 1) != 0) throw PreconditionError("index vector must vanish at position k+1");
    for (int h = 1; h <= a + 1; ++h) {
        if (at(h) < -half || at(h) > half) throw PreconditionError("index out of range");
        if (h > 1 && at(h - 1) >= at(h)) throw PreconditionError("index vector not increasing");
    }
    const int shift = (b - a) / 2;
    std::vector<int> lambda_conj(static_cast<std::size_t>(a));
    for (int h = 1; h <= a; ++h) {
        const int pos = a + 1 - h + (a + 1 - h >= k + 1 ? 1 : 0);
        lambda_conj[static_cast<std::size_t>(h - 1)] = shift + at(pos) + h;
    }
    std::vector<int> mu_conj(static_cast<std::size_t>(a + 1));
    for (int h = 1; h <= a + 1; ++h)
        mu_conj[static_cast<std::size_t>(h - 1)] = shift - at(h) + h - 1;
    return {from_conjugate(lambda_conj), from_conjugate(mu_conj), index};
}

std::vector<RabPair> generate_rab(int a, int b) {
    require_same_parity(a, b);
    const int half = (a + b) / 2;
    std::vector<RabPair> out;
    for (int k = 0; k <= a; ++k) {
        detail::for_each_subset(half, k, [&](const std::vector<int> &neg) {
            detail::for_each_subset(half, a - k, [&](const std::vector<int> &pos) {
                RabIndex index{k, {}};
                index.i.reserve(static_cast<std::size_t>(a + 1));
                for (int v : neg) index.i.push_back(v - half);
                index.i.push_back(0);
                for (int v : pos) index.i.push_back(v + 1);
                out.push_back(rab_pair(a, b, index));
            });
        });
    }
    return out;
}

bool lemma8_check(int a, int b, const RabPair &pair) {
    require_same_parity(a, b);
    if (pair.lambda.length() > b + 1 || pair.mu.length() > b) return false;
    const int half = (a + b) / 2;
    std::set<int> j_set;
    for (int h = 1; h <= b + 1; ++h) j_set.insert(pair.lambda.part(b + 2 - h) + h - 1);
    std::set<int> j_prime;
    for (int h = 1; h <= b; ++h) j_prime.insert(pair.mu.part(b + 1 - h) + h - 1);
    if (!j_set.contains(half)) return false;
    std::set<int> mirrored;
    for (int j : j_set)
        if (j != half) mirrored.insert(a + b - j);
    return mirrored == j_prime;
}

std::vector<Partition> rect_product_shapes(int s, int t, int m, int n) {
    if (s < 0 || t < 0 || m < 0 || n < 0) throw PreconditionError("negative rectangle");
    if (m > n) throw PreconditionError("rectangle product requires m <= n");
    const int lo = std::max(s, t);
    const int hi = s + t;
    std::vector<Partition> out;
    std::vector<int> head(static_cast<std::size_t>(m));
    const auto emit = [&] {
        std::vector<int> parts(head);
        for (int i = m; i < n; ++i) parts.push_back(t);
        for (int i = m - 1; i >= 0; --i) parts.push_back(hi - head[static_cast<std::size_t>(i)]);
        out.emplace_back(std::move(parts));
    };
    const auto fill = [&](auto &self, int pos, int cap) -> void {
        if (pos == m) {
            emit();
            return;
        }
        for (int v = cap; v >= lo; --v) {
            head[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    fill(fill, 0, hi);
    return out;
}

bool rect_product_decomposition_check(int s, int t, int m, int n, const EvalPoint &pts) {
    const ExactRational lhs =
        schur(Partition::rectangle(s, m), pts) * schur(Partition::rectangle(t, n), pts);
    ExactRational rhs = 0;
    for (const auto &shape : rect_product_shapes(s, t, m, n)) rhs += schur(shape, pts);
    return lhs == rhs;
}

} // namespace lozenge
