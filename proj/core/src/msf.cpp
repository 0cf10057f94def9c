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
#include "lozenge/msf.hpp"

#include <algorithm>

#include "lozenge/partition.hpp"
#include "subsets.hpp"

namespace lozenge {

namespace {

void require_same_parity(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("a and b must be positive");
    if ((a - b) % 2 != 0) throw PreconditionError("a and b must have the same parity");
}

ExactRational sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::vector<std::size_t> to_indices(const std::vector<int> &v) {
    return {v.begin(), v.end()};
}

ExactMatrix column(const std::vector<ExactRational> &v) {
    ExactMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

void require_nested(int n, const EvalPoint &pts1, const EvalPoint &pts0) {
    if (n < 1) throw PreconditionError("n must be positive");
    if (pts1.size() != static_cast<std::size_t>(n) + 1 || pts0.size() != static_cast<std::size_t>(n))
        throw PreconditionError("expected n+1 and n points");
    if (pts1.prefix(static_cast<std::size_t>(n)) != pts0)
        throw PreconditionError("the n points must be the first n of the n+1 points");
}

int ceil_half(int v) { return (v + 1) / 2; }
int floor_half(int v) { return v / 2; }

} // namespace

IndexSets index_sets(int a, int b, int n) {
    require_same_parity(a, b);
    if (n < b) throw PreconditionError("index sets require n >= b");
    const int half = (a + b) / 2;
    IndexSets s{a, b, n, {}, {}, {}, {}};
    for (int k = 0; k <= a + b; ++k) {
        if (k == half) continue;
        s.Gamma.push_back(k);
        s.P.push_back(n - b + k);
    }
    for (int k = 0; k < n - b; ++k) s.R.push_back(k);
    s.Q = s.R;
    s.Q.push_back(n - b + half);
    return s;
}

ExactMatrix moment_matrix(const std::vector<int> &exponents, const EvalPoint &pts) {
    ExactMatrix m(pts.size(), exponents.size());
    for (std::size_t l = 0; l < exponents.size(); ++l) {
        if (exponents[l] < 0) throw PreconditionError("negative exponent");
        for (std::size_t k = 0; k < pts.size(); ++k)
            m(k, l) = power(pts[k], static_cast<unsigned long>(exponents[l]));
    }
    return m;
}

std::vector<int> exponent_range(int lo, int hi) {
    std::vector<int> out;
    for (int e = lo; e <= hi; ++e) out.push_back(e);
    return out;
}

std::vector<GammaLabel> gamma_labels(int a, int b) {
    require_same_parity(a, b);
    const int half = (a + b) / 2;
    std::vector<GammaLabel> out;
    for (bool barred : {false, true})
        for (int k = 0; k <= a + b; ++k)
            if (k != half) out.push_back({k, barred});
    return out;
}

ExactMatrix gamma_form(int a, int b) {
    require_same_parity(a, b);
    const int half = (a + b) / 2;
    const auto pos = [half](int v) { return static_cast<std::size_t>(v < half ? v : v - 1); };
    const auto p = static_cast<std::size_t>(a + b);
    ExactMatrix m(p, p);
    for (int k = 0; k <= a + b; ++k)
        if (k != half) m(pos(k), pos(a + b - k)) = k < half ? 1 : -1;
    return m;
}

SkewMatrix structured_skew(int a, int b) {
    const ExactMatrix blk = gamma_form(a, b);
    return bordered_skew(SkewMatrix::zero(blk.rows()), blk);
}

IdentitySides minor_summation(const ExactMatrix &g, const ExactMatrix &h, const SkewMatrix &a) {
    const std::size_t n = g.rows();
    const std::size_t p = g.cols();
    const std::size_t q = h.cols();
    if (h.rows() != n) throw PreconditionError("G and H must have the same row count");
    if (a.size() != p) throw PreconditionError("A must match the column count of G");
    if ((n + q) % 2 != 0) throw PreconditionError("n + q must be even");
    if (q > n || n - q > p) throw PreconditionError("need 0 <= n - q <= p");

    IdentitySides out{0, 0};
    detail::for_each_subset(static_cast<int>(p), static_cast<int>(n - q),
                            [&](const std::vector<int> &k) {
                                const auto idx = to_indices(k);
                                const ExactRational pf = pfaffian_minor(a, idx);
                                if (pf == 0) return;
                                out.lhs += pf * determinant(hstack(g.select_columns(idx), h));
                            });
    const auto qi = static_cast<long>(q);
    out.rhs = sign(qi * (qi - 1) / 2) * pfaffian(bordered_skew(congruence(g, a), h));
    return out;
}

MsfInstance build_msf_instance(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0) {
    const IndexSets s = index_sets(a, b, n);
    if (pts1.size() != static_cast<std::size_t>(n) + 1 || pts0.size() != static_cast<std::size_t>(n))
        throw PreconditionError("expected n+1 and n points");
    return {block_diagonal(moment_matrix(s.P, pts1), moment_matrix(s.P, pts0)),
            block_diagonal(moment_matrix(s.Q, pts1), moment_matrix(s.R, pts0)),
            structured_skew(a, b)};
}

ExactInt sub_pfaffian_sign(const std::vector<GammaLabel> &k, int a, int b) {
    require_same_parity(a, b);
    if (k.size() != static_cast<std::size_t>(2 * b))
        throw PreconditionError("subset must have 2b elements");
    const int half = (a + b) / 2;
    std::vector<int> plain;
    std::vector<int> barred;
    for (const auto &label : k) {
        if (label.value < 0 || label.value > a + b || label.value == half)
            throw PreconditionError("label outside Gamma");
        (label.barred ? barred : plain).push_back(label.value);
    }
    if (plain.size() != barred.size()) return 0;
    std::sort(plain.begin(), plain.end());
    std::sort(barred.begin(), barred.end());
    if (std::adjacent_find(plain.begin(), plain.end()) != plain.end() ||
        std::adjacent_find(barred.begin(), barred.end()) != barred.end())
        throw PreconditionError("repeated label");
    int upper = 0;
    const std::size_t m = plain.size();
    for (std::size_t h = 0; h < m; ++h) {
        if (plain[h] + barred[m - 1 - h] != a + b) return 0;
        if (plain[h] >= half + 1) ++upper;
    }
    return upper % 2 == 0 ? 1 : -1;
}

IdentitySides lemma9_sides(const SkewMatrix &a, const std::vector<ExactRational> &bvec,
                           const std::vector<ExactRational> &cvec, const ExactRational &d) {
    const std::size_t n = a.size();
    if (bvec.size() != n || cvec.size() != n) throw PreconditionError("vector length mismatch");
    ExactMatrix tilde(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) tilde(i, j) = a(i, j);
        tilde(i, n) = bvec[i];
        tilde(n, i) = -cvec[i];
    }
    tilde(n, n) = d;

    IdentitySides out{determinant(tilde), 0};
    if (n % 2 == 0) {
        const ExactRational corner[] = {-d};
        out.rhs = -pfaffian(a) *
                  pfaffian(bordered_skew(a, hstack(column(bvec), column(cvec)),
                                         SkewMatrix::from_upper(2, corner)));
    } else {
        out.rhs = pfaffian(bordered_skew(a, column(bvec))) * pfaffian(bordered_skew(a, column(cvec)));
    }
    return out;
}

bool lemma9_check(const SkewMatrix &a, const std::vector<ExactRational> &bvec,
                  const std::vector<ExactRational> &cvec, const ExactRational &d) {
    return lemma9_sides(a, bvec, cvec, d).holds();
}

ExactRational theorem3_lhs(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0) {
    require_same_parity(a, b);
    require_nested(n, pts1, pts0);
    ExactRational total = 0;
    for (const auto &pair : generate_rab(a, b))
        total += schur(pair.lambda, pts1) * schur(pair.mu, pts0);
    return total;
}

ExactRational theorem3_rhs(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0) {
    require_same_parity(a, b);
    require_nested(n, pts1, pts0);
    return schur(Partition::rectangle(ceil_half(a + 1), floor_half(b)), pts0) *
           schur(Partition::rectangle(ceil_half(a), ceil_half(b)), pts0) *
           schur(Partition::rectangle(ceil_half(a), ceil_half(b)), pts1) *
           schur(Partition::rectangle(floor_half(a), ceil_half(b + 1)), pts1);
}

IdentitySides conjecture5_sides(int a, int b, int n, const EvalPoint &pts2) {
    require_same_parity(a, b);
    if (n < 1) throw PreconditionError("n must be positive");
    const auto un = static_cast<std::size_t>(n);
    if (pts2.size() != un + 2) throw PreconditionError("expected n+2 points");
    const EvalPoint xn = pts2.prefix(un);
    const EvalPoint with_first = pts2.prefix(un + 1);
    const EvalPoint with_second = xn.with(pts2[un + 1]);

    IdentitySides out{0, 0};
    for (const auto &pair : generate_rab(a, b))
        out.lhs += schur(pair.lambda, pts2) * schur(pair.mu, xn);
    out.rhs = schur(Partition::rectangle(ceil_half(a + 1), floor_half(b)), xn) *
              schur(Partition::rectangle(ceil_half(a), ceil_half(b)), with_first) *
              schur(Partition::rectangle(ceil_half(a), ceil_half(b)), with_second) *
              schur(Partition::rectangle(floor_half(a), ceil_half(b + 1)), pts2);
    return out;
}

bool conjecture5_check(int a, int b, int n, const EvalPoint &pts2) {
    return conjecture5_sides(a, b, n, pts2).holds();
}

IdentitySides chain_5_3_sides(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0) {
    require_same_parity(a, b);
    require_nested(n, pts1, pts0);
    if (!pts1.distinct()) throw PreconditionError("points must be distinct");
    const MsfInstance inst = build_msf_instance(a, b, n, pts1, pts0);
    const ExactRational pf = pfaffian(bordered_skew(congruence(inst.G, inst.A), inst.H));
    const long e = static_cast<long>(b) * n + n - b;
    return {theorem3_lhs(a, b, n, pts1, pts0),
            sign(e) * pf / (vandermonde(pts1) * vandermonde(pts0))};
}

bool chain_5_3_check(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0) {
    return chain_5_3_sides(a, b, n, pts1, pts0).holds();
}

ExactMatrix n_matrix(int a, int b, int n, const EvalPoint &xs, const EvalPoint &ys) {
    const IndexSets s = index_sets(a, b, n);
    return moment_matrix(s.P, xs) * gamma_form(a, b) * moment_matrix(s.P, ys).transposed();
}

bool n_matrix_entry_check(int a, int b, int n, const EvalPoint &xs, const EvalPoint &ys) {
    const ExactMatrix nm = n_matrix(a, b, n, xs, ys);
    const auto h = static_cast<unsigned long>((a + b) / 2);
    const auto base = static_cast<unsigned long>(n - b);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const ExactRational &x = xs[i];
            const ExactRational &y = ys[j];
            if (x == y) throw PreconditionError("entry formula requires x_i != y_j");
            const ExactRational expected = power(x, base) * power(y, base) *
                                           (power(y, h) - power(x, h)) *
                                           (power(y, h + 1) - power(x, h + 1)) / (y - x);
            if (nm(i, j) != expected) return false;
        }
    }
    return true;
}

namespace {

// sgn / Delta(pts) * det(M_[0,e1] | M_[lo1,hi1]) * det(M_[0,e2] | M_[lo2,hi2])
ExactRational determinant_ratio(long sgn_exponent, const EvalPoint &pts, int e1, int lo1, int hi1,
                                int e2, int lo2, int hi2) {
    const auto block = [&](int e, int lo, int hi) {
        return determinant(hstack(moment_matrix(exponent_range(0, e), pts),
                                  moment_matrix(exponent_range(lo, hi), pts)));
    };
    return sign(sgn_exponent) / vandermonde(pts) * block(e1, lo1, hi1) * block(e2, lo2, hi2);
}

ExactRational bordered_n_pfaffian(int a, int b, int n, const EvalPoint &pts,
                                  const std::vector<int> &border) {
    const SkewMatrix core(n_matrix(a, b, n, pts, pts));
    return pfaffian(bordered_skew(core, moment_matrix(border, pts)));
}

} // namespace

std::vector<NamedSides> lemma10_sides(int a, int b, int n, const EvalPoint &pts) {
    const IndexSets s = index_sets(a, b, n);
    const auto un = static_cast<std::size_t>(n);
    if (pts.size() != un + 1) throw PreconditionError("expected n+1 points");
    if (!pts.distinct()) throw PreconditionError("points must be distinct");
    const EvalPoint xn = pts.prefix(un);
    const long nb = n - b;

    std::vector<NamedSides> out;
    if (a % 2 == 0) {
        const int ha = a / 2;
        const int hb = b / 2;
        out.push_back({"R on X_n",
                       {bordered_n_pfaffian(a, b, n, xn, s.R),
                        determinant_ratio(b * nb + nb * (nb - 1) / 2, xn, n - hb - 1,
                                          n + ha - hb, n + ha - 1, n - hb - 1,
                                          n + ha - hb + 1, n + ha)}});
        out.push_back({"Q on X_n+1",
                       {bordered_n_pfaffian(a, b, n, pts, s.Q),
                        determinant_ratio(b * nb + hb + (nb + 1) * nb / 2, pts, n - hb,
                                          n + ha - hb + 1, n + ha, n - hb - 1, n + ha - hb,
                                          n + ha)}});
    } else {
        const int am = (a - 1) / 2;
        const int ap = (a + 1) / 2;
        const int bm = (b - 1) / 2;
        const int bp = (b + 1) / 2;
        out.push_back({"Q on X_n",
                       {bordered_n_pfaffian(a, b, n, xn, s.Q),
                        determinant_ratio((b - 1) * nb + bm + (nb + 1) * nb / 2, xn,
                                          n - bm - 1, n + ap - bm, n + ap - 1, n - bp - 1,
                                          n + ap - bp, n + ap - 1)}});
        out.push_back({"R on X_n+1",
                       {bordered_n_pfaffian(a, b, n, pts, s.R),
                        determinant_ratio((b + 1) * nb + nb * (nb - 1) / 2, pts, n - bp,
                                          n + am - bp + 1, n + am, n - bp, n + ap - bp + 1,
                                          n + ap)}});
    }
    return out;
}

bool lemma10_check(int a, int b, int n, const EvalPoint &pts) {
    const auto sides = lemma10_sides(a, b, n, pts);
    return std::all_of(sides.begin(), sides.end(),
                       [](const NamedSides &s) { return s.sides.holds(); });
}

} // namespace lozenge
