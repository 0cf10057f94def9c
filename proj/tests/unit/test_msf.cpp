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
#include <doctest.h>

#include "lozenge/boxcount.hpp"
#include "lozenge/msf.hpp"
#include "lozenge/sampling.hpp"
#include "oracles.hpp"
#include "subset_walk.hpp"

using namespace lozenge;

namespace {

EvalPoint ints(std::initializer_list<long> v) { return EvalPoint::from_integers(v); }

std::vector<ExactRational> random_vector(std::size_t n, SeededRng &rng) {
    std::vector<ExactRational> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.uniform(-3, 3));
    return v;
}

} // namespace

TEST_CASE("moment matrices") {
    CHECK(moment_matrix({0, 1}, ints({2, 3})) == ExactMatrix{{1, 2}, {1, 3}});
    const auto empty = moment_matrix({}, ints({2, 3}));
    CHECK(empty.rows() == 2);
    CHECK(empty.cols() == 0);
    CHECK(moment_matrix({2}, ints({5})) == ExactMatrix{{25}});
    CHECK_THROWS_AS(moment_matrix({-1}, ints({5})), PreconditionError);
    CHECK(exponent_range(2, 4) == std::vector<int>{2, 3, 4});
    CHECK(exponent_range(3, 2).empty());
    CHECK(determinant(moment_matrix(exponent_range(0, 2), ints({2, 3, 7}))) ==
          vandermonde(ints({2, 3, 7})));
}

TEST_CASE("index sets") {
    const IndexSets s = index_sets(1, 1, 1);
    CHECK(s.P == std::vector<int>{0, 2});
    CHECK(s.Q == std::vector<int>{1});
    CHECK(s.R.empty());
    CHECK(s.Gamma == std::vector<int>{0, 2});

    const IndexSets t = index_sets(2, 4, 6);
    CHECK(t.P == std::vector<int>{2, 3, 4, 6, 7, 8});
    CHECK(t.Q == std::vector<int>{0, 1, 5});
    CHECK(t.R == std::vector<int>{0, 1});
    CHECK(t.Gamma == std::vector<int>{0, 1, 2, 4, 5, 6});

    CHECK_THROWS_AS(index_sets(1, 3, 2), PreconditionError);
    CHECK_THROWS_AS(index_sets(1, 2, 3), PreconditionError);
}

TEST_CASE("structured skew matrix") {
    const SkewMatrix a = structured_skew(1, 1);
    // Labels 0, 2, bar 0, bar 2.
    CHECK(a.matrix() == ExactMatrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
    const auto labels = gamma_labels(1, 1);
    CHECK(labels == std::vector<GammaLabel>{{0, false}, {2, false}, {0, true}, {2, true}});
    const ExactMatrix blk = gamma_form(2, 2);
    CHECK(is_skew_symmetric(blk));
    CHECK(blk(0, 3) == 1);
    CHECK(blk(1, 2) == 1);
    CHECK(blk(3, 0) == -1);
}

TEST_CASE("minor summation examples") {
    SeededRng rng(1);
    const ExactMatrix g = random_integer_matrix(2, 2, -3, 3, rng);
    const ExactRational one[] = {1};
    const IdentitySides s = minor_summation(g, ExactMatrix(2, 0), SkewMatrix::from_upper(2, one));
    CHECK(s.lhs == determinant(g));
    CHECK(s.holds());

    const ExactMatrix h = random_integer_matrix(2, 2, -3, 3, rng);
    const IdentitySides t = minor_summation(ExactMatrix(2, 3), h, random_skew(3, -3, 3, rng));
    CHECK(t.lhs == determinant(h));
    CHECK(t.holds());

    SeededRng seeded(42);
    const auto g3 = random_integer_matrix(3, 4, -3, 3, seeded);
    const auto h3 = random_integer_matrix(3, 1, -3, 3, seeded);
    const auto a4 = random_skew(4, -3, 3, seeded);
    CHECK(minor_summation(g3, h3, a4).holds());

    CHECK_THROWS_AS(minor_summation(ExactMatrix(3, 2), ExactMatrix(3, 0), SkewMatrix::zero(2)),
                    PreconditionError);
    CHECK_THROWS_AS(minor_summation(ExactMatrix(4, 1), ExactMatrix(4, 0), SkewMatrix::zero(1)),
                    PreconditionError);
}

TEST_CASE("minor summation on random instances") {
    SeededRng rng(50);
    int done = 0;
    while (done < 50) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto q = static_cast<std::size_t>(rng.uniform(0, 2));
        if ((n + q) % 2 != 0 || q > n) continue;
        const auto p = static_cast<std::size_t>(rng.uniform(static_cast<long>(n - q), 6));
        const auto g = random_integer_matrix(n, p, -3, 3, rng);
        const auto h = random_integer_matrix(n, q, -3, 3, rng);
        const auto a = random_skew(p, -3, 3, rng);
        const IdentitySides s = minor_summation(g, h, a);
        CHECK(s.holds());
        CHECK(s.rhs == ((q * (q - 1) / 2) % 2 ? -1 : 1) *
                           oracle::pfaffian_by_expansion(bordered_skew(congruence(g, a), h).matrix()));
        ++done;
    }
}

TEST_CASE("minor summation instance dimensions") {
    for (int n : {1, 2, 3}) {
        const EvalPoint pts1 = ints({2, 3, 5, 7}).prefix(static_cast<std::size_t>(n) + 1);
        const MsfInstance inst = build_msf_instance(1, 1, n, pts1, pts1.prefix(static_cast<std::size_t>(n)));
        CHECK(inst.G.rows() == static_cast<std::size_t>(2 * n + 1));
        CHECK(inst.G.cols() == 4);
        CHECK(inst.H.rows() == static_cast<std::size_t>(2 * n + 1));
        CHECK(inst.H.cols() == static_cast<std::size_t>(2 * (n - 1) + 1));
        CHECK(inst.A.size() == 4);
    }
    CHECK_THROWS_AS(build_msf_instance(3, 3, 2, ints({1, 2, 3}), ints({1, 2})), PreconditionError);
    CHECK_THROWS_AS(build_msf_instance(1, 1, 1, ints({1}), ints({1})), PreconditionError);
}

TEST_CASE("sub-Pfaffian closed form examples") {
    CHECK(sub_pfaffian_sign({{0, false}, {2, true}}, 1, 1) == 1);
    CHECK(sub_pfaffian_sign({{2, false}, {0, true}}, 1, 1) == -1);
    CHECK(sub_pfaffian_sign({{0, false}, {2, false}}, 1, 1) == 0);
    CHECK(sub_pfaffian_sign({{0, false}, {0, true}}, 1, 1) == 0);
    CHECK_THROWS_AS(sub_pfaffian_sign({{0, false}}, 1, 1), PreconditionError);
    CHECK_THROWS_AS(sub_pfaffian_sign({{1, false}, {1, true}}, 1, 1), PreconditionError);
}

TEST_CASE("sub-Pfaffian closed form matches the Pfaffian minors") {
    for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 4}}) {
        const SkewMatrix m = structured_skew(a, b);
        const auto labels = gamma_labels(a, b);
        int nonzero = 0;
        test::for_each_subset(static_cast<int>(labels.size()), 2 * b, [&](const std::vector<int> &k) {
            std::vector<std::size_t> idx(k.begin(), k.end());
            std::vector<GammaLabel> chosen;
            for (int i : k) chosen.push_back(labels[static_cast<std::size_t>(i)]);
            const ExactInt closed = sub_pfaffian_sign(chosen, a, b);
            CHECK(ExactRational(closed) == pfaffian_minor(m, idx));
            nonzero += closed != 0;
        });
        CHECK(ExactInt(nonzero) == binomial(a + b, b));
    }
}

TEST_CASE("bordered determinant factorization examples") {
    const ExactRational one[] = {1};
    CHECK(lemma9_check(SkewMatrix::from_upper(2, one), {1, 0}, {0, 1}, 5));
    const auto sides = lemma9_sides(SkewMatrix::zero(1), {3}, {4}, 9);
    CHECK(sides.lhs == 12);
    CHECK(sides.holds());
    SeededRng rng(7);
    for (std::size_t n : {3, 4}) {
        const auto a = random_skew(n, -3, 3, rng);
        CHECK(lemma9_check(a, random_vector(n, rng), random_vector(n, rng), rng.uniform(-3, 3)));
    }
    CHECK(lemma9_check(SkewMatrix{}, {}, {}, 4));
    CHECK_THROWS_AS(lemma9_check(SkewMatrix::zero(2), {1}, {1, 2}, 0), PreconditionError);
}

TEST_CASE("bordered determinant factorization on random instances") {
    SeededRng rng(9);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 50; ++t) {
            const auto a = random_skew(n, -3, 3, rng);
            CHECK(lemma9_check(a, random_vector(n, rng), random_vector(n, rng), rng.uniform(-3, 3)));
        }
}

TEST_CASE("product identity examples") {
    CHECK(theorem3_lhs(1, 1, 1, ints({2, 3}), ints({2})) == 10);
    CHECK(theorem3_rhs(1, 1, 1, ints({2, 3}), ints({2})) == 10);
    CHECK(theorem3_lhs(1, 1, 1, EvalPoint::all_ones(2), EvalPoint::all_ones(1)) == 2);
    CHECK(theorem3_rhs(1, 1, 1, EvalPoint::all_ones(2), EvalPoint::all_ones(1)) == 2);
    CHECK(theorem3_lhs(2, 2, 2, EvalPoint::all_ones(3), EvalPoint::all_ones(2)) == 54);
    CHECK(theorem3_rhs(2, 2, 2, EvalPoint::all_ones(3), EvalPoint::all_ones(2)) == 54);
    CHECK_THROWS_AS(theorem3_lhs(1, 2, 1, ints({2, 3}), ints({2})), PreconditionError);
    CHECK_THROWS_AS(theorem3_lhs(1, 1, 1, ints({2, 3}), ints({3})), PreconditionError);
    CHECK_THROWS_AS(theorem3_rhs(1, 1, 2, ints({2, 3}), ints({2})), PreconditionError);
}

TEST_CASE("product identity on a sweep") {
    SeededRng rng(33);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            if ((a - b) % 2 != 0) continue;
            for (int n = 1; n <= b + 2; ++n) {
                const EvalPoint pts = random_distinct_points(static_cast<std::size_t>(n) + 1, rng);
                const EvalPoint xn = pts.prefix(static_cast<std::size_t>(n));
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(n);
                CHECK(theorem3_lhs(a, b, n, pts, xn) == theorem3_rhs(a, b, n, pts, xn));
            }
        }
}

TEST_CASE("principal specialization gives the central puncture count") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                if ((a - b) % 2 != 0 || (a - c) % 2 != 0) continue;
                const int n = (b + c) / 2;
                const auto ones = EvalPoint::all_ones(static_cast<std::size_t>(n));
                CHECK(theorem3_lhs(a, b, n, ones.with(1), ones) == theorem1_count(a, b, c));
            }
}

TEST_CASE("setting the last variable to zero gives the offset puncture count") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 5; ++c) {
                if ((a - b) % 2 != 0 || (a - c) % 2 == 0) continue;
                const int n = (b + c + 1) / 2;
                const auto ones = EvalPoint::all_ones(static_cast<std::size_t>(n));
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(theorem3_lhs(a, b, n, ones.with(0), ones) == theorem4_count(a, b, c));
                CHECK(theorem3_rhs(a, b, n, ones.with(0), ones) == theorem4_count(a, b, c));
            }
}

TEST_CASE("three-set product examples") {
    const auto sides = conjecture5_sides(1, 1, 1, ints({2, 3, 5}));
    CHECK(sides.lhs == 35);
    CHECK(sides.rhs == 35);
    SeededRng rng11(11);
    CHECK(conjecture5_check(2, 2, 1, random_distinct_points(3, rng11)));
    SeededRng rng12(12);
    CHECK(conjecture5_check(3, 3, 2, random_distinct_points(4, rng12)));
    CHECK_THROWS_AS(conjecture5_check(1, 1, 1, ints({2, 3})), PreconditionError);
}

TEST_CASE("Pfaffian chain examples") {
    CHECK(chain_5_3_check(1, 1, 2, ints({2, 3, 5}), ints({2, 3})));
    CHECK(chain_5_3_check(2, 2, 2, ints({1, 2, 7}), ints({1, 2})));
    SeededRng rng(13);
    const EvalPoint pts = random_distinct_points(4, rng);
    CHECK(chain_5_3_check(1, 3, 3, pts, pts.prefix(3)));
    CHECK_THROWS_AS(chain_5_3_check(1, 1, 1, ints({2, 2}), ints({2})), PreconditionError);
}

TEST_CASE("N matrix entries") {
    CHECK(n_matrix_entry_check(1, 1, 1, ints({2}), ints({3})));
    CHECK(n_matrix(1, 1, 1, ints({2}), ints({3})) == ExactMatrix{{5}});
    CHECK(n_matrix_entry_check(2, 2, 3, ints({1, 2, 3}), ints({5, 7, 11})));
    CHECK(n_matrix_entry_check(3, 1, 4, ints({-1, 4}), EvalPoint{make_rational(1, 2)}));
    CHECK_THROWS_AS(n_matrix_entry_check(1, 1, 1, ints({2, 3}), ints({2, 3})), PreconditionError);
}

TEST_CASE("Pfaffian evaluation examples") {
    CHECK(lemma10_check(2, 2, 2, ints({2, 3, 5})));
    CHECK(lemma10_check(1, 1, 1, ints({2, 3})));
    CHECK(lemma10_check(1, 1, 2, ints({2, 3, 5})));
    CHECK(lemma10_check(3, 3, 3, ints({1, 2, 3, 4})));
    CHECK(lemma10_sides(2, 2, 2, ints({2, 3, 5})).size() == 2);
    CHECK_THROWS_AS(lemma10_check(1, 1, 1, ints({2})), PreconditionError);
    CHECK_THROWS_AS(lemma10_check(1, 1, 1, ints({2, 2})), PreconditionError);
}

TEST_CASE("Pfaffian chain and evaluations on a sweep") {
    SeededRng rng(17);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            if ((a - b) % 2 != 0) continue;
            for (int n = b; n <= b + 2; ++n)
                for (int t = 0; t < 2; ++t) {
                    const EvalPoint pts = random_distinct_points(static_cast<std::size_t>(n) + 1, rng);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(n);
                    CHECK(chain_5_3_check(a, b, n, pts, pts.prefix(static_cast<std::size_t>(n))));
                    CHECK(lemma10_check(a, b, n, pts));
                    CHECK(n_matrix_entry_check(a, b, n, pts.prefix(static_cast<std::size_t>(n)),
                                               ints({100, 101})));
                }
        }
}
