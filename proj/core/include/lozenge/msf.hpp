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
 * @brief Minor summation machinery for the Schur function identities.
 *
 * The skew matrices here are indexed by Gamma followed by a barred copy of
 * Gamma, both ascending. Every sign below depends on that ordering.
 */

#pragma once

#include <string>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/matrix.hpp"
#include "lozenge/symfun.hpp"

namespace lozenge {

struct IndexSets {
    int a = 0;
    int b = 0;
    int n = 0;
    std::vector<int> P;
    std::vector<int> Q;
    std::vector<int> R;
    std::vector<int> Gamma;
};

/// Requires a, b positive of equal parity and n >= b.
IndexSets index_sets(int a, int b, int n);

/// Matrix with entry (k, l) = pts_k ^ exponents_l.
ExactMatrix moment_matrix(const std::vector<int> &exponents, const EvalPoint &pts);

/// The exponents lo..hi (empty when hi < lo).
std::vector<int> exponent_range(int lo, int hi);

struct GammaLabel {
    int value = 0;
    bool barred = false;

    friend bool operator==(const GammaLabel &, const GammaLabel &) = default;
};

/// Unbarred Gamma ascending, then barred Gamma ascending.
std::vector<GammaLabel> gamma_labels(int a, int b);

/// The off-diagonal block B: entry (k, a+b-k) is +1 below the centre and -1
/// above it, rows and columns indexed by Gamma.
ExactMatrix gamma_form(int a, int b);

/// [[0, B], [-B^T, 0]] on Gamma followed by barred Gamma.
SkewMatrix structured_skew(int a, int b);

struct IdentitySides {
    ExactRational lhs;
    ExactRational rhs;

    bool holds() const { return lhs == rhs; }
};

/// Sum over (n-q)-subsets K of Pf(A_K) det(G_K | H), against the signed
/// Pfaffian of [[G A G^T, H], [-H^T, 0]].
IdentitySides minor_summation(const ExactMatrix &g, const ExactMatrix &h, const SkewMatrix &a);

struct MsfInstance {
    ExactMatrix G;
    ExactMatrix H;
    SkewMatrix A;
};

/// G = diag(M_P(pts1), M_P(pts0)), H = diag(M_Q(pts1), M_R(pts0)).
MsfInstance build_msf_instance(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0);

/// Closed-form value of the sub-Pfaffian of structured_skew(a, b) on the
/// labels in K. Requires |K| = 2b.
ExactInt sub_pfaffian_sign(const std::vector<GammaLabel> &k, int a, int b);

/// Determinant of [[A, b], [-c^T, d]] against its Pfaffian factorisation.
IdentitySides lemma9_sides(const SkewMatrix &a, const std::vector<ExactRational> &bvec,
                           const std::vector<ExactRational> &cvec, const ExactRational &d);
bool lemma9_check(const SkewMatrix &a, const std::vector<ExactRational> &bvec,
                  const std::vector<ExactRational> &cvec, const ExactRational &d);

/// Sum over R(a, b) of s_lambda(pts1) s_mu(pts0). pts0 must be the first n
/// values of pts1.
ExactRational theorem3_lhs(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0);
/// The product of four rectangular Schur values.
ExactRational theorem3_rhs(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0);

/// Both sides of the three-variable-set product identity at pts2 (size n+2).
IdentitySides conjecture5_sides(int a, int b, int n, const EvalPoint &pts2);
bool conjecture5_check(int a, int b, int n, const EvalPoint &pts2);

/// Sum over R(a, b) against the Pfaffian of the minor summation instance
/// divided by both Vandermonde products.
IdentitySides chain_5_3_sides(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0);
bool chain_5_3_check(int a, int b, int n, const EvalPoint &pts1, const EvalPoint &pts0);

/// M_P(xs) B M_P(ys)^T.
ExactMatrix n_matrix(int a, int b, int n, const EvalPoint &xs, const EvalPoint &ys);

/// Checks n_matrix against its closed entry formula. Requires xs_i != ys_j.
bool n_matrix_entry_check(int a, int b, int n, const EvalPoint &xs, const EvalPoint &ys);

struct NamedSides {
    std::string name;
    IdentitySides sides;
};

/// The two Pfaffian evaluations for the parity of (a, b), each against its
/// signed determinant ratio. pts has size n+1; its first n values form X_n.
std::vector<NamedSides> lemma10_sides(int a, int b, int n, const EvalPoint &pts);
bool lemma10_check(int a, int b, int n, const EvalPoint &pts);

} // namespace lozenge
