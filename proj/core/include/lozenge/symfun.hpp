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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/partition.hpp"

namespace lozenge {

/// A finite list of variable values x_1..x_n. Repeated values are allowed;
/// operations that divide by the Vandermonde reject them.
class EvalPoint {
public:
    EvalPoint() = default;
    explicit EvalPoint(std::vector<ExactRational> values) : values_(std::move(values)) {}
    EvalPoint(std::initializer_list<ExactRational> values) : values_(values) {}

    static EvalPoint all_ones(std::size_t n);
    static EvalPoint from_integers(const std::vector<long> &values);

    std::size_t size() const { return values_.size(); }
    const std::vector<ExactRational> &values() const { return values_; }
    const ExactRational &operator[](std::size_t i) const { return values_[i]; }

    bool distinct() const;

    /// The first n values.
    EvalPoint prefix(std::size_t n) const;
    /// A copy with one more value appended.
    EvalPoint with(const ExactRational &extra) const;

    std::string to_string() const;

    friend bool operator==(const EvalPoint &, const EvalPoint &) = default;

private:
    std::vector<ExactRational> values_;
};

/// e_s(pts); zero for s < 0 or s > n.
ExactRational elementary_sym(int s, const EvalPoint &pts);

/// e_0..e_n at pts.
std::vector<ExactRational> elementary_syms(const EvalPoint &pts);

/// prod_{i<j} (x_j - x_i).
ExactRational vandermonde(const EvalPoint &pts);

/// Schur function via the dual Jacobi-Trudi determinant det(e_{p'_i - i + j})
/// of size max(1, largest part). Works for repeated points.
ExactRational schur_nk(const Partition &p, const EvalPoint &pts);

/// Schur function as the ratio det(x_j^{p_i + n - i}) / det(x_j^{n - i}).
/// Zero when the partition has more than n parts. Throws PreconditionError
/// on repeated points.
ExactRational schur_bidet(const Partition &p, const EvalPoint &pts);

/// schur_bidet for distinct points, schur_nk otherwise.
ExactRational schur(const Partition &p, const EvalPoint &pts);

/// Index vector (k; i_1..i_{a+1}) with i_{k+1} = 0. Stored 0-based, so
/// i[k] == 0.
struct RabIndex {
    int k = 0;
    std::vector<int> i;

    friend bool operator==(const RabIndex &, const RabIndex &) = default;
};

struct RabPair {
    Partition lambda;
    Partition mu;
    RabIndex source;
};

/// Maps an index vector to its partition pair. Throws PreconditionError if
/// the index is malformed for (a, b).
RabPair rab_pair(int a, int b, const RabIndex &index);

/// All pairs of R(a, b) ordered by k, then negative subset (colex), then
/// positive subset (colex).
std::vector<RabPair> generate_rab(int a, int b);

/// Structural check on the J, J' sets built from a pair.
bool lemma8_check(int a, int b, const RabPair &pair);

/// Shapes appearing in the expansion of s_{(s^m)} s_{(t^n)}.
std::vector<Partition> rect_product_shapes(int s, int t, int m, int n);

/// Compares s_{(s^m)} s_{(t^n)} with the sum over rect_product_shapes at pts.
bool rect_product_decomposition_check(int s, int t, int m, int n, const EvalPoint &pts);

} // namespace lozenge
