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
 * @brief Dense exact matrices, determinants and Pfaffians.
 *
 * Determinants clear row denominators and run Bareiss elimination over the
 * integers. Pfaffians use skew-symmetric Gaussian elimination over the
 * rationals: each step pivots on a 2x2 block and takes the Schur complement,
 * which stays skew-symmetric.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lozenge/exact.hpp"

namespace lozenge {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::initializer_list<std::initializer_list<ExactRational>> rows);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    ExactRational &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const ExactRational &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    /// Row-major view.
    std::span<const ExactRational> entries() const { return entries_; }

    ExactMatrix transposed() const;
    ExactMatrix operator-() const;

    /// Submatrix keeping the listed columns (in the given order).
    ExactMatrix select_columns(std::span<const std::size_t> columns) const;
    /// Principal submatrix on the listed indices.
    ExactMatrix principal(std::span<const std::size_t> indices) const;

    std::string to_string() const;

    friend bool operator==(const ExactMatrix &, const ExactMatrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExactRational> entries_;
};

ExactMatrix operator*(const ExactMatrix &lhs, const ExactMatrix &rhs);
ExactMatrix operator+(const ExactMatrix &lhs, const ExactMatrix &rhs);

/// [lhs | rhs]; row counts must agree.
ExactMatrix hstack(const ExactMatrix &lhs, const ExactMatrix &rhs);
/// [top ; bottom]; column counts must agree.
ExactMatrix vstack(const ExactMatrix &top, const ExactMatrix &bottom);
ExactMatrix block_diagonal(const ExactMatrix &upper, const ExactMatrix &lower);

/// Square matrix with entry(i,j) = -entry(j,i) and a zero diagonal.
class SkewMatrix {
public:
    SkewMatrix() = default;
    /// Throws PreconditionError when \p m is not skew-symmetric.
    explicit SkewMatrix(ExactMatrix m);
    /// Builds from the strict upper triangle, listed row by row.
    static SkewMatrix from_upper(std::size_t n, std::span<const ExactRational> upper);
    static SkewMatrix zero(std::size_t n);

    std::size_t size() const { return m_.rows(); }
    const ExactRational &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const ExactMatrix &matrix() const { return m_; }

    SkewMatrix principal(std::span<const std::size_t> indices) const;

private:
    ExactMatrix m_;
};

bool is_skew_symmetric(const ExactMatrix &m);

/// [[core, border], [-border^T, corner]]. \p corner must be skew of size
/// border.cols(); pass an empty SkewMatrix for a zero corner.
SkewMatrix bordered_skew(const SkewMatrix &core, const ExactMatrix &border,
                         const SkewMatrix &corner = {});

/// G A G^T for skew A.
SkewMatrix congruence(const ExactMatrix &g, const SkewMatrix &a);

/// Exact determinant; 1 for the empty matrix. Throws on non-square input.
ExactRational determinant(const ExactMatrix &m);

/// Exact Pfaffian; 1 for the empty matrix, 0 for odd dimension.
ExactRational pfaffian(const SkewMatrix &m);

/// Pfaffian of the principal submatrix on \p indices (0-based, strictly
/// increasing). The empty index set gives 1.
ExactRational pfaffian_minor(const SkewMatrix &m, std::span<const std::size_t> indices);

} // namespace lozenge
