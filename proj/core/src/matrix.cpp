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
#include "lozenge/matrix.hpp"

#include <sstream>
#include <utility>

namespace lozenge {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<ExactRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix neg(*this);
    for (auto &e : neg.entries_) e = -e;
    return neg;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> columns) const {
    ExactMatrix out(rows_, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] >= cols_) throw PreconditionError("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, columns[j]);
    }
    return out;
}

ExactMatrix ExactMatrix::principal(std::span<const std::size_t> indices) const {
    ExactMatrix out(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= rows_ || indices[i] >= cols_)
            throw PreconditionError("principal index out of range");
        for (std::size_t j = 0; j < indices.size(); ++j)
            out(i, j) = (*this)(indices[i], indices[j]);
    }
    return out;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

ExactMatrix operator*(const ExactMatrix &lhs, const ExactMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) throw PreconditionError("matrix product shape mismatch");
    ExactMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const ExactRational &a = lhs(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ExactMatrix operator+(const ExactMatrix &lhs, const ExactMatrix &rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw PreconditionError("matrix sum shape mismatch");
    ExactMatrix out(lhs);
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) += rhs(i, j);
    return out;
}

ExactMatrix hstack(const ExactMatrix &lhs, const ExactMatrix &rhs) {
    if (lhs.rows() != rhs.rows()) throw PreconditionError("hstack row mismatch");
    ExactMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
        for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, lhs.cols() + j) = rhs(i, j);
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix &top, const ExactMatrix &bottom) {
    if (top.cols() != bottom.cols()) throw PreconditionError("vstack column mismatch");
    ExactMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < top.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
    }
    return out;
}

ExactMatrix block_diagonal(const ExactMatrix &upper, const ExactMatrix &lower) {
    ExactMatrix out(upper.rows() + lower.rows(), upper.cols() + lower.cols());
    for (std::size_t i = 0; i < upper.rows(); ++i)
        for (std::size_t j = 0; j < upper.cols(); ++j) out(i, j) = upper(i, j);
    for (std::size_t i = 0; i < lower.rows(); ++i)
        for (std::size_t j = 0; j < lower.cols(); ++j)
            out(upper.rows() + i, upper.cols() + j) = lower(i, j);
    return out;
}

bool is_skew_symmetric(const ExactMatrix &m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(m(i, i)) != 0) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    }
    return true;
}

SkewMatrix::SkewMatrix(ExactMatrix m) : m_(std::move(m)) {
    if (!is_skew_symmetric(m_)) throw PreconditionError("matrix is not skew-symmetric");
}

SkewMatrix SkewMatrix::from_upper(std::size_t n, std::span<const ExactRational> upper) {
    if (upper.size() != n * (n - (n ? 1 : 0)) / 2)
        throw PreconditionError("upper triangle has the wrong number of entries");
    ExactMatrix m(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = upper[next++];
            m(j, i) = -m(i, j);
        }
    return SkewMatrix(std::move(m));
}

SkewMatrix SkewMatrix::zero(std::size_t n) { return SkewMatrix(ExactMatrix(n, n)); }

SkewMatrix SkewMatrix::principal(std::span<const std::size_t> indices) const {
    return SkewMatrix(m_.principal(indices));
}

SkewMatrix bordered_skew(const SkewMatrix &core, const ExactMatrix &border,
                         const SkewMatrix &corner) {
    const std::size_t n = core.size();
    const std::size_t q = border.cols();
    if (border.rows() != n) throw PreconditionError("border must have as many rows as the core");
    if (corner.size() != 0 && corner.size() != q)
        throw PreconditionError("corner size must match the border width");
    ExactMatrix m(n + q, n + q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = core(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            m(i, n + j) = border(i, j);
            m(n + j, i) = -border(i, j);
        }
    if (corner.size() != 0)
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) m(n + i, n + j) = corner(i, j);
    return SkewMatrix(std::move(m));
}

SkewMatrix congruence(const ExactMatrix &g, const SkewMatrix &a) {
    return SkewMatrix(g * a.matrix() * g.transposed());
}

ExactRational determinant(const ExactMatrix &m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row, remembering the scale.
    std::vector<ExactInt> a(n * n);
    ExactInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        ExactInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    // Bareiss: every division below is exact.
    int sign = 1;
    ExactInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        const ExactInt &pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ExactInt &target = a[i * n + j];
                target = target * pivot - a[i * n + k] * a[k * n + j];
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    ExactRational det(a[n * n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

ExactRational pfaffian(const SkewMatrix &skew) {
    const std::size_t n = skew.size();
    if (n == 0) return 1;
    if (n % 2 == 1) return 0;

    ExactMatrix a = skew.matrix();
    ExactRational result = 1;
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t pivot = k + 1;
        while (pivot < n && sgn(a(k, pivot)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k + 1) {
            // Simultaneous row/column transposition flips the sign.
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(pivot, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, pivot));
            result = -result;
        }
        const ExactRational p = a(k, k + 1);
        result *= p;
        for (std::size_t i = k + 2; i < n; ++i) {
            if (sgn(a(k, i)) == 0 && sgn(a(k + 1, i)) == 0) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                a(i, j) += (a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j)) / p;
                a(j, i) = -a(i, j);
            }
        }
    }
    return result;
}

ExactRational pfaffian_minor(const SkewMatrix &m, std::span<const std::size_t> indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= m.size()) throw PreconditionError("Pfaffian minor index out of range");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw PreconditionError("Pfaffian minor indices must be strictly increasing");
    }
    return pfaffian(m.principal(indices));
}

} // namespace lozenge
