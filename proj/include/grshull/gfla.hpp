/**************************************************************************
 * gfla.hpp
 *
 * Copyright 2026 The grshull Authors
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
 **************************************************************************/

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grshull/gf.hpp"

namespace grshull {

/// Dense row-major matrix over a Field. A 0 x n matrix is the empty basis
/// of a subspace of GF(q)^n.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);
    /// 0 x cols.
    static Matrix empty(FieldPtr field, std::size_t cols) { return Matrix(std::move(field), 0, cols); }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::vector<Elem> row(std::size_t r) const;
    void append_row(const std::vector<Elem>& row);

    Matrix transpose() const;
    /// Rows of this followed by rows of o.
    Matrix stack(const Matrix& o) const;
    /// Columns of this followed by columns of o.
    Matrix concat(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Rows separated by "; ", entries by ", ", in the field's element format.
    std::string to_string() const;
    static Matrix parse(const FieldPtr& field, std::string_view text);

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct Rref {
    Matrix reduced;  // nonzero rows only, rank x cols
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form, first nonzero entry as pivot.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right kernel, (cols - rank) x cols.
Matrix nullspace(const Matrix& m);
/// Canonical basis of the row space (the nonzero rows of rref).
Matrix row_basis(const Matrix& m);
bool row_space_equal(const Matrix& a, const Matrix& b);
bool in_row_space(const Matrix& m, const std::vector<Elem>& v);
/// Row space of a contained in row space of b.
bool row_space_contains(const Matrix& b, const Matrix& a);
/// Basis of rowspace(a) ∩ rowspace(b), Zassenhaus block elimination.
Matrix row_space_intersect(const Matrix& a, const Matrix& b);
/// Basis of rowspace(a) + rowspace(b).
Matrix row_space_sum(const Matrix& a, const Matrix& b);
/// Entrywise x -> x^p applied `times` times.
Matrix frobenius(const Matrix& m, unsigned times = 1);
/// Smallest j in [0, m) with rowspace(frobenius^j(a)) = rowspace(b), or -1.
int frobenius_twist_equal(const Matrix& a, const Matrix& b);

/// m * v^T as a vector of length rows().
std::vector<Elem> mat_vec(const Matrix& m, const std::vector<Elem>& v);
Elem dot(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b);

}  // namespace grshull
