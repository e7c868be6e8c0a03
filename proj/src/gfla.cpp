/**************************************************************************
 * gfla.cpp
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

#include "grshull/gfla.hpp"

#include <utility>

namespace grshull {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix::Matrix(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows)
    : field_(std::move(field)), rows_(0), cols_(cols) {
    for (const auto& r : rows)
        append_row(r);
}

std::vector<Elem> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<Elem>& row) {
    if (row.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch,
                    "row of length " + std::to_string(row.size()) + " in a matrix with " + std::to_string(cols_) + " columns");
    for (Elem e : row)
        if (!field_->contains(e))
            throw Error(ErrorKind::FieldMismatch, "entry is not an element of " + field_->name());
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::stack(const Matrix& o) const {
    if (!same_field(field_, o.field_))
        throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    if (cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "stacking matrices with different column counts");
    Matrix r = *this;
    r.data_.insert(r.data_.end(), o.data_.begin(), o.data_.end());
    r.rows_ += o.rows_;
    return r;
}

Matrix Matrix::concat(const Matrix& o) const {
    if (!same_field(field_, o.field_))
        throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    if (rows_ != o.rows_)
        throw Error(ErrorKind::DimensionMismatch, "concatenating matrices with different row counts");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t c = 0; c < cols_; ++c)
            r.at(i, c) = at(i, c);
        for (std::size_t c = 0; c < o.cols_; ++c)
            r.at(i, cols_ + c) = o.at(i, c);
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!same_field(field_, o.field_))
        throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    if (cols_ != o.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    const Field& f = *field_;
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(a, o.at(k, j)));
        }
    return r;
}

bool Matrix::is_zero() const noexcept {
    for (Elem e : data_)
        if (!e.is_zero())
            return false;
    return true;
}

std::string Matrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0)
            out += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0)
                out += ", ";
            out += field_->format(at(r, c));
        }
    }
    return out;
}

Matrix Matrix::parse(const FieldPtr& field, std::string_view text) {
    std::vector<std::vector<Elem>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto semi = text.find(';', start);
        std::string_view row = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        std::vector<Elem> parsed;
        std::size_t rs = 0;
        bool blank = row.find_first_not_of(" \t\r\n") == std::string_view::npos;
        if (!blank) {
            while (true) {
                auto comma = row.find(',', rs);
                parsed.push_back(field->parse(row.substr(rs, comma == std::string_view::npos ? std::string_view::npos : comma - rs)));
                if (comma == std::string_view::npos)
                    break;
                rs = comma + 1;
            }
            rows.push_back(std::move(parsed));
        }
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    if (rows.empty())
        throw Error(ErrorKind::ParseError, "empty matrix text");
    return Matrix(field, rows.front().size(), rows);
}

Rref rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix a = m;
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).is_zero())
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        Elem inv = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a.at(r, j) = f.mul(a.at(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            Elem factor = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = Matrix::empty(m.field(), m.cols());
    for (std::size_t i = 0; i < r; ++i)
        out.reduced.append_row(a.row(i));
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    const Field& f = *m.field();
    Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;
    Matrix basis = Matrix::empty(m.field(), m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Elem> v(m.cols(), Elem{0});
        v[free] = f.one();
        for (std::size_t i = 0; i < rr.rank; ++i)
            v[rr.pivots[i]] = f.neg(rr.reduced.at(i, free));
        basis.append_row(v);
    }
    return basis;
}

Matrix row_basis(const Matrix& m) { return rref(m).reduced; }

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field()))
        throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    if (a.cols() != b.cols())
        throw Error(ErrorKind::DimensionMismatch,
                    "column counts differ: " + std::to_string(a.cols()) + " vs " + std::to_string(b.cols()));
}

}  // namespace

bool row_space_equal(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    return rref(a).reduced == rref(b).reduced;
}

bool in_row_space(const Matrix& m, const std::vector<Elem>& v) {
    Matrix one(m.field(), m.cols(), {v});
    return rank(m.stack(one)) == rank(m);
}

bool row_space_contains(const Matrix& b, const Matrix& a) {
    require_same_shape(a, b);
    return rank(b.stack(a)) == rank(b);
}

Matrix row_space_intersect(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    const std::size_t n = a.cols();
    Matrix block(a.field(), a.rows() + b.rows(), 2 * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.at(i, j);
            block.at(i, n + j) = a.at(i, j);
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            block.at(a.rows() + i, j) = b.at(i, j);
    Rref rr = rref(block);
    Matrix out = Matrix::empty(a.field(), n);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] < n)
            continue;
        std::vector<Elem> right(n);
        for (std::size_t j = 0; j < n; ++j)
            right[j] = rr.reduced.at(i, n + j);
        out.append_row(right);
    }
    return row_basis(out);
}

Matrix row_space_sum(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    return row_basis(a.stack(b));
}

Matrix frobenius(const Matrix& m, unsigned times) {
    Matrix r = m;
    const Field& f = *m.field();
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            for (unsigned t = 0; t < times; ++t)
                r.at(i, j) = f.frobenius(r.at(i, j));
    return r;
}

int frobenius_twist_equal(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix cur = a;
    for (unsigned j = 0; j < a.field()->degree(); ++j) {
        if (row_space_equal(cur, b))
            return static_cast<int>(j);
        cur = frobenius(cur);
    }
    return -1;
}

std::vector<Elem> mat_vec(const Matrix& m, const std::vector<Elem>& v) {
    if (v.size() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match column count");
    std::vector<Elem> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        out[i] = dot(*m.field(), m.row(i), v);
    return out;
}

Elem dot(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "dot product of vectors with different lengths");
    Elem acc{0};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

}  // namespace grshull
