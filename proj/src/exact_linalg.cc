// Copyright 2026 The Schwinger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schwinger/exact_linalg.h"

#include <stdexcept>

namespace schwinger {

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector> &columns, size_t rows) {
    ExactMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("from_columns: column length mismatch");
        }
        for (size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector> &rows, size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("from_rows: row length mismatch");
        }
        for (size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

ExactVector ExactMatrix::row(size_t r) const {
    return ExactVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RowEchelon reduced_row_echelon(ExactMatrix m) {
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        size_t p = lead;
        while (p < m.rows() && m(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != lead) {
            for (size_t k = 0; k < m.cols(); ++k) {
                std::swap(m(p, k), m(lead, k));
            }
        }
        GaussRational inv = m(lead, c).inverse();
        for (size_t k = c; k < m.cols(); ++k) {
            if (!m(lead, k).is_zero()) {
                m(lead, k) *= inv;
            }
        }
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c).is_zero()) {
                continue;
            }
            GaussRational f = m(r, c);
            for (size_t k = c; k < m.cols(); ++k) {
                if (!m(lead, k).is_zero()) {
                    m(r, k) -= f * m(lead, k);
                }
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    ExactMatrix trimmed(pivots.size(), m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            trimmed(r, c) = m(r, c);
        }
    }
    return {std::move(trimmed), std::move(pivots)};
}

size_t exact_rank(const ExactMatrix &m) {
    return reduced_row_echelon(m).pivots.size();
}

std::vector<ExactVector> exact_kernel(const ExactMatrix &m) {
    RowEchelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivots) {
        is_pivot[c] = true;
    }
    std::vector<ExactVector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        ExactVector v(m.cols());
        v[f] = GaussRational(1);
        for (size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.reduced(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Intersection exact_intersection(const std::vector<ExactVector> &a, const std::vector<ExactVector> &b) {
    Intersection out;
    if (a.empty() || b.empty()) {
        return out;
    }
    const size_t dim = a.front().size();
    // Kernel of [A | -B]: (x, y) with A x = B y.
    std::vector<ExactVector> stacked = a;
    for (const auto &v : b) {
        ExactVector neg(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            neg[k] = -v[k];
        }
        stacked.push_back(std::move(neg));
    }
    for (const auto &xy : exact_kernel(ExactMatrix::from_columns(stacked, dim))) {
        ExactVector y(xy.begin() + static_cast<long>(a.size()), xy.end());
        ExactVector v(dim);
        for (size_t k = 0; k < b.size(); ++k) {
            if (y[k].is_zero()) {
                continue;
            }
            for (size_t r = 0; r < dim; ++r) {
                if (!b[k][r].is_zero()) {
                    v[r] += y[k] * b[k][r];
                }
            }
        }
        out.vectors.push_back(std::move(v));
        out.coords_in_b.push_back(std::move(y));
    }
    return out;
}

}  // namespace schwinger
