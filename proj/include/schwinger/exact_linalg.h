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

#ifndef SCHWINGER_EXACT_LINALG_H
#define SCHWINGER_EXACT_LINALG_H

#include <vector>

#include "schwinger/rational.h"

namespace schwinger {

using ExactVector = std::vector<GaussRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    /// Builds a matrix whose columns are the given vectors (all of length rows).
    static ExactMatrix from_columns(const std::vector<ExactVector> &columns, size_t rows);
    static ExactMatrix from_rows(const std::vector<ExactVector> &rows, size_t cols);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    GaussRational &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const GaussRational &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    ExactVector row(size_t r) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<GaussRational> data_;
};

struct RowEchelon {
    ExactMatrix reduced;       // reduced row echelon form; zero rows trimmed
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivots are unit, columns scanned left to right.
RowEchelon reduced_row_echelon(ExactMatrix m);

size_t exact_rank(const ExactMatrix &m);

/// Basis of {x : m x = 0}, one vector per free column in ascending order.
std::vector<ExactVector> exact_kernel(const ExactMatrix &m);

/// Basis of span(a) ∩ span(b) where a and b are lists of independent column
/// vectors of equal length. Each result is returned together with its
/// coordinates over b.
struct Intersection {
    std::vector<ExactVector> vectors;
    std::vector<ExactVector> coords_in_b;
};
Intersection exact_intersection(const std::vector<ExactVector> &a, const std::vector<ExactVector> &b);

}  // namespace schwinger

#endif
