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


// Brute-force reference computations on truncated Fock spaces. Everything
// here works from ladder-operator matrices and never calls the symbolic
// algebra or the series evolution it is used to check.

#ifndef SCHWINGER_ORACLE_ORACLE_H
#define SCHWINGER_ORACLE_ORACLE_H

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "schwinger/hgraph.h"
#include "schwinger/qops.h"

namespace schwinger::oracle {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// All occupations of n_modes modes with at most max_total photons.
class FockSpace {
   public:
    FockSpace(int n_modes, int max_total);

    int n_modes() const {
        return n_modes_;
    }
    Eigen::Index size() const {
        return static_cast<Eigen::Index>(states_.size());
    }
    const std::vector<int> &state(Eigen::Index k) const {
        return states_[static_cast<size_t>(k)];
    }
    int total(Eigen::Index k) const;
    /// -1 when the occupation lies outside the space.
    Eigen::Index index_of(const std::vector<int> &occ) const;

   private:
    int n_modes_;
    std::vector<std::vector<int>> states_;
    std::map<std::vector<int>, Eigen::Index> index_;
};

SparseMatrix annihilator(const FockSpace &space, int mode);
SparseMatrix creator(const FockSpace &space, int mode);
SparseMatrix identity(const FockSpace &space);

/// Matrix of a normally ordered quadratic operator built from ladder products.
SparseMatrix operator_matrix(const FockSpace &space, const ApproxQuadOp &op);

/// Sum over edges of G (a_j^dag a_k^dag - a_j a_k).
SparseMatrix generator_matrix(const FockSpace &space, const HGraph &graph);

struct AdjointCheck {
    size_t kernel_dimension = 0;
    double max_commutator_error = 0;
};

/// Numeric kernel dimension of X -> [K, X] on non-identity quadratic
/// monomials, from matrix products KX - XK restricted to columns with at most
/// column_total photons inside a space of column_total + 4 photons, where the
/// block is free of truncation error. Also reports the largest deviation
/// between that block and the matrix of the symbolic commutator.
AdjointCheck adjoint_check(const HGraph &graph, int column_total = 2);

/// Numeric dimension of the span of operators, from their matrices.
size_t numeric_span_dimension(const std::vector<ApproxQuadOp> &ops, int n_modes, int column_total = 2);

/// exp(rK)|0> by dense matrix exponential on a space of max_total photons.
Eigen::VectorXcd dense_evolution(const FockSpace &space, const HGraph &graph, double r);

/// Amplitude of |n, n> in a two-mode squeezed vacuum of parameter r.
double epr_amplitude(int n, double r);

/// Probability that two EPR pairs, paired across, land in the sector with
/// both spins equal to j = two_j / 2.
double epr_sector_probability(int two_j, double r);

/// Trace of an operator's matrix on a truncated space.
Complex trace(const FockSpace &space, const ApproxQuadOp &op);

}  // namespace schwinger::oracle

#endif  // SCHWINGER_ORACLE_ORACLE_H
