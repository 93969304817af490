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

#ifndef SCHWINGER_HEISENBERG_H
#define SCHWINGER_HEISENBERG_H

#include <vector>

#include <Eigen/Dense>

#include "schwinger/hgraph.h"
#include "schwinger/qops.h"

namespace schwinger {

/// Eigenvalues with magnitude below this are reported as exact zeros.
inline constexpr double kZeroEigenvalue = 1e-10;

enum class Quadrature { kQ, kP };

/// Heisenberg behaviour of one eigen-quadrature pair. For lambda > 0 the Q'
/// row is antisqueezed and the P' row squeezed at rate lambda; lambda < 0 is
/// the mirror case; lambda == 0 is a constant of the motion.
struct EigenClass {
    bool constant = false;
    Quadrature antisqueezed = Quadrature::kQ;
    Quadrature squeezed = Quadrature::kP;
    double rate = 0;
};

struct EigenDecomp {
    std::vector<double> eigenvalues;  // descending
    Eigen::MatrixXd basis;            // rows are orthonormal eigenvectors
    std::vector<EigenClass> classification;
    int rank = 0;

    int n_modes() const {
        return static_cast<int>(eigenvalues.size());
    }
};

/// Diagonalizes G. Degenerate eigenspaces get a Gram-Schmidt basis built
/// from coordinate vectors in ascending mode order; each eigenvector's first
/// nonzero component is positive.
EigenDecomp diagonalize(const HGraph &graph);

struct CvNullifier {
    enum class Kind { kSqueezed, kConstant };

    ApproxLinearForm form;
    double rate = 0;
    Kind kind = Kind::kSqueezed;
    int eigen_index = 0;
    Quadrature quadrature = Quadrature::kQ;
};

/// Squeezed forms (P' rows for lambda > 0, Q' rows for lambda < 0) and both
/// rows of every zero mode, in eigenvalue order.
std::vector<CvNullifier> cv_nullifiers(const EigenDecomp &d);

/// Heisenberg-evolved form: Q' components scale by e^{lambda r}, P'
/// components by e^{-lambda r}.
ApproxLinearForm evolve_form(const ApproxLinearForm &f, double r, const EigenDecomp &d);

}  // namespace schwinger

#endif
