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

#include "schwinger/heisenberg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace schwinger {

namespace {

constexpr double kDegenerateGap = 1e-8;
constexpr double kResidual = 1e-8;

}  // namespace

EigenDecomp diagonalize(const HGraph &graph) {
    const int n = graph.n_modes();
    Eigen::MatrixXd g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            g(j, k) = static_cast<double>(graph.weight(j, k));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge on H-graph matrix");
    }
    // Eigen returns ascending order.
    std::vector<double> values(n);
    Eigen::MatrixXd vectors(n, n);
    for (int k = 0; k < n; ++k) {
        values[k] = solver.eigenvalues()(n - 1 - k);
        vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }

    EigenDecomp out;
    out.basis = Eigen::MatrixXd::Zero(n, n);
    int row = 0;
    for (int start = 0; start < n;) {
        int stop = start + 1;
        while (stop < n && std::abs(values[stop] - values[start]) < kDegenerateGap) {
            ++stop;
        }
        const int dim = stop - start;
        double mean = 0;
        for (int k = start; k < stop; ++k) {
            mean += values[k];
        }
        mean /= dim;
        if (std::abs(mean) < kZeroEigenvalue) {
            mean = 0.0;
        }
        Eigen::MatrixXd space = vectors.middleCols(start, dim);
        Eigen::MatrixXd projector = space * space.transpose();
        std::vector<Eigen::VectorXd> chosen;
        for (int axis = 0; axis < n && static_cast<int>(chosen.size()) < dim; ++axis) {
            Eigen::VectorXd v = projector.col(axis);
            for (const auto &u : chosen) {
                v -= u.dot(v) * u;
            }
            if (v.norm() < kResidual) {
                continue;
            }
            v.normalize();
            for (int k = 0; k < n; ++k) {
                if (std::abs(v(k)) > kResidual) {
                    if (v(k) < 0) {
                        v = -v;
                    }
                    break;
                }
            }
            chosen.push_back(v);
        }
        if (static_cast<int>(chosen.size()) != dim) {
            throw std::runtime_error("degenerate eigenspace basis construction failed");
        }
        for (const auto &v : chosen) {
            out.basis.row(row) = v.transpose();
            out.eigenvalues.push_back(mean);
            ++row;
        }
        start = stop;
    }

    for (double lambda : out.eigenvalues) {
        EigenClass c;
        if (lambda == 0.0) {
            c.constant = true;
        } else if (lambda > 0) {
            c.antisqueezed = Quadrature::kQ;
            c.squeezed = Quadrature::kP;
            c.rate = lambda;
            ++out.rank;
        } else {
            c.antisqueezed = Quadrature::kP;
            c.squeezed = Quadrature::kQ;
            c.rate = -lambda;
            ++out.rank;
        }
        out.classification.push_back(c);
    }
    return out;
}

std::vector<CvNullifier> cv_nullifiers(const EigenDecomp &d) {
    const int n = d.n_modes();
    auto row_form = [&](int k, Quadrature quad) {
        ApproxLinearForm f(n);
        for (int j = 0; j < n; ++j) {
            (quad == Quadrature::kQ ? f.q : f.p)[j] = d.basis(k, j);
        }
        return f;
    };
    std::vector<CvNullifier> out;
    for (int k = 0; k < n; ++k) {
        const EigenClass &c = d.classification[k];
        if (c.constant) {
            out.push_back({row_form(k, Quadrature::kQ), 0.0, CvNullifier::Kind::kConstant, k, Quadrature::kQ});
            out.push_back({row_form(k, Quadrature::kP), 0.0, CvNullifier::Kind::kConstant, k, Quadrature::kP});
        } else {
            out.push_back({row_form(k, c.squeezed), c.rate, CvNullifier::Kind::kSqueezed, k, c.squeezed});
        }
    }
    return out;
}

ApproxLinearForm evolve_form(const ApproxLinearForm &f, double r, const EigenDecomp &d) {
    const int n = d.n_modes();
    if (f.n_modes() != n) {
        throw std::invalid_argument("evolve_form: form and decomposition differ in mode count");
    }
    Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(f.q.data(), n);
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(f.p.data(), n);
    Eigen::VectorXd qe = d.basis * q;
    Eigen::VectorXd pe = d.basis * p;
    for (int k = 0; k < n; ++k) {
        qe(k) *= std::exp(d.eigenvalues[k] * r);
        pe(k) *= std::exp(-d.eigenvalues[k] * r);
    }
    Eigen::VectorXd q2 = d.basis.transpose() * qe;
    Eigen::VectorXd p2 = d.basis.transpose() * pe;
    ApproxLinearForm out(n);
    for (int k = 0; k < n; ++k) {
        out.q[k] = q2(k);
        out.p[k] = p2(k);
    }
    return out;
}

}  // namespace schwinger
