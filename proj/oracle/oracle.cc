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


#include "oracle/oracle.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace schwinger::oracle {

FockSpace::FockSpace(int n_modes, int max_total) : n_modes_(n_modes) {
    if (n_modes < 1 || max_total < 0) {
        throw std::invalid_argument("FockSpace needs at least one mode and a nonnegative photon bound");
    }
    std::vector<int> occ(n_modes, 0);
    std::function<void(int, int)> fill = [&](int mode, int left) {
        if (mode == n_modes) {
            states_.push_back(occ);
            return;
        }
        for (int n = 0; n <= left; ++n) {
            occ[mode] = n;
            fill(mode + 1, left - n);
        }
        occ[mode] = 0;
    };
    fill(0, max_total);
    for (size_t k = 0; k < states_.size(); ++k) {
        index_.emplace(states_[k], static_cast<Eigen::Index>(k));
    }
}

int FockSpace::total(Eigen::Index k) const {
    int t = 0;
    for (int n : state(k)) {
        t += n;
    }
    return t;
}

Eigen::Index FockSpace::index_of(const std::vector<int> &occ) const {
    auto it = index_.find(occ);
    return it == index_.end() ? -1 : it->second;
}

SparseMatrix annihilator(const FockSpace &space, int mode) {
    std::vector<Eigen::Triplet<Complex>> triplets;
    for (Eigen::Index c = 0; c < space.size(); ++c) {
        std::vector<int> occ = space.state(c);
        const int n = occ[mode];
        if (n == 0) {
            continue;
        }
        occ[mode] = n - 1;
        triplets.emplace_back(space.index_of(occ), c, std::sqrt(static_cast<double>(n)));
    }
    SparseMatrix m(space.size(), space.size());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

SparseMatrix creator(const FockSpace &space, int mode) {
    return SparseMatrix(annihilator(space, mode).adjoint());
}

SparseMatrix identity(const FockSpace &space) {
    SparseMatrix m(space.size(), space.size());
    m.setIdentity();
    return m;
}

SparseMatrix operator_matrix(const FockSpace &space, const ApproxQuadOp &op) {
    SparseMatrix out(space.size(), space.size());
    for (const auto &[m, c] : op.terms()) {
        SparseMatrix term;
        switch (m.kind) {
            case Monomial::Kind::kUnit:
                term = identity(space);
                break;
            case Monomial::Kind::kMixed:
                term = creator(space, m.i) * annihilator(space, m.j);
                break;
            case Monomial::Kind::kCreate2:
                term = creator(space, m.i) * creator(space, m.j);
                break;
            case Monomial::Kind::kAnnih2:
                term = annihilator(space, m.i) * annihilator(space, m.j);
                break;
        }
        out += c * term;
    }
    return out;
}

SparseMatrix generator_matrix(const FockSpace &space, const HGraph &graph) {
    SparseMatrix k(space.size(), space.size());
    for (int a = 0; a < graph.n_modes(); ++a) {
        for (int b = a + 1; b < graph.n_modes(); ++b) {
            const double w = static_cast<double>(graph.weight(a, b));
            if (w == 0.0) {
                continue;
            }
            SparseMatrix pair = creator(space, a) * creator(space, b) - annihilator(space, a) * annihilator(space, b);
            k += Complex(w) * pair;
        }
    }
    return k;
}

namespace {

// Stacks the nonzero entries of each matrix's low-photon column block as one
// column of a dense matrix.
size_t block_rank(const FockSpace &space, const std::vector<SparseMatrix> &mats, int column_total) {
    std::map<std::pair<Eigen::Index, Eigen::Index>, Eigen::Index> rows;
    std::vector<std::vector<std::pair<Eigen::Index, Complex>>> cols(mats.size());
    for (size_t k = 0; k < mats.size(); ++k) {
        for (Eigen::Index c = 0; c < mats[k].outerSize(); ++c) {
            if (space.total(c) > column_total) {
                continue;
            }
            for (SparseMatrix::InnerIterator it(mats[k], c); it; ++it) {
                if (std::abs(it.value()) < 1e-14) {
                    continue;
                }
                auto [pos, inserted] = rows.emplace(std::make_pair(it.row(), c), static_cast<Eigen::Index>(rows.size()));
                cols[k].emplace_back(pos->second, it.value());
            }
        }
    }
    if (rows.empty()) {
        return 0;
    }
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                    static_cast<Eigen::Index>(mats.size()));
    for (size_t k = 0; k < mats.size(); ++k) {
        for (const auto &[r, v] : cols[k]) {
            dense(r, static_cast<Eigen::Index>(k)) = v;
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(dense);
    qr.setThreshold(1e-10);
    return static_cast<size_t>(qr.rank());
}

}  // namespace

AdjointCheck adjoint_check(const HGraph &graph, int column_total) {
    const int n = graph.n_modes();
    const FockSpace space(n, column_total + 4);
    const SparseMatrix k = generator_matrix(space, graph);
    const QuadOp k_symbolic = hamiltonian_generator(graph);
    AdjointCheck out;
    std::vector<SparseMatrix> commutators;
    for (const Monomial &m : quadratic_basis(n)) {
        if (m.kind == Monomial::Kind::kUnit) {
            continue;
        }
        const SparseMatrix x = operator_matrix(space, ApproxQuadOp(m, Complex(1.0)));
        SparseMatrix numeric = k * x - x * k;
        const SparseMatrix symbolic =
            operator_matrix(space, to_approx(commutator(k_symbolic, QuadOp(m, GaussRational(1)))));
        const SparseMatrix diff = numeric - symbolic;
        for (Eigen::Index c = 0; c < diff.outerSize(); ++c) {
            if (space.total(c) > column_total) {
                continue;
            }
            for (SparseMatrix::InnerIterator it(diff, c); it; ++it) {
                out.max_commutator_error = std::max(out.max_commutator_error, std::abs(it.value()));
            }
        }
        commutators.push_back(std::move(numeric));
    }
    out.kernel_dimension = commutators.size() - block_rank(space, commutators, column_total);
    return out;
}

size_t numeric_span_dimension(const std::vector<ApproxQuadOp> &ops, int n_modes, int column_total) {
    const FockSpace space(n_modes, column_total + 2);
    std::vector<SparseMatrix> mats;
    for (const auto &op : ops) {
        mats.push_back(operator_matrix(space, op));
    }
    return block_rank(space, mats, column_total);
}

Eigen::VectorXcd dense_evolution(const FockSpace &space, const HGraph &graph, double r) {
    const Eigen::MatrixXcd k = Eigen::MatrixXcd(generator_matrix(space, graph)) * Complex(r);
    const Eigen::MatrixXcd u = k.exp();
    return u.col(space.index_of(std::vector<int>(space.n_modes(), 0)));
}

double epr_amplitude(int n, double r) {
    return std::pow(std::tanh(r), n) / std::cosh(r);
}

double epr_sector_probability(int two_j, double r) {
    double p = 0;
    for (int n1 = 0; n1 <= two_j; ++n1) {
        const double a = epr_amplitude(n1, r);
        const double b = epr_amplitude(two_j - n1, r);
        p += a * a * b * b;
    }
    return p;
}

Complex trace(const FockSpace &space, const ApproxQuadOp &op) {
    const SparseMatrix m = operator_matrix(space, op);
    Complex t(0.0, 0.0);
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        t += m.coeff(k, k);
    }
    return t;
}

}  // namespace schwinger::oracle
