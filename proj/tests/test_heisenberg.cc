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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "schwinger/focksim.h"
#include "schwinger/heisenberg.h"

namespace schwinger {
namespace {

std::vector<double> block_spectrum(const std::string &name) {
    const HGraph g = builtin(name).graph;
    const int n = g.n_modes() / 2;
    std::vector<std::vector<long>> w(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            w[static_cast<size_t>(j)][static_cast<size_t>(k)] = g.weight(j, k);
        }
    }
    return diagonalize(HGraph(w)).eigenvalues;
}

void expect_spectrum(const std::vector<double> &got, const std::vector<double> &want) {
    ASSERT_EQ(got.size(), want.size());
    for (size_t k = 0; k < got.size(); ++k) {
        EXPECT_NEAR(got[k], want[k], 1e-10) << "index " << k;
    }
}

double form_variance(const ApproxLinearForm &f, const FockVector &state) {
    return expectation_variance(quad_product(f, f), state).expectation.real();
}

TEST(Diagonalize, TwoEpr) {
    expect_spectrum(diagonalize(builtin("two_epr").graph).eigenvalues, {1, 1, -1, -1});
}

TEST(Diagonalize, BlockSpectra) {
    const double phi = (std::sqrt(5.0) + 1) / 2;
    expect_spectrum(block_spectrum("chain3x2"), {std::sqrt(2.0), 0, -std::sqrt(2.0)});
    expect_spectrum(block_spectrum("ghz3x2"), {2, -1, -1});
    expect_spectrum(block_spectrum("chain4x2"), {phi, 1 / phi, -1 / phi, -phi});
    expect_spectrum(block_spectrum("square4x2"), {std::sqrt(2.0), std::sqrt(2.0), -std::sqrt(2.0), -std::sqrt(2.0)});
    expect_spectrum(block_spectrum("ring4x2"), {2, 0, 0, -2});
    const EigenDecomp ring = diagonalize(builtin("ring4x2").graph);
    EXPECT_EQ(ring.rank, 4);
    EXPECT_EQ(ring.eigenvalues[2], 0.0);
}

TEST(Diagonalize, OrthonormalAndReconstructs) {
    for (const auto &name : builtin_names()) {
        SCOPED_TRACE(name);
        const HGraph g = builtin(name).graph;
        const EigenDecomp d = diagonalize(g);
        const int n = g.n_modes();
        const Eigen::MatrixXd eye = d.basis * d.basis.transpose();
        EXPECT_LT((eye - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
        Eigen::MatrixXd gm(n, n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                gm(j, k) = static_cast<double>(g.weight(j, k));
            }
        }
        const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(d.eigenvalues.data(), n);
        const Eigen::MatrixXd rebuilt = d.basis.transpose() * lambda.asDiagonal() * d.basis;
        EXPECT_LT((rebuilt - gm).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_TRUE(std::is_sorted(d.eigenvalues.rbegin(), d.eigenvalues.rend()));
        const int nonzero = static_cast<int>(
            std::count_if(d.eigenvalues.begin(), d.eigenvalues.end(), [](double x) { return x != 0.0; }));
        EXPECT_EQ(d.rank, nonzero);
    }
}

TEST(Diagonalize, BipartiteSpectraSymmetric) {
    for (const char *name : {"two_epr", "chain3x2", "chain4x2", "square4x2", "ring4x2"}) {
        SCOPED_TRACE(name);
        const auto ev = diagonalize(builtin(name).graph).eigenvalues;
        for (size_t k = 0; k < ev.size(); ++k) {
            EXPECT_NEAR(ev[k], -ev[ev.size() - 1 - k], 1e-10);
        }
    }
}

TEST(Diagonalize, TwinSpectrumDoublesMultiplicity) {
    for (const char *name : {"chain3x2", "ghz3x2", "chain4x2", "square4x2", "ring4x2", "ghz4x2"}) {
        SCOPED_TRACE(name);
        std::vector<double> block = block_spectrum(name);
        std::vector<double> doubled = block;
        doubled.insert(doubled.end(), block.begin(), block.end());
        std::sort(doubled.rbegin(), doubled.rend());
        expect_spectrum(diagonalize(builtin(name).graph).eigenvalues, doubled);
    }
}

TEST(Diagonalize, DeterministicSigns) {
    const EigenDecomp d = diagonalize(builtin("ghz4x2").graph);
    for (int row = 0; row < d.basis.rows(); ++row) {
        for (int col = 0; col < d.basis.cols(); ++col) {
            if (std::abs(d.basis(row, col)) > 1e-12) {
                EXPECT_GT(d.basis(row, col), 0.0);
                break;
            }
        }
    }
}

TEST(CvNullifiers, TwoEprForms) {
    const auto forms = cv_nullifiers(diagonalize(builtin("two_epr").graph));
    ASSERT_EQ(forms.size(), 4u);
    const double s = 1 / std::sqrt(2.0);
    int p_plus = 0;
    int q_minus = 0;
    for (const auto &f : forms) {
        EXPECT_EQ(f.kind, CvNullifier::Kind::kSqueezed);
        EXPECT_NEAR(f.rate, 1.0, 1e-12);
        const bool first = std::abs(f.form.q[0]) + std::abs(f.form.p[0]) > 1e-9;
        const size_t a = first ? 0 : 2;
        if (f.quadrature == Quadrature::kP) {
            EXPECT_NEAR(std::abs(f.form.p[a]), s, 1e-12);
            EXPECT_NEAR(f.form.p[a], f.form.p[a + 1], 1e-12);
            ++p_plus;
        } else {
            EXPECT_NEAR(std::abs(f.form.q[a]), s, 1e-12);
            EXPECT_NEAR(f.form.q[a], -f.form.q[a + 1], 1e-12);
            ++q_minus;
        }
    }
    EXPECT_EQ(p_plus, 2);
    EXPECT_EQ(q_minus, 2);
}

TEST(CvNullifiers, GhzRates) {
    const auto forms = cv_nullifiers(diagonalize(builtin("ghz3x2").graph));
    int rate_two = 0;
    for (const auto &f : forms) {
        if (std::abs(f.rate - 2) < 1e-12) {
            ++rate_two;
            EXPECT_EQ(f.quadrature, Quadrature::kP);
            const size_t a = std::abs(f.form.p[0]) > 1e-9 ? 0 : 3;
            EXPECT_NEAR(f.form.p[a], f.form.p[a + 1], 1e-12);
            EXPECT_NEAR(f.form.p[a], f.form.p[a + 2], 1e-12);
        } else {
            EXPECT_NEAR(f.rate, 1.0, 1e-12);
            EXPECT_EQ(f.quadrature, Quadrature::kQ);
        }
    }
    EXPECT_EQ(rate_two, 2);
}

TEST(CvNullifiers, ChainZeroMode) {
    const auto forms = cv_nullifiers(diagonalize(builtin("chain3x2").graph));
    int constants = 0;
    for (const auto &f : forms) {
        if (f.kind != CvNullifier::Kind::kConstant) {
            continue;
        }
        ++constants;
        EXPECT_EQ(f.rate, 0.0);
        const auto &c = f.quadrature == Quadrature::kQ ? f.form.q : f.form.p;
        const size_t a = std::abs(c[0]) > 1e-9 ? 0 : 3;
        EXPECT_NEAR(c[a], 1 / std::sqrt(2.0), 1e-12);
        EXPECT_NEAR(c[a + 1], 0.0, 1e-12);
        EXPECT_NEAR(c[a + 2], -1 / std::sqrt(2.0), 1e-12);
    }
    EXPECT_EQ(constants, 4);
}

TEST(EvolveForm, TwoEprScaling) {
    const EigenDecomp d = diagonalize(builtin("two_epr").graph);
    const ApproxLinearForm f = ApproxLinearForm::from({1, -1, 0, 0}, {0, 0, 0, 0});
    for (double r : {0.0, 0.1, 0.7}) {
        const ApproxLinearForm e = evolve_form(f, r, d);
        for (size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(e.q[k], std::exp(-r) * f.q[k], 1e-12);
            EXPECT_NEAR(e.p[k], 0.0, 1e-12);
        }
    }
}

TEST(EvolveForm, IdentityAtZeroAndZeroModeConstant) {
    const EigenDecomp d = diagonalize(builtin("chain3x2").graph);
    const ApproxLinearForm f = ApproxLinearForm::from({0.3, -0.2, 1.1, 0, 0.5, 0}, {0, 0.4, 0, -0.9, 0, 0.2});
    const ApproxLinearForm same = evolve_form(f, 0.0, d);
    for (size_t k = 0; k < 6; ++k) {
        EXPECT_NEAR(same.q[k], f.q[k], 1e-12);
        EXPECT_NEAR(same.p[k], f.p[k], 1e-12);
    }
    const ApproxLinearForm zero_mode = ApproxLinearForm::from({1, 0, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 0});
    const ApproxLinearForm later = evolve_form(zero_mode, 0.8, d);
    for (size_t k = 0; k < 6; ++k) {
        EXPECT_NEAR(later.q[k], zero_mode.q[k], 1e-12);
    }
}

TEST(EvolveForm, SqueezedVarianceMatchesSimulation) {
    for (const char *name : {"two_epr", "chain3x2", "ghz3x2"}) {
        SCOPED_TRACE(name);
        const HGraph g = builtin(name).graph;
        const auto forms = cv_nullifiers(diagonalize(g));
        for (double r : {0.05, 0.1, 0.2}) {
            const FockVector state = evolve_vacuum(g, r, 18);
            ASSERT_LT(state.norm_deficit, 1e-6);
            for (const auto &f : forms) {
                const double expected = f.kind == CvNullifier::Kind::kConstant ? 0.5 : 0.5 * std::exp(-2 * f.rate * r);
                EXPECT_NEAR(form_variance(f.form, state), expected, 1e-6) << "r=" << r;
            }
        }
    }
}

}  // namespace
}  // namespace schwinger
