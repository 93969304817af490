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

#include <random>

#include "oracle/oracle.h"
#include "schwinger/hgraph.h"
#include "schwinger/qops.h"

namespace schwinger {
namespace {

using Kind = Monomial::Kind;

const GaussRational kHalf = GaussRational::frac(1, 2);
const GaussRational kI = GaussRational::i();

QuadOp random_op(std::mt19937 &rng, int n) {
    QuadOp op;
    const auto basis = quadratic_basis(n);
    for (const auto &m : basis) {
        if (rng() % 3 == 0) {
            const long re = static_cast<long>(rng() % 7) - 3;
            const long im = static_cast<long>(rng() % 5) - 2;
            op.add(m, GaussRational(mpq_class(re, 1 + static_cast<long>(rng() % 3)), mpq_class(im)));
        }
    }
    return op;
}

double max_abs(const oracle::SparseMatrix &m) {
    double out = 0;
    for (int k = 0; k < m.outerSize(); ++k) {
        for (oracle::SparseMatrix::InnerIterator it(m, k); it; ++it) {
            out = std::max(out, std::abs(it.value()));
        }
    }
    return out;
}

TEST(NormalOrder, CanonicalCommutation) {
    const QuadOp op = normal_order<GaussRational>({{GaussRational(1), {{0, false}, {0, true}}}});
    EXPECT_EQ(op, QuadOp(Monomial::mixed(0, 0), 1) + QuadOp::identity());
}

TEST(NormalOrder, AlreadyOrdered) {
    const QuadOp op = normal_order<GaussRational>({{GaussRational(1), {{0, true}, {1, false}}}});
    EXPECT_EQ(op, QuadOp(Monomial::mixed(0, 1), 1));
}

TEST(NormalOrder, RejectsCubic) {
    EXPECT_THROW(normal_order<GaussRational>({{GaussRational(1), {{0, true}, {1, false}, {1, false}}}}),
                 std::invalid_argument);
}

TEST(NormalOrder, SymmetrizedQP) {
    const LinearForm q = LinearForm::from({1}, {0});
    const LinearForm p = LinearForm::from({0}, {1});
    QuadOp expected;
    expected.add(Monomial::create2(0, 0), kHalf * kI);
    expected.add(Monomial::annih2(0, 0), -kHalf * kI);
    EXPECT_EQ(quad_product(q, p), expected);
}

TEST(QuadProduct, SquareOfQ) {
    const LinearForm q = LinearForm::from({1}, {0});
    QuadOp expected;
    expected.add(Monomial::create2(0, 0), kHalf);
    expected.add(Monomial::annih2(0, 0), kHalf);
    expected.add(Monomial::mixed(0, 0), 1);
    expected.add(Monomial::unit(), kHalf);
    EXPECT_EQ(quad_product(q, q), expected);
}

TEST(QuadProduct, DifferenceOfSquaresAndSymmetry) {
    const LinearForm plus = LinearForm::from({1, 1}, {0, 0});
    const LinearForm minus = LinearForm::from({1, -1}, {0, 0});
    const LinearForm q1 = LinearForm::from({1, 0}, {0, 0});
    const LinearForm q2 = LinearForm::from({0, 1}, {0, 0});
    EXPECT_EQ(quad_product(plus, minus), quad_product(q1, q1) - quad_product(q2, q2));
    const LinearForm f = LinearForm::from({1, 2}, {mpq_class(1, 3), -1});
    EXPECT_EQ(quad_product(f, plus), quad_product(plus, f));
}

TEST(QuadProduct, MatchesDenseProduct) {
    const ApproxLinearForm f = ApproxLinearForm::from({0.3, -1.1}, {0.7, 0.2});
    const ApproxLinearForm g = ApproxLinearForm::from({-0.4, 0.5}, {1.3, 0.0});
    const oracle::FockSpace space(2, 8);
    auto form_matrix = [&](const ApproxLinearForm &h) {
        oracle::SparseMatrix out(space.size(), space.size());
        for (int k = 0; k < 2; ++k) {
            const oracle::SparseMatrix a = oracle::annihilator(space, k);
            const oracle::SparseMatrix ad = oracle::creator(space, k);
            out += (h.q[static_cast<size_t>(k)] / std::sqrt(2.0)) * (a + ad);
            out += (h.p[static_cast<size_t>(k)] / std::sqrt(2.0)) * oracle::Complex(0, 1) * (ad - a);
        }
        return out;
    };
    const oracle::SparseMatrix fm = form_matrix(f);
    const oracle::SparseMatrix gm = form_matrix(g);
    const oracle::SparseMatrix dense = 0.5 * (fm * gm + gm * fm);
    const oracle::SparseMatrix symbolic = oracle::operator_matrix(space, quad_product(f, g));
    // Compare on columns two photons below the truncation edge.
    for (Eigen::Index col = 0; col < space.size(); ++col) {
        if (space.total(col) > 6) {
            continue;
        }
        for (Eigen::Index row = 0; row < space.size(); ++row) {
            EXPECT_NEAR(std::abs(dense.coeff(row, col) - symbolic.coeff(row, col)), 0.0, 1e-12);
        }
    }
}

TEST(Commutator, SpinAlgebra) {
    for (auto pair : {std::pair{0, 1}, std::pair{2, 0}}) {
        const QuadOp jx = schwinger_spin(pair, SpinComponent::kX);
        const QuadOp jy = schwinger_spin(pair, SpinComponent::kY);
        const QuadOp jz = schwinger_spin(pair, SpinComponent::kZ);
        const QuadOp j0 = schwinger_spin(pair, SpinComponent::kZero);
        EXPECT_EQ(commutator(jx, jy), kI * jz);
        EXPECT_EQ(commutator(jy, jz), kI * jx);
        EXPECT_EQ(commutator(jz, jx), kI * jy);
        for (const auto &j : {jx, jy, jz}) {
            EXPECT_TRUE(commutator(j0, j).is_zero());
            EXPECT_TRUE(j.is_hermitian());
        }
        EXPECT_TRUE(j0.is_hermitian());
    }
}

TEST(Commutator, Antisymmetry) {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        const QuadOp a = random_op(rng, 3);
        const QuadOp b = random_op(rng, 3);
        EXPECT_TRUE(commutator(a, a).is_zero());
        EXPECT_EQ(commutator(a, b), -commutator(b, a));
    }
}

TEST(Commutator, Bilinear) {
    std::mt19937 rng(12);
    for (int t = 0; t < 20; ++t) {
        const QuadOp a = random_op(rng, 3);
        const QuadOp b = random_op(rng, 3);
        const QuadOp c = random_op(rng, 3);
        const GaussRational s(mpq_class(2, 3), mpq_class(-1));
        EXPECT_EQ(commutator(a * s + b, c), commutator(a, c) * s + commutator(b, c));
    }
}

TEST(Commutator, Jacobi) {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        const QuadOp a = random_op(rng, 3);
        const QuadOp b = random_op(rng, 3);
        const QuadOp c = random_op(rng, 3);
        const QuadOp sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                           commutator(c, commutator(a, b));
        EXPECT_TRUE(sum.is_zero()) << sum.str();
    }
}

TEST(Commutator, SquareNumberDifferenceIsConserved) {
    const QuadOp k = hamiltonian_generator(builtin("square4x2").graph);
    const QuadOp diff = number_op(0) + number_op(2) - number_op(1) - number_op(3);
    EXPECT_TRUE(commutator(k, diff).is_zero());
}

TEST(Commutator, MatchesDenseMatrices) {
    std::mt19937 rng(14);
    const oracle::FockSpace space(3, 6);
    for (int t = 0; t < 25; ++t) {
        const QuadOp a = random_op(rng, 3);
        const QuadOp b = random_op(rng, 3);
        const oracle::SparseMatrix am = oracle::operator_matrix(space, to_approx(a));
        const oracle::SparseMatrix bm = oracle::operator_matrix(space, to_approx(b));
        const oracle::SparseMatrix cm = oracle::operator_matrix(space, to_approx(commutator(a, b)));
        const oracle::SparseMatrix dense = am * bm - bm * am;
        // Columns with at most two photons stay clear of the truncation edge.
        for (Eigen::Index col = 0; col < space.size(); ++col) {
            if (space.total(col) > 2) {
                continue;
            }
            for (Eigen::Index row = 0; row < space.size(); ++row) {
                ASSERT_NEAR(std::abs(dense.coeff(row, col) - cm.coeff(row, col)), 0.0, 1e-12);
            }
        }
    }
}

TEST(Generator, TwoEpr) {
    const QuadOp k = hamiltonian_generator(builtin("two_epr").graph);
    QuadOp expected;
    expected.add(Monomial::create2(0, 1), 1);
    expected.add(Monomial::create2(2, 3), 1);
    expected.add(Monomial::annih2(0, 1), -1);
    expected.add(Monomial::annih2(2, 3), -1);
    EXPECT_EQ(k, expected);
    EXPECT_EQ(k.adjoint(), -k);
}

TEST(Generator, EmptyAndSquare) {
    EXPECT_TRUE(hamiltonian_generator(HGraph::from_edges(3, {})).is_zero());
    const QuadOp k = hamiltonian_generator(builtin("square4x2").graph);
    int creations = 0;
    for (const auto &[m, c] : k.terms()) {
        if (m.kind == Kind::kCreate2) {
            ++creations;
            const bool edge_14 = (m.i == 0 && m.j == 3) || (m.i == 4 && m.j == 7);
            EXPECT_EQ(c, GaussRational(edge_14 ? -1 : 1));
        }
    }
    EXPECT_EQ(creations, 8);
}

TEST(SchwingerSpin, Components) {
    QuadOp jz;
    jz.add(Monomial::mixed(0, 0), kHalf);
    jz.add(Monomial::mixed(1, 1), -kHalf);
    EXPECT_EQ(schwinger_spin({0, 1}, SpinComponent::kZ), jz);
    EXPECT_EQ(schwinger_spin({1, 0}, SpinComponent::kZ), -jz);
    EXPECT_THROW(schwinger_spin({1, 1}, SpinComponent::kX), std::exception);
}

TEST(SchwingerSpin, JxOnSinglePhoton) {
    const oracle::FockSpace space(2, 2);
    const oracle::SparseMatrix jx = oracle::operator_matrix(space, to_approx(schwinger_spin({0, 1}, SpinComponent::kX)));
    const Eigen::Index from = space.index_of({1, 0});
    const Eigen::Index to = space.index_of({0, 1});
    EXPECT_NEAR(std::abs(jx.coeff(to, from) - oracle::Complex(0.5, 0)), 0.0, 1e-15);
    double other = 0;
    for (Eigen::Index row = 0; row < space.size(); ++row) {
        if (row != to) {
            other += std::abs(jx.coeff(row, from));
        }
    }
    EXPECT_EQ(other, 0.0);
}

TEST(SchwingerSpin, CasimirIdentity) {
    const oracle::FockSpace space(2, 6);
    auto m = [&](SpinComponent c) { return oracle::operator_matrix(space, to_approx(schwinger_spin({0, 1}, c))); };
    const oracle::SparseMatrix jx = m(SpinComponent::kX);
    const oracle::SparseMatrix jy = m(SpinComponent::kY);
    const oracle::SparseMatrix jz = m(SpinComponent::kZ);
    const oracle::SparseMatrix j0 = m(SpinComponent::kZero);
    const oracle::SparseMatrix lhs = jx * jx + jy * jy + jz * jz;
    const oracle::SparseMatrix rhs = j0 * (j0 + oracle::identity(space));
    EXPECT_LT(max_abs(lhs - rhs), 1e-12);
}

TEST(SchwingerSpin, TracelessExceptCasimir) {
    const oracle::FockSpace space(4, 4);
    for (auto c : {SpinComponent::kX, SpinComponent::kY, SpinComponent::kZ}) {
        EXPECT_LT(std::abs(oracle::trace(space, to_approx(schwinger_spin({0, 2}, c)))), 1e-12);
    }
    EXPECT_GT(std::abs(oracle::trace(space, to_approx(schwinger_spin({0, 2}, SpinComponent::kZero)))), 1.0);
}

TEST(NullifiesVacuum, Cases) {
    EXPECT_TRUE(nullifies_vacuum(schwinger_spin({0, 1}, SpinComponent::kX)));
    EXPECT_FALSE(nullifies_vacuum(QuadOp(Monomial::create2(0, 1), 1)));
    EXPECT_FALSE(nullifies_vacuum(QuadOp(Monomial::mixed(0, 0), 1) + QuadOp::identity()));
    EXPECT_TRUE(nullifies_vacuum(QuadOp(Monomial::annih2(0, 1), 1)));
}

TEST(QuadOpJson, RoundTrip) {
    std::mt19937 rng(15);
    for (int t = 0; t < 10; ++t) {
        const QuadOp op = random_op(rng, 3);
        EXPECT_EQ(quadop_from_json(quadop_to_json(op)), op);
    }
}

}  // namespace
}  // namespace schwinger
