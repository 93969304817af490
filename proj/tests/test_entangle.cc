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

#include <cmath>
#include <random>

#include "schwinger/entangle.h"

namespace schwinger {
namespace {

SpinSectorState qubits(size_t n, const std::vector<std::pair<std::vector<int>, Amplitude>> &terms) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < n; ++k) {
        pairs.emplace_back(static_cast<int>(k), static_cast<int>(k + n));
    }
    SpinSectorState s = SpinSectorState::zeros(SpinPairing(pairs), std::vector<int>(n, 1));
    double norm = 0;
    for (const auto &[m, a] : terms) {
        norm += std::norm(a);
    }
    for (const auto &[m, a] : terms) {
        s.amplitudes[s.index_of(m)] = a / std::sqrt(norm);
    }
    s.selection_probability = 1;
    return s;
}

SpinSectorState bell_minus() {
    return qubits(2, {{{1, -1}, 1}, {{-1, 1}, -1}});
}

SpinSectorState psi2() {
    return qubits(4, {{{1, -1, -1, 1}, 1},
                      {{-1, 1, 1, -1}, 1},
                      {{1, 1, -1, -1}, 1},
                      {{-1, -1, 1, 1}, 1},
                      {{1, -1, 1, -1}, -2},
                      {{-1, 1, -1, 1}, -2}});
}

SpinSectorState dicke() {
    return qubits(4, {{{1, 1, -1, -1}, 1},
                      {{1, -1, 1, -1}, 1},
                      {{1, -1, -1, 1}, 1},
                      {{-1, 1, 1, -1}, 1},
                      {{-1, 1, -1, 1}, 1},
                      {{-1, -1, 1, 1}, 1}});
}

TEST(Schmidt, BellPair) {
    const SchmidtSpectrum s = bipartition_spectrum(bell_minus(), {0});
    ASSERT_EQ(s.coefficients.size(), 2u);
    EXPECT_NEAR(s.coefficients[0], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(s.coefficients[1], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(s.entropy, 1.0, 1e-12);
    EXPECT_EQ(s.rank(), 2u);
}

TEST(Schmidt, ProductState) {
    const SpinSectorState up = qubits(4, {{{1, 1, 1, 1}, 1}});
    for (const auto &subset : bipartitions(4)) {
        const SchmidtSpectrum s = bipartition_spectrum(up, subset);
        EXPECT_EQ(s.rank(), 1u);
        EXPECT_NEAR(s.entropy, 0.0, 1e-12);
    }
    EXPECT_EQ(classify(up).kind, Separability::kFullyProduct);
}

TEST(Schmidt, RingStateSingleSpins) {
    for (size_t k = 0; k < 4; ++k) {
        const SchmidtSpectrum s = bipartition_spectrum(psi2(), {k});
        EXPECT_NEAR(s.entropy, 1.0, 1e-12);
    }
}

TEST(Schmidt, ComplementSymmetryAndNormalization) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<std::pair<std::vector<int>, Amplitude>> terms;
    SpinSectorState shape = qubits(4, {{{1, 1, 1, 1}, 1}});
    for (size_t i = 0; i < shape.amplitudes.size(); ++i) {
        terms.push_back({shape.two_m_of(i), Amplitude(g(rng), g(rng))});
    }
    const SpinSectorState s = qubits(4, terms);
    for (const auto &subset : bipartitions(4)) {
        std::vector<size_t> rest;
        for (size_t k = 0; k < 4; ++k) {
            if (std::find(subset.begin(), subset.end(), k) == subset.end()) {
                rest.push_back(k);
            }
        }
        const SchmidtSpectrum a = bipartition_spectrum(s, subset);
        const SchmidtSpectrum b = bipartition_spectrum(s, rest);
        double sum = 0;
        for (size_t k = 0; k < std::min(a.coefficients.size(), b.coefficients.size()); ++k) {
            EXPECT_NEAR(a.coefficients[k], b.coefficients[k], 1e-12);
            sum += a.coefficients[k] * a.coefficients[k];
        }
        EXPECT_NEAR(sum, 1.0, 1e-10);
        EXPECT_NEAR(a.entropy, b.entropy, 1e-12);
        EXPECT_TRUE(std::is_sorted(a.coefficients.rbegin(), a.coefficients.rend()));
    }
}

TEST(Schmidt, RejectsUnnormalizedAndBadSubsets) {
    SpinSectorState s = bell_minus();
    s.amplitudes[0] += 0.5;
    EXPECT_THROW(bipartition_spectrum(s, {0}), ValidationError);
    EXPECT_THROW(bipartition_spectrum(bell_minus(), {}), ValidationError);
    EXPECT_THROW(bipartition_spectrum(bell_minus(), {0, 1}), ValidationError);
}

TEST(Bipartitions, Enumeration) {
    EXPECT_EQ(bipartitions(2).size(), 1u);
    EXPECT_EQ(bipartitions(4).size(), 7u);
    EXPECT_EQ(bipartitions(4).front(), std::vector<size_t>{0});
}

TEST(Classify, TwinSquareStates) {
    const SpinSectorState square = qubits(4, {{{1, -1, -1, 1}, 1},
                                              {{-1, 1, 1, -1}, 1},
                                              {{1, 1, -1, -1}, -1},
                                              {{-1, -1, 1, 1}, -1}});
    const Classification c = classify(square);
    EXPECT_EQ(c.kind, Separability::kBiseparable);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(partition_label(square.pairing, *c.witness), "{15,37}|{26,48}");
    EXPECT_EQ(classify(psi2()).kind, Separability::kGenuineMultipartite);
    const SpinSectorState chain = qubits(4, {{{1, -1, -1, 1}, 1},
                                             {{-1, 1, 1, -1}, 1},
                                             {{1, -1, 1, -1}, -1},
                                             {{-1, 1, -1, 1}, -1}});
    const Classification cc = classify(chain);
    EXPECT_EQ(cc.kind, Separability::kBiseparable);
    EXPECT_EQ(partition_label(chain.pairing, *cc.witness), "{15,26}|{37,48}");
    EXPECT_STREQ(separability_name(Separability::kGenuineMultipartite), "genuine_multipartite");
}

TEST(Classify, InvariantUnderLocalZRotations) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 6.283);
    for (const SpinSectorState &base : {psi2(), dicke(), bell_minus()}) {
        SpinSectorState rotated = base;
        const size_t n = base.two_j.size();
        std::vector<double> phase(n);
        for (auto &p : phase) {
            p = u(rng);
        }
        for (size_t i = 0; i < rotated.amplitudes.size(); ++i) {
            const auto m = rotated.two_m_of(i);
            double total = 0;
            for (size_t k = 0; k < n; ++k) {
                total += phase[k] * m[k] / 2.0;
            }
            rotated.amplitudes[i] *= std::polar(1.0, total);
        }
        EXPECT_EQ(classify(rotated).kind, classify(base).kind);
    }
}

TEST(Classify, RejectsNonQubits) {
    SpinSectorState s = SpinSectorState::zeros(SpinPairing({{0, 1}, {2, 3}}), {2, 1});
    s.amplitudes[0] = 1;
    EXPECT_THROW(classify(s), ValidationError);
    EXPECT_NO_THROW(bipartition_spectrum(s, {0}));
}

TEST(Fidelity, Cases) {
    EXPECT_NEAR(fidelity(psi2(), dicke()), 0.0, 1e-15);
    EXPECT_NEAR(fidelity(psi2(), psi2()), 1.0, 1e-12);
    const SpinSectorState plus = qubits(2, {{{1, -1}, 1}, {{-1, 1}, 1}});
    EXPECT_NEAR(fidelity(plus, bell_minus()), 0.0, 1e-15);
    EXPECT_THROW(fidelity(plus, psi2()), ValidationError);
}

TEST(Purities, RingStateMaximallyMixed) {
    for (double p : single_spin_purities(psi2())) {
        EXPECT_NEAR(p, 0.5, 1e-12);
    }
    for (double p : single_spin_purities(qubits(3, {{{1, 1, -1}, 1}}))) {
        EXPECT_NEAR(p, 1.0, 1e-12);
    }
}

TEST(Collapse, RingStateFirstSpin) {
    const Collapse c = projective_collapse(psi2(), 0, 1);
    EXPECT_NEAR(c.probability, 0.5, 1e-12);
    ASSERT_EQ(c.state.two_j.size(), 3u);
    const Classification k = classify(c.state);
    EXPECT_NE(k.kind, Separability::kFullyProduct);
    for (size_t s = 0; s < 3; ++s) {
        EXPECT_GE(bipartition_spectrum(c.state, {s}).rank(), 2u);
    }
}

TEST(Collapse, TwoThirds) {
    const CollapseTable t = collapse_table(psi2(), 0, 1);
    EXPECT_NEAR(t.first_probability, 0.5, 1e-12);
    EXPECT_NEAR(t.entangled_probability(), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(t.entangled_probability(1), 5.0 / 6.0, 1e-12);
    double total = 0;
    for (const auto &o : t.outcomes) {
        if (o.second_spin == 1) {
            total += o.probability;
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Collapse, ZeroProbabilityOutcome) {
    const Collapse c = projective_collapse(qubits(2, {{{1, 1}, 1}}), 0, -1);
    EXPECT_EQ(c.probability, 0.0);
    EXPECT_TRUE(c.state.empty());
}

TEST(Report, Fields) {
    const nlohmann::json r = entanglement_report(psi2(), "psi2");
    EXPECT_EQ(r["state_id"], "psi2");
    EXPECT_EQ(r["classification"], "genuine_multipartite");
    EXPECT_EQ(r["bipartitions"].size(), 7u);
    EXPECT_EQ(r["single_spin_purities"].size(), 4u);
    EXPECT_EQ(r["bipartitions"][0]["subset"], nlohmann::json::parse("[1]"));
}

}  // namespace
}  // namespace schwinger
