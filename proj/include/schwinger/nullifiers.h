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


#ifndef SCHWINGER_NULLIFIERS_H
#define SCHWINGER_NULLIFIERS_H

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

#include "schwinger/exact_linalg.h"
#include "schwinger/focksim.h"
#include "schwinger/hgraph.h"
#include "schwinger/qops.h"

namespace schwinger {

/// A linearly independent list of quadratic operators.
struct OperatorBasis {
    std::vector<QuadOp> elements;
    /// True when the identity lies in the space but is not listed.
    bool trivial_unit = false;

    size_t dimension() const {
        return elements.size();
    }
};

/// Coordinates of op over quadratic_basis(n_modes).
ExactVector quadratic_coords(const QuadOp &op, int n_modes);
QuadOp from_quadratic_coords(const ExactVector &coords, int n_modes);

/// Kernel of X -> [K, X] on the quadratic space of n_modes modes (n_modes < 0
/// infers it from K). The identity is always in the kernel and is excluded.
OperatorBasis ad_kernel(const QuadOp &k, int n_modes = -1);

/// Spin operators of a pairing in label order, followed by the identity.
OperatorBasis spin_span(const SpinPairing &pairing);

/// Labels of the spin coordinates: J0, Jz, Jx, Jy per pair, then "1".
std::vector<std::string> spin_labels(const SpinPairing &pairing);
QuadOp from_spin_coords(const ExactVector &coords, const SpinPairing &pairing);

struct ExactNullifier {
    QuadOp op;
    ExactVector spin;  // coordinates over spin_labels
};

struct AsymptoticNullifier {
    ApproxQuadOp op;
    std::vector<std::complex<double>> spin;
    double rate = 0;
};

struct NullifierSet {
    SpinPairing pairing;
    std::vector<ExactNullifier> exact;
    std::vector<AsymptoticNullifier> asymptotic;
};

/// Constants of the motion in the spin span that annihilate the vacuum, in
/// reduced row echelon form over the spin coordinates. With canonical set,
/// every second pair is reversed and its new first mode phase shifted by pi.
std::vector<ExactNullifier> exact_spin_nullifiers(const HGraph &g, const SpinPairing &pairing,
                                                  bool canonical = false);

/// Residual threshold for the numeric span tests.
inline constexpr double kSpanResidual = 1e-9;

struct GradedElement {
    std::vector<std::complex<double>> coords;  // over span
    double rate = 0;
};

/// Elements of span(candidates) that lie in span(span), graded by candidate
/// rate from fastest to slowest. Each level reports only what is new at that
/// level, in numeric reduced row echelon form over the span coordinates.
std::vector<GradedElement> graded_span_intersection(const std::vector<std::pair<ApproxQuadOp, double>> &candidates,
                                                   const std::vector<QuadOp> &span, int n_modes);

/// Spin-span elements of the products of squeezed forms, graded by decay rate.
std::vector<AsymptoticNullifier> asymptotic_spin_nullifiers(const HGraph &g, const SpinPairing &pairing,
                                                            bool canonical = false);

NullifierSet find_nullifiers(const HGraph &g, const SpinPairing &pairing, bool canonical = false);

/// Constants of the motion that conserve photon number, i.e. the kernel
/// restricted to the span of every pair's spin operators.
OperatorBasis number_conserving_constants(const HGraph &g);

/// Dimension of the span of several operator lists.
size_t span_dimension(const std::vector<QuadOp> &ops, int n_modes);

struct VerificationRow {
    double r = 0;
    std::complex<double> expectation;
    double variance = 0;
    double norm_deficit = 0;
    int cutoff = 0;
};

/// Largest cutoff that raise_cutoff may reach above the requested one.
inline constexpr int kMaxCutoffRaise = 20;

/// Moments of the Hermitian part of op on the evolved vacuum at each r.
/// Throws TruncationError if an evolved state loses more than
/// kDeficitWarning of its norm to the cutoff.
std::vector<VerificationRow> verify_nullifier(const ApproxQuadOp &op, const HGraph &g,
                                              const std::vector<double> &r_grid, int cutoff);
std::vector<VerificationRow> verify_nullifier(const QuadOp &op, const HGraph &g, const std::vector<double> &r_grid,
                                              int cutoff);

/// Same as verify_nullifier for many operators, evolving each state once.
/// With raise_cutoff the cutoff grows in steps of two, at most
/// kMaxCutoffRaise, until the deficit is within kDeficitWarning.
std::vector<std::vector<VerificationRow>> verify_nullifiers(const std::vector<ApproxQuadOp> &ops, const HGraph &g,
                                                            const std::vector<double> &r_grid, int cutoff,
                                                            bool raise_cutoff = false);

/// Human readable linear combination of labels, e.g. "J0(1,3) - J0(2,4)".
std::string spin_expression(const ExactVector &coords, const SpinPairing &pairing);
std::string spin_expression(const std::vector<std::complex<double>> &coords, const SpinPairing &pairing);

nlohmann::json verification_to_json(const std::vector<VerificationRow> &rows);
nlohmann::json nullifier_report(const NullifierSet &set, const std::vector<std::vector<VerificationRow>> &exact_checks,
                                const std::vector<std::vector<VerificationRow>> &asymptotic_checks);

}  // namespace schwinger

#endif  // SCHWINGER_NULLIFIERS_H
