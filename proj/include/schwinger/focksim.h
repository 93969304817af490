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

#ifndef SCHWINGER_FOCKSIM_H
#define SCHWINGER_FOCKSIM_H

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "schwinger/fock_kernel.h"
#include "schwinger/hgraph.h"
#include "schwinger/qops.h"

namespace schwinger {

using Occupation = std::vector<int>;

/// Sparse Fock-space state under a total-photon cutoff. Amplitudes are those
/// of the (unit-norm) evolved state restricted to the cutoff; norm_deficit is
/// the weight that fell above it.
struct FockVector {
    int n_modes = 0;
    int cutoff = 0;
    double r = 0;
    double norm_deficit = 0;
    std::map<Occupation, Amplitude> amplitudes;

    Amplitude amplitude(const Occupation &occ) const {
        auto it = amplitudes.find(occ);
        return it == amplitudes.end() ? Amplitude(0.0, 0.0) : it->second;
    }
    double squared_norm() const;
};

/// Stored amplitudes below this magnitude are dropped.
inline constexpr double kAmplitudeFloor = 1e-15;
/// norm_deficit above this is reported as insufficient cutoff.
inline constexpr double kDeficitWarning = 1e-6;

class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class TruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct EvolveOptions {
    double term_tolerance = 1e-14;
    int max_terms = 500;
    bool parallel = true;
};

/// exp(rK)|0> by the series sum_k r^k K^k |0> / k!, applied in a working
/// space one photon pair above the cutoff.
FockVector evolve_vacuum(const HGraph &graph, double r, int cutoff, const EvolveOptions &options = {});

/// Sparse action of a quadratic operator; the result may reach cutoff + 2.
std::map<Occupation, Amplitude> apply_op(const ApproxQuadOp &op, const std::map<Occupation, Amplitude> &state);

struct Moments {
    Amplitude expectation;
    double variance = 0;
};

/// <op> and <op^† op> - |<op>|^2 on the normalized state.
Moments expectation_variance(const ApproxQuadOp &op, const FockVector &state);
Moments expectation_variance(const QuadOp &op, const FockVector &state);

/// Multiplies each amplitude by e^{i phi n_mode}.
FockVector phase_shift(const FockVector &state, int mode, double phi);

/// Post-selected amplitudes in the per-pair |j, m> basis. Spin k has
/// dimension two_j[k] + 1; its local digit is j - m (equal to the photon count
/// of the pair's second mode); spin 0 is the most significant digit.
struct SpinSectorState {
    SpinPairing pairing;
    std::vector<int> two_j;
    std::vector<Amplitude> amplitudes;
    double selection_probability = 0;

    size_t n_spins() const {
        return two_j.size();
    }
    size_t local_dim(size_t spin) const {
        return static_cast<size_t>(two_j[spin]) + 1;
    }
    /// Product-basis index of per-spin 2m values.
    size_t index_of(const std::vector<int> &two_m) const;
    std::vector<int> two_m_of(size_t index) const;
    Amplitude amplitude(const std::vector<int> &two_m) const {
        return amplitudes[index_of(two_m)];
    }
    bool empty() const {
        return selection_probability == 0.0;
    }
    /// Uniform sector with all amplitudes zero.
    static SpinSectorState zeros(SpinPairing pairing, std::vector<int> two_j);
};

/// Projects onto n_a + n_b = 2 j_p for every pair and renormalizes. A zero
/// probability sector yields an all-zero state with selection_probability 0.
SpinSectorState casimir_postselect(const FockVector &state, const SpinPairing &pairing,
                                   const std::vector<int> &two_j);

/// The sector state as a Fock vector (n_a = j + m, n_b = j - m).
FockVector sector_to_fock(const SpinSectorState &sector, int n_modes);

/// Basis change to the detected fields b1 = a1 cos(t/2) + a2 e^{-i phi} sin(t/2),
/// b2 = -a1 sin(t/2) + a2 e^{-i phi} cos(t/2) on the given pair.
FockVector rotate_pair(const FockVector &state, std::pair<int, int> pair, double theta, double phi);

struct MeasurementAngles {
    double theta = 0;
    double phi = 0;
};

/// Joint photon-count distribution over (n_b1, n_b2) of every listed pair,
/// flattened as [n_b1(pair 0), n_b2(pair 0), n_b1(pair 1), ...]. Pairs must be
/// disjoint. The state is normalized first.
std::map<std::vector<int>, double> measure_spins(const FockVector &state, const SpinPairing &pairs,
                                                 const std::vector<MeasurementAngles> &angles);

/// Single-pair distribution over (n_b1, n_b2).
std::map<std::pair<int, int>, double> measure_spin(const FockVector &state, std::pair<int, int> pair, double theta,
                                                   double phi);
std::map<std::pair<int, int>, double> measure_spin(const SpinSectorState &state, std::pair<int, int> pair,
                                                   double theta, double phi);

/// Draws shots outcomes from a distribution with a seeded generator.
std::map<std::vector<int>, int> sample_counts(const std::map<std::vector<int>, double> &distribution, int shots,
                                              uint64_t seed);

/// Low-squeezing four-qubit state of a twin four-mode square template with
/// a = G12 G34 and b = G23 G14, expressed on the canonically relabeled
/// pairing (1,5),(6,2),(3,7),(8,4) with modes 6 and 8 phase shifted by pi.
struct PerturbativeQubitState {
    long a = 0;
    long b = 0;
    SpinSectorState state;
};
PerturbativeQubitState perturbative_qubit_state(const HGraph &graph);

/// Numeric counterpart of perturbative_qubit_state: evolve, apply the
/// canonical relabeling of the pairing, post-select every spin at j = 1/2.
SpinSectorState evolved_qubit_sector(const HGraph &graph, const SpinPairing &pairing, double r, int cutoff,
                                     bool canonical);

nlohmann::json fock_to_json(const FockVector &state);
FockVector fock_from_json(const nlohmann::json &doc);
nlohmann::json sector_to_json(const SpinSectorState &state);
SpinSectorState sector_from_json(const nlohmann::json &doc);

}  // namespace schwinger

#endif
