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


#ifndef SCHWINGER_ENTANGLE_H
#define SCHWINGER_ENTANGLE_H

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "schwinger/focksim.h"

namespace schwinger {

/// Schmidt coefficients below this count as zero.
inline constexpr double kSchmidtThreshold = 1e-8;
/// Allowed deviation of the squared norm from one.
inline constexpr double kNormTolerance = 1e-10;
inline constexpr size_t kMaxClassifiedSpins = 12;

struct SchmidtSpectrum {
    std::vector<size_t> subset;
    std::vector<double> coefficients;  // descending
    double entropy = 0;                // bits

    size_t rank() const;
};

/// Singular values of the amplitudes reshaped as subset x complement.
SchmidtSpectrum bipartition_spectrum(const SpinSectorState &state, std::vector<size_t> subset);

/// Proper subsets containing spin 0, by size then lexicographically. Each
/// bipartition of the spins appears once.
std::vector<std::vector<size_t>> bipartitions(size_t n_spins);

enum class Separability { kFullyProduct, kBiseparable, kGenuineMultipartite };

const char *separability_name(Separability s);

struct Classification {
    Separability kind = Separability::kGenuineMultipartite;
    /// Smallest factorizing subset containing spin 0, when one exists.
    std::optional<std::vector<size_t>> witness;
};

Classification classify(const SpinSectorState &state);

double fidelity(const SpinSectorState &a, const SpinSectorState &b);

struct Collapse {
    SpinSectorState state;  // measured spin removed
    double probability = 0;
};

/// Projects one spin onto Jz = two_m / 2.
Collapse projective_collapse(const SpinSectorState &state, size_t spin, int two_m);

struct CollapseOutcome {
    size_t second_spin = 0;
    int second_two_m = 0;
    double probability = 0;  // conditional on the first outcome
    bool residual_entangled = false;
};

struct CollapseTable {
    size_t first_spin = 0;
    int first_two_m = 0;
    double first_probability = 0;
    std::vector<CollapseOutcome> outcomes;

    /// Probability that the residual is entangled when the second spin is
    /// drawn uniformly from the remaining ones.
    double entangled_probability() const;
    /// Same, for a fixed second spin.
    double entangled_probability(size_t second_spin) const;
};

/// Every second projection after a fixed first one, on a qubit state.
CollapseTable collapse_table(const SpinSectorState &state, size_t first_spin, int first_two_m);

std::vector<double> single_spin_purities(const SpinSectorState &state);

/// "{15,37}|{26,48}" style label of a bipartition, each spin named by its modes.
std::string partition_label(const SpinPairing &pairing, const std::vector<size_t> &subset);

nlohmann::json entanglement_report(const SpinSectorState &state, const std::string &state_id);

}  // namespace schwinger

#endif  // SCHWINGER_ENTANGLE_H
