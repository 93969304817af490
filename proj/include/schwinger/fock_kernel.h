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

#ifndef SCHWINGER_FOCK_KERNEL_H
#define SCHWINGER_FOCK_KERNEL_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "schwinger/hgraph.h"

namespace schwinger {

using Amplitude = std::complex<double>;

/// Action of the squeezing generator K on the photon-pair-reachable Fock
/// basis with at most max_photons photons in total. Moves that would leave
/// that space are dropped, so the truncated K stays anti-Hermitian.
class GeneratorKernel {
   public:
    static constexpr uint32_t kNone = UINT32_MAX;

    GeneratorKernel(const HGraph &graph, int max_photons);

    size_t size() const {
        return totals_.size();
    }
    int n_modes() const {
        return n_modes_;
    }
    int max_photons() const {
        return max_photons_;
    }
    /// Occupation of basis state s (n_modes entries).
    std::span<const uint8_t> occupation(size_t s) const {
        return {occupations_.data() + s * n_modes_, static_cast<size_t>(n_modes_)};
    }
    int total(size_t s) const {
        return totals_[s];
    }
    size_t vacuum() const {
        return 0;
    }

    /// out = K in, scatter form; one thread. Reference for apply_parallel.
    void apply_serial(std::span<const Amplitude> in, std::span<Amplitude> out) const;
    /// out = K in, gather form parallelized over target states with OpenMP.
    void apply_parallel(std::span<const Amplitude> in, std::span<Amplitude> out) const;

   private:
    int n_modes_;
    int max_photons_;
    std::vector<HGraph::Edge> edges_;
    std::vector<uint8_t> occupations_;
    std::vector<int> totals_;
    // Per (state, edge): neighbour after creating / annihilating the pair and
    // the matrix element sqrt((n_a+1)(n_b+1)) resp. sqrt(n_a n_b).
    std::vector<uint32_t> up_;
    std::vector<uint32_t> down_;
    std::vector<double> up_factor_;
    std::vector<double> down_factor_;
};

double squared_norm(std::span<const Amplitude> v);
double squared_norm_parallel(std::span<const Amplitude> v);

}  // namespace schwinger

#endif
