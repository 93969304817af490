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

#include "schwinger/fock_kernel.h"

#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schwinger {

GeneratorKernel::GeneratorKernel(const HGraph &graph, int max_photons)
    : n_modes_(graph.n_modes()), max_photons_(max_photons), edges_(graph.edges()) {
    if (max_photons < 0 || max_photons > 250) {
        throw std::invalid_argument("photon cap " + std::to_string(max_photons) + " out of range [0, 250]");
    }
    // Breadth-first closure of the vacuum under pair creation and
    // annihilation along edges, in sorted order for reproducible indexing.
    std::map<std::vector<uint8_t>, uint32_t> index;
    std::vector<std::vector<uint8_t>> found;
    std::deque<std::vector<uint8_t>> queue;
    std::vector<uint8_t> vac(n_modes_, 0);
    index.emplace(vac, 0);
    queue.push_back(vac);
    while (!queue.empty()) {
        std::vector<uint8_t> s = std::move(queue.front());
        queue.pop_front();
        found.push_back(s);
        int tot = 0;
        for (uint8_t n : s) {
            tot += n;
        }
        for (const auto &e : edges_) {
            if (tot + 2 <= max_photons_) {
                std::vector<uint8_t> t = s;
                ++t[e.a];
                ++t[e.b];
                if (index.emplace(t, 0).second) {
                    queue.push_back(std::move(t));
                }
            }
            if (s[e.a] > 0 && s[e.b] > 0) {
                std::vector<uint8_t> t = s;
                --t[e.a];
                --t[e.b];
                if (index.emplace(t, 0).second) {
                    queue.push_back(std::move(t));
                }
            }
        }
    }
    // Reindex by total photon number, then lexicographically; vacuum first.
    std::multimap<std::pair<int, std::vector<uint8_t>>, int> order;
    for (const auto &s : found) {
        int tot = 0;
        for (uint8_t n : s) {
            tot += n;
        }
        order.emplace(std::make_pair(tot, s), 0);
    }
    uint32_t next = 0;
    for (const auto &[key, unused] : order) {
        index[key.second] = next++;
        occupations_.insert(occupations_.end(), key.second.begin(), key.second.end());
        totals_.push_back(key.first);
    }

    const size_t n_edges = edges_.size();
    up_.assign(size() * n_edges, kNone);
    down_.assign(size() * n_edges, kNone);
    up_factor_.assign(size() * n_edges, 0.0);
    down_factor_.assign(size() * n_edges, 0.0);
    std::vector<uint8_t> t(n_modes_);
    for (size_t s = 0; s < size(); ++s) {
        auto occ = occupation(s);
        for (size_t k = 0; k < n_edges; ++k) {
            const auto &e = edges_[k];
            const double na = occ[e.a];
            const double nb = occ[e.b];
            if (totals_[s] + 2 <= max_photons_) {
                t.assign(occ.begin(), occ.end());
                ++t[e.a];
                ++t[e.b];
                up_[s * n_edges + k] = index.at(t);
                up_factor_[s * n_edges + k] = std::sqrt((na + 1) * (nb + 1));
            }
            if (na > 0 && nb > 0) {
                t.assign(occ.begin(), occ.end());
                --t[e.a];
                --t[e.b];
                down_[s * n_edges + k] = index.at(t);
                down_factor_[s * n_edges + k] = std::sqrt(na * nb);
            }
        }
    }
}

void GeneratorKernel::apply_serial(std::span<const Amplitude> in, std::span<Amplitude> out) const {
    const size_t n_edges = edges_.size();
    std::fill(out.begin(), out.end(), Amplitude(0.0, 0.0));
    for (size_t s = 0; s < size(); ++s) {
        const Amplitude v = in[s];
        if (v == Amplitude(0.0, 0.0)) {
            continue;
        }
        for (size_t k = 0; k < n_edges; ++k) {
            const double w = static_cast<double>(edges_[k].weight);
            if (uint32_t t = up_[s * n_edges + k]; t != kNone) {
                out[t] += w * up_factor_[s * n_edges + k] * v;
            }
            if (uint32_t t = down_[s * n_edges + k]; t != kNone) {
                out[t] -= w * down_factor_[s * n_edges + k] * v;
            }
        }
    }
}

void GeneratorKernel::apply_parallel(std::span<const Amplitude> in, std::span<Amplitude> out) const {
    const size_t n_edges = edges_.size();
    const long n = static_cast<long>(size());
    // Creation into t comes from down(t) with factor sqrt(n_a n_b) evaluated at
    // t; annihilation into t comes from up(t) with sqrt((n_a+1)(n_b+1)).
#pragma omp parallel for schedule(static)
    for (long t = 0; t < n; ++t) {
        Amplitude acc(0.0, 0.0);
        const size_t base = static_cast<size_t>(t) * n_edges;
        for (size_t k = 0; k < n_edges; ++k) {
            const double w = static_cast<double>(edges_[k].weight);
            if (uint32_t s = down_[base + k]; s != kNone) {
                acc += w * down_factor_[base + k] * in[s];
            }
            if (uint32_t s = up_[base + k]; s != kNone) {
                acc -= w * up_factor_[base + k] * in[s];
            }
        }
        out[t] = acc;
    }
}

double squared_norm(std::span<const Amplitude> v) {
    double acc = 0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return acc;
}

double squared_norm_parallel(std::span<const Amplitude> v) {
    double acc = 0;
    const long n = static_cast<long>(v.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (long k = 0; k < n; ++k) {
        acc += std::norm(v[k]);
    }
    return acc;
}

}  // namespace schwinger
