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


#include "schwinger/entangle.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace schwinger {

namespace {

double squared_norm(const SpinSectorState &s) {
    double acc = 0;
    for (const auto &a : s.amplitudes) {
        acc += std::norm(a);
    }
    return acc;
}

void require_normalized(const SpinSectorState &s) {
    const double n2 = squared_norm(s);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw ValidationError("state is not normalized (squared norm " + std::to_string(n2) + ")");
    }
}

void require_qubits(const SpinSectorState &s) {
    for (size_t k = 0; k < s.n_spins(); ++k) {
        if (s.two_j[k] != 1) {
            throw ValidationError("spin " + std::to_string(k + 1) + " has j = " + std::to_string(s.two_j[k]) +
                                  "/2; only j = 1/2 sectors are supported here");
        }
    }
}

// Digits of every basis index: d = j - m.
std::vector<size_t> digits(const SpinSectorState &s, size_t index) {
    std::vector<size_t> d(s.n_spins());
    for (size_t k = s.n_spins(); k-- > 0;) {
        d[k] = index % s.local_dim(k);
        index /= s.local_dim(k);
    }
    return d;
}

}  // namespace

size_t SchmidtSpectrum::rank() const {
    return static_cast<size_t>(
        std::count_if(coefficients.begin(), coefficients.end(), [](double c) { return c > kSchmidtThreshold; }));
}

SchmidtSpectrum bipartition_spectrum(const SpinSectorState &state, std::vector<size_t> subset) {
    const size_t n = state.n_spins();
    std::sort(subset.begin(), subset.end());
    if (subset.empty() || subset.size() >= n || std::adjacent_find(subset.begin(), subset.end()) != subset.end() ||
        subset.back() >= n) {
        throw ValidationError("bipartition subset must be a proper nonempty set of distinct spin indices");
    }
    require_normalized(state);
    std::vector<bool> in_subset(n, false);
    for (size_t k : subset) {
        in_subset[k] = true;
    }
    Eigen::Index rows = 1;
    Eigen::Index cols = 1;
    for (size_t k = 0; k < n; ++k) {
        (in_subset[k] ? rows : cols) *= static_cast<Eigen::Index>(state.local_dim(k));
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    for (size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        if (state.amplitudes[idx] == Amplitude(0.0, 0.0)) {
            continue;
        }
        const auto d = digits(state, idx);
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        for (size_t k = 0; k < n; ++k) {
            const auto dim = static_cast<Eigen::Index>(state.local_dim(k));
            if (in_subset[k]) {
                r = r * dim + static_cast<Eigen::Index>(d[k]);
            } else {
                c = c * dim + static_cast<Eigen::Index>(d[k]);
            }
        }
        m(r, c) = state.amplitudes[idx];
    }
    SchmidtSpectrum out;
    out.subset = std::move(subset);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        const double c = sv(k);
        out.coefficients.push_back(c);
        const double p = c * c;
        if (p > 0) {
            out.entropy -= p * std::log2(p);
        }
    }
    return out;
}

std::vector<std::vector<size_t>> bipartitions(size_t n_spins) {
    std::vector<std::vector<size_t>> out;
    if (n_spins < 2) {
        return out;
    }
    for (size_t size = 1; size < n_spins; ++size) {
        // Choose size - 1 further spins from 1..n-1 in lexicographic order.
        std::vector<size_t> pick(size - 1);
        for (size_t k = 0; k < pick.size(); ++k) {
            pick[k] = k + 1;
        }
        while (true) {
            std::vector<size_t> subset{0};
            subset.insert(subset.end(), pick.begin(), pick.end());
            out.push_back(std::move(subset));
            long k = static_cast<long>(pick.size()) - 1;
            while (k >= 0 && pick[k] == n_spins - pick.size() + static_cast<size_t>(k)) {
                --k;
            }
            if (k < 0) {
                break;
            }
            ++pick[k];
            for (size_t t = static_cast<size_t>(k) + 1; t < pick.size(); ++t) {
                pick[t] = pick[t - 1] + 1;
            }
        }
    }
    return out;
}

const char *separability_name(Separability s) {
    switch (s) {
        case Separability::kFullyProduct:
            return "fully_product";
        case Separability::kBiseparable:
            return "biseparable";
        case Separability::kGenuineMultipartite:
            return "genuine_multipartite";
    }
    return "?";
}

Classification classify(const SpinSectorState &state) {
    require_qubits(state);
    if (state.n_spins() > kMaxClassifiedSpins) {
        throw ValidationError("classification supports at most " + std::to_string(kMaxClassifiedSpins) + " spins");
    }
    require_normalized(state);
    Classification out;
    if (state.n_spins() < 2) {
        out.kind = Separability::kFullyProduct;
        return out;
    }
    bool all_single_product = true;
    for (size_t k = 0; k < state.n_spins(); ++k) {
        if (bipartition_spectrum(state, {k}).rank() > 1) {
            all_single_product = false;
            break;
        }
    }
    for (const auto &subset : bipartitions(state.n_spins())) {
        if (bipartition_spectrum(state, subset).rank() <= 1) {
            out.witness = subset;
            break;
        }
    }
    if (all_single_product) {
        out.kind = Separability::kFullyProduct;
    } else if (out.witness) {
        out.kind = Separability::kBiseparable;
    } else {
        out.kind = Separability::kGenuineMultipartite;
    }
    return out;
}

double fidelity(const SpinSectorState &a, const SpinSectorState &b) {
    if (a.two_j != b.two_j || a.pairing.size() != b.pairing.size()) {
        throw ValidationError("fidelity needs states with the same spin count and j values");
    }
    const double na = squared_norm(a);
    const double nb = squared_norm(b);
    if (na == 0.0 || nb == 0.0) {
        throw ValidationError("fidelity of an empty state");
    }
    Amplitude overlap(0.0, 0.0);
    for (size_t k = 0; k < a.amplitudes.size(); ++k) {
        overlap += std::conj(a.amplitudes[k]) * b.amplitudes[k];
    }
    return std::min(1.0, std::norm(overlap) / (na * nb));
}

Collapse projective_collapse(const SpinSectorState &state, size_t spin, int two_m) {
    if (spin >= state.n_spins()) {
        throw ValidationError("spin index " + std::to_string(spin + 1) + " out of range");
    }
    const int tj = state.two_j[spin];
    if (std::abs(two_m) > tj || (tj - two_m) % 2 != 0) {
        throw ValidationError("m = " + std::to_string(two_m) + "/2 is not a valid outcome for spin " +
                              std::to_string(spin + 1));
    }
    std::vector<std::pair<int, int>> pairs = state.pairing.pairs();
    std::vector<int> rest_j = state.two_j;
    pairs.erase(pairs.begin() + static_cast<long>(spin));
    rest_j.erase(rest_j.begin() + static_cast<long>(spin));
    Collapse out{SpinSectorState::zeros(SpinPairing(pairs), rest_j), 0.0};

    const double total = squared_norm(state);
    if (total == 0.0) {
        return out;
    }
    const size_t want = static_cast<size_t>((tj - two_m) / 2);
    double kept = 0;
    for (size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        auto d = digits(state, idx);
        if (d[spin] != want) {
            continue;
        }
        size_t target = 0;
        for (size_t k = 0, r = 0; k < d.size(); ++k) {
            if (k == spin) {
                continue;
            }
            target = target * out.state.local_dim(r) + d[k];
            ++r;
        }
        out.state.amplitudes[target] = state.amplitudes[idx];
        kept += std::norm(state.amplitudes[idx]);
    }
    out.probability = kept / total;
    if (out.probability < kNormTolerance) {
        std::fill(out.state.amplitudes.begin(), out.state.amplitudes.end(), Amplitude(0.0, 0.0));
        out.probability = 0;
        return out;
    }
    const double inv = 1.0 / std::sqrt(kept);
    for (auto &a : out.state.amplitudes) {
        a *= inv;
    }
    out.state.selection_probability = state.selection_probability * out.probability;
    return out;
}

double CollapseTable::entangled_probability(size_t second_spin) const {
    double p = 0;
    for (const auto &o : outcomes) {
        if (o.second_spin == second_spin && o.residual_entangled) {
            p += o.probability;
        }
    }
    return p;
}

double CollapseTable::entangled_probability() const {
    std::vector<size_t> spins;
    for (const auto &o : outcomes) {
        if (std::find(spins.begin(), spins.end(), o.second_spin) == spins.end()) {
            spins.push_back(o.second_spin);
        }
    }
    if (spins.empty()) {
        return 0;
    }
    double p = 0;
    for (size_t s : spins) {
        p += entangled_probability(s);
    }
    return p / static_cast<double>(spins.size());
}

CollapseTable collapse_table(const SpinSectorState &state, size_t first_spin, int first_two_m) {
    require_qubits(state);
    if (state.n_spins() < 3) {
        throw ValidationError("two projections need at least three spins");
    }
    CollapseTable table;
    table.first_spin = first_spin;
    table.first_two_m = first_two_m;
    const Collapse first = projective_collapse(state, first_spin, first_two_m);
    table.first_probability = first.probability;
    if (first.probability == 0.0) {
        return table;
    }
    for (size_t k = 0; k < first.state.n_spins(); ++k) {
        const size_t original = k < first_spin ? k : k + 1;
        for (int two_m : {1, -1}) {
            const Collapse second = projective_collapse(first.state, k, two_m);
            CollapseOutcome o;
            o.second_spin = original;
            o.second_two_m = two_m;
            o.probability = second.probability;
            if (second.probability > 0.0 && second.state.n_spins() >= 2) {
                o.residual_entangled = classify(second.state).kind != Separability::kFullyProduct;
            }
            table.outcomes.push_back(o);
        }
    }
    return table;
}

std::vector<double> single_spin_purities(const SpinSectorState &state) {
    std::vector<double> out;
    if (state.n_spins() == 1) {
        require_normalized(state);
        out.push_back(1.0);
        return out;
    }
    for (size_t k = 0; k < state.n_spins(); ++k) {
        double purity = 0;
        for (double c : bipartition_spectrum(state, {k}).coefficients) {
            purity += c * c * c * c;
        }
        out.push_back(purity);
    }
    return out;
}

std::string partition_label(const SpinPairing &pairing, const std::vector<size_t> &subset) {
    auto spin_name = [&](size_t k) {
        auto [a, b] = pairing[k];
        if (a > b) {
            std::swap(a, b);
        }
        if (a < 9 && b < 9) {
            return std::to_string(a + 1) + std::to_string(b + 1);
        }
        return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
    };
    std::vector<bool> in(pairing.size(), false);
    for (size_t k : subset) {
        in[k] = true;
    }
    std::string left = "{";
    std::string right = "{";
    for (size_t k = 0; k < pairing.size(); ++k) {
        std::string &side = in[k] ? left : right;
        if (side.size() > 1) {
            side += ",";
        }
        side += spin_name(k);
    }
    return left + "}|" + right + "}";
}

nlohmann::json entanglement_report(const SpinSectorState &state, const std::string &state_id) {
    require_normalized(state);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto &subset : bipartitions(state.n_spins())) {
        const auto spec = bipartition_spectrum(state, subset);
        nlohmann::json spins = nlohmann::json::array();
        for (size_t k : subset) {
            spins.push_back(k + 1);
        }
        parts.push_back({{"subset", std::move(spins)},
                         {"partition", partition_label(state.pairing, subset)},
                         {"coefficients", spec.coefficients},
                         {"entropy", spec.entropy},
                         {"schmidt_rank", spec.rank()}});
    }
    nlohmann::json report = {{"state_id", state_id},
                             {"bipartitions", std::move(parts)},
                             {"single_spin_purities", single_spin_purities(state)}};
    const bool qubits = std::all_of(state.two_j.begin(), state.two_j.end(), [](int tj) { return tj == 1; });
    if (qubits && state.n_spins() <= kMaxClassifiedSpins) {
        const Classification c = classify(state);
        report["classification"] = separability_name(c.kind);
        if (c.kind == Separability::kBiseparable && c.witness) {
            report["witness"] = partition_label(state.pairing, *c.witness);
        } else {
            report["witness"] = nullptr;
        }
    } else {
        report["classification"] = nullptr;
        report["witness"] = nullptr;
    }
    return report;
}

}  // namespace schwinger
