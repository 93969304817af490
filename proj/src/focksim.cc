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

#include "schwinger/focksim.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schwinger {

double FockVector::squared_norm() const {
    double acc = 0;
    for (const auto &[occ, amp] : amplitudes) {
        acc += std::norm(amp);
    }
    return acc;
}

FockVector evolve_vacuum(const HGraph &graph, double r, int cutoff, const EvolveOptions &options) {
    if (!(r >= 0) || !std::isfinite(r)) {
        throw ValidationError("squeezing parameter r must be finite and >= 0");
    }
    if (cutoff < 2 || cutoff % 2 != 0) {
        throw ValidationError("cutoff must be an even integer >= 2, got " + std::to_string(cutoff));
    }
    GeneratorKernel kernel(graph, cutoff + 2);
    const size_t n = kernel.size();
    std::vector<Amplitude> sum(n), term(n), next(n);
    term[kernel.vacuum()] = 1.0;
    sum[kernel.vacuum()] = 1.0;
    const double tol2 = options.term_tolerance * options.term_tolerance;
    bool converged = r == 0.0;
    for (int k = 0; k < options.max_terms && !converged; ++k) {
        if (options.parallel) {
            kernel.apply_parallel(term, next);
        } else {
            kernel.apply_serial(term, next);
        }
        const double scale = r / (k + 1);
        const long len = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (options.parallel)
        for (long s = 0; s < len; ++s) {
            next[s] *= scale;
            sum[s] += next[s];
        }
        std::swap(term, next);
        converged = (options.parallel ? squared_norm_parallel(term) : squared_norm(term)) < tol2;
    }
    if (!converged) {
        throw ConvergenceError("vacuum evolution did not converge within " + std::to_string(options.max_terms) +
                               " series terms (r = " + std::to_string(r) + ")");
    }

    FockVector out;
    out.n_modes = graph.n_modes();
    out.cutoff = cutoff;
    out.r = r;
    double kept = 0;
    for (size_t s = 0; s < n; ++s) {
        if (kernel.total(s) > cutoff || std::abs(sum[s]) < kAmplitudeFloor) {
            continue;
        }
        auto occ = kernel.occupation(s);
        out.amplitudes.emplace(Occupation(occ.begin(), occ.end()), sum[s]);
        kept += std::norm(sum[s]);
    }
    out.norm_deficit = 1.0 - kept;
    return out;
}

namespace {

void add_into(std::map<Occupation, Amplitude> &acc, const Occupation &occ, const Amplitude &value) {
    auto [it, inserted] = acc.emplace(occ, value);
    if (!inserted) {
        it->second += value;
    }
}

void apply_term(const Monomial &m, const Amplitude &c, const Occupation &occ, const Amplitude &amp,
                Occupation &scratch, std::map<Occupation, Amplitude> &out) {
    scratch = occ;
    double factor = 1.0;
    auto word = monomial_word(m);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int &n = scratch[it->mode];
        if (it->dagger) {
            factor *= std::sqrt(n + 1.0);
            ++n;
        } else {
            if (n == 0) {
                return;
            }
            factor *= std::sqrt(static_cast<double>(n));
            --n;
        }
    }
    add_into(out, scratch, c * amp * factor);
}

}  // namespace

std::map<Occupation, Amplitude> apply_op(const ApproxQuadOp &op, const std::map<Occupation, Amplitude> &state) {
    for (const auto &[m, c] : op.terms()) {
        if (m.kind == Monomial::Kind::kUnit || state.empty()) {
            continue;
        }
        const int need = std::max(m.i, m.j);
        if (need >= static_cast<int>(state.begin()->first.size())) {
            throw ValidationError("operator references mode " + std::to_string(need + 1) +
                                  " beyond the state's mode count");
        }
    }
    std::vector<std::pair<const Occupation *, Amplitude>> entries;
    entries.reserve(state.size());
    for (const auto &[occ, amp] : state) {
        entries.emplace_back(&occ, amp);
    }
    const long n = static_cast<long>(entries.size());
    int n_threads = 1;
#ifdef _OPENMP
    n_threads = omp_get_max_threads();
#endif
    std::vector<std::map<Occupation, Amplitude>> partial(n_threads);
#pragma omp parallel
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        Occupation scratch;
        auto &local = partial[tid];
#pragma omp for schedule(static)
        for (long k = 0; k < n; ++k) {
            for (const auto &[m, c] : op.terms()) {
                apply_term(m, c, *entries[k].first, entries[k].second, scratch, local);
            }
        }
    }
    std::map<Occupation, Amplitude> out = std::move(partial[0]);
    for (int t = 1; t < n_threads; ++t) {
        for (const auto &[occ, amp] : partial[t]) {
            add_into(out, occ, amp);
        }
    }
    return out;
}

Moments expectation_variance(const ApproxQuadOp &op, const FockVector &state) {
    const double norm2 = state.squared_norm();
    if (norm2 == 0.0) {
        throw ValidationError("expectation of an empty state");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    std::map<Occupation, Amplitude> psi;
    for (const auto &[occ, amp] : state.amplitudes) {
        psi.emplace(occ, amp * inv);
    }
    auto phi = apply_op(op, psi);
    Amplitude mean(0.0, 0.0);
    double second = 0;
    for (const auto &[occ, amp] : phi) {
        second += std::norm(amp);
        auto it = psi.find(occ);
        if (it != psi.end()) {
            mean += std::conj(it->second) * amp;
        }
    }
    return {mean, std::max(0.0, second - std::norm(mean))};
}

Moments expectation_variance(const QuadOp &op, const FockVector &state) {
    return expectation_variance(to_approx(op), state);
}

FockVector phase_shift(const FockVector &state, int mode, double phi) {
    if (mode < 0 || mode >= state.n_modes) {
        throw ValidationError("phase shift on mode " + std::to_string(mode + 1) + " outside 1.." +
                              std::to_string(state.n_modes));
    }
    FockVector out = state;
    for (auto &[occ, amp] : out.amplitudes) {
        amp *= std::polar(1.0, phi * occ[mode]);
    }
    return out;
}

size_t SpinSectorState::index_of(const std::vector<int> &two_m) const {
    if (two_m.size() != two_j.size()) {
        throw std::invalid_argument("m-tuple length does not match the number of spins");
    }
    size_t idx = 0;
    for (size_t k = 0; k < two_j.size(); ++k) {
        const int d2 = two_j[k] - two_m[k];
        if (d2 < 0 || d2 > 2 * two_j[k] || d2 % 2 != 0) {
            throw std::invalid_argument("m value out of range for spin " + std::to_string(k));
        }
        idx = idx * local_dim(k) + static_cast<size_t>(d2 / 2);
    }
    return idx;
}

std::vector<int> SpinSectorState::two_m_of(size_t index) const {
    std::vector<int> out(two_j.size());
    for (size_t k = two_j.size(); k-- > 0;) {
        const size_t d = index % local_dim(k);
        index /= local_dim(k);
        out[k] = two_j[k] - 2 * static_cast<int>(d);
    }
    return out;
}

SpinSectorState SpinSectorState::zeros(SpinPairing pairing, std::vector<int> two_j) {
    SpinSectorState s;
    size_t dim = 1;
    for (int tj : two_j) {
        if (tj < 0) {
            throw ValidationError("spin magnitude must be >= 0");
        }
        dim *= static_cast<size_t>(tj) + 1;
    }
    s.pairing = std::move(pairing);
    s.two_j = std::move(two_j);
    s.amplitudes.assign(dim, Amplitude(0.0, 0.0));
    return s;
}

SpinSectorState casimir_postselect(const FockVector &state, const SpinPairing &pairing,
                                   const std::vector<int> &two_j) {
    if (two_j.size() != pairing.size()) {
        throw ValidationError("j list has " + std::to_string(two_j.size()) + " entries but the pairing has " +
                              std::to_string(pairing.size()) + " spins");
    }
    pairing.check_fits(state.n_modes);
    SpinSectorState out = SpinSectorState::zeros(pairing, two_j);
    std::vector<bool> paired(state.n_modes, false);
    for (const auto &[a, b] : pairing.pairs()) {
        paired[a] = paired[b] = true;
    }
    double weight = 0;
    for (const auto &[occ, amp] : state.amplitudes) {
        size_t idx = 0;
        bool match = true;
        for (size_t k = 0; k < pairing.size() && match; ++k) {
            const auto [a, b] = pairing[k];
            match = occ[a] + occ[b] == two_j[k];
            idx = idx * out.local_dim(k) + static_cast<size_t>(occ[b]);
        }
        if (!match) {
            continue;
        }
        for (int m = 0; m < state.n_modes; ++m) {
            if (!paired[m] && occ[m] != 0) {
                throw ValidationError("unpaired mode " + std::to_string(m + 1) +
                                      " carries photons in the selected sector");
            }
        }
        out.amplitudes[idx] += amp;
        weight += std::norm(amp);
    }
    const double total = state.squared_norm() + std::max(0.0, state.norm_deficit);
    if (weight == 0.0 || total == 0.0) {
        std::fill(out.amplitudes.begin(), out.amplitudes.end(), Amplitude(0.0, 0.0));
        out.selection_probability = 0.0;
        return out;
    }
    const double inv = 1.0 / std::sqrt(weight);
    for (auto &amp : out.amplitudes) {
        amp *= inv;
    }
    out.selection_probability = weight / total;
    return out;
}

FockVector sector_to_fock(const SpinSectorState &sector, int n_modes) {
    sector.pairing.check_fits(n_modes);
    FockVector out;
    out.n_modes = n_modes;
    int total = 0;
    for (int tj : sector.two_j) {
        total += tj;
    }
    out.cutoff = total;
    for (size_t idx = 0; idx < sector.amplitudes.size(); ++idx) {
        if (std::abs(sector.amplitudes[idx]) < kAmplitudeFloor) {
            continue;
        }
        auto two_m = sector.two_m_of(idx);
        Occupation occ(n_modes, 0);
        for (size_t k = 0; k < sector.n_spins(); ++k) {
            occ[sector.pairing[k].first] = (sector.two_j[k] + two_m[k]) / 2;
            occ[sector.pairing[k].second] = (sector.two_j[k] - two_m[k]) / 2;
        }
        out.amplitudes.emplace(std::move(occ), sector.amplitudes[idx]);
    }
    return out;
}

namespace {

// Amplitude of |k, N-k>_b inside |n1, N-n1>_a.
std::vector<std::vector<Amplitude>> rotation_block(int total, double theta, double phi) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    auto binom = [](int n, int k) {
        return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    };
    std::vector<std::vector<Amplitude>> t(total + 1, std::vector<Amplitude>(total + 1));
    for (int n1 = 0; n1 <= total; ++n1) {
        const int n2 = total - n1;
        // (c x - s y)^{n1} (s x + c y)^{n2} e^{-i phi n2}
        std::vector<double> poly(total + 1, 0.0);
        for (int i = 0; i <= n1; ++i) {
            const double left = binom(n1, i) * std::pow(c, i) * std::pow(-s, n1 - i);
            for (int l = 0; l <= n2; ++l) {
                poly[i + l] += left * binom(n2, l) * std::pow(s, l) * std::pow(c, n2 - l);
            }
        }
        const Amplitude phase = std::polar(1.0, -phi * n2);
        for (int k = 0; k <= total; ++k) {
            const double scale = std::exp(0.5 * (std::lgamma(k + 1.0) + std::lgamma(total - k + 1.0) -
                                                 std::lgamma(n1 + 1.0) - std::lgamma(n2 + 1.0)));
            t[k][n1] = poly[k] * scale * phase;
        }
    }
    return t;
}

}  // namespace

FockVector rotate_pair(const FockVector &state, std::pair<int, int> pair, double theta, double phi) {
    const auto [a, b] = pair;
    if (a == b || a < 0 || b < 0 || a >= state.n_modes || b >= state.n_modes) {
        throw ValidationError("measured pair (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                              ") is not a pair of distinct modes of the state");
    }
    // Group amplitudes by the spectator occupation and the pair's total.
    std::map<std::pair<Occupation, int>, std::map<int, Amplitude>> groups;
    for (const auto &[occ, amp] : state.amplitudes) {
        Occupation rest = occ;
        rest[a] = rest[b] = 0;
        groups[{std::move(rest), occ[a] + occ[b]}][occ[a]] += amp;
    }
    std::map<int, std::vector<std::vector<Amplitude>>> blocks;
    FockVector out = state;
    out.amplitudes.clear();
    for (const auto &[key, by_n1] : groups) {
        const int total = key.second;
        auto it = blocks.find(total);
        if (it == blocks.end()) {
            it = blocks.emplace(total, rotation_block(total, theta, phi)).first;
        }
        for (int k = 0; k <= total; ++k) {
            Amplitude acc(0.0, 0.0);
            for (const auto &[n1, amp] : by_n1) {
                acc += it->second[k][n1] * amp;
            }
            if (std::abs(acc) < kAmplitudeFloor) {
                continue;
            }
            Occupation occ = key.first;
            occ[a] = k;
            occ[b] = total - k;
            out.amplitudes.emplace(std::move(occ), acc);
        }
    }
    return out;
}

std::map<std::vector<int>, double> measure_spins(const FockVector &state, const SpinPairing &pairs,
                                                 const std::vector<MeasurementAngles> &angles) {
    if (angles.size() != pairs.size()) {
        throw ValidationError("got " + std::to_string(angles.size()) + " measurement directions for " +
                              std::to_string(pairs.size()) + " pairs");
    }
    for (const auto &ang : angles) {
        if (!(ang.theta >= 0 && ang.theta <= std::numbers::pi) || !(ang.phi >= 0 && ang.phi < 2 * std::numbers::pi)) {
            throw ValidationError("measurement angles need theta in [0, pi] and phi in [0, 2pi)");
        }
    }
    FockVector rotated = state;
    for (size_t k = 0; k < pairs.size(); ++k) {
        rotated = rotate_pair(rotated, pairs[k], angles[k].theta, angles[k].phi);
    }
    const double norm2 = rotated.squared_norm();
    if (norm2 == 0.0) {
        throw ValidationError("cannot measure an empty state");
    }
    std::map<std::vector<int>, double> dist;
    for (const auto &[occ, amp] : rotated.amplitudes) {
        std::vector<int> key;
        for (const auto &[a, b] : pairs.pairs()) {
            key.push_back(occ[a]);
            key.push_back(occ[b]);
        }
        dist[key] += std::norm(amp) / norm2;
    }
    return dist;
}

std::map<std::pair<int, int>, double> measure_spin(const FockVector &state, std::pair<int, int> pair, double theta,
                                                   double phi) {
    std::map<std::pair<int, int>, double> out;
    for (const auto &[key, p] : measure_spins(state, SpinPairing({pair}), {{theta, phi}})) {
        out[{key[0], key[1]}] += p;
    }
    return out;
}

std::map<std::pair<int, int>, double> measure_spin(const SpinSectorState &state, std::pair<int, int> pair,
                                                   double theta, double phi) {
    const int n_modes = std::max(state.pairing.max_mode(), std::max(pair.first, pair.second)) + 1;
    return measure_spin(sector_to_fock(state, n_modes), pair, theta, phi);
}

std::map<std::vector<int>, int> sample_counts(const std::map<std::vector<int>, double> &distribution, int shots,
                                              uint64_t seed) {
    if (shots < 0) {
        throw ValidationError("shot count must be >= 0");
    }
    std::vector<const std::vector<int> *> outcomes;
    std::vector<double> weights;
    for (const auto &[key, p] : distribution) {
        outcomes.push_back(&key);
        weights.push_back(p);
    }
    std::map<std::vector<int>, int> counts;
    if (outcomes.empty() || shots == 0) {
        return counts;
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<size_t> pick(weights.begin(), weights.end());
    for (int s = 0; s < shots; ++s) {
        ++counts[*outcomes[pick(rng)]];
    }
    return counts;
}

PerturbativeQubitState perturbative_qubit_state(const HGraph &graph) {
    if (graph.n_modes() != 8) {
        throw ValidationError("perturbative qubit state needs an 8-mode twin square graph, got " +
                              std::to_string(graph.n_modes()) + " modes");
    }
    const std::pair<int, int> allowed[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    for (int j = 0; j < 8; ++j) {
        for (int k = j + 1; k < 8; ++k) {
            if (graph.weight(j, k) == 0) {
                continue;
            }
            const int base = j < 4 ? 0 : 4;
            bool ok = k - base < 4 && j - base >= 0 && k >= base;
            ok = ok && std::any_of(std::begin(allowed), std::end(allowed),
                                   [&](auto e) { return e.first == j - base && e.second == k - base; });
            if (!ok) {
                throw ValidationError("edge (" + std::to_string(j + 1) + ", " + std::to_string(k + 1) +
                                      ") is outside the twin square template");
            }
        }
    }
    for (const auto &[j, k] : allowed) {
        if (graph.weight(j, k) != graph.weight(j + 4, k + 4)) {
            throw ValidationError("twin blocks differ at edge (" + std::to_string(j + 1) + ", " +
                                  std::to_string(k + 1) + ")");
        }
    }
    PerturbativeQubitState out;
    out.a = graph.weight(0, 1) * graph.weight(2, 3);
    out.b = graph.weight(1, 2) * graph.weight(0, 3);
    const double norm2 = 2.0 * (out.a * out.a + out.b * out.b + (out.a + out.b) * (out.a + out.b));
    if (norm2 == 0.0) {
        throw ValidationError("graph produces no four-qubit amplitude at second order (a = b = 0)");
    }
    const Relabeling rel = canonical_relabeling(SpinPairing({{0, 4}, {1, 5}, {2, 6}, {3, 7}}));
    out.state = SpinSectorState::zeros(rel.pairing, {1, 1, 1, 1});
    const double inv = 1.0 / std::sqrt(norm2);
    auto set = [&](std::vector<int> two_m, double value) { out.state.amplitudes[out.state.index_of(two_m)] = value * inv; };
    set({1, -1, -1, 1}, static_cast<double>(out.a));
    set({-1, 1, 1, -1}, static_cast<double>(out.a));
    set({1, 1, -1, -1}, static_cast<double>(out.b));
    set({-1, -1, 1, 1}, static_cast<double>(out.b));
    set({1, -1, 1, -1}, -static_cast<double>(out.a + out.b));
    set({-1, 1, -1, 1}, -static_cast<double>(out.a + out.b));
    out.state.selection_probability = 1.0;
    return out;
}

SpinSectorState evolved_qubit_sector(const HGraph &graph, const SpinPairing &pairing, double r, int cutoff,
                                     bool canonical) {
    FockVector state = evolve_vacuum(graph, r, cutoff);
    SpinPairing used = pairing;
    if (canonical) {
        Relabeling rel = canonical_relabeling(pairing);
        for (int mode : rel.phase_flip_modes) {
            state = phase_shift(state, mode, std::numbers::pi);
        }
        used = rel.pairing;
    }
    return casimir_postselect(state, used, std::vector<int>(used.size(), 1));
}

namespace {

nlohmann::json pairing_json(const SpinPairing &pairing) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[a, b] : pairing.pairs()) {
        out.push_back({a + 1, b + 1});
    }
    return out;
}

SpinPairing pairing_from_json(const nlohmann::json &doc) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto &p : doc) {
        pairs.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
    }
    return SpinPairing(std::move(pairs));
}

}  // namespace

nlohmann::json fock_to_json(const FockVector &state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &[occ, amp] : state.amplitudes) {
        amps.push_back({{"occ", occ}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return {{"modes", state.n_modes},
            {"cutoff", state.cutoff},
            {"r", state.r},
            {"norm_deficit", state.norm_deficit},
            {"amplitudes", std::move(amps)}};
}

FockVector fock_from_json(const nlohmann::json &doc) {
    try {
        FockVector out;
        out.n_modes = doc.at("modes").get<int>();
        out.cutoff = doc.at("cutoff").get<int>();
        out.r = doc.at("r").get<double>();
        out.norm_deficit = doc.at("norm_deficit").get<double>();
        for (const auto &rec : doc.at("amplitudes")) {
            Occupation occ = rec.at("occ").get<Occupation>();
            if (static_cast<int>(occ.size()) != out.n_modes) {
                throw ValidationError("state amplitude occupation has " + std::to_string(occ.size()) +
                                      " entries, expected " + std::to_string(out.n_modes));
            }
            for (int n : occ) {
                if (n < 0) {
                    throw ValidationError("negative photon number in state dump");
                }
            }
            out.amplitudes[occ] += Amplitude(rec.at("re").get<double>(), rec.at("im").get<double>());
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed state dump: ") + e.what());
    }
}

nlohmann::json sector_to_json(const SpinSectorState &state) {
    nlohmann::json amps = nlohmann::json::array();
    for (size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        const Amplitude &amp = state.amplitudes[idx];
        if (std::abs(amp) < kAmplitudeFloor) {
            continue;
        }
        nlohmann::json m = nlohmann::json::array();
        for (int tm : state.two_m_of(idx)) {
            m.push_back(tm / 2.0);
        }
        amps.push_back({{"m", std::move(m)}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    nlohmann::json j = nlohmann::json::array();
    for (int tj : state.two_j) {
        j.push_back(tj / 2.0);
    }
    return {{"pairing", pairing_json(state.pairing)},
            {"j", std::move(j)},
            {"selection_probability", state.selection_probability},
            {"amplitudes", std::move(amps)}};
}

SpinSectorState sector_from_json(const nlohmann::json &doc) {
    try {
        auto half = [](double v, const char *what) {
            const double twice = 2.0 * v;
            if (std::abs(twice - std::round(twice)) > 1e-9) {
                throw ValidationError(std::string(what) + " value " + std::to_string(v) + " is not a half-integer");
            }
            return static_cast<int>(std::lround(twice));
        };
        std::vector<int> two_j;
        for (const auto &v : doc.at("j")) {
            two_j.push_back(half(v.get<double>(), "j"));
        }
        SpinSectorState out = SpinSectorState::zeros(pairing_from_json(doc.at("pairing")), two_j);
        if (out.pairing.size() != two_j.size()) {
            throw ValidationError("sector dump pairing and j list differ in length");
        }
        out.selection_probability = doc.at("selection_probability").get<double>();
        for (const auto &rec : doc.at("amplitudes")) {
            std::vector<int> two_m;
            for (const auto &v : rec.at("m")) {
                two_m.push_back(half(v.get<double>(), "m"));
            }
            try {
                out.amplitudes[out.index_of(two_m)] += Amplitude(rec.at("re").get<double>(), rec.at("im").get<double>());
            } catch (const std::invalid_argument &e) {
                throw ValidationError(std::string("sector dump amplitude: ") + e.what());
            }
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed sector dump: ") + e.what());
    }
}

}  // namespace schwinger
