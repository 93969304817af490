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

#ifndef SCHWINGER_HGRAPH_H
#define SCHWINGER_HGRAPH_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schwinger {

/// Malformed input document (bad JSON, missing field, wrong type).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An H-graph: symmetric integer adjacency matrix of two-mode squeezing
/// couplings with zero diagonal. Modes are 0-based internally.
class HGraph {
   public:
    struct Edge {
        int a;
        int b;
        long weight;
        bool operator==(const Edge &) const = default;
    };

    /// Throws ValidationError if the matrix is not square, symmetric,
    /// zero-diagonal, or has fewer than two modes.
    explicit HGraph(std::vector<std::vector<long>> weights);

    /// Edges are 0-based unordered pairs. Duplicates and self-loops throw.
    static HGraph from_edges(int n_modes, const std::vector<Edge> &edges);

    int n_modes() const {
        return static_cast<int>(weights_.size());
    }
    long weight(int j, int k) const {
        return weights_[j][k];
    }
    const std::vector<std::vector<long>> &weights() const {
        return weights_;
    }
    /// Nonzero couplings with a < b, in row-major order.
    std::vector<Edge> edges() const;

    bool operator==(const HGraph &) const = default;

   private:
    std::vector<std::vector<long>> weights_;
};

/// Disjoint ordered mode pairs defining Schwinger spins. The first element of
/// each pair plays the role of mode 1 in the spin operator definitions.
class SpinPairing {
   public:
    SpinPairing() = default;
    explicit SpinPairing(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>> &pairs() const {
        return pairs_;
    }
    size_t size() const {
        return pairs_.size();
    }
    const std::pair<int, int> &operator[](size_t k) const {
        return pairs_[k];
    }
    int max_mode() const;
    /// Throws ValidationError if some index is outside [0, n_modes).
    void check_fits(int n_modes) const;

    bool operator==(const SpinPairing &) const = default;

   private:
    std::vector<std::pair<int, int>> pairs_;
};

struct GraphDocument {
    HGraph graph;
    std::optional<SpinPairing> pairing;
};

/// Parses {"modes": n, "edges": [[i, j, w], ...], "pairing": [[a, b], ...]}
/// with 1-based indices.
GraphDocument parse_hgraph(std::string_view text);

/// Inverse of parse_hgraph; keys sorted, edges in row-major order.
std::string serialize_hgraph(const HGraph &graph, const std::optional<SpinPairing> &pairing = std::nullopt);

/// Builtin graph names accepted by builtin().
const std::vector<std::string> &builtin_names();

/// Returns a named builtin; each "x2" name is two identical
/// copies of a base graph on modes 1..n and n+1..2n, paired k <-> k+n.
GraphDocument builtin(std::string_view name);

/// The symmetric spin labeling used for twin graphs: every second pair is
/// reversed, (a, b) -> (b, a), and its new first mode is phase shifted by pi.
struct Relabeling {
    SpinPairing pairing;
    std::vector<int> phase_flip_modes;
};
Relabeling canonical_relabeling(const SpinPairing &pairing);

/// Parses a 1-based pairing list such as "1,5;2,6" or "(1,5),(2,6)".
SpinPairing parse_pairing(std::string_view text);
std::string format_pairing(const SpinPairing &pairing);

}  // namespace schwinger

#endif
