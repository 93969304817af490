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

#include "schwinger/hgraph.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace schwinger {

using nlohmann::json;

HGraph::HGraph(std::vector<std::vector<long>> weights) : weights_(std::move(weights)) {
    const size_t n = weights_.size();
    if (n < 2) {
        throw ValidationError("H-graph needs at least 2 modes, got " + std::to_string(n));
    }
    for (size_t j = 0; j < n; ++j) {
        if (weights_[j].size() != n) {
            throw ValidationError("weight matrix row " + std::to_string(j + 1) + " has length " +
                                  std::to_string(weights_[j].size()) + ", expected " + std::to_string(n));
        }
    }
    for (size_t j = 0; j < n; ++j) {
        if (weights_[j][j] != 0) {
            throw ValidationError("self-loop at mode " + std::to_string(j + 1) + " (diagonal must be zero)");
        }
        for (size_t k = j + 1; k < n; ++k) {
            if (weights_[j][k] != weights_[k][j]) {
                throw ValidationError("asymmetric coupling between modes " + std::to_string(j + 1) + " and " +
                                      std::to_string(k + 1));
            }
        }
    }
}

HGraph HGraph::from_edges(int n_modes, const std::vector<Edge> &edges) {
    if (n_modes < 2) {
        throw ValidationError("H-graph needs at least 2 modes, got " + std::to_string(n_modes));
    }
    std::vector<std::vector<long>> w(n_modes, std::vector<long>(n_modes, 0));
    std::set<std::pair<int, int>> seen;
    for (const auto &e : edges) {
        std::string label = "edge [" + std::to_string(e.a + 1) + ", " + std::to_string(e.b + 1) + "]";
        if (e.a < 0 || e.a >= n_modes || e.b < 0 || e.b >= n_modes) {
            throw ValidationError(label + " references a mode outside 1.." + std::to_string(n_modes));
        }
        if (e.a == e.b) {
            throw ValidationError(label + " is a self-loop");
        }
        auto key = std::minmax(e.a, e.b);
        if (!seen.insert(key).second) {
            throw ValidationError(label + " is a duplicate");
        }
        w[e.a][e.b] = e.weight;
        w[e.b][e.a] = e.weight;
    }
    return HGraph(std::move(w));
}

std::vector<HGraph::Edge> HGraph::edges() const {
    std::vector<Edge> out;
    for (int j = 0; j < n_modes(); ++j) {
        for (int k = j + 1; k < n_modes(); ++k) {
            if (weights_[j][k] != 0) {
                out.push_back({j, k, weights_[j][k]});
            }
        }
    }
    return out;
}

SpinPairing::SpinPairing(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    std::set<int> used;
    for (const auto &[a, b] : pairs_) {
        std::string label = "pair (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ")";
        if (a < 0 || b < 0) {
            throw ValidationError(label + " has a non-positive mode index");
        }
        if (a == b) {
            throw ValidationError(label + " pairs a mode with itself");
        }
        if (!used.insert(a).second || !used.insert(b).second) {
            throw ValidationError(label + " overlaps another pair");
        }
    }
}

int SpinPairing::max_mode() const {
    int m = -1;
    for (const auto &[a, b] : pairs_) {
        m = std::max({m, a, b});
    }
    return m;
}

void SpinPairing::check_fits(int n_modes) const {
    for (const auto &[a, b] : pairs_) {
        if (a >= n_modes || b >= n_modes) {
            throw ValidationError("pair (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                                  ") references a mode outside 1.." + std::to_string(n_modes));
        }
    }
}

namespace {

long as_integer(const json &value, const std::string &where) {
    if (!value.is_number_integer()) {
        throw ParseError(where + " must be an integer");
    }
    return value.get<long>();
}

}  // namespace

GraphDocument parse_hgraph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed graph document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("graph document must be a JSON object");
    }
    if (!doc.contains("modes")) {
        throw ParseError("graph document is missing \"modes\"");
    }
    long n = as_integer(doc["modes"], "\"modes\"");
    if (n < 2) {
        throw ValidationError("\"modes\" must be at least 2, got " + std::to_string(n));
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("graph document needs an \"edges\" array");
    }
    std::vector<HGraph::Edge> edges;
    for (size_t k = 0; k < doc["edges"].size(); ++k) {
        const json &e = doc["edges"][k];
        std::string where = "edges[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 3) {
            throw ParseError(where + " must be [i, j, w]");
        }
        edges.push_back({static_cast<int>(as_integer(e[0], where + "[0]") - 1),
                         static_cast<int>(as_integer(e[1], where + "[1]") - 1), as_integer(e[2], where + "[2]")});
    }
    GraphDocument out{HGraph::from_edges(static_cast<int>(n), edges), std::nullopt};
    if (doc.contains("pairing")) {
        if (!doc["pairing"].is_array()) {
            throw ParseError("\"pairing\" must be an array of [a, b]");
        }
        std::vector<std::pair<int, int>> pairs;
        for (size_t k = 0; k < doc["pairing"].size(); ++k) {
            const json &p = doc["pairing"][k];
            std::string where = "pairing[" + std::to_string(k) + "]";
            if (!p.is_array() || p.size() != 2) {
                throw ParseError(where + " must be [a, b]");
            }
            pairs.emplace_back(static_cast<int>(as_integer(p[0], where + "[0]") - 1),
                               static_cast<int>(as_integer(p[1], where + "[1]") - 1));
        }
        SpinPairing pairing(std::move(pairs));
        pairing.check_fits(static_cast<int>(n));
        out.pairing = std::move(pairing);
    }
    return out;
}

std::string serialize_hgraph(const HGraph &graph, const std::optional<SpinPairing> &pairing) {
    json doc;
    doc["modes"] = graph.n_modes();
    doc["edges"] = json::array();
    for (const auto &e : graph.edges()) {
        doc["edges"].push_back({e.a + 1, e.b + 1, e.weight});
    }
    if (pairing) {
        doc["pairing"] = json::array();
        for (const auto &[a, b] : pairing->pairs()) {
            doc["pairing"].push_back({a + 1, b + 1});
        }
    }
    return doc.dump();
}

namespace {

GraphDocument twin(int n, const std::vector<HGraph::Edge> &base) {
    std::vector<HGraph::Edge> edges = base;
    for (const auto &e : base) {
        edges.push_back({e.a + n, e.b + n, e.weight});
    }
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) {
        pairs.emplace_back(k, k + n);
    }
    return {HGraph::from_edges(2 * n, edges), SpinPairing(pairs)};
}

}  // namespace

const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names{"two_epr",   "chain3x2", "ghz3x2", "chain4x2",
                                                "square4x2", "ring4x2",  "ghz4x2"};
    return names;
}

GraphDocument builtin(std::string_view name) {
    if (name == "two_epr") {
        // Two EPR pairs 1-2 and 3-4; spins (1,3) and (2,4).
        return twin(2, {{0, 1, 1}});
    }
    if (name == "chain3x2") {
        return twin(3, {{0, 1, 1}, {1, 2, 1}});
    }
    if (name == "ghz3x2") {
        return twin(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    }
    if (name == "chain4x2") {
        return twin(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    }
    if (name == "square4x2") {
        return twin(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, -1}});
    }
    if (name == "ring4x2") {
        return twin(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    }
    if (name == "ghz4x2") {
        return twin(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    }
    throw ValidationError("unknown builtin graph '" + std::string(name) + "'");
}

SpinPairing parse_pairing(std::string_view text) {
    std::vector<long> numbers;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            try {
                size_t used = 0;
                numbers.push_back(std::stol(cur, &used));
                if (used != cur.size()) {
                    throw std::invalid_argument(cur);
                }
            } catch (const std::exception &) {
                throw ParseError("malformed pairing entry '" + cur + "'");
            }
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ';' || c == '(' || c == ')' || c == ' ' || c == '[' || c == ']') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    if (numbers.empty() || numbers.size() % 2 != 0) {
        throw ParseError("pairing '" + std::string(text) + "' must list an even number of mode indices");
    }
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < numbers.size(); k += 2) {
        pairs.emplace_back(static_cast<int>(numbers[k] - 1), static_cast<int>(numbers[k + 1] - 1));
    }
    return SpinPairing(std::move(pairs));
}

Relabeling canonical_relabeling(const SpinPairing &pairing) {
    std::vector<std::pair<int, int>> pairs = pairing.pairs();
    std::vector<int> flips;
    for (size_t k = 1; k < pairs.size(); k += 2) {
        std::swap(pairs[k].first, pairs[k].second);
        flips.push_back(pairs[k].first);
    }
    return {SpinPairing(std::move(pairs)), std::move(flips)};
}

std::string format_pairing(const SpinPairing &pairing) {
    std::ostringstream out;
    for (size_t k = 0; k < pairing.size(); ++k) {
        out << (k ? "," : "") << "(" << pairing[k].first + 1 << "," << pairing[k].second + 1 << ")";
    }
    return out.str();
}

}  // namespace schwinger
