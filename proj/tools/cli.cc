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


#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "schwinger/acceptance.h"
#include "schwinger/entangle.h"
#include "schwinger/json_io.h"
#include "schwinger/nullifiers.h"

namespace schwinger::cli {

namespace {

struct RunConfig {
    std::string graph;
    std::string pairing;
    double r = 0.1;
    std::vector<double> r_grid{0.05, 0.1, 0.2};
    int cutoff = 10;
    std::vector<double> j_list;
    std::vector<double> theta;
    std::vector<double> phi;
    std::string in;
    std::string out;
    std::uint64_t seed = 0;
    int shots = 0;
    bool canonical = false;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path, const std::string &flag) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(flag + ": cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json read_json(const std::string &path, const std::string &flag) {
    try {
        return nlohmann::json::parse(read_file(path, flag));
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(flag + ": '" + path + "' is not valid JSON: " + e.what());
    }
}

GraphDocument load_graph(const std::string &source) {
    if (source.empty()) {
        throw UsageError("--graph is required (a file path or builtin:NAME)");
    }
    constexpr std::string_view prefix = "builtin:";
    if (source.starts_with(prefix)) {
        try {
            return builtin(source.substr(prefix.size()));
        } catch (const std::exception &e) {
            throw ValidationError(std::string("--graph: ") + e.what());
        }
    }
    try {
        return parse_hgraph(read_file(source, "--graph"));
    } catch (const ParseError &e) {
        throw ParseError(std::string("--graph: ") + e.what());
    } catch (const ValidationError &e) {
        throw ValidationError(std::string("--graph: ") + e.what());
    }
}

SpinPairing pairing_from(const std::string &text, const std::optional<SpinPairing> &fallback, const char *what) {
    if (!text.empty()) {
        try {
            return parse_pairing(text);
        } catch (const std::exception &e) {
            throw ValidationError(std::string("--pairing: ") + e.what());
        }
    }
    if (fallback) {
        return *fallback;
    }
    throw UsageError(std::string("--pairing is required: ") + what + " carries no default pairing");
}

std::vector<int> two_j_from(const std::vector<double> &j_list) {
    if (j_list.empty()) {
        throw UsageError("--j is required (comma separated spin values such as 0.5,0.5)");
    }
    std::vector<int> out;
    for (double j : j_list) {
        const double twice = 2 * j;
        if (!(j >= 0) || std::abs(twice - std::round(twice)) > 1e-9) {
            throw ValidationError("--j: entry " + std::to_string(j) + " is not a nonnegative half-integer");
        }
        out.push_back(static_cast<int>(std::lround(twice)));
    }
    return out;
}

void check_run_config(const RunConfig &cfg) {
    if (!(cfg.r >= 0) || !std::isfinite(cfg.r)) {
        throw ValidationError("--r must be a finite value >= 0");
    }
    for (double r : cfg.r_grid) {
        if (!(r >= 0) || !std::isfinite(r)) {
            throw ValidationError("--r-grid entries must be finite values >= 0");
        }
    }
    if (cfg.cutoff < 2 || cfg.cutoff % 2 != 0) {
        throw ValidationError("--cutoff must be an even integer >= 2");
    }
}

void emit(const nlohmann::json &doc, const RunConfig &cfg, std::ostream &out) {
    const std::string text = dump_json(doc);
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out);
    file << text;
    if (!file) {
        throw ValidationError("--out: cannot write '" + cfg.out + "'");
    }
}

nlohmann::json pairing_json(const SpinPairing &p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[a, b] : p.pairs()) {
        out.push_back({a + 1, b + 1});
    }
    return out;
}

int cmd_nullifiers(const RunConfig &cfg, bool cutoff_given, std::ostream &out) {
    const GraphDocument doc = load_graph(cfg.graph);
    const SpinPairing pairing = pairing_from(cfg.pairing, doc.pairing, "the graph");
    pairing.check_fits(doc.graph.n_modes());
    const NullifierSet set = find_nullifiers(doc.graph, pairing, cfg.canonical);
    // Relabeling is unitary, so the moments of each element equal those of
    // the corresponding element for the pairing as given.
    const NullifierSet plain = cfg.canonical ? find_nullifiers(doc.graph, pairing, false) : set;
    std::vector<ApproxQuadOp> exact_ops;
    for (const auto &e : plain.exact) {
        exact_ops.push_back(to_approx(e.op));
    }
    std::vector<ApproxQuadOp> asym_ops;
    for (const auto &a : plain.asymptotic) {
        asym_ops.push_back(a.op);
    }
    const bool raise = !cutoff_given;
    const auto exact_checks = verify_nullifiers(exact_ops, doc.graph, cfg.r_grid, cfg.cutoff, raise);
    const auto asym_checks = verify_nullifiers(asym_ops, doc.graph, cfg.r_grid, cfg.cutoff, raise);
    nlohmann::json report = nullifier_report(set, exact_checks, asym_checks);
    report["graph"] = cfg.graph;
    report["canonical"] = cfg.canonical;
    report["kernel_dimension"] = ad_kernel(hamiltonian_generator(doc.graph), doc.graph.n_modes()).dimension();
    emit(report, cfg, out);
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const GraphDocument doc = load_graph(cfg.graph);
    const FockVector state = evolve_vacuum(doc.graph, cfg.r, cfg.cutoff);
    if (state.norm_deficit > kDeficitWarning) {
        err << "warning: norm deficit " << state.norm_deficit << " exceeds " << kDeficitWarning
            << "; raise --cutoff\n";
    }
    nlohmann::json dump = fock_to_json(state);
    const std::optional<SpinPairing> pairing =
        cfg.pairing.empty() ? doc.pairing : std::optional<SpinPairing>(pairing_from(cfg.pairing, {}, ""));
    if (pairing) {
        pairing->check_fits(doc.graph.n_modes());
        dump["pairing"] = pairing_json(*pairing);
    }
    emit(dump, cfg, out);
    return kExitOk;
}

std::optional<SpinPairing> dump_pairing(const nlohmann::json &doc) {
    if (!doc.contains("pairing")) {
        return std::nullopt;
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto &p : doc.at("pairing")) {
        pairs.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
    }
    return SpinPairing(std::move(pairs));
}

std::string require_in(const RunConfig &cfg) {
    if (cfg.in.empty()) {
        throw UsageError("--in is required");
    }
    return cfg.in;
}

int cmd_postselect(const RunConfig &cfg, std::ostream &out) {
    const nlohmann::json doc = read_json(require_in(cfg), "--in");
    FockVector state;
    std::optional<SpinPairing> fallback;
    try {
        state = fock_from_json(doc);
        fallback = dump_pairing(doc);
    } catch (const std::exception &e) {
        throw ParseError(std::string("--in: ") + e.what());
    }
    SpinPairing pairing = pairing_from(cfg.pairing, fallback, "the state dump");
    const std::vector<int> two_j = two_j_from(cfg.j_list);
    if (cfg.canonical) {
        const Relabeling rel = canonical_relabeling(pairing);
        for (int mode : rel.phase_flip_modes) {
            state = phase_shift(state, mode, std::numbers::pi);
        }
        pairing = rel.pairing;
    }
    emit(sector_to_json(casimir_postselect(state, pairing, two_j)), cfg, out);
    return kExitOk;
}

std::vector<MeasurementAngles> angles_from(const RunConfig &cfg, size_t n_spins) {
    if (cfg.theta.size() != n_spins || cfg.phi.size() != n_spins) {
        throw ValidationError("--theta/--phi: need one value each per measured spin (" + std::to_string(n_spins) +
                              "), got " + std::to_string(cfg.theta.size()) + " and " +
                              std::to_string(cfg.phi.size()));
    }
    std::vector<MeasurementAngles> out;
    for (size_t k = 0; k < n_spins; ++k) {
        out.push_back({cfg.theta[k], cfg.phi[k]});
    }
    return out;
}

int cmd_measure(const RunConfig &cfg, std::ostream &out) {
    const nlohmann::json doc = read_json(require_in(cfg), "--in");
    FockVector state;
    std::optional<SpinPairing> fallback;
    try {
        if (doc.contains("j")) {
            const SpinSectorState sector = sector_from_json(doc);
            state = sector_to_fock(sector, sector.pairing.max_mode() + 1);
            fallback = sector.pairing;
        } else {
            state = fock_from_json(doc);
            fallback = dump_pairing(doc);
        }
    } catch (const std::exception &e) {
        throw ParseError(std::string("--in: ") + e.what());
    }
    const SpinPairing pairing = pairing_from(cfg.pairing, fallback, "the input dump");
    pairing.check_fits(state.n_modes);
    const auto angles = angles_from(cfg, pairing.size());
    const auto dist = measure_spins(state, pairing, angles);

    nlohmann::json outcomes = nlohmann::json::array();
    std::vector<double> mean(pairing.size(), 0.0);
    for (const auto &[counts, p] : dist) {
        outcomes.push_back({{"counts", counts}, {"probability", p}});
        for (size_t k = 0; k < pairing.size(); ++k) {
            mean[k] += p * (counts[2 * k] - counts[2 * k + 1]) / 2.0;
        }
    }
    nlohmann::json angle_list = nlohmann::json::array();
    for (const auto &a : angles) {
        angle_list.push_back({{"theta", a.theta}, {"phi", a.phi}});
    }
    nlohmann::json report = {{"pairs", pairing_json(pairing)},
                             {"angles", std::move(angle_list)},
                             {"distribution", std::move(outcomes)},
                             {"spin_expectation", mean}};
    if (cfg.shots > 0) {
        nlohmann::json samples = nlohmann::json::array();
        for (const auto &[counts, k] : sample_counts(dist, cfg.shots, cfg.seed)) {
            samples.push_back({{"counts", counts}, {"shots", k}});
        }
        report["samples"] = std::move(samples);
        report["seed"] = cfg.seed;
        report["shots"] = cfg.shots;
    }
    emit(report, cfg, out);
    return kExitOk;
}

int cmd_entangle(const RunConfig &cfg, std::ostream &out) {
    const nlohmann::json doc = read_json(require_in(cfg), "--in");
    SpinSectorState sector;
    try {
        sector = sector_from_json(doc);
    } catch (const std::exception &e) {
        throw ParseError(std::string("--in: ") + e.what());
    }
    if (sector.empty()) {
        throw ValidationError("--in: the sector is empty (selection probability 0)");
    }
    emit(entanglement_report(sector, std::filesystem::path(cfg.in).filename().string()), cfg, out);
    return kExitOk;
}

int cmd_reproduce(const RunConfig &cfg, std::ostream &out) {
    acceptance::Options options;
    const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
    std::filesystem::create_directories(dir);
    options.report_dir = dir.string();
    const auto results = acceptance::run_all(options);
    bool ok = true;
    for (const auto &r : results) {
        out << acceptance::format_line(r) << "\n";
        ok = ok && r.passed;
    }
    std::ofstream table(dir / "reproduce.json");
    table << dump_json(acceptance::results_to_json(results));
    return ok ? kExitOk : kExitAcceptance;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Schwinger-spin nullifiers and spin entanglement of twin Gaussian graph states"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto graph_opt = [&](CLI::App *sub, bool required) {
        auto *o = sub->add_option("--graph", cfg.graph, "graph JSON file or builtin:NAME");
        if (required) {
            o->required();
        }
    };
    auto *nullifiers = app.add_subcommand("nullifiers", "exact and asymptotic spin nullifiers with verification");
    graph_opt(nullifiers, true);
    nullifiers->add_option("--pairing", cfg.pairing, "spin pairs such as 1,3;2,4");
    nullifiers->add_option("--r-grid", cfg.r_grid, "squeezing values for verification")->delimiter(',');
    auto *null_cutoff = nullifiers->add_option("--cutoff", cfg.cutoff, "total photon cutoff (fixed when given)");
    nullifiers->add_flag("--canonical", cfg.canonical, "reverse every second pair with a pi phase shift");
    nullifiers->add_option("--out", cfg.out, "report path");

    auto *simulate = app.add_subcommand("simulate", "evolve the vacuum and dump the state");
    graph_opt(simulate, true);
    simulate->add_option("--pairing", cfg.pairing, "pairing recorded in the dump");
    simulate->add_option("--r", cfg.r, "squeezing parameter");
    simulate->add_option("--cutoff", cfg.cutoff, "total photon cutoff");
    simulate->add_option("--out", cfg.out, "state dump path");

    auto *postselect = app.add_subcommand("postselect", "project a state dump on fixed spin magnitudes");
    postselect->add_option("--in", cfg.in, "state dump")->required();
    postselect->add_option("--pairing", cfg.pairing, "spin pairs (defaults to the dump's pairing)");
    postselect->add_option("--j", cfg.j_list, "spin magnitudes, one per pair")->delimiter(',')->required();
    postselect->add_flag("--canonical", cfg.canonical, "reverse every second pair with a pi phase shift");
    postselect->add_option("--out", cfg.out, "sector dump path");

    auto *measure = app.add_subcommand("measure", "photon-count distribution after per-spin rotations");
    measure->add_option("--in", cfg.in, "state or sector dump")->required();
    measure->add_option("--pairing", cfg.pairing, "measured pairs (defaults to the dump's pairing)");
    measure->add_option("--theta", cfg.theta, "polar angle per spin")->delimiter(',');
    measure->add_option("--phi", cfg.phi, "azimuth per spin")->delimiter(',');
    measure->add_option("--shots", cfg.shots, "number of sampled shots");
    measure->add_option("--seed", cfg.seed, "sampling seed");
    measure->add_option("--out", cfg.out, "report path");

    auto *entangle = app.add_subcommand("entangle", "Schmidt spectra and separability of a sector dump");
    entangle->add_option("--in", cfg.in, "sector dump")->required();
    entangle->add_option("--out", cfg.out, "report path");

    auto *reproduce = app.add_subcommand("reproduce", "run the acceptance suite");
    reproduce->add_option("--out", cfg.out, "directory for reports");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        check_run_config(cfg);
        if (*nullifiers) {
            return cmd_nullifiers(cfg, null_cutoff->count() > 0, out);
        }
        if (*simulate) {
            return cmd_simulate(cfg, out, err);
        }
        if (*postselect) {
            return cmd_postselect(cfg, out);
        }
        if (*measure) {
            return cmd_measure(cfg, out);
        }
        if (*entangle) {
            return cmd_entangle(cfg, out);
        }
        if (*reproduce) {
            return cmd_reproduce(cfg, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace schwinger::cli
