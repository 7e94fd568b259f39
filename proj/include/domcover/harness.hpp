#pragma once

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "cover.hpp"
#include "domination.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "rational.hpp"

namespace domcover {

// ---------------------------------------------------------------------------
// named fixtures

struct Fixture {
    std::string name;
    std::string description;
    Graph graph;                                  // the cover's total graph for cover fixtures
    std::optional<CoveringProjection> projection;
};

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"petersen-dodecahedron", "torus-3",         "torus-15-cover",
                                                "H-cylinder",            "G-cylinder",      "H-G-double-cover"};
    return names;
}

/// Projection of cartesian_product(cycle(a*m), X) onto cartesian_product(cycle(a), X)
/// reducing the cycle coordinate mod a; the second factor has `second` vertices.
inline std::vector<Vertex> reduce_first_coordinate(std::size_t big, std::size_t small, std::size_t second) {
    std::vector<Vertex> map(big * second);
    for (std::size_t i = 0; i < big; ++i)
        for (std::size_t j = 0; j < second; ++j) map[i * second + j] = (i % small) * second + j;
    return map;
}

inline Fixture fixture(const std::string& name) {
    if (name == "petersen-dodecahedron") {
        // dodecahedron() is labelled so that vertex v lies over petersen vertex v % 10
        Graph f = petersen(), g = dodecahedron();
        std::vector<Vertex> map(20);
        for (Vertex v = 0; v < 20; ++v) map[v] = v % 10;
        return {name, "dodecahedron as a double cover of the Petersen graph", g, CoveringProjection{g, f, map}};
    }
    if (name == "torus-3") {
        return {name, "C3 x C3, 4-regular on 9 vertices", cartesian_product(cycle(3), cycle(3)), std::nullopt};
    }
    if (name == "torus-15-cover") {
        Graph f = cartesian_product(cycle(3), cycle(3)), g = cartesian_product(cycle(15), cycle(15));
        std::vector<Vertex> map(225);
        for (std::size_t i = 0; i < 15; ++i)
            for (std::size_t j = 0; j < 15; ++j) map[i * 15 + j] = (i % 3) * 3 + (j % 3);
        return {name, "C15 x C15 over C3 x C3, both coordinates mod 3 (25-fold)", g, CoveringProjection{g, f, map}};
    }
    // The base of the connected-domination example is realised as C4 x P5:
    // four levels closed into 4-cycles per column, five columns joined by paths.
    if (name == "H-cylinder") {
        return {name, "C4 x P5 (20 vertices)", cartesian_product(cycle(4), path(5)).with_name("H"), std::nullopt};
    }
    if (name == "G-cylinder") {
        return {name, "C8 x P5: the 5 x 8 grid with each row closed into a cycle (40 vertices)",
                cartesian_product(cycle(8), path(5)).with_name("G"), std::nullopt};
    }
    if (name == "H-G-double-cover") {
        Graph f = cartesian_product(cycle(4), path(5)).with_name("H");
        Graph g = cartesian_product(cycle(8), path(5)).with_name("G");
        return {name, "C8 x P5 over C4 x P5, cycle coordinate mod 4 (2-fold)", g,
                CoveringProjection{g, f, reduce_first_coordinate(8, 4, 5)}};
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

// ---------------------------------------------------------------------------
// conjecture experiments

struct ExperimentRecord {
    std::string base_id;             // graph6 of the base
    std::size_t k = 0;
    std::uint64_t seed = 0;          // seed handed to random_voltages for this trial
    std::size_t trial = 0;
    std::size_t gamma_F = 0;
    std::size_t gamma_G = 0;
    bool gamma_G_optimal = false;
    Rational c_obs = 0;              // gamma_G / (k gamma_F)
    std::size_t lift_components = 0;
    std::string timestamp;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct ExperimentOptions {
    std::uint64_t budget = default_node_budget;
    unsigned workers = 1;
    std::string timestamp;           // copied into every record; empty keeps runs byte-identical
};

/// Seeds for each trial, drawn in order from one generator seeded by `seed`.
inline std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, std::size_t trials) {
    std::mt19937_64 master(seed);
    std::vector<std::uint64_t> out(trials);
    for (auto& s : out) s = master();
    return out;
}

/// Random k-fold lifts of `base`, both sides solved exactly for plain
/// domination. Records come back in trial order whatever `workers` is.
inline std::vector<ExperimentRecord> ratio_experiment(const Graph& base, std::size_t k, std::size_t trials,
                                                      std::uint64_t seed, const ExperimentOptions& opt = {}) {
    if (!is_connected(base)) throw std::invalid_argument("ratio_experiment: base must be connected");
    const auto base_cert = domination_number(base, DominationKind::plain, opt.budget);
    if (!base_cert.optimal) throw std::runtime_error("ratio_experiment: base not solved within budget");
    const std::string base_id = to_graph6(base);
    const auto seeds = trial_seeds(seed, trials);

    std::vector<ExperimentRecord> records(trials);
    auto run_trial = [&](std::size_t t) {
        const auto p = lift(random_voltages(base, k, seeds[t]));
        if (!verify_projection(p)) throw std::logic_error("ratio_experiment: lift failed verification");
        const auto cert = domination_number(p.total, DominationKind::plain, opt.budget);
        ExperimentRecord& r = records[t];
        r.base_id = base_id;
        r.k = k;
        r.seed = seeds[t];
        r.trial = t;
        r.gamma_F = base_cert.value;
        r.gamma_G = cert.value;
        r.gamma_G_optimal = cert.optimal;
        r.c_obs = Rational(static_cast<long long>(cert.value)) / fold_times(k, base_cert.value);
        r.lift_components = component_count(p.total);
        r.timestamp = opt.timestamp;
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(trials)));
    if (workers <= 1) {
        for (std::size_t t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t t; (t = next++) < trials && !failed;) {
                        try {
                            run_trial(t);
                        } catch (...) {
                            if (!failed.exchange(true)) failure = std::current_exception();
                        }
                    }
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    return records;
}

struct ExperimentSummary {
    std::size_t records = 0;
    std::size_t non_optimal = 0;
    std::optional<Rational> min_c_obs;      // over optimal records
    std::vector<std::string> research_events;
};

/// `base_regularity` enables the cubic 3/5 floor check.
inline ExperimentSummary summarize(const std::vector<ExperimentRecord>& records,
                                   std::optional<std::size_t> base_regularity) {
    ExperimentSummary s;
    s.records = records.size();
    for (const auto& r : records) {
        if (!r.gamma_G_optimal) {
            ++s.non_optimal;
            continue;
        }
        if (!s.min_c_obs || r.c_obs < *s.min_c_obs) s.min_c_obs = r.c_obs;
        if (r.c_obs > 1)
            s.research_events.push_back("trial " + std::to_string(r.trial) + ": c_obs = " + to_fraction_string(r.c_obs) +
                                        " exceeds 1");
        if (base_regularity == 3 && r.c_obs < Rational(3, 5))
            s.research_events.push_back("trial " + std::to_string(r.trial) + ": c_obs = " + to_fraction_string(r.c_obs) +
                                        " below 3/5 on a cubic base");
    }
    return s;
}

// ---------------------------------------------------------------------------
// JSON-lines persistence

inline Json to_json(const ExperimentRecord& r) {
    return Json{{"base_id", r.base_id},
                {"k", r.k},
                {"seed", r.seed},
                {"trial", r.trial},
                {"gamma_F", r.gamma_F},
                {"gamma_G", r.gamma_G},
                {"gamma_G_optimal", r.gamma_G_optimal},
                {"c_obs", to_fraction_string(r.c_obs)},
                {"lift_components", r.lift_components},
                {"timestamp", r.timestamp}};
}

inline ExperimentRecord record_from_json(const Json& j) {
    ExperimentRecord r;
    r.base_id = j.at("base_id").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trial = j.at("trial").get<std::size_t>();
    r.gamma_F = j.at("gamma_F").get<std::size_t>();
    r.gamma_G = j.at("gamma_G").get<std::size_t>();
    r.gamma_G_optimal = j.at("gamma_G_optimal").get<bool>();
    r.c_obs = parse_fraction(j.at("c_obs").get<std::string>());
    r.lift_components = j.at("lift_components").get<std::size_t>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
}

inline void write_records(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    for (const auto& r : records) os << to_json(r).dump() << '\n';
}

inline void persist(const std::vector<ExperimentRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_records(out, records);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline std::vector<ExperimentRecord> read_records(std::istream& is) {
    std::vector<ExperimentRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(record_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed record: " + e.what());
        }
    }
    return out;
}

inline std::vector<ExperimentRecord> load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_records(in);
}

}  // namespace domcover
