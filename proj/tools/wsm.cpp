// Command-line front end. Exit codes: 0 ok, 1 verify found a violation,
// 2 bad input or arguments, 3 graph not 3-edge-connected, 4 internal error,
// 5 the pair bound was violated.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wsm/application.hpp"
#include "wsm/bench.hpp"
#include "wsm/generators.hpp"
#include "wsm/io.hpp"
#include "wsm/wellspread.hpp"

using namespace wsm;
using nlohmann::json;

namespace {

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::Disconnected:
        case ErrorCode::NotThreeEdgeConnected: return 3;
        case ErrorCode::InternalInvariantViolation:
        case ErrorCode::ModelMismatch:
        case ErrorCode::NoPerfectMatching: return 4;
        case ErrorCode::BoundViolated: return 5;
        default: return 2;
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::BadParameters, "cannot write " + out_path);
    out << text;
}

// "1000,2000" or "1000..16000" (doubling).
std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    try {
        if (auto dots = text.find(".."); dots != std::string::npos) {
            const std::size_t lo = std::stoull(text.substr(0, dots)), hi = std::stoull(text.substr(dots + 2));
            if (lo == 0) throw Error(ErrorCode::BadParameters, "sizes must be positive");
            for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
        } else {
            std::stringstream ss(text);
            for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoull(item));
        }
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadParameters, "cannot parse size list \"" + text + "\"");
    }
    return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    try {
        for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoull(item));
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadParameters, "cannot parse seed list \"" + text + "\"");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Well-spread perfect matchings of cubic graphs"};
    app.require_subcommand(1);

    std::string type, input, out_path, matching_path, format = "json", quarantine = "quarantine";
    std::string sizes_spec, seeds_spec = "1,2,3";
    std::size_t n = 0, k = 3;
    std::uint64_t seed = 0;
    bool median3 = false;
    unsigned jobs = 1;

    auto* gen = app.add_subcommand("gen", "Write a cubic graph file");
    gen->add_option("--type", type, "petersen | prism | k4 | k33 | truncate | random")
        ->required()
        ->check(CLI::IsMember({"petersen", "prism", "k4", "k33", "truncate", "random"}));
    gen->add_option("--n", n, "vertex count (random)");
    gen->add_option("--k", k, "cycle length (prism)");
    auto* seed_opt = gen->add_option("--seed", seed, "seed (random)");
    gen->add_option("FILE", input, "graph to truncate");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* match = app.add_subcommand("match", "Compute a well-spread perfect matching");
    match->add_option("FILE", input)->required();
    match->add_option("--out", out_path, "also write the matching file here");

    auto* verify = app.add_subcommand("verify", "Check that a matching is perfect and well-spread");
    verify->add_option("FILE", input)->required();
    verify->add_option("MFILE", matching_path)->required();

    auto* cactus = app.add_subcommand("cactus", "Export the cactus of all 3-edge cuts");
    cactus->add_option("FILE", input)->required();
    cactus->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    cactus->add_option("--out", out_path);

    auto* pair = app.add_subcommand("pair", "Two perfect matchings with small intersection");
    pair->add_option("FILE", input)->required();
    pair->add_option("--quarantine", quarantine, "directory for inputs that violate the bound");

    auto* bench = app.add_subcommand("bench", "Time the pipeline on random graphs");
    bench->add_option("--sizes", sizes_spec, "e.g. 1000,2000 or 1000..32000 (doubling)")->required();
    bench->add_option("--seeds", seeds_spec, "comma-separated seeds");
    bench->add_option("--out", out_path, "CSV file (default stdout)");
    bench->add_flag("--median3", median3, "median of three timings per phase");
    bench->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            CubicGraph g;
            if (type == "petersen") g = petersen();
            else if (type == "k4") g = k4();
            else if (type == "k33") g = k33();
            else if (type == "prism") g = prism(k);
            else if (type == "truncate") {
                if (input.empty()) throw Error(ErrorCode::BadParameters, "truncate needs an input FILE");
                g = truncate(read_graph_file(input));
            } else {
                if (!*seed_opt) throw Error(ErrorCode::BadParameters, "random graphs need --seed");
                g = random_cubic(n, seed);
            }
            emit(format_graph(g), out_path);
        } else if (*match) {
            const auto g = read_graph_file(input);
            const auto model = build_cactus(g);
            const auto M = assemble(decompose(g, model));
            const auto verdict = is_well_spread(g, M, model);
            if (!verdict.well_spread) throw Error(ErrorCode::InternalInvariantViolation, "result is not well-spread");
            if (!out_path.empty()) emit(format_matching(M), out_path);
            json doc{{"n", g.vertex_count()},
                     {"perfect", verdict.perfect},
                     {"well_spread", verdict.well_spread},
                     {"cut_count", verdict.cut_count},
                     {"matching", M}};
            std::cout << doc.dump() << "\n";
        } else if (*verify) {
            const auto g = read_graph_file(input);
            const auto M = read_matching_file(matching_path);
            for (EdgeId e : M)
                if (!g.has_edge(e)) throw Error(ErrorCode::UnknownEdge, "matching uses unknown edge " + std::to_string(e));
            const auto verdict = is_well_spread(g, M, build_cactus(g));
            json violated = json::array();
            for (const auto& v : verdict.violations)
                violated.push_back({{"side_size", v.side_size}, {"cut_edges", v.cut_edges}, {"intersection", v.intersection}});
            json doc{{"perfect", verdict.perfect},
                     {"well_spread", verdict.well_spread},
                     {"cut_count", verdict.cut_count},
                     {"violated_cuts", violated}};
            std::cout << doc.dump() << "\n";
            return verdict.well_spread ? 0 : 1;
        } else if (*cactus) {
            const auto model = build_cactus(read_graph_file(input));
            emit(format == "dot" ? to_dot(model) : to_json(model), out_path);
        } else if (*pair) {
            const auto g = read_graph_file(input);
            try {
                const auto p = small_intersection_pair(g);
                json doc{{"n", g.vertex_count()}, {"m1", p.m1}, {"m2", p.m2}, {"shared", p.shared},
                         {"shared_count", p.shared.size()}, {"bound", p.bound}};
                std::cout << doc.dump() << "\n";
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BoundViolated) throw;
                std::filesystem::create_directories(quarantine);
                const auto target = std::filesystem::path(quarantine) / std::filesystem::path(input).filename();
                emit(format_graph(g), target.string());
                std::cerr << e.what() << " (input copied to " << target.string() << ")\n";
                return 5;
            }
        } else if (*bench) {
            BenchOptions options;
            options.sizes = parse_sizes(sizes_spec);
            options.seeds = parse_seeds(seeds_spec);
            options.median3 = median3;
            options.jobs = jobs;
            const auto rows = run_bench(options);
            emit(bench_csv(rows), out_path);
            std::cerr << "log-log slope of total_ms: " << loglog_slope(rows) << "\n";
            for (const auto& r : rows)
                if (!r.verified) return 4;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
