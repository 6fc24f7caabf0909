#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stickcut/instances.hpp"
#include "stickcut/solver.hpp"

namespace {

using namespace stickcut;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open \"" + path + "\" for writing");
    }
    out << content;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("STICKCUT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("STICKCUT_SEED is not an integer");
        }
    }
    return kDefaultSeed;
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "search") return Algorithm::Search;
    if (name == "select") return Algorithm::Select;
    throw std::runtime_error("unknown algorithm \"" + name + "\"");
}

Bounds parse_bounds(const std::string& name) {
    if (name == "quadratic") return Bounds::Quadratic;
    if (name == "linearithmic") return Bounds::Linearithmic;
    if (name == "sandwich") return Bounds::Sandwich;
    throw std::runtime_error("unknown bounds \"" + name + "\"");
}

nlohmann::json report_json(const Solution& sol) {
    nlohmann::json report;
    report["l_star"] = to_string(sol.l_star);
    report["cuts"] = sol.cuts;
    report["pieces"] = sol.pieces;
    report["strategy"] = to_string(sol.strategy);
    report["candidates"] = sol.candidates;
    report["early_answer"] = sol.early_answer;
    if (sol.plan) {
        auto& plan = report["plan"] = nlohmann::json::array();
        for (const PlanEntry& entry : *sol.plan) {
            plan.push_back({{"index", entry.stick_index + 1},
                            {"m", entry.maximal_pieces},
                            {"c", entry.cut_count}});
        }
    }
    return report;
}

constexpr Strategy kAllStrategies[] = {
    {Algorithm::Search, Bounds::Quadratic}, {Algorithm::Search, Bounds::Linearithmic},
    {Algorithm::Search, Bounds::Sandwich},  {Algorithm::Select, Bounds::Quadratic},
    {Algorithm::Select, Bounds::Linearithmic}, {Algorithm::Select, Bounds::Sandwich},
};

int cmd_solve(const std::string& input, const std::string& algorithm,
              const std::string& bounds, bool want_plan,
              const std::optional<std::uint64_t>& seed_flag) {
    const Instance inst = parse_instance(read_file(input));
    const Strategy strategy{parse_algorithm(algorithm), parse_bounds(bounds)};
    const Solution sol = solve(inst, strategy, want_plan, resolve_seed(seed_flag));
    std::cout << report_json(sol).dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& input, const std::optional<std::uint64_t>& seed_flag) {
    const Instance inst = parse_instance(read_file(input));
    const std::uint64_t seed = resolve_seed(seed_flag);

    std::vector<std::pair<std::string, Rational>> rows;
    for (const Strategy strategy : kAllStrategies) {
        rows.emplace_back(to_string(strategy), solve(inst, strategy, false, seed).l_star);
    }
    rows.emplace_back("oracle_scan", oracle_scan(inst));
    rows.emplace_back("oracle_rank", oracle_rank(inst));

    for (const auto& [name, value] : rows) {
        std::printf("%-22s %s\n", name.c_str(), to_string(value).c_str());
    }
    bool agree = true;
    for (const auto& [name, value] : rows) {
        if (value != rows.front().second) {
            agree = false;
            std::fprintf(stderr, "disagreement: %s returned %s, %s returned %s\n",
                         rows.front().first.c_str(), to_string(rows.front().second).c_str(),
                         name.c_str(), to_string(value).c_str());
        }
    }
    return agree ? 0 : 2;
}

struct GenOptions {
    std::string family;
    std::string out;
    std::uint64_t m = 4;
    std::string x = "2";
    std::uint64_t n = 10;
    std::uint64_t k = 5;
    std::uint64_t max_num = 10000;
    std::uint64_t max_den = 100;
    std::optional<std::uint64_t> seed;
};

int cmd_gen(const GenOptions& opt) {
    Instance inst;
    if (opt.family == "example") {
        inst = gen_example(opt.m, parse_rational(opt.x));
    } else if (opt.family == "primes") {
        inst = gen_primes(opt.n, opt.k);
    } else if (opt.family == "random") {
        inst = gen_random(opt.n, opt.k, opt.max_num, opt.max_den, resolve_seed(opt.seed));
    } else {
        throw std::runtime_error("unknown family \"" + opt.family + "\"");
    }
    write_file(opt.out, serialize_instance(inst));
    return 0;
}

struct BenchOptions {
    std::string family = "random";
    std::string sizes;
    std::uint64_t repeat = 3;
    std::uint64_t max_num = 10000;
    std::uint64_t max_den = 100;
    std::optional<std::uint64_t> seed;
};

std::vector<std::uint64_t> parse_sizes(const std::string& csv) {
    std::vector<std::uint64_t> sizes;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            sizes.push_back(std::stoull(token));
        } catch (const std::exception&) {
            throw std::runtime_error("bad size \"" + token + "\"");
        }
    }
    if (sizes.empty()) {
        throw std::runtime_error("--sizes is empty");
    }
    return sizes;
}

int cmd_bench(const BenchOptions& opt) {
    const std::vector<std::uint64_t> sizes = parse_sizes(opt.sizes);
    if (opt.repeat == 0) {
        throw std::runtime_error("--repeat must be positive");
    }
    const std::uint64_t seed = resolve_seed(opt.seed);

    std::vector<Instance> instances;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const std::uint64_t size = sizes[s];
        if (opt.family == "random") {
            instances.push_back(gen_random(size, size, opt.max_num, opt.max_den, seed + s));
        } else if (opt.family == "primes") {
            instances.push_back(gen_primes(size, size));
        } else if (opt.family == "example") {
            instances.push_back(gen_example(size, Rational(size / 2 + 1)));
        } else {
            throw std::runtime_error("unknown family \"" + opt.family + "\"");
        }
    }

    std::printf("strategy,n,k,candidates,nanos_median\n");
    for (const Strategy strategy : kAllStrategies) {
        for (std::size_t s = 0; s < sizes.size(); ++s) {
            const Instance& inst = instances[s];
            std::uint64_t candidates = 0;
            std::vector<std::uint64_t> nanos;
            for (std::uint64_t rep = 0; rep < opt.repeat; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                const Solution sol = solve(inst, strategy, false, seed);
                const auto stop = std::chrono::steady_clock::now();
                nanos.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                    stop - start).count());
                candidates = sol.candidates;
            }
            std::sort(nanos.begin(), nanos.end());
            std::printf("%s,%zu,%llu,%llu,%llu\n", to_string(strategy).c_str(),
                        inst.n(), static_cast<unsigned long long>(inst.k),
                        static_cast<unsigned long long>(candidates),
                        static_cast<unsigned long long>(nanos[nanos.size() / 2]));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimal-cut stick division: cut sticks so that at least k "
                 "equal maximal pieces remain, with as few cuts as possible."};
    app.require_subcommand(1);

    std::string input;
    std::string algorithm = "select";
    std::string bounds = "sandwich";
    bool want_plan = false;
    std::optional<std::uint64_t> seed;

    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
    solve_cmd->add_option("--input", input, "instance file")->required();
    solve_cmd->add_option("--algorithm", algorithm)->check(CLI::IsMember({"search", "select"}));
    solve_cmd->add_option("--bounds", bounds)
        ->check(CLI::IsMember({"quadratic", "linearithmic", "sandwich"}));
    solve_cmd->add_flag("--plan", want_plan, "include the per-stick plan");
    solve_cmd->add_option("--seed", seed, "pivot seed (env STICKCUT_SEED as fallback)");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run all six strategies plus both brute-force oracles and compare");
    verify_cmd->add_option("--input", input, "instance file")->required();
    verify_cmd->add_option("--seed", seed);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("--family", gen.family)
        ->required()
        ->check(CLI::IsMember({"example", "primes", "random"}));
    gen_cmd->add_option("--out", gen.out, "output file")->required();
    gen_cmd->add_option("--m", gen.m, "example family: positive multiple of 4");
    gen_cmd->add_option("--x", gen.x, "example family: rational >= m/2");
    gen_cmd->add_option("--n", gen.n);
    gen_cmd->add_option("--k", gen.k);
    gen_cmd->add_option("--max-num", gen.max_num);
    gen_cmd->add_option("--max-den", gen.max_den);
    gen_cmd->add_option("--seed", gen.seed);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time all strategies over a size sweep (CSV)");
    bench_cmd->add_option("--family", bench.family)
        ->check(CLI::IsMember({"random", "primes", "example"}));
    bench_cmd->add_option("--sizes", bench.sizes, "comma-separated sizes")->required();
    bench_cmd->add_option("--repeat", bench.repeat);
    bench_cmd->add_option("--max-num", bench.max_num);
    bench_cmd->add_option("--max-den", bench.max_den);
    bench_cmd->add_option("--seed", bench.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(input, algorithm, bounds, want_plan, seed);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(input, seed);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(gen);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
