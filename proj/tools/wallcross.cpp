// Command-line surface: compute single maps, render trajectories as tables,
// and run the verification sweeps.
//
// Exit codes: 0 success, 1 input error, 2 slide result is not a partition,
// 3 failed theorem check, 4 conjecture counterexample found.
//
// Set WALLCROSS_DEBUG=1 to cross-check every Mullineux transpose against the
// good-box construction even in optimized builds.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wallcross/colreg.hpp"
#include "wallcross/error.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/render.hpp"
#include "wallcross/trajectory.hpp"
#include "wallcross/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotAPartition = 2;
constexpr int kTheoremFailure = 3;
constexpr int kConjectureFinding = 4;

void print_partition(const wallcross::Partition& p, wallcross::OutputFormat format) {
    using wallcross::OutputFormat;
    switch (format) {
        case OutputFormat::markdown:
            std::cout << wallcross::format_partition(p) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << "partition\n\"" << wallcross::format_partition(p) << "\"\n";
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["partition"] = p.parts();
            std::cout << j.dump(2) << "\n";
            break;
        }
    }
}

void print_components(const std::vector<wallcross::Partition>& comps,
                      wallcross::OutputFormat format) {
    using wallcross::OutputFormat;
    switch (format) {
        case OutputFormat::markdown:
            for (std::size_t k = 0; k < comps.size(); ++k)
                std::cout << k << ": " << wallcross::format_partition(comps[k]) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << "component,partition\n";
            for (std::size_t k = 0; k < comps.size(); ++k)
                std::cout << k << ",\"" << wallcross::format_partition(comps[k]) << "\"\n";
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["components"] = nlohmann::ordered_json::array();
            for (const auto& c : comps) j["components"].push_back(c.parts());
            std::cout << j.dump(2) << "\n";
            break;
        }
    }
}

int run_map(const std::string& kind, const std::string& partition_text, int a, int b,
            wallcross::OutputFormat format) {
    using namespace wallcross;
    Partition p = parse_partition(partition_text);
    auto need_b = [&] {
        if (b < 2) throw input_error(kind + " needs --b of at least 2");
    };
    if (kind == "transpose") {
        print_partition(transpose(p), format);
        return kOk;
    }
    if (kind == "core") {
        need_b();
        print_partition(core(p, b), format);
        return kOk;
    }
    if (kind == "quotient") {
        need_b();
        print_components(quotient(p, b), format);
        return kOk;
    }
    if (kind == "mullineux") {
        need_b();
        print_partition(mullineux_transpose(p, b), format);
        return kOk;
    }
    if (kind == "wallcross-map") {
        need_b();
        print_partition(wallcross_map(p, b), format);
        return kOk;
    }
    // colreg
    if (a < 1) throw input_error("colreg needs --a of at least 1");
    need_b();
    SlideResult slide = column_regularize(p, a, b);
    if (!slide.ok()) {
        std::cerr << "error: slide across wall " << a << "/" << b << " of " << format_partition(p)
                  << " is not a partition; slid boxes:";
        for (const Box& box : slide.boxes) std::cerr << " (" << box.row << "," << box.col << ")";
        std::cerr << "\n";
        return kNotAPartition;
    }
    print_partition(*slide.partition, format);
    return kOk;
}

int run_trajectory(const std::string& algo, const std::string& partition_text, int n,
                   wallcross::OutputFormat format) {
    using namespace wallcross;
    Partition p = parse_partition(partition_text);
    Trajectory t = algo == "wallcross" ? trajectory_wallcross(p, n)
                   : algo == "colreg"  ? trajectory_colreg(p, n)
                                       : trajectory_first(p, n);
    std::cout << render_trajectory(t, format);
    return kOk;
}

int run_verify(const std::string& claim, int n_max, int workers, unsigned int seed,
               wallcross::OutputFormat format) {
    using namespace wallcross;
    std::vector<std::string> claims;
    if (claim == "all")
        claims = known_claims();
    else
        claims.push_back(claim);
    std::vector<Verdict> results;
    results.reserve(claims.size());
    for (const std::string& c : claims) results.push_back(run_claim_range(c, n_max, workers, seed));
    std::cout << render_verdicts(results, format);
    int code = kOk;
    for (const Verdict& v : results) {
        if (v.holds) continue;
        if (v.claim == "conjecture") {
            if (code == kOk) code = kConjectureFinding;
        } else {
            code = kTheoremFailure;
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Partition wall-crossing toolkit: Mullineux transpose maps, generalized "
        "column regularization, Farey-interval trajectories, and exhaustive "
        "desk-scale verification sweeps."};
    app.require_subcommand(1);
    // global options remain valid after the subcommand name
    app.fallthrough();

    std::string format_text = "markdown";
    int parallel = 1;
    unsigned int seed = 0;
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--parallel", parallel, "worker threads for verification sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for the randomized property trials")
        ->capture_default_str();

    CLI::App* map_cmd = app.add_subcommand("map", "apply one transformation to one partition");
    std::string map_kind;
    std::string map_p;
    int map_a = 0;
    int map_b = 0;
    map_cmd
        ->add_option("kind", map_kind,
                     "one of: mullineux, wallcross-map, colreg, core, quotient, transpose")
        ->required()
        ->check(CLI::IsMember(
            {"mullineux", "wallcross-map", "colreg", "core", "quotient", "transpose"}));
    map_cmd
        ->add_option("--p", map_p, "partition, e.g. \"5,4,2\" or \"2^2,1\"; \"\" is the empty one")
        ->required();
    map_cmd->add_option("--b", map_b, "modulus / wall denominator");
    map_cmd->add_option("--a", map_a, "wall numerator (colreg only)");

    CLI::App* traj_cmd =
        app.add_subcommand("trajectory", "walk one partition through all Farey intervals of n");
    std::string traj_algo = "wallcross";
    std::string traj_p;
    int traj_n = 0;
    traj_cmd->add_option("--algo", traj_algo, "crossing rule")
        ->check(CLI::IsMember({"wallcross", "colreg", "first"}))
        ->capture_default_str();
    traj_cmd->add_option("--p", traj_p, "start partition")->required();
    traj_cmd->add_option("--n", traj_n, "Farey order; must equal the partition size")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run an exhaustive checker for 2..n-max");
    std::string claim;
    int n_max = 9;
    std::vector<std::string> claim_names = wallcross::known_claims();
    claim_names.push_back("all");
    verify_cmd->add_option("claim", claim, "which claim to check")
        ->required()
        ->check(CLI::IsMember(claim_names));
    verify_cmd->add_option("--n-max", n_max, "largest n to sweep")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        wallcross::OutputFormat format = wallcross::parse_format(format_text);
        if (map_cmd->parsed()) return run_map(map_kind, map_p, map_a, map_b, format);
        if (traj_cmd->parsed()) return run_trajectory(traj_algo, traj_p, traj_n, format);
        return run_verify(claim, n_max, parallel, seed, format);
    } catch (const wallcross::colreg_failure& e) {
        std::cerr << "error: " << e.what();
        if (!e.boxes.empty()) {
            std::cerr << "; slid boxes:";
            for (const auto& [row, col] : e.boxes) std::cerr << " (" << row << "," << col << ")";
        }
        std::cerr << "\n";
        return kNotAPartition;
    } catch (const wallcross::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInputError;
    }
}
