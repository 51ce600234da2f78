#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cycontext/consistify.hpp"
#include "cycontext/generators.hpp"
#include "cycontext/io.hpp"
#include "cycontext/measures.hpp"

namespace {

using nlohmann::json;
using namespace cycontext;

constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json sparse_weights_json(const std::map<AtomIndex, Rational>& weights) {
    json obj = json::object();
    for (const auto& [atom, wt] : weights) {
        obj[std::to_string(atom)] = format_rational(wt);
    }
    return obj;
}

int cmd_analyze(const std::string& input_path, bool with_witnesses, bool with_consistify) {
    const auto start = std::chrono::steady_clock::now();
    CyclicSystem system = parse_system_file(read_input(input_path));

    MeasureReport report = verify_proportionality(system, with_witnesses);

    json out;
    out["input"] = json::parse(serialize_system_file(system));
    out["rank"] = report.rank;
    out["consistently_connected"] = system.is_consistently_connected();
    out["noncontextual"] = report.noncontextual;
    out["cnt3"] = format_rational(report.cnt3_value);
    out["cntf"] = format_rational(report.cntf_value);
    out["proportionality"] = {
        {"factor", report.rank - 1},
        {"scaled_cnt3", format_rational(Rational(report.rank - 1) * report.cnt3_value)},
        {"cntf", format_rational(report.cntf_value)},
        {"holds", report.proportionality_holds},
    };
    if (with_witnesses) {
        out["witnesses"] = {
            {"signed", sparse_weights_json(report.signed_witness->weights)},
            {"defective", sparse_weights_json(report.defective_witness->weights)},
        };
    }
    bool consistify_ok = true;
    if (with_consistify) {
        ConsistificationRelations rel = verify_consistification_relations(system);
        out["consistification"] = {
            {"new_rank", rel.new_rank},
            {"cnt3", format_rational(rel.cnt3_consistified)},
            {"cntf", format_rational(rel.cntf_consistified)},
            {"cntf_invariant", rel.cntf_invariant},
            {"cnt3_ratio_holds", rel.cnt3_ratio_holds},
            {"consistently_connected", rel.consistified_consistent},
        };
        consistify_ok = rel.cntf_invariant && rel.cnt3_ratio_holds && rel.consistified_consistent;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    out["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    std::cout << out.dump(2) << "\n";
    if (!report.proportionality_holds || !consistify_ok) {
        std::cerr << "cycontext: an exact measure relation failed to hold\n";
        return kExitInternalError;
    }
    return 0;
}

int cmd_verify(int rank, int trials, std::uint64_t seed, bool consistent, bool deep) {
    int passed = 0;
    for (int t = 1; t <= trials; ++t) {
        GeneratorSpec spec;
        spec.rank = rank;
        spec.seed = substream(seed, kStreamTrial, static_cast<std::uint64_t>(t)).next();
        CyclicSystem system =
            consistent ? random_consistent_system(spec) : random_system(spec);

        bool ok = true;
        std::string detail;
        try {
            MeasureReport report = verify_proportionality(system);
            if (!report.proportionality_holds) {
                ok = false;
                detail = "proportionality failed";
            }
            if (ok && deep) {
                if (!report.noncontextual) {
                    SingleNegativeWitness wit = cnt3_single_negative(system);
                    defective_coupling_from_witness(system, wit);
                }
                ConsistificationRelations rel = verify_consistification_relations(system);
                if (!rel.cntf_invariant || !rel.cnt3_ratio_holds ||
                    !rel.consistified_consistent) {
                    ok = false;
                    detail = "consistification relations failed";
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (ok) {
            ++passed;
        } else {
            std::cout << "trial " << t << ": FAIL (" << detail << ")\n";
        }
    }
    std::cout << "passed " << passed << "/" << trials << "\n";
    return passed == trials ? 0 : kExitInternalError;
}

int cmd_generate(const std::string& preset_name, bool random, int rank, std::uint64_t seed,
                 std::uint64_t denominator, bool consistent) {
    if (random != preset_name.empty()) {
        std::cerr << "cycontext: choose exactly one of --preset and --random\n";
        return kExitInputError;
    }
    if (!preset_name.empty()) {
        std::cout << serialize_system_file(preset(preset_name));
        return 0;
    }
    if (rank == 0) {
        std::cerr << "cycontext: --random requires --rank\n";
        return kExitInputError;
    }
    GeneratorSpec spec;
    spec.rank = rank;
    spec.seed = seed;
    spec.denominator_bound = denominator;
    std::cout << serialize_system_file(consistent ? random_consistent_system(spec)
                                                  : random_system(spec));
    return 0;
}

int cmd_consistify(const std::string& input_path) {
    CyclicSystem system = parse_system_file(read_input(input_path));
    std::cout << serialize_system_file(consistify(system).system);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact contextuality measures for cyclic systems of binary random variables"};
    app.require_subcommand(1);

    std::string analyze_input;
    bool with_witnesses = false;
    bool with_consistify = false;
    CLI::App* analyze = app.add_subcommand("analyze", "Measure a system file, print a JSON report");
    analyze->add_option("input", analyze_input, "system file path, or - for standard input")
        ->required();
    analyze->add_flag("--witnesses", with_witnesses, "include the sparse optimal measures");
    analyze->add_flag("--consistify", with_consistify,
                      "also measure the consistified system and check the exact relations");

    int v_rank = 0;
    int v_trials = 100;
    std::uint64_t v_seed = 0;
    bool v_consistent = false;
    bool v_deep = false;
    CLI::App* verify = app.add_subcommand("verify", "cross-check seeded random systems");
    verify->add_option("--rank", v_rank, "cyclic rank of generated systems")
        ->required()
        ->check(CLI::Range(2, 6));
    verify->add_option("--trials", v_trials, "number of systems")->check(CLI::PositiveNumber);
    verify->add_option("--seed", v_seed, "base seed");
    verify->add_flag("--consistent", v_consistent, "generate consistently connected systems");
    verify->add_flag("--deep", v_deep,
                     "also run witness constructions and consistification checks");

    std::string g_preset;
    bool g_random = false;
    int g_rank = 0;
    std::uint64_t g_seed = 0;
    std::uint64_t g_denominator = 16;
    bool g_consistent = false;
    CLI::App* generate = app.add_subcommand("generate", "write a system file to standard output");
    generate->add_option("--preset", g_preset,
                         "example1 | example2 | pr-box | uniform-independent-N");
    generate->add_flag("--random", g_random, "draw a seeded random system");
    generate->add_option("--rank", g_rank, "rank for --random")->check(CLI::Range(2, 32));
    generate->add_option("--seed", g_seed, "seed for --random");
    generate->add_option("--denominator", g_denominator, "probability denominator for --random")
        ->check(CLI::Range(std::uint64_t(2), std::uint64_t(1) << 31));
    generate->add_flag("--consistent", g_consistent, "draw a consistently connected system");

    std::string c_input;
    CLI::App* consistify_cmd =
        app.add_subcommand("consistify", "write the consistified system to standard output");
    consistify_cmd->add_option("input", c_input, "system file path, or - for standard input")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_input, with_witnesses, with_consistify);
        if (verify->parsed()) return cmd_verify(v_rank, v_trials, v_seed, v_consistent, v_deep);
        if (generate->parsed()) {
            return cmd_generate(g_preset, g_random, g_rank, g_seed, g_denominator, g_consistent);
        }
        if (consistify_cmd->parsed()) return cmd_consistify(c_input);
    } catch (const internal_consistency_error& e) {
        std::cerr << "cycontext: internal consistency failure: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cycontext: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "cycontext: internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return 0;
}
