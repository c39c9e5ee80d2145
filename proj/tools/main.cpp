// Command-line front end: every library operation as a subcommand with
// JSON output. See README for the schemas and exit-code contract.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "nilgen/acceptance.hpp"
#include "nilgen/ahsp.hpp"
#include "nilgen/bounds.hpp"
#include "nilgen/errors.hpp"
#include "nilgen/json_io.hpp"

namespace {

using nilgen::Integer;
using nilgen::Json;
using nilgen::Rational;

std::vector<Integer> parse_divisor_list(const std::string& text) {
    std::vector<Integer> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = token.find_last_not_of(" \t");
        const std::string trimmed = token.substr(begin, end - begin + 1);
        try {
            out.emplace_back(trimmed);
        } catch (const std::invalid_argument&) {
            throw nilgen::invalid_input_error("bad divisor '" + trimmed + "'");
        }
    }
    return out;
}

nilgen::PlanStrategy parse_strategy(const std::string& name) {
    if (name == "rank") return nilgen::PlanStrategy::rank;
    if (name == "len") return nilgen::PlanStrategy::len;
    if (name == "len-unknown-h") return nilgen::PlanStrategy::len_unknown_h;
    throw nilgen::invalid_input_error("unknown strategy '" + name +
                                      "' (expected rank, len or len-unknown-h)");
}

struct CommandContext {
    std::string output_path;

    // Wraps a handler with timing, the CommandResult envelope and the
    // exit-code mapping: 0 ok, 2 invalid-input, 3 resource-limit.
    int run(const std::function<Json()>& handler) const {
        const auto start = std::chrono::steady_clock::now();
        Json envelope;
        int exit_code = 0;
        try {
            envelope["payload"] = handler();
            envelope["status"] = "ok";
        } catch (const nilgen::invalid_input_error& e) {
            envelope["status"] = "invalid-input";
            envelope["error"] = e.what();
            std::cerr << "error: " << e.what() << "\n";
            exit_code = 2;
        } catch (const nilgen::resource_limit_error& e) {
            envelope["status"] = "resource-limit";
            envelope["error"] = e.what();
            std::cerr << "error: " << e.what() << "\n";
            exit_code = 3;
        }
        const auto stop = std::chrono::steady_clock::now();
        envelope["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        if (output_path.empty()) {
            std::cout << envelope.dump(2) << "\n";
        } else {
            std::ofstream out(output_path);
            if (!out) {
                std::cerr << "error: cannot write " << output_path << "\n";
                return 2;
            }
            out << envelope.dump(2) << "\n";
        }
        return exit_code;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generation probabilities, sampling bounds and hidden-subgroup "
                 "post-processing for finite abelian groups"};
    app.require_subcommand(1);

    // --- phi ---------------------------------------------------------
    auto* phi_cmd = app.add_subcommand(
        "phi", "generation probability phi_k(G), exact / Monte Carlo / brute force");
    std::string phi_divisors;
    long phi_k = 0;
    bool phi_exact = false, phi_mc = false, phi_brute = false;
    long phi_trials = 100000;
    std::uint64_t phi_seed = 1;
    CommandContext phi_ctx;
    phi_cmd->add_option("--divisors", phi_divisors,
                        "comma-separated cyclic orders; empty for the trivial group")
        ->required();
    phi_cmd->add_option("--k", phi_k, "number of samples")->required();
    auto* phi_exact_flag = phi_cmd->add_flag("--exact", phi_exact, "exact rational value");
    phi_cmd->add_flag("--monte-carlo", phi_mc, "seeded Monte Carlo estimate")
        ->excludes(phi_exact_flag);
    phi_cmd->add_flag("--brute-force", phi_brute, "count generating tuples exhaustively");
    phi_cmd->add_option("--trials", phi_trials, "Monte Carlo trials");
    phi_cmd->add_option("--seed", phi_seed, "Monte Carlo master seed");
    phi_cmd->add_option("--output", phi_ctx.output_path, "write JSON to a file");

    // --- bounds ------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "sufficient sample counts (rank and len based) plus comparators");
    std::string bounds_divisors, bounds_profile, bounds_epsilon;
    bool bounds_exact_min = false;
    CommandContext bounds_ctx;
    auto* bounds_div_opt =
        bounds_cmd->add_option("--divisors", bounds_divisors, "concrete group divisors");
    auto* bounds_profile_opt =
        bounds_cmd->add_option("--profile", bounds_profile, "abstract profile p:r:l[,p:r:l...]")
            ->excludes(bounds_div_opt);
    bounds_cmd->add_option("--epsilon", bounds_epsilon, "failure budget as a rational, e.g. 1/10")
        ->required();
    bounds_cmd->add_flag("--exact-min-k", bounds_exact_min, "also scan for the exact minimum k");
    bounds_cmd->add_option("--output", bounds_ctx.output_path, "write JSON to a file");

    // --- tightness ---------------------------------------------------
    auto* tight_cmd =
        app.add_subcommand("tightness", "witness that a bound cannot be lowered much");
    std::string tight_mode, tight_epsilon;
    long tight_n = 1;
    CommandContext tight_ctx;
    tight_cmd->add_option("--mode", tight_mode, "len or rank")
        ->required()
        ->check(CLI::IsMember({"len", "rank"}));
    tight_cmd->add_option("--n", tight_n, "group size parameter (>= 1)")->required();
    tight_cmd->add_option("--epsilon", tight_epsilon, "failure budget as a rational")->required();
    tight_cmd->add_option("--output", tight_ctx.output_path, "write JSON to a file");

    // --- ahsp --------------------------------------------------------
    auto* ahsp_cmd = app.add_subcommand(
        "ahsp", "plan and simulate hidden-subgroup classical post-processing");
    std::string ahsp_instance_path, ahsp_epsilon, ahsp_strategy = "rank";
    long ahsp_trials = 10000;
    std::uint64_t ahsp_seed = 1;
    std::int64_t ahsp_k = -1;
    CommandContext ahsp_ctx;
    ahsp_cmd->add_option("instance", ahsp_instance_path, "instance JSON file")->required();
    ahsp_cmd->add_option("--epsilon", ahsp_epsilon, "failure budget as a rational")->required();
    ahsp_cmd->add_option("--strategy", ahsp_strategy, "rank, len or len-unknown-h");
    ahsp_cmd->add_option("--k", ahsp_k, "override the planned iteration count");
    ahsp_cmd->add_option("--trials", ahsp_trials, "simulation trials");
    ahsp_cmd->add_option("--seed", ahsp_seed, "simulation master seed");
    ahsp_cmd->add_option("--output", ahsp_ctx.output_path, "write JSON to a file");

    // --- regev -------------------------------------------------------
    auto* regev_cmd = app.add_subcommand(
        "regev", "circuit repetitions: rank+2 samples generate with probability >= 1/2");
    std::int64_t regev_nbits = -1, regev_rank = -1;
    CommandContext regev_ctx;
    auto* regev_nbits_opt = regev_cmd->add_option("--n-bits", regev_nbits, "modulus bit length");
    regev_cmd->add_option("--rank", regev_rank, "group rank")->excludes(regev_nbits_opt);
    regev_cmd->add_option("--output", regev_ctx.output_path, "write JSON to a file");

    // --- repro -------------------------------------------------------
    auto* repro_cmd =
        app.add_subcommand("repro", "run the acceptance suite and emit a pass/fail table");
    int repro_criterion = 0;
    CommandContext repro_ctx;
    repro_cmd->add_option("--criterion", repro_criterion, "run a single criterion (1..7)");
    repro_cmd->add_option("--output", repro_ctx.output_path, "write JSON to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints usage or help text
        return code == 0 ? 0 : 2;
    }

    if (phi_cmd->parsed()) {
        return phi_ctx.run([&]() -> Json {
            const nilgen::AbelianGroup g = nilgen::parse_group(parse_divisor_list(phi_divisors));
            if (!phi_exact && !phi_mc && !phi_brute) phi_exact = true;
            Json payload;
            payload["group"] = nilgen::group_to_json(g);
            payload["k"] = phi_k;
            if (phi_exact)
                payload["exact"] = nilgen::phi_value_to_json(nilgen::phi_abelian(g, phi_k));
            if (phi_mc)
                payload["monte_carlo"] = nilgen::monte_carlo_to_json(
                    nilgen::estimate_phi(g, phi_k, phi_trials, phi_seed));
            if (phi_brute) {
                const Integer count = nilgen::count_generating_tuples(g, phi_k);
                const Integer total =
                    nilgen::ipow(g.order(), static_cast<unsigned long>(phi_k));
                payload["brute_force"] = {
                    {"count", count.get_str()},
                    {"total", total.get_str()},
                    {"value", nilgen::rational_to_json(nilgen::make_rational(count, total))}};
            }
            return payload;
        });
    }

    if (bounds_cmd->parsed()) {
        return bounds_ctx.run([&]() -> Json {
            const Rational eps = nilgen::parse_rational(bounds_epsilon);
            nilgen::NilpotentProfile profile;
            std::optional<Integer> order;
            Json payload;
            if (bounds_profile_opt->count() > 0) {
                profile = nilgen::parse_profile(bounds_profile);
            } else if (bounds_div_opt->count() > 0) {
                const nilgen::AbelianGroup g =
                    nilgen::parse_group(parse_divisor_list(bounds_divisors));
                profile = nilgen::sylow_profile(g);
                order = g.order();
                payload["group"] = nilgen::group_to_json(g);
            } else {
                throw nilgen::invalid_input_error("provide --divisors or --profile");
            }
            payload["profile"] = nilgen::profile_to_json(profile);
            payload["report"] = nilgen::bound_report_to_json(
                nilgen::bound_report(profile, eps, order, bounds_exact_min));
            return payload;
        });
    }

    if (tight_cmd->parsed()) {
        return tight_ctx.run([&]() -> Json {
            const auto mode = tight_mode == "len" ? nilgen::TightnessMode::len
                                                  : nilgen::TightnessMode::rank;
            const nilgen::TightnessWitness w =
                nilgen::tightness_witness(mode, tight_n, nilgen::parse_rational(tight_epsilon));
            Json payload = nilgen::tightness_witness_to_json(w);
            payload["mode"] = tight_mode;
            return payload;
        });
    }

    if (ahsp_cmd->parsed()) {
        return ahsp_ctx.run([&]() -> Json {
            std::ifstream in(ahsp_instance_path);
            if (!in)
                throw nilgen::invalid_input_error("cannot read instance file '" +
                                                  ahsp_instance_path + "'");
            Json instance_json;
            try {
                in >> instance_json;
            } catch (const Json::parse_error& e) {
                throw nilgen::invalid_input_error(std::string("instance is not valid JSON: ") +
                                                  e.what());
            }
            const nilgen::HspInstance inst = nilgen::hsp_instance_from_json(instance_json);
            const Rational eps = nilgen::parse_rational(ahsp_epsilon);
            const nilgen::PlanStrategy strategy = parse_strategy(ahsp_strategy);

            std::optional<long> hidden_len;
            if (strategy == nilgen::PlanStrategy::len)
                hidden_len = nilgen::len(nilgen::subgroup_isomorphism_type(inst.hidden));
            const nilgen::IterationPlan plan =
                nilgen::plan_iterations(inst.group, eps, hidden_len, strategy);

            nilgen::SimulationResult sim =
                ahsp_k >= 0 ? nilgen::simulate_ahsp(inst.group, inst.hidden, ahsp_k, ahsp_trials,
                                                    ahsp_seed)
                            : nilgen::simulate_ahsp(inst.group, inst.hidden, plan, ahsp_trials,
                                                    ahsp_seed);

            Json payload;
            payload["instance"] = nilgen::hsp_instance_to_json(inst);
            payload["plan"] = nilgen::iteration_plan_to_json(plan);
            payload["orthogonal_subgroup"] =
                nilgen::subgroup_to_json(nilgen::orthogonal_subgroup(inst.group, inst.hidden));
            payload["simulation"] = nilgen::simulation_result_to_json(sim);
            return payload;
        });
    }

    if (regev_cmd->parsed()) {
        return regev_ctx.run([&]() -> Json {
            Json payload;
            if (regev_nbits >= 0) {
                if (regev_nbits < 1)
                    throw nilgen::invalid_input_error("--n-bits must be positive");
                const Integer d = nilgen::ceil_sqrt(Integer(regev_nbits));
                const long rank = d.get_si();
                payload["n_bits"] = regev_nbits;
                payload["rank"] = rank;
                payload["repetitions"] = nilgen::regev_repetitions(rank);
                payload["prior_repetitions"] = rank + 4;
            } else if (regev_rank >= 0) {
                payload["rank"] = regev_rank;
                payload["repetitions"] = nilgen::regev_repetitions(regev_rank);
            } else {
                throw nilgen::invalid_input_error("provide --n-bits or --rank");
            }
            return payload;
        });
    }

    if (repro_cmd->parsed()) {
        // Exit code follows the envelope contract (0 when the suite ran);
        // the outcome itself is payload.all_passed and the stderr table.
        return repro_ctx.run([&]() -> Json {
            std::vector<nilgen::acceptance::CriterionResult> results;
            if (repro_criterion != 0) {
                if (repro_criterion < 1 || repro_criterion > 7)
                    throw nilgen::invalid_input_error("--criterion must be in 1..7");
                results.push_back(nilgen::acceptance::run_criterion(repro_criterion));
            } else {
                results = nilgen::acceptance::run_all_criteria();
            }
            Json criteria = Json::array();
            bool all_passed = true;
            for (const auto& r : results) {
                std::cerr << nilgen::acceptance::format_result_line(r) << "\n";
                all_passed = all_passed && r.passed;
                criteria.push_back(Json{{"id", r.id},
                                        {"name", r.name},
                                        {"passed", r.passed},
                                        {"detail", r.detail},
                                        {"seconds", r.seconds}});
            }
            return Json{{"criteria", std::move(criteria)}, {"all_passed", all_passed}};
        });
    }

    return 0;
}
