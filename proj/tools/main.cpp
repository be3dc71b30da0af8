#include <cstdint>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv) {
    CLI::App app{"binphi: binary cyclotomic polynomials Phi_pq, the "
                 "factorization of X^ab - 1, and their cross-validation"};
    app.require_subcommand(1);

    const std::set<std::string> formats = {"dense", "sparse", "latex", "json"};

    cli::PhiOptions phi_opt;
    auto *phi_cmd =
        app.add_subcommand("phi", "compute Phi_pq by one or all methods");
    phi_cmd->add_option("p", phi_opt.p, "prime")->required();
    phi_cmd->add_option("q", phi_opt.q, "prime, distinct from p")->required();
    phi_cmd
        ->add_option("--method", phi_opt.method,
                     "closed|lenstra|lamleung|oracle|all")
        ->check(CLI::IsMember(
            {"closed", "lenstra", "lamleung", "oracle", "all"}))
        ->capture_default_str();
    phi_cmd->add_option("--format", phi_opt.format, "dense|sparse|latex|json")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    phi_cmd
        ->add_option("--max-degree", phi_opt.max_degree,
                     "dense coefficient cap")
        ->capture_default_str();

    cli::FactorOptions factor_opt;
    auto *factor_cmd = app.add_subcommand(
        "factor", "factor X^ab - 1 for coprime a > b >= 1");
    factor_cmd->add_option("a", factor_opt.a, "natural number")->required();
    factor_cmd->add_option("b", factor_opt.b, "natural number, coprime to a")
        ->required();
    factor_cmd
        ->add_option("--format", factor_opt.format, "dense|sparse|latex|json")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    factor_cmd
        ->add_option("--max-degree", factor_opt.max_degree,
                     "dense coefficient cap")
        ->capture_default_str();

    std::uint64_t params_p = 0;
    std::uint64_t params_q = 0;
    auto *params_cmd = app.add_subcommand(
        "params", "print lambda, mu, r, s for a prime pair");
    params_cmd->add_option("p", params_p, "prime")->required();
    params_cmd->add_option("q", params_q, "prime, distinct from p")
        ->required();

    std::uint64_t verify_max_pq = 0;
    unsigned verify_jobs = 1;
    auto *verify_cmd = app.add_subcommand(
        "verify", "cross-validate all formulas for every pair with pq <= N");
    verify_cmd->add_option("--max-pq", verify_max_pq, "sweep bound (>= 6)")
        ->required();
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();

    std::uint64_t bench_max_pq = 0;
    unsigned bench_reps = 5;
    auto *bench_cmd = app.add_subcommand(
        "bench", "CSV timings of each construction over a sweep");
    bench_cmd->add_option("--max-pq", bench_max_pq, "sweep bound (>= 6)")
        ->required();
    bench_cmd->add_option("--reps", bench_reps, "repetitions per timing")
        ->check(CLI::Range(1u, 1000000u))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    if (phi_cmd->parsed())
        return cli::run_phi(phi_opt, std::cout, std::cerr);
    if (factor_cmd->parsed())
        return cli::run_factor(factor_opt, std::cout, std::cerr);
    if (params_cmd->parsed())
        return cli::run_params(params_p, params_q, std::cout, std::cerr);
    if (verify_cmd->parsed())
        return cli::run_verify(verify_max_pq, verify_jobs, std::cout,
                               std::cerr);
    if (bench_cmd->parsed())
        return cli::run_bench(bench_max_pq, bench_reps, std::cout, std::cerr);
    return 1;
}
