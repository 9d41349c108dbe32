#include <CLI11.hpp>

#include <cstdlib>

#include "nfrac/experiment.hpp"

namespace {

void add_common(CLI::App* cmd, nfrac::ExperimentConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "seed for randomized audits");
    cmd->add_option("--format", cfg.format, "csv or json");
    cmd->add_option("--output,-o", cfg.output, "output path (default stdout)");
    cmd->add_option("--budget", cfg.work_budget, "work budget in kernel operations");
    cmd->add_flag("--timing", cfg.timing, "measure wall_ms columns (breaks byte-reproducibility)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential-sum and n-fraction approximation experiments"};
    app.require_subcommand(1);

    nfrac::ExperimentConfig cfg;
    if (const char* env = std::getenv("NFRAC_WORK_BUDGET")) cfg.work_budget = std::strtoull(env, nullptr, 10);

    auto* kt = app.add_subcommand("kappa-table", "exact kappa(n) table");
    kt->add_option("--n", cfg.n_spec, "n or range lo..hi");
    add_common(kt, cfg);

    auto* search = app.add_subcommand("search", "constructive n-fraction search with certificate");
    search->add_option("--alpha", cfg.alphas, "target: p/q, integer, or convergent:<name>:<min_den>")
        ->required();
    search->add_option("--N", cfg.N, "window parameter")->required();
    search->add_option("--n", cfg.n_spec, "number of fractions");
    search->add_option("--epsilon", cfg.epsilon, "target slack exponent (rational)");
    search->add_option("--phi", cfg.phi, "hypothesis exponent (rational, default kappa(n))");
    search->add_option("--mode", cfg.mode, "theorem1 or theorem2");
    add_common(search, cfg);

    auto* oracle = app.add_subcommand("oracle", "brute-force optimal n-fraction approximation");
    oracle->add_option("--alpha", cfg.alphas, "target")->required();
    oracle->add_option("--N", cfg.N, "denominator bound")->required();
    oracle->add_option("--n", cfg.n_spec, "number of fractions");
    oracle->add_option("--class", cfg.oracle_class, "primes (window) or all (integers up to N)");
    add_common(oracle, cfg);

    auto* expsum = app.add_subcommand("expsum-audit", "grouped-vs-direct, d_r grid, orthogonality");
    expsum->add_option("--trials", cfg.trials, "draws for the hist check (default 50)");
    expsum->add_option("--check", cfg.check, "hist, dr, ortho, or lemma (full reports)");
    add_common(expsum, cfg);

    auto* et = app.add_subcommand("et-audit", "equidistribution criterion S > J/6 on random points");
    et->add_option("--trials", cfg.trials, "number of point sets (default 500)");
    add_common(et, cfg);

    auto* vin = app.add_subcommand("vinogradov-audit", "min-sum against its explicit majorant");
    vin->add_option("--trials", cfg.trials, "number of (a, q, N) draws (default 300)");
    add_common(vin, cfg);

    auto* scan = app.add_subcommand("conjecture-scan", "empirical exponent table over a phi grid");
    scan->add_option("--alpha", cfg.alphas, "targets (repeatable)")->required();
    scan->add_option("--N-range", cfg.N_range, "lo..hi or lo..hi:step")->required();
    scan->add_option("--n", cfg.n_spec, "number of fractions");
    scan->add_option("--epsilon", cfg.epsilon, "target slack exponent");
    add_common(scan, cfg);

    auto* cor2 = app.add_subcommand("corollary2-probe",
                                    "combined fraction A/Q with omega(Q) = n prime factors");
    cor2->add_option("--alpha", cfg.alphas, "target")->required();
    cor2->add_option("--X", cfg.X, "hypothesis height")->required();
    cor2->add_option("--n", cfg.n_spec, "number of prime factors");
    cor2->add_option("--epsilon", cfg.epsilon, "slack exponent");
    add_common(cor2, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // invalid configuration is exit 1; --help is 0
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return nfrac::run_experiment_to_output(cfg);
}
