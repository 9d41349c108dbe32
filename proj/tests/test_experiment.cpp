#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nfrac/experiment.hpp"

using namespace nfrac;

TEST_CASE("parse_alpha literals") {
    CHECK(parse_alpha("355/113") == Rational(355, 113));
    CHECK(parse_alpha("-6/4") == Rational(-3, 2));
    CHECK(parse_alpha("42") == Rational(42));
    CHECK_THROWS_AS(parse_alpha("convergent:golden"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alpha("convergent:tau:100"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alpha("nonsense"), std::invalid_argument);
}

TEST_CASE("parse_alpha convergents") {
    CHECK(parse_alpha("convergent:golden:100") == Rational(233, 144));
    CHECK(parse_alpha("convergent:sqrt2:10") == Rational(17, 12));
    CHECK(parse_alpha("convergent:golden:1") == Rational(1, 1));
    CHECK(parse_alpha("convergent:e:100") == Rational(1264, 465));
    CHECK(parse_alpha("convergent:pi:107") == Rational(355, 113));
    CHECK(parse_alpha("convergent:pi:114") == Rational(103993, 33102));
}

TEST_CASE("et audit rows always exceed J/6") {
    const auto rows = et_audit(50, 7);
    REQUIRE(rows.size() == 50);
    for (const auto& r : rows) {
        CHECK(r.exceeds);
        CHECK(r.S > r.threshold);
        CHECK(r.L >= 2);
        CHECK(r.J >= 1);
    }
}

TEST_CASE("vinogradov audit rows hold the explicit bound") {
    const auto rows = vinogradov_audit(40, 11, 500, 500);
    REQUIRE(rows.size() == 40);
    for (const auto& r : rows) {
        CHECK(r.ok);
        CHECK(std::gcd(r.a, r.q) == 1);
    }
}

TEST_CASE("hist audit: grouped equals direct on seeded draws") {
    const auto rows = expsum_hist_audit(12, 3, kDefaultWorkBudget);
    REQUIRE(rows.size() == 12);
    for (const auto& r : rows) CHECK(r.ok);
}

TEST_CASE("experiment runs are byte-identical per (config, seed)") {
    ExperimentConfig cfg;
    cfg.subcommand = "et-audit";
    cfg.trials = 25;
    cfg.seed = 42;
    std::string a, b;
    CHECK(run_experiment(cfg, a) == 0);
    CHECK(run_experiment(cfg, b) == 0);
    CHECK(a == b);

    cfg.seed = 43;
    CHECK(run_experiment(cfg, b) == 0);
    CHECK(a != b);  // the seed is load-bearing
}

TEST_CASE("exit codes") {
    ExperimentConfig cfg;
    cfg.subcommand = "no-such-command";
    std::string out;
    CHECK(run_experiment(cfg, out) == 1);

    cfg = ExperimentConfig{};
    cfg.subcommand = "search";
    cfg.alphas = {"377/610"};
    cfg.N = 50;
    cfg.n_spec = "2";
    cfg.work_budget = 3;  // far below the scan size
    CHECK(run_experiment(cfg, out) == 2);

    cfg.work_budget = kDefaultWorkBudget;
    cfg.format = "martian";
    CHECK(run_experiment(cfg, out) == 1);
}

TEST_CASE("search report carries the certificate fields") {
    ExperimentConfig cfg;
    cfg.subcommand = "search";
    cfg.alphas = {"377/610"};
    cfg.N = 50;
    cfg.n_spec = "2";
    cfg.epsilon = "1/2";
    std::string out;
    REQUIRE(run_experiment(cfg, out) == 0);
    CHECK(out.find("\"error\": \"237/548390\"") != std::string::npos);
    CHECK(out.find("\"met_target\": true") != std::string::npos);
    CHECK(out.find("\"branch\": \"et_search\"") != std::string::npos);
}

TEST_CASE("csv reports embed the config header") {
    ExperimentConfig cfg;
    cfg.subcommand = "kappa-table";
    cfg.n_spec = "1..4";
    std::string out;
    REQUIRE(run_experiment(cfg, out) == 0);
    CHECK(out.rfind("# nfrac subcommand=kappa-table", 0) == 0);
    CHECK(out.find("seed=1") != std::string::npos);
    CHECK(out.find("\n1,1/2\n") != std::string::npos);
    CHECK(out.find("\n4,5/2\n") != std::string::npos);
}

TEST_CASE("expsum lemma sweep emits full reports") {
    ExperimentConfig cfg;
    cfg.subcommand = "expsum-audit";
    cfg.check = "lemma";
    cfg.trials = 6;
    cfg.seed = 17;
    std::string out;
    REQUIRE(run_experiment(cfg, out) == 0);
    CHECK(out.find("lhs,rhs_bound,ratio,condition_ok,term_count,a,q,n,k,L,N,pattern") !=
          std::string::npos);
    cfg.format = "json";
    REQUIRE(run_experiment(cfg, out) == 0);
    CHECK(out.find("\"rhs_bound\"") != std::string::npos);
    CHECK(out.find("\"condition_ok\"") != std::string::npos);
}

TEST_CASE("conjecture scan subcommand emits empirical footer") {
    ExperimentConfig cfg;
    cfg.subcommand = "conjecture-scan";
    cfg.alphas = {"convergent:golden:100"};
    cfg.N_range = "40..50:10";
    cfg.n_spec = "2";
    cfg.work_budget = 100'000'000;
    std::string out;
    REQUIRE(run_experiment(cfg, out) == 0);
    CHECK(out.find("alpha,q,N,n,phi,epsilon,error_num,error_den,met_target,branch,wall_ms") !=
          std::string::npos);
    CHECK(out.find("# empirical alpha=233/144 N=40 best_phi=") != std::string::npos);
    CHECK(out.find("# empirical alpha=233/144 N=50 best_phi=") != std::string::npos);
}
