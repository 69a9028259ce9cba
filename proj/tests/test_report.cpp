#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bcsph/errors.hpp"
#include "bcsph/report.hpp"

using namespace bcsph;

TEST_CASE("float17 round-trips doubles") {
    for (double v : {1.0 / 3.0, 2.718281828459045, 1e-17, -0.0, 123456.789}) {
        CHECK(std::stod(float17(v)) == v);
    }
}

TEST_CASE("config lines parse and reject unknown keys") {
    RunConfig cfg;
    apply_config_line(cfg, "r", "2");
    apply_config_line(cfg, "a", "3/2");
    apply_config_line(cfg, "nu", "13/2");
    apply_config_line(cfg, "tol.orthogonality", "1e-7");
    CHECK(cfg.r == 2);
    CHECK(cfg.a == "3/2");
    CHECK(cfg.tolerances.at("orthogonality") == 1e-7);
    CHECK_THROWS_AS(apply_config_line(cfg, "bogus", "1"), ParameterError);
}

TEST_CASE("config files parse with comments and report line numbers") {
    const char* path = "test_config_tmp.cfg";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "r = 2\n"
            << "a = 2  # trailing comment\n"
            << "nu = 6\n";
    }
    RunConfig cfg;
    apply_config_file(cfg, path);
    CHECK(cfg.r == 2);
    CHECK(cfg.a == "2");
    CHECK(cfg.nu == "6");
    {
        std::ofstream out(path);
        out << "r == 2\n";
    }
    CHECK_THROWS_AS(apply_config_file(cfg, path), ParameterError);
    std::remove(path);
}

TEST_CASE("report JSON is deterministic with timings fenced off") {
    RunConfig cfg;
    cfg.command = "verify-bs";
    cfg.delta = "-7/3";
    VerificationReport rep;
    rep.item = "weight-lowering-identity";
    rep.status = "pass";
    rep.residuals["residual_terms"] = 0;
    rep.metadata["rank"] = 3;
    Json a = rep.to_json(cfg);
    rep.timings["elapsed_s"] = 1.234; // timing changes must not affect the rest
    Json b = rep.to_json(cfg);
    b.erase("timings");
    a.erase("timings");
    CHECK(a.dump() == b.dump());
    CHECK(a["config"]["command"] == "verify-bs");
}

TEST_CASE("polynomial serialization schema") {
    MultiPoly p(2);
    p.add_term({2, 0}, Rational(1));
    p.add_term({0, 1}, Rational(-1, 2));
    Json j = poly_to_json(p);
    CHECK(j.is_array());
    CHECK(j.size() == 2);
    // canonical graded-lex order puts the degree-1 term first
    CHECK(j[0]["exponents"] == Json::array({0, 1}));
    CHECK(j[0]["coeff"] == "-1/2");
    CHECK(j[1]["coeff"] == "1");
}

TEST_CASE("transition matrix CSV carries partition labels") {
    RootSystemBC rs = make_root_system(1, Rational(2), Rational(1), Rational(1));
    CherednikParams params{rs, Rational(-8)};
    TransitionMatrix M = build_transition_matrix(params, 1);
    std::string csv = transition_to_csv(M);
    CHECK(csv.find("(0)") != std::string::npos);
    CHECK(csv.find("(1)") != std::string::npos);
    CHECK(csv.find('\n') != std::string::npos);
}
