#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "detail/csv.hpp"
#include "tsou/experiment.hpp"
#include "tsou/forward_curve.hpp"

using tsou::ExperimentConfig;
using tsou::ExperimentOverrides;
using tsou::ForwardCurve;
using tsou::detail::format_number;

TEST_CASE("number cells render canonically") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-2.5) == "-2.5");
    CHECK(format_number(20.0) == "20");
    CHECK(format_number(0.125) == "0.125");
    CHECK(format_number(1234.5) == "1234.5");
    CHECK(format_number(1.5e7) == "1.5e+07");
    CHECK(format_number(-3e-9) == "-3e-09");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(1.0 / 0.0) == "inf");
}

TEST_CASE("flat and piecewise forward curves") {
    const ForwardCurve flat = ForwardCurve::flat(21.0);
    CHECK(flat(0.0) == 21.0);
    CHECK(flat(5.0) == 21.0);
    CHECK(flat.is_flat());
    CHECK_THROWS_AS(ForwardCurve::flat(0.0), std::invalid_argument);

    const ForwardCurve pw = ForwardCurve::piecewise_daily({{0, 20.0}, {30, 21.5}, {90, 19.25}});
    CHECK(pw(0.0) == 20.0);
    CHECK(pw(29.0 / 360.0) == 20.0);
    CHECK(pw(30.0 / 360.0) == 21.5);
    CHECK(pw(0.2) == 21.5);
    CHECK(pw(0.25) == 19.25);
    CHECK(pw(2.0) == 19.25);
    CHECK_FALSE(pw.is_flat());

    CHECK_THROWS_AS(ForwardCurve::piecewise_daily({{10, 20.0}, {10, 21.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ForwardCurve::piecewise_daily({{0, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ForwardCurve::piecewise_daily({}), std::invalid_argument);
}

TEST_CASE("forward curves load from day,price files with comments and headers") {
    const ForwardCurve pw = ForwardCurve::from_csv(std::string(TSOU_TEST_DATA_DIR) + "/curve.csv");
    CHECK(pw(0.0) == 20.0);
    CHECK(pw(31.0 / 360.0) == 21.5);
    CHECK(pw(1.0) == 19.25);
    CHECK_THROWS_AS(ForwardCurve::from_csv("/nonexistent/curve.csv"), std::invalid_argument);
}

TEST_CASE("configs parse with defaults and reject unknown keys") {
    const std::string text = R"({
        "model": {"b": 0.1,
                  "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5},
                  "neg": {"alpha": 0.5, "beta": 3.5, "c": 1.0}},
        "n_paths": 4096,
        "seed": 7
    })";
    const ExperimentConfig c = tsou::parse_experiment_config(text, "cumulants");
    CHECK(c.kind == "cumulants");
    CHECK(c.model.pos.beta == 2.5);
    CHECK(c.model.neg.c == 1.0);
    CHECK(c.seed == 7);
    CHECK(c.n_paths == 4096);
    CHECK(c.dt == doctest::Approx(1.0 / 12.0));  // default
    CHECK(c.day_count == 360);

    CHECK_THROWS_AS(tsou::parse_experiment_config("{", "cumulants"), std::invalid_argument);
    CHECK_THROWS_AS(tsou::parse_experiment_config(R"({"model": {"b": 1}})", "cumulants"),
                    std::invalid_argument);  // no active leg
    CHECK_THROWS_AS(tsou::parse_experiment_config(text, "unknown-kind"), std::invalid_argument);

    const std::string with_typo = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5}},
        "n_pathz": 4096
    })";
    CHECK_THROWS_AS(tsou::parse_experiment_config(with_typo, "cumulants"), std::invalid_argument);

    const std::string bad_leg = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5, "mass": 1}}
    })";
    CHECK_THROWS_AS(tsou::parse_experiment_config(bad_leg, "cumulants"), std::invalid_argument);

    const std::string wrong_type = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": "wide", "c": 0.5}}
    })";
    CHECK_THROWS_AS(tsou::parse_experiment_config(wrong_type, "cumulants"),
                    std::invalid_argument);
}

TEST_CASE("CGMY blocks map onto the bilateral model") {
    const std::string text = R"({
        "model": {"cgmy": {"c": 2.0, "g": 15.0, "m": 5.0, "y": 0.5, "b": 10.0}},
        "n_paths": 4096
    })";
    const ExperimentConfig c = tsou::parse_experiment_config(text, "cumulants");
    CHECK(c.model.pos.beta == 5.0);
    CHECK(c.model.neg.beta == 15.0);
    CHECK(c.model.pos.c == 2.0);
    CHECK(c.model.b == 10.0);
}

TEST_CASE("the canonical echo is a fixed point of parsing") {
    const std::string text = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5}},
        "n_paths": 4096,
        "strike": 21.25,
        "schemes": ["exact", "approx1"],
        "forward_start_days": 30
    })";
    const ExperimentConfig c = tsou::parse_experiment_config(text, "asian");
    REQUIRE(!c.echo.empty());
    const ExperimentConfig again = tsou::parse_experiment_config(c.echo, "asian");
    CHECK(again.echo == c.echo);
    CHECK(again.strike == c.strike);
    CHECK(again.schemes.size() == 2);
    CHECK(again.forward_start_days == 30);
    // a kind mismatch against the embedded kind is rejected
    CHECK_THROWS_AS(tsou::parse_experiment_config(c.echo, "swing"), std::invalid_argument);
}

TEST_CASE("overrides take precedence over file values and land in the echo") {
    const std::string text = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5}},
        "seed": 1,
        "out": "from_file"
    })";
    ExperimentOverrides ov;
    ov.seed = 999;
    ov.out_dir = "from_override";
    const ExperimentConfig c = tsou::parse_experiment_config(text, "cumulants", ov);
    CHECK(c.seed == 999);
    CHECK(c.out_dir == "from_override");
    CHECK(c.echo.find("999") != std::string::npos);
    // The echo captures the experiment definition, not where it is written:
    // reruns into different directories must stay byte-identical.
    CHECK(c.echo.find("from_override") == std::string::npos);
    CHECK(c.echo.find("from_file") == std::string::npos);
    CHECK(c.echo.find("out") == std::string::npos);
}

TEST_CASE("curve blocks choose flat or file-backed forwards") {
    const std::string flat = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5}},
        "curve": {"flat": 23.5}
    })";
    const ExperimentConfig cf = tsou::parse_experiment_config(flat, "call-strip");
    CHECK(cf.curve()(1.0) == 23.5);

    const std::string file = R"({
        "model": {"b": 0.1, "pos": {"alpha": 0.5, "beta": 2.5, "c": 0.5}},
        "curve": {"csv": ")" + std::string(TSOU_TEST_DATA_DIR) +
                             R"(/curve.csv"}
    })";
    const ExperimentConfig cc = tsou::parse_experiment_config(file, "call-strip");
    CHECK(cc.curve()(0.0) == 20.0);
    CHECK(cc.curve()(1.0) == 19.25);
}
