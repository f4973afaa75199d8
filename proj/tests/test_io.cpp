#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ramsey/calibration.hpp"
#include "ramsey/discretion.hpp"
#include "ramsey/io.hpp"
#include "ramsey/quasi_commitment.hpp"
#include "ramsey/simulation.hpp"
#include "ramsey/welfare.hpp"
#include "test_helpers.hpp"

using namespace ramsey;
namespace fs = std::filesystem;

namespace {

const StructuralParams kGali = gali2015();

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / (std::string("ramsey_io_test_") + name);
}

}  // namespace

TEST_CASE("decimal formatting round-trips arbitrary doubles") {
    std::mt19937_64 rng(42u);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::ldexp(mantissa(rng), exponent(rng));
        CHECK(parse_double(format_double(v)) == v);
    }
    for (double v : {0.0, -0.0, 1.0, -1.0, 0.1, 1e-7, 0.7462686567164177, 1e300})
        CHECK(parse_double(format_double(v)) == v);

    CHECK_THROWS_AS(parse_double("not-a-number"), std::invalid_argument);
    CHECK_THROWS_AS(parse_double("1.5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
}

TEST_CASE("IRF CSV round-trips exactly") {
    const PolicySolution sol = solve_quasi_commitment(kGali, 1.0);
    const IrfPath path = impulse_response(sol, 12, 1.0);

    std::stringstream stream;
    write_irf_csv(stream, path);
    const CsvTable table = read_csv(stream);

    REQUIRE(table.header == std::vector<std::string>{"t", "pi", "x", "u"});
    REQUIRE(table.rows.size() == 13);
    for (std::size_t t = 0; t < table.rows.size(); ++t) {
        CHECK(table.rows[t][0] == static_cast<double>(t));
        CHECK(table.rows[t][1] == path.pi[t]);
        CHECK(table.rows[t][2] == path.x[t]);
        CHECK(table.rows[t][3] == path.u[t]);
    }
}

TEST_CASE("robustness CSV carries the rel_gap column") {
    const PolicySolution sol = solve_discretion(kGali);
    const RobustnessResult run = robustness_experiment(sol, 6, 1.0, 0.10);

    std::stringstream stream;
    write_irf_csv(stream, run.perturbed, run.rel_gap);
    const CsvTable table = read_csv(stream);
    REQUIRE(table.header == std::vector<std::string>{"t", "pi", "x", "u", "rel_gap"});
    for (std::size_t t = 0; t < table.rows.size(); ++t)
        CHECK(table.rows[t][4] == run.rel_gap[t]);
}

TEST_CASE("welfare CSV round-trips exactly") {
    const std::vector<double> eps = {6.0, 2.35};
    const std::vector<double> qs = {1.0, 0.5, 0.0};
    const WelfareTable table = welfare_table(kGali, eps, qs, 200);

    std::stringstream stream;
    write_welfare_csv(stream, table);
    const CsvTable parsed = read_csv(stream);
    REQUIRE(parsed.header ==
            std::vector<std::string>{"epsilon", "kappa", "weight_x", "q", "W", "w_percent"});
    REQUIRE(parsed.rows.size() == 6);

    std::size_t row_index = 0;
    for (const auto& row : table.rows)
        for (const auto& cell : row.entries) {
            CHECK(parsed.rows[row_index][0] == row.epsilon);
            CHECK(parsed.rows[row_index][1] == row.kappa);
            CHECK(parsed.rows[row_index][3] == cell.q);
            CHECK(parsed.rows[row_index][4] == cell.W);
            CHECK(parsed.rows[row_index][5] == 100.0 * cell.w);
            ++row_index;
        }
}

TEST_CASE("ragged CSV input is rejected") {
    std::stringstream stream("a,b\n1,2\n3\n");
    CHECK_THROWS_AS(read_csv(stream), std::runtime_error);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), std::runtime_error);
}

TEST_CASE("solution records carry the regime-specific fields") {
    const auto qc = solution_record(solve_quasi_commitment(kGali, 1.0));
    CHECK(qc["regime"] == "quasi_commitment");
    CHECK(qc["q"] == 1.0);
    CHECK(qc.contains("lambda"));
    CHECK(qc.contains("f_pi"));
    CHECK(qc.contains("f_u"));
    CHECK(qc.contains("p_pi"));
    CHECK(qc.contains("p_u"));
    CHECK(qc.contains("anchor_pi"));
    CHECK(qc.contains("anchor_x"));
    CHECK(qc.contains("closed_loop_11"));
    CHECK(qc.contains("closed_loop_22"));

    const auto disc = solution_record(solve_discretion(kGali));
    CHECK(disc["regime"] == "discretion");
    CHECK(disc["q"] == 0.0);
    CHECK(!disc.contains("p_pi"));
    CHECK(!disc.contains("p_u"));
    CHECK(disc["f_u"] == 0.0);

    // JSON serialization round-trips the doubles bit-exactly.
    const auto reparsed = nlohmann::json::parse(qc.dump());
    CHECK(reparsed["lambda"].get<double>() ==
          solve_quasi_commitment(kGali, 1.0).lambda);
}

TEST_CASE("config files load, default and reject unknown keys") {
    const fs::path good = temp_file("good.cfg");
    {
        std::ofstream out(good);
        out << "# quarterly calibration\n";
        out << "beta = 0.99\n";
        out << "epsilon = 2.35\n";
        out << "u0 = 2.0\n";
    }
    const StructuralParams p = load_config(good.string());
    CHECK(p.beta == 0.99);
    CHECK(p.epsilon == 2.35);
    CHECK(p.u0 == 2.0);
    CHECK(p.theta == kGali.theta);  // untouched keys keep gali2015 defaults
    fs::remove(good);

    const fs::path unknown = temp_file("unknown.cfg");
    {
        std::ofstream out(unknown);
        out << "beta = 0.99\nmystery = 1\n";
    }
    CHECK_THROWS_WITH_AS(load_config(unknown.string()),
                         doctest::Contains("unknown key"), std::runtime_error);
    fs::remove(unknown);

    const fs::path bad_value = temp_file("bad_value.cfg");
    {
        std::ofstream out(bad_value);
        out << "beta = fast\n";
    }
    CHECK_THROWS_AS(load_config(bad_value.string()), std::runtime_error);
    fs::remove(bad_value);

    const fs::path out_of_range = temp_file("oor.cfg");
    {
        std::ofstream out(out_of_range);
        out << "beta = 1.0\n";
    }
    CHECK_THROWS_AS(load_config(out_of_range.string()), std::domain_error);
    fs::remove(out_of_range);

    CHECK_THROWS_AS(load_config("/nonexistent/limits.cfg"), std::runtime_error);
}

TEST_CASE("scan CSV includes the regime labels and round-trips the numbers") {
    const std::vector<double> qs = {0.0, 0.5};
    const std::vector<double> eps = {6.0};
    const ScanResult scan = eigenvalue_scan(kGali, qs, eps);

    std::stringstream stream;
    write_scan_csv(stream, scan);
    const std::string text = stream.str();
    CHECK(text.find("q,epsilon,lambda,f_pi,anchor_pi,regime") == 0);
    CHECK(text.find("unstable") != std::string::npos);
    CHECK(text.find("stable") != std::string::npos);

    // Numeric columns reproduce the in-memory values exactly.
    std::stringstream lines(text);
    std::string line;
    std::getline(lines, line);  // header
    for (const ScanPoint& pt : scan.points) {
        REQUIRE(std::getline(lines, line));
        std::stringstream cells(line);
        std::string cell;
        const double expected[] = {pt.q, pt.epsilon, pt.lambda, pt.f_pi, pt.anchor_pi};
        for (double value : expected) {
            REQUIRE(std::getline(cells, cell, ','));
            CHECK(parse_double(cell) == value);
        }
        REQUIRE(std::getline(cells, cell, ','));
        CHECK(cell == (pt.regime_class == RegimeClass::Stable ? "stable" : "unstable"));
    }
}
