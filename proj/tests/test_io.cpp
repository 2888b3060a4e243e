#include <doctest.h>

#include <sstream>

#include "suitalab/bergman.hpp"
#include "suitalab/io.hpp"
#include "suitalab/scaling.hpp"
#include "suitalab/suita.hpp"

using namespace suitalab;

namespace {
std::string header_line(const std::string& text) {
    auto first_nl = text.find('\n');
    auto second_nl = text.find('\n', first_nl + 1);
    return text.substr(first_nl + 1, second_nl - first_nl - 1);
}
}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("doubles round trip through the formatter") {
    for (double x : {0.0, 1.0, -1.0 / 3.0, 3.141592653589793, 1e-17, 2.5e300}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("csv layout") {
    std::ostringstream os;
    nlohmann::json config{{"command", "test"}, {"seed", 7}};
    CsvWriter csv(os, config, {"a", "b", "c"});
    csv.row({1.0, std::nullopt, 0.5});
    std::string text = os.str();
    CHECK(text.rfind("# {", 0) == 0);  // config comment first
    auto second_line = text.substr(text.find('\n') + 1);
    CHECK(second_line.rfind("a,b,c\n", 0) == 0);
    CHECK(text.find("1,,0.5\n") != std::string::npos);
}

TEST_CASE("identical inputs give identical bytes") {
    auto render = [] {
        std::ostringstream os;
        CsvWriter csv(os, {{"command", "x"}}, {"u", "v"});
        csv.row({1.0 / 3.0, 2.0 / 7.0});
        return os.str();
    };
    CHECK(render() == render());
}

TEST_CASE("interface csv headers are exact") {
    nlohmann::json cfg{{"command", "t"}};

    ConvergenceTable table;
    table.rows.push_back({1, 0.5, 0.6, 0.1});
    std::ostringstream os1;
    table.write_csv(os1, cfg);
    CHECK(header_line(os1.str()) == "j,kernel,limit,abs_err");

    std::ostringstream os2;
    write_report_csv(os2, {ConvergenceReportRow{}}, cfg);
    CHECK(header_line(os2.str()) ==
          "j,delta,kernel,kernel_err_abs,vol,vol_sigma,F,F_sigma,radial_dist");

    std::ostringstream os3;
    write_segment_csv(os3, segment_scan(0.25, {0.0, 0.5}), cfg);
    CHECK(header_line(os3.str()) == "mu,p,kernel,vol_lower,vol_upper,F_lower,F_upper");
    // p = 0 row has empty lower fields
    CHECK(os3.str().find(",,") != std::string::npos);

    BoundaryScanRow exact_row;
    exact_row.dist = 0.5;
    exact_row.F = 1.0;
    exact_row.F_err = 0.0;
    std::ostringstream os4;
    write_boundary_csv(os4, {exact_row}, cfg);
    CHECK(header_line(os4.str()) == "dist,F,F_err");

    BoundaryScanRow bracket_row;
    bracket_row.dist = 0.5;
    bracket_row.F_lower = 0.9;
    bracket_row.F_upper = 1.1;
    std::ostringstream os5;
    write_boundary_csv(os5, {bracket_row}, cfg);
    CHECK(header_line(os5.str()) == "dist,F_lower,F_upper");
}

TEST_SUITE_END();
