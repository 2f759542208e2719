#include <doctest.h>

#include <sstream>

#include "gcf/cli.hpp"
#include "gcf/svg.hpp"
#include "gcf/textio.hpp"
#include "test_helpers.hpp"

using namespace gcf;
using gcf::testing::mat;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix text round trip and parse errors") {
    IntMatrix2 M = parse_matrix("7 18; 5 13");
    CHECK(M == mat(7, 18, 5, 13));
    CHECK(M.str() == "7 18; 5 13");
    CHECK(parse_matrix(" -1  0 ;  0  -1 ") == mat(-1, 0, 0, -1));
    CHECK_THROWS_AS(parse_matrix("1 2 3 4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("1 2; 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("1 2; 3 x"), std::invalid_argument);
    // JSON round trip keeps rows.
    CHECK(matrix_from_json(matrix_to_json(M)) == M);
}

TEST_CASE("period subcommand") {
    auto r = run({"period", "7 18; 5 13"});
    CHECK(r.code == 0);
    CHECK(r.out == "(2,1,1,3)\n");
    auto rj = run({"period", "7 18; 5 13", "--format", "json"});
    CHECK(rj.code == 0);
    CHECK(rj.out.find("\"canonical\"") != std::string::npos);
    // Non-hyperbolic input is a precondition violation: exit 3.
    auto bad = run({"period", "1 1; 0 1"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("error") != std::string::npos);
    // Garbage input: exit 3 (parse of the payload), missing args: exit 2.
    CHECK(run({"period", "nonsense"}).code == 3);
    CHECK(run({"period"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("construct subcommand") {
    auto r = run({"construct", "--prefix", "2,1,1", "--lambda", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 7; 5 18\n");
    auto series = run({"construct", "--lambda", "5"});
    CHECK(series.code == 0);
    CHECK(series.out == "0 -1; 1 6\n");
    auto neg = run({"construct", "--prefix", "2,1,1", "--lambda", "-3", "--format", "json"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("(1,1,2,1)") != std::string::npos);
    CHECK(run({"construct", "--prefix", "2,1", "--lambda", "3"}).code == 3);
}

TEST_CASE("gk subcommand prints six decimals") {
    auto r = run({"gk", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.415037\n");
    CHECK(run({"gk", "2"}).out == "0.169925\n");
    CHECK(run({"gk", "1,2"}).code == 3);  // even length
}

TEST_CASE("reduce subcommand with and without trace") {
    auto r = run({"reduce", "7 18; 5 13"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 7; 5 18") != std::string::npos);
    auto rt = run({"reduce", "7 18; 5 13", "--trace"});
    CHECK(rt.code == 0);
    CHECK(rt.out.find("\"steps\"") != std::string::npos);
    CHECK(rt.out.find("\"S2\"") != std::string::npos);
}

TEST_CASE("sail subcommand emits four octants") {
    auto r = run({"sail", "7 18; 5 13"});
    CHECK(r.code == 0);
    for (int oct = 0; oct < 4; ++oct)
        CHECK(r.out.find("\"octant\": " + std::to_string(oct)) != std::string::npos);
}

TEST_CASE("census subcommand CSV") {
    auto r = run({"census", "--n", "30", "--trace-cap", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("period,trace,count,N") == 0);
    CHECK(r.out.find("\"(1,1)\",3,") != std::string::npos);
    auto r2 = run({"census", "--n", "30", "--trace-cap", "4", "--format", "csv", "--workers",
                   "3"});
    CHECK(r2.out == r.out);
    auto ref = run({"census", "--n", "30", "--trace-cap", "4", "--format", "csv",
                    "--reference"});
    CHECK(ref.out == r.out);
}

TEST_CASE("mincomplexity subcommand") {
    auto r = run({"mincomplexity", "1,4,5,4,1,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("min numerator 135") != std::string::npos);
    CHECK(r.out.find("[1:4;5;4;1]") != std::string::npos);
}

TEST_CASE("ratio subcommand") {
    auto r = run({"ratio", "--p1", "1,2", "--p2", "2,1", "--n", "30,60"});
    CHECK(r.code == 0);
    CHECK(r.out.find("N,count1,count2,empirical_ratio,gk_ratio") == 0);
    CHECK(r.out.find("2.442475") != std::string::npos);
}

TEST_CASE("render subcommand and SVG stability") {
    auto r1 = run({"render", "7 18; 5 13"});
    auto r2 = run({"render", "7 18; 5 13"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("<svg") == 0);
    CHECK(r1.out.find("</svg>") != std::string::npos);
    // Direct library call matches the CLI output.
    CHECK(render_svg(mat(7, 18, 5, 13)) == r1.out);
    // Annotations: both black length digits and white sine digits appear.
    CHECK(r1.out.find("fill=\"#000000\">") != std::string::npos);
    CHECK(r1.out.find("fill=\"#ffffff\"") != std::string::npos);
    // Eigenlines are drawn.
    CHECK(r1.out.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("period output for all frequency-table operators matches the table") {
    // (periods as printed; operators in the table's column-style notation)
    struct Row {
        const char* cols;
        const char* period;
    };
    const Row rows[] = {
        {"0 1; -1 3", "(1,1)"},    {"0 1; -1 4", "(1,2)"},    {"1 2; 1 3", "(2,1)"},
        {"0 1; -1 5", "(1,3)"},    {"1 3; 1 4", "(3,1)"},     {"0 1; -1 6", "(1,4)"},
        {"1 4; 1 5", "(4,1)"},     {"1 2; 2 5", "(2,2)"},     {"0 1; -1 7", "(1,5)"},
        {"1 5; 1 6", "(5,1)"},     {"2 3; 3 5", "(1,1,1,1)"}, {"0 1; -1 8", "(1,6)"},
        {"1 6; 1 7", "(6,1)"},     {"1 2; 3 7", "(2,3)"},     {"1 3; 2 7", "(3,2)"},
        {"0 1; -1 9", "(1,7)"},    {"1 7; 1 8", "(7,1)"},     {"0 1; -1 10", "(1,8)"},
        {"1 8; 1 9", "(8,1)"},     {"1 2; 4 9", "(2,4)"},     {"1 4; 2 9", "(4,2)"},
        {"2 3; 5 8", "(1,1,1,2)"}, {"2 5; 3 8", "(2,1,1,1)"}, {"3 4; 5 7", "(1,2,1,1)"},
        {"3 5; 4 7", "(1,1,2,1)"},
    };
    for (const auto& row : rows) {
        // Transpose the column-style text into the row-major CLI format.
        IntMatrix2 cols = parse_matrix(row.cols);
        IntMatrix2 M{cols.m11, cols.m21, cols.m12, cols.m22};
        auto r = run({"period", M.str()});
        CHECK(r.code == 0);
        CHECK(r.out == std::string(row.period) + "\n");
    }
}
