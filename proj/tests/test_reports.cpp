#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "schubert/cli.hpp"
#include "schubert/core.hpp"
#include "schubert/diagram.hpp"
#include "schubert/io.hpp"
#include "schubert/semistable.hpp"
#include "schubert/survey.hpp"

using namespace schubert;

namespace {

ColumnTuple tup(std::vector<int> entries, int n) { return ColumnTuple(std::move(entries), n); }

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("diagram rendering") {
    const DiagramRendering r3 = render(PartitionShape({4, 5, 5, 5}, 9));
    CHECK(r3.latex == "\\yng(5,5,5,4)");
    CHECK_FALSE(r3.filled.has_value());

    const DiagramRendering zero = render(PartitionShape({0, 0, 0}, 7));
    CHECK(zero.ascii.empty());
    CHECK(zero.latex.empty());

    const DiagramRendering staircase = render(PartitionShape({2, 3, 4, 5}, 9));
    CHECK(staircase.ascii ==
          "[ ][ ][ ][ ][ ]\n"
          "[ ][ ][ ][ ]\n"
          "[ ][ ][ ]\n"
          "[ ][ ]\n");
    CHECK(staircase.latex == "\\yng(5,4,3,2)");
}

TEST_CASE("diagram filling labels rows with consecutive reflections") {
    const DiagramRendering filled =
        render(PartitionShape({2, 3, 4, 5}, 9), {.with_filling = true});
    REQUIRE(filled.filled.has_value());
    const auto& grid = *filled.filled;
    REQUIRE(grid.size() == 4);
    CHECK(grid[0] == std::vector<std::string>{"s1", "s2"});
    CHECK(grid[1] == std::vector<std::string>{"s2", "s3", "s4"});
    CHECK(grid[2] == std::vector<std::string>{"s3", "s4", "s5", "s6"});
    CHECK(grid[3] == std::vector<std::string>{"s4", "s5", "s6", "s7", "s8"});
}

TEST_CASE("survey of G(4,9)") {
    const GrassmannianContext ctx = make_context(4, 9);
    const std::vector<SurveyRow> rows = survey(ctx);
    CHECK(rows.size() == 14);

    // row count matches an independent enumeration of the dominance interval
    CHECK(rows.size() == enumerate_interval(minimal_semistable(ctx), top_tuple(ctx)).size());

    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].w < rows[i].w);

    for (const SurveyRow& row : rows) {
        CHECK(row.component_count == static_cast<int>(row.components.size()));
        if (row.w == tup({3, 5, 8, 9}, 9)) CHECK(row.verdict == Verdict::smooth);
        if (row.w == tup({5, 7, 8, 9}, 9)) CHECK(row.verdict == Verdict::not_smooth);
        CHECK(row.verdict != Verdict::no_semistable_points);
    }
}

TEST_CASE("survey of G(1,n) has a single smooth row") {
    const std::vector<SurveyRow> rows = survey(make_context(1, 5));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].w == tup({5}, 5));
    CHECK(rows[0].verdict == Verdict::smooth);
    CHECK(rows[0].component_count == 0);
}

TEST_CASE("tuple parsing") {
    CHECK(parse_tuple("3,5,8,9", 9) == tup({3, 5, 8, 9}, 9));
    CHECK(parse_tuple("7", 9) == tup({7}, 9));
    CHECK_THROWS_AS(parse_tuple("9,8,7,5", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("1,,3", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("a,b", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("3,5x", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("", 9), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("3,5,8,10", 9), std::invalid_argument);
}

TEST_CASE("tuple and word formatting") {
    CHECK(format_tuple(tup({3, 5, 8, 9}, 9)) == "3,5,8,9");
    CHECK(format_tuple_pretty(tup({3, 5, 8, 9}, 9)) == "(3,5,8,9)");
    CHECK(format_word(ReducedWord{{2, 1, 4}}) == "s2 s1 s4");
    CHECK(format_word(ReducedWord{}) == "e");
}

TEST_CASE("analyze reports round trip through JSON") {
    const GrassmannianContext ctx = make_context(4, 9);
    for (const char* text : {"5,7,8,9", "3,5,8,9", "2,3,8,9", "6,7,8,9"}) {
        const SmoothnessReport report = analyze(parse_tuple(text, 9), ctx);
        const nlohmann::json j = report_to_json(report);
        const SmoothnessReport parsed = report_from_json(j);
        CHECK(parsed.w == report.w);
        CHECK(parsed.minimal == report.minimal);
        CHECK(parsed.semistable_nonempty == report.semistable_nonempty);
        CHECK(parsed.verdict == report.verdict);
        CHECK(parsed.components == report.components);
        CHECK(parsed.component_criterion.holds == report.component_criterion.holds);
        CHECK(parsed.component_criterion.dominating_components ==
              report.component_criterion.dominating_components);
        CHECK(parsed.run_criterion.holds == report.run_criterion.holds);
        CHECK(parsed.run_criterion.violating_rows == report.run_criterion.violating_rows);
    }
}

TEST_CASE("survey CSV") {
    const GrassmannianContext ctx = make_context(4, 9);
    const std::string csv = survey_to_csv(survey(ctx));
    CHECK(count_lines(csv) == 15);  // header plus one line per row
    CHECK(csv.starts_with("w,verdict,component_count,components\n"));
    CHECK(csv.find("\"5,7,8,9\",not_smooth,1,\"4,5,8,9\"") != std::string::npos);
    CHECK(csv.find("\"3,5,8,9\",smooth,2,\"2,3,8,9;3,4,5,9\"") != std::string::npos);
}

TEST_CASE("cli: minimal") {
    const CliResult res = run_cli({"minimal", "--r", "4", "--n", "9"});
    CHECK(res.status == 0);
    CHECK(res.out.find("(3,5,7,9)") != std::string::npos);
    CHECK(res.out.find("s2 s1 s4 s3 s2 s6 s5 s4 s3 s8 s7 s6 s5 s4") != std::string::npos);
}

TEST_CASE("cli: analyze text verdicts") {
    const CliResult bad = run_cli({"analyze", "--r", "4", "--n", "9", "--w", "5,7,8,9"});
    CHECK(bad.status == 0);
    CHECK(bad.out.find("verdict: not_smooth") != std::string::npos);
    CHECK(bad.out.find("(4,5,8,9)") != std::string::npos);

    const CliResult good = run_cli({"analyze", "--r", "4", "--n", "9", "--w", "3,5,8,9"});
    CHECK(good.status == 0);
    CHECK(good.out.find("verdict: smooth") != std::string::npos);

    const CliResult none = run_cli({"analyze", "--r", "4", "--n", "9", "--w", "2,3,8,9"});
    CHECK(none.status == 0);
    CHECK(none.out.find("verdict: no_semistable_points") != std::string::npos);
}

TEST_CASE("cli: analyze validation failures exit 1") {
    const CliResult decreasing = run_cli({"analyze", "--r", "4", "--n", "9", "--w", "9,8,7,5"});
    CHECK(decreasing.status == 1);
    CHECK_FALSE(decreasing.err.empty());

    const CliResult noncoprime = run_cli({"analyze", "--r", "2", "--n", "4", "--w", "2,4"});
    CHECK(noncoprime.status == 1);

    const CliResult wrong_r = run_cli({"analyze", "--r", "3", "--n", "9", "--w", "3,5,8,9"});
    CHECK(wrong_r.status == 1);

    const CliResult missing = run_cli({"analyze", "--r", "4", "--n", "9"});
    CHECK(missing.status == 1);

    const CliResult nonsub = run_cli({"frobnicate"});
    CHECK(nonsub.status == 1);
}

TEST_CASE("cli: analyze json output parses back to the same report") {
    const CliResult res =
        run_cli({"analyze", "--r", "4", "--n", "9", "--w", "5,7,8,9", "--format", "json"});
    CHECK(res.status == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("r") == 4);
    CHECK(j.at("n") == 9);
    CHECK(j.at("verdict") == "not_smooth");
    CHECK(j.at("w") == nlohmann::json::array({5, 7, 8, 9}));

    const SmoothnessReport direct = analyze(tup({5, 7, 8, 9}, 9), make_context(4, 9));
    const SmoothnessReport parsed = report_from_json(j);
    CHECK(parsed.w == direct.w);
    CHECK(parsed.verdict == direct.verdict);
    CHECK(parsed.components == direct.components);
}

TEST_CASE("cli: survey emits one line per dominating tuple") {
    const CliResult csv = run_cli({"survey", "--r", "4", "--n", "9"});
    CHECK(csv.status == 0);
    CHECK(count_lines(csv.out) == 15);  // header + 14 rows

    const CliResult json = run_cli({"survey", "--r", "4", "--n", "9", "--format", "json"});
    CHECK(json.status == 0);
    CHECK(nlohmann::json::parse(json.out).at("rows").size() == 14);

    CHECK(run_cli({"survey", "--r", "2", "--n", "4"}).status == 1);
}

TEST_CASE("cli: diagram variants") {
    const CliResult latex =
        run_cli({"diagram", "--r", "4", "--n", "9", "--w", "5,7,8,9", "--latex"});
    CHECK(latex.status == 0);
    CHECK(latex.out == "\\yng(5,5,5,4)\n");

    const CliResult filled =
        run_cli({"diagram", "--r", "4", "--n", "9", "--w", "3,5,7,9", "--filled"});
    CHECK(filled.status == 0);
    CHECK(filled.out ==
          "s4 s5 s6 s7 s8\n"
          "s3 s4 s5 s6\n"
          "s2 s3 s4\n"
          "s1 s2\n");

    // no verdict involved, so non-coprime pairs are fine
    const CliResult noncoprime = run_cli({"diagram", "--r", "2", "--n", "4", "--w", "2,4"});
    CHECK(noncoprime.status == 0);
    CHECK(noncoprime.out ==
          "[ ][ ]\n"
          "[ ]\n");

    const CliResult both =
        run_cli({"diagram", "--r", "4", "--n", "9", "--w", "3,5,7,9", "--latex", "--filled"});
    CHECK(both.status == 1);
}

TEST_CASE("cli: oracle agreement") {
    const CliResult all = run_cli({"oracle", "--r", "2", "--n", "5"});
    CHECK(all.status == 0);
    CHECK(all.out.find("all checks passed") != std::string::npos);

    const CliResult single =
        run_cli({"oracle", "--r", "4", "--n", "9", "--w", "3,5,7,9", "--check", "singular"});
    CHECK(single.status == 0);
    CHECK(single.out.find("1/1") != std::string::npos);

    // singular-locus checks are pure combinatorics, fine without coprimality
    const CliResult noncoprime = run_cli({"oracle", "--r", "2", "--n", "4", "--check", "singular"});
    CHECK(noncoprime.status == 0);

    const CliResult refused = run_cli({"oracle", "--r", "2", "--n", "4"});
    CHECK(refused.status == 1);
}

TEST_CASE("cli: enumerate") {
    const CliResult full = run_cli({"enumerate", "--r", "2", "--n", "4"});
    CHECK(full.status == 0);
    CHECK(count_lines(full.out) == 6);
    CHECK(full.out.starts_with("1,2\n1,3\n"));

    const CliResult interval = run_cli({"enumerate", "--r", "4", "--n", "9", "--min", "3,5,7,9"});
    CHECK(interval.status == 0);
    CHECK(count_lines(interval.out) == 14);
}

TEST_CASE("cli: help exits zero") {
    CHECK(run_cli({"--help"}).status == 0);
    CHECK(run_cli({}).status == 1);
}
