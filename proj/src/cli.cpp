#include "schubert/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "schubert/core.hpp"
#include "schubert/diagram.hpp"
#include "schubert/io.hpp"
#include "schubert/semistable.hpp"
#include "schubert/singular.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/survey.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cli {

namespace {

ColumnTuple parse_tuple_checked(const std::string& text, const GrassmannianContext& ctx) {
    ColumnTuple w = parse_tuple(text, ctx.n);
    if (w.r() != ctx.r) {
        throw std::invalid_argument("tuple " + format_tuple_pretty(w) + " has " +
                                    std::to_string(w.r()) + " entries, expected r=" +
                                    std::to_string(ctx.r));
    }
    return w;
}

std::string join_tuples(const std::vector<ColumnTuple>& tuples) {
    if (tuples.empty()) return "none";
    std::string s;
    for (const ColumnTuple& v : tuples) {
        if (!s.empty()) s += " ";
        s += format_tuple_pretty(v);
    }
    return s;
}

void print_report_text(std::ostream& out, const SmoothnessReport& report) {
    out << "G(" << report.w.r() << "," << report.w.n() << ")  w = "
        << format_tuple_pretty(report.w) << "\n";
    out << "minimal semistable tuple: " << format_tuple_pretty(report.minimal) << "\n";
    out << "semistable points: " << (report.semistable_nonempty ? "yes" : "no") << "\n";
    out << "singular components: " << join_tuples(report.components) << "\n";
    out << "components dominating the minimal tuple: "
        << join_tuples(report.component_criterion.dominating_components) << "\n";
    out << "rows violating a_j >= b_{j-1}+1: ";
    if (report.run_criterion.violating_rows.empty()) {
        out << "none\n";
    } else {
        bool first = true;
        for (int j : report.run_criterion.violating_rows) {
            out << (first ? "" : " ") << "j=" << j;
            first = false;
        }
        out << "\n";
    }
    out << "verdict: " << to_string(report.verdict) << "\n";
}

int check_singular_agreement(std::ostream& out, std::ostream& err,
                             const std::vector<ColumnTuple>& tuples) {
    int mismatches = 0;
    for (const ColumnTuple& w : tuples) {
        const auto hooks = singular_components(w).components;
        const auto rows = singular_components_via_runs(w).components;
        const std::set<ColumnTuple> by_hooks(hooks.begin(), hooks.end());
        const std::set<ColumnTuple> by_rows(rows.begin(), rows.end());
        const std::set<ColumnTuple> by_orbit = singular_components_oracle(w);
        if (by_hooks != by_rows || by_hooks != by_orbit) {
            ++mismatches;
            err << "singular locus mismatch at w = " << format_tuple_pretty(w) << "\n";
        }
    }
    out << "singular locus: " << (static_cast<int>(tuples.size()) - mismatches) << "/"
        << tuples.size() << " tuples agree across hook removal, row formula, and orbit oracle\n";
    return mismatches;
}

int check_semistable_agreement(std::ostream& out, std::ostream& err,
                               const GrassmannianContext& ctx,
                               const std::vector<ColumnTuple>& tuples) {
    int mismatches = 0;
    for (const ColumnTuple& w : tuples) {
        const bool by_test = is_semistable_nonempty(w, ctx);
        const bool by_witness = semistable_witness(w, ctx, 1).has_value();
        if (by_test != by_witness) {
            ++mismatches;
            err << "semistability mismatch at w = " << format_tuple_pretty(w) << "\n";
        }
    }
    out << "semistability: " << (static_cast<int>(tuples.size()) - mismatches) << "/"
        << tuples.size() << " tuples agree between degree-1 witness search and the dominance test\n";
    return mismatches;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Torus GIT quotients of Schubert varieties in the Grassmannian G(r,n):\n"
                 "decides smoothness of the quotient by exact combinatorial criteria.",
                 "gitq"};
    app.require_subcommand(1);

    int status = 0;

    struct {
        int r = 0, n = 0;
    } minimal_opts;
    auto* cmd_minimal =
        app.add_subcommand("minimal", "Minimal tuple whose Schubert variety is semistable");
    cmd_minimal->add_option("--r", minimal_opts.r, "subspace dimension r")->required();
    cmd_minimal->add_option("--n", minimal_opts.n, "ambient dimension n")->required();
    cmd_minimal->callback([&] {
        const GrassmannianContext ctx = make_context(minimal_opts.r, minimal_opts.n);
        const ColumnTuple w = minimal_semistable(ctx);
        out << "w_{" << ctx.r << "," << ctx.n << "} = " << format_tuple_pretty(w) << "\n";
        out << "reduced word: " << format_word(canonical_reduced_word(w)) << "\n";
    });

    struct {
        int r = 0, n = 0;
        std::string w, format = "text";
    } analyze_opts;
    auto* cmd_analyze = app.add_subcommand("analyze", "Smoothness verdict for one tuple");
    cmd_analyze->add_option("--r", analyze_opts.r, "subspace dimension r")->required();
    cmd_analyze->add_option("--n", analyze_opts.n, "ambient dimension n")->required();
    cmd_analyze->add_option("--w", analyze_opts.w, "column tuple, e.g. 3,5,8,9")->required();
    cmd_analyze->add_option("--format", analyze_opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_analyze->callback([&] {
        const GrassmannianContext ctx = make_context(analyze_opts.r, analyze_opts.n);
        const ColumnTuple w = parse_tuple_checked(analyze_opts.w, ctx);
        const SmoothnessReport report = analyze(w, ctx);
        if (analyze_opts.format == "json") {
            out << report_to_json(report).dump(2) << "\n";
        } else {
            print_report_text(out, report);
        }
    });

    struct {
        int r = 0, n = 0;
        std::string format = "csv";
    } survey_opts;
    auto* cmd_survey =
        app.add_subcommand("survey", "Verdicts for every tuple dominating the minimal one");
    cmd_survey->add_option("--r", survey_opts.r, "subspace dimension r")->required();
    cmd_survey->add_option("--n", survey_opts.n, "ambient dimension n")->required();
    cmd_survey->add_option("--format", survey_opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_survey->callback([&] {
        const GrassmannianContext ctx = make_context(survey_opts.r, survey_opts.n);
        const std::vector<SurveyRow> rows = survey(ctx);
        if (survey_opts.format == "json") {
            out << survey_to_json(ctx, rows).dump(2) << "\n";
        } else {
            out << survey_to_csv(rows);
        }
    });

    struct {
        int r = 0, n = 0;
        std::string w;
        bool latex = false, filled = false;
    } diagram_opts;
    auto* cmd_diagram = app.add_subcommand("diagram", "Young diagram of a tuple");
    cmd_diagram->add_option("--r", diagram_opts.r, "subspace dimension r")->required();
    cmd_diagram->add_option("--n", diagram_opts.n, "ambient dimension n")->required();
    cmd_diagram->add_option("--w", diagram_opts.w, "column tuple")->required();
    auto* latex_flag = cmd_diagram->add_flag("--latex", diagram_opts.latex, "emit \\yng(...)");
    cmd_diagram->add_flag("--filled", diagram_opts.filled, "label boxes with simple reflections")
        ->excludes(latex_flag);
    cmd_diagram->callback([&] {
        const GrassmannianContext ctx = make_context(diagram_opts.r, diagram_opts.n);
        const ColumnTuple w = parse_tuple_checked(diagram_opts.w, ctx);
        const PartitionShape shape = to_partition(w);
        if (diagram_opts.latex) {
            const DiagramRendering rendering = render(shape);
            if (!rendering.latex.empty()) out << rendering.latex << "\n";
        } else if (diagram_opts.filled) {
            const DiagramRendering rendering = render(shape, {.with_filling = true});
            for (int i = shape.r(); i >= 1; --i) {
                const auto& row = (*rendering.filled)[static_cast<std::size_t>(i - 1)];
                if (row.empty()) continue;
                for (std::size_t b = 0; b < row.size(); ++b) {
                    out << (b > 0 ? " " : "") << row[b];
                }
                out << "\n";
            }
        } else {
            out << render(shape).ascii;
        }
    });

    struct {
        int r = 0, n = 0;
        std::string w, check = "all";
    } oracle_opts;
    auto* cmd_oracle =
        app.add_subcommand("oracle", "Cross-check the independent singular/semistable routes");
    cmd_oracle->add_option("--r", oracle_opts.r, "subspace dimension r")->required();
    cmd_oracle->add_option("--n", oracle_opts.n, "ambient dimension n")->required();
    cmd_oracle->add_option("--w", oracle_opts.w, "restrict to one tuple");
    cmd_oracle->add_option("--check", oracle_opts.check, "which oracles to run")
        ->check(CLI::IsMember({"singular", "semistable", "all"}));
    cmd_oracle->callback([&] {
        const GrassmannianContext ctx = make_context(oracle_opts.r, oracle_opts.n);
        const bool want_semistable = oracle_opts.check != "singular";
        if (want_semistable && !ctx.coprime) {
            throw std::invalid_argument(
                "semistability oracles need coprime r and n; use --check singular");
        }
        std::vector<ColumnTuple> tuples;
        if (oracle_opts.w.empty()) {
            tuples = all_tuples(ctx);
        } else {
            tuples.push_back(parse_tuple_checked(oracle_opts.w, ctx));
        }
        int mismatches = 0;
        if (oracle_opts.check != "semistable") {
            mismatches += check_singular_agreement(out, err, tuples);
        }
        if (want_semistable) {
            mismatches += check_semistable_agreement(out, err, ctx, tuples);
        }
        if (mismatches == 0) {
            out << "all checks passed\n";
        } else {
            out << mismatches << " disagreement(s) found\n";
            status = 2;
        }
    });

    struct {
        int r = 0, n = 0;
        std::string min, max;
    } enum_opts;
    auto* cmd_enum = app.add_subcommand("enumerate", "List an interval of I(r,n)");
    cmd_enum->add_option("--r", enum_opts.r, "subspace dimension r")->required();
    cmd_enum->add_option("--n", enum_opts.n, "ambient dimension n")->required();
    cmd_enum->add_option("--min", enum_opts.min, "lower bound tuple");
    cmd_enum->add_option("--max", enum_opts.max, "upper bound tuple");
    cmd_enum->callback([&] {
        const GrassmannianContext ctx = make_context(enum_opts.r, enum_opts.n);
        const ColumnTuple lo =
            enum_opts.min.empty() ? identity_tuple(ctx) : parse_tuple_checked(enum_opts.min, ctx);
        const ColumnTuple hi =
            enum_opts.max.empty() ? top_tuple(ctx) : parse_tuple_checked(enum_opts.max, ctx);
        for (const ColumnTuple& v : enumerate_interval(lo, hi)) {
            out << format_tuple(v) << "\n";
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const integrity_error& e) {
        err << "integrity error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace schubert::cli
