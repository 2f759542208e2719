#include "gcf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "gcf/census.hpp"
#include "gcf/census_kernel.hpp"
#include "gcf/gauss_kuzmin.hpp"
#include "gcf/period_words.hpp"
#include "gcf/svg.hpp"
#include "gcf/textio.hpp"

namespace gcf {

namespace {

int default_workers() {
    if (const char* env = std::getenv("GCF_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write output file: " + path);
    f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Periods of geometric continued fractions of hyperbolic SL(2,Z) operators.\n"
        "Matrices are row-major: \"m11 m12; m21 m22\" denotes rows (m11 m12), (m21 m22)."};
    app.require_subcommand(1);

    std::string matrix_text, format = "text", outfile;
    std::string prefix_text, p1_text, p2_text, pattern_text, nlist_text, checkpoint;
    long long lambda = 0, census_n = 0, bound = 0;
    long long trace_cap = 0;
    int workers = default_workers();
    bool with_trace = false, use_reference = false, table_box = false;

    auto* cmd_period = app.add_subcommand("period", "LLS period of a hyperbolic operator");
    cmd_period->add_option("matrix", matrix_text)->required();
    cmd_period->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_reduce = app.add_subcommand("reduce", "Gauss reduction to a reduced operator");
    cmd_reduce->add_option("matrix", matrix_text)->required();
    cmd_reduce->add_flag("--trace", with_trace, "include the full step-by-step trace");
    cmd_reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_construct =
        app.add_subcommand("construct", "operator with a prescribed LLS period");
    cmd_construct->add_option("--prefix", prefix_text,
                              "odd-length comma-separated prefix; omit for the a=0 series");
    cmd_construct->add_option("--lambda", lambda, "family parameter (nonzero)")->required();
    cmd_construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* cmd_sail = app.add_subcommand("sail", "four sail periods as JSON");
    cmd_sail->add_option("matrix", matrix_text)->required();

    auto* cmd_render = app.add_subcommand("render", "SVG picture of the sails");
    cmd_render->add_option("matrix", matrix_text)->required();
    cmd_render->add_option("--bound", bound, "half-size of the lattice window");
    cmd_render->add_option("-o,--output", outfile, "write to a file instead of stdout");

    auto* cmd_census = app.add_subcommand("census", "reduced-operator bucket counts up to N");
    cmd_census->add_option("--n", census_n)->required()->check(CLI::PositiveNumber);
    cmd_census->add_option("--workers", workers, "worker threads (default $GCF_WORKERS or 1)");
    cmd_census->add_option("--trace-cap", trace_cap, "skip |trace| above this");
    cmd_census->add_option("--checkpoint", checkpoint, "checkpoint file for long runs");
    cmd_census->add_flag("--reference", use_reference,
                         "use the arbitrary-precision reference path");
    cmd_census->add_flag("--table-box", table_box,
                         "bound m11, m22, m12 only, solved m21 unbounded "
                         "(the published table's box; needs --trace-cap)");
    cmd_census->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* cmd_min = app.add_subcommand("mincomplexity", "minimal complexity of a period");
    cmd_min->add_option("period", pattern_text)->required();

    auto* cmd_gk = app.add_subcommand("gk", "Gauss-Kuzmin probability of an odd pattern");
    cmd_gk->add_option("pattern", pattern_text)->required();

    auto* cmd_ratio = app.add_subcommand("ratio", "bucket-count ratios vs the GK prediction");
    cmd_ratio->add_option("--p1", p1_text)->required();
    cmd_ratio->add_option("--p2", p2_text)->required();
    cmd_ratio->add_option("--n", nlist_text, "comma-separated census bounds")->required();
    cmd_ratio->add_option("--workers", workers);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_period) {
            IntMatrix2 A = parse_matrix(matrix_text);
            LLSPeriod period = lls_period(A);
            auto canon = canonical_period(period.word);
            if (format == "json") {
                nlohmann::json j;
                j["matrix"] = matrix_to_json(A);
                auto arr = nlohmann::json::array();
                for (const auto& v : period.word) arr.push_back(v.get_str());
                j["period"] = arr;
                auto carr = nlohmann::json::array();
                for (const auto& v : canon.word) carr.push_back(v.get_str());
                j["canonical"] = carr;
                auto marr = nlohmann::json::array();
                for (const auto& v : canon.minimal_word) marr.push_back(v.get_str());
                j["minimal_word"] = marr;
                out << j.dump(2) << "\n";
            } else {
                out << period_to_string(period.word) << "\n";
            }
        } else if (*cmd_reduce) {
            ReductionTrace tr = reduce(parse_matrix(matrix_text));
            if (format == "json" || with_trace) {
                nlohmann::json j = trace_to_json(tr);
                if (!with_trace) j.erase("steps");
                out << j.dump(2) << "\n";
            } else {
                out << tr.final_state.str() << "\n";
                out << "sign " << (tr.sign > 0 ? "+1" : "-1") << ", T = " << tr.T.str() << "\n";
            }
        } else if (*cmd_construct) {
            if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
            IntMatrix2 M;
            std::string period_note;
            if (lambda > 0) {
                M = prefix_text.empty()
                        ? construct_series_i(Int(static_cast<long>(lambda)))
                        : construct_from_period(parse_int_list(prefix_text),
                                                Int(static_cast<long>(lambda)));
                period_note = period_to_string(period_of_reduced(M).word);
            } else {
                auto res = construct_negative_lambda(
                    prefix_text.empty() ? std::vector<Int>{} : parse_int_list(prefix_text),
                    Int(static_cast<long>(lambda)));
                M = res.op;
                period_note = period_to_string(res.period.word);
            }
            if (format == "json") {
                nlohmann::json j;
                j["operator"] = matrix_to_json(M);
                j["period"] = period_note;
                out << j.dump(2) << "\n";
            } else {
                out << M.str() << "\n";
            }
        } else if (*cmd_sail) {
            auto sails = four_sail_periods(parse_matrix(matrix_text));
            auto arr = nlohmann::json::array();
            for (const auto& s : sails) arr.push_back(sail_to_json(s));
            out << arr.dump(2) << "\n";
        } else if (*cmd_render) {
            emit(out, render_svg(parse_matrix(matrix_text), Int(static_cast<long>(bound))), outfile);
        } else if (*cmd_census) {
            CensusOptions opt;
            opt.workers = workers;
            opt.use_reference = use_reference;
            opt.table_box = table_box;
            opt.checkpoint_path = checkpoint;
            if (cmd_census->count("--trace-cap")) opt.trace_cap = trace_cap;
            CensusReport rep = census(census_n, opt);
            if (format == "csv") {
                out << rep.to_csv();
            } else if (format == "json") {
                out << rep.to_json() << "\n";
            } else {
                out << "N " << rep.N << ", matrices " << rep.matrices_scanned
                    << ", hyperbolic " << rep.hyperbolic_count << ", buckets "
                    << rep.counts.size() << "\n";
                for (const auto& [label, count] : rep.counts) {
                    std::vector<Int> w(label.begin(), label.end());
                    out << period_to_string(w) << " trace " << bucket_trace(label) << " count "
                        << count << "\n";
                }
            }
        } else if (*cmd_min) {
            auto word = parse_int_list(pattern_text);
            ComplexityResult res = min_complexity(word);
            out << "min numerator " << res.value.get_str() << "\n";
            for (const auto& [start, cf] : res.argmin_windows)
                out << "at offset " << start << ": " << cf_notation(cf) << "\n";
        } else if (*cmd_gk) {
            out << fmt6(gk_probability(parse_int_list(pattern_text))) << "\n";
        } else if (*cmd_ratio) {
            CensusOptions opt;
            opt.workers = workers;
            std::vector<std::int64_t> ns;
            for (const auto& v : parse_int_list(nlist_text)) ns.push_back(to_int64(v));
            auto rows = ratio_experiment(parse_int_list(p1_text), parse_int_list(p2_text), ns,
                                         opt);
            out << "N,count1,count2,empirical_ratio,gk_ratio\n";
            for (const auto& r : rows)
                out << r.N << ',' << r.count1 << ',' << r.count2 << ','
                    << fmt6(r.empirical_ratio) << ',' << fmt6(r.gk_ratio) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

}  // namespace gcf
