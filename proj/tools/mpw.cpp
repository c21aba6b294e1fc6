// Command-line front end: construct extremal triangulations, measure Wiener
// indices, enumerate isomorphism classes and run the verification suites.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mpw/enumerate.hpp"
#include "mpw/extremal.hpp"
#include "mpw/graph.hpp"
#include "mpw/planar_code.hpp"
#include "mpw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int default_cap() {
    if (const char* env = std::getenv("MPW_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("MPW_CAP", "MPW_CAP must be an integer");
        }
    }
    return mpw::kDefaultEnumerationCap;
}

void emit_graph(const mpw::Embedding& e, const std::string& format) {
    if (format == "planar_code") {
        mpw::write_planar_code(std::cout, {&e, 1});
    } else {
        mpw::write_edge_list(std::cout, e.to_graph());
    }
}

int run_wiener(const std::string& path, const std::string& format) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path, std::ios::binary);
        if (!file) {
            std::cerr << "mpw: cannot open " << path << '\n';
            return kExitUsage;
        }
        in = &file;
    }
    if (format == "planar_code") {
        mpw::PlanarCodeReader reader(*in);
        while (auto e = reader.next()) std::cout << mpw::wiener_index(*e) << '\n';
    } else {
        std::cout << mpw::wiener_index(mpw::read_edge_list(*in)) << '\n';
    }
    return kExitOk;
}

int emit_reports(const std::vector<mpw::VerificationReport>& reports, const std::string& report_path) {
    if (report_path.empty()) {
        mpw::write_reports(std::cerr, reports);
    } else {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "mpw: cannot open report path " << report_path << '\n';
            return kExitUsage;
        }
        mpw::write_reports(out, reports);
    }
    return mpw::exit_status(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener-index toolkit for maximal planar graphs"};
    app.require_subcommand(1);

    std::string format = "planar_code";
    int jobs = 0;
    int cap = 0;
    std::string report_path;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "graph stream format")
            ->check(CLI::IsMember({"planar_code", "edgelist"}))
            ->capture_default_str();
    };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads (0 = all cores, 1 = serial reference run)");
        cmd->add_option("--cap", cap, "enumeration cap (overrides MPW_CAP and the built-in default)");
    };
    auto add_report = [&](CLI::App* cmd) {
        cmd->add_option("--report", report_path,
                        "write the report here instead of standard error");
    };

    int n = 0;
    long long n_max = 0;
    bool count_only = false;
    std::string input_path;

    auto* tn = app.add_subcommand("tn", "emit the Apollonian extremal triangulation T_n");
    tn->add_option("n", n, "vertex count")->required();
    add_format(tn);

    auto* mn = app.add_subcommand("min", "emit a diameter-2 Wiener-minimizing triangulation");
    mn->add_option("n", n, "vertex count")->required();
    add_format(mn);

    auto* wi = app.add_subcommand("wiener", "print the Wiener index of each input graph");
    wi->add_option("file", input_path, "input path, or - for standard input")->required();
    add_format(wi);

    auto* en = app.add_subcommand("enumerate", "stream all triangulation classes on n vertices");
    en->add_option("n", n, "vertex count")->required();
    en->add_flag("--count-only", count_only, "print the class count instead of graphs");
    add_workers(en);

    auto* ve = app.add_subcommand("verify", "run verification suites");
    ve->require_subcommand(1);
    auto* ve_ex = ve->add_subcommand("extremal", "maximum Wiener index and unique maximizer");
    ve_ex->add_option("n", n, "vertex count")->required();
    add_workers(ve_ex);
    add_report(ve_ex);
    auto* ve_min = ve->add_subcommand("min", "minimum Wiener index over all classes");
    ve_min->add_option("n", n, "vertex count")->required();
    add_workers(ve_min);
    add_report(ve_min);
    auto* ve_lem = ve->add_subcommand("lemmas", "cut-set cycle and status-bound checks");
    ve_lem->add_option("n", n, "vertex count")->required();
    add_workers(ve_lem);
    add_report(ve_lem);
    auto* ve_iq = ve->add_subcommand("inequalities", "exact integer per-case inequality grid");
    ve_iq->add_option("--n-max", n_max, "largest n in the grid")->required();
    add_report(ve_iq);

    auto* pr = app.add_subcommand("probe", "empirical probes");
    pr->require_subcommand(1);
    auto* pr_con = pr->add_subcommand("conjectures", "connectivity-restricted maxima vs conjectured bounds");
    pr_con->add_option("n", n, "vertex count")->required();
    add_workers(pr_con);
    add_report(pr_con);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        mpw::EnumerateOptions opt;
        opt.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
        opt.cap = cap > 0 ? cap : default_cap();

        if (tn->parsed()) {
            emit_graph(mpw::construct_tn(n), format);
            return kExitOk;
        }
        if (mn->parsed()) {
            emit_graph(mpw::construct_min_wiener(n), format);
            return kExitOk;
        }
        if (wi->parsed()) {
            return run_wiener(input_path, format);
        }
        if (en->parsed()) {
            auto set = mpw::enumerate_triangulations(n, opt);
            if (count_only) {
                std::cout << set.count() << '\n';
            } else {
                mpw::PlanarCodeWriter writer(std::cout);
                for (const auto& [code, emb] : set.classes) writer.write(emb);
            }
            return kExitOk;
        }
        if (ve_ex->parsed())
            return emit_reports({mpw::verify_extremal(n, opt)}, report_path);
        if (ve_min->parsed())
            return emit_reports({mpw::verify_min(n, opt)}, report_path);
        if (ve_lem->parsed()) {
            auto set = mpw::enumerate_triangulations(n, opt);
            return emit_reports({mpw::verify_cut_cycle_lemma(set), mpw::verify_status_bounds(set)},
                                report_path);
        }
        if (ve_iq->parsed())
            return emit_reports(mpw::verify_inequalities(n_max), report_path);
        if (pr_con->parsed())
            return emit_reports(mpw::probe_conjectures(n, opt), report_path);
    } catch (const std::exception& ex) {
        std::cerr << "mpw: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
