// qwalk: quantum-walk state-transfer analysis from the command line.
//
//   qwalk analyze <file|-> [--json out.json]
//   qwalk pair <file|-> <u> <v>
//   qwalk scan <file|-> [--jobs N]
//
// Exit codes: 0 success, 1 empty input, 2 usage/parse error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/report.hpp"

namespace {

enum Exit { kOk = 0, kEmpty = 1, kUsage = 2, kInternal = 3 };

struct EmptyInput {};

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw qwalk::InvalidArgument("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

qwalk::Graph load_graph(const std::string& path) {
    const std::string text = read_all(path);
    if (blank(text)) throw EmptyInput{};
    return qwalk::parse_graph(text);
}

void add_shared_flags(CLI::App* cmd, qwalk::AnalysisConfig& c) {
    cmd->add_option("--t-max", c.t_max, "search horizon")->capture_default_str();
    cmd->add_option("--threshold", c.threshold, "fidelity declaring PST")->capture_default_str();
    cmd->add_option("--tol-group", c.grouping_tolerance,
                    "eigenvalue grouping tolerance (0: size-scaled default)")
        ->capture_default_str();
    cmd->add_option("--tol-support", c.support_tolerance, "eigenvalue support tolerance")
        ->capture_default_str();
    cmd->add_option("--den-bound", c.denominator_bound, "ratio-condition denominator bound")
        ->capture_default_str();
    cmd->add_option("--exact-cap", c.exact_cap, "largest order for exact arithmetic")
        ->capture_default_str();
    cmd->add_option("--bf-cap", c.brute_force_cap, "largest order for automorphism brute force")
        ->capture_default_str();
}

void emit(const qwalk::report::Json& doc, const std::string& path) {
    const std::string text = qwalk::report::dump(doc) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw qwalk::InvalidArgument("cannot write " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-time quantum walk state-transfer analysis"};
    app.require_subcommand(1);

    qwalk::AnalysisConfig config;
    std::string input, json_out;
    std::size_t u = 0, v = 0;

    auto* analyze = app.add_subcommand("analyze", "spectral and per-vertex report for one graph");
    analyze->add_option("input", input, "graph6 or JSON edge-list file, '-' for stdin")->required();
    analyze->add_option("--json", json_out, "write the report here instead of stdout");
    add_shared_flags(analyze, config);

    auto* pair = app.add_subcommand("pair", "necessary conditions and PST search for a vertex pair");
    pair->add_option("input", input, "graph6 or JSON edge-list file, '-' for stdin")->required();
    pair->add_option("u", u)->required();
    pair->add_option("v", v)->required();
    add_shared_flags(pair, config);

    auto* scan = app.add_subcommand("scan", "JSON-lines report for a newline-delimited graph6 catalog");
    scan->add_option("input", input, "catalog file, '-' for stdin")->required();
    scan->add_option("--jobs", config.jobs, "worker threads")
        ->envname("QWALK_JOBS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_shared_flags(scan, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        config.validate();
        if (*analyze) {
            emit(qwalk::report::analyze(load_graph(input), config), json_out);
        } else if (*pair) {
            const qwalk::Graph g = load_graph(input);
            if (u >= g.order() || v >= g.order() || u == v) {
                std::cerr << "qwalk: pair needs two distinct vertices below " << g.order() << "\n";
                return kUsage;
            }
            emit(qwalk::report::pair(g, static_cast<qwalk::Vertex>(u), static_cast<qwalk::Vertex>(v),
                                     config),
                 "");
        } else {
            qwalk::report::ScanStats stats;
            if (input == "-") {
                stats = qwalk::report::scan(std::cin, std::cout, config);
            } else {
                std::ifstream f(input, std::ios::binary);
                if (!f) throw qwalk::InvalidArgument("cannot open " + input);
                stats = qwalk::report::scan(f, std::cout, config);
            }
            if (stats.graphs == 0) {
                std::cerr << "qwalk: no graph processed\n";
                return kEmpty;
            }
        }
    } catch (const EmptyInput&) {
        std::cerr << "qwalk: empty input\n";
        return kEmpty;
    } catch (const qwalk::InvariantViolation& e) {
        std::cerr << "qwalk: invariant violation: " << e.what() << "\n";
        return kInternal;
    } catch (const qwalk::ParseError& e) {
        std::cerr << "qwalk: parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const qwalk::InvalidArgument& e) {
        std::cerr << "qwalk: " << e.what() << "\n";
        return kUsage;
    } catch (const qwalk::CapExceeded& e) {
        std::cerr << "qwalk: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "qwalk: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
