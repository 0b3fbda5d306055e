#include "venergy_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "venergy/charpoly.hpp"
#include "venergy/coulson.hpp"
#include "venergy/edge_list.hpp"
#include "venergy/spectral.hpp"
#include "venergy/suites.hpp"
#include "venergy/theorems.hpp"

namespace venergy::cli {

namespace {

struct Options {
    SuiteConfig suite;
    std::string out_path;
    std::string graph_file;
    std::string suite_name;
    std::size_t vertex = 0;
    std::vector<std::size_t> n_list;
};

constexpr const char* kColumns = R"(CSV columns:
  energy      graph_id,vertex,spectral,coulson,abs_diff   (last row: vertex=total)
  charpoly    two lines: coefficients c0..cn, then b_0 b_2 ... or not-bipartite
  verify      suite-specific header, one row per checked item
  sweep-star  n,role,vertex,energy,lower,upper,target,gap,status
Exit codes: 0 all checks pass, 1 violations found, 2 usage or input error.)";

int cmd_energy(const Options& opt, std::ostream& out) {
    const Graph g = read_edge_list_file(opt.graph_file);
    const auto spectrum = eigen_sym(g);
    const auto spectral = vertex_energies(spectrum);
    const auto coulson = coulson_vertex_energies(g, QuadratureConfig{opt.suite.quad_tol, 40});

    const std::string id = std::filesystem::path(opt.graph_file).stem().string();
    bool ok = true;
    double coulson_total = 0.0;
    out << "graph_id,vertex,spectral,coulson,abs_diff\n";
    for (Vertex x = 0; x < g.order(); ++x) {
        const double diff = std::abs(spectral[x] - coulson[x]);
        ok = ok && diff <= opt.suite.quad_tol * std::max(1.0, spectral[x]);
        coulson_total += coulson[x];
        out << id << ',' << x << ',' << format_real(spectral[x]) << ',' << format_real(coulson[x]) << ',' << format_real(diff)
            << '\n';
    }
    const double total = graph_energy(spectrum);
    out << id << ",total," << format_real(total) << ',' << format_real(coulson_total) << ','
        << format_real(std::abs(total - coulson_total)) << '\n';
    return ok ? kPass : kViolations;
}

int cmd_charpoly(const Options& opt, std::ostream& out) {
    const Graph g = read_edge_list_file(opt.graph_file);
    const IntPolynomial phi = char_poly(g);
    out << phi.to_string() << '\n';
    if (is_bipartite(g)) {
        out << b_coeffs_from_poly(phi, g.order()).to_string() << '\n';
    } else {
        out << "not-bipartite\n";
    }
    return kPass;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    if (!is_suite(opt.suite_name)) {
        err << "unknown suite '" << opt.suite_name << "'; valid suites:";
        for (const auto& name : suite_names()) {
            err << ' ' << name;
        }
        err << '\n';
        return kUsage;
    }
    const SuiteResult result = run_suite(opt.suite_name, opt.suite);
    result.write_csv(out);
    err << result.summary_line() << '\n';
    return result.passed() ? kPass : kViolations;
}

int cmd_sweep_star(const Options& opt, std::ostream& out, std::ostream& err) {
    const Graph tree = read_edge_list_file(opt.graph_file);
    if (!is_tree(tree)) {
        throw GraphError("sweep-star: input graph is not a tree");
    }
    if (opt.vertex >= tree.order()) {
        throw GraphError("sweep-star: vertex out of range");
    }
    const auto report = star_limit_sweep(tree, opt.vertex, opt.n_list, opt.suite.epsilon);
    const double eps = opt.suite.epsilon;

    out << "n,role,vertex,energy,lower,upper,target,gap,status\n";
    for (const auto& row : report.rows) {
        const bool center_ok = row.center >= row.center_lower - eps && row.center <= row.center_upper + eps;
        const bool leaf_ok = row.leaf >= row.leaf_lower - eps && row.leaf <= row.leaf_upper + eps;
        out << row.n << ",center," << opt.vertex << ',' << format_real(row.center) << ','
            << format_real(row.center_lower) << ',' << format_real(row.center_upper) << ",,,"
            << (center_ok ? "ok" : "VIOLATION") << '\n';
        out << row.n << ",leaf,," << format_real(row.leaf) << ',' << format_real(row.leaf_lower) << ','
            << format_real(row.leaf_upper) << ",,," << (leaf_ok ? "ok" : "VIOLATION") << '\n';
        for (std::size_t k = 0; k < report.others.size(); ++k) {
            out << row.n << ",tree," << report.others[k] << ',' << format_real(row.others[k]) << ",,,"
                << format_real(report.targets[k]) << ',' << format_real(row.gaps[k]) << ','
                << (row.gaps_ok ? "ok" : "VIOLATION") << '\n';
        }
    }
    err << "SWEEP rows=" << report.rows.size() << " violations=" << report.violations() << '\n';
    return report.passed() ? kPass : kViolations;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Vertex energy toolkit: spectral and Coulson-integral energies, characteristic "
                 "polynomials, and randomized checks of coalescence inequalities."};
    app.footer(kColumns);
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--seed", opt.suite.seed, "Seed for every randomized suite")->capture_default_str();
    app.add_option("--epsilon", opt.suite.epsilon, "Tolerance for inequality and direction checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--quad-tol", opt.suite.quad_tol, "Relative tolerance of the Coulson quadrature")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "Write CSV here instead of standard output");
    app.add_option("--max-tree", opt.suite.max_tree, "Vertex cap for random trees")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}))
        ->capture_default_str();
    app.add_option("--max-bip", opt.suite.max_bip, "Vertex cap for random bipartite graphs")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}))
        ->capture_default_str();
    app.add_option("--trials", opt.suite.trials, "Instances per suite (0 = suite default)")->capture_default_str();

    auto* energy = app.add_subcommand("energy", "Per-vertex energies, spectral against Coulson integral");
    energy->add_option("graph", opt.graph_file, "Edge-list file")->required();

    auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial and b-sequence");
    charpoly->add_option("graph", opt.graph_file, "Edge-list file")->required();

    auto* verify = app.add_subcommand("verify", "Run a seeded randomized suite");
    std::string names;
    for (const auto& name : suite_names()) {
        names += (names.empty() ? "" : ", ") + name;
    }
    verify->add_option("suite", opt.suite_name, "One of: " + names)->required();

    auto* sweep = app.add_subcommand("sweep-star", "Energies of S_{n+1} joined to a tree at its center");
    sweep->add_option("graph", opt.graph_file, "Edge-list file of a tree")->required();
    sweep->add_option("--vertex", opt.vertex, "Tree vertex identified with the star center")->capture_default_str();
    sweep->add_option("--n-list", opt.n_list, "Comma-separated, strictly increasing star sizes")->delimiter(',');

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << opt.out_path << " for writing\n";
            return kUsage;
        }
    }
    std::ostream& sink = opt.out_path.empty() ? out : file;

    // Buffer so that a failing command leaves no partial CSV behind.
    std::ostringstream buffer;
    int code = kPass;
    try {
        if (*energy) {
            code = cmd_energy(opt, buffer);
        } else if (*charpoly) {
            code = cmd_charpoly(opt, buffer);
        } else if (*verify) {
            code = cmd_verify(opt, buffer, err);
        } else {
            code = cmd_sweep_star(opt, buffer, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    sink << buffer.str();
    return code;
}

} // namespace venergy::cli
