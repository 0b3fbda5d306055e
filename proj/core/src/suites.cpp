#include "venergy/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "venergy/charpoly.hpp"
#include "venergy/coulson.hpp"
#include "venergy/hnd.hpp"
#include "venergy/spectral.hpp"
#include "venergy/theorems.hpp"

namespace venergy {

std::string format_real(double x) {
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

std::string SuiteResult::summary_line() const {
    std::ostringstream out;
    out << "SUITE " << name << (passed() ? " PASS" : " FAIL") << " checked=" << checked
        << " violations=" << violations << " indeterminate=" << indeterminate;
    return out.str();
}

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k > 0) {
            out << ',';
        }
        out << cells[k];
    }
    out << '\n';
}

} // namespace

void SuiteResult::write_csv(std::ostream& out) const {
    write_row(out, header);
    for (const auto& row : rows) {
        write_row(out, row);
    }
}

namespace {

std::string cell(const std::string& s) { return s; }
std::string cell(const char* s) { return s; }
std::string cell(double x) { return format_real(x); }
std::string cell(bool b) { return b ? "true" : "false"; }
std::string cell(std::size_t k) { return std::to_string(k); }

template <class... Ts>
std::vector<std::string> cells(const Ts&... xs) {
    return {cell(xs)...};
}

std::string join(std::span<const Vertex> xs, char sep = ' ') {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) {
            out += sep;
        }
        out += std::to_string(xs[k]);
    }
    return out;
}

std::string join_reals(std::span<const double> xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) {
            out += ' ';
        }
        out += format_real(xs[k]);
    }
    return out;
}

const char* status(bool ok) { return ok ? "ok" : "VIOLATION"; }

// Per-instance random source; everything drawn for instance i comes from here.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::size_t integer(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::uint64_t seed() { return rng_(); }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs.at(integer(0, xs.size() - 1));
    }

private:
    std::mt19937_64 rng_;
};

std::size_t trials_or(const SuiteConfig& cfg, std::size_t fallback) { return cfg.trials ? cfg.trials : fallback; }

Graph draw_tree(Draw& draw, std::size_t lo, std::size_t hi) {
    return random_tree(draw.integer(lo, std::max(lo, hi)), draw.seed());
}

// Bipartite graph with both parts non-empty and at most cap vertices.
Graph draw_bipartite(Draw& draw, std::size_t cap) {
    cap = std::max<std::size_t>(cap, 2);
    const std::size_t n1 = draw.integer(1, cap - 1);
    const std::size_t n2 = draw.integer(1, cap - n1);
    const double p = draw.real(0.2, 0.8);
    return random_bipartite(n1, n2, p, draw.seed());
}

std::vector<Vertex> non_isolated(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) > 0) {
            out.push_back(x);
        }
    }
    return out;
}

Vertex draw_vertex(Draw& draw, const Graph& g) { return draw.integer(0, g.order() - 1); }

// ---------------------------------------------------------------------------

SuiteResult shift_table(std::string name) {
    SuiteResult r;
    r.name = std::move(name);
    r.header = {"instance", "tree_order", "bip_order", "v", "u", "edge", "w", "distance",
                "before",   "after",      "delta",     "verdict", "expected", "status"};
    return r;
}

void add_shift_rows(SuiteResult& r, std::size_t inst, const Graph& tree, const Graph& bip, Vertex v, Vertex u,
                    const std::string& edge, const AlternationReport& report) {
    for (const auto& rec : report.records) {
        r.rows.push_back(cells(inst, tree.order(), bip.order(), v, u, edge, rec.vertex, rec.distance, rec.before,
                               rec.after, rec.delta(), to_string(rec.verdict), to_string(rec.expected),
                               status(!rec.violation())));
        ++r.checked;
    }
    r.violations += report.violations();
    r.indeterminate += report.indeterminate();
}

SuiteResult suite_alternation(const SuiteConfig& cfg) {
    SuiteResult r = shift_table("alternation");
    for (std::size_t i = 0; i < trials_or(cfg, 200); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph tree = draw_tree(draw, 1, cfg.max_tree);
        const Vertex v = draw_vertex(draw, tree);
        const Graph bip = draw_bipartite(draw, cfg.max_bip);
        const Vertex u = draw.pick(non_isolated(bip));
        add_shift_rows(r, i, tree, bip, v, u, "", check_alternation(tree, v, bip, u, cfg.epsilon));
    }
    return r;
}

SuiteResult suite_edge_deletion(const SuiteConfig& cfg) {
    SuiteResult r = shift_table("edge-deletion");
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph tree = draw_tree(draw, 2, cfg.max_tree);
        const Vertex v = draw_vertex(draw, tree);
        const Graph bip = draw_bipartite(draw, cfg.max_bip);
        const Vertex u = draw_vertex(draw, bip);
        const Edge e = draw.pick(tree.edges());
        const std::string label = std::to_string(e.a) + "-" + std::to_string(e.b);
        add_shift_rows(r, i, tree, bip, v, u, label, check_edge_deletion(tree, v, bip, u, e, cfg.epsilon));
    }
    return r;
}

SuiteResult suite_lemma31(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "lemma31";
    r.header = {"instance", "tree_order", "path", "position", "lhs_b", "rhs_b", "relation", "expected", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph tree = draw_tree(draw, 2, cfg.max_tree);
        // a maximal path: leaf to leaf
        auto ends = leaves(tree);
        const Vertex a = draw.pick(ends);
        ends.erase(std::find(ends.begin(), ends.end(), a));
        const Vertex b = draw.pick(ends);
        const auto path = tree_path(tree, a, b);
        const auto report = check_lemma31(tree, path);
        for (const auto& rec : report.records) {
            r.rows.push_back(cells(i, tree.order(), join(path), rec.position, rec.lhs.to_string(),
                                   rec.rhs.to_string(), to_string(rec.relation), to_string(rec.expected),
                                   status(rec.ok())));
            ++r.checked;
        }
        r.violations += report.violations();
    }
    return r;
}

// Random bipartite graph, occasionally with an isolated vertex appended so the
// merge vertex can be isolated.
SuiteResult suite_subadd_vertex(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "subadd-vertex";
    r.header = {"instance", "kind",  "g_order", "h_order", "u",        "v",       "deg_u",   "deg_v",
                "merged",   "left",  "right",   "slack",   "equality", "isolated", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        Graph g = draw_bipartite(draw, cfg.max_bip);
        const Graph h = draw_bipartite(draw, cfg.max_bip);
        Vertex u = draw_vertex(draw, g);
        Vertex v = draw_vertex(draw, h);
        std::string kind = "random";
        // every fifth instance is a constructed equality case
        if (i % 5 == 4) {
            g = disjoint_union(g, empty_graph(1));
            u = g.order() - 1;
            kind = "isolated";
        }
        const auto rep = check_subadditivity_vertex(g, u, h, v, cfg.epsilon);
        r.rows.push_back(cells(i, kind, g.order(), h.order(), u, v, g.degree(u), h.degree(v), rep.merged, rep.left,
                               rep.right, rep.slack(), rep.equality(), rep.isolated_merge, status(rep.passed())));
        ++r.checked;
        r.violations += rep.passed() ? 0 : 1;
    }
    return r;
}

Graph draw_tree_or_bipartite(Draw& draw, const SuiteConfig& cfg) {
    if (draw.integer(0, 1) == 0) {
        return draw_tree(draw, 1, cfg.max_tree);
    }
    return draw_bipartite(draw, cfg.max_bip);
}

SuiteResult suite_subadd_energy(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "subadd-energy";
    r.header = {"instance", "g_order", "h_order", "u", "v", "merged_energy", "sum_energy", "slack", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph g = draw_tree_or_bipartite(draw, cfg);
        const Graph h = draw_tree_or_bipartite(draw, cfg);
        const Vertex u = draw_vertex(draw, g);
        const Vertex v = draw_vertex(draw, h);
        const auto ineq = check_energy_subadditivity(g, u, h, v);
        const bool ok = ineq.holds(cfg.epsilon);
        r.rows.push_back(cells(i, g.order(), h.order(), u, v, ineq.lhs, ineq.rhs, ineq.slack(), status(ok)));
        ++r.checked;
        r.violations += ok ? 0 : 1;
    }
    return r;
}

SuiteResult suite_edge_cut(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "edge-cut";
    r.header = {"instance", "order", "side", "cut_size", "reduced_energy", "energy", "slack", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph g = draw_tree_or_bipartite(draw, cfg);
        std::vector<Vertex> side;
        for (Vertex x = 0; x < g.order(); ++x) {
            if (draw.integer(0, 1) == 1) {
                side.push_back(x);
            }
        }
        const auto f = edge_cut(g, side);
        const auto ineq = check_edge_cut_energy(g, f);
        const bool ok = ineq.holds(cfg.epsilon);
        r.rows.push_back(cells(i, g.order(), join(side), f.size(), ineq.lhs, ineq.rhs, ineq.slack(), status(ok)));
        ++r.checked;
        r.violations += ok ? 0 : 1;
    }
    return r;
}

SuiteResult suite_successive(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "successive";
    r.header = {"instance", "tree_order", "v", "w", "distance", "bound", "wrong_steps", "indeterminate_steps",
                "bound_respected", "trajectory", "status"};
    const std::size_t tree_cap = std::min<std::size_t>(cfg.max_tree, 8);
    const std::size_t bip_cap = std::min<std::size_t>(cfg.max_bip, 6);
    for (std::size_t i = 0; i < trials_or(cfg, 20); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph tree = draw_tree(draw, 2, tree_cap);
        const Vertex v = draw_vertex(draw, tree);
        std::vector<ScheduleStep> schedule;
        for (int k = 0; k < 10; ++k) {
            Graph b = draw_bipartite(draw, bip_cap);
            const Vertex anchor = draw.pick(non_isolated(b));
            schedule.push_back({std::move(b), anchor});
        }
        const auto report = run_successive(tree, v, schedule, cfg.epsilon);
        for (const auto& rec : report.records) {
            r.rows.push_back(cells(i, tree.order(), v, rec.vertex, rec.distance,
                                   rec.bound ? format_real(*rec.bound) : std::string("none"), rec.wrong_steps,
                                   rec.indeterminate_steps, rec.bound_respected, join_reals(rec.energies),
                                   status(rec.ok())));
            ++r.checked;
        }
        r.violations += report.violations();
        r.indeterminate += report.indeterminate();
    }
    return r;
}

std::vector<std::size_t> star_sweep_values() {
    std::vector<std::size_t> ns;
    for (std::size_t n = 1; n <= 10; ++n) {
        ns.push_back(n);
    }
    for (std::size_t n : {15, 20, 30, 50, 75, 100, 150, 200}) {
        ns.push_back(n);
    }
    return ns;
}

SuiteResult suite_star_limit(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "star-limit";
    r.header = {"instance", "tree_order", "hub", "n",     "role", "vertex",
                "energy",   "lower",      "upper", "target", "gap", "status"};

    // fixed shapes first, then random trees
    std::vector<std::pair<Graph, Vertex>> cases = {
        {path_graph(1), 0}, {path_graph(2), 0}, {path_graph(3), 0}, {path_graph(3), 1}, {star_graph(4), 1}};
    for (std::size_t i = 0; i < trials_or(cfg, 3); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        Graph tree = draw_tree(draw, 2, std::min<std::size_t>(cfg.max_tree, 10));
        const Vertex hub = draw_vertex(draw, tree);
        cases.emplace_back(std::move(tree), hub);
    }

    const auto ns = star_sweep_values();
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto& [tree, hub] = cases[c];
        const auto report = star_limit_sweep(tree, hub, ns, cfg.epsilon);
        for (const auto& row : report.rows) {
            const double eps = cfg.epsilon;
            const bool center_ok = row.center >= row.center_lower - eps && row.center <= row.center_upper + eps;
            const bool leaf_ok = row.leaf >= row.leaf_lower - eps && row.leaf <= row.leaf_upper + eps;
            r.rows.push_back(cells(c, tree.order(), hub, row.n, "center", hub, row.center, row.center_lower,
                                   row.center_upper, "", "", status(center_ok)));
            r.rows.push_back(cells(c, tree.order(), hub, row.n, "leaf", "", row.leaf, row.leaf_lower,
                                   row.leaf_upper, "", "", status(leaf_ok)));
            for (std::size_t k = 0; k < report.others.size(); ++k) {
                r.rows.push_back(cells(c, tree.order(), hub, row.n, "tree", report.others[k], row.others[k], "",
                                       "", report.targets[k], row.gaps[k], status(row.gaps_ok)));
            }
            ++r.checked;
        }
        r.violations += report.violations();
    }
    return r;
}

SuiteResult suite_hnd(const SuiteConfig&) {
    SuiteResult r;
    r.name = "hnd";
    r.header = {"n", "d", "order", "polynomial_match", "energy_spectral", "energy_closed", "energy_error",
                "weight_error", "null_weight", "status"};
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t d = 1; d <= 5; ++d) {
            const auto inst = hnd_build(n, d);
            const auto rep = hnd_verify(inst, 1e-8);
            r.rows.push_back(cells(n, d, inst.graph.order(), rep.polynomial_match, rep.energy_spectral,
                                   rep.energy_closed, rep.energy_error(), rep.weight_error, rep.null_weight,
                                   status(rep.passed())));
            ++r.checked;
            r.violations += rep.passed() ? 0 : 1;
        }
    }
    return r;
}

SuiteResult suite_series_bound(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "series-bound";
    r.header = {"instance", "step", "d", "energy", "bound", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 10); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        std::vector<std::size_t> ds;
        if (i == 0) {
            ds = {1, 1, 1, 1, 1, 1};
        } else if (i == 1) {
            ds = {1, 4, 9, 16, 25};
        } else {
            const std::size_t len = draw.integer(1, 6);
            for (std::size_t k = 0; k < len; ++k) {
                ds.push_back(draw.integer(1, 6));
            }
        }
        for (const auto& row : series_bound_check(ds)) {
            const bool ok = row.ok(cfg.epsilon);
            r.rows.push_back(cells(i, row.step, row.d, row.energy, row.bound, status(ok)));
            ++r.checked;
            r.violations += ok ? 0 : 1;
        }
    }
    return r;
}

SuiteResult suite_balance(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "balance";
    r.header = {"instance", "order", "size", "part1_sum", "part2_sum", "imbalance", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph g = draw_bipartite(draw, cfg.max_bip);
        const auto rep = check_part_balance(g);
        const bool ok = rep.imbalance() <= cfg.epsilon;
        r.rows.push_back(cells(i, g.order(), g.size(), rep.part1_sum, rep.part2_sum, rep.imbalance(), status(ok)));
        ++r.checked;
        r.violations += ok ? 0 : 1;
    }
    return r;
}

SuiteResult suite_adjacent_product(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "adjacent-product";
    r.header = {"instance", "order", "size", "min_product", "below_one", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 100); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph g = draw_bipartite(draw, cfg.max_bip);
        const auto rep = check_adjacent_products(g);
        const std::size_t bad = rep.violations(1e-9);
        r.rows.push_back(cells(i, g.order(), g.size(), rep.min_product, bad, status(bad == 0)));
        r.checked += g.size();
        r.violations += bad;
    }
    return r;
}

SuiteResult suite_identities(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "identities";
    r.header = {"kind", "instance", "graph", "detail", "holds", "status"};
    auto record = [&r](const char* kind, std::size_t inst, const Graph& g, const std::string& detail, bool ok) {
        r.rows.push_back(cells(kind, inst, describe(g), detail, ok, status(ok)));
        ++r.checked;
        r.violations += ok ? 0 : 1;
    };

    const std::size_t n_coal = trials_or(cfg, 100);
    for (std::size_t i = 0; i < n_coal; ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph g = draw_tree_or_bipartite(draw, cfg);
        const Graph h = draw_tree_or_bipartite(draw, cfg);
        const Vertex u = draw_vertex(draw, g);
        const Vertex v = draw_vertex(draw, h);
        const auto joined = coalesce(g, u, h, v);
        record("coalescence", i, joined.graph, "u=" + std::to_string(u) + " v=" + std::to_string(v),
               verify_coalescence_identity(g, u, h, v));
    }

    std::vector<Graph> graphs;
    for (std::size_t i = 0; i < trials_or(cfg, 50); ++i) {
        Draw draw(derive_seed(cfg.seed, n_coal + i));
        graphs.push_back(draw_tree(draw, 2, cfg.max_tree));
    }
    graphs.push_back(cycle_graph(4));
    graphs.push_back(cycle_graph(6));
    graphs.push_back(coalesce(cycle_graph(4), 0, path_graph(2), 0).graph);
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        for (const Edge& e : graphs[k].edges()) {
            record("edge-recursion", k, graphs[k], std::to_string(e.a) + "-" + std::to_string(e.b),
                   verify_edge_recursion(graphs[k], e));
        }
    }
    return r;
}

SuiteResult suite_moments(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "moments";
    r.header = {"instance", "family", "order", "max_moment_error", "moment_failures", "stochastic_defect",
                "energy_sum_error", "status"};
    for (std::size_t i = 0; i < trials_or(cfg, 30); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        Graph g;
        const char* family = "";
        switch (i % 3) {
        case 0:
            g = draw_tree(draw, 1, cfg.max_tree);
            family = "tree";
            break;
        case 1:
            g = draw_bipartite(draw, cfg.max_bip);
            family = "bipartite";
            break;
        default:
            g = random_graph(draw.integer(1, 10), draw.real(0.2, 0.8), draw.seed());
            family = "gnp";
            break;
        }
        const auto spectrum = eigen_sym(g);
        const auto moments = check_moments(g, 8);
        double worst = 0.0;
        std::size_t failures = 0;
        for (const auto& m : moments) {
            worst = std::max(worst, m.error());
            failures += m.ok() ? 0 : 1;
        }
        const double defect = weight_matrix(spectrum).stochastic_defect();
        const auto energies = vertex_energies(spectrum);
        double sum = 0.0;
        for (double e : energies) {
            sum += e;
        }
        const double sum_error = std::abs(sum - graph_energy(spectrum));
        const double n = static_cast<double>(std::max<std::size_t>(g.order(), 1));
        const bool ok = failures == 0 && defect <= 1e-9 && sum_error <= 1e-8 * n;
        r.rows.push_back(cells(i, family, g.order(), worst, failures, defect, sum_error, status(ok)));
        r.checked += moments.size() + 2;
        r.violations += failures + (defect <= 1e-9 ? 0 : 1) + (sum_error <= 1e-8 * n ? 0 : 1);
    }
    return r;
}

SuiteResult suite_coulson(const SuiteConfig& cfg) {
    SuiteResult r;
    r.name = "coulson";
    r.header = {"instance", "order", "vertex", "spectral", "coulson", "abs_diff", "status"};
    const QuadratureConfig quad{cfg.quad_tol, 40};
    for (std::size_t i = 0; i < trials_or(cfg, 50); ++i) {
        Draw draw(derive_seed(cfg.seed, i));
        const Graph tree = draw_tree(draw, 1, std::min<std::size_t>(cfg.max_tree, 10));
        const auto spectral = vertex_energies(tree);
        const auto coulson = coulson_vertex_energies(tree, quad);
        for (Vertex x = 0; x < tree.order(); ++x) {
            const double diff = std::abs(spectral[x] - coulson[x]);
            const bool ok = diff <= 1e-6;
            r.rows.push_back(cells(i, tree.order(), x, spectral[x], coulson[x], diff, status(ok)));
            ++r.checked;
            r.violations += ok ? 0 : 1;
        }
    }
    return r;
}

using SuiteFn = std::function<SuiteResult(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"alternation", suite_alternation},
        {"lemma31", suite_lemma31},
        {"edge-deletion", suite_edge_deletion},
        {"subadd-vertex", suite_subadd_vertex},
        {"subadd-energy", suite_subadd_energy},
        {"edge-cut", suite_edge_cut},
        {"successive", suite_successive},
        {"star-limit", suite_star_limit},
        {"hnd", suite_hnd},
        {"series-bound", suite_series_bound},
        {"balance", suite_balance},
        {"adjacent-product", suite_adjacent_product},
        {"identities", suite_identities},
        {"moments", suite_moments},
        {"coulson", suite_coulson},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg) {
    for (const auto& [key, fn] : registry()) {
        if (key == name) {
            return fn(cfg);
        }
    }
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

} // namespace venergy
