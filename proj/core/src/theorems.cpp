#include "venergy/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "venergy/spectral.hpp"

namespace venergy {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Increase:
        return "increase";
    case Verdict::Decrease:
        return "decrease";
    case Verdict::Indeterminate:
        return "indeterminate";
    }
    return "?";
}

Verdict classify(double delta, double eps) {
    if (std::abs(delta) <= eps) {
        return Verdict::Indeterminate;
    }
    return delta > 0.0 ? Verdict::Increase : Verdict::Decrease;
}

std::size_t AlternationReport::violations() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const ShiftRecord& r) { return r.violation(); }));
}

std::size_t AlternationReport::indeterminate() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const ShiftRecord& r) {
        return r.verdict == Verdict::Indeterminate;
    }));
}

namespace {

void require_tree(const Graph& tree, Vertex v, const char* what) {
    if (!is_tree(tree)) {
        throw GraphError(std::string(what) + ": first graph must be a tree");
    }
    if (v >= tree.order()) {
        throw GraphError(std::string(what) + ": tree vertex out of range");
    }
}

void require_bipartite(const Graph& g, Vertex u, const char* what) {
    if (!is_bipartite(g)) {
        throw NotBipartiteError(std::string(what) + ": graph must be bipartite");
    }
    if (u >= g.order()) {
        throw GraphError(std::string(what) + ": vertex out of range");
    }
}

} // namespace

AlternationReport check_alternation(const Graph& tree, Vertex v, const Graph& bip, Vertex u, double eps) {
    require_tree(tree, v, "check_alternation");
    require_bipartite(bip, u, "check_alternation");
    if (bip.degree(u) == 0) {
        throw GraphError("check_alternation: merge vertex of B must have degree >= 1");
    }
    const auto joined = coalesce(tree, v, bip, u);
    const auto before = vertex_energies(tree);
    const auto after = vertex_energies(joined.graph);
    const auto dist = bfs_distances(tree, v);

    AlternationReport report;
    for (Vertex w = 0; w < tree.order(); ++w) {
        ShiftRecord r;
        r.vertex = w;
        r.image = joined.map_left[w];
        r.distance = *dist[w];
        r.before = before[w];
        r.after = after[r.image];
        r.verdict = classify(r.delta(), eps);
        r.expected = (r.distance % 2 == 1) ? Verdict::Decrease : Verdict::Increase;
        report.records.push_back(r);
    }
    return report;
}

AlternationReport check_edge_deletion(const Graph& tree, Vertex v, const Graph& bip, Vertex u, Edge e, double eps) {
    require_tree(tree, v, "check_edge_deletion");
    require_bipartite(bip, u, "check_edge_deletion");
    if (!tree.has_edge(e.a, e.b)) {
        throw GraphError("check_edge_deletion: edge is not in the tree");
    }
    const auto joined = coalesce(tree, v, bip, u);
    const Edge image[] = {Edge(joined.map_left[e.a], joined.map_left[e.b])};
    const Graph cut = delete_edges(joined.graph, image);
    const auto before = vertex_energies(joined.graph);
    const auto after = vertex_energies(cut);

    const Edge removed[] = {e};
    const Graph split = delete_edges(tree, removed);
    const auto from_a = bfs_distances(split, e.a);
    const auto from_b = bfs_distances(split, e.b);

    AlternationReport report;
    for (Vertex w = 0; w < tree.order(); ++w) {
        ShiftRecord r;
        r.vertex = w;
        r.image = joined.map_left[w];
        r.distance = from_a[w] ? *from_a[w] : *from_b[w];
        r.before = before[r.image];
        r.after = after[r.image];
        r.verdict = classify(r.delta(), eps);
        r.expected = (r.distance % 2 == 1) ? Verdict::Increase : Verdict::Decrease;
        report.records.push_back(r);
    }
    return report;
}

PathForests path_forests(const Graph& tree, std::span<const Vertex> path, std::size_t i) {
    if (!is_tree(tree)) {
        throw GraphError("path_forests: graph is not a tree");
    }
    if (path.size() < 2) {
        throw GraphError("path_forests: path needs at least two vertices");
    }
    std::vector<bool> seen(tree.order(), false);
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (path[k] >= tree.order() || seen[path[k]]) {
            throw GraphError("path_forests: path repeats a vertex or leaves the tree");
        }
        seen[path[k]] = true;
        if (k > 0 && !tree.has_edge(path[k - 1], path[k])) {
            throw GraphError("path_forests: consecutive path vertices are not adjacent");
        }
    }
    if (i < 1 || i >= path.size()) {
        throw GraphError("path_forests: position out of range");
    }

    const Vertex v1 = path[0];
    const Vertex v2 = path[1];

    const auto without_v1 = delete_vertex(tree, v1);
    const Graph t_tilde = component_of(without_v1.graph, *without_v1.old_to_new[v2]).graph;

    const Edge ei[] = {Edge(path[i - 1], path[i])};
    const auto a_i = component_of(delete_edges(tree, ei), path[i - 1]);

    Graph a_tilde;
    if (i >= 2) {
        const auto a_minus_v1 = delete_vertex(a_i.graph, *a_i.old_to_new[v1]);
        const Vertex v2_in_a = *a_i.old_to_new[v2];
        a_tilde = component_of(a_minus_v1.graph, *a_minus_v1.old_to_new[v2_in_a]).graph;
    }

    return {disjoint_union(tree, a_tilde), disjoint_union(t_tilde, a_i.graph)};
}

std::size_t Lemma31Report::violations() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const Lemma31Record& r) { return !r.ok(); }));
}

Lemma31Report check_lemma31(const Graph& tree, std::span<const Vertex> path) {
    Lemma31Report report;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto forests = path_forests(tree, path, i);
        Lemma31Record r;
        r.position = i;
        r.lhs = b_coeffs(forests.tree_with_a_tilde);
        r.rhs = b_coeffs(forests.t_tilde_with_a);
        r.relation = quasi_compare(r.lhs, r.rhs);
        r.expected = (i % 2 == 1) ? QuasiOrder::StrictlyGreater : QuasiOrder::StrictlyLess;
        report.records.push_back(std::move(r));
    }
    return report;
}

VertexSubadditivityReport check_subadditivity_vertex(const Graph& g, Vertex u, const Graph& h, Vertex v, double eps) {
    require_bipartite(g, u, "check_subadditivity_vertex");
    require_bipartite(h, v, "check_subadditivity_vertex");
    const auto joined = coalesce(g, u, h, v);
    VertexSubadditivityReport report;
    report.merged = vertex_energy(joined.graph, joined.merged);
    report.left = vertex_energy(g, u);
    report.right = vertex_energy(h, v);
    report.isolated_merge = g.degree(u) == 0 || h.degree(v) == 0;
    report.eps = eps;
    return report;
}

EnergyInequality check_energy_subadditivity(const Graph& g, Vertex u, const Graph& h, Vertex v) {
    const auto joined = coalesce(g, u, h, v);
    return {graph_energy(joined.graph), graph_energy(g) + graph_energy(h)};
}

bool is_edge_cut(const Graph& g, std::span<const Edge> f) {
    for (const Edge& e : f) {
        if (!g.has_edge(e.a, e.b)) {
            return false;
        }
    }
    const Graph rest = delete_edges(g, f);
    const auto labels = component_labels(rest);
    const std::size_t pieces = component_count(rest);
    std::vector<Edge> between;
    for (const Edge& e : f) {
        if (labels[e.a] == labels[e.b]) {
            return false;
        }
        between.emplace_back(labels[e.a], labels[e.b]);
    }
    std::sort(between.begin(), between.end());
    between.erase(std::unique(between.begin(), between.end()), between.end());
    // F = [S, V-S] iff the components of G - F can be 2-colored across F.
    return is_bipartite(Graph(pieces, std::move(between)));
}

EnergyInequality check_edge_cut_energy(const Graph& g, std::span<const Edge> f) {
    if (!is_edge_cut(g, f)) {
        throw GraphError("check_edge_cut_energy: F is not an edge cut");
    }
    return {graph_energy(delete_edges(g, f)), graph_energy(g)};
}

std::size_t TrajectoryReport::violations() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const TrajectoryRecord& r) { return !r.ok(); }));
}

std::size_t TrajectoryReport::indeterminate() const {
    std::size_t total = 0;
    for (const auto& r : records) {
        total += r.indeterminate_steps;
    }
    return total;
}

TrajectoryReport run_successive(const Graph& tree, Vertex v, std::span<const ScheduleStep> schedule, double eps) {
    require_tree(tree, v, "run_successive");
    for (const auto& step : schedule) {
        require_bipartite(step.graph, step.anchor, "run_successive");
        if (step.graph.degree(step.anchor) == 0) {
            throw GraphError("run_successive: anchor of every B must have degree >= 1");
        }
    }

    const auto dist = bfs_distances(tree, v);
    const auto without_v = delete_vertex(tree, v);
    const auto reduced = vertex_energies(without_v.graph);

    TrajectoryReport report;
    report.records.resize(tree.order());
    for (Vertex w = 0; w < tree.order(); ++w) {
        auto& r = report.records[w];
        r.vertex = w;
        r.distance = *dist[w];
        if (w != v) {
            r.bound = reduced[*without_v.old_to_new[w]];
        }
    }

    // Tree vertices keep their indices: coalesce() appends the new vertices.
    Graph current = tree;
    auto record_energies = [&](const Graph& g) {
        const auto e = vertex_energies(g);
        for (Vertex w = 0; w < tree.order(); ++w) {
            report.records[w].energies.push_back(e[w]);
        }
    };
    record_energies(current);
    for (const auto& step : schedule) {
        current = coalesce(current, v, step.graph, step.anchor).graph;
        record_energies(current);
    }

    for (auto& r : report.records) {
        const bool even = r.distance % 2 == 0;
        const Verdict expected = even ? Verdict::Increase : Verdict::Decrease;
        for (std::size_t k = 1; k < r.energies.size(); ++k) {
            const Verdict verdict = classify(r.energies[k] - r.energies[k - 1], eps);
            if (verdict == Verdict::Indeterminate) {
                ++r.indeterminate_steps;
            } else if (verdict != expected) {
                ++r.wrong_steps;
            }
        }
        if (r.bound) {
            for (double e : r.energies) {
                if ((even && e > *r.bound + eps) || (!even && e < *r.bound - eps)) {
                    r.bound_respected = false;
                }
            }
        }
    }
    return report;
}

std::size_t StarSweepReport::violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const StarSweepRow& r) {
        return !r.bounds_ok || !r.gaps_ok;
    }));
}

StarSweepReport star_limit_sweep(const Graph& tree, Vertex hub, std::span<const std::size_t> n_values, double eps) {
    require_tree(tree, hub, "star_limit_sweep");
    for (std::size_t k = 0; k < n_values.size(); ++k) {
        if (n_values[k] == 0 || (k > 0 && n_values[k] <= n_values[k - 1])) {
            throw std::invalid_argument("star_limit_sweep: n values must be positive and strictly increasing");
        }
    }

    StarSweepReport report;
    report.hub = hub;
    const auto without_hub = delete_vertex(tree, hub);
    const auto reduced = vertex_energies(without_hub.graph);
    for (Vertex w = 0; w < tree.order(); ++w) {
        if (w != hub) {
            report.others.push_back(w);
            report.targets.push_back(reduced[*without_hub.old_to_new[w]]);
        }
    }
    const double deg = static_cast<double>(tree.degree(hub));

    for (std::size_t n : n_values) {
        // star center 0, leaves 1..n; tree vertices follow
        const auto joined = coalesce(star_graph(n + 1), 0, tree, hub);
        const auto energies = vertex_energies(joined.graph);

        StarSweepRow row;
        row.n = n;
        const double nn = static_cast<double>(n);
        row.center = energies[0];
        row.leaf = energies[1];
        row.leaf_lower = 1.0 / std::sqrt(nn + deg);
        row.leaf_upper = 1.0 / std::sqrt(nn);
        row.center_lower = std::sqrt(nn);
        row.center_upper = std::sqrt(nn + deg);
        row.bounds_ok = row.leaf >= row.leaf_lower - eps && row.leaf <= row.leaf_upper + eps &&
                        row.center >= row.center_lower - eps && row.center <= row.center_upper + eps;
        for (std::size_t k = 0; k < report.others.size(); ++k) {
            const double e = energies[joined.map_right[report.others[k]]];
            row.others.push_back(e);
            row.gaps.push_back(std::abs(e - report.targets[k]));
            if (!report.rows.empty() && row.gaps[k] > report.rows.back().gaps[k] + eps) {
                row.gaps_ok = false;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

PartBalanceReport check_part_balance(const Graph& bip) {
    const auto parts = bipartition(bip);
    if (!parts) {
        throw NotBipartiteError("check_part_balance: graph is not bipartite");
    }
    const auto energies = vertex_energies(bip);
    PartBalanceReport report;
    for (Vertex x : parts->part1) {
        report.part1_sum += energies[x];
    }
    for (Vertex x : parts->part2) {
        report.part2_sum += energies[x];
    }
    return report;
}

std::size_t AdjacentProductReport::violations(double tol) const {
    return static_cast<std::size_t>(std::count_if(products.begin(), products.end(),
                                                  [tol](const auto& p) { return p.second < 1.0 - tol; }));
}

AdjacentProductReport check_adjacent_products(const Graph& g) {
    const auto energies = vertex_energies(g);
    AdjacentProductReport report;
    report.min_product = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) {
        const double product = energies[e.a] * energies[e.b];
        report.products.emplace_back(e, product);
        report.min_product = std::min(report.min_product, product);
    }
    return report;
}

double MomentRecord::error() const { return std::abs(moment - walks.convert_to<double>()); }

bool MomentRecord::ok() const { return error() <= 1e-6 * std::max(1.0, walks.convert_to<double>()); }

std::vector<MomentRecord> check_moments(const Graph& g, unsigned max_length) {
    const auto spectrum = eigen_sym(g);
    std::vector<MomentRecord> out;
    for (Vertex i = 0; i < g.order(); ++i) {
        for (unsigned k = 0; k <= max_length; ++k) {
            out.push_back({i, k, spectral_moment(spectrum, i, k), walk_count(g, i, k)});
        }
    }
    return out;
}

} // namespace venergy
