#include "venergy/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace venergy {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
    for (const Edge& e : edges_) {
        if (e.a == e.b) {
            throw GraphError("self-loop at vertex " + std::to_string(e.a));
        }
        if (e.b >= n) {
            throw GraphError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                             ") out of range for order " + std::to_string(n));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("duplicate edge (" + std::to_string(dup->a) + "," + std::to_string(dup->b) + ")");
    }
    for (const Edge& e : edges_) {
        adjacency_[e.a].push_back(e.b);
        adjacency_[e.b].push_back(e.a);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) {
        return false;
    }
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

Graph path_graph(std::size_t n) {
    if (n == 0) {
        throw GraphError("path_graph requires n >= 1");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t k) {
    if (k < 2) {
        throw GraphError("star_graph requires k >= 2");
    }
    std::vector<Edge> edges;
    for (Vertex leaf = 1; leaf < k; ++leaf) {
        edges.emplace_back(0, leaf);
    }
    return Graph(k, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw GraphError("cycle_graph requires n >= 3");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& left, const Graph& right) {
    std::vector<Edge> edges = left.edges();
    const std::size_t shift = left.order();
    for (const Edge& e : right.edges()) {
        edges.emplace_back(e.a + shift, e.b + shift);
    }
    return Graph(left.order() + right.order(), std::move(edges));
}

CoalescenceResult coalesce(const Graph& g, Vertex u, const Graph& h, Vertex v) {
    if (u >= g.order() || v >= h.order()) {
        throw GraphError("coalesce: vertex index out of range");
    }
    CoalescenceResult out;
    out.merged = u;
    out.map_left.resize(g.order());
    std::iota(out.map_left.begin(), out.map_left.end(), Vertex{0});
    out.map_right.resize(h.order());
    Vertex next = g.order();
    for (Vertex x = 0; x < h.order(); ++x) {
        out.map_right[x] = (x == v) ? u : next++;
    }
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) {
        edges.emplace_back(out.map_right[e.a], out.map_right[e.b]);
    }
    out.graph = Graph(g.order() + h.order() - 1, std::move(edges));
    return out;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::optional<std::size_t>> dist(g.order());
    if (source >= g.order()) {
        throw GraphError("bfs_distances: source out of range");
    }
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (Vertex y : g.neighbors(x)) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
    if (v >= g.order()) {
        throw GraphError("distance: vertex out of range");
    }
    return bfs_distances(g, u)[v];
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> color(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (color[root] != -1) {
            continue;
        }
        color[root] = 0;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            Vertex x = frontier.front();
            frontier.pop();
            for (Vertex y : g.neighbors(x)) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    frontier.push(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex x = 0; x < n; ++x) {
        (color[x] == 0 ? parts.part1 : parts.part2).push_back(x);
    }
    return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<std::size_t> component_labels(const Graph& g) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::size_t next = 0;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (label[root] != unset) {
            continue;
        }
        std::vector<Vertex> stack{root};
        label[root] = next;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (label[y] == unset) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

std::size_t component_count(const Graph& g) {
    auto labels = component_labels(g);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_forest(const Graph& g) { return g.size() + component_count(g) == g.order(); }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
    InducedSubgraph out;
    out.old_to_new.assign(g.order(), std::nullopt);
    std::vector<Vertex> sorted(kept.begin(), kept.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex x : sorted) {
        if (x >= g.order()) {
            throw GraphError("induced_subgraph: vertex out of range");
        }
        out.old_to_new[x] = out.new_to_old.size();
        out.new_to_old.push_back(x);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (out.old_to_new[e.a] && out.old_to_new[e.b]) {
            edges.emplace_back(*out.old_to_new[e.a], *out.old_to_new[e.b]);
        }
    }
    out.graph = Graph(out.new_to_old.size(), std::move(edges));
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> drop(g.order(), false);
    for (Vertex x : removed) {
        if (x >= g.order()) {
            throw GraphError("delete_vertices: vertex out of range");
        }
        drop[x] = true;
    }
    std::vector<Vertex> kept;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (!drop[x]) {
            kept.push_back(x);
        }
    }
    return induced_subgraph(g, kept);
}

InducedSubgraph delete_vertex(const Graph& g, Vertex v) {
    const Vertex removed[] = {v};
    return delete_vertices(g, removed);
}

InducedSubgraph component_of(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw GraphError("component_of: vertex out of range");
    }
    auto labels = component_labels(g);
    std::vector<Vertex> kept;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (labels[x] == labels[v]) {
            kept.push_back(x);
        }
    }
    return induced_subgraph(g, kept);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<Edge> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (const Edge& e : drop) {
        if (!g.has_edge(e.a, e.b)) {
            throw GraphError("delete_edges: edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                             ") not in graph");
        }
    }
    std::vector<Edge> edges;
    std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(), std::back_inserter(edges));
    return Graph(g.order(), std::move(edges));
}

std::vector<Vertex> tree_path(const Graph& g, Vertex u, Vertex v) {
    if (!is_tree(g)) {
        throw GraphError("tree_path: graph is not a tree");
    }
    if (u >= g.order() || v >= g.order()) {
        throw GraphError("tree_path: vertex out of range");
    }
    std::vector<std::optional<Vertex>> parent(g.order());
    std::vector<bool> seen(g.order(), false);
    std::queue<Vertex> frontier;
    frontier.push(u);
    seen[u] = true;
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (Vertex y : g.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                frontier.push(y);
            }
        }
    }
    std::vector<Vertex> path{v};
    while (path.back() != u) {
        path.push_back(*parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Edge> bridges(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, unset);
    std::vector<std::size_t> low(n, 0);
    std::vector<Edge> found;
    std::size_t clock = 0;

    // Simple graphs have no parallel edges, so skipping the parent vertex is enough.
    std::function<void(Vertex, Vertex)> visit = [&](Vertex x, Vertex parent) {
        order[x] = low[x] = clock++;
        for (Vertex y : g.neighbors(x)) {
            if (y == parent) {
                continue;
            }
            if (order[y] == unset) {
                visit(y, x);
                low[x] = std::min(low[x], low[y]);
                if (low[y] > order[x]) {
                    found.emplace_back(x, y);
                }
            } else {
                low[x] = std::min(low[x], order[y]);
            }
        }
    };
    for (Vertex root = 0; root < n; ++root) {
        if (order[root] == unset) {
            visit(root, root);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Edge> edge_cut(const Graph& g, std::span<const Vertex> side) {
    std::vector<bool> inside(g.order(), false);
    for (Vertex x : side) {
        inside.at(x) = true;
    }
    std::vector<Edge> cut;
    for (const Edge& e : g.edges()) {
        if (inside[e.a] != inside[e.b]) {
            cut.push_back(e);
        }
    }
    return cut;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) {
        throw GraphError("permute: permutation size mismatch");
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(perm[e.a], perm[e.b]);
    }
    return Graph(g.order(), std::move(edges));
}

std::vector<Vertex> leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) == 1) {
            out.push_back(x);
        }
    }
    return out;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw GraphError("random_tree requires n >= 1");
    }
    if (n <= 2) {
        return path_graph(n);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) {
        c = pick(rng);
    }

    // Prüfer decoding: repeatedly join the smallest current leaf to the next code entry.
    std::vector<std::size_t> remaining(n, 1);
    for (Vertex c : code) {
        ++remaining[c];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaf_queue;
    for (Vertex x = 0; x < n; ++x) {
        if (remaining[x] == 1) {
            leaf_queue.push(x);
        }
    }
    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = leaf_queue.top();
        leaf_queue.pop();
        edges.emplace_back(leaf, c);
        if (--remaining[c] == 1) {
            leaf_queue.push(c);
        }
    }
    Vertex last_a = leaf_queue.top();
    leaf_queue.pop();
    Vertex last_b = leaf_queue.top();
    edges.emplace_back(last_a, last_b);
    return Graph(n, std::move(edges));
}

Graph random_bipartite(std::size_t n1, std::size_t n2, double p, std::uint64_t seed) {
    if (n1 == 0 || n2 == 0) {
        throw GraphError("random_bipartite requires both parts non-empty");
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw GraphError("random_bipartite requires 0 < p <= 1");
    }
    constexpr int max_attempts = 1000;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        bool anchored = false;
        for (Vertex x = 0; x < n1; ++x) {
            for (Vertex y = 0; y < n2; ++y) {
                if (coin(rng)) {
                    edges.emplace_back(x, n1 + y);
                    anchored = anchored || x == 0;
                }
            }
        }
        if (anchored) {
            return Graph(n1 + n2, std::move(edges));
        }
    }
    throw GraphError("random_bipartite: vertex 0 stayed isolated after 1000 draws");
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw GraphError("random_graph requires 0 <= p <= 1");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            if (coin(rng)) {
                edges.emplace_back(x, y);
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined state.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << " m=" << g.size() << " {";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        out << (i ? " " : "") << g.edges()[i].a << "-" << g.edges()[i].b;
    }
    out << "}";
    return out.str();
}

} // namespace venergy
