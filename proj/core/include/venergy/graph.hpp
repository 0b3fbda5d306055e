#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace venergy {

using Vertex = std::size_t;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Undirected edge, always stored with a < b.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

    constexpr bool touches(Vertex v) const { return a == v || b == v; }
    constexpr Vertex other(Vertex v) const { return v == a ? b : a; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Throws GraphError on a self-loop, an index >= n, or a repeated edge.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return adjacency_.empty(); }

    // Sorted, each edge once.
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& lhs, const Graph& rhs) {
        return lhs.order() == rhs.order() && lhs.edges_ == rhs.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// G∘H: `merged` carries the index of u in G; H's other vertices are appended
// in their original order after G's.
struct CoalescenceResult {
    Graph graph;
    std::vector<Vertex> map_left;
    std::vector<Vertex> map_right;
    Vertex merged = 0;
};

struct Bipartition {
    std::vector<Vertex> part1;
    std::vector<Vertex> part2;
};

// A subgraph obtained by deleting vertices, with the index bookkeeping needed
// to follow a vertex across the deletion.
struct InducedSubgraph {
    Graph graph;
    std::vector<std::optional<Vertex>> old_to_new;
    std::vector<Vertex> new_to_old;
};

// Builders.
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t k);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Vertices of `right` are shifted by left.order().
Graph disjoint_union(const Graph& left, const Graph& right);

CoalescenceResult coalesce(const Graph& g, Vertex u, const Graph& h, Vertex v);

// Structural queries.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Component label per vertex, labels numbered in order of lowest vertex.
std::vector<std::size_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
InducedSubgraph delete_vertex(const Graph& g, Vertex v);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept);

// The connected component of g containing v, as an induced subgraph.
InducedSubgraph component_of(const Graph& g, Vertex v);

// Same vertex set, edges in `removed` dropped. Throws if an edge is absent.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

// Unique u-v path in a tree. Throws GraphError if g is not a tree.
std::vector<Vertex> tree_path(const Graph& g, Vertex u, Vertex v);

// Edges whose removal increases the number of components.
std::vector<Edge> bridges(const Graph& g);

// Edges with exactly one endpoint in `side`.
std::vector<Edge> edge_cut(const Graph& g, std::span<const Vertex> side);

// Relabel: vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

std::vector<Vertex> leaves(const Graph& g);

// Random instances. Identical arguments give identical graphs.
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph random_bipartite(std::size_t n1, std::size_t n2, double p, std::uint64_t seed);
// G(n, p): each pair joined independently with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Decorrelated per-instance seed from a suite seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::string describe(const Graph& g);

} // namespace venergy
