#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "venergy/charpoly.hpp"
#include "venergy/graph.hpp"

namespace venergy {

inline constexpr double kDefaultEpsilon = 1e-8;

enum class Verdict { Increase, Decrease, Indeterminate };

std::string to_string(Verdict v);

// Increase/Decrease by the sign of delta; Indeterminate when |delta| <= eps.
Verdict classify(double delta, double eps);

// ---------------------------------------------------------------------------
// Energy shifts of tree vertices under coalescence and edge deletion.
// ---------------------------------------------------------------------------

struct ShiftRecord {
    Vertex vertex = 0;        // index in the tree
    Vertex image = 0;         // index of the copy in the modified graph
    std::size_t distance = 0; // to the reference vertex
    double before = 0.0;
    double after = 0.0;
    Verdict verdict = Verdict::Indeterminate;
    Verdict expected = Verdict::Indeterminate;

    double delta() const { return after - before; }
    bool violation() const { return verdict != Verdict::Indeterminate && verdict != expected; }
};

struct AlternationReport {
    std::vector<ShiftRecord> records;

    std::size_t violations() const;
    std::size_t indeterminate() const;
    bool passed() const { return violations() == 0; }
};

// Tree T, bipartite B, deg_B(u) >= 1. Compares E_T(w) with E_{T∘B}(ŵ) for every
// w in T; odd d_T(v, w) is expected to decrease, even to increase.
// Throws GraphError if a hypothesis fails.
AlternationReport check_alternation(const Graph& tree, Vertex v, const Graph& bip, Vertex u,
                                    double eps = kDefaultEpsilon);

// Deletes the copy of tree edge e = v1v2 from T∘B. For w on the v_i side of e,
// odd d(w, v_i) is expected to increase, even to decrease.
AlternationReport check_edge_deletion(const Graph& tree, Vertex v, const Graph& bip, Vertex u, Edge e,
                                      double eps = kDefaultEpsilon);

// ---------------------------------------------------------------------------
// Quasi-order alternation along a path of a tree.
// ---------------------------------------------------------------------------

// The forests compared at position i (1-based) along the path v1 ~ ... ~ vn.
struct PathForests {
    Graph tree_with_a_tilde; // T ∪ Ã_i
    Graph t_tilde_with_a;    // T̃ ∪ A_i
};

// Throws GraphError if `path` is not a path of the tree or i is out of 1..n-1.
PathForests path_forests(const Graph& tree, std::span<const Vertex> path, std::size_t i);

struct Lemma31Record {
    std::size_t position = 0; // i
    BSequence lhs;            // b(T ∪ Ã_i)
    BSequence rhs;            // b(T̃ ∪ A_i)
    QuasiOrder relation = QuasiOrder::Equal;
    QuasiOrder expected = QuasiOrder::Equal;

    bool ok() const { return relation == expected; }
};

struct Lemma31Report {
    std::vector<Lemma31Record> records;

    std::size_t violations() const;
    bool passed() const { return violations() == 0; }
};

// Odd i expects T ∪ Ã_i ≻ T̃ ∪ A_i, even i expects ≺. Exact integer comparison.
Lemma31Report check_lemma31(const Graph& tree, std::span<const Vertex> path);

// ---------------------------------------------------------------------------
// Subadditivity statements.
// ---------------------------------------------------------------------------

struct VertexSubadditivityReport {
    double merged = 0.0; // E_{G∘H}(w)
    double left = 0.0;   // E_G(u)
    double right = 0.0;  // E_H(v)
    bool isolated_merge = false;
    double eps = kDefaultEpsilon;

    double slack() const { return left + right - merged; }
    bool inequality_holds() const { return slack() >= -eps; }
    bool equality() const { return slack() <= eps && slack() >= -eps; }
    // equality within eps exactly when u or v is isolated
    bool equality_consistent() const { return equality() == isolated_merge; }
    bool passed() const { return inequality_holds() && equality_consistent(); }
};

// Both graphs bipartite (throws NotBipartiteError otherwise).
VertexSubadditivityReport check_subadditivity_vertex(const Graph& g, Vertex u, const Graph& h, Vertex v,
                                                     double eps = kDefaultEpsilon);

// lhs <= rhs within eps.
struct EnergyInequality {
    double lhs = 0.0;
    double rhs = 0.0;

    double slack() const { return rhs - lhs; }
    bool holds(double eps = kDefaultEpsilon) const { return slack() >= -eps; }
};

// E(G∘H) <= E(G) + E(H)
EnergyInequality check_energy_subadditivity(const Graph& g, Vertex u, const Graph& h, Vertex v);

// True iff F is the set of edges between some S and its complement.
bool is_edge_cut(const Graph& g, std::span<const Edge> f);

// E(G - F) <= E(G). Throws GraphError unless F is an edge cut of G.
EnergyInequality check_edge_cut_energy(const Graph& g, std::span<const Edge> f);

// ---------------------------------------------------------------------------
// Successive coalescence at a fixed vertex.
// ---------------------------------------------------------------------------

struct ScheduleStep {
    Graph graph;
    Vertex anchor = 0;
};

struct TrajectoryRecord {
    Vertex vertex = 0;
    std::size_t distance = 0;
    std::vector<double> energies;  // E_{G_k}(ŵ), k = 0..steps
    std::optional<double> bound;   // E_{T-v}(w); absent for w = v
    std::size_t wrong_steps = 0;   // steps moving against the expected direction
    std::size_t indeterminate_steps = 0;
    bool bound_respected = true;

    bool ok() const { return wrong_steps == 0 && bound_respected; }
};

struct TrajectoryReport {
    std::vector<TrajectoryRecord> records;

    std::size_t violations() const;
    std::size_t indeterminate() const;
    bool passed() const { return violations() == 0; }
};

// G_0 = T, G_k = G_{k-1} ∘ B_k joining the copy of v with the anchor of B_k.
// Even d(v, w) must increase (bounded above by E_{T-v}(w) for w != v), odd
// must decrease (bounded below by E_{T-v}(w)).
TrajectoryReport run_successive(const Graph& tree, Vertex v, std::span<const ScheduleStep> schedule,
                                double eps = kDefaultEpsilon);

// ---------------------------------------------------------------------------
// Stars glued onto a tree: S_{n+1} ∘ T at the star center.
// ---------------------------------------------------------------------------

struct StarSweepRow {
    std::size_t n = 0;
    double center = 0.0;
    double leaf = 0.0;
    double leaf_lower = 0.0;   // 1/sqrt(n + deg_T(hub))
    double leaf_upper = 0.0;   // 1/sqrt(n)
    double center_lower = 0.0; // sqrt(n)
    double center_upper = 0.0; // sqrt(n + deg_T(hub))
    std::vector<double> others; // energies of the remaining tree vertices
    std::vector<double> gaps;   // |others - targets|
    bool bounds_ok = true;
    bool gaps_ok = true; // no gap grew since the previous row
};

struct StarSweepReport {
    Vertex hub = 0;
    std::vector<Vertex> others;  // tree indices other than hub
    std::vector<double> targets; // E_{T-hub}(w)
    std::vector<StarSweepRow> rows;

    std::size_t violations() const;
    bool passed() const { return violations() == 0; }
};

// n_values must be strictly increasing and positive.
StarSweepReport star_limit_sweep(const Graph& tree, Vertex hub, std::span<const std::size_t> n_values,
                                 double eps = kDefaultEpsilon);

// ---------------------------------------------------------------------------
// Part balance and adjacent products.
// ---------------------------------------------------------------------------

struct PartBalanceReport {
    double part1_sum = 0.0;
    double part2_sum = 0.0;

    double imbalance() const { return part1_sum > part2_sum ? part1_sum - part2_sum : part2_sum - part1_sum; }
};

PartBalanceReport check_part_balance(const Graph& bip);

struct AdjacentProductReport {
    std::vector<std::pair<Edge, double>> products;
    double min_product = 0.0; // +inf when there are no edges

    std::size_t violations(double tol = 1e-9) const;
};

// E(v_i) E(v_j) for every edge.
AdjacentProductReport check_adjacent_products(const Graph& g);

// ---------------------------------------------------------------------------
// Spectral moments against closed-walk counts.
// ---------------------------------------------------------------------------

struct MomentRecord {
    Vertex vertex = 0;
    unsigned length = 0;
    double moment = 0.0;
    BigInt walks;

    double error() const;
    bool ok() const; // |moment - walks| <= 1e-6 max(1, walks)
};

std::vector<MomentRecord> check_moments(const Graph& g, unsigned max_length = 8);

} // namespace venergy
