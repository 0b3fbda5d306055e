#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "venergy/graph.hpp"
#include "venergy/polynomial.hpp"

namespace venergy {

class NotBipartiteError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// det(xI - A(G)), exact. The graph on zero vertices gives 1.
IntPolynomial char_poly(const Graph& g);

// b_0, b_2, ..., b_{2 floor(n/2)} of a bipartite graph:
// phi_G(x) = sum_k (-1)^k b_{2k} x^{n-2k}.
struct BSequence {
    std::vector<BigInt> values;
    std::size_t order = 0;

    // b_{2k}; zero past the end.
    BigInt at(std::size_t k) const { return k < values.size() ? values[k] : BigInt{0}; }
    std::string to_string() const;
};

// Throws NotBipartiteError for graphs with an odd cycle, and std::logic_error
// if the polynomial breaks the bipartite sign pattern.
BSequence b_coeffs(const Graph& g);
BSequence b_coeffs_from_poly(const IntPolynomial& phi, std::size_t order);

enum class QuasiOrder { Equal, StrictlyLess, StrictlyGreater, Incomparable };

std::string to_string(QuasiOrder q);

// Coefficient-wise comparison; the shorter sequence is padded with zeros.
QuasiOrder quasi_compare(const BSequence& lhs, const BSequence& rhs);
QuasiOrder quasi_compare(const Graph& lhs, const Graph& rhs);

// Both sides of an exact polynomial identity, kept for reporting.
struct PolynomialIdentity {
    IntPolynomial lhs;
    IntPolynomial rhs;
    bool holds() const { return lhs == rhs; }
};

// phi_{G∘H} against phi_G phi_{H-v} + phi_{G-u} phi_H - x phi_{G-u} phi_{H-v}.
PolynomialIdentity coalescence_identity(const Graph& g, Vertex u, const Graph& h, Vertex v);
bool verify_coalescence_identity(const Graph& g, Vertex u, const Graph& h, Vertex v);

inline constexpr std::size_t kMaxCycleEnumerationOrder = 16;

// Vertex sequences of every cycle through e, each starting at e.a and ending at e.b.
// Throws std::length_error above kMaxCycleEnumerationOrder vertices.
std::vector<std::vector<Vertex>> cycles_through_edge(const Graph& g, Edge e);

// phi_G against phi_{G-e} - phi_{G-{a,b}} - 2 sum_C phi_{G-C} over cycles C through e.
PolynomialIdentity edge_recursion_identity(const Graph& g, Edge e);
bool verify_edge_recursion(const Graph& g, Edge e);

} // namespace venergy
