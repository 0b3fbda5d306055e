#include "venergy/charpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace venergy {

IntPolynomial char_poly(const Graph& g) {
    // Faddeev-LeVerrier:
    //   M_1 = I,  c_{n-k} = -tr(A M_k) / k,  M_{k+1} = A M_k + c_{n-k} I.
    // A is a 0/1 matrix, so A*M is a sum of neighbor rows.
    const std::size_t n = g.order();
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    if (n == 0) {
        return IntPolynomial(std::move(coeffs));
    }

    std::vector<BigInt> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1;
    }
    std::vector<BigInt> am(n * n);

    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            BigInt* row = &am[i * n];
            std::fill(row, row + n, BigInt{0});
            for (Vertex l : g.neighbors(i)) {
                const BigInt* src = &m[l * n];
                for (std::size_t j = 0; j < n; ++j) {
                    if (src[j] != 0) {
                        row[j] += src[j];
                    }
                }
            }
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += am[i * n + i];
        }
        BigInt quotient;
        BigInt remainder;
        boost::multiprecision::divide_qr(trace, BigInt(k), quotient, remainder);
        if (remainder != 0) {
            throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
        }
        coeffs[n - k] = -quotient;
        if (k < n) {
            m.swap(am);
            for (std::size_t i = 0; i < n; ++i) {
                m[i * n + i] += coeffs[n - k];
            }
        }
    }
    return IntPolynomial(std::move(coeffs));
}

std::string BSequence::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << (k ? " " : "") << values[k];
    }
    return out.str();
}

BSequence b_coeffs_from_poly(const IntPolynomial& phi, std::size_t order) {
    if (phi.degree() != static_cast<int>(order)) {
        throw std::logic_error("b_coeffs: polynomial degree does not match graph order");
    }
    BSequence out;
    out.order = order;
    for (std::size_t k = 0; k <= order; ++k) {
        // a_k multiplies x^{n-k}.
        BigInt a = phi.coefficient(order - k);
        if (k % 2 == 1) {
            if (a != 0) {
                throw std::logic_error("b_coeffs: odd coefficient a_" + std::to_string(k) + " is nonzero");
            }
            continue;
        }
        const bool negative_expected = (k / 2) % 2 == 1;
        if ((negative_expected && a > 0) || (!negative_expected && a < 0)) {
            throw std::logic_error("b_coeffs: sign pattern violated at a_" + std::to_string(k));
        }
        out.values.push_back(abs(a));
    }
    return out;
}

BSequence b_coeffs(const Graph& g) {
    if (!is_bipartite(g)) {
        throw NotBipartiteError("b_coeffs: graph is not bipartite");
    }
    return b_coeffs_from_poly(char_poly(g), g.order());
}

std::string to_string(QuasiOrder q) {
    switch (q) {
    case QuasiOrder::Equal:
        return "equal";
    case QuasiOrder::StrictlyLess:
        return "less";
    case QuasiOrder::StrictlyGreater:
        return "greater";
    case QuasiOrder::Incomparable:
        return "incomparable";
    }
    return "?";
}

QuasiOrder quasi_compare(const BSequence& lhs, const BSequence& rhs) {
    bool some_less = false;
    bool some_greater = false;
    const std::size_t len = std::max(lhs.values.size(), rhs.values.size());
    for (std::size_t k = 0; k < len; ++k) {
        BigInt a = lhs.at(k);
        BigInt b = rhs.at(k);
        some_less = some_less || a < b;
        some_greater = some_greater || a > b;
    }
    if (some_less && some_greater) {
        return QuasiOrder::Incomparable;
    }
    if (some_less) {
        return QuasiOrder::StrictlyLess;
    }
    if (some_greater) {
        return QuasiOrder::StrictlyGreater;
    }
    return QuasiOrder::Equal;
}

QuasiOrder quasi_compare(const Graph& lhs, const Graph& rhs) { return quasi_compare(b_coeffs(lhs), b_coeffs(rhs)); }

PolynomialIdentity coalescence_identity(const Graph& g, Vertex u, const Graph& h, Vertex v) {
    auto joined = coalesce(g, u, h, v);
    const IntPolynomial phi_g = char_poly(g);
    const IntPolynomial phi_h = char_poly(h);
    const IntPolynomial phi_g_u = char_poly(delete_vertex(g, u).graph);
    const IntPolynomial phi_h_v = char_poly(delete_vertex(h, v).graph);
    const IntPolynomial x = IntPolynomial::monomial(1, 1);

    PolynomialIdentity out;
    out.lhs = char_poly(joined.graph);
    out.rhs = phi_g * phi_h_v + phi_g_u * phi_h - x * phi_g_u * phi_h_v;
    return out;
}

bool verify_coalescence_identity(const Graph& g, Vertex u, const Graph& h, Vertex v) {
    return coalescence_identity(g, u, h, v).holds();
}

std::vector<std::vector<Vertex>> cycles_through_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.a, e.b)) {
        throw GraphError("cycles_through_edge: edge not in graph");
    }
    if (g.order() > kMaxCycleEnumerationOrder) {
        throw std::length_error("cycles_through_edge: graph order " + std::to_string(g.order()) +
                                " exceeds enumeration guard " + std::to_string(kMaxCycleEnumerationOrder));
    }
    std::vector<std::vector<Vertex>> cycles;
    std::vector<bool> on_path(g.order(), false);
    std::vector<Vertex> path{e.a};
    on_path[e.a] = true;

    std::function<void(Vertex)> extend = [&](Vertex x) {
        for (Vertex y : g.neighbors(x)) {
            if (x == e.a && y == e.b) {
                continue; // the edge itself
            }
            if (y == e.b) {
                path.push_back(y);
                cycles.push_back(path);
                path.pop_back();
                continue;
            }
            if (on_path[y]) {
                continue;
            }
            on_path[y] = true;
            path.push_back(y);
            extend(y);
            path.pop_back();
            on_path[y] = false;
        }
    };
    extend(e.a);
    return cycles;
}

PolynomialIdentity edge_recursion_identity(const Graph& g, Edge e) {
    auto cycles = cycles_through_edge(g, e);
    const Edge removed_edge[] = {e};
    const Vertex removed_ends[] = {e.a, e.b};

    PolynomialIdentity out;
    out.lhs = char_poly(g);
    out.rhs = char_poly(delete_edges(g, removed_edge)) - char_poly(delete_vertices(g, removed_ends).graph);
    for (const auto& cycle : cycles) {
        out.rhs -= char_poly(delete_vertices(g, cycle).graph) * BigInt(2);
    }
    return out;
}

bool verify_edge_recursion(const Graph& g, Edge e) { return edge_recursion_identity(g, e).holds(); }

} // namespace venergy
