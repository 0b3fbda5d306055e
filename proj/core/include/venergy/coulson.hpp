#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "venergy/graph.hpp"
#include "venergy/polynomial.hpp"

namespace venergy {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    int max_depth = 40;
};

// f(x) = 1 - i x phi(G - v_i; i x) / phi(G; i x), stored as the exact ratio
// R(ix)/D(ix) with R = (phi_G - x phi_{G-v_i}) / x^m and D = phi_G / x^m, where
// m is the multiplicity of the root 0 of phi_G. D(0) != 0, so f is finite at 0,
// and R carries the leading-order cancellation of 1 - (ratio) exactly.
class CoulsonIntegrand {
public:
    CoulsonIntegrand(const Graph& g, Vertex i);

    std::complex<double> operator()(double x) const;

    // Re f(tan t) / cos^2 t on [0, pi/2]; tends to deg(v_i) at pi/2.
    double transformed(double t) const;

    bool real_valued() const { return real_valued_; }
    const IntPolynomial& numerator() const { return numerator_; }
    const IntPolynomial& denominator() const { return denominator_; }

private:
    IntPolynomial numerator_;
    IntPolynomial denominator_;
    std::vector<double> num_;
    std::vector<double> den_;
    bool real_valued_ = false;
};

// (1/pi) * integral over R of Re f, computed as (2/pi) * integral of the
// transformed integrand over [0, pi/2] by adaptive Simpson.
// Throws ConvergenceError if a panel still fails the error test at max_depth,
// std::logic_error if f has a non-negligible imaginary part on a bipartite graph.
double coulson_vertex_energy(const Graph& g, Vertex i, const QuadratureConfig& cfg = {});

std::vector<double> coulson_vertex_energies(const Graph& g, const QuadratureConfig& cfg = {});

} // namespace venergy
