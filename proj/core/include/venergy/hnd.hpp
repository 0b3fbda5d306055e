#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "venergy/graph.hpp"
#include "venergy/polynomial.hpp"
#include "venergy/theorems.hpp"

namespace venergy {

// K2 = {v, u}, then n successive coalescences of S_{d+2} at one of its leaves
// onto the copy of v. Vertex v keeps index 0 and u keeps index 1.
struct HndInstance {
    std::size_t n = 0;
    std::size_t d = 0;
    Graph graph;
    Vertex v = 0;
    Vertex u = 1;
};

HndInstance hnd_build(std::size_t n, std::size_t d);

// x^{n(d-1)} (x^2 - d)^{n-1} (x^4 - (n+d+1) x^2 + d)
IntPolynomial hnd_char_poly_closed_form(std::size_t n, std::size_t d);

// Closed-form spectral data at u. With s = n+d+1 and D = sqrt(s^2 - 4d), the
// quartic factor has roots ±lambda_big = ±sqrt((s+D)/2) and ±lambda_small =
// ±sqrt((s-D)/2); u carries weight weight_big on each of ±lambda_big,
// weight_small on each of ±lambda_small, and nothing on 0 or ±sqrt(d).
struct HndClosedForm {
    double lambda_big = 0.0;
    double lambda_small = 0.0;
    double weight_big = 0.0;   // (D - n - d + 1) / (4D)
    double weight_small = 0.0; // (D + n + d - 1) / (4D)
    double energy_u = 0.0;
};

HndClosedForm hnd_closed_form(std::size_t n, std::size_t d);

struct HndReport {
    std::size_t n = 0;
    std::size_t d = 0;
    bool polynomial_match = false;
    double energy_spectral = 0.0;
    double energy_closed = 0.0;
    double weight_error = 0.0; // worst deviation over ±lambda_big, ±lambda_small
    double null_weight = 0.0;  // total weight of u on {0, ±sqrt(d)}
    double tol = 1e-8;

    double energy_error() const;
    bool passed() const;
};

HndReport hnd_verify(const HndInstance& inst, double tol = 1e-8);

// G_k = G_{k-1} ∘ S_{d_k+2} (leaf onto the copy of v), G_0 = K2. Checks
// E_{G_k}(v) <= 1 + sum_{i<=k} 1/sqrt(d_i + 1) at every prefix.
struct SeriesBoundRow {
    std::size_t step = 0;
    std::size_t d = 0;
    double energy = 0.0;
    double bound = 0.0;

    bool ok(double eps = kDefaultEpsilon) const { return energy <= bound + eps; }
};

std::vector<SeriesBoundRow> series_bound_check(std::span<const std::size_t> d_seq);

} // namespace venergy
