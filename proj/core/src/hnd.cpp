#include "venergy/hnd.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "venergy/charpoly.hpp"
#include "venergy/spectral.hpp"

namespace venergy {

HndInstance hnd_build(std::size_t n, std::size_t d) {
    if (n == 0 || d == 0) {
        throw std::invalid_argument("hnd_build: n and d must be >= 1");
    }
    HndInstance inst;
    inst.n = n;
    inst.d = d;
    inst.graph = path_graph(2);
    const Graph star = star_graph(d + 2);
    for (std::size_t k = 0; k < n; ++k) {
        inst.graph = coalesce(inst.graph, inst.v, star, 1).graph;
    }
    return inst;
}

IntPolynomial hnd_char_poly_closed_form(std::size_t n, std::size_t d) {
    const BigInt dd(d);
    const IntPolynomial x_power = IntPolynomial::monomial(1, n * (d - 1));
    const IntPolynomial quadratic(std::vector<BigInt>{-dd, 0, 1});
    const IntPolynomial quartic(std::vector<BigInt>{dd, 0, -BigInt(n + d + 1), 0, 1});
    return x_power * quadratic.pow(static_cast<unsigned>(n - 1)) * quartic;
}

HndClosedForm hnd_closed_form(std::size_t n, std::size_t d) {
    const double nn = static_cast<double>(n);
    const double dd = static_cast<double>(d);
    const double s = nn + dd + 1.0;
    const double root = std::sqrt(s * s - 4.0 * dd);
    const double sd = std::sqrt(dd);

    HndClosedForm out;
    out.lambda_big = std::sqrt((s + root) / 2.0);
    out.lambda_small = std::sqrt((s - root) / 2.0);
    out.weight_big = (root - nn - dd + 1.0) / (4.0 * root);
    out.weight_small = (root + nn + dd - 1.0) / (4.0 * root);
    // sum over the quartic roots of weight * |lambda|, simplified
    out.energy_u = (root * (sd + 1.0) + nn + 1.0 - dd + sd * (nn + dd - 1.0)) /
                   (std::sqrt(2.0) * root * std::sqrt(root + s));
    return out;
}

double HndReport::energy_error() const { return std::abs(energy_spectral - energy_closed); }

bool HndReport::passed() const {
    return polynomial_match && energy_error() <= tol && weight_error <= tol && null_weight <= 1e-9;
}

HndReport hnd_verify(const HndInstance& inst, double tol) {
    HndReport report;
    report.n = inst.n;
    report.d = inst.d;
    report.tol = tol;
    report.polynomial_match = char_poly(inst.graph) == hnd_char_poly_closed_form(inst.n, inst.d);

    const auto closed = hnd_closed_form(inst.n, inst.d);
    const auto spectrum = eigen_sym(inst.graph);
    report.energy_spectral = vertex_energy(spectrum, inst.u);
    report.energy_closed = closed.energy_u;

    constexpr double cluster_tol = 1e-6;
    const auto weights = aggregated_weights(spectrum, inst.u, cluster_tol);
    auto weight_at = [&](double lambda) -> std::optional<double> {
        for (const auto& w : weights) {
            if (std::abs(w.eigenvalue - lambda) <= cluster_tol) {
                return w.weight;
            }
        }
        return std::nullopt;
    };

    const std::pair<double, double> expected[] = {
        {closed.lambda_big, closed.weight_big},
        {-closed.lambda_big, closed.weight_big},
        {closed.lambda_small, closed.weight_small},
        {-closed.lambda_small, closed.weight_small},
    };
    for (const auto& [lambda, weight] : expected) {
        const auto found = weight_at(lambda);
        const double err = found ? std::abs(*found - weight) : std::numeric_limits<double>::infinity();
        report.weight_error = std::max(report.weight_error, err);
    }

    const double sd = std::sqrt(static_cast<double>(inst.d));
    for (double lambda : {0.0, sd, -sd}) {
        report.null_weight += weight_at(lambda).value_or(0.0);
    }
    return report;
}

std::vector<SeriesBoundRow> series_bound_check(std::span<const std::size_t> d_seq) {
    if (d_seq.empty()) {
        throw std::invalid_argument("series_bound_check: empty degree sequence");
    }
    constexpr Vertex v = 0;
    Graph current = path_graph(2);
    double bound = 1.0;
    std::vector<SeriesBoundRow> rows;
    for (std::size_t k = 0; k < d_seq.size(); ++k) {
        const std::size_t d = d_seq[k];
        if (d == 0) {
            throw std::invalid_argument("series_bound_check: degrees must be >= 1");
        }
        current = coalesce(current, v, star_graph(d + 2), 1).graph;
        bound += 1.0 / std::sqrt(static_cast<double>(d) + 1.0);
        rows.push_back({k + 1, d, vertex_energy(current, v), bound});
    }
    return rows;
}

} // namespace venergy
