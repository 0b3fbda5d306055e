#include "venergy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace venergy {

Matrix Matrix::identity(std::size_t n) {
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw std::invalid_argument("Matrix product: dimension mismatch");
    }
    const std::size_t n = lhs.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double a = lhs(i, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

Matrix adjacency_matrix(const Graph& g) {
    Matrix a(g.order());
    for (const Edge& e : g.edges()) {
        a(e.a, e.b) = 1.0;
        a(e.b, e.a) = 1.0;
    }
    return a;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            sum += 2.0 * a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Zero a(p,q) with a plane rotation, accumulating it into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const std::size_t n = a.dim();

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) {
            continue;
        }
        const double arp = a(r, p);
        const double arq = a(r, q);
        a(r, p) = a(p, r) = c * arp - s * arq;
        a(r, q) = a(q, r) = s * arp + c * arq;
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double vrp = v(r, p);
        const double vrq = v(r, q);
        v(r, p) = c * vrp - s * vrq;
        v(r, q) = s * vrp + c * vrq;
    }
}

} // namespace

Spectrum eigen_sym(const Matrix& symmetric, const JacobiOptions& options) {
    const std::size_t n = symmetric.dim();
    Matrix a = symmetric;
    Matrix v = Matrix::identity(n);

    int sweeps = 0;
    while (off_diagonal_norm(a) > options.off_diagonal_tol) {
        if (sweeps == options.max_sweeps) {
            throw ConvergenceError("eigen_sym: no convergence after " + std::to_string(sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) != 0.0) {
                    rotate(a, v, p, q);
                }
            }
        }
        ++sweeps;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    Spectrum out;
    out.sweeps = sweeps;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.eigenvalues[j] = a(src, src);
        double sign = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            if (std::abs(v(r, src)) > 1e-10) {
                sign = v(r, src) > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, j) = sign * v(r, src);
        }
    }
    return out;
}

Spectrum eigen_sym(const Graph& g, const JacobiOptions& options) { return eigen_sym(adjacency_matrix(g), options); }

WeightMatrix::WeightMatrix(const Spectrum& spectrum) : p_(spectrum.dim()) {
    for (std::size_t i = 0; i < p_.dim(); ++i) {
        for (std::size_t j = 0; j < p_.dim(); ++j) {
            const double u = spectrum.eigenvectors(i, j);
            p_(i, j) = u * u;
        }
    }
}

double WeightMatrix::row_sum(std::size_t i) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < p_.dim(); ++j) {
        sum += p_(i, j);
    }
    return sum;
}

double WeightMatrix::column_sum(std::size_t j) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < p_.dim(); ++i) {
        sum += p_(i, j);
    }
    return sum;
}

double WeightMatrix::stochastic_defect() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < p_.dim(); ++k) {
        worst = std::max({worst, std::abs(row_sum(k) - 1.0), std::abs(column_sum(k) - 1.0)});
    }
    return worst;
}

WeightMatrix weight_matrix(const Spectrum& spectrum) { return WeightMatrix(spectrum); }
WeightMatrix weight_matrix(const Graph& g) { return WeightMatrix(eigen_sym(g)); }

double graph_energy(const Spectrum& spectrum) {
    double sum = 0.0;
    for (double lambda : spectrum.eigenvalues) {
        sum += std::abs(lambda);
    }
    return sum;
}

double graph_energy(const Graph& g) { return graph_energy(eigen_sym(g)); }

double vertex_energy(const Spectrum& spectrum, Vertex i) {
    if (i >= spectrum.dim()) {
        throw GraphError("vertex_energy: vertex out of range");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < spectrum.dim(); ++j) {
        const double u = spectrum.eigenvectors(i, j);
        sum += u * u * std::abs(spectrum.eigenvalues[j]);
    }
    return sum;
}

double vertex_energy(const Graph& g, Vertex i) { return vertex_energy(eigen_sym(g), i); }

std::vector<double> vertex_energies(const Spectrum& spectrum) {
    std::vector<double> out(spectrum.dim());
    for (Vertex i = 0; i < out.size(); ++i) {
        out[i] = vertex_energy(spectrum, i);
    }
    return out;
}

std::vector<double> vertex_energies(const Graph& g) { return vertex_energies(eigen_sym(g)); }

Matrix abs_adjacency(const Spectrum& spectrum) {
    const std::size_t n = spectrum.dim();
    Matrix scaled = spectrum.eigenvectors;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) *= std::abs(spectrum.eigenvalues[j]);
        }
    }
    return scaled * spectrum.eigenvectors.transposed();
}

std::vector<EigenvalueWeight> aggregated_weights(const Spectrum& spectrum, Vertex i, double cluster_tol) {
    if (i >= spectrum.dim()) {
        throw GraphError("aggregated_weights: vertex out of range");
    }
    std::vector<EigenvalueWeight> out;
    for (std::size_t j = 0; j < spectrum.dim(); ++j) {
        const double lambda = spectrum.eigenvalues[j];
        const double u = spectrum.eigenvectors(i, j);
        // eigenvalues are sorted, so a cluster is a run of neighbors
        if (!out.empty() && std::abs(out.back().eigenvalue - lambda) <= cluster_tol) {
            auto& cluster = out.back();
            cluster.eigenvalue = (cluster.eigenvalue * cluster.multiplicity + lambda) / (cluster.multiplicity + 1);
            cluster.weight += u * u;
            ++cluster.multiplicity;
        } else {
            out.push_back({lambda, u * u, 1});
        }
    }
    return out;
}

double spectral_moment(const Spectrum& spectrum, Vertex i, unsigned k) {
    if (i >= spectrum.dim()) {
        throw GraphError("spectral_moment: vertex out of range");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < spectrum.dim(); ++j) {
        const double u = spectrum.eigenvectors(i, j);
        sum += u * u * std::pow(spectrum.eigenvalues[j], static_cast<double>(k));
    }
    return sum;
}

BigInt walk_count(const Graph& g, Vertex i, unsigned k) {
    if (i >= g.order()) {
        throw GraphError("walk_count: vertex out of range");
    }
    if (k > kMaxWalkLength) {
        throw std::length_error("walk_count: walk length " + std::to_string(k) + " exceeds guard " +
                                std::to_string(kMaxWalkLength));
    }
    // x <- A x starting from e_i; (A^k)_ii = x_i.
    std::vector<BigInt> x(g.order());
    x[i] = 1;
    std::vector<BigInt> next(g.order());
    for (unsigned step = 0; step < k; ++step) {
        for (Vertex r = 0; r < g.order(); ++r) {
            next[r] = 0;
            for (Vertex s : g.neighbors(r)) {
                next[r] += x[s];
            }
        }
        x.swap(next);
    }
    return x[i];
}

} // namespace venergy
