#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "venergy/graph.hpp"
#include "venergy/polynomial.hpp"

namespace venergy {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense row-major square matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    Matrix transposed() const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

Matrix adjacency_matrix(const Graph& g);

// Eigenvalues in descending order; column j of `eigenvectors` is the unit
// eigenvector for eigenvalues[j], with its first entry of magnitude > 1e-10
// made positive.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
    int sweeps = 0;

    std::size_t dim() const { return eigenvalues.size(); }
};

struct JacobiOptions {
    double off_diagonal_tol = 1e-12;
    int max_sweeps = 100;
};

// Cyclic Jacobi; throws ConvergenceError when max_sweeps is exhausted.
Spectrum eigen_sym(const Matrix& symmetric, const JacobiOptions& options = {});
Spectrum eigen_sym(const Graph& g, const JacobiOptions& options = {});

// p_ij = u_ij^2. Rows index vertices, columns index eigenvalue slots.
class WeightMatrix {
public:
    explicit WeightMatrix(const Spectrum& spectrum);

    std::size_t dim() const { return p_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return p_(i, j); }
    double row_sum(std::size_t i) const;
    double column_sum(std::size_t j) const;
    // max over rows and columns of |sum - 1|
    double stochastic_defect() const;

private:
    Matrix p_;
};

WeightMatrix weight_matrix(const Spectrum& spectrum);
WeightMatrix weight_matrix(const Graph& g);

double graph_energy(const Spectrum& spectrum);
double graph_energy(const Graph& g);

// sum_j p_ij |lambda_j|
double vertex_energy(const Spectrum& spectrum, Vertex i);
double vertex_energy(const Graph& g, Vertex i);
std::vector<double> vertex_energies(const Spectrum& spectrum);
std::vector<double> vertex_energies(const Graph& g);

// |A| = U diag(|lambda|) U^T, assembled as a full matrix product.
Matrix abs_adjacency(const Spectrum& spectrum);

// Weight of vertex i on each distinct eigenvalue; eigenvalues closer than
// cluster_tol are merged. Basis-independent even for repeated eigenvalues.
struct EigenvalueWeight {
    double eigenvalue = 0.0;
    double weight = 0.0;
    std::size_t multiplicity = 0;
};
std::vector<EigenvalueWeight> aggregated_weights(const Spectrum& spectrum, Vertex i, double cluster_tol = 1e-6);

// sum_j p_ij lambda_j^k
double spectral_moment(const Spectrum& spectrum, Vertex i, unsigned k);

inline constexpr unsigned kMaxWalkLength = 32;

// (A^k)_ii, exact. Throws std::length_error for k > kMaxWalkLength.
BigInt walk_count(const Graph& g, Vertex i, unsigned k);

} // namespace venergy
