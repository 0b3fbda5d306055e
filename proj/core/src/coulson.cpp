#include "venergy/coulson.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "venergy/charpoly.hpp"
#include "venergy/spectral.hpp"

namespace venergy {
namespace {

using cplx = std::complex<double>;

std::vector<double> to_doubles(const IntPolynomial& p) {
    std::vector<double> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        out.push_back(c.convert_to<double>());
    }
    return out;
}

// sum_k c_k z^k
cplx horner(const std::vector<double>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

// sum_k c_k z^(top - k); the polynomial divided by z^top, evaluated at 1/z.
cplx horner_reversed(const std::vector<double>& c, std::size_t top, cplx w) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k <= top; ++k) {
        acc = acc * w + (k < c.size() ? c[k] : 0.0);
    }
    return acc;
}

} // namespace

CoulsonIntegrand::CoulsonIntegrand(const Graph& g, Vertex i) {
    if (i >= g.order()) {
        throw GraphError("coulson: vertex out of range");
    }
    const IntPolynomial phi = char_poly(g);
    const IntPolynomial phi_minus = char_poly(delete_vertex(g, i).graph);
    const std::size_t m = phi.x_adic_valuation();
    IntPolynomial raw_num = phi - IntPolynomial::monomial(1, 1) * phi_minus;
    numerator_ = raw_num.divide_by_x_power(m);
    denominator_ = phi.divide_by_x_power(m);
    num_ = to_doubles(numerator_);
    den_ = to_doubles(denominator_);
    real_valued_ = is_bipartite(g);
}

std::complex<double> CoulsonIntegrand::operator()(double x) const {
    const cplx ix(0.0, x);
    if (std::abs(x) <= 1.0) {
        return horner(num_, ix) / horner(den_, ix);
    }
    const std::size_t top = den_.size() - 1;
    const cplx w = 1.0 / ix;
    return horner_reversed(num_, top, w) / horner_reversed(den_, top, w);
}

double CoulsonIntegrand::transformed(double t) const {
    const double x = std::tan(t);
    const double c = std::cos(t);
    const cplx f = (*this)(x);
    if (real_valued_ && std::abs(f.imag()) > 1e-9 * std::max(1.0, std::abs(f.real()))) {
        throw std::logic_error("coulson: imaginary residual " + std::to_string(f.imag()) + " at x=" +
                               std::to_string(x));
    }
    return f.real() / (c * c);
}

namespace {

class AdaptiveSimpson {
public:
    AdaptiveSimpson(const CoulsonIntegrand& f, int max_depth, double tol_floor)
        : f_(f), max_depth_(max_depth), tol_floor_(tol_floor) {}

    double panel(double a, double b, double tol) {
        const double fa = f_.transformed(a);
        const double fb = f_.transformed(b);
        const double m = 0.5 * (a + b);
        const double fm = f_.transformed(m);
        return refine(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 0);
    }

private:
    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f_.transformed(lm);
        const double frm = f_.transformed(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        if (depth >= max_depth_) {
            throw ConvergenceError("coulson: adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
                                   std::to_string(b) + "] at depth " + std::to_string(depth));
        }
        const double half = std::max(0.5 * tol, tol_floor_);
        return refine(a, m, fa, flm, fm, left, half, depth + 1) + refine(m, b, fm, frm, fb, right, half, depth + 1);
    }

    const CoulsonIntegrand& f_;
    int max_depth_;
    // Below this the error test only sees rounding noise.
    double tol_floor_;
};

} // namespace

double coulson_vertex_energy(const Graph& g, Vertex i, const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || cfg.max_depth < 1) {
        throw std::invalid_argument("coulson: rel_tol must be > 0 and max_depth >= 1");
    }
    const CoulsonIntegrand f(g, i);
    const double upper = std::numbers::pi / 2.0;
    constexpr int panels = 16;
    const double width = upper / panels;

    // Composite Simpson pass to set the absolute error scale.
    double coarse = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = k * width;
        const double b = (k + 1 == panels) ? upper : a + width;
        coarse += (b - a) / 6.0 * (f.transformed(a) + 4.0 * f.transformed(0.5 * (a + b)) + f.transformed(b));
    }
    const double scale = std::max(1.0, std::abs(coarse));
    const double tol = cfg.rel_tol * scale / panels;

    AdaptiveSimpson simpson(f, cfg.max_depth, 64.0 * std::numeric_limits<double>::epsilon() * scale / panels);
    double integral = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = k * width;
        const double b = (k + 1 == panels) ? upper : a + width;
        integral += simpson.panel(a, b, tol);
    }
    return 2.0 * integral / std::numbers::pi;
}

std::vector<double> coulson_vertex_energies(const Graph& g, const QuadratureConfig& cfg) {
    std::vector<double> out(g.order());
    for (Vertex i = 0; i < g.order(); ++i) {
        out[i] = coulson_vertex_energy(g, i, cfg);
    }
    return out;
}

} // namespace venergy
