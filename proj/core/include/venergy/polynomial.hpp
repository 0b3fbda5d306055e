#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace venergy {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with arbitrary-precision integer coefficients.
// coefficients()[k] multiplies x^k; the top coefficient is never zero and the
// zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(std::size_t power) const;

    // Largest k with x^k dividing the polynomial; 0 for the zero polynomial.
    std::size_t x_adic_valuation() const;
    // Exact division by x^k. Throws std::domain_error if x^k does not divide.
    IntPolynomial divide_by_x_power(std::size_t k) const;

    BigInt evaluate(const BigInt& x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& scalar);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
    friend IntPolynomial operator*(IntPolynomial lhs, const BigInt& scalar) { return lhs *= scalar; }
    friend IntPolynomial operator*(const BigInt& scalar, IntPolynomial rhs) { return rhs *= scalar; }
    IntPolynomial operator-() const;

    IntPolynomial pow(unsigned exponent) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // "c0 c1 ... cd", ascending powers; "0" for the zero polynomial.
    std::string to_string() const;
    static IntPolynomial parse(std::string_view text);

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& out, const IntPolynomial& p);

} // namespace venergy
