#include "venergy/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace venergy {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt{0};
}

std::size_t IntPolynomial::x_adic_valuation() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) {
        ++k;
    }
    return coeffs_.empty() ? 0 : k;
}

IntPolynomial IntPolynomial::divide_by_x_power(std::size_t k) const {
    if (k == 0 || is_zero()) {
        return *this;
    }
    if (x_adic_valuation() < k) {
        throw std::domain_error("divide_by_x_power: x^" + std::to_string(k) + " does not divide");
    }
    return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->convert_to<double>();
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out << (k ? " " : "") << coeffs_[k];
    }
    return out.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<BigInt> coeffs;
    std::string token;
    while (in >> token) {
        try {
            coeffs.emplace_back(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("IntPolynomial::parse: bad coefficient '" + token + "'");
        }
    }
    return IntPolynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& out, const IntPolynomial& p) { return out << p.to_string(); }

} // namespace venergy
