#include "permfix/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace permfix {

namespace {
const Rational kZero = 0;
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(Rational value) {
    Polynomial p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

Polynomial Polynomial::monomial(Rational coefficient, int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("monomial exponent must be nonnegative");
    }
    Polynomial p;
    if (coefficient != 0) {
        p.coeffs_.assign(static_cast<size_t>(exponent) + 1, kZero);
        p.coeffs_.back() = std::move(coefficient);
    }
    return p;
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::coefficient(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative(int k) const {
    if (k < 0) {
        throw std::invalid_argument("derivative order must be nonnegative");
    }
    if (k == 0) return *this;
    if (static_cast<size_t>(k) >= coeffs_.size()) return Polynomial();
    std::vector<Rational> result(coeffs_.size() - static_cast<size_t>(k));
    for (size_t i = 0; i < result.size(); ++i) {
        // d^k/dx^k x^(i+k) = (i+k)(i+k-1)...(i+1) x^i
        result[i] = coeffs_[i + k] * Rational(falling_factorial(static_cast<int>(i) + k, k));
    }
    return Polynomial(std::move(result));
}

Polynomial Polynomial::integral_from_zero() const {
    if (coeffs_.empty()) return Polynomial();
    std::vector<Rational> result(coeffs_.size() + 1);
    result[0] = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        result[i + 1] = coeffs_[i] / Rational(static_cast<int>(i) + 1);
    }
    return Polynomial(std::move(result));
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) {
        throw std::invalid_argument("polynomial power must be nonnegative");
    }
    Polynomial result = constant(1);
    for (int i = 0; i < exponent; ++i) result *= *this;
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial result = *this;
    for (auto& c : result.coeffs_) c = -c;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), kZero);
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), kZero);
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> result(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            result[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(result));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = static_cast<int>(coeffs_.size()) - 1; e >= 0; --e) {
        const Rational& c = coeffs_[static_cast<size_t>(e)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (e == 0) {
            os << magnitude;
        } else {
            if (magnitude != 1) os << magnitude << "*";
            os << (e == 1 ? "x" : "x^" + std::to_string(e));
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace permfix
