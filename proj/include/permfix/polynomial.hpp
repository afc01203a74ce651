#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "permfix/rational.hpp"

namespace permfix {

// Dense univariate polynomial over Rational. coefficients()[i] is the
// coefficient of x^i; the highest stored coefficient is nonzero, and the zero
// polynomial stores nothing, so equality is plain coefficient comparison.
// Degrees in this project stay small (at most n + k), so density is free.
// Values are immutable in practice: every operation returns a fresh value.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational value);
    static Polynomial monomial(Rational coefficient, int exponent);
    // The polynomial x.
    static Polynomial variable();

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is "none", never -1.
    std::optional<int> degree() const;
    // Coefficient of x^i; zero beyond the degree.
    const Rational& coefficient(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Exact evaluation by Horner's rule.
    Rational evaluate(const Rational& x) const;

    // k-th derivative; k == 0 returns *this, k beyond the degree gives zero.
    Polynomial derivative(int k = 1) const;

    // The unique antiderivative vanishing at zero: result(0) == 0 and
    // result.derivative() == *this.
    Polynomial integral_from_zero() const;

    Polynomial pow(int exponent) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial p, const Rational& scalar) { return p *= scalar; }
    friend Polynomial operator*(const Rational& scalar, Polynomial p) { return p *= scalar; }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

    // Descending powers with explicit rational coefficients,
    // e.g. "1/3*x^3 - x" or "0".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

  private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace permfix
