#include "permfix/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permfix {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational denominator must be nonzero");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("expected rational literal [-]digits[/digits], got '" +
                                    std::string(text) + "'");
    };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    const auto digits = [&](std::string_view s) {
        if (s.empty()) fail();
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        }
        return BigInt(std::string(s));
    };
    BigInt num;
    BigInt den = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = digits(rest.substr(0, slash));
        den = digits(rest.substr(slash + 1));
        if (den == 0) fail();
    } else {
        num = digits(rest);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial requires n >= 0");
    }
    BigInt product = 1;
    for (int i = 2; i <= n; ++i) product *= i;
    return product;
}

BigInt binomial(int n, long long m) {
    if (n < 0) {
        throw std::invalid_argument("binomial requires n >= 0");
    }
    if (m < 0 || m > n) return 0;
    // Multiplicative form keeps every intermediate value integral.
    m = std::min<long long>(m, n - m);
    BigInt result = 1;
    for (long long i = 1; i <= m; ++i) {
        result *= n - m + i;
        result /= i;
    }
    return result;
}

BigInt falling_factorial(int m, int k) {
    if (m < 0 || k < 0) {
        throw std::invalid_argument("falling_factorial requires m, k >= 0");
    }
    BigInt product = 1;
    for (int i = 0; i < k; ++i) product *= m - i;
    return product;
}

}  // namespace permfix
