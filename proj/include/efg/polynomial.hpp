#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace efg
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// Dense univariate polynomial with integer coefficients, constant term
    /// first. Always trimmed: the zero polynomial has no coefficients.
    class IntPolynomial
    {
    public:
        IntPolynomial() = default;
        explicit IntPolynomial(std::vector<BigInt> coefficients);

        static auto constant(const BigInt & c) -> IntPolynomial;
        /// The polynomial a*x + b.
        static auto linear(const BigInt & a, const BigInt & b) -> IntPolynomial;

        auto degree() const -> int { return static_cast<int>(_c.size()) - 1; }
        auto is_zero() const -> bool { return _c.empty(); }
        auto coefficient(int i) const -> BigInt;
        auto coefficients() const -> const std::vector<BigInt> & { return _c; }

        auto evaluate(const BigInt & x) const -> BigInt;
        auto derivative() const -> IntPolynomial;

        /// Divides by (x - root); the remainder must be zero.
        auto divided_by_root(const BigInt & root) const -> IntPolynomial;

        auto operator+(const IntPolynomial & o) const -> IntPolynomial;
        auto operator-(const IntPolynomial & o) const -> IntPolynomial;
        auto operator*(const IntPolynomial & o) const -> IntPolynomial;
        auto operator-() const -> IntPolynomial;
        auto operator==(const IntPolynomial & o) const -> bool = default;

        /// Decimal coefficients, constant term first, comma separated.
        auto to_text() const -> std::string;
        static auto from_text(std::string_view text) -> IntPolynomial;

    private:
        std::vector<BigInt> _c;
        auto trim() -> void;
    };

    /// Polynomial in x and y, dense in both degrees.
    class BivariatePolynomial
    {
    public:
        BivariatePolynomial() = default;

        static auto one() -> BivariatePolynomial;
        static auto x_power(int a) -> BivariatePolynomial;
        static auto y_power(int b) -> BivariatePolynomial;
        static auto monomial(int a, int b, const BigInt & c) -> BivariatePolynomial;

        auto coefficient(int a, int b) const -> BigInt;
        auto x_degree() const -> int;
        auto y_degree() const -> int;
        auto is_zero() const -> bool { return _c.empty(); }

        struct Term
        {
            int x_power;
            int y_power;
            BigInt coefficient;
        };

        /// Nonzero terms ordered by (x power, y power).
        auto terms() const -> std::vector<Term>;

        auto evaluate(const BigInt & x, const BigInt & y) const -> BigInt;

        auto operator+(const BivariatePolynomial & o) const -> BivariatePolynomial;
        auto operator*(const BivariatePolynomial & o) const -> BivariatePolynomial;
        auto operator+=(const BivariatePolynomial & o) -> BivariatePolynomial &;
        auto operator==(const BivariatePolynomial & o) const -> bool = default;

        /// One `x^a y^b: c` line per nonzero term, ordered by (a, b).
        auto to_text() const -> std::string;

    private:
        // _c[a][b] is the coefficient of x^a y^b.
        std::vector<std::vector<BigInt>> _c;
        auto trim() -> void;
        auto at(int a, int b) -> BigInt &;
    };

    /// Greatest common divisor over the rationals, scaled to a primitive
    /// integer polynomial with positive leading coefficient.
    auto polynomial_gcd(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial;

    auto to_text(const Rational & q) -> std::string;
}
