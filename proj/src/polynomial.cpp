#include <efg/polynomial.hpp>
#include <efg/error.hpp>

#include <algorithm>
#include <sstream>

namespace efg
{
    IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) :
        _c(std::move(coefficients))
    {
        trim();
    }

    auto IntPolynomial::constant(const BigInt & c) -> IntPolynomial
    {
        return IntPolynomial(std::vector<BigInt>{c});
    }

    auto IntPolynomial::linear(const BigInt & a, const BigInt & b) -> IntPolynomial
    {
        return IntPolynomial(std::vector<BigInt>{b, a});
    }

    auto IntPolynomial::trim() -> void
    {
        while (! _c.empty() && _c.back() == 0)
            _c.pop_back();
    }

    auto IntPolynomial::coefficient(int i) const -> BigInt
    {
        if (i < 0 || i >= static_cast<int>(_c.size()))
            return 0;
        return _c[i];
    }

    auto IntPolynomial::evaluate(const BigInt & x) const -> BigInt
    {
        BigInt result = 0;
        for (auto it = _c.rbegin(); it != _c.rend(); ++it)
            result = result * x + *it;
        return result;
    }

    auto IntPolynomial::derivative() const -> IntPolynomial
    {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < _c.size(); ++i)
            d.push_back(_c[i] * static_cast<int>(i));
        return IntPolynomial(std::move(d));
    }

    auto IntPolynomial::divided_by_root(const BigInt & root) const -> IntPolynomial
    {
        if (_c.empty())
            return {};
        // Synthetic division from the top coefficient down.
        std::vector<BigInt> q(_c.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = _c.size(); i-- > 1;) {
            carry = _c[i] + carry * root;
            q[i - 1] = carry;
        }
        if (_c[0] + carry * root != 0)
            throw Error("not a root");
        return IntPolynomial(std::move(q));
    }

    auto IntPolynomial::operator+(const IntPolynomial & o) const -> IntPolynomial
    {
        std::vector<BigInt> r(std::max(_c.size(), o._c.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = coefficient(static_cast<int>(i)) + o.coefficient(static_cast<int>(i));
        return IntPolynomial(std::move(r));
    }

    auto IntPolynomial::operator-() const -> IntPolynomial
    {
        std::vector<BigInt> r(_c);
        for (auto & c : r)
            c = -c;
        return IntPolynomial(std::move(r));
    }

    auto IntPolynomial::operator-(const IntPolynomial & o) const -> IntPolynomial
    {
        return *this + (-o);
    }

    auto IntPolynomial::operator*(const IntPolynomial & o) const -> IntPolynomial
    {
        if (_c.empty() || o._c.empty())
            return {};
        std::vector<BigInt> r(_c.size() + o._c.size() - 1);
        for (std::size_t i = 0; i < _c.size(); ++i)
            for (std::size_t j = 0; j < o._c.size(); ++j)
                r[i + j] += _c[i] * o._c[j];
        return IntPolynomial(std::move(r));
    }

    auto IntPolynomial::to_text() const -> std::string
    {
        if (_c.empty())
            return "0";
        std::ostringstream out;
        for (std::size_t i = 0; i < _c.size(); ++i) {
            if (i)
                out << ',';
            out << _c[i];
        }
        return out.str();
    }

    auto IntPolynomial::from_text(std::string_view text) -> IntPolynomial
    {
        std::vector<BigInt> c;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto piece = std::string(text.substr(start, end - start));
            if (piece.empty())
                throw ParseError("empty coefficient", start);
            try {
                c.emplace_back(piece);
            }
            catch (const std::exception &) {
                throw ParseError("bad coefficient '" + piece + "'", start);
            }
            start = end + 1;
        }
        return IntPolynomial(std::move(c));
    }

    auto BivariatePolynomial::one() -> BivariatePolynomial
    {
        return monomial(0, 0, 1);
    }

    auto BivariatePolynomial::x_power(int a) -> BivariatePolynomial
    {
        return monomial(a, 0, 1);
    }

    auto BivariatePolynomial::y_power(int b) -> BivariatePolynomial
    {
        return monomial(0, b, 1);
    }

    auto BivariatePolynomial::monomial(int a, int b, const BigInt & c) -> BivariatePolynomial
    {
        BivariatePolynomial p;
        p.at(a, b) = c;
        p.trim();
        return p;
    }

    auto BivariatePolynomial::at(int a, int b) -> BigInt &
    {
        if (static_cast<int>(_c.size()) <= a)
            _c.resize(a + 1);
        if (static_cast<int>(_c[a].size()) <= b)
            _c[a].resize(b + 1);
        return _c[a][b];
    }

    auto BivariatePolynomial::trim() -> void
    {
        for (auto & row : _c)
            while (! row.empty() && row.back() == 0)
                row.pop_back();
        while (! _c.empty() && _c.back().empty())
            _c.pop_back();
    }

    auto BivariatePolynomial::coefficient(int a, int b) const -> BigInt
    {
        if (a < 0 || b < 0 || a >= static_cast<int>(_c.size()) || b >= static_cast<int>(_c[a].size()))
            return 0;
        return _c[a][b];
    }

    auto BivariatePolynomial::x_degree() const -> int
    {
        return static_cast<int>(_c.size()) - 1;
    }

    auto BivariatePolynomial::y_degree() const -> int
    {
        int d = -1;
        for (const auto & row : _c)
            d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }

    auto BivariatePolynomial::terms() const -> std::vector<Term>
    {
        std::vector<Term> result;
        for (std::size_t a = 0; a < _c.size(); ++a)
            for (std::size_t b = 0; b < _c[a].size(); ++b)
                if (_c[a][b] != 0)
                    result.push_back({static_cast<int>(a), static_cast<int>(b), _c[a][b]});
        return result;
    }

    auto BivariatePolynomial::evaluate(const BigInt & x, const BigInt & y) const -> BigInt
    {
        BigInt result = 0;
        for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
            BigInt row = 0;
            for (auto jt = it->rbegin(); jt != it->rend(); ++jt)
                row = row * y + *jt;
            result = result * x + row;
        }
        return result;
    }

    auto BivariatePolynomial::operator+=(const BivariatePolynomial & o) -> BivariatePolynomial &
    {
        if (_c.size() < o._c.size())
            _c.resize(o._c.size());
        for (std::size_t a = 0; a < o._c.size(); ++a) {
            if (_c[a].size() < o._c[a].size())
                _c[a].resize(o._c[a].size());
            for (std::size_t b = 0; b < o._c[a].size(); ++b)
                _c[a][b] += o._c[a][b];
        }
        trim();
        return *this;
    }

    auto BivariatePolynomial::operator+(const BivariatePolynomial & o) const -> BivariatePolynomial
    {
        BivariatePolynomial r = *this;
        r += o;
        return r;
    }

    auto BivariatePolynomial::operator*(const BivariatePolynomial & o) const -> BivariatePolynomial
    {
        BivariatePolynomial r;
        if (_c.empty() || o._c.empty())
            return r;
        r._c.resize(_c.size() + o._c.size() - 1);
        for (std::size_t a1 = 0; a1 < _c.size(); ++a1)
            for (std::size_t a2 = 0; a2 < o._c.size(); ++a2) {
                if (_c[a1].empty() || o._c[a2].empty())
                    continue;
                auto & row = r._c[a1 + a2];
                std::size_t width = _c[a1].size() + o._c[a2].size() - 1;
                if (row.size() < width)
                    row.resize(width);
                for (std::size_t b1 = 0; b1 < _c[a1].size(); ++b1) {
                    if (_c[a1][b1] == 0)
                        continue;
                    for (std::size_t b2 = 0; b2 < o._c[a2].size(); ++b2)
                        row[b1 + b2] += _c[a1][b1] * o._c[a2][b2];
                }
            }
        r.trim();
        return r;
    }

    auto BivariatePolynomial::to_text() const -> std::string
    {
        std::ostringstream out;
        for (const auto & t : terms())
            out << "x^" << t.x_power << " y^" << t.y_power << ": " << t.coefficient << '\n';
        return out.str();
    }

    namespace
    {
        using RationalPoly = std::vector<Rational>;

        auto trimmed(RationalPoly p) -> RationalPoly
        {
            while (! p.empty() && p.back() == 0)
                p.pop_back();
            return p;
        }

        auto remainder(RationalPoly a, const RationalPoly & b) -> RationalPoly
        {
            a = trimmed(std::move(a));
            while (a.size() >= b.size() && ! a.empty()) {
                Rational factor = a.back() / b.back();
                std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[shift + i] -= factor * b[i];
                a = trimmed(std::move(a));
            }
            return a;
        }
    }

    auto polynomial_gcd(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial
    {
        RationalPoly x, y;
        for (const auto & c : a.coefficients())
            x.emplace_back(c);
        for (const auto & c : b.coefficients())
            y.emplace_back(c);
        x = trimmed(std::move(x));
        y = trimmed(std::move(y));
        while (! y.empty()) {
            auto r = remainder(x, y);
            x = std::move(y);
            y = std::move(r);
        }
        if (x.empty())
            return {};

        // Clear denominators, then divide out the content.
        BigInt lcm = 1;
        for (const auto & c : x) {
            BigInt d = boost::multiprecision::denominator(c);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<BigInt> coeffs;
        BigInt content = 0;
        for (const auto & c : x) {
            BigInt v = boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c));
            coeffs.push_back(v);
            content = boost::multiprecision::gcd(content, v);
        }
        if (coeffs.back() < 0)
            content = -content;
        for (auto & c : coeffs)
            c /= content;
        return IntPolynomial(std::move(coeffs));
    }

    auto to_text(const Rational & q) -> std::string
    {
        std::ostringstream out;
        out << boost::multiprecision::numerator(q);
        if (boost::multiprecision::denominator(q) != 1)
            out << '/' << boost::multiprecision::denominator(q);
        return out.str();
    }
}
