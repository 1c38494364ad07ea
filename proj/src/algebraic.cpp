#include <efg/algebraic.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>

namespace efg
{
    namespace
    {
        using IntMatrix = std::array<std::array<long long, max_order>, max_order>;

        auto faddeev_leverrier(const IntMatrix & a, int n) -> IntPolynomial
        {
            std::vector<BigInt> c(n + 1);
            c[n] = 1;
            // am holds A * M_k; M_1 = I so A * M_1 = A.
            std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n)), am(n, std::vector<BigInt>(n));
            for (int k = 1; k <= n; ++k) {
                // M_k = A M_{k-1} + c_{n-k+1} I
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        m[i][j] = (k == 1 ? BigInt(0) : am[i][j]) + (i == j ? c[n - k + 1] : BigInt(0));
                BigInt trace = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        BigInt s = 0;
                        for (int l = 0; l < n; ++l)
                            if (a[i][l])
                                s += a[i][l] * m[l][j];
                        am[i][j] = s;
                        if (i == j)
                            trace += s;
                    }
                c[n - k] = -trace / k;
            }
            return IntPolynomial(std::move(c));
        }

        auto adjacency(const Graph & g) -> IntMatrix
        {
            IntMatrix a{};
            for (int i = 0; i < g.order(); ++i)
                for (int j = 0; j < g.order(); ++j)
                    a[i][j] = g.adjacent(i, j) ? 1 : 0;
            return a;
        }

        auto laplacian(const Graph & g) -> IntMatrix
        {
            IntMatrix l{};
            for (int i = 0; i < g.order(); ++i)
                for (int j = 0; j < g.order(); ++j)
                    l[i][j] = i == j ? g.degree(i) : (g.adjacent(i, j) ? -1 : 0);
            return l;
        }
    }

    auto characteristic_polynomial(const Graph & g) -> IntPolynomial
    {
        return faddeev_leverrier(adjacency(g), g.order());
    }

    auto laplacian_polynomial(const Graph & g) -> IntPolynomial
    {
        return faddeev_leverrier(laplacian(g), g.order());
    }

    auto has_only_integer_roots(const IntPolynomial & p) -> bool
    {
        if (p.is_zero())
            return false;
        IntPolynomial rest = p;
        while (rest.degree() > 0 && rest.coefficient(0) == 0)
            rest = rest.divided_by_root(0);
        while (rest.degree() > 0) {
            // Any integer root divides the nonzero constant term.
            BigInt c0 = abs(rest.coefficient(0));
            bool found = false;
            for (BigInt d = 1; d * d <= c0 && ! found; ++d) {
                if (c0 % d != 0)
                    continue;
                for (const BigInt & cand : {d, BigInt(-d), BigInt(c0 / d), BigInt(-(c0 / d))})
                    if (rest.evaluate(cand) == 0) {
                        rest = rest.divided_by_root(cand);
                        found = true;
                        break;
                    }
            }
            if (! found)
                return false;
        }
        return true;
    }

    auto is_square_free(const IntPolynomial & p) -> bool
    {
        if (p.degree() <= 0)
            return true;
        return polynomial_gcd(p, p.derivative()).degree() == 0;
    }

    auto is_integral(const Graph & g) -> bool
    {
        return has_only_integer_roots(characteristic_polynomial(g));
    }

    auto simple_spectrum(const Graph & g) -> bool
    {
        return is_square_free(characteristic_polynomial(g));
    }

    auto spectral_gap(const Graph & g) -> double
    {
        int n = g.order();
        if (n < 2)
            return 0.0;
        Eigen::MatrixXd l(n, n);
        auto lap = laplacian(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                l(i, j) = static_cast<double>(lap[i][j]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
        return solver.eigenvalues()(1);
    }

    auto spanning_tree_count(const Graph & g) -> BigInt
    {
        int n = g.order() - 1;
        if (n <= 0)
            return 1;
        auto lap = laplacian(g);
        // Bareiss fraction-free elimination on L with row/column 0 removed.
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[i][j] = lap[i + 1][j + 1];
        BigInt previous = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (m[k][k] == 0) {
                int swap = -1;
                for (int r = k + 1; r < n; ++r)
                    if (m[r][k] != 0) {
                        swap = r;
                        break;
                    }
                if (swap < 0)
                    return 0;
                std::swap(m[k], m[swap]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            previous = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    auto chromatic_number(const IntPolynomial & chromatic) -> int
    {
        for (int k = 1; k <= std::max(1, chromatic.degree()); ++k)
            if (chromatic.evaluate(k) > 0)
                return k;
        throw Error("chromatic polynomial has no positive value");
    }

    auto chromatic_number(const Graph & g) -> int
    {
        return chromatic_number(chromatic_polynomial(g));
    }

    auto has_chromatic_gap(int chromatic, const Rational & fractional) -> bool
    {
        return fractional < Rational(chromatic);
    }

    auto spectral_summary(const Graph & g) -> SpectralSummary
    {
        SpectralSummary s;
        s.char_poly = characteristic_polynomial(g);
        s.laplacian_poly = laplacian_polynomial(g);
        s.is_integral = has_only_integer_roots(s.char_poly);
        s.simple_spectrum = is_square_free(s.char_poly);
        s.spectral_gap = spectral_gap(g);
        return s;
    }
}
