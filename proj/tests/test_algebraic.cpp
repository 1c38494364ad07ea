#include <efg/algebraic.hpp>
#include <efg/canon.hpp>
#include <efg/enumerate.hpp>
#include <efg/structural.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>

using namespace efg;

namespace
{
    // Fractional chromatic number by enumerating every basic solution of the
    // covering LP  min sum x_I,  sum_{I ∋ v} x_I >= 1,  x >= 0.
    auto lp_by_vertices(const Graph & g) -> Rational
    {
        auto sets = maximal_independent_sets(g);
        int n = g.order(), m = static_cast<int>(sets.size());
        // Rows: n covering constraints then m non-negativity constraints.
        auto coefficient = [&](int row, int j) -> Rational {
            if (row < n)
                return (sets[j] >> row) & 1u ? 1 : 0;
            return row - n == j ? 1 : 0;
        };
        auto rhs = [&](int row) -> Rational { return row < n ? 1 : 0; };
        int rows = n + m;
        std::optional<Rational> best;
        std::vector<int> pick(m);
        std::function<void(int, int)> choose = [&](int start, int depth) {
            if (depth == m) {
                std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j < m; ++j)
                        a[i][j] = coefficient(pick[i], j);
                    a[i][m] = rhs(pick[i]);
                }
                for (int c = 0; c < m; ++c) {
                    int p = -1;
                    for (int r = c; r < m; ++r)
                        if (a[r][c] != 0) {
                            p = r;
                            break;
                        }
                    if (p < 0)
                        return;
                    std::swap(a[c], a[p]);
                    for (int r = 0; r < m; ++r)
                        if (r != c && a[r][c] != 0) {
                            Rational f = a[r][c] / a[c][c];
                            for (int k = c; k <= m; ++k)
                                a[r][k] -= f * a[c][k];
                        }
                }
                std::vector<Rational> x(m);
                for (int j = 0; j < m; ++j)
                    x[j] = a[j][m] / a[j][j];
                for (int r = 0; r < rows; ++r) {
                    Rational s = 0;
                    for (int j = 0; j < m; ++j)
                        s += coefficient(r, j) * x[j];
                    if (s < rhs(r))
                        return;
                }
                Rational total = 0;
                for (auto & v : x)
                    total += v;
                if (! best || total < *best)
                    best = total;
                return;
            }
            for (int r = start; r <= rows - (m - depth); ++r) {
                pick[depth] = r;
                choose(r + 1, depth + 1);
            }
        };
        choose(0, 0);
        return *best;
    }

    auto parse_rational(const std::string & s) -> Rational
    {
        auto slash = s.find('/');
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }
}

TEST_CASE("polynomial arithmetic and text")
{
    auto p = IntPolynomial::linear(1, -2) * IntPolynomial::linear(1, -2) * IntPolynomial::linear(1, 3);
    CHECK(p.to_text() == "12,-8,-1,1");
    CHECK(IntPolynomial::from_text("12,-8,-1,1") == p);
    CHECK(IntPolynomial().to_text() == "0");
    CHECK(p.evaluate(2) == 0);
    CHECK(has_only_integer_roots(p));
    CHECK_FALSE(is_square_free(p));
    CHECK(polynomial_gcd(p, p.derivative()) == IntPolynomial::linear(1, -2));
    CHECK_FALSE(has_only_integer_roots(IntPolynomial::from_text("-2,0,1")));
    CHECK_THROWS_AS(p.divided_by_root(1), Error);
    CHECK_THROWS_AS(IntPolynomial::from_text("1,x"), ParseError);
    CHECK(to_text(Rational(5, 2)) == "5/2");
    CHECK(to_text(Rational(3)) == "3");

    auto t = BivariatePolynomial::x_power(2) + BivariatePolynomial::monomial(1, 1, 3) + BivariatePolynomial::y_power(10);
    CHECK(t.to_text() == "x^0 y^10: 1\nx^1 y^1: 3\nx^2 y^0: 1\n");
}

TEST_CASE("spectral invariants agree with the independent oracle")
{
    for (const auto & row : test::oracle_rows()) {
        auto g = graph_of(row.code());
        INFO(row.text("order"), " ", row.text("bits"));
        auto s = spectral_summary(g);
        CHECK(s.char_poly.to_text() == row.text("char_poly"));
        CHECK(s.laplacian_poly.to_text() == row.text("laplacian_poly"));
        CHECK(s.is_integral == (row.integer("is_integral") == 1));
        CHECK(s.simple_spectrum == (row.integer("simple_spectrum") == 1));
        CHECK(spanning_tree_count(g) == row.integer("spanning_trees"));
        CHECK(chromatic_number(g) == row.integer("chromatic_number"));
        CHECK(fractional_chromatic_number(g) == parse_rational(row.text("fractional_chromatic")));
    }
}

TEST_CASE("fractional chromatic number agrees with basic-solution enumeration")
{
    for (int n = 1; n <= 6; ++n)
        for (auto code : enumerate_connected({n})) {
            auto g = graph_of(code);
            if (maximal_independent_sets(g).size() > 9)
                continue;
            CHECK(fractional_chromatic_number(g) == lp_by_vertices(g));
        }
    CHECK(fractional_chromatic_number(Graph::cycle(7)) == Rational(7, 3));
}

TEST_CASE("Tutte polynomial identities up to order 8")
{
    TutteEngine engine;
    ChromaticDeletionContraction oracle;
    for (int n = 1; n <= 8; ++n)
        for (auto code : enumerate_connected({n})) {
            if (n == 8 && code.bits % 7 != 0)
                continue;
            auto g = graph_of(code);
            auto t = engine.tutte(g);
            INFO(n, " ", code.bits);
            CHECK(t.evaluate(1, 1) == spanning_tree_count(g));
            BigInt subsets = BigInt(1) << g.edge_count();
            CHECK(t.evaluate(2, 2) == subsets);
            if (g.edge_count() <= 16) {
                // T(2, 1) counts forests, i.e. acyclic edge subsets.
                auto edges = g.edges();
                BigInt forests = 0;
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
                    Graph h(n);
                    for (std::size_t e = 0; e < edges.size(); ++e)
                        if ((s >> e) & 1u)
                            h.add_edge(edges[e].first, edges[e].second);
                    forests += h.edge_count() == n - h.component_count();
                }
                CHECK(t.evaluate(2, 1) == forests);
            }
            CHECK(chromatic_from_tutte(t, n) == oracle.polynomial(g));
            std::vector<int> reversed(n);
            for (int v = 0; v < n; ++v)
                reversed[v] = n - 1 - v;
            CHECK(t == tutte_polynomial(g.relabelled(reversed)));
        }
}

TEST_CASE("Tutte polynomial of small named graphs")
{
    // K3: x^2 + x + y
    auto k3 = tutte_polynomial(Graph::complete(3));
    CHECK(k3.to_text() == "x^0 y^1: 1\nx^1 y^0: 1\nx^2 y^0: 1\n");
    // K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    auto k4 = tutte_polynomial(Graph::complete(4));
    CHECK(k4.coefficient(3, 0) == 1);
    CHECK(k4.coefficient(2, 0) == 3);
    CHECK(k4.coefficient(1, 0) == 2);
    CHECK(k4.coefficient(1, 1) == 4);
    CHECK(k4.coefficient(0, 1) == 2);
    CHECK(k4.coefficient(0, 2) == 3);
    CHECK(k4.coefficient(0, 3) == 1);
    CHECK(tutte_polynomial(Graph(1)) == BivariatePolynomial::one());

    Multigraph loops(2);
    loops.add_edge(0, 1);
    loops.add_edge(0, 1);
    loops.add_loop(0);
    auto t = tutte_polynomial(loops);
    CHECK(t == BivariatePolynomial::monomial(1, 1, 1) + BivariatePolynomial::y_power(2));
    CHECK_THROWS_AS(tutte_polynomial(Graph(2)), Error);

    TutteEngine tiny(TutteLimits{10, 100});
    CHECK_THROWS_AS(tiny.tutte(Graph::complete(9)), BudgetExceeded);
}

TEST_CASE("Tutte on order ten within budget")
{
    TutteEngine engine;
    auto t = engine.tutte(Graph::complete(10));
    CHECK(t.evaluate(1, 1) == BigInt("100000000"));
    CHECK(chromatic_number(chromatic_from_tutte(t, 10)) == 10);
}

TEST_CASE("chromatic gap")
{
    CHECK(has_chromatic_gap(3, Rational(5, 2)));
    CHECK_FALSE(has_chromatic_gap(3, Rational(3)));
    CHECK(std::abs(spectral_gap(Graph::complete(5)) - 5.0) < 1e-9);
    CHECK(spectral_gap(Graph(1)) == 0.0);
}
