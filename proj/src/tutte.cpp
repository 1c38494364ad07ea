#include <efg/algebraic.hpp>
#include <efg/canon.hpp>

#include <algorithm>
#include <bit>

namespace efg
{
    struct TutteEngine::Weighted
    {
        WeightMatrix m;

        auto order() const -> int { return m.order; }

        auto support(int v) const -> VertexSet
        {
            VertexSet s = 0;
            for (int w = 0; w < m.order; ++w)
                if (m.w[v][w])
                    s |= static_cast<VertexSet>(1u << w);
            return s;
        }

        auto reachable(int from, VertexSet within) const -> VertexSet
        {
            VertexSet seen = static_cast<VertexSet>(1u << from), frontier = seen;
            while (frontier) {
                VertexSet next = 0;
                for (VertexSet f = frontier; f; f &= f - 1)
                    next |= support(std::countr_zero(static_cast<unsigned>(f)));
                next &= within & ~seen;
                seen |= next;
                frontier = next;
            }
            return seen;
        }

        auto induced(VertexSet keep) const -> Weighted
        {
            Weighted r;
            std::array<int, max_order> from{};
            for (int v = 0; v < m.order; ++v)
                if ((keep >> v) & 1u)
                    from[r.m.order++] = v;
            for (int i = 0; i < r.m.order; ++i)
                for (int j = 0; j < r.m.order; ++j)
                    r.m.w[i][j] = i == j ? 0 : m.w[from[i]][from[j]];
            return r;
        }

        auto contracted(int a, int b) const -> Weighted
        {
            // Merge b into a; the a-b bundle itself disappears.
            Weighted r;
            r.m.order = m.order - 1;
            std::array<int, max_order> label{};
            int next = 0;
            for (int v = 0; v < m.order; ++v)
                label[v] = v == b ? -1 : next++;
            label[b] = label[a];
            for (int i = 0; i < m.order; ++i)
                for (int j = i + 1; j < m.order; ++j) {
                    if (! m.w[i][j] || (i == a && j == b) || (i == b && j == a))
                        continue;
                    int li = label[i], lj = label[j];
                    int total = r.m.w[li][lj] + m.w[i][j];
                    r.m.w[li][lj] = r.m.w[lj][li] = static_cast<std::uint8_t>(total);
                }
            return r;
        }
    };

    namespace
    {
        // 1 + y + ... + y^(k-1)
        auto y_series(int k) -> BivariatePolynomial
        {
            BivariatePolynomial p;
            for (int b = 0; b < k; ++b)
                p += BivariatePolynomial::y_power(b);
            return p;
        }
    }

    TutteEngine::TutteEngine(TutteLimits limits) :
        _limits(limits)
    {
    }

    auto TutteEngine::tutte(const Multigraph & g) -> BivariatePolynomial
    {
        if (g.order() < 1)
            throw UnsupportedOrder(g.order());
        if (! g.is_connected())
            throw Error("Tutte polynomial requires a connected multigraph");
        Weighted w;
        w.m.order = g.order();
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                if (i != j) {
                    if (g.multiplicity(i, j) >= 64)
                        throw Error("edge multiplicity too large");
                    w.m.w[i][j] = static_cast<std::uint8_t>(g.multiplicity(i, j));
                }
        _expansions = 0;
        return BivariatePolynomial::y_power(g.total_loops()) * connected(w);
    }

    auto TutteEngine::tutte(const Graph & g) -> BivariatePolynomial
    {
        return tutte(Multigraph(g));
    }

    auto TutteEngine::connected(const Weighted & w) -> BivariatePolynomial
    {
        int n = w.order();
        if (n == 1)
            return BivariatePolynomial::one();

        // The polynomial multiplies over the pieces hanging off a cut vertex.
        VertexSet all = full_set(n);
        for (int a = 0; a < n && n > 2; ++a) {
            VertexSet rest = static_cast<VertexSet>(all & ~(1u << a));
            int start = std::countr_zero(static_cast<unsigned>(rest));
            VertexSet first = w.reachable(start, rest);
            if (first == rest)
                continue;

            auto result = BivariatePolynomial::one();
            VertexSet left = rest;
            while (left) {
                int s = std::countr_zero(static_cast<unsigned>(left));
                VertexSet piece = w.reachable(s, rest);
                left &= static_cast<VertexSet>(~piece);
                result = result * connected(w.induced(static_cast<VertexSet>(piece | (1u << a))));
            }
            return result;
        }
        return block(w);
    }

    auto TutteEngine::block(const Weighted & w) -> BivariatePolynomial
    {
        int n = w.order();
        if (n == 2) {
            // k parallel edges: x + y + ... + y^(k-1)
            auto result = BivariatePolynomial::x_power(1);
            for (int b = 1; b < w.m.w[0][1]; ++b)
                result += BivariatePolynomial::y_power(b);
            return result;
        }

        auto key = canonical_key(w.m);
        if (auto it = _cache.find(key); it != _cache.end())
            return *it->second;

        if (++_expansions > _limits.max_expansions)
            throw BudgetExceeded("Tutte polynomial exceeded " + std::to_string(_limits.max_expansions) + " expansions");

        int u = 0, best_degree = max_order + 1;
        for (int v = 0; v < n; ++v) {
            int d = std::popcount(static_cast<unsigned>(w.support(v)));
            if (d < best_degree) {
                best_degree = d;
                u = v;
            }
        }
        int v = -1;
        for (int x = 0; x < n; ++x)
            if (w.m.w[u][x] && (v < 0 || w.m.w[u][x] > w.m.w[u][v]))
                v = x;

        Weighted without = w;
        int k = w.m.w[u][v];
        without.m.w[u][v] = without.m.w[v][u] = 0;

        auto result = connected(without) + y_series(k) * connected(w.contracted(u, v));

        if (_cache.size() >= _limits.max_cache_entries)
            _cache.clear();
        _cache.emplace(std::move(key), std::make_shared<const BivariatePolynomial>(result));
        return result;
    }

    auto tutte_polynomial(const Multigraph & g) -> BivariatePolynomial
    {
        TutteEngine engine;
        return engine.tutte(g);
    }

    auto tutte_polynomial(const Graph & g) -> BivariatePolynomial
    {
        TutteEngine engine;
        return engine.tutte(g);
    }

    auto chromatic_from_tutte(const BivariatePolynomial & tutte, int order) -> IntPolynomial
    {
        // T(1 - k, 0) as a polynomial in k.
        IntPolynomial at;
        IntPolynomial power = IntPolynomial::constant(1);
        auto one_minus_k = IntPolynomial::linear(-1, 1);
        for (int a = 0; a <= tutte.x_degree(); ++a) {
            auto c = tutte.coefficient(a, 0);
            if (c != 0)
                at = at + IntPolynomial::constant(c) * power;
            power = power * one_minus_k;
        }
        auto k = IntPolynomial::linear(1, 0);
        auto result = k * at;
        return (order - 1) % 2 ? -result : result;
    }

    auto chromatic_polynomial(const Graph & g, TutteEngine & engine) -> IntPolynomial
    {
        return chromatic_from_tutte(engine.tutte(g), g.order());
    }

    auto chromatic_polynomial(const Graph & g) -> IntPolynomial
    {
        TutteEngine engine;
        return chromatic_polynomial(g, engine);
    }

    auto ChromaticDeletionContraction::polynomial(const Graph & g) -> IntPolynomial
    {
        int n = g.order();
        auto k = IntPolynomial::linear(1, 0);
        if (g.edge_count() == 0) {
            auto p = IntPolynomial::constant(1);
            for (int i = 0; i < n; ++i)
                p = p * k;
            return p;
        }
        if (g.edge_count() == pair_count(n)) {
            auto p = IntPolynomial::constant(1);
            for (int i = 0; i < n; ++i)
                p = p * IntPolynomial::linear(1, -i);
            return p;
        }

        auto code = canonical_code(g);
        auto & cache = _cache[n];
        if (auto it = cache.find(code.bits); it != cache.end())
            return it->second;

        auto [a, b] = g.edges().front();
        Graph deleted = g;
        deleted.remove_edge(a, b);

        Graph merged(n - 1);
        std::array<int, max_order> label{};
        int next = 0;
        for (int v = 0; v < n; ++v)
            label[v] = v == b ? -1 : next++;
        label[b] = label[a];
        for (auto [x, y] : g.edges())
            if (label[x] != label[y])
                merged.add_edge(label[x], label[y]);

        auto result = polynomial(deleted) - polynomial(merged);
        cache.emplace(code.bits, result);
        return result;
    }
}
