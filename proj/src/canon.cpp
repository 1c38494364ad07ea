#include <efg/canon.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace efg
{
    namespace
    {
        using Keys = std::array<std::uint64_t, max_order>;
        using Perm = std::array<std::int8_t, max_order>;

        constexpr std::uint64_t digit_base = 64;

        auto validate(const WeightMatrix & m) -> void
        {
            if (m.order < 0 || m.order > max_order)
                throw UnsupportedOrder(m.order);
            for (int i = 0; i < m.order; ++i)
                for (int j = 0; j < m.order; ++j)
                    if (m.w[i][j] >= digit_base)
                        throw Error("weight too large for canonical labelling");
        }

        struct UnionFind
        {
            std::array<std::int8_t, max_order> parent{};

            explicit UnionFind(int n)
            {
                for (int i = 0; i < n; ++i)
                    parent[i] = static_cast<std::int8_t>(i);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> void
            {
                a = find(a);
                b = find(b);
                if (a != b)
                    parent[std::max(a, b)] = static_cast<std::int8_t>(std::min(a, b));
            }
        };

        // Depth-first search for the lexicographically smallest relabelling.
        // At each level only vertices whose column is minimal can lead to the
        // minimum, and candidates related by an automorphism fixing the
        // current prefix lead to identical subtrees.
        class MinLexSearch
        {
        public:
            MinLexSearch(const WeightMatrix & m, bool seed_with_identity) :
                _m(m),
                _n(m.order)
            {
                if (seed_with_identity) {
                    _have_best = true;
                    _stop_when_beaten = true;
                    for (int k = 0; k < _n; ++k) {
                        std::uint64_t key = m.w[k][k];
                        for (int i = 0; i < k; ++i)
                            key = key * digit_base + m.w[k][i];
                        _best_keys[k] = key;
                        _best_lab[k] = static_cast<std::int8_t>(k);
                    }
                }
            }

            auto run() -> void
            {
                Keys keys{};
                for (int v = 0; v < _n; ++v)
                    keys[v] = _m.w[v][v];
                dfs(0, keys, full_set(_n), false);
            }

            auto beaten() const -> bool { return _beaten; }

            auto best_labeling() const -> std::vector<int>
            {
                return std::vector<int>(_best_lab.begin(), _best_lab.begin() + _n);
            }

        private:
            const WeightMatrix & _m;
            int _n;
            bool _have_best = false;
            bool _stop_when_beaten = false;
            bool _beaten = false;
            unsigned _best_version = 0;
            Keys _best_keys{};
            Perm _best_lab{};
            Keys _cur_keys{};
            Perm _cur_lab{};
            std::vector<Perm> _automorphisms;

            auto dfs(int k, const Keys & keys, VertexSet unlabelled, bool less) -> void
            {
                if (_beaten)
                    return;

                if (k == _n) {
                    leaf(less);
                    return;
                }

                std::uint64_t lowest = ~std::uint64_t{0};
                for (VertexSet u = unlabelled; u; u &= u - 1) {
                    int v = std::countr_zero(static_cast<unsigned>(u));
                    lowest = std::min(lowest, keys[v]);
                }

                if (_have_best && ! less) {
                    if (lowest > _best_keys[k])
                        return;
                    if (lowest < _best_keys[k]) {
                        if (_stop_when_beaten) {
                            _beaten = true;
                            return;
                        }
                        less = true;
                    }
                }

                VertexSet tried_roots = 0;
                for (VertexSet u = unlabelled; u; u &= u - 1) {
                    int v = std::countr_zero(static_cast<unsigned>(u));
                    if (keys[v] != lowest)
                        continue;

                    int root = orbit_root(k, v);
                    if ((tried_roots >> root) & 1u)
                        continue;
                    tried_roots |= static_cast<VertexSet>(1u << root);

                    _cur_lab[k] = static_cast<std::int8_t>(v);
                    _cur_keys[k] = lowest;

                    VertexSet rest = static_cast<VertexSet>(unlabelled & ~(1u << v));
                    Keys next = keys;
                    for (VertexSet r = rest; r; r &= r - 1) {
                        int x = std::countr_zero(static_cast<unsigned>(r));
                        next[x] = keys[x] * digit_base + _m.w[x][v];
                    }

                    unsigned version = _best_version;
                    dfs(k + 1, next, rest, less);
                    if (_beaten)
                        return;
                    // A new best found below shares this node's prefix.
                    if (version != _best_version)
                        less = false;
                }
            }

            auto orbit_root(int k, int v) -> int
            {
                if (_automorphisms.empty())
                    return v;
                UnionFind uf(_n);
                for (const auto & p : _automorphisms) {
                    bool fixes = true;
                    for (int i = 0; i < k && fixes; ++i)
                        fixes = p[_cur_lab[i]] == _cur_lab[i];
                    if (! fixes)
                        continue;
                    for (int x = 0; x < _n; ++x)
                        uf.unite(x, p[x]);
                }
                return uf.find(v);
            }

            auto leaf(bool less) -> void
            {
                if (! _have_best || less) {
                    _have_best = true;
                    _best_keys = _cur_keys;
                    _best_lab = _cur_lab;
                    ++_best_version;
                    return;
                }
                // Same string as the best: best_lab[i] -> cur_lab[i] is an automorphism.
                Perm p{};
                bool identity = true;
                for (int i = 0; i < _n; ++i) {
                    p[_best_lab[i]] = _cur_lab[i];
                    identity = identity && _best_lab[i] == _cur_lab[i];
                }
                if (! identity)
                    _automorphisms.push_back(p);
            }
        };

        // Stable 1-dimensional Weisfeiler-Leman colouring; only used to prune
        // automorphism searches within a single graph.
        auto refine_colours(const Graph & g) -> std::array<int, max_order>
        {
            int n = g.order();
            std::array<int, max_order> colour{};
            for (int v = 0; v < n; ++v)
                colour[v] = g.degree(v);

            for (int round = 0; round < n; ++round) {
                std::map<std::vector<int>, int> ids;
                std::array<std::vector<int>, max_order> sig;
                for (int v = 0; v < n; ++v) {
                    sig[v].push_back(colour[v]);
                    std::vector<int> around;
                    for (int w = 0; w < n; ++w)
                        if (g.adjacent(v, w))
                            around.push_back(colour[w]);
                    std::ranges::sort(around);
                    sig[v].insert(sig[v].end(), around.begin(), around.end());
                    ids.emplace(sig[v], 0);
                }
                int next_id = 0;
                for (auto & [s, id] : ids)
                    id = next_id++;
                std::array<int, max_order> updated{};
                for (int v = 0; v < n; ++v)
                    updated[v] = ids[sig[v]];

                int before = 0, after = next_id;
                {
                    std::vector<int> c(colour.begin(), colour.begin() + n);
                    std::ranges::sort(c);
                    before = static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
                }
                colour = updated;
                if (after == before)
                    break;
            }
            return colour;
        }

        class AutomorphismExistence
        {
        public:
            AutomorphismExistence(const Graph & g, const std::array<int, max_order> & colour) :
                _g(g),
                _colour(colour),
                _n(g.order())
            {
            }

            // Is there an automorphism agreeing with `forced` (-1 = free)?
            auto exists(const std::array<int, max_order> & forced) -> bool
            {
                _image.fill(-1);
                _used = 0;
                for (int v = 0; v < _n; ++v)
                    if (forced[v] >= 0) {
                        if (! consistent(v, forced[v]))
                            return false;
                        _image[v] = forced[v];
                        _used |= static_cast<VertexSet>(1u << forced[v]);
                    }
                return extend(0);
            }

        private:
            const Graph & _g;
            const std::array<int, max_order> & _colour;
            int _n;
            std::array<int, max_order> _image{};
            VertexSet _used = 0;

            auto consistent(int v, int target) const -> bool
            {
                if (_colour[v] != _colour[target] || ((_used >> target) & 1u))
                    return false;
                for (int u = 0; u < _n; ++u)
                    if (_image[u] >= 0 && _g.adjacent(u, v) != _g.adjacent(_image[u], target))
                        return false;
                return true;
            }

            auto extend(int v) -> bool
            {
                while (v < _n && _image[v] >= 0)
                    ++v;
                if (v == _n)
                    return true;
                for (int t = 0; t < _n; ++t) {
                    if (! consistent(v, t))
                        continue;
                    _image[v] = t;
                    _used |= static_cast<VertexSet>(1u << t);
                    if (extend(v + 1))
                        return true;
                    _image[v] = -1;
                    _used &= static_cast<VertexSet>(~(1u << t));
                }
                return false;
            }
        };
    }

    auto weights_of(const Graph & g) -> WeightMatrix
    {
        WeightMatrix m;
        m.order = g.order();
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                m.w[i][j] = g.adjacent(i, j) ? 1 : 0;
        return m;
    }

    auto weights_of(const Multigraph & g) -> WeightMatrix
    {
        WeightMatrix m;
        m.order = g.order();
        for (int i = 0; i < g.order(); ++i) {
            for (int j = 0; j < g.order(); ++j)
                m.w[i][j] = static_cast<std::uint8_t>(g.multiplicity(i, j));
            m.w[i][i] = static_cast<std::uint8_t>(g.loops(i));
        }
        return m;
    }

    auto canonical_labeling(const WeightMatrix & m) -> std::vector<int>
    {
        validate(m);
        MinLexSearch search(m, false);
        search.run();
        return search.best_labeling();
    }

    auto is_canonical(const WeightMatrix & m) -> bool
    {
        validate(m);
        MinLexSearch search(m, true);
        search.run();
        return ! search.beaten();
    }

    auto canonical_labeling(const Graph & g) -> std::vector<int>
    {
        return canonical_labeling(weights_of(g));
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        auto vertex_at = canonical_labeling(g);
        std::vector<int> position(g.order());
        for (int k = 0; k < g.order(); ++k)
            position[vertex_at[k]] = k;
        return g.relabelled(position);
    }

    auto canonical_code(const Graph & g) -> GraphCode
    {
        check_order(g.order());
        return code_of(canonical_graph(g));
    }

    auto is_canonical(const Graph & g) -> bool
    {
        return is_canonical(weights_of(g));
    }

    auto canonical_key(const WeightMatrix & m) -> std::string
    {
        auto vertex_at = canonical_labeling(m);
        std::string key;
        key.reserve(1 + m.order * (m.order + 1) / 2);
        key.push_back(static_cast<char>(m.order));
        for (int j = 0; j < m.order; ++j)
            for (int i = 0; i <= j; ++i)
                key.push_back(static_cast<char>(m.w[vertex_at[i]][vertex_at[j]]));
        return key;
    }

    auto automorphism_count(const Graph & g) -> std::uint64_t
    {
        check_order(g.order());
        int n = g.order();
        auto colour = refine_colours(g);
        AutomorphismExistence search(g, colour);

        std::uint64_t total = 1;
        std::array<int, max_order> forced;
        forced.fill(-1);
        for (int k = 0; k < n; ++k) {
            std::uint64_t orbit = 0;
            for (int w = 0; w < n; ++w) {
                if (colour[w] != colour[k])
                    continue;
                if (w == k) {
                    ++orbit;
                    continue;
                }
                forced[k] = w;
                if (search.exists(forced))
                    ++orbit;
            }
            forced[k] = k;
            total *= orbit;
        }
        return total;
    }
}
