#include <efg/structural.hpp>
#include <efg/canon.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <limits>

namespace efg
{
    namespace
    {
        auto bit(int v) -> VertexSet
        {
            return static_cast<VertexSet>(1u << v);
        }

        auto lowest(VertexSet s) -> int
        {
            return std::countr_zero(static_cast<unsigned>(s));
        }

        auto size_of(VertexSet s) -> int
        {
            return std::popcount(static_cast<unsigned>(s));
        }

        auto require_connected(const Graph & g, const char * what) -> void
        {
            if (! g.is_connected())
                throw Error(std::string(what) + " requires a connected graph");
        }

        auto is_independent(const Graph & g, VertexSet s) -> bool
        {
            for (VertexSet r = s; r; r &= r - 1)
                if (g.neighbours(lowest(r)) & s)
                    return false;
            return true;
        }

        // reach[mask] holds the vertices v such that some path starts at
        // lowest(mask), visits exactly mask, and ends at v.
        auto path_endpoints(const Graph & g) -> std::vector<VertexSet>
        {
            int n = g.order();
            std::vector<VertexSet> reach(std::size_t{1} << n, 0);
            for (int s = 0; s < n; ++s)
                reach[bit(s)] = bit(s);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                VertexSet ends = reach[mask];
                if (! ends)
                    continue;
                int s = lowest(static_cast<VertexSet>(mask));
                for (VertexSet e = ends; e; e &= e - 1) {
                    int v = lowest(e);
                    VertexSet next = static_cast<VertexSet>(g.neighbours(v) & ~mask);
                    for (VertexSet w = next; w; w &= w - 1) {
                        int x = lowest(w);
                        if (x > s)
                            reach[mask | bit(x)] |= bit(x);
                    }
                }
            }
            return reach;
        }

        auto max_flow_unit(const Graph & g, int source, int sink) -> int
        {
            int n = g.order();
            std::array<std::array<int, max_order>, max_order> cap{};
            for (auto [a, b] : g.edges()) {
                cap[a][b] = 1;
                cap[b][a] = 1;
            }
            int flow = 0;
            while (true) {
                std::array<int, max_order> parent;
                parent.fill(-1);
                parent[source] = source;
                std::vector<int> queue{source};
                for (std::size_t q = 0; q < queue.size() && parent[sink] < 0; ++q) {
                    int u = queue[q];
                    for (int v = 0; v < n; ++v)
                        if (parent[v] < 0 && cap[u][v] > 0) {
                            parent[v] = u;
                            queue.push_back(v);
                        }
                }
                if (parent[sink] < 0)
                    return flow;
                for (int v = sink; v != source; v = parent[v]) {
                    --cap[parent[v]][v];
                    ++cap[v][parent[v]];
                }
                ++flow;
            }
        }

        class EmbeddingCounter
        {
        public:
            EmbeddingCounter(const Graph & host, const Graph & pattern) :
                _host(host),
                _pattern(pattern)
            {
                // Place pattern vertices so each (after the first) touches an earlier one.
                VertexSet placed = 0;
                for (int start = 0; start < pattern.order(); ++start) {
                    if ((placed >> start) & 1u)
                        continue;
                    std::vector<int> queue{start};
                    placed |= bit(start);
                    for (std::size_t q = 0; q < queue.size(); ++q) {
                        _order.push_back(queue[q]);
                        for (VertexSet r = static_cast<VertexSet>(pattern.neighbours(queue[q]) & ~placed); r; r &= r - 1) {
                            placed |= bit(lowest(r));
                            queue.push_back(lowest(r));
                        }
                    }
                }
                _image.fill(-1);
            }

            auto count() -> std::uint64_t
            {
                return extend(0, 0);
            }

        private:
            const Graph & _host;
            const Graph & _pattern;
            std::vector<int> _order;
            std::array<int, max_order> _image{};

            auto extend(std::size_t depth, VertexSet used) -> std::uint64_t
            {
                if (depth == _order.size())
                    return 1;
                int p = _order[depth];
                std::uint64_t total = 0;
                for (int h = 0; h < _host.order(); ++h) {
                    if ((used >> h) & 1u)
                        continue;
                    if (_host.degree(h) < _pattern.degree(p))
                        continue;
                    bool ok = true;
                    for (VertexSet r = _pattern.neighbours(p); r && ok; r &= r - 1) {
                        int q = lowest(r);
                        if (_image[q] >= 0 && ! _host.adjacent(h, _image[q]))
                            ok = false;
                    }
                    if (! ok)
                        continue;
                    _image[p] = h;
                    total += extend(depth + 1, static_cast<VertexSet>(used | bit(h)));
                    _image[p] = -1;
                }
                return total;
            }
        };
    }

    auto distance_matrix(const Graph & g) -> std::array<std::array<int, max_order>, max_order>
    {
        int n = g.order();
        std::array<std::array<int, max_order>, max_order> d{};
        for (int s = 0; s < n; ++s) {
            d[s].fill(-1);
            d[s][s] = 0;
            VertexSet seen = bit(s), frontier = bit(s);
            for (int layer = 1; frontier; ++layer) {
                VertexSet next = 0;
                for (VertexSet f = frontier; f; f &= f - 1)
                    next |= g.neighbours(lowest(f));
                next &= static_cast<VertexSet>(~seen);
                for (VertexSet r = next; r; r &= r - 1)
                    d[s][lowest(r)] = layer;
                seen |= next;
                frontier = next;
            }
        }
        return d;
    }

    auto distances(const Graph & g) -> DistanceSummary
    {
        require_connected(g, "distances");
        auto d = distance_matrix(g);
        DistanceSummary result;
        result.eccentricity.assign(g.order(), 0);
        for (int v = 0; v < g.order(); ++v)
            for (int w = 0; w < g.order(); ++w)
                result.eccentricity[v] = std::max(result.eccentricity[v], d[v][w]);
        result.diameter = *std::ranges::max_element(result.eccentricity);
        result.radius = *std::ranges::min_element(result.eccentricity);
        return result;
    }

    auto cycle_lengths(const Graph & g) -> CycleLengths
    {
        int n = g.order();
        CycleLengths result;

        for (int root = 0; root < n; ++root) {
            std::array<int, max_order> dist, parent;
            dist.fill(-1);
            parent.fill(-1);
            dist[root] = 0;
            std::vector<int> queue{root};
            for (std::size_t q = 0; q < queue.size(); ++q) {
                int u = queue[q];
                for (VertexSet r = g.neighbours(u); r; r &= r - 1) {
                    int w = lowest(r);
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    else if (parent[u] != w) {
                        int len = dist[u] + dist[w] + 1;
                        if (result.girth == 0 || len < result.girth)
                            result.girth = len;
                    }
                }
            }
        }

        if (result.girth) {
            auto reach = path_endpoints(g);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                int len = size_of(static_cast<VertexSet>(mask));
                if (len < 3 || len <= result.circumference)
                    continue;
                int s = lowest(static_cast<VertexSet>(mask));
                if (reach[mask] & g.neighbours(s))
                    result.circumference = len;
            }
        }
        return result;
    }

    auto articulation_points(const Graph & g) -> VertexSet
    {
        int n = g.order();
        VertexSet result = 0;
        if (n < 3)
            return result;
        for (int v = 0; v < n; ++v) {
            VertexSet rest = static_cast<VertexSet>(full_set(n) & ~bit(v));
            int start = lowest(rest);
            if (g.reachable(start, rest) != rest)
                result |= bit(v);
        }
        return result;
    }

    auto vertex_connectivity(const Graph & g) -> int
    {
        int n = g.order();
        if (g.edge_count() == pair_count(n))
            return n - 1;
        if (! g.is_connected())
            return 0;
        for (int k = 1; k < n - 1; ++k)
            for (unsigned removed = 1; removed < (1u << n); ++removed) {
                if (size_of(static_cast<VertexSet>(removed)) != k)
                    continue;
                VertexSet rest = static_cast<VertexSet>(full_set(n) & ~removed);
                if (g.reachable(lowest(rest), rest) != rest)
                    return k;
            }
        return n - 1;
    }

    auto edge_connectivity(const Graph & g) -> int
    {
        int n = g.order();
        if (n <= 1)
            return 0;
        int best = std::numeric_limits<int>::max();
        for (int t = 1; t < n; ++t)
            best = std::min(best, max_flow_unit(g, 0, t));
        return best;
    }

    auto cut_structure(const Graph & g) -> CutStructure
    {
        require_connected(g, "cut_structure");
        CutStructure result;
        result.articulation_points = size_of(articulation_points(g));
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 1)
                ++result.endpoints;
        result.vertex_connectivity = vertex_connectivity(g);
        result.edge_connectivity = edge_connectivity(g);
        return result;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        int n = g.order();
        std::array<int, max_order> side;
        side.fill(-1);
        for (int s = 0; s < n; ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::vector<int> queue{s};
            for (std::size_t q = 0; q < queue.size(); ++q) {
                int u = queue[q];
                for (VertexSet r = g.neighbours(u); r; r &= r - 1) {
                    int w = lowest(r);
                    if (side[w] < 0) {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    }
                    else if (side[w] == side[u])
                        return false;
                }
            }
        }
        return true;
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.is_connected() && g.edge_count() == g.order() - 1;
    }

    auto is_eulerian(const Graph & g) -> bool
    {
        if (! g.is_connected())
            return false;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) % 2)
                return false;
        return true;
    }

    auto is_hamiltonian(const Graph & g) -> bool
    {
        int n = g.order();
        if (n == 1)
            return true;
        if (n < 3 || g.min_degree() < 2)
            return false;
        auto reach = path_endpoints(g);
        return (reach[full_set(n)] & g.neighbours(0)) != 0;
    }

    auto is_chordal(const Graph & g) -> bool
    {
        // Repeatedly strip simplicial vertices.
        VertexSet left = full_set(g.order());
        while (left) {
            bool removed = false;
            for (VertexSet r = left; r; r &= r - 1) {
                int v = lowest(r);
                VertexSet nb = static_cast<VertexSet>(g.neighbours(v) & left);
                bool clique = true;
                for (VertexSet s = nb; s && clique; s &= s - 1) {
                    int u = lowest(s);
                    VertexSet others = static_cast<VertexSet>(nb & ~bit(u));
                    clique = (g.neighbours(u) & others) == others;
                }
                if (clique) {
                    left &= static_cast<VertexSet>(~bit(v));
                    removed = true;
                    break;
                }
            }
            if (! removed)
                return false;
        }
        return true;
    }

    auto boolean_predicates(const Graph & g) -> BooleanPredicates
    {
        require_connected(g, "boolean_predicates");
        return {is_bipartite(g), is_tree(g), is_eulerian(g), is_hamiltonian(g), is_chordal(g)};
    }

    auto is_regular(const Graph & g, const Conventions & conventions) -> bool
    {
        if (g.order() == 1)
            return conventions.k1_regular;
        return g.min_degree() == g.max_degree();
    }

    auto is_strongly_regular(const Graph & g) -> bool
    {
        int n = g.order();
        if (g.min_degree() != g.max_degree())
            return false;
        int adjacent_common = -1, apart_common = -1;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int common = size_of(static_cast<VertexSet>(g.neighbours(i) & g.neighbours(j)));
                int & expected = g.adjacent(i, j) ? adjacent_common : apart_common;
                if (expected < 0)
                    expected = common;
                else if (expected != common)
                    return false;
            }
        return true;
    }

    auto is_distance_regular(const Graph & g) -> bool
    {
        if (! g.is_connected())
            return false;
        int n = g.order();
        auto d = distance_matrix(g);
        // For distance i: (c_i, a_i, b_i), or -1 while unset.
        std::array<std::array<int, 3>, max_order> intersection;
        for (auto & row : intersection)
            row.fill(-1);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                int i = d[v][w];
                std::array<int, 3> counts{};
                for (VertexSet r = g.neighbours(w); r; r &= r - 1) {
                    int x = lowest(r);
                    int delta = d[v][x] - i;
                    ++counts[delta + 1];
                }
                if (intersection[i][0] < 0)
                    intersection[i] = counts;
                else if (intersection[i] != counts)
                    return false;
            }
        return true;
    }

    auto regularity(const Graph & g, const Conventions & conventions) -> Regularity
    {
        require_connected(g, "regularity");
        return {is_regular(g, conventions), is_strongly_regular(g), is_distance_regular(g)};
    }

    auto independence_number(const Graph & g) -> int
    {
        int best = 0;
        for (unsigned s = 0; s < (1u << g.order()); ++s) {
            int size = size_of(static_cast<VertexSet>(s));
            if (size > best && is_independent(g, static_cast<VertexSet>(s)))
                best = size;
        }
        return best;
    }

    auto clique_number(const Graph & g) -> int
    {
        return independence_number(g.complement());
    }

    namespace
    {
        struct MatchingTables
        {
            std::vector<std::uint64_t> count;
            std::vector<int> largest;
        };

        auto matching_tables(const Graph & g) -> MatchingTables
        {
            int n = g.order();
            MatchingTables t;
            t.count.assign(std::size_t{1} << n, 0);
            t.largest.assign(std::size_t{1} << n, 0);
            t.count[0] = 1;
            for (unsigned s = 1; s < (1u << n); ++s) {
                int v = lowest(static_cast<VertexSet>(s));
                unsigned without = s & ~(1u << v);
                std::uint64_t total = t.count[without];
                int largest = t.largest[without];
                for (VertexSet r = static_cast<VertexSet>(g.neighbours(v) & without); r; r &= r - 1) {
                    unsigned rest = without & ~(1u << lowest(r));
                    total += t.count[rest];
                    largest = std::max(largest, t.largest[rest] + 1);
                }
                t.count[s] = total;
                t.largest[s] = largest;
            }
            return t;
        }
    }

    auto matching_number(const Graph & g) -> int
    {
        return matching_tables(g).largest.back();
    }

    auto hosoya_index(const Graph & g) -> std::uint64_t
    {
        return matching_tables(g).count.back();
    }

    auto independence_and_matchings(const Graph & g) -> MatchingSummary
    {
        auto t = matching_tables(g);
        return {independence_number(g), clique_number(g), t.largest.back(), t.count.back()};
    }

    auto maximal_independent_sets(const Graph & g) -> std::vector<VertexSet>
    {
        int n = g.order();
        std::vector<VertexSet> result;
        for (unsigned s = 1; s < (1u << n); ++s) {
            auto set = static_cast<VertexSet>(s);
            if (! is_independent(g, set))
                continue;
            VertexSet covered = set;
            for (VertexSet r = set; r; r &= r - 1)
                covered |= g.neighbours(lowest(r));
            if (covered == full_set(n))
                result.push_back(set);
        }
        return result;
    }

    auto pattern_name(Pattern p) -> std::string_view
    {
        switch (p) {
        case Pattern::K3: return "K3";
        case Pattern::K4: return "K4";
        case Pattern::K5: return "K5";
        case Pattern::C4: return "C4";
        case Pattern::C5: return "C5";
        case Pattern::C6: return "C6";
        case Pattern::bull: return "bull";
        case Pattern::bowtie: return "bowtie";
        case Pattern::open_bowtie: return "open_bowtie";
        case Pattern::diamond: return "diamond";
        }
        throw Error("bad pattern");
    }

    auto pattern_from_name(std::string_view name) -> Pattern
    {
        for (auto p : all_patterns)
            if (pattern_name(p) == name)
                return p;
        if (name == "open-bowtie")
            return Pattern::open_bowtie;
        throw Error("unknown pattern '" + std::string(name) + "'");
    }

    auto pattern_graph(Pattern p) -> Graph
    {
        using E = std::pair<int, int>;
        switch (p) {
        case Pattern::K3: return Graph::complete(3);
        case Pattern::K4: return Graph::complete(4);
        case Pattern::K5: return Graph::complete(5);
        case Pattern::C4: return Graph::cycle(4);
        case Pattern::C5: return Graph::cycle(5);
        case Pattern::C6: return Graph::cycle(6);
        case Pattern::bull: {
            // triangle 0-1-2 with a horn on 0 and on 2
            constexpr std::array<E, 5> e{{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 4}}};
            return Graph::from_edges(5, e);
        }
        case Pattern::bowtie: {
            // triangles 0-1-2 and 0-3-4 sharing vertex 0
            constexpr std::array<E, 6> e{{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}};
            return Graph::from_edges(5, e);
        }
        case Pattern::open_bowtie: {
            // the bowtie without its edge 3-4
            constexpr std::array<E, 5> e{{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}};
            return Graph::from_edges(5, e);
        }
        case Pattern::diamond: {
            constexpr std::array<E, 5> e{{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
            return Graph::from_edges(4, e);
        }
        }
        throw Error("bad pattern");
    }

    auto subgraph_count(const Graph & g, const Graph & pattern) -> std::uint64_t
    {
        if (pattern.order() > g.order() || pattern.edge_count() > g.edge_count())
            return 0;
        EmbeddingCounter counter(g, pattern);
        return counter.count() / automorphism_count(pattern);
    }

    auto subgraph_count(const Graph & g, Pattern p) -> std::uint64_t
    {
        return subgraph_count(g, pattern_graph(p));
    }

    auto is_planar(const Graph & g) -> bool
    {
        int n = g.order();
        int m = g.edge_count();
        if (n < 5)
            return true;
        if (m > 3 * n - 6)
            return false;
        using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
        BoostGraph bg(n);
        for (auto [a, b] : g.edges())
            boost::add_edge(a, b, bg);
        return boost::boyer_myrvold_planarity_test(bg);
    }

    auto structural_profile(const Graph & g, const Conventions & conventions) -> StructuralProfile
    {
        require_connected(g, "structural_profile");
        StructuralProfile p;
        p.edges = g.edge_count();

        auto dist = distances(g);
        p.diameter = dist.diameter;
        p.radius = dist.radius;

        auto cycles = cycle_lengths(g);
        p.girth = cycles.girth;
        p.circumference = cycles.circumference;

        auto cuts = cut_structure(g);
        p.articulation_points = cuts.articulation_points;
        p.endpoints = cuts.endpoints;
        p.vertex_connectivity = cuts.vertex_connectivity;
        p.edge_connectivity = cuts.edge_connectivity;

        auto preds = boolean_predicates(g);
        p.is_bipartite = preds.is_bipartite;
        p.is_tree = preds.is_tree;
        p.is_eulerian = preds.is_eulerian;
        p.is_hamiltonian = preds.is_hamiltonian;
        p.is_chordal = preds.is_chordal;
        p.is_planar = is_planar(g);

        auto reg = regularity(g, conventions);
        p.is_regular = reg.is_regular;
        p.is_strongly_regular = reg.is_strongly_regular;
        p.is_distance_regular = reg.is_distance_regular;

        auto matchings = independence_and_matchings(g);
        p.independence_number = matchings.independence_number;
        p.clique_number = matchings.clique_number;
        p.matching_number = matchings.matching_number;
        p.hosoya_index = matchings.hosoya_index;

        for (std::size_t i = 0; i < all_patterns.size(); ++i)
            p.subgraph_counts[i] = subgraph_count(g, all_patterns[i]);
        return p;
    }
}
