#include <efg/graph.hpp>

#include <algorithm>
#include <functional>

namespace efg
{
    auto check_order(int order) -> void
    {
        if (order < 1 || order > max_order)
            throw UnsupportedOrder(order);
    }

    auto GraphCode::serialize() const -> std::array<std::uint8_t, 9>
    {
        std::array<std::uint8_t, 9> out{};
        out[0] = order;
        for (int i = 0; i < 8; ++i)
            out[1 + i] = static_cast<std::uint8_t>(bits >> (8 * i));
        return out;
    }

    auto GraphCode::deserialize(std::span<const std::uint8_t, 9> bytes) -> GraphCode
    {
        GraphCode c;
        c.order = bytes[0];
        for (int i = 0; i < 8; ++i)
            c.bits |= std::uint64_t{bytes[1 + i]} << (8 * i);
        return c;
    }

    Graph::Graph(int order) :
        _order(order)
    {
        if (order < 0 || order > max_order)
            throw UnsupportedOrder(order);
    }

    auto Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) -> Graph
    {
        Graph g(order);
        for (auto [a, b] : edges)
            g.add_edge(a, b);
        return g;
    }

    auto Graph::complete(int order) -> Graph
    {
        Graph g(order);
        for (int j = 1; j < order; ++j)
            for (int i = 0; i < j; ++i)
                g.add_edge(i, j);
        return g;
    }

    auto Graph::path(int order) -> Graph
    {
        Graph g(order);
        for (int i = 0; i + 1 < order; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    auto Graph::cycle(int order) -> Graph
    {
        Graph g = path(order);
        if (order >= 3)
            g.add_edge(0, order - 1);
        return g;
    }

    auto Graph::star(int leaves) -> Graph
    {
        Graph g(leaves + 1);
        for (int i = 1; i <= leaves; ++i)
            g.add_edge(0, i);
        return g;
    }

    auto Graph::add_edge(int a, int b) -> void
    {
        if (a == b || a < 0 || b < 0 || a >= _order || b >= _order)
            throw Error("invalid edge " + std::to_string(a) + "-" + std::to_string(b));
        _adj[a] |= static_cast<VertexSet>(1u << b);
        _adj[b] |= static_cast<VertexSet>(1u << a);
    }

    auto Graph::remove_edge(int a, int b) -> void
    {
        _adj[a] &= static_cast<VertexSet>(~(1u << b));
        _adj[b] &= static_cast<VertexSet>(~(1u << a));
    }

    auto Graph::edge_count() const -> int
    {
        int total = 0;
        for (int v = 0; v < _order; ++v)
            total += degree(v);
        return total / 2;
    }

    auto Graph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int j = 1; j < _order; ++j)
            for (int i = 0; i < j; ++i)
                if (adjacent(i, j))
                    result.emplace_back(i, j);
        return result;
    }

    auto Graph::min_degree() const -> int
    {
        int result = _order == 0 ? 0 : max_order;
        for (int v = 0; v < _order; ++v)
            result = std::min(result, degree(v));
        return result;
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (int v = 0; v < _order; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::complement() const -> Graph
    {
        Graph c(_order);
        auto all = full_set(_order);
        for (int v = 0; v < _order; ++v)
            c._adj[v] = static_cast<VertexSet>(all & ~_adj[v] & ~(1u << v));
        return c;
    }

    auto Graph::induced(VertexSet keep) const -> Graph
    {
        std::array<int, max_order> label{};
        int next = 0;
        for (int v = 0; v < _order; ++v)
            label[v] = ((keep >> v) & 1u) ? next++ : -1;

        Graph h(next);
        for (int v = 0; v < _order; ++v) {
            if (label[v] < 0)
                continue;
            for (int w = v + 1; w < _order; ++w)
                if (label[w] >= 0 && adjacent(v, w))
                    h.add_edge(label[v], label[w]);
        }
        return h;
    }

    auto Graph::without_vertex(int v) const -> Graph
    {
        return induced(static_cast<VertexSet>(full_set(_order) & ~(1u << v)));
    }

    auto Graph::relabelled(std::span<const int> new_label) const -> Graph
    {
        Graph h(_order);
        for (int v = 0; v < _order; ++v) {
            VertexSet row = 0;
            for (int w = 0; w < _order; ++w)
                if (adjacent(v, w))
                    row |= static_cast<VertexSet>(1u << new_label[w]);
            h._adj[new_label[v]] = row;
        }
        return h;
    }

    auto Graph::reachable(int from, VertexSet within) const -> VertexSet
    {
        VertexSet seen = static_cast<VertexSet>(1u << from);
        VertexSet frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1)
                next |= _adj[std::countr_zero(static_cast<unsigned>(f))];
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    auto Graph::is_connected() const -> bool
    {
        if (_order <= 1)
            return true;
        return reachable(0, full_set(_order)) == full_set(_order);
    }

    auto Graph::component_count() const -> int
    {
        int count = 0;
        VertexSet left = full_set(_order);
        while (left) {
            int v = std::countr_zero(static_cast<unsigned>(left));
            left &= static_cast<VertexSet>(~reachable(v, left));
            ++count;
        }
        return count;
    }

    Multigraph::Multigraph(int order) :
        _order(order)
    {
        if (order < 0 || order > max_order)
            throw UnsupportedOrder(order);
    }

    Multigraph::Multigraph(const Graph & g) :
        Multigraph(g.order())
    {
        for (auto [a, b] : g.edges())
            add_edge(a, b);
    }

    auto Multigraph::set_multiplicity(int a, int b, int m) -> void
    {
        if (a == b)
            throw Error("multiplicity on a loop");
        if (m < 0 || m > 255)
            throw Error("multiplicity out of range");
        _mult[a][b] = _mult[b][a] = static_cast<std::uint8_t>(m);
    }

    auto Multigraph::add_edge(int a, int b) -> void
    {
        if (a == b)
            add_loop(a);
        else
            set_multiplicity(a, b, _mult[a][b] + 1);
    }

    auto Multigraph::total_loops() const -> int
    {
        int total = 0;
        for (int v = 0; v < _order; ++v)
            total += _loops[v];
        return total;
    }

    auto Multigraph::edge_count() const -> int
    {
        int total = total_loops();
        for (int j = 1; j < _order; ++j)
            for (int i = 0; i < j; ++i)
                total += _mult[i][j];
        return total;
    }

    auto Multigraph::support(int v) const -> VertexSet
    {
        VertexSet s = 0;
        for (int w = 0; w < _order; ++w)
            if (_mult[v][w])
                s |= static_cast<VertexSet>(1u << w);
        return s;
    }

    auto Multigraph::is_connected() const -> bool
    {
        Graph g(_order);
        for (int j = 1; j < _order; ++j)
            for (int i = 0; i < j; ++i)
                if (_mult[i][j])
                    g.add_edge(i, j);
        return g.is_connected();
    }

    auto Multigraph::deleted(int a, int b) const -> Multigraph
    {
        if (! _mult[a][b])
            throw Error("no edge to delete");
        Multigraph h = *this;
        --h._mult[a][b];
        --h._mult[b][a];
        return h;
    }

    auto Multigraph::contracted(int a, int b) const -> Multigraph
    {
        if (a == b)
            throw Error("cannot contract a loop");
        Multigraph h(_order - 1);
        std::array<int, max_order> label{};
        int next = 0;
        for (int v = 0; v < _order; ++v)
            label[v] = (v == b) ? -1 : next++;
        label[b] = label[a];

        for (int v = 0; v < _order; ++v)
            h._loops[label[v]] += _loops[v];
        h._loops[label[a]] += std::max(0, _mult[a][b] - 1);

        for (int j = 1; j < _order; ++j)
            for (int i = 0; i < j; ++i) {
                if (! _mult[i][j] || (i == a && j == b) || (i == b && j == a))
                    continue;
                int li = label[i], lj = label[j];
                h.set_multiplicity(li, lj, h._mult[li][lj] + _mult[i][j]);
            }
        return h;
    }

    auto Multigraph::is_simple() const -> bool
    {
        if (total_loops())
            return false;
        for (int j = 1; j < _order; ++j)
            for (int i = 0; i < j; ++i)
                if (_mult[i][j] > 1)
                    return false;
        return true;
    }

    auto code_of(const Graph & g) -> GraphCode
    {
        check_order(g.order());
        GraphCode c;
        c.order = static_cast<std::uint8_t>(g.order());
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i)
                if (g.adjacent(i, j))
                    c.bits |= std::uint64_t{1} << pair_index(i, j);
        return c;
    }

    auto graph_of(GraphCode code) -> Graph
    {
        check_order(code.order);
        int n = code.order;
        if (pair_count(n) < 64 && (code.bits >> pair_count(n)) != 0)
            throw Error("code has bits beyond its order");
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((code.bits >> pair_index(i, j)) & 1u)
                    g.add_edge(i, j);
        return g;
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        check_order(g.order());
        int n = g.order();
        std::string out;
        out.push_back(static_cast<char>(63 + n));
        int bits = pair_count(n);
        auto code = code_of(g).bits;
        for (int start = 0; start < bits; start += 6) {
            int value = 0;
            for (int k = 0; k < 6; ++k) {
                int idx = start + k;
                int bit = idx < bits ? static_cast<int>((code >> idx) & 1u) : 0;
                value = (value << 1) | bit;
            }
            out.push_back(static_cast<char>(63 + value));
        }
        return out;
    }

    auto decode_graph6(std::string_view text) -> Graph
    {
        std::size_t base = 0;
        if (text.starts_with(">>graph6<<")) {
            text.remove_prefix(10);
            base = 10;
        }
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("empty graph6 string", base);

        auto c0 = static_cast<unsigned char>(text[0]);
        if (c0 < 63 || c0 > 126)
            throw ParseError("invalid graph6 order byte", base);
        if (c0 == 126)
            throw UnsupportedOrder(63);
        int n = c0 - 63;
        if (n == 0 || n > max_order)
            throw UnsupportedOrder(n);

        int bits = pair_count(n);
        std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
        if (text.size() != expected)
            throw ParseError("graph6 string has length " + std::to_string(text.size()) + ", expected " + std::to_string(expected),
                base + std::min(text.size(), expected));

        std::uint64_t code = 0;
        for (std::size_t pos = 1; pos < text.size(); ++pos) {
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 data byte", base + pos);
            int value = c - 63;
            for (int k = 0; k < 6; ++k) {
                int idx = static_cast<int>(pos - 1) * 6 + k;
                int bit = (value >> (5 - k)) & 1;
                if (idx >= bits) {
                    if (bit)
                        throw ParseError("nonzero graph6 padding", base + pos);
                    continue;
                }
                if (bit)
                    code |= std::uint64_t{1} << idx;
            }
        }
        return graph_of(GraphCode{static_cast<std::uint8_t>(n), code});
    }

    auto degree_sequence(const Graph & g) -> std::vector<int>
    {
        std::vector<int> d(g.order());
        for (int v = 0; v < g.order(); ++v)
            d[v] = g.degree(v);
        std::ranges::sort(d, std::greater<>{});
        return d;
    }
}
