#pragma once

#include <efg/error.hpp>

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace efg
{
    inline constexpr int max_order = 10;

    /// Vertex subsets as bitmasks, bit v set for vertex v.
    using VertexSet = std::uint16_t;

    constexpr auto pair_count(int order) -> int
    {
        return order * (order - 1) / 2;
    }

    /// Position of the pair (i, j), i < j, in the column-major upper triangle:
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    constexpr auto pair_index(int i, int j) -> int
    {
        return j * (j - 1) / 2 + i;
    }

    constexpr auto full_set(int order) -> VertexSet
    {
        return static_cast<VertexSet>((1u << order) - 1u);
    }

    auto check_order(int order) -> void;

    struct GraphCode
    {
        std::uint8_t order = 0;
        std::uint64_t bits = 0;

        auto operator<=>(const GraphCode &) const = default;

        /// Fixed 9-byte little-endian form: u8 order, u64 bits.
        auto serialize() const -> std::array<std::uint8_t, 9>;
        static auto deserialize(std::span<const std::uint8_t, 9> bytes) -> GraphCode;
    };

    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int order);

        static auto from_edges(int order, std::span<const std::pair<int, int>> edges) -> Graph;
        static auto complete(int order) -> Graph;
        static auto path(int order) -> Graph;
        static auto cycle(int order) -> Graph;
        static auto star(int leaves) -> Graph;

        auto order() const -> int { return _order; }

        auto add_edge(int a, int b) -> void;
        auto remove_edge(int a, int b) -> void;

        auto adjacent(int a, int b) const -> bool { return (_adj[a] >> b) & 1u; }
        auto neighbours(int v) const -> VertexSet { return _adj[v]; }
        auto degree(int v) const -> int { return std::popcount(static_cast<unsigned>(_adj[v])); }
        auto edge_count() const -> int;
        auto edges() const -> std::vector<std::pair<int, int>>;

        auto min_degree() const -> int;
        auto max_degree() const -> int;

        auto complement() const -> Graph;

        /// Subgraph induced by `keep`, relabelled in increasing vertex order.
        auto induced(VertexSet keep) const -> Graph;
        auto without_vertex(int v) const -> Graph;

        /// New graph where vertex v becomes new_label[v].
        auto relabelled(std::span<const int> new_label) const -> Graph;

        /// Vertices reachable from `from` while staying inside `within`.
        auto reachable(int from, VertexSet within) const -> VertexSet;
        auto is_connected() const -> bool;
        auto component_count() const -> int;

        auto operator==(const Graph &) const -> bool = default;

    private:
        int _order = 0;
        std::array<VertexSet, max_order> _adj{};
    };

    /// Loopless edge-multiset form used by deletion-contraction; loops are
    /// tracked as a per-vertex count.
    class Multigraph
    {
    public:
        Multigraph() = default;
        explicit Multigraph(int order);
        explicit Multigraph(const Graph & g);

        auto order() const -> int { return _order; }
        auto multiplicity(int a, int b) const -> int { return _mult[a][b]; }
        auto set_multiplicity(int a, int b, int m) -> void;
        auto add_edge(int a, int b) -> void;
        auto loops(int v) const -> int { return _loops[v]; }
        auto add_loop(int v) -> void { ++_loops[v]; }
        auto total_loops() const -> int;
        auto edge_count() const -> int;

        auto support(int v) const -> VertexSet;
        auto is_connected() const -> bool;

        /// Removes one copy of the edge a-b.
        auto deleted(int a, int b) const -> Multigraph;
        /// Merges b into a; the a-b copies other than the contracted one become loops.
        auto contracted(int a, int b) const -> Multigraph;

        auto is_simple() const -> bool;

    private:
        int _order = 0;
        std::array<std::array<std::uint8_t, max_order>, max_order> _mult{};
        std::array<int, max_order> _loops{};
    };

    auto code_of(const Graph & g) -> GraphCode;
    auto graph_of(GraphCode code) -> Graph;

    auto encode_graph6(const Graph & g) -> std::string;
    auto decode_graph6(std::string_view text) -> Graph;

    /// Degrees in non-increasing order.
    auto degree_sequence(const Graph & g) -> std::vector<int>;
}
