#pragma once

#include <efg/graph.hpp>

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace efg
{
    struct DistanceSummary
    {
        int diameter = 0;
        int radius = 0;
        std::vector<int> eccentricity;
    };

    /// All-pairs BFS. Throws on disconnected input.
    auto distances(const Graph & g) -> DistanceSummary;

    /// Shortest-path distance matrix; -1 marks unreachable pairs.
    auto distance_matrix(const Graph & g) -> std::array<std::array<int, max_order>, max_order>;

    struct CycleLengths
    {
        int girth = 0;           // 0 when acyclic
        int circumference = 0;   // 0 when acyclic
    };

    auto cycle_lengths(const Graph & g) -> CycleLengths;

    struct CutStructure
    {
        int articulation_points = 0;
        int endpoints = 0;
        int vertex_connectivity = 0;
        int edge_connectivity = 0;
    };

    auto articulation_points(const Graph & g) -> VertexSet;
    auto vertex_connectivity(const Graph & g) -> int;
    auto edge_connectivity(const Graph & g) -> int;
    auto cut_structure(const Graph & g) -> CutStructure;

    auto is_bipartite(const Graph & g) -> bool;
    auto is_tree(const Graph & g) -> bool;
    auto is_eulerian(const Graph & g) -> bool;
    /// K1 counts as Hamiltonian and K2 does not.
    auto is_hamiltonian(const Graph & g) -> bool;
    auto is_chordal(const Graph & g) -> bool;

    struct BooleanPredicates
    {
        bool is_bipartite = false;
        bool is_tree = false;
        bool is_eulerian = false;
        bool is_hamiltonian = false;
        bool is_chordal = false;
    };

    auto boolean_predicates(const Graph & g) -> BooleanPredicates;

    struct Conventions
    {
        /// Whether K1 counts as regular. The published tables treat it as
        /// not regular while still strongly and distance regular.
        bool k1_regular = false;
    };

    struct Regularity
    {
        bool is_regular = false;
        bool is_strongly_regular = false;
        bool is_distance_regular = false;
    };

    auto is_regular(const Graph & g, const Conventions & conventions = {}) -> bool;
    auto is_strongly_regular(const Graph & g) -> bool;
    auto is_distance_regular(const Graph & g) -> bool;
    auto regularity(const Graph & g, const Conventions & conventions = {}) -> Regularity;

    struct MatchingSummary
    {
        int independence_number = 0;
        int clique_number = 0;
        int matching_number = 0;
        std::uint64_t hosoya_index = 0;
    };

    auto independence_number(const Graph & g) -> int;
    auto clique_number(const Graph & g) -> int;
    auto matching_number(const Graph & g) -> int;
    /// Number of matchings, including the empty one.
    auto hosoya_index(const Graph & g) -> std::uint64_t;
    auto independence_and_matchings(const Graph & g) -> MatchingSummary;

    /// Maximal independent vertex sets, each as a bitmask, ascending.
    auto maximal_independent_sets(const Graph & g) -> std::vector<VertexSet>;

    enum class Pattern
    {
        K3,
        K4,
        K5,
        C4,
        C5,
        C6,
        bull,
        bowtie,
        open_bowtie,
        diamond
    };

    inline constexpr std::array<Pattern, 10> all_patterns = {
        Pattern::K3, Pattern::K4, Pattern::K5, Pattern::C4, Pattern::C5,
        Pattern::C6, Pattern::bull, Pattern::bowtie, Pattern::open_bowtie, Pattern::diamond};

    auto pattern_name(Pattern p) -> std::string_view;
    /// Throws Error for an unknown name.
    auto pattern_from_name(std::string_view name) -> Pattern;
    auto pattern_graph(Pattern p) -> Graph;

    /// Number of (not necessarily induced) subgraphs of g isomorphic to the
    /// pattern, i.e. distinct edge sets forming a copy.
    auto subgraph_count(const Graph & g, const Graph & pattern) -> std::uint64_t;
    auto subgraph_count(const Graph & g, Pattern p) -> std::uint64_t;

    auto is_planar(const Graph & g) -> bool;

    struct StructuralProfile
    {
        int edges = 0;
        int diameter = 0;
        int radius = 0;
        int girth = 0;
        int circumference = 0;
        int articulation_points = 0;
        int endpoints = 0;
        int vertex_connectivity = 0;
        int edge_connectivity = 0;
        bool is_bipartite = false;
        bool is_tree = false;
        bool is_eulerian = false;
        bool is_hamiltonian = false;
        bool is_chordal = false;
        bool is_planar = false;
        bool is_regular = false;
        bool is_strongly_regular = false;
        bool is_distance_regular = false;
        int independence_number = 0;
        int clique_number = 0;
        int matching_number = 0;
        std::uint64_t hosoya_index = 0;
        std::array<std::uint64_t, all_patterns.size()> subgraph_counts{};
    };

    /// Everything above for a connected graph.
    auto structural_profile(const Graph & g, const Conventions & conventions = {}) -> StructuralProfile;
}
