#pragma once

#include <efg/graph.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace efg
{
    /// Symmetric matrix of small non-negative weights. The diagonal acts as a
    /// vertex colour; off-diagonal entries are edge multiplicities. Weights
    /// must be below 64.
    struct WeightMatrix
    {
        int order = 0;
        std::array<std::array<std::uint8_t, max_order>, max_order> w{};
    };

    auto weights_of(const Graph & g) -> WeightMatrix;
    auto weights_of(const Multigraph & g) -> WeightMatrix;

    /// The canonical relabelling: vertex_at[k] is the original vertex placed
    /// at canonical position k.
    ///
    /// Canonical means: among all n! relabellings, the one whose sequence
    /// (diag(p0); diag(p1), w(p1,p0); diag(p2), w(p2,p0), w(p2,p1); ...)
    /// is lexicographically smallest. For simple graphs this is the
    /// lexicographically smallest graph6 bit string, i.e. GraphCode bits read
    /// from bit 0 upwards.
    auto canonical_labeling(const WeightMatrix & m) -> std::vector<int>;

    /// True iff the identity labelling is already canonical.
    auto is_canonical(const WeightMatrix & m) -> bool;

    auto canonical_labeling(const Graph & g) -> std::vector<int>;
    auto canonical_code(const Graph & g) -> GraphCode;
    auto canonical_graph(const Graph & g) -> Graph;
    auto is_canonical(const Graph & g) -> bool;

    /// Byte string identifying the isomorphism class of a loop-coloured
    /// multigraph (order, then canonical weights row by row).
    auto canonical_key(const WeightMatrix & m) -> std::string;

    /// Size of the automorphism group, by orbit-stabilizer over a base of
    /// all vertices.
    auto automorphism_count(const Graph & g) -> std::uint64_t;
}
