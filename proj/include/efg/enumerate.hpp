#pragma once

#include <efg/graph.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace efg
{
    enum class EnumerationMethod
    {
        canonical_augmentation,
        brute_filter
    };

    inline constexpr int max_augmentation_order = 9;
    inline constexpr int max_brute_order = 7;

    struct Shard
    {
        int index = 0;
        int total = 1;
    };

    struct EnumerationPlan
    {
        int order = 1;
        EnumerationMethod method = EnumerationMethod::canonical_augmentation;
        std::optional<Shard> shard;
    };

    /// Validates order and shard bounds for the chosen method.
    auto validate(const EnumerationPlan & plan) -> void;

    /// One canonical code per isomorphism class of connected graphs of the
    /// given order, ascending. A shard receives the children of every
    /// `total`-th parent (augmentation) or every `total`-th code (brute force).
    auto enumerate_connected(const EnumerationPlan & plan) -> std::vector<GraphCode>;
    auto enumerate_connected(const EnumerationPlan & plan, const std::function<void(GraphCode)> & sink) -> void;

    /// Filters all 2^(n(n-1)/2) labelled graphs; order <= 7.
    auto enumerate_bruteforce(int order) -> std::vector<GraphCode>;

    /// Canonical codes of every graph (connected or not) of the given order,
    /// ascending; the parents for augmentation.
    auto enumerate_all(int order) -> std::vector<GraphCode>;
}
