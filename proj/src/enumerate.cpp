#include <efg/enumerate.hpp>
#include <efg/canon.hpp>

#include <algorithm>
#include <set>

namespace efg
{
    namespace
    {
        auto extend(const Graph & parent, VertexSet neighbours) -> Graph
        {
            int n = parent.order() + 1;
            Graph g(n);
            for (auto [a, b] : parent.edges())
                g.add_edge(a, b);
            for (int v = 0; v < n - 1; ++v)
                if ((neighbours >> v) & 1u)
                    g.add_edge(v, n - 1);
            return g;
        }

        // Children of one parent that pass the canonical-deletion test. The
        // deletion vertex of a graph is its minimum-degree vertex placed
        // last by the canonical labelling.
        auto augment(GraphCode parent_code, bool connected_only, std::set<GraphCode> & out) -> void
        {
            auto parent = graph_of(parent_code);
            int n = parent.order() + 1;
            int added = n - 1;

            for (unsigned s = 0; s < (1u << (n - 1)); ++s) {
                auto g = extend(parent, static_cast<VertexSet>(s));
                int low = g.min_degree();
                if (g.degree(added) != low)
                    continue;
                if (connected_only && ! g.is_connected())
                    continue;

                auto vertex_at = canonical_labeling(g);
                int deletion = -1;
                for (int k = n - 1; k >= 0 && deletion < 0; --k)
                    if (g.degree(vertex_at[k]) == low)
                        deletion = vertex_at[k];

                if (deletion != added && canonical_code(g.without_vertex(deletion)) != parent_code)
                    continue;

                std::vector<int> position(n);
                for (int k = 0; k < n; ++k)
                    position[vertex_at[k]] = k;
                out.insert(code_of(g.relabelled(position)));
            }
        }
    }

    auto validate(const EnumerationPlan & plan) -> void
    {
        int limit = plan.method == EnumerationMethod::brute_filter ? max_brute_order : max_augmentation_order;
        if (plan.order < 1 || plan.order > limit)
            throw UnsupportedOrder(plan.order);
        if (plan.shard && (plan.shard->total < 1 || plan.shard->index < 0 || plan.shard->index >= plan.shard->total))
            throw Error("invalid shard " + std::to_string(plan.shard->index) + "/" + std::to_string(plan.shard->total));
    }

    auto enumerate_all(int order) -> std::vector<GraphCode>
    {
        if (order < 1 || order > max_augmentation_order)
            throw UnsupportedOrder(order);
        std::vector<GraphCode> level{GraphCode{1, 0}};
        for (int k = 2; k <= order; ++k) {
            std::set<GraphCode> next;
            for (auto parent : level) {
                std::set<GraphCode> children;
                augment(parent, false, children);
                next.insert(children.begin(), children.end());
            }
            level.assign(next.begin(), next.end());
        }
        return level;
    }

    auto enumerate_connected(const EnumerationPlan & plan, const std::function<void(GraphCode)> & sink) -> void
    {
        validate(plan);
        Shard shard = plan.shard.value_or(Shard{});
        std::vector<GraphCode> result;

        if (plan.method == EnumerationMethod::brute_filter) {
            auto all = enumerate_bruteforce(plan.order);
            for (std::size_t i = 0; i < all.size(); ++i)
                if (static_cast<int>(i % shard.total) == shard.index)
                    result.push_back(all[i]);
        }
        else if (plan.order == 1) {
            if (shard.index == 0)
                result.push_back(GraphCode{1, 0});
        }
        else {
            auto parents = enumerate_all(plan.order - 1);
            std::set<GraphCode> found;
            for (std::size_t i = 0; i < parents.size(); ++i) {
                if (static_cast<int>(i % shard.total) != shard.index)
                    continue;
                std::set<GraphCode> children;
                augment(parents[i], true, children);
                found.insert(children.begin(), children.end());
            }
            result.assign(found.begin(), found.end());
        }

        for (auto c : result)
            sink(c);
    }

    auto enumerate_connected(const EnumerationPlan & plan) -> std::vector<GraphCode>
    {
        std::vector<GraphCode> result;
        enumerate_connected(plan, [&](GraphCode c) { result.push_back(c); });
        return result;
    }

    auto enumerate_bruteforce(int order) -> std::vector<GraphCode>
    {
        if (order < 1 || order > max_brute_order)
            throw UnsupportedOrder(order);
        std::vector<GraphCode> result;
        std::uint64_t limit = std::uint64_t{1} << pair_count(order);
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            GraphCode code{static_cast<std::uint8_t>(order), bits};
            auto g = graph_of(code);
            if (g.is_connected() && is_canonical(g))
                result.push_back(code);
        }
        return result;
    }
}
