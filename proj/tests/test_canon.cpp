#include <efg/canon.hpp>
#include <efg/enumerate.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace efg;

namespace
{
    // Minimum over all n! relabellings of the bit string read from bit 0.
    auto brute_canonical(const Graph & g) -> GraphCode
    {
        int n = g.order();
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<int> best;
        do {
            std::vector<int> bits;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    bits.push_back(g.adjacent(p[i], p[j]));
            if (best.empty() || bits < best)
                best = bits;
        } while (std::next_permutation(p.begin(), p.end()));
        std::uint64_t code = 0;
        for (std::size_t k = 0; k < best.size(); ++k)
            code |= static_cast<std::uint64_t>(best[k]) << k;
        return {static_cast<std::uint8_t>(n), code};
    }

    auto brute_automorphisms(const Graph & g) -> std::uint64_t
    {
        int n = g.order();
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::uint64_t count = 0;
        do {
            count += g.relabelled(p) == g;
        } while (std::next_permutation(p.begin(), p.end()));
        return count;
    }

    auto factorial(int n) -> std::uint64_t
    {
        std::uint64_t f = 1;
        for (int k = 2; k <= n; ++k)
            f *= k;
        return f;
    }

    auto random_graph(std::mt19937_64 & rng, int n) -> Graph
    {
        return graph_of({static_cast<std::uint8_t>(n), rng() & ((std::uint64_t{1} << pair_count(n)) - 1)});
    }
}

TEST_CASE("canonical code matches brute force on every labelled graph up to order 5")
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pair_count(n)); ++bits) {
            auto g = graph_of({static_cast<std::uint8_t>(n), bits});
            auto expected = brute_canonical(g);
            REQUIRE(canonical_code(g) == expected);
            CHECK(is_canonical(g) == (expected.bits == bits));
        }
}

TEST_CASE("canonical code matches brute force on random graphs of orders 6 to 8")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + trial % 3;
        auto g = random_graph(rng, n);
        CHECK(canonical_code(g) == brute_canonical(g));
    }
}

TEST_CASE("canonical code is invariant under relabelling")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % max_order);
        auto g = random_graph(rng, n);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        auto h = g.relabelled(p);
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(code_of(canonical_graph(h)) == canonical_code(g));
        CHECK(automorphism_count(g) == automorphism_count(h));
    }
}

TEST_CASE("structured graphs of order ten")
{
    // Petersen graph: outer 5-cycle, spokes, inner pentagram.
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    CHECK(automorphism_count(petersen) == 120);
    CHECK(automorphism_count(Graph::complete(10)) == 3628800);
    CHECK(automorphism_count(Graph(10)) == 3628800);
    CHECK(automorphism_count(Graph::cycle(10)) == 20);
    CHECK(automorphism_count(Graph::star(9)) == 362880);
    std::vector<int> p{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    CHECK(canonical_code(petersen) == canonical_code(petersen.relabelled(p)));
}

TEST_CASE("automorphism count matches brute force up to order 6")
{
    for (int n = 1; n <= 6; ++n)
        for (auto code : enumerate_all(n)) {
            auto g = graph_of(code);
            REQUIRE(automorphism_count(g) == brute_automorphisms(g));
        }
}

TEST_CASE("orbit-stabilizer: labelled graph count from isomorphism classes")
{
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t labelled = 0;
        for (auto code : enumerate_all(n))
            labelled += factorial(n) / automorphism_count(graph_of(code));
        CHECK(labelled == (std::uint64_t{1} << pair_count(n)));
    }
}

TEST_CASE("automorphism counts agree with the independent oracle")
{
    for (const auto & row : test::oracle_rows())
        CHECK(automorphism_count(graph_of(row.code())) == static_cast<std::uint64_t>(row.integer("automorphism_count")));
}

TEST_CASE("weighted canonical keys separate colours and multiplicities")
{
    WeightMatrix a, b;
    a.order = b.order = 3;
    a.w[0][1] = a.w[1][0] = 2;
    a.w[1][2] = a.w[2][1] = 1;
    b.w[1][2] = b.w[2][1] = 2;
    b.w[0][1] = b.w[1][0] = 1;
    CHECK(canonical_key(a) == canonical_key(b));
    b.w[1][2] = b.w[2][1] = 3;
    CHECK(canonical_key(a) != canonical_key(b));
    WeightMatrix c = a;
    std::swap(c.w[0], c.w[2]);
    for (auto & r : c.w)
        std::swap(r[0], r[2]);
    CHECK(canonical_key(a) == canonical_key(c));
    WeightMatrix d = a;
    d.w[0][0] = 1;
    CHECK(canonical_key(a) != canonical_key(d));
}
