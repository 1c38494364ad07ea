#pragma once

#include <efg/graph.hpp>
#include <efg/polynomial.hpp>

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>

namespace efg
{
    /// det(xI - A), exact, by Faddeev-LeVerrier over the integers.
    auto characteristic_polynomial(const Graph & g) -> IntPolynomial;
    /// Characteristic polynomial of L = D - A.
    auto laplacian_polynomial(const Graph & g) -> IntPolynomial;

    /// True iff the monic polynomial splits into integer linear factors.
    auto has_only_integer_roots(const IntPolynomial & p) -> bool;
    /// True iff p has no repeated root, i.e. gcd(p, p') is constant.
    auto is_square_free(const IntPolynomial & p) -> bool;

    auto is_integral(const Graph & g) -> bool;
    auto simple_spectrum(const Graph & g) -> bool;

    /// Second-smallest Laplacian eigenvalue (floating point, reporting only).
    auto spectral_gap(const Graph & g) -> double;

    /// Number of spanning trees from a Laplacian cofactor (matrix-tree theorem).
    auto spanning_tree_count(const Graph & g) -> BigInt;

    struct TutteLimits
    {
        /// Maximum deletion-contraction expansions for one polynomial.
        std::size_t max_expansions = 50'000'000;
        /// Cache entries kept before the memo is cleared.
        std::size_t max_cache_entries = 2'000'000;
    };

    /// Deletion-contraction with a memo keyed on the canonical form of each
    /// 2-connected piece. Not thread-safe; use one engine per thread.
    class TutteEngine
    {
    public:
        explicit TutteEngine(TutteLimits limits = {});

        /// Tutte polynomial of a connected multigraph (loops allowed).
        auto tutte(const Multigraph & g) -> BivariatePolynomial;
        auto tutte(const Graph & g) -> BivariatePolynomial;

        auto cache_size() const -> std::size_t { return _cache.size(); }

    private:
        TutteLimits _limits;
        std::size_t _expansions = 0;
        std::unordered_map<std::string, std::shared_ptr<const BivariatePolynomial>> _cache;

        struct Weighted;
        auto connected(const Weighted & w) -> BivariatePolynomial;
        auto block(const Weighted & w) -> BivariatePolynomial;
    };

    auto tutte_polynomial(const Multigraph & g) -> BivariatePolynomial;
    auto tutte_polynomial(const Graph & g) -> BivariatePolynomial;

    /// (-1)^(n-c) k^c T(1-k, 0) for a connected graph (c = 1).
    auto chromatic_from_tutte(const BivariatePolynomial & tutte, int order) -> IntPolynomial;
    auto chromatic_polynomial(const Graph & g) -> IntPolynomial;
    auto chromatic_polynomial(const Graph & g, TutteEngine & engine) -> IntPolynomial;

    /// P(G) = P(G - e) - P(G / e) on simple graphs, memoised by canonical
    /// code; independent of the Tutte route.
    class ChromaticDeletionContraction
    {
    public:
        auto polynomial(const Graph & g) -> IntPolynomial;

    private:
        std::unordered_map<std::uint64_t, IntPolynomial> _cache[max_order + 1];
    };

    /// Smallest k >= 1 with P(k) > 0.
    auto chromatic_number(const IntPolynomial & chromatic) -> int;
    auto chromatic_number(const Graph & g) -> int;

    /// Optimum of the fractional colouring LP, solved exactly over the
    /// maximal independent sets.
    auto fractional_chromatic_number(const Graph & g) -> Rational;

    auto has_chromatic_gap(int chromatic, const Rational & fractional) -> bool;

    struct SpectralSummary
    {
        IntPolynomial char_poly;
        IntPolynomial laplacian_poly;
        bool is_integral = false;
        bool simple_spectrum = false;
        double spectral_gap = 0.0;
    };

    auto spectral_summary(const Graph & g) -> SpectralSummary;
}
