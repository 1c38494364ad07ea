#pragma once

#include <efg/store.hpp>

#include <string>
#include <vector>

namespace efg
{
    enum class RelationKind
    {
        equal,
        subset,
        exclusive
    };

    struct Relation
    {
        std::vector<QueryCondition> left;
        std::vector<QueryCondition> right;
        RelationKind kind = RelationKind::subset;
        int verified_to_order = 0;

        /// `LHS  <=  RHS  [to order N]`; `==` for equal, `<>` for exclusive.
        auto to_text() const -> std::string;
    };

    /// Every (column = v) and (column > v) realised in the database, for the
    /// non-digest columns (or only `columns` when given). Boolean columns
    /// contribute equalities only.
    auto condition_catalog(const Database & db, const std::vector<std::string> & columns = {}) -> std::vector<QueryCondition>;

    struct RelationKinds
    {
        bool equal = true;
        bool subset = true;
        bool exclusive = true;
    };

    struct MiningStats
    {
        std::size_t pairs = 0;
        std::size_t prefiltered = 0;
        std::size_t verified = 0;
    };

    /// Pairs of catalog conditions on different columns whose graph sets are
    /// equal, nested or disjoint at every order 1..max_order, each side being
    /// nonempty at some order. Count-incompatible pairs are rejected before
    /// any set comparison.
    auto mine_relations(const Database & db, const std::vector<QueryCondition> & catalog, int max_order, RelationKinds kinds = {},
        MiningStats * stats = nullptr) -> std::vector<Relation>;

    /// Largest n <= db max order such that the relation holds at every order
    /// up to n; 0 when it fails at order 1.
    auto check_relation(const Database & db, const Relation & relation) -> int;
}
