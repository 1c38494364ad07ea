#include <efg/relations.hpp>
#include <efg/sequences.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace efg
{
    namespace
    {
        using Bits = std::vector<std::uint64_t>;

        auto rows_bits(const std::vector<std::size_t> & rows, std::size_t total) -> Bits
        {
            Bits b((total + 63) / 64);
            for (auto r : rows)
                b[r / 64] |= std::uint64_t{1} << (r % 64);
            return b;
        }

        auto holds(RelationKind kind, const std::vector<std::size_t> & a, const std::vector<std::size_t> & b) -> bool
        {
            switch (kind) {
                case RelationKind::equal: return a == b;
                case RelationKind::subset: return std::includes(b.begin(), b.end(), a.begin(), a.end());
                case RelationKind::exclusive: {
                    std::vector<std::size_t> both;
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
                    return both.empty();
                }
            }
            return false;
        }
    }

    auto Relation::to_text() const -> std::string
    {
        std::string_view op = kind == RelationKind::equal ? "==" : kind == RelationKind::subset ? "<=" : "<>";
        return conditions_text(left) + "  " + std::string(op) + "  " + conditions_text(right) + "  [to order " + std::to_string(verified_to_order) + "]";
    }

    auto condition_catalog(const Database & db, const std::vector<std::string> & columns) -> std::vector<QueryCondition>
    {
        const auto & catalog = column_catalog();
        std::vector<std::size_t> chosen;
        if (columns.empty()) {
            for (std::size_t c = 0; c < catalog.size(); ++c)
                if (catalog[c].kind != ColumnKind::digest)
                    chosen.push_back(c);
        }
        else
            for (const auto & name : columns)
                chosen.push_back(column_index(name));

        std::vector<QueryCondition> result;
        for (auto c : chosen) {
            std::set<std::int64_t> values;
            for (std::size_t row = 0; row < db.size(); ++row)
                values.insert(db.value(row, c));
            for (auto v : values)
                result.push_back({catalog[c].name, Comparator::eq, v});
            if (catalog[c].kind == ColumnKind::integer)
                for (auto v : values)
                    if (v != *values.rbegin())
                        result.push_back({catalog[c].name, Comparator::gt, v});
        }
        return result;
    }

    auto mine_relations(const Database & db, const std::vector<QueryCondition> & catalog, int max_order, RelationKinds kinds,
        MiningStats * stats) -> std::vector<Relation>
    {
        if (max_order < 1 || max_order > db.max_order())
            throw Error("max order outside the database");
        std::size_t total = db.order_range(max_order).second;

        struct Prepared
        {
            std::vector<std::int64_t> counts;
            Bits bits;
            std::size_t popcount = 0;
        };
        std::vector<Prepared> prepared;
        std::vector<std::int64_t> order_totals;
        for (int n = 1; n <= max_order; ++n) {
            auto [lo, hi] = db.order_range(n);
            order_totals.push_back(static_cast<std::int64_t>(hi - lo));
        }
        for (const auto & c : catalog) {
            Prepared p;
            std::vector<std::size_t> rows;
            for (int n = 1; n <= max_order; ++n) {
                auto r = db.matching_rows({c}, n);
                p.counts.push_back(static_cast<std::int64_t>(r.size()));
                rows.insert(rows.end(), r.begin(), r.end());
            }
            p.bits = rows_bits(rows, total);
            p.popcount = rows.size();
            prepared.push_back(std::move(p));
        }

        MiningStats local;
        std::vector<std::tuple<RelationKind, std::size_t, std::size_t>> found;
        auto report = [&](std::size_t i, std::size_t j, RelationKind kind) { found.emplace_back(kind, i, j); };
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            if (prepared[i].popcount == 0)
                continue;
            for (std::size_t j = 0; j < catalog.size(); ++j) {
                if (i == j || catalog[i].column == catalog[j].column || prepared[j].popcount == 0)
                    continue;
                ++local.pairs;
                const auto & a = prepared[i];
                const auto & b = prepared[j];
                bool maybe_equal = kinds.equal && a.counts == b.counts;
                bool maybe_subset = kinds.subset && a.counts != b.counts;
                bool maybe_exclusive = kinds.exclusive && i < j;
                for (int k = 0; k < max_order; ++k) {
                    maybe_subset = maybe_subset && a.counts[k] <= b.counts[k];
                    maybe_exclusive = maybe_exclusive && a.counts[k] + b.counts[k] <= order_totals[k];
                }
                maybe_equal = maybe_equal && i < j;
                if (! maybe_equal && ! maybe_subset && ! maybe_exclusive) {
                    ++local.prefiltered;
                    continue;
                }
                bool is_subset = true, is_disjoint = true;
                for (std::size_t w = 0; w < a.bits.size(); ++w) {
                    is_subset = is_subset && (a.bits[w] & ~b.bits[w]) == 0;
                    is_disjoint = is_disjoint && (a.bits[w] & b.bits[w]) == 0;
                }
                ++local.verified;
                if (maybe_equal && is_subset)
                    report(i, j, RelationKind::equal);
                else if (maybe_subset && is_subset)
                    report(i, j, RelationKind::subset);
                if (maybe_exclusive && is_disjoint)
                    report(i, j, RelationKind::exclusive);
            }
        }
        if (stats)
            *stats = local;

        std::vector<std::string> text;
        for (const auto & c : catalog)
            text.push_back(c.to_text());
        std::sort(found.begin(), found.end(), [&](const auto & x, const auto & y) {
            auto [kx, ix, jx] = x;
            auto [ky, iy, jy] = y;
            return std::tie(kx, text[ix], text[jx]) < std::tie(ky, text[iy], text[jy]);
        });
        std::vector<Relation> result;
        result.reserve(found.size());
        for (auto [kind, i, j] : found)
            result.push_back({{catalog[i]}, {catalog[j]}, kind, max_order});
        return result;
    }

    auto check_relation(const Database & db, const Relation & relation) -> int
    {
        int verified = 0;
        for (int n = 1; n <= db.max_order(); ++n) {
            auto a = db.matching_rows(relation.left, n);
            auto b = db.matching_rows(relation.right, n);
            if (! holds(relation.kind, a, b))
                break;
            verified = n;
        }
        return verified;
    }
}
