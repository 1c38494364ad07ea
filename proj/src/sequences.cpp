#include <efg/sequences.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>

namespace efg
{
    namespace
    {
        auto check_orders(const Database & db, int max_order) -> void
        {
            if (max_order < 1 || max_order > db.max_order())
                throw Error("max order " + std::to_string(max_order) + " outside the database (1.." + std::to_string(db.max_order()) + ")");
            auto present = db.orders();
            for (int n = 1; n <= max_order; ++n)
                if (! std::binary_search(present.begin(), present.end(), n))
                    throw Error("database has no graphs of order " + std::to_string(n));
        }

        auto digest_column(const std::string & target) -> std::optional<std::string>
        {
            for (const char * t : {"char_poly", "laplacian_poly", "tutte_poly", "chromatic_poly", "degree_sequence"})
                if (target == t)
                    return target + "_digest";
            return std::nullopt;
        }
    }

    auto SequenceResult::nonzero_count() const -> int
    {
        return static_cast<int>(std::count_if(terms.begin(), terms.end(), [](auto t) { return t != 0; }));
    }

    auto terms_text(const std::vector<std::int64_t> & terms) -> std::string
    {
        std::string s;
        for (auto t : terms)
            s += (s.empty() ? "" : ",") + std::to_string(t);
        return s;
    }

    auto conditions_text(const std::vector<QueryCondition> & conditions) -> std::string
    {
        std::string s;
        for (const auto & c : conditions)
            s += (s.empty() ? "" : " & ") + c.to_text();
        return s;
    }

    auto SequenceResult::to_text() const -> std::string
    {
        return label + ": " + terms_text(terms);
    }

    auto SequenceResult::to_json() const -> std::string
    {
        nlohmann::ordered_json j;
        j["label"] = label;
        if (distinct_of)
            j["distinct_of"] = *distinct_of;
        else {
            j["conditions"] = nlohmann::ordered_json::array();
            for (const auto & c : conditions)
                j["conditions"].push_back({{"column", c.column}, {"comparator", comparator_symbol(c.comparator)}, {"value", c.value}});
        }
        j["first_order"] = 1;
        j["terms"] = terms;
        j["nonzero_count"] = nonzero_count();
        j["submittable"] = submission_filter(*this);
        return j.dump();
    }

    auto build_sequence(const Database & db, const std::vector<QueryCondition> & conditions, int max_order) -> SequenceResult
    {
        for (const auto & c : conditions)
            column_index(c.column);
        check_orders(db, max_order);
        SequenceResult r;
        r.label = conditions.empty() ? "all" : conditions_text(conditions);
        r.conditions = conditions;
        for (int n = 1; n <= max_order; ++n)
            r.terms.push_back(static_cast<std::int64_t>(db.matching_rows(conditions, n).size()));
        return r;
    }

    auto distinct_targets() -> std::vector<std::string>
    {
        std::vector<std::string> t{"fractional_chromatic", "char_poly", "laplacian_poly", "tutte_poly", "chromatic_poly", "degree_sequence"};
        for (const auto & c : column_catalog())
            t.push_back(c.name);
        return t;
    }

    auto distinct_value_sequence(const Database & db, const std::string & target, int max_order) -> SequenceResult
    {
        std::vector<std::size_t> columns;
        if (target == "fractional_chromatic")
            columns = {column_index("fractional_chromatic_num"), column_index("fractional_chromatic_den")};
        else if (auto digest = digest_column(target))
            columns = {column_index(*digest)};
        else {
            try {
                columns = {column_index(target)};
            }
            catch (const UnknownColumn &) {
                std::string valid;
                for (const auto & t : distinct_targets())
                    valid += (valid.empty() ? "" : ", ") + t;
                throw UnknownColumn(target, valid);
            }
        }
        check_orders(db, max_order);

        SequenceResult r;
        r.label = "distinct " + target;
        r.distinct_of = target;
        for (int n = 1; n <= max_order; ++n) {
            auto [lo, hi] = db.order_range(n);
            std::set<std::vector<std::int64_t>> seen;
            for (auto row = lo; row < hi; ++row) {
                std::vector<std::int64_t> key;
                for (auto c : columns)
                    key.push_back(db.value(row, c));
                seen.insert(std::move(key));
            }
            r.terms.push_back(static_cast<std::int64_t>(seen.size()));
        }
        return r;
    }

    auto submission_filter(const std::vector<std::int64_t> & terms) -> bool
    {
        return std::count_if(terms.begin(), terms.end(), [](auto t) { return t != 0; }) >= 4;
    }

    auto submission_filter(const SequenceResult & seq) -> bool
    {
        return submission_filter(seq.terms);
    }
}
