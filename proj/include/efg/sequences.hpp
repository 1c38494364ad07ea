#pragma once

#include <efg/store.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace efg
{
    struct SequenceResult
    {
        std::string label;
        std::vector<QueryCondition> conditions;
        std::optional<std::string> distinct_of;
        /// terms[k] belongs to order k + 1.
        std::vector<std::int64_t> terms;

        auto nonzero_count() const -> int;
        /// `label: t1,t2,...,tn`
        auto to_text() const -> std::string;
        auto to_json() const -> std::string;
    };

    auto terms_text(const std::vector<std::int64_t> & terms) -> std::string;
    auto conditions_text(const std::vector<QueryCondition> & conditions) -> std::string;

    /// terms[n] = |query(db, conditions, n)| for n = 1..max_order.
    auto build_sequence(const Database & db, const std::vector<QueryCondition> & conditions, int max_order) -> SequenceResult;

    /// Targets: any column, `fractional_chromatic` (the numerator/denominator
    /// pair), or one of char_poly, laplacian_poly, tutte_poly, chromatic_poly,
    /// degree_sequence.
    auto distinct_value_sequence(const Database & db, const std::string & target, int max_order) -> SequenceResult;
    auto distinct_targets() -> std::vector<std::string>;

    /// At least four nonzero terms.
    auto submission_filter(const SequenceResult & seq) -> bool;
    auto submission_filter(const std::vector<std::int64_t> & terms) -> bool;
}
