#pragma once

#include <efg/algebraic.hpp>
#include <efg/graph.hpp>
#include <efg/structural.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace efg
{
    enum class ColumnKind : std::uint8_t
    {
        integer = 0,
        boolean = 1,
        digest = 2
    };

    struct ColumnInfo
    {
        std::string name;
        ColumnKind kind;
    };

    /// The fixed column set of every database, in file order.
    auto column_catalog() -> const std::vector<ColumnInfo> &;
    /// Throws UnknownColumn listing the valid names.
    auto column_index(std::string_view name) -> std::size_t;
    auto column_names() -> std::string;

    /// 64-bit FNV-1a of a canonical text serialization.
    auto text_digest(std::string_view text) -> std::uint64_t;

    struct InvariantRecord
    {
        GraphCode code;
        /// One value per catalog column; digests are stored bit-cast.
        std::vector<std::int64_t> values;
        /// digest -> canonical text for the polynomial and degree-sequence columns.
        std::map<std::uint64_t, std::string> texts;
    };

    struct RecordOptions
    {
        Conventions conventions;
        TutteLimits tutte;
    };

    auto compute_record(GraphCode code, TutteEngine & engine, const Conventions & conventions = {}) -> InvariantRecord;

    struct BuildOptions
    {
        int workers = 1;
        RecordOptions record;
        /// Receives (order, done, total) after each finished order.
        std::function<void(int, std::size_t, std::size_t)> progress;
    };

    struct BuildSummary
    {
        std::map<int, std::size_t> rows_per_order;
        double seconds = 0.0;
    };

    /// Enumerates and evaluates every connected graph of the given orders and
    /// writes `out` plus the side file `out.poly`. Nothing is left behind on
    /// failure.
    auto build_database(const std::vector<int> & orders, const std::filesystem::path & out, const BuildOptions & options = {})
        -> BuildSummary;

    /// Writes records (any order; sorted here) atomically.
    auto write_database(std::vector<InvariantRecord> records, const std::filesystem::path & out, bool with_side_file = true) -> void;

    auto side_file_path(const std::filesystem::path & db) -> std::filesystem::path;

    enum class Comparator
    {
        eq,
        ne,
        lt,
        le,
        gt,
        ge
    };

    auto comparator_symbol(Comparator c) -> std::string_view;
    auto compare(std::int64_t value, Comparator c, std::int64_t bound) -> bool;

    struct QueryCondition
    {
        std::string column;
        Comparator comparator = Comparator::eq;
        std::int64_t value = 0;

        auto operator==(const QueryCondition &) const -> bool = default;
        auto to_text() const -> std::string;
    };

    class Database
    {
    public:
        /// Throws DatabaseNotFound, or IoError on a malformed file.
        static auto open(const std::filesystem::path & path) -> Database;

        auto size() const -> std::size_t { return _codes.size(); }
        auto code(std::size_t row) const -> GraphCode { return _codes[row]; }
        auto value(std::size_t row, std::size_t column) const -> std::int64_t { return _values[column][row]; }
        auto column_count() const -> std::size_t { return _values.size(); }

        /// Orders present, ascending.
        auto orders() const -> std::vector<int>;
        auto max_order() const -> int;
        /// Half-open row range holding the given order.
        auto order_range(int order) const -> std::pair<std::size_t, std::size_t>;

        /// Rows of the given order satisfying every condition, ascending.
        auto matching_rows(const std::vector<QueryCondition> & conditions, int order) const -> std::vector<std::size_t>;

        /// Canonical text for a digest from the side file, if present.
        auto text_for_digest(std::uint64_t digest) const -> std::optional<std::string>;

    private:
        struct IndexEntry
        {
            std::uint8_t order;
            std::int64_t value;
            std::uint32_t begin;
            std::uint32_t end;
        };

        std::filesystem::path _path;
        std::vector<GraphCode> _codes;
        std::vector<std::vector<std::int64_t>> _values;
        std::vector<std::vector<IndexEntry>> _index;
        std::vector<std::vector<std::uint32_t>> _permutation;
        mutable std::optional<std::map<std::uint64_t, std::string>> _texts;

        auto candidates(const QueryCondition & c, std::size_t column, int order) const -> std::vector<std::size_t>;
    };

    /// Codes of order-n graphs satisfying all conditions, ascending. An
    /// order of 0 means every order.
    auto query(const Database & db, const std::vector<QueryCondition> & conditions, int order) -> std::vector<GraphCode>;

    auto export_csv(const Database & db, const std::filesystem::path & out) -> void;
    /// Reads a CSV produced by export_csv and writes it as a database.
    auto import_csv(const std::filesystem::path & csv, const std::filesystem::path & out) -> void;
}
