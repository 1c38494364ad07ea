#include <efg/store.hpp>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace efg
{
    namespace
    {
        constexpr char magic[4] = {'E', 'F', 'G', '1'};
        constexpr std::uint32_t format_version = 1;

        auto width_of(ColumnKind kind) -> std::uint8_t
        {
            return kind == ColumnKind::boolean ? 1 : 8;
        }

        class Writer
        {
        public:
            template <typename T>
            auto put(T value) -> void
            {
                auto u = static_cast<std::make_unsigned_t<T>>(value);
                for (std::size_t i = 0; i < sizeof(T); ++i)
                    bytes.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
            }

            auto put_bytes(std::string_view s) -> void { bytes.insert(bytes.end(), s.begin(), s.end()); }

            std::vector<std::uint8_t> bytes;
        };

        class Reader
        {
        public:
            explicit Reader(const std::vector<std::uint8_t> & b) :
                _b(b)
            {
            }

            template <typename T>
            auto get() -> T
            {
                need(sizeof(T));
                std::make_unsigned_t<T> u = 0;
                for (std::size_t i = 0; i < sizeof(T); ++i)
                    u |= static_cast<std::make_unsigned_t<T>>(static_cast<std::make_unsigned_t<T>>(_b[_pos + i]) << (8 * i));
                _pos += sizeof(T);
                return static_cast<T>(u);
            }

            auto get_bytes(std::size_t n) -> std::string
            {
                need(n);
                std::string s(reinterpret_cast<const char *>(_b.data() + _pos), n);
                _pos += n;
                return s;
            }

            auto at_end() const -> bool { return _pos == _b.size(); }

        private:
            const std::vector<std::uint8_t> & _b;
            std::size_t _pos = 0;

            auto need(std::size_t n) -> void
            {
                if (_pos + n > _b.size())
                    throw IoError("truncated database file");
            }
        };

        auto write_file(const std::filesystem::path & path, std::string_view data) -> void
        {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            if (! f)
                throw IoError("cannot write " + path.string());
            f.write(data.data(), static_cast<std::streamsize>(data.size()));
            f.close();
            if (! f)
                throw IoError("write failed for " + path.string());
        }

        auto encode(const std::vector<InvariantRecord> & records) -> std::vector<std::uint8_t>
        {
            const auto & catalog = column_catalog();
            Writer w;
            w.put_bytes(std::string_view(magic, 4));
            w.put<std::uint32_t>(format_version);
            w.put<std::uint32_t>(static_cast<std::uint32_t>(catalog.size()));
            w.put<std::uint64_t>(records.size());
            for (const auto & c : catalog) {
                w.put<std::uint16_t>(static_cast<std::uint16_t>(c.name.size()));
                w.put_bytes(c.name);
                w.put<std::uint8_t>(static_cast<std::uint8_t>(c.kind));
                w.put<std::uint8_t>(width_of(c.kind));
            }

            for (const auto & r : records) {
                w.put<std::uint8_t>(r.code.order);
                w.put<std::uint64_t>(r.code.bits);
                for (std::size_t c = 0; c < catalog.size(); ++c) {
                    if (width_of(catalog[c].kind) == 1)
                        w.put<std::uint8_t>(static_cast<std::uint8_t>(r.values[c]));
                    else
                        w.put<std::int64_t>(r.values[c]);
                }
            }

            // Per column: entries (order, value, begin, end) over a row
            // permutation sorted by (order, value, row).
            std::vector<std::uint32_t> perm(records.size());
            for (std::size_t c = 0; c < catalog.size(); ++c) {
                std::iota(perm.begin(), perm.end(), 0u);
                auto key = [&](std::uint32_t i) { return std::pair(records[i].code.order, records[i].values[c]); };
                std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return key(a) < key(b); });
                std::vector<std::tuple<std::uint8_t, std::int64_t, std::uint32_t, std::uint32_t>> entries;
                for (std::uint32_t i = 0; i < perm.size(); ++i) {
                    auto [o, v] = key(perm[i]);
                    if (entries.empty() || std::get<0>(entries.back()) != o || std::get<1>(entries.back()) != v)
                        entries.emplace_back(o, v, i, i);
                    std::get<3>(entries.back()) = i + 1;
                }
                w.put<std::uint32_t>(static_cast<std::uint32_t>(entries.size()));
                for (auto [o, v, b, e] : entries) {
                    w.put<std::uint8_t>(o);
                    w.put<std::int64_t>(v);
                    w.put<std::uint32_t>(b);
                    w.put<std::uint32_t>(e);
                }
                for (auto p : perm)
                    w.put<std::uint32_t>(p);
            }
            return std::move(w.bytes);
        }
    }

    auto side_file_path(const std::filesystem::path & db) -> std::filesystem::path
    {
        auto p = db;
        p += ".poly";
        return p;
    }

    auto write_database(std::vector<InvariantRecord> records, const std::filesystem::path & out, bool with_side_file) -> void
    {
        std::sort(records.begin(), records.end(), [](const auto & a, const auto & b) { return a.code < b.code; });
        for (std::size_t i = 1; i < records.size(); ++i)
            if (records[i].code == records[i - 1].code)
                throw Error("duplicate graph code in records");
        for (const auto & r : records)
            if (r.values.size() != column_catalog().size())
                throw Error("record does not match the column catalog");

        auto main_tmp = out;
        main_tmp += ".partial";
        auto side = side_file_path(out);
        auto side_tmp = side;
        side_tmp += ".partial";
        try {
            auto bytes = encode(records);
            write_file(main_tmp, std::string_view(reinterpret_cast<const char *>(bytes.data()), bytes.size()));
            if (with_side_file) {
                std::map<std::uint64_t, std::string> texts;
                for (const auto & r : records)
                    texts.insert(r.texts.begin(), r.texts.end());
                std::string lines;
                for (const auto & [digest, text] : texts) {
                    std::string flat = text;
                    std::replace(flat.begin(), flat.end(), '\n', ';');
                    lines += std::to_string(digest) + "\t" + flat + "\n";
                }
                write_file(side_tmp, lines);
                std::filesystem::rename(side_tmp, side);
            }
            else {
                std::filesystem::remove(side);
            }
            std::filesystem::rename(main_tmp, out);
        }
        catch (...) {
            std::error_code ignored;
            std::filesystem::remove(main_tmp, ignored);
            std::filesystem::remove(side_tmp, ignored);
            throw;
        }
    }

    auto comparator_symbol(Comparator c) -> std::string_view
    {
        switch (c) {
            case Comparator::eq: return "=";
            case Comparator::ne: return "!=";
            case Comparator::lt: return "<";
            case Comparator::le: return "<=";
            case Comparator::gt: return ">";
            case Comparator::ge: return ">=";
        }
        return "?";
    }

    auto compare(std::int64_t value, Comparator c, std::int64_t bound) -> bool
    {
        switch (c) {
            case Comparator::eq: return value == bound;
            case Comparator::ne: return value != bound;
            case Comparator::lt: return value < bound;
            case Comparator::le: return value <= bound;
            case Comparator::gt: return value > bound;
            case Comparator::ge: return value >= bound;
        }
        return false;
    }

    auto QueryCondition::to_text() const -> std::string
    {
        return column + " " + std::string(comparator_symbol(comparator)) + " " + std::to_string(value);
    }

    auto Database::open(const std::filesystem::path & path) -> Database
    {
        std::ifstream f(path, std::ios::binary);
        if (! f)
            throw DatabaseNotFound(path.string());
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());

        Reader r(bytes);
        if (r.get_bytes(4) != std::string_view(magic, 4))
            throw IoError(path.string() + " is not an EFG1 database");
        if (auto v = r.get<std::uint32_t>(); v != format_version)
            throw IoError("unsupported database version " + std::to_string(v));
        auto columns = r.get<std::uint32_t>();
        auto rows = r.get<std::uint64_t>();
        const auto & catalog = column_catalog();
        if (columns != catalog.size())
            throw IoError("database column table does not match this build");
        std::vector<std::uint8_t> widths;
        for (std::uint32_t c = 0; c < columns; ++c) {
            auto name = r.get_bytes(r.get<std::uint16_t>());
            auto kind = r.get<std::uint8_t>();
            widths.push_back(r.get<std::uint8_t>());
            if (name != catalog[c].name || kind != static_cast<std::uint8_t>(catalog[c].kind) || widths.back() != width_of(catalog[c].kind))
                throw IoError("database column table does not match this build");
        }

        Database db;
        db._path = path;
        db._codes.resize(rows);
        db._values.assign(columns, std::vector<std::int64_t>(rows));
        for (std::uint64_t i = 0; i < rows; ++i) {
            db._codes[i].order = r.get<std::uint8_t>();
            db._codes[i].bits = r.get<std::uint64_t>();
            for (std::uint32_t c = 0; c < columns; ++c)
                db._values[c][i] = widths[c] == 1 ? r.get<std::uint8_t>() : r.get<std::int64_t>();
        }
        db._index.resize(columns);
        db._permutation.resize(columns);
        for (std::uint32_t c = 0; c < columns; ++c) {
            auto entries = r.get<std::uint32_t>();
            for (std::uint32_t e = 0; e < entries; ++e) {
                IndexEntry x;
                x.order = r.get<std::uint8_t>();
                x.value = r.get<std::int64_t>();
                x.begin = r.get<std::uint32_t>();
                x.end = r.get<std::uint32_t>();
                if (x.begin >= x.end || x.end > rows)
                    throw IoError("corrupt index in " + path.string());
                db._index[c].push_back(x);
            }
            db._permutation[c].resize(rows);
            for (auto & p : db._permutation[c]) {
                p = r.get<std::uint32_t>();
                if (p >= rows)
                    throw IoError("corrupt index in " + path.string());
            }
        }
        if (! r.at_end())
            throw IoError("trailing bytes in " + path.string());
        return db;
    }

    auto Database::orders() const -> std::vector<int>
    {
        std::vector<int> result;
        for (auto c : _codes)
            if (result.empty() || result.back() != c.order)
                result.push_back(c.order);
        return result;
    }

    auto Database::max_order() const -> int
    {
        return _codes.empty() ? 0 : _codes.back().order;
    }

    auto Database::order_range(int order) const -> std::pair<std::size_t, std::size_t>
    {
        auto lo = std::lower_bound(_codes.begin(), _codes.end(), GraphCode{static_cast<std::uint8_t>(order), 0});
        auto hi = std::lower_bound(_codes.begin(), _codes.end(), GraphCode{static_cast<std::uint8_t>(order + 1), 0});
        return {static_cast<std::size_t>(lo - _codes.begin()), static_cast<std::size_t>(hi - _codes.begin())};
    }

    auto Database::candidates(const QueryCondition & q, std::size_t column, int order) const -> std::vector<std::size_t>
    {
        const auto & entries = _index[column];
        auto lo = std::lower_bound(entries.begin(), entries.end(), order, [](const IndexEntry & e, int o) { return e.order < o; });
        std::vector<std::size_t> rows;
        for (auto it = lo; it != entries.end() && it->order == order; ++it)
            if (compare(it->value, q.comparator, q.value))
                for (auto p = it->begin; p < it->end; ++p)
                    rows.push_back(_permutation[column][p]);
        return rows;
    }

    auto Database::matching_rows(const std::vector<QueryCondition> & conditions, int order) const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> columns;
        for (const auto & c : conditions)
            columns.push_back(column_index(c.column));

        std::vector<std::size_t> rows;
        if (conditions.empty()) {
            auto [lo, hi] = order_range(order);
            rows.resize(hi - lo);
            std::iota(rows.begin(), rows.end(), lo);
            return rows;
        }

        // Drive from the most selective indexed condition, then filter.
        std::size_t driver = 0;
        for (std::size_t i = 0; i < conditions.size(); ++i) {
            auto c = candidates(conditions[i], columns[i], order);
            if (i == 0 || c.size() < rows.size()) {
                rows = std::move(c);
                driver = i;
            }
        }
        std::erase_if(rows, [&](std::size_t row) {
            for (std::size_t i = 0; i < conditions.size(); ++i)
                if (i != driver && ! compare(_values[columns[i]][row], conditions[i].comparator, conditions[i].value))
                    return true;
            return false;
        });
        std::sort(rows.begin(), rows.end());
        return rows;
    }

    auto Database::text_for_digest(std::uint64_t digest) const -> std::optional<std::string>
    {
        if (! _texts) {
            _texts.emplace();
            std::ifstream f(side_file_path(_path));
            std::string line;
            while (std::getline(f, line)) {
                auto tab = line.find('\t');
                if (tab == std::string::npos)
                    continue;
                auto text = line.substr(tab + 1);
                std::replace(text.begin(), text.end(), ';', '\n');
                _texts->emplace(std::stoull(line.substr(0, tab)), text);
            }
        }
        if (auto it = _texts->find(digest); it != _texts->end())
            return it->second;
        return std::nullopt;
    }

    auto query(const Database & db, const std::vector<QueryCondition> & conditions, int order) -> std::vector<GraphCode>
    {
        for (const auto & c : conditions)
            column_index(c.column);
        std::vector<GraphCode> result;
        for (int n : db.orders())
            if (order == 0 || n == order)
                for (auto row : db.matching_rows(conditions, n))
                    result.push_back(db.code(row));
        return result;
    }

    auto export_csv(const Database & db, const std::filesystem::path & out) -> void
    {
        const auto & catalog = column_catalog();
        std::ostringstream s;
        s << "order,bits";
        for (const auto & c : catalog)
            s << ',' << c.name;
        s << '\n';
        for (std::size_t row = 0; row < db.size(); ++row) {
            s << int(db.code(row).order) << ',' << db.code(row).bits;
            for (std::size_t c = 0; c < catalog.size(); ++c) {
                auto v = db.value(row, c);
                if (catalog[c].kind == ColumnKind::digest)
                    s << ',' << std::bit_cast<std::uint64_t>(v);
                else
                    s << ',' << v;
            }
            s << '\n';
        }
        write_file(out, s.str());
    }

    auto import_csv(const std::filesystem::path & csv, const std::filesystem::path & out) -> void
    {
        std::ifstream f(csv);
        if (! f)
            throw IoError("cannot read " + csv.string());
        const auto & catalog = column_catalog();
        std::string line;
        std::getline(f, line);
        std::string expected = "order,bits";
        for (const auto & c : catalog)
            expected += "," + c.name;
        if (line != expected)
            throw ParseError("CSV header does not match the column catalog", 0);

        std::vector<InvariantRecord> records;
        std::size_t line_number = 1;
        while (std::getline(f, line)) {
            ++line_number;
            if (line.empty())
                continue;
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                cells.push_back(cell);
            if (cells.size() != catalog.size() + 2)
                throw ParseError("wrong field count on CSV line " + std::to_string(line_number), line_number);
            try {
                InvariantRecord r;
                r.code = {static_cast<std::uint8_t>(std::stoi(cells[0])), std::stoull(cells[1])};
                graph_of(r.code);
                for (std::size_t c = 0; c < catalog.size(); ++c)
                    r.values.push_back(catalog[c].kind == ColumnKind::digest ? std::bit_cast<std::int64_t>(std::stoull(cells[c + 2]))
                                                                             : std::stoll(cells[c + 2]));
                records.push_back(std::move(r));
            }
            catch (const std::logic_error &) {
                throw ParseError("bad number on CSV line " + std::to_string(line_number), line_number);
            }
        }
        write_database(std::move(records), out, false);
    }
}
