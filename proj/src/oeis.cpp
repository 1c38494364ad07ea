#include <efg/oeis.hpp>

#include <algorithm>
#include <fstream>

namespace efg
{
    namespace
    {
        auto is_id(std::string_view s) -> bool
        {
            return s.size() == 7 && s[0] == 'A' && std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
        }

        auto is_integer(std::string_view s) -> bool
        {
            if (! s.empty() && s[0] == '-')
                s.remove_prefix(1);
            return ! s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        }
    }

    auto parse_stripped(std::istream & in) -> std::vector<OeisEntry>
    {
        std::vector<OeisEntry> entries;
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            auto fail = [&](const std::string & why) { return ParseError("line " + std::to_string(number) + ": " + why, number); };
            auto space = line.find(' ');
            if (space == std::string::npos || ! is_id(std::string_view(line).substr(0, space)))
                throw fail("expected an A-number");
            OeisEntry e;
            e.id = line.substr(0, space);
            std::string_view rest = std::string_view(line).substr(space + 1);
            if (rest.empty() || rest[0] != ',')
                throw fail("expected ',' after the A-number");
            rest.remove_prefix(1);
            while (! rest.empty()) {
                auto comma = rest.find(',');
                auto term = rest.substr(0, comma);
                if (! is_integer(term))
                    throw fail("bad term '" + std::string(term) + "'");
                e.terms.emplace_back(term);
                if (comma == std::string_view::npos)
                    break;
                rest.remove_prefix(comma + 1);
            }
            entries.push_back(std::move(e));
        }
        return entries;
    }

    auto parse_stripped(const std::filesystem::path & path) -> std::vector<OeisEntry>
    {
        std::ifstream in(path);
        if (! in)
            throw IoError("cannot read " + path.string());
        return parse_stripped(in);
    }

    auto to_stripped_line(const OeisEntry & e) -> std::string
    {
        std::string s = e.id + " ,";
        for (const auto & t : e.terms)
            s += t + ",";
        return s;
    }

    auto lookup(const std::vector<OeisEntry> & catalog, const std::vector<std::int64_t> & seq, int max_shift) -> std::vector<OeisMatch>
    {
        std::vector<std::string> ours;
        for (auto t : seq)
            ours.push_back(std::to_string(t));
        int len = static_cast<int>(ours.size());

        std::vector<OeisMatch> matches;
        for (const auto & e : catalog) {
            int entry_len = static_cast<int>(e.terms.size());
            for (int s = -max_shift; s <= max_shift; ++s) {
                int nonzero = 0;
                bool ok = true;
                for (int i = std::max(0, -s); i < len && ok; ++i) {
                    if (i + s >= entry_len)
                        break;
                    ok = ours[i] == e.terms[i + s];
                    nonzero += seq[i] != 0;
                }
                if (ok && nonzero >= 4)
                    matches.push_back({e.id, s, len + s > entry_len});
            }
        }
        std::sort(matches.begin(), matches.end(), [](const auto & a, const auto & b) {
            return std::tuple(std::abs(a.shift), a.shift, a.id) < std::tuple(std::abs(b.shift), b.shift, b.id);
        });
        return matches;
    }

    auto lookup_report(const std::string & label, const std::vector<OeisMatch> & matches) -> std::string
    {
        if (matches.empty())
            return label + " -> NOVEL\n";
        std::string s;
        for (const auto & m : matches)
            s += label + " -> " + m.id + " shift " + std::to_string(m.shift) + (m.extends ? " extends" : "") + "\n";
        return s;
    }
}
