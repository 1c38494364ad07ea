#pragma once

#include <efg/error.hpp>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace efg
{
    struct OeisEntry
    {
        std::string id;
        /// Decimal terms exactly as written, sign included.
        std::vector<std::string> terms;
    };

    /// Lines `Annnnnn ,t1,t2,...,`; `#` lines and blank lines are skipped.
    /// Throws ParseError with the 1-based line number.
    auto parse_stripped(std::istream & in) -> std::vector<OeisEntry>;
    auto parse_stripped(const std::filesystem::path & path) -> std::vector<OeisEntry>;

    auto to_stripped_line(const OeisEntry & e) -> std::string;

    struct OeisMatch
    {
        std::string id;
        /// seq[i] == entry[i + shift] on every overlapping position.
        int shift = 0;
        /// Our terms run past the entry's last term.
        bool extends = false;
    };

    /// Entries containing the sequence as a contiguous run starting within
    /// +-max_shift of position 0, with at least four nonzero terms compared.
    /// Ordered by |shift|, then shift, then id.
    auto lookup(const std::vector<OeisEntry> & catalog, const std::vector<std::int64_t> & seq, int max_shift = 1)
        -> std::vector<OeisMatch>;

    /// `label -> Annnnnn shift s` (one line per match, ` extends` appended
    /// for extension candidates) or `label -> NOVEL`.
    auto lookup_report(const std::string & label, const std::vector<OeisMatch> & matches) -> std::string;
}
