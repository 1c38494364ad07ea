#include <efg/oeis.hpp>

#include <doctest.h>

#include <sstream>

using namespace efg;

namespace
{
    auto catalog() -> std::vector<OeisEntry>
    {
        std::istringstream in("# OEIS stripped\n"
                              "\n"
                              "A000055 ,1,1,1,1,2,3,6,11,23,47,\n"
                              "A000088 ,1,1,2,4,11,34,156,1044,12346,\n"
                              "A001349 ,1,1,1,2,6,21,112,853,11117,261080,\n"
                              "A000012 ,1,1,1,1,1,1,1,1,1,1,\n"
                              "A999999 ,-3,0,12345678901234567890123,\n");
        return parse_stripped(in);
    }
}

TEST_CASE("parsing stripped lines")
{
    auto entries = catalog();
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].id == "A000055");
    CHECK(entries[0].terms == std::vector<std::string>{"1", "1", "1", "1", "2", "3", "6", "11", "23", "47"});
    CHECK(entries[4].terms[2] == "12345678901234567890123");
    for (const auto & e : entries) {
        std::istringstream again(to_stripped_line(e) + "\n");
        auto parsed = parse_stripped(again);
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0].id == e.id);
        CHECK(parsed[0].terms == e.terms);
    }
    CHECK(to_stripped_line(entries[0]) == "A000055 ,1,1,1,1,2,3,6,11,23,47,");

    std::istringstream bad("A000001 ,1,2,\nA000002 ,1,x,\n");
    try {
        parse_stripped(bad);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream no_id("1,2,3\n");
    CHECK_THROWS_AS(parse_stripped(no_id), ParseError);
    CHECK_THROWS_AS(parse_stripped(std::filesystem::path("/nonexistent/stripped")), IoError);
}

TEST_CASE("lookup with shifts")
{
    auto entries = catalog();
    auto trees = lookup(entries, {1, 1, 1, 2, 3, 6, 11, 23});
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].id == "A000055");
    CHECK(trees[0].shift == 1);
    CHECK_FALSE(trees[0].extends);
    CHECK(lookup_report("is_tree = 1", trees) == "is_tree = 1 -> A000055 shift 1\n");

    auto connected = lookup(entries, {1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571});
    REQUIRE(connected.size() == 1);
    CHECK(connected[0].id == "A001349");
    CHECK(connected[0].shift == 1);
    CHECK(connected[0].extends);
    CHECK(lookup_report("all", connected) == "all -> A001349 shift 1 extends\n");

    CHECK(lookup(entries, {1, 1, 1, 2, 3, 6, 11, 23}, 0).empty());
    CHECK(lookup(entries, {1, 2, 4, 11, 34}, 1)[0].shift == 1);

    auto novel = lookup(entries, {3, 1, 4, 1, 5, 9, 2, 6});
    CHECK(novel.empty());
    CHECK(lookup_report("x", novel) == "x -> NOVEL\n");

    auto ones = lookup(entries, {1, 1, 1, 1, 1});
    REQUIRE(ones.size() == 4);
    CHECK(ones[0].id == "A000012");
    CHECK(ones[0].shift == 0);
    CHECK(ones[1].id == "A000012");
    CHECK(ones[1].shift == -1);
    CHECK(ones[2].id == "A000055");
    CHECK(ones[2].shift == -1);
    CHECK(ones[3].id == "A000012");
    CHECK(ones[3].shift == 1);

    // Fewer than four nonzero compared terms never match.
    CHECK(lookup(entries, {0, 0, 0, 0, 1, 1}).empty());
}
