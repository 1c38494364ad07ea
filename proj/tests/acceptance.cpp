#include <efg/algebraic.hpp>
#include <efg/enumerate.hpp>
#include <efg/oeis.hpp>
#include <efg/relations.hpp>
#include <efg/sequences.hpp>
#include <efg/store.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace efg;

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Fixture
    {
        std::string id;
        std::string group;
        std::string query;
        std::vector<std::int64_t> terms;
    };

    auto split(const std::string & s, char sep) -> std::vector<std::string>
    {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        for (std::string p; std::getline(ss, p, sep);)
            parts.push_back(p);
        return parts;
    }

    auto load_fixtures(const std::string & path) -> std::vector<Fixture>
    {
        std::ifstream in(path);
        if (! in)
            throw IoError("cannot open " + path);
        std::vector<Fixture> fixtures;
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            auto f = split(line, '\t');
            Fixture fx{f.at(0), f.at(1), f.at(2), {}};
            for (const auto & t : split(f.at(3), ','))
                fx.terms.push_back(std::stoll(t));
            fixtures.push_back(fx);
        }
        return fixtures;
    }

    auto find_fixture(const std::vector<Fixture> & all, const std::string & id, const std::string & group = "") -> const Fixture &
    {
        for (const auto & preferred : {group.empty() ? std::string("primary") : group, group})
            for (const auto & f : all)
                if (f.id == id && (preferred.empty() || f.group == preferred))
                    return f;
        throw Error("no fixture " + id);
    }

    auto conditions_of(const std::string & query) -> std::vector<QueryCondition>
    {
        std::vector<QueryCondition> conditions;
        for (const auto & part : split(query, ';')) {
            auto op = part.find_first_of("=>");
            conditions.push_back({part.substr(0, op), part[op] == '>' ? Comparator::gt : Comparator::eq, std::stoll(part.substr(op + 1))});
        }
        return conditions;
    }

    auto computed(const Database & db, const Fixture & f, int max_order) -> std::vector<std::int64_t>
    {
        if (f.query.starts_with("distinct:"))
            return distinct_value_sequence(db, f.query.substr(9), max_order).terms;
        return build_sequence(db, conditions_of(f.query), max_order).terms;
    }

    auto prefix(const std::vector<std::int64_t> & v, int n) -> std::vector<std::int64_t>
    {
        return {v.begin(), v.begin() + std::min<std::size_t>(n, v.size())};
    }

    auto ids(int first, int last) -> std::vector<std::string>
    {
        std::vector<std::string> r;
        for (int i = first; i <= last; ++i) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "A%06d", i);
            r.push_back(buf);
        }
        return r;
    }

    auto primary_ids() -> std::vector<std::string>
    {
        std::vector<std::string> r{"A241454"};
        for (auto range : {std::pair{241706, 241710}, {241711, 241715}, {241767, 241771}, {241702, 241705}, {243781, 243784},
                 {243800, 243801}, {242790, 242792}, {243242, 243250}, {241842, 241843}, {243251, 243252}, {241814, 241814}}) {
            auto part = ids(range.first, range.second);
            r.insert(r.end(), part.begin(), part.end());
        }
        r.push_back("A088741");
        return r;
    }

    const std::vector<std::string> secondary_ids{"A243270", "A243272", "A243320", "A243321", "A243330", "A243331", "A243253", "A243796"};
    const std::vector<std::string> distinct_ids{"A245881", "A245883", "A245880", "A245882", "A245879"};

    int failures = 0;

    auto report(int criterion, bool pass, const std::string & detail) -> void
    {
        std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
        failures += ! pass;
    }

    auto text(const std::vector<std::int64_t> & v) -> std::string
    {
        return terms_text(v);
    }

    auto seconds_since(Clock::time_point t) -> double
    {
        return std::chrono::duration<double>(Clock::now() - t).count();
    }

    auto fixture_group(const Database & db, const std::vector<Fixture> & fixtures, const std::vector<std::string> & wanted,
        const std::string & group) -> std::pair<bool, std::string>
    {
        std::vector<std::string> bad;
        for (const auto & id : wanted) {
            const auto & f = find_fixture(fixtures, id, group);
            auto ours = computed(db, f, 8);
            if (ours != prefix(f.terms, 8)) {
                bad.push_back(id);
                std::cout << "    " << id << " [" << f.query << "] expected " << text(prefix(f.terms, 8)) << " got " << text(ours)
                          << std::endl;
            }
        }
        std::string detail = std::to_string(wanted.size() - bad.size()) + "/" + std::to_string(wanted.size()) + " match";
        if (! bad.empty()) {
            detail += "; mismatched:";
            for (const auto & id : bad)
                detail += " " + id;
        }
        return {bad.empty(), detail};
    }

    auto oeis_criterion(const std::vector<Fixture> & fixtures, const Database & db) -> int
    {
        const char * dump = std::getenv("EFG_OEIS_STRIPPED");
        if (! dump) {
            std::cout << "criterion 8: SKIP  EFG_OEIS_STRIPPED not set; no stripped dump available" << std::endl;
            return 77;
        }
        auto catalog = parse_stripped(std::filesystem::path(dump));
        std::vector<std::string> wanted = primary_ids();
        wanted.insert(wanted.end(), secondary_ids.begin(), secondary_ids.end());
        wanted.insert(wanted.end(), distinct_ids.begin(), distinct_ids.end());
        std::vector<std::string> missing;
        for (const auto & id : wanted) {
            const auto & f = find_fixture(fixtures, id);
            auto matches = lookup(catalog, computed(db, f, 8), 1);
            if (std::none_of(matches.begin(), matches.end(), [&](const OeisMatch & m) { return m.id == id; }))
                missing.push_back(id);
        }
        auto trees = lookup(catalog, build_sequence(db, {{"is_tree", Comparator::eq, 1}}, 8).terms, 1);
        bool tree_ok = std::any_of(trees.begin(), trees.end(), [](const OeisMatch & m) { return m.id == "A000055"; });
        std::string detail = std::to_string(wanted.size() - missing.size()) + "/" + std::to_string(wanted.size()) + " located";
        for (const auto & id : missing)
            detail += " " + id;
        detail += tree_ok ? "; trees -> A000055" : "; trees not resolved to A000055";
        report(8, missing.empty() && tree_ok, detail);
        return failures ? 1 : 0;
    }
}

int main(int argc, char ** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance FIXTURES DATABASE [--oeis]\n";
        return 2;
    }
    std::string fixtures_path = argv[1];
    std::filesystem::path db_path = argv[2];
    bool oeis_only = argc > 3 && std::string(argv[3]) == "--oeis";

    try {
        auto fixtures = load_fixtures(fixtures_path);

        if (oeis_only) {
            if (! std::filesystem::exists(db_path))
                build_database({1, 2, 3, 4, 5, 6, 7, 8}, db_path);
            return oeis_criterion(fixtures, Database::open(db_path));
        }

        {
            const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
            auto start = Clock::now();
            std::vector<std::size_t> counts;
            bool same = true;
            for (int n = 1; n <= 8; ++n) {
                auto codes = enumerate_connected({n});
                counts.push_back(codes.size());
                if (n <= max_brute_order)
                    same = same && codes == enumerate_connected({n, EnumerationMethod::brute_filter});
            }
            double t = seconds_since(start);
            std::ostringstream detail;
            detail << "counts";
            for (auto c : counts)
                detail << " " << c;
            detail << "; augmentation " << (same ? "==" : "!=") << " brute force for n <= 7; " << t << " s";
            report(1, counts == expected && same && t < 60, detail.str());
        }

        auto start = Clock::now();
        build_database({1, 2, 3, 4, 5, 6, 7, 8}, db_path);
        double build_seconds = seconds_since(start);
        auto db = Database::open(db_path);

        {
            auto [ok, detail] = fixture_group(db, fixtures, primary_ids(), "");
            std::ostringstream d;
            d << detail << "; database n <= 8 built in " << build_seconds << " s";
            report(2, ok && build_seconds <= 1800, d.str());
        }
        {
            auto [ok, detail] = fixture_group(db, fixtures, secondary_ids, "secondary");
            report(3, ok, detail);
        }
        {
            auto [ok, detail] = fixture_group(db, fixtures, distinct_ids, "distinct");
            report(4, ok, detail);
        }
        {
            std::size_t graphs = 0, chromatic_bad = 0, trees_bad = 0;
            TutteEngine engine;
            ChromaticDeletionContraction direct;
            for (int n = 1; n <= 7; ++n)
                for (auto code : enumerate_connected({n})) {
                    auto g = graph_of(code);
                    auto t = engine.tutte(g);
                    chromatic_bad += chromatic_from_tutte(t, n) != direct.polynomial(g);
                    trees_bad += t.evaluate(1, 1) != spanning_tree_count(g);
                    ++graphs;
                }
            auto planar = build_sequence(db, {{"is_planar", Comparator::eq, 1}}, 8).terms;
            std::vector<std::int64_t> fixture_sum;
            const auto & a = find_fixture(fixtures, "A243325");
            const auto & b = find_fixture(fixtures, "A243331");
            for (int k = 0; k < 8; ++k)
                fixture_sum.push_back(a.terms[k] + b.terms[k]);
            std::ostringstream d;
            d << graphs << " graphs n <= 7: " << chromatic_bad << " chromatic mismatches, " << trees_bad
              << " T(1,1) mismatches; planar " << text(planar) << (planar == fixture_sum ? " == " : " != ") << text(fixture_sum);
            report(5, chromatic_bad == 0 && trees_bad == 0 && planar == fixture_sum, d.str());
        }
        {
            std::vector<std::string> columns{"is_tree", "girth", "chromatic_number", "is_bipartite", "is_eulerian", "is_planar", "clique_number"};
            auto catalog = condition_catalog(db, columns);
            MiningStats stats;
            auto relations = mine_relations(db, catalog, 8, {}, &stats);
            std::set<std::string> reported;
            for (const auto & r : relations)
                reported.insert(r.to_text());
            bool tree = reported.contains("is_tree = 1  ==  girth = 0  [to order 8]");
            bool girth5 = reported.contains("girth = 5  <=  chromatic_number = 3  [to order 8]");

            // Every pair is re-derived by direct set comparison, including
            // those the count prefilter discarded.
            std::size_t contradictions = 0;
            auto rows = [&](std::size_t i, int n) {
                auto r = db.matching_rows({catalog[i]}, n);
                return std::set<std::size_t>(r.begin(), r.end());
            };
            std::vector<std::vector<std::set<std::size_t>>> sets(catalog.size());
            for (std::size_t i = 0; i < catalog.size(); ++i)
                for (int n = 1; n <= 8; ++n)
                    sets[i].push_back(rows(i, n));
            for (std::size_t i = 0; i < catalog.size(); ++i)
                for (std::size_t j = 0; j < catalog.size(); ++j) {
                    if (catalog[i].column == catalog[j].column)
                        continue;
                    bool any_i = false, any_j = false, equal = true, subset = true, exclusive = true;
                    for (int k = 0; k < 8; ++k) {
                        const auto & a = sets[i][k];
                        const auto & b = sets[j][k];
                        any_i = any_i || ! a.empty();
                        any_j = any_j || ! b.empty();
                        equal = equal && a == b;
                        subset = subset && std::includes(b.begin(), b.end(), a.begin(), a.end());
                        for (auto x : a)
                            exclusive = exclusive && ! b.contains(x);
                    }
                    if (! any_i || ! any_j)
                        continue;
                    auto has = [&](RelationKind kind) {
                        return reported.contains(Relation{{catalog[i]}, {catalog[j]}, kind, 8}.to_text());
                    };
                    if (i < j) {
                        contradictions += equal != has(RelationKind::equal);
                        contradictions += exclusive != has(RelationKind::exclusive);
                    }
                    contradictions += (subset && ! equal) != has(RelationKind::subset);
                }
            std::ostringstream d;
            d << "tree == girth 0: " << (tree ? "found" : "missing") << "; girth 5 <= chromatic 3: " << (girth5 ? "found" : "missing") << "; "
              << stats.pairs << " pairs, " << stats.prefiltered << " rejected by counts, " << contradictions << " contradictions";
            report(6, tree && girth5 && contradictions == 0, d.str());
        }
        {
            auto simple = build_sequence(db, {{"simple_spectrum", Comparator::eq, 1}}, 8).terms;
            const std::vector<std::int64_t> first{1, 1, 1, 3, 11, 54};
            bool head = prefix(simple, 6) == first;
            bool extended = head && simple == prefix(find_fixture(fixtures, "A242952").terms, 8) &&
                            build_sequence(db, {{"simple_spectrum", Comparator::eq, 0}}, 8).terms ==
                                prefix(find_fixture(fixtures, "A242953").terms, 8);
            std::ostringstream d;
            d << "square-free characteristic polynomial counts " << text(simple) << "; n <= 6 " << (head ? "match" : "differ")
              << "; n <= 8 with complement " << (extended ? "match" : "differ");
            report(7, head && extended, d.str());
        }
        std::cout << "criterion 8: see acceptance_oeis" << std::endl;
        std::cout << "criterion 9: NOT RUN  order 9/10 results are stretch targets outside the desk-scale budget" << std::endl;
        std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
        return failures ? 1 : 0;
    }
    catch (const std::exception & e) {
        std::cout << "error: " << e.what() << std::endl;
        return 1;
    }
}
