#include <efg/canon.hpp>
#include <efg/cli.hpp>
#include <efg/enumerate.hpp>
#include <efg/oeis.hpp>
#include <efg/relations.hpp>
#include <efg/sequences.hpp>
#include <efg/store.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>

namespace efg
{
    namespace
    {
        const std::map<std::string, Comparator> condition_flags{
            {"-i", Comparator::eq}, {"-eq", Comparator::eq}, {"-ne", Comparator::ne}, {"-lt", Comparator::lt},
            {"-le", Comparator::le}, {"-gt", Comparator::gt}, {"-ge", Comparator::ge}};

        // Pulls `-i col val` style triples out of the argument list; CLI11
        // does not accept multi-letter single-dash options.
        auto extract_conditions(std::vector<std::string> & args) -> std::vector<QueryCondition>
        {
            std::vector<QueryCondition> conditions;
            std::vector<std::string> rest;
            for (std::size_t i = 0; i < args.size(); ++i) {
                auto it = condition_flags.find(args[i]);
                if (it == condition_flags.end()) {
                    rest.push_back(args[i]);
                    continue;
                }
                if (i + 2 >= args.size())
                    throw CLI::ValidationError(args[i], "expects a column and an integer value");
                QueryCondition c;
                c.column = args[i + 1];
                c.comparator = it->second;
                try {
                    std::size_t used = 0;
                    c.value = std::stoll(args[i + 2], &used);
                    if (used != args[i + 2].size())
                        throw std::invalid_argument("trailing characters");
                }
                catch (const std::logic_error &) {
                    throw CLI::ValidationError(args[i], "value '" + args[i + 2] + "' is not an integer");
                }
                conditions.push_back(c);
                i += 2;
            }
            args = std::move(rest);
            return conditions;
        }

        auto parse_orders(const std::string & text) -> std::vector<int>
        {
            std::vector<int> orders;
            std::stringstream ss(text);
            std::string part;
            while (std::getline(ss, part, ',')) {
                auto dash = part.find('-');
                int lo = std::stoi(part.substr(0, dash));
                int hi = dash == std::string::npos ? lo : std::stoi(part.substr(dash + 1));
                for (int n = lo; n <= hi; ++n)
                    orders.push_back(n);
            }
            if (orders.empty())
                throw CLI::ValidationError("--orders", "no orders given");
            return orders;
        }

        auto database_path(const std::string & flag) -> std::string
        {
            if (! flag.empty())
                return flag;
            if (const char * env = std::getenv(database_env))
                return env;
            return default_database;
        }

        auto fmt(double x) -> std::string
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
            return buf;
        }
    }

    auto to_dot(GraphCode code) -> std::string
    {
        auto g = graph_of(code);
        std::string s = "graph g" + std::to_string(code.order) + "_" + std::to_string(code.bits) + " {\n";
        s += "  label=\"" + encode_graph6(g) + "\";\n";
        for (int v = 0; v < g.order(); ++v)
            s += "  " + std::to_string(v) + ";\n";
        for (auto [a, b] : g.edges())
            s += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
        return s + "}\n";
    }

    auto to_svg(GraphCode code) -> std::string
    {
        auto g = graph_of(code);
        int n = g.order();
        auto x = [&](int k) { return 100.0 + 80.0 * std::cos(2 * std::numbers::pi * k / n); };
        auto y = [&](int k) { return 100.0 + 80.0 * std::sin(2 * std::numbers::pi * k / n); };
        std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"200\" height=\"200\" viewBox=\"0 0 200 200\">\n";
        s += "  <title>" + encode_graph6(g) + "</title>\n";
        for (auto [a, b] : g.edges())
            s += "  <line x1=\"" + fmt(x(a)) + "\" y1=\"" + fmt(y(a)) + "\" x2=\"" + fmt(x(b)) + "\" y2=\"" + fmt(y(b)) +
                 "\" stroke=\"black\"/>\n";
        for (int k = 0; k < n; ++k)
            s += "  <circle cx=\"" + fmt(x(k)) + "\" cy=\"" + fmt(y(k)) + "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
        return s + "</svg>\n";
    }

    auto run_cli(const std::vector<std::string> & arguments, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Exhaustive small-graph invariant database"};
        app.require_subcommand(1);
        app.fallthrough();
        std::string db_flag;
        app.add_option("--db", db_flag, std::string("database path (default: $") + database_env + " or " + default_database + ")");

        // enumerate
        auto * enumerate = app.add_subcommand("enumerate", "list connected graphs of one order as graph6");
        int enum_order = 0;
        std::string method = "augment", shard_text, binary_out;
        enumerate->add_option("--order", enum_order, "order")->required();
        enumerate->add_option("--method", method, "augment or brute")->check(CLI::IsMember({"augment", "brute"}));
        enumerate->add_option("--shard", shard_text, "i/k: the i-th of k shards");
        enumerate->add_option("--binary", binary_out, "also write sorted 9-byte graph codes to this file");
        bool count_only = false;
        enumerate->add_flag("--count", count_only, "print only the number of graphs");

        // build
        auto * build = app.add_subcommand("build", "enumerate and evaluate orders into a database");
        std::string orders_text = "1-8";
        int threads = 1;
        bool k1_regular = false;
        build->add_option("--orders", orders_text, "orders, e.g. 1-8 or 1,2,5");
        build->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        build->add_flag("--k1-regular", k1_regular, "count K1 as regular");
        std::size_t tutte_budget = TutteLimits{}.max_expansions;
        build->add_option("--tutte-budget", tutte_budget, "deletion-contraction expansions per graph");

        // query
        auto * query_cmd = app.add_subcommand("query", "list graphs satisfying conditions (-i/-ne/-lt/-le/-gt/-ge COLUMN VALUE)");
        int query_order = 0;
        std::string query_format = "graph6";
        query_cmd->add_option("--order", query_order, "order (default: all)");
        query_cmd->add_option("--format", query_format, "graph6, code or count")->check(CLI::IsMember({"graph6", "code", "count"}));

        // sequence
        auto * sequence = app.add_subcommand("sequence", "per-order counts for conditions");
        int max_order = 0;
        bool json = false;
        sequence->add_option("--max-order", max_order, "last order (default: database maximum)");
        sequence->add_flag("--json", json, "structured output");

        // distinct
        auto * distinct = app.add_subcommand("distinct", "per-order number of distinct values");
        std::string target;
        distinct->add_option("target", target, "column, fractional_chromatic, or a polynomial name")->required();
        distinct->add_option("--max-order", max_order, "last order");
        distinct->add_flag("--json", json, "structured output");

        // relations
        auto * relations = app.add_subcommand("relations", "mine equal, subset and exclusive condition pairs");
        std::vector<std::string> relation_columns;
        relations->add_option("--max-order", max_order, "last order");
        relations->add_option("--columns", relation_columns, "restrict the catalog to these columns")->delimiter(',');
        std::vector<std::string> relation_kinds{"equal", "subset"};
        relations->add_option("--kinds", relation_kinds, "any of equal, subset, exclusive")
            ->delimiter(',')
            ->check(CLI::IsMember({"equal", "subset", "exclusive"}));

        // oeis-check
        auto * oeis = app.add_subcommand("oeis-check", "look sequences up in an OEIS stripped dump");
        std::string dump;
        int max_shift = 1;
        std::string label;
        oeis->add_option("--dump", dump, "stripped file")->required();
        oeis->add_option("--max-shift", max_shift, "largest offset tried");
        oeis->add_option("--distinct", target, "look up a distinct-value sequence instead");
        oeis->add_option("--label", label, "label used in the report");
        oeis->add_option("--max-order", max_order, "last order");

        // view
        auto * view = app.add_subcommand("view", "draw graphs satisfying conditions");
        int view_order = 0;
        std::string view_format = "dot", out_dir;
        view->add_option("--order", view_order, "order")->required();
        view->add_option("--format", view_format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));
        view->add_option("--out", out_dir, "write one file per graph into this directory");

        std::vector<std::string> args = arguments;
        std::vector<QueryCondition> conditions;
        try {
            conditions = extract_conditions(args);
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::failure;
        }

        try {
            auto open = [&] { return Database::open(database_path(db_flag)); };
            auto last_order = [&](const Database & db) { return max_order > 0 ? max_order : db.max_order(); };

            if (*enumerate) {
                EnumerationPlan plan{enum_order, method == "brute" ? EnumerationMethod::brute_filter : EnumerationMethod::canonical_augmentation};
                if (! shard_text.empty()) {
                    auto slash = shard_text.find('/');
                    if (slash == std::string::npos)
                        throw Error("shard must be i/k");
                    plan.shard = Shard{std::stoi(shard_text.substr(0, slash)), std::stoi(shard_text.substr(slash + 1))};
                }
                auto codes = enumerate_connected(plan);
                if (! binary_out.empty()) {
                    std::ofstream f(binary_out, std::ios::binary | std::ios::trunc);
                    for (auto c : codes) {
                        auto b = c.serialize();
                        f.write(reinterpret_cast<const char *>(b.data()), b.size());
                    }
                    if (! f)
                        throw IoError("cannot write " + binary_out);
                }
                if (count_only)
                    out << codes.size() << "\n";
                else
                    for (auto c : codes)
                        out << encode_graph6(graph_of(c)) << "\n";
            }
            else if (*build) {
                BuildOptions options;
                options.workers = threads;
                options.record.conventions.k1_regular = k1_regular;
                options.record.tutte.max_expansions = tutte_budget;
                options.progress = [&](int n, std::size_t done, std::size_t) { err << "order " << n << ": " << done << " graphs\n"; };
                auto path = database_path(db_flag);
                auto summary = build_database(parse_orders(orders_text), path, options);
                std::size_t rows = 0;
                for (auto [n, count] : summary.rows_per_order) {
                    out << "order " << n << ": " << count << "\n";
                    rows += count;
                }
                out << "rows: " << rows << "\n";
                err << "wrote " << path << " in " << fmt(summary.seconds) << " s\n";
            }
            else if (*query_cmd) {
                auto db = open();
                auto codes = query(db, conditions, query_order);
                if (query_format == "count")
                    out << codes.size() << "\n";
                else
                    for (auto c : codes)
                        if (query_format == "code")
                            out << int(c.order) << " " << c.bits << "\n";
                        else
                            out << encode_graph6(graph_of(c)) << "\n";
            }
            else if (*sequence) {
                auto db = open();
                auto seq = build_sequence(db, conditions, last_order(db));
                out << (json ? seq.to_json() : terms_text(seq.terms)) << "\n";
            }
            else if (*distinct) {
                auto db = open();
                auto seq = distinct_value_sequence(db, target, last_order(db));
                out << (json ? seq.to_json() : terms_text(seq.terms)) << "\n";
            }
            else if (*relations) {
                auto db = open();
                MiningStats stats;
                RelationKinds kinds{false, false, false};
                for (const auto & k : relation_kinds)
                    (k == "equal" ? kinds.equal : k == "subset" ? kinds.subset : kinds.exclusive) = true;
                auto found = mine_relations(db, condition_catalog(db, relation_columns), last_order(db), kinds, &stats);
                for (const auto & r : found)
                    out << r.to_text() << "\n";
                err << stats.pairs << " pairs, " << stats.prefiltered << " rejected by counts, " << stats.verified << " set-checked\n";
            }
            else if (*oeis) {
                auto db = open();
                auto seq = target.empty() ? build_sequence(db, conditions, last_order(db)) : distinct_value_sequence(db, target, last_order(db));
                if (! submission_filter(seq))
                    err << "warning: fewer than four nonzero terms\n";
                auto catalog = parse_stripped(std::filesystem::path(dump));
                out << lookup_report(label.empty() ? seq.label : label, lookup(catalog, seq.terms, max_shift));
            }
            else if (*view) {
                auto db = open();
                auto codes = query(db, conditions, view_order);
                for (auto c : codes) {
                    auto drawing = view_format == "svg" ? to_svg(c) : to_dot(c);
                    if (out_dir.empty()) {
                        out << drawing;
                        continue;
                    }
                    std::filesystem::create_directories(out_dir);
                    auto file = std::filesystem::path(out_dir) / (std::to_string(c.order) + "_" + std::to_string(c.bits) + "." + view_format);
                    std::ofstream f(file, std::ios::trunc);
                    f << drawing;
                    if (! f)
                        throw IoError("cannot write " + file.string());
                }
                err << codes.size() << " drawings\n";
            }
            return exit_code::ok;
        }
        catch (const DatabaseNotFound & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::missing_database;
        }
        catch (const UnknownColumn & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::unknown_column;
        }
        catch (const BudgetExceeded & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::budget_exceeded;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::failure;
        }
    }
}
