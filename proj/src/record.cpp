#include <efg/canon.hpp>
#include <efg/enumerate.hpp>
#include <efg/store.hpp>

#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace efg
{
    auto column_catalog() -> const std::vector<ColumnInfo> &
    {
        static const std::vector<ColumnInfo> catalog = [] {
            using enum ColumnKind;
            std::vector<ColumnInfo> c{
                {"edges", integer},
                {"diameter", integer},
                {"radius", integer},
                {"girth", integer},
                {"circumference", integer},
                {"articulation_points", integer},
                {"endpoints", integer},
                {"vertex_connectivity", integer},
                {"edge_connectivity", integer},
                {"is_bipartite", boolean},
                {"is_tree", boolean},
                {"is_eulerian", boolean},
                {"is_hamiltonian", boolean},
                {"is_chordal", boolean},
                {"is_planar", boolean},
                {"is_regular", boolean},
                {"is_strongly_regular", boolean},
                {"is_distance_regular", boolean},
                {"independence_number", integer},
                {"clique_number", integer},
                {"matching_number", integer},
                {"hosoya_index", integer},
            };
            for (auto p : all_patterns)
                c.push_back({"subgraph_" + std::string(pattern_name(p)), integer});
            for (const char * name : {"automorphism_count", "chromatic_number"})
                c.push_back({name, integer});
            for (const char * name : {"is_integral", "simple_spectrum", "has_chromatic_gap"})
                c.push_back({name, boolean});
            for (const char * name : {"fractional_chromatic_num", "fractional_chromatic_den"})
                c.push_back({name, integer});
            for (const char * name : {"char_poly_digest", "laplacian_poly_digest", "tutte_poly_digest", "chromatic_poly_digest", "degree_sequence_digest"})
                c.push_back({name, digest});
            return c;
        }();
        return catalog;
    }

    auto column_names() -> std::string
    {
        std::string names;
        for (const auto & c : column_catalog())
            names += (names.empty() ? "" : ", ") + c.name;
        return names;
    }

    auto column_index(std::string_view name) -> std::size_t
    {
        const auto & catalog = column_catalog();
        for (std::size_t i = 0; i < catalog.size(); ++i)
            if (catalog[i].name == name)
                return i;
        throw UnknownColumn(std::string(name), column_names());
    }

    auto text_digest(std::string_view text) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : text) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    auto compute_record(GraphCode code, TutteEngine & engine, const Conventions & conventions) -> InvariantRecord
    {
        auto g = graph_of(code);
        int n = g.order();
        InvariantRecord r;
        r.code = code;
        auto & v = r.values;

        auto s = structural_profile(g, conventions);
        for (long long x : {s.edges, s.diameter, s.radius, s.girth, s.circumference, s.articulation_points, s.endpoints,
                 s.vertex_connectivity, s.edge_connectivity})
            v.push_back(x);
        for (bool b : {s.is_bipartite, s.is_tree, s.is_eulerian, s.is_hamiltonian, s.is_chordal, s.is_planar, s.is_regular,
                 s.is_strongly_regular, s.is_distance_regular})
            v.push_back(b);
        for (long long x : {s.independence_number, s.clique_number, s.matching_number})
            v.push_back(x);
        v.push_back(static_cast<std::int64_t>(s.hosoya_index));
        for (auto count : s.subgraph_counts)
            v.push_back(static_cast<std::int64_t>(count));

        auto char_poly = characteristic_polynomial(g);
        auto laplacian_poly = laplacian_polynomial(g);
        auto tutte = engine.tutte(g);
        auto chromatic = chromatic_from_tutte(tutte, n);
        int chi = chromatic_number(chromatic);
        auto fractional = fractional_chromatic_number(g);

        v.push_back(static_cast<std::int64_t>(automorphism_count(g)));
        v.push_back(chi);
        v.push_back(has_only_integer_roots(char_poly));
        v.push_back(is_square_free(char_poly));
        v.push_back(has_chromatic_gap(chi, fractional));
        v.push_back(static_cast<std::int64_t>(numerator(fractional)));
        v.push_back(static_cast<std::int64_t>(denominator(fractional)));

        std::string degrees;
        for (int d : degree_sequence(g))
            degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
        for (const auto & text : {char_poly.to_text(), laplacian_poly.to_text(), tutte.to_text(), chromatic.to_text(), degrees}) {
            auto h = text_digest(text);
            r.texts.emplace(h, text);
            v.push_back(std::bit_cast<std::int64_t>(h));
        }

        if (v.size() != column_catalog().size())
            throw Error("record does not match the column catalog");
        return r;
    }

    auto build_database(const std::vector<int> & orders, const std::filesystem::path & out, const BuildOptions & options)
        -> BuildSummary
    {
        auto start = std::chrono::steady_clock::now();
        if (options.workers < 1)
            throw Error("worker count must be at least 1");
        for (int n : orders)
            if (n < 1 || n > max_augmentation_order)
                throw UnsupportedOrder(n);

        BuildSummary summary;
        std::vector<InvariantRecord> records;
        for (int n : orders) {
            if (summary.rows_per_order.contains(n))
                continue;
            auto codes = enumerate_connected({n});
            std::vector<InvariantRecord> level(codes.size());
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;

            auto work = [&] {
                TutteEngine engine(options.record.tutte);
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= codes.size())
                        return;
                    try {
                        level[i] = compute_record(codes[i], engine, options.record.conventions);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                        next = codes.size();
                        return;
                    }
                }
            };
            int workers = std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(codes.size(), 1)));
            std::vector<std::thread> pool;
            for (int w = 1; w < workers; ++w)
                pool.emplace_back(work);
            work();
            for (auto & t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);

            summary.rows_per_order[n] = level.size();
            if (options.progress)
                options.progress(n, level.size(), codes.size());
            std::move(level.begin(), level.end(), std::back_inserter(records));
        }

        write_database(std::move(records), out);
        summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return summary;
    }
}
