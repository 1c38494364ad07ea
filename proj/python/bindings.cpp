#include <efg/algebraic.hpp>
#include <efg/canon.hpp>
#include <efg/enumerate.hpp>
#include <efg/oeis.hpp>
#include <efg/relations.hpp>
#include <efg/sequences.hpp>
#include <efg/store.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace efg;

namespace
{
    auto parse_graph(const std::string & graph6) -> Graph
    {
        return decode_graph6(graph6);
    }

    auto conditions_of(const std::vector<std::tuple<std::string, std::string, std::int64_t>> & raw) -> std::vector<QueryCondition>
    {
        static const std::map<std::string, Comparator> symbols{
            {"=", Comparator::eq}, {"==", Comparator::eq}, {"!=", Comparator::ne}, {"<", Comparator::lt},
            {"<=", Comparator::le}, {">", Comparator::gt}, {">=", Comparator::ge}};
        std::vector<QueryCondition> conditions;
        for (const auto & [column, symbol, value] : raw) {
            auto it = symbols.find(symbol);
            if (it == symbols.end())
                throw Error("unknown comparator " + symbol);
            conditions.push_back({column, it->second, value});
        }
        return conditions;
    }

    auto record_dict(const InvariantRecord & r) -> py::dict
    {
        py::dict d;
        const auto & catalog = column_catalog();
        for (std::size_t c = 0; c < catalog.size(); ++c) {
            const auto & info = catalog[c];
            auto v = r.values[c];
            if (info.kind == ColumnKind::boolean)
                d[py::str(info.name)] = v != 0;
            else if (info.kind == ColumnKind::digest)
                d[py::str(info.name)] = r.texts.at(static_cast<std::uint64_t>(v));
            else
                d[py::str(info.name)] = v;
        }
        return d;
    }
}

PYBIND11_MODULE(_core, m)
{
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", base);
    py::register_exception<UnknownColumn>(m, "UnknownColumn", base);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    auto io = py::register_exception<IoError>(m, "IoError", base);
    py::register_exception<DatabaseNotFound>(m, "DatabaseNotFound", io);

    m.def("canonical_graph6", [](const std::string & g6) { return encode_graph6(canonical_graph(parse_graph(g6))); });
    m.def("canonical_code", [](const std::string & g6) {
        auto c = canonical_code(parse_graph(g6));
        return std::pair<int, std::uint64_t>{c.order, c.bits};
    });
    m.def("graph6_of_code", [](int order, std::uint64_t bits) {
        check_order(order);
        return encode_graph6(graph_of(GraphCode{static_cast<std::uint8_t>(order), bits}));
    });

    m.def(
        "enumerate_connected",
        [](int order, const std::string & method, int shard_index, int shard_total) {
            EnumerationPlan plan{order};
            if (method == "brute")
                plan.method = EnumerationMethod::brute_filter;
            else if (method != "augment")
                throw Error("unknown method " + method);
            if (shard_total != 1 || shard_index != 0)
                plan.shard = Shard{shard_index, shard_total};
            std::vector<std::string> out;
            enumerate_connected(plan, [&](GraphCode c) { out.push_back(encode_graph6(graph_of(c))); });
            return out;
        },
        py::arg("order"), py::arg("method") = "augment", py::arg("shard_index") = 0, py::arg("shard_total") = 1);

    m.def("automorphism_count", [](const std::string & g6) { return automorphism_count(parse_graph(g6)); });
    m.def("characteristic_polynomial", [](const std::string & g6) { return characteristic_polynomial(parse_graph(g6)).to_text(); });
    m.def("laplacian_polynomial", [](const std::string & g6) { return laplacian_polynomial(parse_graph(g6)).to_text(); });
    m.def("tutte_polynomial", [](const std::string & g6) { return tutte_polynomial(parse_graph(g6)).to_text(); });
    m.def("chromatic_polynomial", [](const std::string & g6) { return chromatic_polynomial(parse_graph(g6)).to_text(); });
    m.def("fractional_chromatic_number", [](const std::string & g6) { return to_text(fractional_chromatic_number(parse_graph(g6))); });
    m.def("spectral_gap", [](const std::string & g6) { return spectral_gap(parse_graph(g6)); });
    m.def("invariants", [](const std::string & g6) {
        TutteEngine engine;
        return record_dict(compute_record(canonical_code(parse_graph(g6)), engine));
    });
    m.def("columns", [] {
        std::vector<std::string> names;
        for (const auto & c : column_catalog())
            names.push_back(c.name);
        return names;
    });

    m.def(
        "build_database",
        [](const std::vector<int> & orders, const std::filesystem::path & out, int workers) {
            BuildOptions options;
            options.workers = workers;
            py::gil_scoped_release release;
            return build_database(orders, out, options).rows_per_order;
        },
        py::arg("orders"), py::arg("path"), py::arg("workers") = 1);

    py::class_<Database>(m, "Database")
        .def_static("open", &Database::open)
        .def("__len__", &Database::size)
        .def("orders", &Database::orders)
        .def("max_order", &Database::max_order)
        .def(
            "query",
            [](const Database & db, const std::vector<std::tuple<std::string, std::string, std::int64_t>> & conditions, int order) {
                std::vector<std::string> out;
                for (auto c : query(db, conditions_of(conditions), order))
                    out.push_back(encode_graph6(graph_of(c)));
                return out;
            },
            py::arg("conditions"), py::arg("order") = 0)
        .def(
            "sequence",
            [](const Database & db, const std::vector<std::tuple<std::string, std::string, std::int64_t>> & conditions, int max_order) {
                return build_sequence(db, conditions_of(conditions), max_order ? max_order : db.max_order()).terms;
            },
            py::arg("conditions"), py::arg("max_order") = 0)
        .def(
            "distinct",
            [](const Database & db, const std::string & target, int max_order) {
                return distinct_value_sequence(db, target, max_order ? max_order : db.max_order()).terms;
            },
            py::arg("target"), py::arg("max_order") = 0)
        .def(
            "relations",
            [](const Database & db, const std::vector<std::string> & columns, int max_order) {
                std::vector<std::string> out;
                auto catalog = condition_catalog(db, columns);
                for (const auto & r : mine_relations(db, catalog, max_order ? max_order : db.max_order()))
                    out.push_back(r.to_text());
                return out;
            },
            py::arg("columns"), py::arg("max_order") = 0);

    m.def("submission_filter", [](const std::vector<std::int64_t> & terms) { return submission_filter(terms); });
    m.def(
        "oeis_lookup",
        [](const std::filesystem::path & dump, const std::vector<std::int64_t> & terms, int max_shift) {
            std::vector<std::tuple<std::string, int, bool>> out;
            for (const auto & match : lookup(parse_stripped(dump), terms, max_shift))
                out.emplace_back(match.id, match.shift, match.extends);
            return out;
        },
        py::arg("dump"), py::arg("terms"), py::arg("max_shift") = 1);
}
