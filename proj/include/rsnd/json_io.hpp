#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "rsnd/multigraph.hpp"

namespace rsnd {

// JSON exchange formats.
//
// Instance: {"n": int,
//            "edges": [{"u": int, "v": int, "w": int | "p/q"}, ...],
//            "demands": [{"s": int, "t": int, "k": int}, ...]}
// Solution: {"edges": [id, ...], "cost": "p/q" string, "trace": {...}}
//
// Costs are always emitted as strings so the I/O path stays float-free;
// parsers accept plain integers as well.
//
// Edge ids are positions in the file's edge array. parse_error marks input
// that does not match the format (exit code 1 territory); structural_error
// marks well-formed input with impossible values (exit code 2).

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("invalid JSON: ") + ex.what());
    }
}

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    if (!j.is_object()) throw parse_error("expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw parse_error(std::string("missing field \"") + name + "\"");
    return *it;
}

inline int int_field(const nlohmann::json& j, const char* name) {
    const auto& f = field(j, name);
    if (!f.is_number_integer()) throw parse_error(std::string("field \"") + name + "\" must be an integer");
    return f.get<int>();
}

inline Rational rational_value(const nlohmann::json& f, const char* name) {
    if (f.is_number_integer()) return Rational(f.get<long long>());
    if (f.is_string()) {
        try {
            return parse_rational(f.get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw parse_error(std::string("field \"") + name + "\": " + ex.what());
        }
    }
    throw parse_error(std::string("field \"") + name + "\" must be an integer or a \"p/q\" string");
}

inline nlohmann::json rational_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) {
        const auto& num = boost::multiprecision::numerator(r);
        if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
            return num.convert_to<long long>();
    }
    return format_rational(r);
}

}  // namespace detail

inline Instance instance_from_json(const nlohmann::json& j) {
    Instance inst;
    int n = detail::int_field(j, "n");
    const auto& edges = detail::field(j, "edges");
    const auto& demands = detail::field(j, "demands");
    if (!edges.is_array()) throw parse_error("field \"edges\" must be an array");
    if (!demands.is_array()) throw parse_error("field \"demands\" must be an array");
    try {
        inst.graph = Multigraph(n);
        for (const auto& e : edges)
            inst.graph.add_edge(detail::int_field(e, "u"), detail::int_field(e, "v"),
                                detail::rational_value(detail::field(e, "w"), "w"));
        for (const auto& d : demands) {
            Demand dem{detail::int_field(d, "s"), detail::int_field(d, "t"), detail::int_field(d, "k")};
            inst.graph.check_node(dem.s);
            inst.graph.check_node(dem.t);
            if (dem.s == dem.t) throw std::invalid_argument("demand endpoints coincide");
            if (dem.k < 1) throw std::invalid_argument("demand requirement must be >= 1");
            inst.demands.push_back(dem);
        }
    } catch (const std::invalid_argument& ex) {
        throw structural_error(ex.what());
    }
    return inst;
}

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["n"] = inst.graph.node_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : inst.graph.edges())
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"w", detail::rational_json(e.w)}});
    j["demands"] = nlohmann::json::array();
    for (const auto& d : inst.demands)
        j["demands"].push_back({{"s", d.s}, {"t", d.t}, {"k", d.k}});
    return j;
}

struct SolutionFile {
    EdgeSet edges;
    std::optional<Rational> cost;
    nlohmann::json trace;  // free-form, preserved as-is
};

inline SolutionFile solution_from_json(const nlohmann::json& j) {
    SolutionFile sol;
    const auto& edges = detail::field(j, "edges");
    if (!edges.is_array()) throw parse_error("field \"edges\" must be an array");
    for (const auto& e : edges) {
        if (!e.is_number_integer()) throw parse_error("solution edge ids must be integers");
        sol.edges.insert(e.get<int>());
    }
    if (auto it = j.find("cost"); it != j.end()) sol.cost = detail::rational_value(*it, "cost");
    if (auto it = j.find("trace"); it != j.end()) sol.trace = *it;
    return sol;
}

inline nlohmann::json solution_to_json(const Multigraph& g, const EdgeSet& edges,
                                       nlohmann::json trace = nlohmann::json::object()) {
    nlohmann::json j;
    j["edges"] = nlohmann::json::array();
    for (int id : edges) j["edges"].push_back(id);
    j["cost"] = format_rational(g.total_weight(edges));
    j["trace"] = std::move(trace);
    return j;
}

}  // namespace rsnd
