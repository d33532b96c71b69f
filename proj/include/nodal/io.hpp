#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "divisor.hpp"
#include "graph.hpp"

namespace nodal {

/// On-disk form of a dual graph:
/// {"components": ["C1", ...], "nodes": [["C1", "C2"], ...]}.
struct GraphDocument {
    std::vector<std::string> components;
    std::vector<std::pair<std::string, std::string>> nodes;

    friend bool operator==(const GraphDocument &, const GraphDocument &) = default;
};

inline GraphDocument parse_document(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::parse, std::string("malformed graph document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("components") || !doc.contains("nodes"))
        throw Error(ErrorCode::parse, "graph document needs \"components\" and \"nodes\"");
    const auto &components = doc.at("components");
    const auto &nodes = doc.at("nodes");
    if (!components.is_array() || !nodes.is_array())
        throw Error(ErrorCode::parse, "\"components\" and \"nodes\" must be arrays");

    GraphDocument out;
    for (const auto &label : components) {
        if (!label.is_string())
            throw Error(ErrorCode::parse, "component labels must be strings");
        out.components.push_back(label.get<std::string>());
    }
    for (const auto &node : nodes) {
        if (!node.is_array() || node.size() != 2 || !node[0].is_string() || !node[1].is_string())
            throw Error(ErrorCode::parse, "each node must be a pair of component labels");
        out.nodes.emplace_back(node[0].get<std::string>(), node[1].get<std::string>());
    }
    return out;
}

inline CurveGraph to_graph(const GraphDocument &doc) {
    if (doc.components.empty())
        throw Error(ErrorCode::empty_graph, "graph document declares no components");
    std::vector<std::string> sorted = doc.components;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::parse, "component labels must be unique");

    auto lookup = [&](const std::string &label) {
        auto it = std::find(doc.components.begin(), doc.components.end(), label);
        if (it == doc.components.end())
            throw Error(ErrorCode::unknown_label, "node references undeclared component '" + label + "'");
        return static_cast<std::size_t>(it - doc.components.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto &[a, b] : doc.nodes)
        edges.emplace_back(lookup(a), lookup(b));
    return CurveGraph(doc.components, edges);
}

inline CurveGraph parse_graph(std::string_view text) { return to_graph(parse_document(text)); }

inline GraphDocument to_document(const CurveGraph &g) {
    GraphDocument doc;
    doc.components = g.labels();
    for (const Edge &e : g.edges())
        doc.nodes.emplace_back(g.labels()[e.u], g.labels()[e.v]);
    return doc;
}

inline nlohmann::json to_json(const GraphDocument &doc) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto &[a, b] : doc.nodes)
        nodes.push_back({a, b});
    return {{"components", doc.components}, {"nodes", nodes}};
}

inline std::string serialize(const GraphDocument &doc) { return to_json(doc).dump(); }

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::json to_json(const BigInt &value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

template <class Tag>
nlohmann::json to_json(const detail::IntVector<Tag> &v) {
    nlohmann::json out = nlohmann::json::array();
    for (const BigInt &x : v.values())
        out.push_back(to_json(x));
    return out;
}

/// Comma-separated integers; the length must be exactly `expected`.
inline std::vector<BigInt> parse_vector(std::string_view text, std::size_t expected) {
    std::vector<BigInt> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        out.push_back(parse_bigint(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw Error(ErrorCode::invalid_argument, "vector '" + std::string(text) + "' has " +
                                                     std::to_string(out.size()) + " entries, expected " +
                                                     std::to_string(expected));
    return out;
}

} // namespace nodal
