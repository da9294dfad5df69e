#include "prodobs/graph_io.hpp"

#include "prodobs/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace prodobs {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::string dot_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

DiGraph graph_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        throw ParseError("graph JSON must be an object with a \"nodes\" array", 1, 1);
    std::vector<std::string> labels;
    for (const auto& node : doc["nodes"]) {
        if (!node.is_string())
            throw ParseError("node labels must be strings, got " + node.dump(), 1, 1);
        labels.push_back(node.get<std::string>());
    }
    if (labels.empty())
        throw ParseError("graph has an empty node list", 1, 1);

    std::vector<LabelPair> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw ParseError("\"edges\" must be an array", 1, 1);
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("each edge must be a 2-element array of strings, got " + e.dump(), 1, 1);
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return build_graph(std::move(labels), edges);
}

DiGraph parse_graph_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
    }
    return graph_from_json(doc);
}

nlohmann::json graph_to_json(const DiGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({g.label(e.from), g.label(e.to)});
    return {{"nodes", g.labels()}, {"edges", std::move(edges)}};
}

DiGraph parse_edge_list(std::string_view text)
{
    std::vector<std::string> labels;
    std::unordered_set<std::string> known;
    std::vector<LabelPair> edges;
    auto declare = [&](const std::string& label) {
        if (known.insert(label).second)
            labels.push_back(label);
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        auto line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::pair<std::string, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i >= line.size())
                break;
            auto first = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tokens.emplace_back(std::string(line.substr(first, i - first)), first + 1);
        }
        if (tokens.size() > 2)
            throw ParseError("expected 'from to' but found " + std::to_string(tokens.size()) + " tokens",
                             line_no, tokens[2].second);
        for (const auto& [token, col] : tokens)
            declare(token);
        if (tokens.size() == 2)
            edges.emplace_back(tokens[0].first, tokens[1].first);
        start = end + 1;
    }
    if (labels.empty())
        throw ParseError("edge list declares no nodes", 1, 1);
    return build_graph(std::move(labels), edges);
}

std::string graph_to_edge_list(const DiGraph& g)
{
    // Declaring every node up front pins the node order on re-read.
    std::ostringstream out;
    for (NodeIndex v = 0; v < g.size(); ++v)
        out << g.label(v) << '\n';
    for (const auto& e : g.edges())
        out << g.label(e.from) << ' ' << g.label(e.to) << '\n';
    return out.str();
}

DiGraph parse_graph(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError("input is empty", 1, 1);
    if (text[first] == '{')
        return parse_graph_json(text);
    return parse_edge_list(text);
}

DiGraph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'", 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string graph_to_dot(const DiGraph& g, const DotStyle& style)
{
    std::ostringstream out;
    out << "digraph " << dot_quote(style.graph_name) << " {\n";
    for (NodeIndex v = 0; v < g.size(); ++v) {
        out << "  " << dot_quote(g.label(v));
        std::vector<std::string> attrs;
        if (v < style.node_attributes.size())
            for (const auto& [key, value] : style.node_attributes[v])
                attrs.push_back(key + "=" + dot_quote(value));
        if (v < style.highlighted.size() && style.highlighted[v]) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=" + dot_quote(style.highlight_color));
        }
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                out << (i ? ", " : "") << attrs[i];
            out << ']';
        }
        out << ";\n";
    }
    for (const auto& e : g.edges())
        out << "  " << dot_quote(g.label(e.from)) << " -> " << dot_quote(g.label(e.to)) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace prodobs
