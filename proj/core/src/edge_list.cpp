#include "venergy/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace venergy {
namespace {

struct Token {
    std::string_view text;
    std::size_t line = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        auto first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        std::size_t pos = first;
        while (pos < line.size()) {
            auto start = line.find_first_not_of(" \t\r\f\v", pos);
            if (start == std::string_view::npos) {
                break;
            }
            auto stop = line.find_first_of(" \t\r\f\v", start);
            if (stop == std::string_view::npos) {
                stop = line.size();
            }
            tokens.push_back({line.substr(start, stop - start), line_no});
            pos = stop;
        }
    }
    return tokens;
}

std::size_t to_index(const Token& token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc{} || ptr != token.text.data() + token.text.size()) {
        throw GraphError("line " + std::to_string(token.line) + ": expected a non-negative integer, got '" +
                         std::string(token.text) + "'");
    }
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.size() < 2) {
        throw GraphError("edge list: missing 'n m' header");
    }
    const std::size_t n = to_index(tokens[0]);
    const std::size_t m = to_index(tokens[1]);
    if (tokens.size() != 2 + 2 * m) {
        throw GraphError("edge list: header declares " + std::to_string(m) + " edges but " +
                         std::to_string((tokens.size() - 2) / 2) + " pairs (" + std::to_string(tokens.size() - 2) +
                         " tokens) follow");
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Token& tu = tokens[2 + 2 * i];
        const Token& tv = tokens[3 + 2 * i];
        std::size_t u = to_index(tu);
        std::size_t v = to_index(tv);
        if (u == v) {
            throw GraphError("line " + std::to_string(tu.line) + ": self-loop at vertex " + std::to_string(u));
        }
        if (u >= n || v >= n) {
            throw GraphError("line " + std::to_string(tu.line) + ": vertex index out of range for n=" +
                             std::to_string(n));
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.a << ' ' << e.b << '\n';
    }
    return out.str();
}

} // namespace venergy
