#include "dpforge/graph6.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dpforge {

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6 short format supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(const std::string& bytes) {
    if (bytes.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : bytes) {
        const int v = static_cast<unsigned char>(c);
        if (v < 63 || v > 126) throw std::invalid_argument("graph6: byte outside 63..126");
    }
    const int first = static_cast<unsigned char>(bytes[0]);
    if (first == 126) throw std::invalid_argument("graph6: long size format is not supported");
    const int n = first - 63;
    const long nbits = static_cast<long>(n) * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(bytes.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: wrong input length");
    Graph g(n);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(bytes[1 + bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Trailing padding bits must be zero.
    for (long b = nbits; b < nbytes * 6; ++b) {
        const int byte = static_cast<unsigned char>(bytes[1 + b / 6]) - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header values");
    Graph g(n);
    for (int k = 0; k < m; ++k) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: fewer edges than header claims");
        if (u == v) throw std::invalid_argument("edge list: self-loop");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list: vertex id out of range");
        if (g.has_edge(u, v)) throw std::invalid_argument("edge list: duplicate edge");
        g.add_edge(u, v);
    }
    int extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing data");
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_nonempty_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) return line;
    }
    throw std::invalid_argument("input contains no graph data");
}

}  // namespace

Graph read_graph_file(const std::string& path, GraphFormat format) {
    const std::string text = slurp(path);
    switch (format) {
        case GraphFormat::graph6:
            return decode_graph6(first_nonempty_line(text));
        case GraphFormat::edges:
            return parse_edge_list(text);
        case GraphFormat::dot:
            throw std::invalid_argument("DOT is write-only");
    }
    throw std::invalid_argument("unknown graph format");
}

Graph read_graph_file(const std::string& path) {
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6")
        return read_graph_file(path, GraphFormat::graph6);
    if (path.size() >= 6 && path.substr(path.size() - 6) == ".edges")
        return read_graph_file(path, GraphFormat::edges);
    throw std::invalid_argument(
        "cannot detect format from extension (expected .g6 or .edges); pass it explicitly");
}

std::string format_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6:
            return encode_graph6(g) + "\n";
        case GraphFormat::edges:
            return to_edge_list(g);
        case GraphFormat::dot:
            return to_dot(g);
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace dpforge
