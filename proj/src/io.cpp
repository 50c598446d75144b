#include "wsm/io.hpp"

#include <fstream>
#include <sstream>

namespace wsm {

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

template <class... T>
bool read_exactly(const std::string& line, T&... out) {
    std::istringstream ss(line);
    ((ss >> out) && ...);
    if (ss.fail()) return false;
    std::string rest;
    return !(ss >> rest);
}

}  // namespace

CubicGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = 0, m = 0;
    if (!next_data_line(in, line, line_no)) parse_error(line_no, "missing \"n m\" header");
    if (!read_exactly(line, n, m) || n < 0 || m < 0) parse_error(line_no, "expected \"n m\"");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no)) parse_error(line_no, "expected " + std::to_string(m) + " edges");
        long long u = 0, v = 0;
        if (!read_exactly(line, u, v)) parse_error(line_no, "expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) parse_error(line_no, "vertex out of range");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (next_data_line(in, line, line_no)) parse_error(line_no, "unexpected data after the last edge");
    return build_graph(static_cast<std::size_t>(n), edges);
}

CubicGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_graph(in);
}

std::string format_graph(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Matching read_matching(std::istream& in) {
    Matching m;
    std::string line;
    std::size_t line_no = 0;
    while (next_data_line(in, line, line_no)) {
        long long id = 0;
        if (!read_exactly(line, id) || id < 0) parse_error(line_no, "expected an edge id");
        m.push_back(static_cast<EdgeId>(id));
    }
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i - 1] >= m[i]) throw Error(ErrorCode::ParseError, "edge ids must be strictly ascending");
    return m;
}

Matching read_matching_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_matching(in);
}

std::string format_matching(const Matching& m) {
    std::ostringstream out;
    for (EdgeId e : m) out << e << '\n';
    return out.str();
}

}  // namespace wsm
