#include "pairsolve/instance_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace pairsolve {

namespace {

// Next content line, skipping blanks and '#' comments. Returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.fail() && !ss.eof()) {
        ss.clear();
        ss >> rest;
        throw ParseError(line_no, "expected integers, found '" + rest + "'");
    }
    return out;
}

} // namespace

DemandGraph parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError(line_no + 1, "missing header");
    std::vector<long long> header = parse_ints(line, line_no);
    if (header.size() != 2) throw ParseError(line_no, "header must be 'n m'");
    long long n = header[0], m = header[1];
    if (n < 0 || n > 1'000'000) throw ParseError(line_no, "vertex count out of range");
    if (m < 0 || m > 10'000'000) throw ParseError(line_no, "edge count out of range");

    DemandGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                              std::to_string(i));
        std::vector<long long> ends = parse_ints(line, line_no);
        if (ends.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
        long long u = ends[0], v = ends[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "loop edge at vertex " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<OriginId>(i));
    }
    return g;
}

DemandGraph parse_instance_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

void print_instance(const DemandGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.live_edge_count() << '\n';
    for (EdgeId e : g.live_edge_ids()) {
        VertexPair p = g.edge(e).pair();
        out << p.lo << ' ' << p.hi << '\n';
    }
}

std::string instance_to_text(const DemandGraph& g) {
    std::ostringstream ss;
    print_instance(g, ss);
    return ss.str();
}

Resolution parse_solution(std::istream& in, int expected_paths) {
    Resolution res;
    std::string line;
    int line_no = 0;
    for (int i = 0; i < expected_paths; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError(line_no + 1, "expected " + std::to_string(expected_paths) +
                                              " path lines, found " + std::to_string(i));
        std::vector<long long> vs = parse_ints(line, line_no);
        if (vs.size() < 2) throw ParseError(line_no, "path needs at least two vertices");
        Resolution::PathEntry pe;
        pe.origin = i;
        for (long long v : vs) pe.path.push_back(static_cast<Vertex>(v));
        res.paths.push_back(std::move(pe));
    }
    return res;
}

void print_solution(const Resolution& res, std::ostream& out) {
    for (const auto& pe : res.paths) {
        for (std::size_t i = 0; i < pe.path.size(); ++i)
            out << pe.path[i] << (i + 1 < pe.path.size() ? ' ' : '\n');
    }
}

CombinedDoc parse_combined(std::istream& in) {
    DemandGraph g = parse_instance(in);
    Resolution res = parse_solution(in, g.live_edge_count());
    return CombinedDoc{std::move(g), std::move(res)};
}

void write_dot(const DemandGraph& g, const Resolution* res, std::ostream& out) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#a65628", "#f781bf", "#1b9e77", "#666666", "#66a61e"};
    const int ncolors = static_cast<int>(sizeof(palette) / sizeof(palette[0]));
    out << "graph demand {\n  node [shape=circle fontsize=10];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (EdgeId e : g.live_edge_ids()) {
        VertexPair p = g.edge(e).pair();
        out << "  " << p.lo << " -- " << p.hi << " [style=dashed color=gray];\n";
    }
    if (res) {
        for (const auto& pe : res->paths) {
            const char* color = palette[pe.origin % ncolors];
            for (std::size_t i = 0; i + 1 < pe.path.size(); ++i)
                out << "  " << pe.path[i] << " -- " << pe.path[i + 1] << " [color=\"" << color
                    << "\" penwidth=2];\n";
        }
    }
    out << "}\n";
}

} // namespace pairsolve
