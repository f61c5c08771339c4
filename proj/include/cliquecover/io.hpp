#ifndef CLIQUECOVER_IO_HPP
#define CLIQUECOVER_IO_HPP

#include "graph.hpp"
#include "problems.hpp"
#include "rational.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquecover::io {

enum class GraphFormat { Dimacs, EdgeList, Auto };

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " at line " + std::to_string(line)), line_number(line)
    {
    }
    int line_number;
};

namespace detail {

inline bool comment_or_blank(const std::string& line)
{
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == 'c' || c == '#';
    }
    return true;
}

inline std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline long long parse_int(const std::string& t, int line)
{
    try {
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError("malformed integer '" + t + "'", line);
    }
}

} // namespace detail

/// DIMACS coloring format: "p edge <n> <m>" header, "e <u> <v>" lines with
/// 1-based ids, comment lines start with 'c'.
inline Graph parse_dimacs(std::istream& in)
{
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) continue;
        auto ts = detail::tokens(line);
        if (ts[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            if (ts.size() != 4 || ts[1] != "edge") throw ParseError("malformed problem line", lineno);
            n = detail::parse_int(ts[2], lineno);
            if (n < 0) throw ParseError("negative vertex count", lineno);
        } else if (ts[0] == "e") {
            if (n < 0) throw ParseError("edge before problem line", lineno);
            if (ts.size() != 3) throw ParseError("malformed edge line", lineno);
            long long u = detail::parse_int(ts[1], lineno);
            long long v = detail::parse_int(ts[2], lineno);
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex id out of range", lineno);
            if (u == v) throw ParseError("self-loop", lineno);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("unrecognized line", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line", lineno ? lineno : 1);
    return Graph::build(static_cast<int>(n), edges);
}

/// Plain whitespace edge list with 0-based ids, one "u v" pair per line;
/// vertex count is the largest id plus one (or the optional "n <count>"
/// header, which also admits isolated vertices).
inline Graph parse_edge_list(std::istream& in)
{
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    long long maxid = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) continue;
        auto ts = detail::tokens(line);
        if (ts[0] == "n" && ts.size() == 2) {
            n = detail::parse_int(ts[1], lineno);
            continue;
        }
        if (ts.size() != 2) throw ParseError("expected 'u v'", lineno);
        long long u = detail::parse_int(ts[0], lineno);
        long long v = detail::parse_int(ts[1], lineno);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        maxid = std::max({maxid, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    long long count = n >= 0 ? n : maxid + 1;
    if (maxid >= count) throw ParseError("vertex id exceeds declared count", lineno);
    return Graph::build(static_cast<int>(count), edges);
}

inline Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto)
{
    if (format == GraphFormat::Auto) {
        std::stringstream buffered;
        buffered << in.rdbuf();
        std::string text = buffered.str();
        std::istringstream peek(text);
        std::string line;
        bool dimacs = false;
        while (std::getline(peek, line)) {
            if (detail::comment_or_blank(line)) continue;
            auto ts = detail::tokens(line);
            dimacs = !ts.empty() && (ts[0] == "p" || ts[0] == "e");
            break;
        }
        std::istringstream again(text);
        return dimacs ? parse_dimacs(again) : parse_edge_list(again);
    }
    return format == GraphFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

inline Graph load_graph(const std::string& path, GraphFormat format = GraphFormat::Auto)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in, format);
}

struct WeightAnnotations {
    EdgeWeights edge_weight;
    std::set<Vertex> annotated;
    VertexWeights vertex_weight;
};

/// Weight file: "u v w" assigns weight w to edge {u,v}; "x s w" annotates
/// vertex x with weight w. Weights are positive integers or decimals and are
/// stored as exact rationals.
inline WeightAnnotations parse_weighted(std::istream& in, const Graph& g)
{
    WeightAnnotations out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) continue;
        auto ts = detail::tokens(line);
        if (ts.size() != 3) throw ParseError("expected 'u v w' or 'x s w'", lineno);
        Rational w;
        try {
            w = parse_rational(ts[2]);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
        if (w <= 0) throw ParseError("weights must be positive", lineno);
        if (ts[1] == "s") {
            long long x = detail::parse_int(ts[0], lineno);
            if (x < 0 || x >= g.vertex_count()) throw ParseError("vertex id out of range", lineno);
            out.annotated.insert(static_cast<Vertex>(x));
            out.vertex_weight[static_cast<Vertex>(x)] = w;
        } else {
            long long u = detail::parse_int(ts[0], lineno);
            long long v = detail::parse_int(ts[1], lineno);
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
                throw ParseError("vertex id out of range", lineno);
            if (g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v)) < 0)
                throw ParseError("weight on a non-edge", lineno);
            out.edge_weight[make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))] = w;
        }
    }
    return out;
}

inline WeightAnnotations load_weighted(const std::string& path, const Graph& g)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weight file: " + path);
    return parse_weighted(in, g);
}

/// Pair file: one "u v" pair per line, 0-based.
inline std::set<Edge> parse_pairs(std::istream& in, const Graph& g)
{
    std::set<Edge> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) continue;
        auto ts = detail::tokens(line);
        if (ts.size() != 2) throw ParseError("expected 'u v'", lineno);
        long long u = detail::parse_int(ts[0], lineno);
        long long v = detail::parse_int(ts[1], lineno);
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || u == v)
            throw ParseError("bad pair", lineno);
        out.insert(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }
    return out;
}

inline std::set<Edge> load_pairs(const std::string& path, const Graph& g)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pair file: " + path);
    return parse_pairs(in, g);
}

inline void write_edge_list(std::ostream& os, const Graph& g)
{
    os << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline void write_dimacs(std::ostream& os, const Graph& g)
{
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline void write_weighted(std::ostream& os, const WeightAnnotations& w)
{
    for (const auto& [e, weight] : w.edge_weight)
        os << e.u << ' ' << e.v << ' ' << format_rational(weight) << '\n';
    for (Vertex x : w.annotated)
        os << x << " s " << format_rational(w.vertex_weight.at(x)) << '\n';
}

} // namespace cliquecover::io

#endif
