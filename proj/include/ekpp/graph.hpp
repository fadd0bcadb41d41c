#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ekpp {

// Thrown by the text parsers; line numbers are 1-based within the stream.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Immutable undirected graph with positive edge weights. Vertices are
// 0-based internally; all text formats and reports use 1-based labels.
struct WeightedGraph {
    struct Edge {
        int u, v;  // normalized u < v
        double w;
    };

    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, double>>> adjacency;  // (neighbor, weight)
    double w_total = 0.0;
    bool integral_weights = true;  // every weight is an exact integer

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

    // Validates and assembles the derived structure. Throws std::invalid_argument
    // on self-loops, duplicate pairs, out-of-range endpoints or weights <= 0.
    static WeightedGraph build(int n, std::vector<Edge> raw_edges) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        WeightedGraph g;
        g.n = n;
        g.edges.reserve(raw_edges.size());
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(raw_edges.size() * 2);
        for (Edge e : raw_edges) {
            if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u + 1));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (!(e.w > 0.0) || !std::isfinite(e.w))
                throw std::invalid_argument("edge weight must be positive and finite");
            const std::uint64_t key = static_cast<std::uint64_t>(e.u) * static_cast<std::uint64_t>(n) +
                                      static_cast<std::uint64_t>(e.v);
            if (!seen.insert(key).second)
                throw std::invalid_argument("duplicate edge " + std::to_string(e.u + 1) + " " +
                                            std::to_string(e.v + 1));
            g.edges.push_back(e);
        }
        g.adjacency.assign(n, {});
        for (const Edge& e : g.edges) {
            g.adjacency[e.u].emplace_back(e.v, e.w);
            g.adjacency[e.v].emplace_back(e.u, e.w);
            g.w_total += e.w;
            if (e.w != std::floor(e.w)) g.integral_weights = false;
        }
        return g;
    }
};

// Shortest decimal text that parses back to exactly the same double.
inline std::string format_weight(double w) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    (void)ec;
    return std::string(buf, ptr);
}

namespace detail {

inline bool parse_int(const std::string& tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline bool parse_double(const std::string& tok, double& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

} // namespace detail

// DIMACS ASCII clique format: `c` comments, one `p edge <n> <m>` header,
// `e <u> <v>` lines with 1-based endpoints. Duplicate `e` lines (including
// reversed orderings, which some published files contain) collapse to one
// edge. All weights are provisionally 1.
inline WeightedGraph parse_dimacs(std::istream& in) {
    int n = -1;
    std::vector<WeightedGraph::Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate problem line");
            int m = 0;
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "edges") ||
                !detail::parse_int(toks[2], n) || !detail::parse_int(toks[3], m) || n < 0 || m < 0)
                throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
            edges.reserve(static_cast<std::size_t>(m));
            seen.reserve(static_cast<std::size_t>(m) * 2);
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError(line_no, "edge before problem line");
            int u = 0, v = 0;
            if (toks.size() != 3 || !detail::parse_int(toks[1], u) || !detail::parse_int(toks[2], v))
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            int a = u - 1, b = v - 1;
            if (a > b) std::swap(a, b);
            const std::uint64_t key =
                static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(b);
            if (seen.insert(key).second) edges.push_back({a, b, 1.0});
        } else {
            throw ParseError(line_no, "unexpected line type '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing problem line");
    return WeightedGraph::build(n, std::move(edges));
}

// Weighted edge-list format: `<u> <v> <w>` per line, `#` starts a comment,
// optional leading header `<n> <m>`. Without a header, n is the largest
// endpoint. Duplicates are errors here because their weights could conflict.
inline WeightedGraph parse_weighted_edge_list(std::istream& in) {
    struct Raw {
        int u, v;
        double w;
        int line;
    };
    std::vector<Raw> raw;
    bool have_header = false;
    int header_n = 0, header_m = 0;
    bool first_data = true;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (first_data && toks.size() == 2) {
            if (!detail::parse_int(toks[0], header_n) || !detail::parse_int(toks[1], header_m) ||
                header_n < 0 || header_m < 0)
                throw ParseError(line_no, "malformed header, expected '<n> <m>'");
            have_header = true;
            first_data = false;
            continue;
        }
        first_data = false;
        int u = 0, v = 0;
        double w = 0.0;
        if (toks.size() != 3 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v) ||
            !detail::parse_double(toks[2], w))
            throw ParseError(line_no, "malformed edge, expected '<u> <v> <w>'");
        if (u < 1 || v < 1) throw ParseError(line_no, "vertex ids are 1-based");
        if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line_no, "weight must be positive");
        raw.push_back({u, v, w, line_no});
    }
    int n = header_n;
    if (!have_header) {
        n = 0;
        for (const Raw& r : raw) n = std::max({n, r.u, r.v});
    }
    if (have_header && static_cast<int>(raw.size()) != header_m)
        throw ParseError(line_no, "header declared " + std::to_string(header_m) + " edges, found " +
                                      std::to_string(raw.size()));
    std::vector<WeightedGraph::Edge> edges;
    edges.reserve(raw.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(raw.size() * 2);
    for (const Raw& r : raw) {
        if (r.u > n || r.v > n)
            throw ParseError(r.line, "vertex id exceeds declared count " + std::to_string(n));
        int a = r.u - 1, b = r.v - 1;
        if (a > b) std::swap(a, b);
        const std::uint64_t key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(std::max(n, 1)) +
                                  static_cast<std::uint64_t>(b);
        if (!seen.insert(key).second)
            throw ParseError(r.line, "duplicate edge " + std::to_string(r.u) + " " + std::to_string(r.v));
        edges.push_back({a, b, r.w});
    }
    return WeightedGraph::build(n, std::move(edges));
}

// Synthetic weighting for unweighted benchmark graphs:
// edge {i, j} (1-based labels) gets weight ((i + j) mod 200) + 1.
inline WeightedGraph apply_dimacs_weights(const WeightedGraph& g) {
    std::vector<WeightedGraph::Edge> edges = g.edges;
    for (auto& e : edges) e.w = static_cast<double>((e.u + e.v + 2) % 200 + 1);
    return WeightedGraph::build(g.n, std::move(edges));
}

// Edge density 2|E| / (|V| (|V|-1)).
inline double density(const WeightedGraph& g) {
    if (g.n < 2) throw std::domain_error("density undefined for graphs with fewer than 2 vertices");
    return 2.0 * static_cast<double>(g.edge_count()) /
           (static_cast<double>(g.n) * static_cast<double>(g.n - 1));
}

// Writes the weighted edge-list form (with header). Weights round-trip exactly.
inline void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges)
        out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << format_weight(e.w) << '\n';
}

} // namespace ekpp
