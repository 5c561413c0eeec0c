#pragma once

#include <algorithm>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twinwidth/contraction.hpp"
#include "twinwidth/trigraph.hpp"

namespace twinwidth {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

inline long long parse_int(const std::string& tok, const char* what, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("malformed ") + what + ": '" + tok + "'", line);
    }
    if (used != tok.size()) {
        throw ParseError(std::string("malformed ") + what + ": '" + tok + "'", line);
    }
    return value;
}

}  // namespace detail

/**
 * Graph file format: optional comment lines starting with "c ", one
 * header "p tww <n> <m>", then m edge lines "<u> <v>".  Vertices are
 * 1-based; endpoints may appear in either order.  Errors carry the
 * offending line number.
 */
inline Trigraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const std::vector<std::string> tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front() == "c") {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "tww") {
                throw ParseError("malformed header, expected 'p tww <n> <m>'", lineno);
            }
            n = detail::parse_int(tokens[2], "vertex count", lineno);
            m = detail::parse_int(tokens[3], "edge count", lineno);
            if (n < 0 || n > std::numeric_limits<int>::max() || m < 0) {
                throw ParseError("header counts out of range", lineno);
            }
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError("more edge lines than the declared " + std::to_string(m), lineno);
        }
        if (tokens.size() != 2) {
            throw ParseError("malformed edge line, expected '<u> <v>'", lineno);
        }
        const long long u = detail::parse_int(tokens[0], "endpoint", lineno);
        const long long v = detail::parse_int(tokens[1], "endpoint", lineno);
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError("edge endpoint out of range: " + tokens[0] + " " + tokens[1], lineno);
        }
        if (u == v) {
            throw ParseError("self-loop at vertex " + tokens[0], lineno);
        }
        const std::pair<VertexId, VertexId> e{static_cast<VertexId>(std::min(u, v)),
                                              static_cast<VertexId>(std::max(u, v))};
        if (!seen.insert(e).second) {
            throw ParseError("duplicate edge: " + tokens[0] + " " + tokens[1], lineno);
        }
        edges.push_back(e);
    }
    if (!have_header) {
        throw ParseError("missing 'p tww <n> <m>' header", lineno == 0 ? 1 : lineno);
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError("declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         lineno == 0 ? 1 : lineno);
    }
    return Trigraph::from_edge_list(static_cast<int>(n), edges);
}

inline Trigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

/// Writes an ordinary graph with contiguous ids 1..n; edges come out
/// as "<u> <v>" with u < v, sorted, so output is canonical.
inline std::string write_graph(const Trigraph& g) {
    if (!g.is_ordinary()) {
        throw std::invalid_argument("graph files hold ordinary graphs only");
    }
    const std::vector<VertexId> vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i) {
        if (vs[i] != i + 1) {
            throw std::invalid_argument("graph files need contiguous vertex ids 1..n");
        }
    }
    std::ostringstream out;
    out << "p tww " << n << " " << g.edge_count() << "\n";
    for (VertexId u : vs) {
        for (VertexId v : g.neighbours(u)) {
            if (u < v) {
                out << u << " " << v << "\n";
            }
        }
    }
    return out.str();
}

/// Sequence file format: one "<survivor> <merged>" line per step.
/// Comment lines and blank lines are tolerated.  Replayability is the
/// verifier's job, not the parser's.
inline ContractionSequence parse_sequence(std::istream& in) {
    std::string line;
    int lineno = 0;
    ContractionSequence seq;
    while (std::getline(in, line)) {
        ++lineno;
        const std::vector<std::string> tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front() == "c") {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("malformed step line, expected '<survivor> <merged>'", lineno);
        }
        const long long s = detail::parse_int(tokens[0], "vertex id", lineno);
        const long long m = detail::parse_int(tokens[1], "vertex id", lineno);
        if (s < 1 || m < 1 || s > std::numeric_limits<int>::max() ||
            m > std::numeric_limits<int>::max()) {
            throw ParseError("vertex ids must be positive", lineno);
        }
        seq.push_back({static_cast<VertexId>(s), static_cast<VertexId>(m)});
    }
    return seq;
}

inline ContractionSequence parse_sequence(const std::string& text) {
    std::istringstream in(text);
    return parse_sequence(in);
}

inline std::string write_sequence(const ContractionSequence& seq) {
    std::ostringstream out;
    for (const ContractionStep& st : seq) {
        out << st.survivor << " " << st.merged << "\n";
    }
    return out.str();
}

}  // namespace twinwidth
