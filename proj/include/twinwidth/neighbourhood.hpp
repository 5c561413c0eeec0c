#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "twinwidth/trigraph.hpp"

namespace twinwidth {

struct NeighbourhoodProfile {
    std::vector<VertexId> x_set;                // sorted, deduplicated
    std::vector<std::vector<VertexId>> traces;  // distinct traces, sorted lexicographically
    long long count = 0;                        // == traces.size()
};

namespace detail {

inline std::vector<VertexId> canonical_x_set(const Trigraph& g, const std::vector<VertexId>& x) {
    std::vector<VertexId> out = x;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (VertexId v : out) {
        if (!g.has_vertex(v)) {
            throw std::invalid_argument("X contains unknown vertex " + std::to_string(v));
        }
    }
    return out;
}

inline void require_ordinary(const Trigraph& g, const char* op) {
    if (!g.is_ordinary()) {
        throw std::invalid_argument(std::string(op) + " requires a graph without red edges");
    }
}

/// N(v) ∩ X, sorted.  Both neighbour lists and X are sorted already.
inline std::vector<VertexId> x_trace(const Trigraph& g, VertexId v,
                                     const std::vector<VertexId>& x_sorted) {
    const std::vector<VertexId> nbrs = g.neighbours(v);
    std::vector<VertexId> out;
    std::set_intersection(nbrs.begin(), nbrs.end(), x_sorted.begin(), x_sorted.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace detail

/// Distinct traces N(v) ∩ X over the given candidate vertices.
inline NeighbourhoodProfile distinct_x_neighbourhoods_among(const Trigraph& g,
                                                            const std::vector<VertexId>& x,
                                                            const std::vector<VertexId>& among) {
    detail::require_ordinary(g, "neighbourhood profiling");
    NeighbourhoodProfile prof;
    prof.x_set = detail::canonical_x_set(g, x);
    std::set<std::vector<VertexId>> seen;
    for (VertexId v : among) {
        if (!g.has_vertex(v)) {
            throw std::invalid_argument("candidate set contains unknown vertex " +
                                        std::to_string(v));
        }
        seen.insert(detail::x_trace(g, v, prof.x_set));
    }
    prof.traces.assign(seen.begin(), seen.end());
    prof.count = static_cast<long long>(prof.traces.size());
    return prof;
}

/// Distinct traces N(v) ∩ X over all vertices of g, members of X included.
inline NeighbourhoodProfile distinct_x_neighbourhoods(const Trigraph& g,
                                                      const std::vector<VertexId>& x) {
    return distinct_x_neighbourhoods_among(g, x, g.vertices());
}

/// (d+2) * 2^(d+1) * k, rejecting anything that overflows 64 bits.
inline long long nu_upper_bound(int d, long long k) {
    if (d < 0) {
        throw std::invalid_argument("width must be nonnegative");
    }
    if (k < 1) {
        throw std::invalid_argument("X must be non-empty");
    }
    if (d + 1 >= 62) {
        throw std::overflow_error("neighbourhood bound exceeds 64-bit range");
    }
    const unsigned __int128 bound = static_cast<unsigned __int128>(d + 2) *
                                    (static_cast<unsigned __int128>(1) << (d + 1)) *
                                    static_cast<unsigned __int128>(k);
    if (bound > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) {
        throw std::overflow_error("neighbourhood bound exceeds 64-bit range");
    }
    return static_cast<long long>(bound);
}

/// Does the number of distinct X-neighbourhoods respect the width-d bound?
inline bool check_upper_bound(const Trigraph& g, const std::vector<VertexId>& x, int d) {
    const NeighbourhoodProfile prof = distinct_x_neighbourhoods(g, x);
    return prof.count <= nu_upper_bound(d, static_cast<long long>(prof.x_set.size()));
}

/**
 * Normal form for counting X-neighbourhoods: outside X, vertices with
 * equal traces are collapsed to the lowest id; then each X vertex
 * whose trace is unrealized outside X gets a fresh clone of its
 * current neighbourhood.  Ids of clones continue past the largest
 * original id.  The result has pairwise distinct traces outside X,
 * one per trace realized by the input's vertices, and applying the
 * operation again changes nothing.
 */
inline Trigraph dedupe_and_extend(const Trigraph& g, const std::vector<VertexId>& x) {
    detail::require_ordinary(g, "dedupe_and_extend");
    const std::vector<VertexId> xs = detail::canonical_x_set(g, x);
    const std::set<VertexId> xset(xs.begin(), xs.end());
    Trigraph work = g;

    std::set<std::vector<VertexId>> outside_traces;
    std::vector<VertexId> drop;
    for (VertexId v : work.vertices()) {
        if (xset.count(v) > 0) {
            continue;
        }
        if (!outside_traces.insert(detail::x_trace(work, v, xs)).second) {
            drop.push_back(v);  // ascending scan keeps the lowest id
        }
    }
    for (VertexId v : drop) {
        work.remove_vertex(v);
    }

    VertexId next = 0;
    for (VertexId v : g.vertices()) {
        next = std::max(next, v);
    }
    ++next;
    for (VertexId v : xs) {
        const std::vector<VertexId> trace = detail::x_trace(work, v, xs);
        if (outside_traces.count(trace) > 0) {
            continue;
        }
        work.add_vertex(next);
        for (VertexId y : work.neighbours(v)) {
            work.set_edge(next, y, EdgeKind::Black);
        }
        outside_traces.insert(trace);
        ++next;
    }
    return work;
}

struct TwinPairSet {
    VertexId x = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;  // u < v, sorted
};

/// Pairs of vertices outside X whose traces agree on X minus {x}.
inline TwinPairSet twin_pairs(const Trigraph& g, const std::vector<VertexId>& x_set, VertexId x) {
    detail::require_ordinary(g, "twin pair search");
    const std::vector<VertexId> xs = detail::canonical_x_set(g, x_set);
    if (!std::binary_search(xs.begin(), xs.end(), x)) {
        throw std::invalid_argument("vertex " + std::to_string(x) + " is not in X");
    }
    std::vector<VertexId> reduced;
    reduced.reserve(xs.size() - 1);
    for (VertexId v : xs) {
        if (v != x) {
            reduced.push_back(v);
        }
    }
    const std::set<VertexId> xset(xs.begin(), xs.end());
    std::map<std::vector<VertexId>, std::vector<VertexId>> groups;
    for (VertexId v : g.vertices()) {
        if (xset.count(v) == 0) {
            groups[detail::x_trace(g, v, reduced)].push_back(v);
        }
    }
    TwinPairSet out;
    out.x = x;
    for (const auto& [trace, members] : groups) {
        for (std::size_t a = 0; a + 1 < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                out.pairs.emplace_back(members[a], members[b]);
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

struct MinTwinPairResult {
    VertexId x = 0;
    long long pair_count = 0;
    long long bound = 0;  // (d+2) * 2^(d+1)
    bool within_bound = false;
};

/// The x in X minimizing the number of twin pairs outside X, with the
/// width-d ceiling that minimum is expected to respect.
inline MinTwinPairResult min_twin_pair_vertex(const Trigraph& g, const std::vector<VertexId>& x_set,
                                              int d) {
    const std::vector<VertexId> xs = detail::canonical_x_set(g, x_set);
    if (xs.empty()) {
        throw std::invalid_argument("X must be non-empty");
    }
    MinTwinPairResult best;
    bool first = true;
    for (VertexId x : xs) {
        const long long count = static_cast<long long>(twin_pairs(g, xs, x).pairs.size());
        if (first || count < best.pair_count) {
            best.x = x;
            best.pair_count = count;
            first = false;
        }
    }
    best.bound = nu_upper_bound(d, 1);
    best.within_bound = best.pair_count <= best.bound;
    return best;
}

/// Max over all n-vertex subsets A of the number of distinct traces
/// N(v) ∩ A.  Exponential in n; intended for small samples.  Stops
/// early once some A realizes all 2^n subsets.
inline long long shatter_function(const Trigraph& g, int n) {
    detail::require_ordinary(g, "shatter function");
    if (n < 0) {
        throw std::invalid_argument("sample size must be nonnegative");
    }
    const std::vector<VertexId> vs = g.vertices();
    const int nv = static_cast<int>(vs.size());
    if (n > nv) {
        throw std::invalid_argument("sample size exceeds vertex count");
    }
    if (n == 0) {
        return 1;
    }
    if (nv > 62) {
        throw std::invalid_argument("graph too large for shatter enumeration (max 62 vertices)");
    }
    std::vector<std::uint64_t> adj(nv, 0);
    std::map<VertexId, int> pos;
    for (int i = 0; i < nv; ++i) {
        pos[vs[i]] = i;
    }
    for (int i = 0; i < nv; ++i) {
        for (VertexId u : g.neighbours(vs[i])) {
            adj[i] |= std::uint64_t{1} << pos[u];
        }
    }
    const std::uint64_t max_traces = std::uint64_t{1} << n;
    long long best = 0;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) {
        idx[i] = i;
    }
    while (true) {
        std::uint64_t amask = 0;
        for (int i : idx) {
            amask |= std::uint64_t{1} << i;
        }
        std::unordered_set<std::uint64_t> traces;
        for (int i = 0; i < nv; ++i) {
            traces.insert(adj[i] & amask);
        }
        if (static_cast<long long>(traces.size()) > best) {
            best = static_cast<long long>(traces.size());
        }
        if (static_cast<std::uint64_t>(best) == max_traces) {
            return best;  // no subset can do better
        }
        // next combination in lexicographic order
        int i = n - 1;
        while (i >= 0 && idx[i] == nv - n + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[i];
        for (int j = i + 1; j < n; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return best;
}

}  // namespace twinwidth
