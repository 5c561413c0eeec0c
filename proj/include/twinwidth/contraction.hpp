#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinwidth/trigraph.hpp"

namespace twinwidth {

struct ContractionStep {
    VertexId survivor = 0;
    VertexId merged = 0;

    friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

using ContractionSequence = std::vector<ContractionStep>;

/// Parts are sorted internally and ordered by their smallest member.
using Partition = std::vector<std::vector<VertexId>>;

struct SequenceViolation {
    int step = 0;        // 1-based position in the sequence
    int red_degree = 0;  // max red degree right after that step
};

struct SequenceReport {
    bool valid = false;
    int width = 0;  // max red degree over every intermediate trigraph
    std::optional<SequenceViolation> first_violation;
    std::optional<int> failed_step;  // 1-based; set on structural failure
    std::string error;               // empty when structurally sound
};

namespace detail {

/// Union-find keyed by vertex id; unions keep the survivor's root.
class UnionFind {
public:
    explicit UnionFind(const std::vector<VertexId>& ids) {
        for (VertexId v : ids) {
            parent_[v] = v;
        }
    }

    VertexId find(VertexId v) {
        VertexId root = v;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[v] != root) {
            VertexId next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    void unite(VertexId survivor, VertexId merged) { parent_[find(merged)] = find(survivor); }

private:
    std::map<VertexId, VertexId> parent_;
};

}  // namespace detail

/**
 * Replays a contraction sequence on an ordinary graph.
 *
 * Structural failures (dead or unknown vertex, self-contraction, wrong
 * step count) make the report invalid and set failed_step/error; the
 * replay stops at the offending step.  A budget overrun only records
 * first_violation and keeps replaying, so the true width is reported.
 */
inline SequenceReport replay_and_verify(const Trigraph& g, const ContractionSequence& seq,
                                        std::optional<int> budget = std::nullopt) {
    if (!g.is_ordinary()) {
        throw std::invalid_argument("replay requires a graph without red edges");
    }
    if (budget && *budget < 0) {
        throw std::invalid_argument("budget must be nonnegative");
    }
    SequenceReport rep;
    Trigraph work = g;
    const std::size_t expected = g.vertex_count() == 0 ? 0 : static_cast<std::size_t>(g.vertex_count()) - 1;
    for (std::size_t s = 0; s < seq.size(); ++s) {
        const ContractionStep& st = seq[s];
        const int step_no = static_cast<int>(s) + 1;
        if (st.survivor == st.merged) {
            rep.failed_step = step_no;
            rep.error = "step " + std::to_string(step_no) + " contracts vertex " +
                        std::to_string(st.survivor) + " with itself";
            return rep;
        }
        if (!work.has_vertex(st.survivor) || !work.has_vertex(st.merged)) {
            VertexId bad = work.has_vertex(st.survivor) ? st.merged : st.survivor;
            rep.failed_step = step_no;
            rep.error = "step " + std::to_string(step_no) + " references dead or unknown vertex " +
                        std::to_string(bad);
            return rep;
        }
        work.contract(st.survivor, st.merged);
        const int red = work.max_red_degree();
        if (red > rep.width) {
            rep.width = red;
        }
        if (budget && red > *budget && !rep.first_violation) {
            rep.first_violation = SequenceViolation{step_no, red};
        }
    }
    if (seq.size() != expected) {
        rep.error = "expected " + std::to_string(expected) + " steps, got " +
                    std::to_string(seq.size());
        return rep;
    }
    rep.valid = !budget || rep.width <= *budget;
    return rep;
}

/// Partition of V(g) induced by the first `i` steps of the sequence.
/// Step 0 is the discrete partition.  Throws on malformed prefixes.
inline Partition partition_at_step(const Trigraph& g, const ContractionSequence& seq, int i) {
    const int n = g.vertex_count();
    const int max_steps = n == 0 ? 0 : n - 1;
    if (i < 0 || i > max_steps) {
        throw std::invalid_argument("step index out of range: " + std::to_string(i));
    }
    if (static_cast<int>(seq.size()) < i) {
        throw std::invalid_argument("sequence has fewer than " + std::to_string(i) + " steps");
    }
    detail::UnionFind uf(g.vertices());
    std::set<VertexId> dead;
    for (int s = 0; s < i; ++s) {
        const ContractionStep& st = seq[s];
        const bool bad_survivor = !g.has_vertex(st.survivor) || dead.count(st.survivor) > 0;
        const bool bad_merged = !g.has_vertex(st.merged) || dead.count(st.merged) > 0;
        if (st.survivor == st.merged || bad_survivor || bad_merged) {
            throw std::invalid_argument("step " + std::to_string(s + 1) +
                                        " references a dead or unknown vertex");
        }
        uf.unite(st.survivor, st.merged);
        dead.insert(st.merged);
    }
    std::map<VertexId, std::vector<VertexId>> groups;
    for (VertexId v : g.vertices()) {
        groups[uf.find(v)].push_back(v);
    }
    Partition parts;
    parts.reserve(groups.size());
    for (auto& [root, members] : groups) {
        parts.push_back(std::move(members));
    }
    std::sort(parts.begin(), parts.end(),
              [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                  return a.front() < b.front();
              });
    return parts;
}

struct GreedyResult {
    ContractionSequence seq;
    int width = 0;
};

/// Contracts the pair minimizing the resulting max red degree at each
/// step, breaking ties by the lexicographically smallest id pair.
inline GreedyResult greedy_sequence(const Trigraph& g) {
    if (!g.is_ordinary()) {
        throw std::invalid_argument("greedy search requires a graph without red edges");
    }
    GreedyResult res;
    Trigraph work = g;
    while (work.vertex_count() > 1) {
        const std::vector<VertexId> vs = work.vertices();
        int best_red = INT_MAX;
        std::pair<VertexId, VertexId> best_pair{0, 0};
        for (std::size_t a = 0; a + 1 < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                const int red = work.contracted(vs[a], vs[b]).max_red_degree();
                if (red < best_red) {
                    best_red = red;
                    best_pair = {vs[a], vs[b]};
                }
            }
        }
        work.contract(best_pair.first, best_pair.second);
        res.seq.push_back({best_pair.first, best_pair.second});
        if (best_red > res.width) {
            res.width = best_red;
        }
    }
    return res;
}

}  // namespace twinwidth
