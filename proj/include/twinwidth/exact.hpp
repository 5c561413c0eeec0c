#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twinwidth/contraction.hpp"
#include "twinwidth/trigraph.hpp"

namespace twinwidth {

struct ExactResult {
    int width = 0;
    ContractionSequence witness;  // empty for graphs with fewer than two vertices
};

namespace detail {

/// Colour-refinement canonical form.  Equal keys imply isomorphic
/// trigraphs; distinct keys for isomorphic ones only cost memo misses.
inline std::string canonical_key(const Trigraph& g) {
    const std::vector<VertexId> vs = g.vertices();
    const std::size_t n = vs.size();
    std::vector<int> colour(n, 0);
    std::vector<std::size_t> index_of_id;
    {
        // initial colours from (black degree, red degree)
        std::vector<std::pair<int, int>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            const int red = g.red_degree(vs[i]);
            const int black = g.degree(vs[i]) - red;
            sig[i] = {black, red};
        }
        std::vector<std::pair<int, int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t i = 0; i < n; ++i) {
            colour[i] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
        }
    }
    std::unordered_map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
        pos[vs[i]] = i;
    }
    std::size_t classes = 0;
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> s;
            s.push_back(colour[i]);
            std::vector<int> nb;
            for (VertexId x : g.neighbours(vs[i])) {
                const int kind = g.edge_kind(vs[i], x) == EdgeKind::Red ? 1 : 0;
                nb.push_back(colour[pos[x]] * 2 + kind);
            }
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[i] = std::move(s);
        }
        std::vector<std::vector<int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t i = 0; i < n; ++i) {
            colour[i] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
        }
        if (distinct.size() == classes) {
            break;
        }
        classes = distinct.size();
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return colour[a] != colour[b] ? colour[a] < colour[b] : vs[a] < vs[b];
    });
    std::string key;
    key.reserve(1 + n * (n - 1) / 2);
    key.push_back(static_cast<char>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            key.push_back(static_cast<char>(g.edge_kind(vs[order[a]], vs[order[b]])));
        }
    }
    return key;
}

/// Depth-first search for a contraction sequence of red degree at most
/// `budget`, memoizing canonical keys of states proven infeasible.
class ExactSolver {
public:
    bool solve(const Trigraph& g, int budget, ContractionSequence& steps) {
        if (g.vertex_count() <= 1) {
            return true;
        }
        const std::string key = canonical_key(g);
        if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) {
            return false;
        }
        struct Candidate {
            int red;
            VertexId survivor;
            VertexId merged;
            Trigraph state;
        };
        const std::vector<VertexId> vs = g.vertices();
        std::vector<Candidate> cands;
        for (std::size_t a = 0; a + 1 < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                Trigraph child = g.contracted(vs[a], vs[b]);
                const int red = child.max_red_degree();
                if (red <= budget) {
                    cands.push_back({red, vs[a], vs[b], std::move(child)});
                }
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
            if (x.red != y.red) {
                return x.red < y.red;
            }
            if (x.survivor != y.survivor) {
                return x.survivor < y.survivor;
            }
            return x.merged < y.merged;
        });
        for (const Candidate& c : cands) {
            steps.push_back({c.survivor, c.merged});
            if (solve(c.state, budget, steps)) {
                return true;
            }
            steps.pop_back();
        }
        int& worst = failed_[key];
        worst = std::max(worst, budget);
        return false;
    }

private:
    std::unordered_map<std::string, int> failed_;
};

}  // namespace detail

/**
 * Exact twin-width by iterative deepening over the red-degree budget.
 * The optional hint caps the deepening (any honest upper bound, e.g. a
 * greedy width, makes the final iteration succeed); a dishonest hint
 * only costs extra iterations beyond it.  Returns the width and a
 * witness sequence attaining it.
 */
inline ExactResult exact_tww(const Trigraph& g, std::optional<int> upper_hint = std::nullopt) {
    if (!g.is_ordinary()) {
        throw std::invalid_argument("exact twin-width requires a graph without red edges");
    }
    if (upper_hint && *upper_hint < 0) {
        throw std::invalid_argument("upper hint must be nonnegative");
    }
    if (g.vertex_count() <= 1) {
        return {};
    }
    // after the first contraction at most n-1 vertices remain, so every
    // full sequence stays within red degree n-2
    const int trivial_cap = std::max(0, g.vertex_count() - 2);
    const int cap = upper_hint ? std::min(*upper_hint, trivial_cap) : trivial_cap;
    detail::ExactSolver solver;
    for (int budget = 0;; ++budget) {
        ContractionSequence steps;
        if (solver.solve(g, budget, steps)) {
            return {budget, std::move(steps)};
        }
        if (budget >= cap && budget >= trivial_cap) {
            throw std::logic_error("deepening exhausted the trivial width cap");
        }
    }
}

}  // namespace twinwidth
