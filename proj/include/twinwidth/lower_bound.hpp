#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twinwidth/contraction.hpp"
#include "twinwidth/neighbourhood.hpp"
#include "twinwidth/trigraph.hpp"

namespace twinwidth {

/**
 * Parameters of the extremal family.  The graph consists of anchors
 * x_1..x_k plus, for every admissible triple (i, j, t), a class of 2^C
 * vertices: the member for Y ⊆ {x_{t+1}, ..., x_{t+C}} is adjacent to
 * x_i..x_j, to x_t, and to Y.  Triples satisfy i <= j <= i+A-1 and
 * j+2 <= t <= min(j+1+B, k-C).
 *
 * Width mode picks A = B = floor(sqrt(d-2)) and C = d-2, which keeps
 * the scheduled red degree within d while the number of classes grows
 * like d * 2^d * k.
 */
struct LbParameters {
    int A = 0;
    int B = 0;
    int C = 0;
    int k = 0;
    std::optional<int> d;  // target width; always set in width mode

    static LbParameters from_width(int d, int k) {
        if (d < 3) {
            throw std::invalid_argument("width mode requires d >= 3");
        }
        // k >= d + 2*sqrt(d-2) + 1, checked in integers
        const long long slack = static_cast<long long>(k) - d - 1;
        if (slack < 0 || slack * slack < 4LL * (d - 2)) {
            throw std::invalid_argument("k must be at least d + 2*sqrt(d-2) + 1");
        }
        LbParameters p;
        p.A = p.B = isqrt(d - 2);
        p.C = d - 2;
        p.k = k;
        p.d = d;
        return p;
    }

    static LbParameters from_explicit(int a, int b, int c, int k) {
        if (a < 1 || b < 1 || c < 1) {
            throw std::invalid_argument("A, B, C must all be at least 1");
        }
        if (k < c + 3) {
            throw std::invalid_argument("k must be at least C + 3 so a triple exists");
        }
        LbParameters p;
        p.A = a;
        p.B = b;
        p.C = c;
        p.k = k;
        return p;
    }

    /// Red-degree ceiling of the schedule.
    long long M() const { return std::max(static_cast<long long>(A) * B, static_cast<long long>(C)) + 2; }

    /// Whether the ceiling fits the target width, when one is set.
    bool m_within_target() const { return !d || M() <= *d; }

    /// Phases run from 0 (discrete) to k - C - 1 (everything but the
    /// anchor suffix merged).
    int last_phase() const { return k - C - 1; }

    static int isqrt(int x) {
        int s = 0;
        while ((s + 1) * (s + 1) <= x) {
            ++s;
        }
        return s;
    }
};

struct LbVertexInfo {
    int i = 0;
    int j = 0;
    int t = 0;
    std::uint32_t y_mask = 0;  // bit p set <=> adjacent to x_{t+1+p}
};

struct LbGraph {
    Trigraph graph;
    int k = 0;
    std::map<std::tuple<int, int, int>, std::vector<VertexId>> triple_vertices;
    std::map<VertexId, LbVertexInfo> info;

    std::vector<VertexId> x_set() const {
        std::vector<VertexId> out(k);
        for (int v = 1; v <= k; ++v) {
            out[v - 1] = v;
        }
        return out;
    }
};

namespace detail {

template <typename Fn>
void for_each_lb_triple(const LbParameters& p, Fn&& fn) {
    for (int i = 1; i <= p.k - p.C - 2; ++i) {
        for (int j = i; j <= std::min(i + p.A - 1, p.k - p.C - 2); ++j) {
            for (int t = j + 2; t <= std::min(j + 1 + p.B, p.k - p.C); ++t) {
                fn(i, j, t);
            }
        }
    }
}

}  // namespace detail

/// Anchors get ids 1..k; class vertices follow in lexicographic
/// (i, j, t, Y) order.
inline LbGraph build_lb_graph(const LbParameters& p) {
    if (p.A < 1 || p.B < 1 || p.C < 1 || p.k < p.C + 3) {
        throw std::invalid_argument("parameters do not describe a valid construction");
    }
    if (p.C > 20) {
        throw std::invalid_argument("construction too large: C is capped at 20");
    }
    long long total = p.k;
    detail::for_each_lb_triple(p, [&](int, int, int) { total += 1LL << p.C; });
    if (total > 2'000'000) {
        throw std::invalid_argument("construction too large: " + std::to_string(total) +
                                    " vertices");
    }

    LbGraph out;
    out.k = p.k;
    for (int v = 1; v <= p.k; ++v) {
        out.graph.add_vertex(v);
    }
    VertexId next = p.k + 1;
    detail::for_each_lb_triple(p, [&](int i, int j, int t) {
        std::vector<VertexId>& ids = out.triple_vertices[{i, j, t}];
        ids.reserve(std::size_t{1} << p.C);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p.C); ++mask) {
            out.graph.add_vertex(next);
            for (int a = i; a <= j; ++a) {
                out.graph.set_edge(next, a, EdgeKind::Black);
            }
            out.graph.set_edge(next, t, EdgeKind::Black);
            for (int b = 0; b < p.C; ++b) {
                if ((mask >> b) & 1u) {
                    out.graph.set_edge(next, t + 1 + b, EdgeKind::Black);
                }
            }
            ids.push_back(next);
            out.info[next] = LbVertexInfo{i, j, t, mask};
            ++next;
        }
    });
    return out;
}

struct LbSchedule {
    ContractionSequence seq;
    // steps_after_phase[l] = number of steps performed once phase l is
    // reached; [0] = 0 for the discrete start.
    std::vector<std::size_t> steps_after_phase;
};

/**
 * Emits the contraction sequence tracking the phase schedule.  During
 * phase transitions each class column is merged one row at a time:
 * row l shifts into row l+1, new classes join their (j, t) part, the
 * next anchor joins the prefix part, and the column about to fall out
 * of range retires to the trash part.  Cleanup contracts the anchor
 * suffix into the prefix, then the surviving parts, then the last two
 * vertices.
 */
inline LbSchedule build_lb_schedule(const LbParameters& p, const LbGraph& g) {
    const int k = p.k;
    const int c = p.C;
    LbSchedule out;
    out.steps_after_phase.push_back(0);
    std::map<std::pair<int, int>, VertexId> b_live;  // (j, t) -> live vertex of that part
    std::optional<VertexId> trash_live;
    auto push = [&out](VertexId survivor, VertexId merged) {
        out.seq.push_back({survivor, merged});
    };

    for (int ell = 0; ell <= p.last_phase() - 1; ++ell) {
        if (ell >= 1) {
            // shift row ell into row ell+1 on the columns that survive
            for (int t = ell + 3; t <= ell + 2 + p.B; ++t) {
                auto src = b_live.find({ell, t});
                if (src == b_live.end()) {
                    continue;
                }
                auto dst = b_live.find({ell + 1, t});
                if (dst != b_live.end()) {
                    push(dst->second, src->second);
                } else {
                    b_live[{ell + 1, t}] = src->second;
                }
                b_live.erase({ell, t});
            }
        }
        // absorb the classes whose interval starts at ell+1
        for (int j = ell + 1; j <= ell + p.A; ++j) {
            for (int t = j + 2; t <= std::min(j + 1 + p.B, k - c); ++t) {
                auto it = g.triple_vertices.find({ell + 1, j, t});
                if (it == g.triple_vertices.end()) {
                    continue;
                }
                const std::vector<VertexId>& ids = it->second;
                auto lv = b_live.find({j, t});
                std::size_t start = 0;
                VertexId live;
                if (lv == b_live.end()) {
                    live = ids.front();
                    b_live[{j, t}] = live;
                    start = 1;
                } else {
                    live = lv->second;
                }
                for (std::size_t z = start; z < ids.size(); ++z) {
                    push(live, ids[z]);
                }
            }
        }
        // the next anchor joins the prefix part
        if (ell >= 1) {
            push(1, ell + 1);
        }
        // the column falling out of range retires to the trash part
        auto ret = b_live.find({ell, ell + 2});
        if (ret != b_live.end()) {
            if (trash_live) {
                push(*trash_live, ret->second);
            } else {
                trash_live = ret->second;
            }
            b_live.erase({ell, ell + 2});
        }
        out.steps_after_phase.push_back(out.seq.size());
    }

    for (int m = k - c; m <= k; ++m) {
        push(1, m);
    }
    std::vector<VertexId> rest;
    if (trash_live) {
        rest.push_back(*trash_live);
    }
    for (const auto& [key, live] : b_live) {
        rest.push_back(live);
    }
    std::sort(rest.begin(), rest.end());
    for (std::size_t z = 1; z < rest.size(); ++z) {
        push(rest.front(), rest[z]);
    }
    if (!rest.empty()) {
        push(1, rest.front());
    }
    if (out.seq.size() + 1 != static_cast<std::size_t>(g.graph.vertex_count())) {
        throw std::logic_error("schedule length mismatch");
    }
    return out;
}

inline ContractionSequence build_lb_sequence(const LbParameters& p, const LbGraph& g) {
    return build_lb_schedule(p, g).seq;
}

struct LbScheduleState {
    int phase = 0;
    std::map<std::pair<int, int>, std::vector<VertexId>> b_parts;
    std::vector<VertexId> x0;     // anchor prefix part
    std::vector<VertexId> trash;  // retired classes
};

/// Closed-form contents of every named part after the given phase.
/// Vertices in no named part are still singletons.
inline LbScheduleState predicted_state(const LbParameters& p, const LbGraph& g, int phase) {
    if (phase < 0 || phase > p.last_phase()) {
        throw std::invalid_argument("phase out of range: " + std::to_string(phase));
    }
    LbScheduleState st;
    st.phase = phase;
    if (phase == 0) {
        return st;
    }
    for (int v = 1; v <= phase; ++v) {
        st.x0.push_back(v);
    }
    for (const auto& [key, ids] : g.triple_vertices) {
        const auto& [i, j, t] = key;
        if (t <= phase + 1) {
            st.trash.insert(st.trash.end(), ids.begin(), ids.end());
        } else if (i > phase) {
            continue;  // not introduced yet
        } else if (j <= phase) {
            auto& part = st.b_parts[{phase, t}];
            part.insert(part.end(), ids.begin(), ids.end());
        } else {
            auto& part = st.b_parts[{j, t}];
            part.insert(part.end(), ids.begin(), ids.end());
        }
    }
    std::sort(st.trash.begin(), st.trash.end());
    for (auto& [key, part] : st.b_parts) {
        std::sort(part.begin(), part.end());
    }
    return st;
}

/// The predicted state padded with singletons, in canonical partition
/// order, for comparison against a replayed prefix.
inline Partition predicted_partition(const LbParameters& p, const LbGraph& g, int phase) {
    const LbScheduleState st = predicted_state(p, g, phase);
    Partition parts;
    std::set<VertexId> placed;
    auto add_part = [&](const std::vector<VertexId>& part) {
        if (part.empty()) {
            return;
        }
        parts.push_back(part);
        placed.insert(part.begin(), part.end());
    };
    add_part(st.x0);
    add_part(st.trash);
    for (const auto& [key, part] : st.b_parts) {
        add_part(part);
    }
    for (VertexId v : g.graph.vertices()) {
        if (placed.count(v) == 0) {
            parts.push_back({v});
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                  return a.front() < b.front();
              });
    return parts;
}

struct LbReport {
    LbParameters params;
    long long total_vertices = 0;
    long long x_count = 0;
    long long non_x_count = 0;
    long long triple_count = 0;
    long long distinct_outside = 0;  // distinct anchor traces over non-anchor vertices
    bool x_traces_distinct = false;
    int replay_width = 0;
    long long m_cap = 0;
    bool width_within_m = false;
    std::optional<bool> m_within_target;          // set when a target width is known
    std::optional<long long> growth_denominator;  // d * 2^d * k when a target width is known
    std::optional<double> growth_ratio;
};

/// Builds the graph, replays its schedule, and reports the invariants
/// the construction promises.
inline LbReport verify_lb(const LbParameters& p) {
    const LbGraph g = build_lb_graph(p);
    const LbSchedule sched = build_lb_schedule(p, g);
    const SequenceReport rep = replay_and_verify(g.graph, sched.seq);
    if (!rep.valid) {
        throw std::logic_error("construction schedule failed to replay: " + rep.error);
    }
    LbReport out;
    out.params = p;
    out.total_vertices = g.graph.vertex_count();
    out.x_count = p.k;
    out.non_x_count = out.total_vertices - p.k;
    out.triple_count = static_cast<long long>(g.triple_vertices.size());
    std::vector<VertexId> outside;
    for (VertexId v : g.graph.vertices()) {
        if (v > p.k) {
            outside.push_back(v);
        }
    }
    if (!outside.empty()) {
        out.distinct_outside = distinct_x_neighbourhoods_among(g.graph, g.x_set(), outside).count;
    }
    out.x_traces_distinct = out.distinct_outside == out.non_x_count;
    out.replay_width = rep.width;
    out.m_cap = p.M();
    out.width_within_m = rep.width <= out.m_cap;
    if (p.d) {
        out.m_within_target = p.m_within_target();
        const int d = *p.d;
        out.growth_denominator = static_cast<long long>(d) * (1LL << d) * p.k;
        out.growth_ratio = out.growth_denominator == 0
                               ? 0.0
                               : static_cast<double>(out.distinct_outside) /
                                     static_cast<double>(*out.growth_denominator);
    }
    return out;
}

}  // namespace twinwidth
