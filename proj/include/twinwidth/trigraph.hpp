#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twinwidth {

using VertexId = int;

enum class EdgeKind : unsigned char { Absent = 0, Black = 1, Red = 2 };

/// Selects which edge kinds a neighbourhood or degree query should see.
struct KindFilter {
    bool black = true;
    bool red = true;

    static constexpr KindFilter black_only() { return {true, false}; }
    static constexpr KindFilter red_only() { return {false, true}; }
};

/**
 * A graph whose edges are coloured black (definite) or red (error).
 * An ordinary graph is the special case with no red edges.
 *
 * Contracting vertices u and v merges v into u: common black
 * neighbours stay black, a pair of absences stays absent, and every
 * disagreement becomes red.  Edges not incident to u or v are
 * untouched.  The merged vertex keeps u's id, and ids are never
 * reused, so a vertex keeps its identity across a whole sequence of
 * contractions.
 */
class Trigraph {
public:
    Trigraph() = default;

    /// Builds an ordinary graph on vertices 1..n from undirected edges.
    /// Rejects out-of-range endpoints, self-loops, and duplicates.
    static Trigraph from_edge_list(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        if (n < 0) {
            throw std::invalid_argument("vertex count must be nonnegative");
        }
        Trigraph g;
        for (VertexId v = 1; v <= n; ++v) {
            g.add_vertex(v);
        }
        for (const auto& [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n) {
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                            " " + std::to_string(v));
            }
            if (u == v) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            }
            if (g.edge_kind(u, v) != EdgeKind::Absent) {
                throw std::invalid_argument("duplicate edge: " + std::to_string(u) + " " +
                                            std::to_string(v));
            }
            g.set_edge(u, v, EdgeKind::Black);
        }
        return g;
    }

    void add_vertex(VertexId v) {
        if (v <= 0) {
            throw std::invalid_argument("vertex ids must be positive");
        }
        if (!verts_.emplace(v, VertexState{}).second) {
            throw std::invalid_argument("vertex already present: " + std::to_string(v));
        }
        bump_hist(0, +1);
    }

    /// Detaches all incident edges, then removes the vertex.
    void remove_vertex(VertexId v) {
        VertexState& st = state(v);
        std::vector<VertexId> nbrs;
        nbrs.reserve(st.nbrs.size());
        for (const auto& [x, kind] : st.nbrs) {
            nbrs.push_back(x);
        }
        for (VertexId x : nbrs) {
            set_edge(v, x, EdgeKind::Absent);
        }
        bump_hist(0, -1);
        verts_.erase(v);
    }

    /// Sets the relation between two existing vertices; Absent deletes.
    void set_edge(VertexId u, VertexId v, EdgeKind kind) {
        if (u == v) {
            throw std::invalid_argument("self-loops are not representable");
        }
        VertexState& su = state(u);
        VertexState& sv = state(v);
        EdgeKind old = EdgeKind::Absent;
        auto it = su.nbrs.find(v);
        if (it != su.nbrs.end()) {
            old = it->second;
        }
        if (old == kind) {
            return;
        }
        if (kind == EdgeKind::Absent) {
            su.nbrs.erase(v);
            sv.nbrs.erase(u);
            --edge_count_;
        } else {
            su.nbrs[v] = kind;
            sv.nbrs[u] = kind;
            if (old == EdgeKind::Absent) {
                ++edge_count_;
            }
        }
        if (old == EdgeKind::Red && kind != EdgeKind::Red) {
            set_red_degree(su, su.red_deg - 1);
            set_red_degree(sv, sv.red_deg - 1);
        } else if (old != EdgeKind::Red && kind == EdgeKind::Red) {
            set_red_degree(su, su.red_deg + 1);
            set_red_degree(sv, sv.red_deg + 1);
        }
    }

    EdgeKind edge_kind(VertexId u, VertexId v) const {
        if (u == v) {
            throw std::invalid_argument("self-loops are not representable");
        }
        const VertexState& su = state(u);
        state(v);
        auto it = su.nbrs.find(v);
        return it == su.nbrs.end() ? EdgeKind::Absent : it->second;
    }

    bool has_vertex(VertexId v) const { return verts_.count(v) > 0; }

    int vertex_count() const { return static_cast<int>(verts_.size()); }

    long long edge_count() const { return edge_count_; }

    /// All vertex ids in ascending order.
    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(verts_.size());
        for (const auto& [v, st] : verts_) {
            out.push_back(v);
        }
        return out;
    }

    /// Neighbours of v matching the filter, in ascending id order.
    std::vector<VertexId> neighbours(VertexId v, KindFilter filter = {}) const {
        const VertexState& st = state(v);
        std::vector<VertexId> out;
        for (const auto& [x, kind] : st.nbrs) {
            if ((kind == EdgeKind::Black && filter.black) || (kind == EdgeKind::Red && filter.red)) {
                out.push_back(x);
            }
        }
        return out;
    }

    int degree(VertexId v, KindFilter filter = {}) const {
        if (filter.black && filter.red) {
            return static_cast<int>(state(v).nbrs.size());
        }
        if (filter.red && !filter.black) {
            return state(v).red_deg;
        }
        if (filter.black && !filter.red) {
            return static_cast<int>(state(v).nbrs.size()) - state(v).red_deg;
        }
        state(v);
        return 0;
    }

    int red_degree(VertexId v) const { return state(v).red_deg; }

    /// Maximum red degree over all vertices; 0 for the empty graph.
    int max_red_degree() const { return max_red_; }

    bool is_ordinary() const { return max_red_ == 0; }

    /// Merges `merged` into `survivor` in place.
    void contract(VertexId survivor, VertexId merged) {
        if (survivor == merged) {
            throw std::invalid_argument("cannot contract a vertex with itself");
        }
        const VertexState& ss = state(survivor);
        const VertexState& sm = state(merged);
        std::set<VertexId> affected;
        for (const auto& [x, kind] : ss.nbrs) {
            if (x != merged) {
                affected.insert(x);
            }
        }
        for (const auto& [x, kind] : sm.nbrs) {
            if (x != survivor) {
                affected.insert(x);
            }
        }
        for (VertexId x : affected) {
            set_edge(survivor, x, combine(edge_kind(survivor, x), edge_kind(merged, x)));
        }
        set_edge(survivor, merged, EdgeKind::Absent);
        remove_vertex(merged);
    }

    /// Returns a copy with `merged` contracted into `survivor`.
    Trigraph contracted(VertexId survivor, VertexId merged) const {
        Trigraph copy = *this;
        copy.contract(survivor, merged);
        return copy;
    }

    friend bool operator==(const Trigraph& a, const Trigraph& b) {
        if (a.verts_.size() != b.verts_.size()) {
            return false;
        }
        auto ia = a.verts_.begin();
        auto ib = b.verts_.begin();
        for (; ia != a.verts_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || ia->second.nbrs != ib->second.nbrs) {
                return false;
            }
        }
        return true;
    }

private:
    struct VertexState {
        std::map<VertexId, EdgeKind> nbrs;
        int red_deg = 0;
    };

    static constexpr EdgeKind combine(EdgeKind a, EdgeKind b) {
        if (a == EdgeKind::Black && b == EdgeKind::Black) {
            return EdgeKind::Black;
        }
        if (a == EdgeKind::Absent && b == EdgeKind::Absent) {
            return EdgeKind::Absent;
        }
        return EdgeKind::Red;
    }

    VertexState& state(VertexId v) {
        auto it = verts_.find(v);
        if (it == verts_.end()) {
            throw std::invalid_argument("no such vertex: " + std::to_string(v));
        }
        return it->second;
    }

    const VertexState& state(VertexId v) const {
        auto it = verts_.find(v);
        if (it == verts_.end()) {
            throw std::invalid_argument("no such vertex: " + std::to_string(v));
        }
        return it->second;
    }

    void set_red_degree(VertexState& st, int deg) {
        bump_hist(st.red_deg, -1);
        st.red_deg = deg;
        bump_hist(deg, +1);
    }

    // red_hist_[d] counts vertices of red degree d, so the maximum is
    // available in O(1) amortized instead of a scan per query.
    void bump_hist(int deg, int delta) {
        if (static_cast<std::size_t>(deg) >= red_hist_.size()) {
            red_hist_.resize(deg + 1, 0);
        }
        red_hist_[deg] += delta;
        if (delta > 0 && deg > max_red_) {
            max_red_ = deg;
        }
        while (max_red_ > 0 && red_hist_[max_red_] == 0) {
            --max_red_;
        }
    }

    std::map<VertexId, VertexState> verts_;
    std::vector<int> red_hist_;
    int max_red_ = 0;
    long long edge_count_ = 0;
};

}  // namespace twinwidth
