#include "twinwidth/trigraph.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"

using twinwidth::EdgeKind;
using twinwidth::KindFilter;
using twinwidth::Trigraph;
using twinwidth::VertexId;

namespace {

Trigraph path4() {
    return Trigraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
}

TEST(FromEdgeList, BuildsOrdinaryGraph) {
    const Trigraph g = Trigraph::from_edge_list(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_TRUE(g.is_ordinary());
    EXPECT_EQ(g.max_red_degree(), 0);
    EXPECT_EQ(g.edge_kind(1, 2), EdgeKind::Black);
    EXPECT_EQ(g.edge_kind(2, 1), EdgeKind::Black);
    EXPECT_EQ(g.edge_kind(1, 3), EdgeKind::Absent);
}

TEST(FromEdgeList, SingleVertexNoEdges) {
    const Trigraph g = Trigraph::from_edge_list(1, {});
    EXPECT_EQ(g.vertex_count(), 1);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(FromEdgeList, EmptyGraph) {
    const Trigraph g = Trigraph::from_edge_list(0, {});
    EXPECT_EQ(g.vertex_count(), 0);
    EXPECT_EQ(g.max_red_degree(), 0);
}

TEST(FromEdgeList, DistinctDiagnostics) {
    EXPECT_THROW(Trigraph::from_edge_list(-1, {}), std::invalid_argument);
    try {
        Trigraph::from_edge_list(3, {{1, 4}});
        FAIL() << "expected out-of-range rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    }
    try {
        Trigraph::from_edge_list(4, {{1, 2}, {1, 1}});
        FAIL() << "expected self-loop rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
    try {
        Trigraph::from_edge_list(3, {{1, 2}, {2, 1}});
        FAIL() << "expected duplicate rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    }
}

TEST(EdgeAccess, SymmetricAndFilterable) {
    Trigraph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_vertex(3);
    g.set_edge(1, 2, EdgeKind::Black);
    g.set_edge(1, 3, EdgeKind::Red);
    EXPECT_EQ(g.edge_kind(2, 1), EdgeKind::Black);
    EXPECT_EQ(g.edge_kind(3, 1), EdgeKind::Red);
    EXPECT_EQ(g.neighbours(1), (std::vector<VertexId>{2, 3}));
    EXPECT_EQ(g.neighbours(1, KindFilter::black_only()), (std::vector<VertexId>{2}));
    EXPECT_EQ(g.neighbours(1, KindFilter::red_only()), (std::vector<VertexId>{3}));
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_EQ(g.degree(1, KindFilter::black_only()), 1);
    EXPECT_EQ(g.degree(1, KindFilter::red_only()), 1);
    EXPECT_EQ(g.red_degree(1), 1);
    EXPECT_EQ(g.max_red_degree(), 1);
    EXPECT_FALSE(g.is_ordinary());
}

TEST(EdgeAccess, IsolatedVertexHasNoNeighbours) {
    Trigraph g;
    g.add_vertex(7);
    EXPECT_TRUE(g.neighbours(7).empty());
    EXPECT_TRUE(g.neighbours(7, KindFilter::red_only()).empty());
}

TEST(EdgeAccess, MissingVertexRejected) {
    const Trigraph g = Trigraph::from_edge_list(2, {});
    EXPECT_THROW(g.edge_kind(1, 9), std::invalid_argument);
    EXPECT_THROW(g.neighbours(9), std::invalid_argument);
    EXPECT_THROW(g.red_degree(9), std::invalid_argument);
    EXPECT_THROW((void)g.degree(9), std::invalid_argument);
}

TEST(Vertices, AddRemoveAndIds) {
    Trigraph g;
    g.add_vertex(2);
    g.add_vertex(5);
    EXPECT_THROW(g.add_vertex(2), std::invalid_argument);
    EXPECT_THROW(g.add_vertex(0), std::invalid_argument);
    EXPECT_THROW(g.add_vertex(-3), std::invalid_argument);
    g.set_edge(2, 5, EdgeKind::Red);
    g.remove_vertex(5);
    EXPECT_FALSE(g.has_vertex(5));
    EXPECT_EQ(g.red_degree(2), 0);
    EXPECT_EQ(g.max_red_degree(), 0);
    EXPECT_EQ(g.edge_count(), 0);
    EXPECT_THROW(g.remove_vertex(5), std::invalid_argument);
}

// The kind of the surviving pair wx must be a pure function of
// (kind(xu), kind(xv)): Black only for Black/Black, Absent only for
// Absent/Absent, Red otherwise.  All nine combinations, via gadgets.
TEST(Contract, NineCombinationTable) {
    const EdgeKind kinds[] = {EdgeKind::Absent, EdgeKind::Black, EdgeKind::Red};
    for (EdgeKind ku : kinds) {
        for (EdgeKind kv : kinds) {
            Trigraph g;
            g.add_vertex(1);  // u, survivor
            g.add_vertex(2);  // v, merged
            g.add_vertex(3);  // x, witness
            g.set_edge(1, 3, ku);
            g.set_edge(2, 3, kv);
            g.contract(1, 2);
            EdgeKind expected = EdgeKind::Red;
            if (ku == EdgeKind::Black && kv == EdgeKind::Black) {
                expected = EdgeKind::Black;
            } else if (ku == EdgeKind::Absent && kv == EdgeKind::Absent) {
                expected = EdgeKind::Absent;
            }
            EXPECT_EQ(g.edge_kind(1, 3), expected)
                << "kinds " << static_cast<int>(ku) << "/" << static_cast<int>(kv);
            EXPECT_EQ(g.vertex_count(), 2);
            EXPECT_FALSE(g.has_vertex(2));
        }
    }
}

TEST(Contract, SurvivorKeepsItsId) {
    Trigraph g = path4();
    g.contract(2, 1);
    EXPECT_TRUE(g.has_vertex(2));
    EXPECT_FALSE(g.has_vertex(1));
    EXPECT_EQ(g.vertex_count(), 3);
}

TEST(Contract, PathEndpointPairMakesOneRedEdge) {
    // contracting a-b in a-b-c-d leaves w -red- c -black- d
    Trigraph g = path4();
    g.contract(1, 2);
    EXPECT_EQ(g.edge_kind(1, 3), EdgeKind::Red);
    EXPECT_EQ(g.edge_kind(3, 4), EdgeKind::Black);
    EXPECT_EQ(g.red_degree(1), 1);
    EXPECT_EQ(g.red_degree(3), 1);
    EXPECT_EQ(g.max_red_degree(), 1);
}

TEST(Contract, TwinsProduceNoRed) {
    // C4: 1 and 3 are twins with N = {2,4}
    Trigraph c4 = Trigraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    c4.contract(1, 3);
    EXPECT_TRUE(c4.is_ordinary());
    EXPECT_EQ(c4.edge_kind(1, 2), EdgeKind::Black);
    EXPECT_EQ(c4.edge_kind(1, 4), EdgeKind::Black);
    EXPECT_EQ(c4.edge_kind(2, 4), EdgeKind::Absent);

    // K3: any pair are adjacent twins; the shared neighbour stays black
    Trigraph k3 = Trigraph::from_edge_list(3, {{1, 2}, {1, 3}, {2, 3}});
    k3.contract(1, 2);
    EXPECT_TRUE(k3.is_ordinary());
    EXPECT_EQ(k3.edge_kind(1, 3), EdgeKind::Black);
}

TEST(Contract, RedEdgeBetweenContractedPairIsConsumed) {
    Trigraph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.set_edge(1, 2, EdgeKind::Red);
    g.contract(1, 2);
    EXPECT_EQ(g.vertex_count(), 1);
    EXPECT_EQ(g.max_red_degree(), 0);
}

TEST(Contract, TwoVertexGraphCollapses) {
    Trigraph g = Trigraph::from_edge_list(2, {{1, 2}});
    g.contract(1, 2);
    EXPECT_EQ(g.vertex_count(), 1);
    EXPECT_TRUE(g.neighbours(1).empty());
}

TEST(Contract, ErrorsRejected) {
    Trigraph g = path4();
    EXPECT_THROW(g.contract(1, 1), std::invalid_argument);
    EXPECT_THROW(g.contract(1, 9), std::invalid_argument);
    EXPECT_THROW(g.contract(9, 1), std::invalid_argument);
}

TEST(Contract, UntouchedEdgesAreIdentical) {
    testsupport::RandomGraphs gen(20240601);
    for (int round = 0; round < 40; ++round) {
        Trigraph g = gen.next(8, 400);
        // mix in red edges by a couple of random contractions
        for (int c = 0; c < 2 && g.vertex_count() > 4; ++c) {
            const auto vs = g.vertices();
            const VertexId u = vs[gen.raw() % vs.size()];
            VertexId v = u;
            while (v == u) {
                v = vs[gen.raw() % vs.size()];
            }
            g.contract(u, v);
        }
        const auto vs = g.vertices();
        const VertexId u = vs[gen.raw() % vs.size()];
        VertexId v = u;
        while (v == u) {
            v = vs[gen.raw() % vs.size()];
        }
        const Trigraph before = g;
        const Trigraph after = g.contracted(u, v);
        for (VertexId a : before.vertices()) {
            for (VertexId b : before.vertices()) {
                if (a >= b || a == u || b == u || a == v || b == v) {
                    continue;
                }
                EXPECT_EQ(after.edge_kind(a, b), before.edge_kind(a, b));
            }
        }
        EXPECT_EQ(after.vertex_count(), before.vertex_count() - 1);
    }
}

TEST(Contract, MaxRedDegreeMatchesScan) {
    // drives the histogram bookkeeping through long contraction runs
    testsupport::RandomGraphs gen(987123);
    for (int round = 0; round < 25; ++round) {
        Trigraph g = gen.next(9, 350);
        while (g.vertex_count() > 1) {
            const auto vs = g.vertices();
            const VertexId u = vs[gen.raw() % vs.size()];
            VertexId v = u;
            while (v == u) {
                v = vs[gen.raw() % vs.size()];
            }
            g.contract(u, v);
            int scan = 0;
            for (VertexId x : g.vertices()) {
                scan = std::max(scan, g.red_degree(x));
            }
            ASSERT_EQ(g.max_red_degree(), scan);
        }
    }
}

TEST(Equality, ComparesAdjacencyOnly) {
    const Trigraph a = path4();
    Trigraph b = Trigraph::from_edge_list(4, {{3, 4}, {1, 2}, {2, 3}});
    EXPECT_TRUE(a == b);
    b.set_edge(1, 4, EdgeKind::Red);
    EXPECT_FALSE(a == b);
    b.set_edge(1, 4, EdgeKind::Absent);
    EXPECT_TRUE(a == b);
}

}  // namespace
