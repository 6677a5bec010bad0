#include <gtest/gtest.h>

#include <set>

#include "sofk/grids.hpp"

using namespace sofk;

namespace {

std::size_t shared(const WinningSet& a, const WinningSet& b) {
    std::size_t n = 0;
    for (auto v : a.vertices)
        for (auto w : b.vertices) n += v == w;
    return n;
}

}  // namespace

TEST(Triangular, SmallestBoard) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 2, 2});
    EXPECT_EQ(hg.vertex_count(), 4u);
    ASSERT_EQ(hg.set_count(), 2u);
    EXPECT_EQ(shared(hg.set(0), hg.set(1)), 2u);
}

TEST(Triangular, CountFormula) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 10, 10});
    EXPECT_EQ(hg.set_count(), 162u);
    EXPECT_EQ(hg.k(), 3u);
    EXPECT_EQ(hg.max_degree(), 6u);
}

TEST(Square, ThreeByFive) {
    const auto hg = gen_square({FamilyTag::Square, 5, 3});
    EXPECT_EQ(hg.vertex_count(), 15u);
    EXPECT_EQ(hg.set_count(), 8u);
}

TEST(Square, SingleSquare) {
    const auto hg = gen_square({FamilyTag::Square, 2, 2});
    EXPECT_EQ(hg.vertex_count(), 4u);
    EXPECT_EQ(hg.set_count(), 1u);
}

TEST(Square, InteriorDegree) { EXPECT_EQ(uniformity_stats(gen_square({FamilyTag::Square, 10, 10})).ell_interior, 4u); }

TEST(Rhombus, SingleRhombus) {
    const auto hg = gen_rhombus({FamilyTag::Rhombus, 2, 2});
    EXPECT_EQ(hg.set_count(), 1u);
    EXPECT_EQ(hg.k(), 4u);
}

TEST(Rhombus, InteriorDegree) {
    EXPECT_EQ(uniformity_stats(gen_rhombus({FamilyTag::Rhombus, 12, 12})).ell_interior, 12u);
}

// Enumerated count; the closed form in circulation undercounts.
TEST(Rhombus, CountByEnumeration) {
    for (int w = 2; w <= 7; ++w)
        for (int h = 2; h <= 7; ++h)
            EXPECT_EQ(gen_rhombus({FamilyTag::Rhombus, w, h}).set_count(),
                      static_cast<std::size_t>(3 * w * h - 4 * w - 4 * h + 5))
                << w << "x" << h;
}

TEST(Hexagonal, SingleCell) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 1, 1});
    EXPECT_EQ(hg.vertex_count(), 6u);
    EXPECT_EQ(hg.set_count(), 1u);
}

TEST(Hexagonal, NeighbouringCellsShareAnEdge) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 2, 2});
    ASSERT_EQ(hg.set_count(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const auto n = shared(hg.set(i), hg.set(j));
            EXPECT_TRUE(n == 0 || n == 2) << i << "," << j;
        }
}

TEST(Hexagonal, InteriorStats) {
    const auto st = uniformity_stats(gen_hexagonal({FamilyTag::Hexagonal, 6, 6}));
    EXPECT_EQ(st.ell_interior, 3u);
    EXPECT_EQ(st.q_interior, 2u);
}

TEST(Cycle, Fourteen) {
    const auto hg = gen_cycle(14);
    EXPECT_EQ(hg.vertex_count(), 14u);
    EXPECT_EQ(hg.set_count(), 14u);
    for (VertexId v = 0; v < 14; ++v) EXPECT_EQ(hg.degree(v), 2u);
    EXPECT_EQ(hg.interior_count(), 14u);
}

TEST(Cycle, Triangle) { EXPECT_EQ(gen_cycle(3).set_count(), 3u); }

TEST(UniformityStats, TriangularAndSquare) {
    const auto tri = uniformity_stats(gen_triangular({FamilyTag::Triangular, 12, 12}));
    EXPECT_EQ(tri.ell_interior, 6u);
    EXPECT_EQ(tri.q_interior, 2u);
    const auto sq = uniformity_stats(gen_square({FamilyTag::Square, 12, 12}));
    EXPECT_EQ(sq.ell_interior, 4u);
    // an adjacent vertex pair lies in two unit squares
    EXPECT_EQ(sq.q_interior, 2u);
}

TEST(ClassifyInterior, SquareBoards) {
    EXPECT_EQ(gen_square({FamilyTag::Square, 3, 3}).interior_count(), 0u);
    EXPECT_EQ(gen_square({FamilyTag::Square, 4, 4}).interior_count(), 1u);
}

TEST(Generators, RejectTooSmall) {
    for (auto f : {FamilyTag::Triangular, FamilyTag::Square, FamilyTag::Rhombus}) {
        try {
            generate({f, 1, 5});
            FAIL() << to_string(f);
        } catch (const GameError& e) {
            EXPECT_EQ(e.code(), ErrorCode::DimensionTooSmall);
        }
    }
    EXPECT_THROW(gen_hexagonal({FamilyTag::Hexagonal, 0, 1}), GameError);
    EXPECT_THROW(gen_cycle(2), GameError);
}

TEST(Generators, Deterministic) {
    EXPECT_EQ(gen_hexagonal({FamilyTag::Hexagonal, 3, 3}), gen_hexagonal({FamilyTag::Hexagonal, 3, 3}));
}

TEST(LatticeIndex, RoundTrip) {
    const auto hg = gen_rhombus({FamilyTag::Rhombus, 4, 3});
    const LatticeIndex idx(hg);
    for (VertexId v = 0; v < hg.vertex_count(); ++v) EXPECT_EQ(idx.find(idx.point(v)), v);
    EXPECT_FALSE(idx.find(-1, 0).has_value());
}

TEST(Honeycomb, EveryVertexHasThreeNeighbours) {
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            const auto nb = honeycomb_neighbors({x, y});
            ASSERT_EQ(nb.size(), 3u);
            for (auto n : nb) {
                const auto back = honeycomb_neighbors(n);
                EXPECT_NE(std::find(back.begin(), back.end(), LatticePoint{x, y}), back.end());
            }
        }
}

TEST(Honeycomb, CellRoundTrip) {
    for (int q = -3; q <= 3; ++q)
        for (int r = -3; r <= 3; ++r) EXPECT_EQ(hex_cell_of(hex_corners({q, r})), (HexCell{q, r}));
}
