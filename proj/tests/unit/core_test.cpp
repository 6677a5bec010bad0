#include <gtest/gtest.h>

#include "sofk/core.hpp"
#include "sofk/grids.hpp"

using namespace sofk;

namespace {

GameHypergraph single_square() { return gen_square({FamilyTag::Square, 2, 2}); }

GameState with(std::size_t n, std::vector<VertexId> maker, std::vector<VertexId> breaker, Player to_move) {
    VertexSet m(n), b(n);
    for (auto v : maker) m.set(v);
    for (auto v : breaker) b.set(v);
    return GameState(m, b, to_move);
}

}  // namespace

TEST(LegalMoves, EmptyBoardListsEverything) {
    const auto hg = single_square();
    EXPECT_EQ(legal_moves(GameState(4), hg), (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(LegalMoves, FullBoardHasNone) {
    const auto hg = single_square();
    EXPECT_TRUE(legal_moves(with(4, {0, 1}, {2, 3}, Player::Maker), hg).empty());
}

TEST(LegalMoves, SkipsClaimed) {
    const auto hg = single_square();
    EXPECT_EQ(legal_moves(with(4, {0}, {2}, Player::Maker), hg), (std::vector<VertexId>{1, 3}));
}

TEST(ApplyMove, ClaimsForSideToMove) {
    const auto next = apply_move(GameState(4), 3);
    EXPECT_TRUE(next.maker().test(3));
    EXPECT_EQ(next.to_move(), Player::Breaker);
}

TEST(ApplyMove, RejectsClaimedVertex) {
    const auto once = apply_move(GameState(4), 3);
    try {
        apply_move(once, 3);
        FAIL() << "expected an error";
    } catch (const GameError& e) {
        EXPECT_EQ(e.code(), ErrorCode::MoveOnClaimedVertex);
    }
}

TEST(ApplyMove, RejectsOutOfRange) {
    try {
        apply_move(GameState(4), 4);
        FAIL() << "expected an error";
    } catch (const GameError& e) {
        EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
    }
}

TEST(ApplyMove, TwoVertexAlternation) {
    auto st = apply_move(apply_move(GameState(2), 0), 1);
    EXPECT_TRUE(st.is_terminal());
    EXPECT_EQ(st.maker().count(), 1u);
    EXPECT_EQ(st.breaker().count(), 1u);
}

TEST(FinalScore, AdjacentCorners) {
    const auto hg = single_square();
    const auto st = with(4, {0, 1}, {2, 3}, Player::Maker);
    EXPECT_EQ(final_score(st, hg, Threshold(2, 4)), 1);
    EXPECT_EQ(final_score(st, hg, Threshold(3, 4)), 0);
}

TEST(FinalScore, MakerHoldsAll) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 3, 3});
    const auto st = with(9, {0, 1, 2, 3, 4, 5, 6, 7, 8}, {}, Player::Maker);
    EXPECT_EQ(final_score(st, hg, Threshold(3, 3)), static_cast<int>(hg.set_count()));
}

TEST(FinalScore, RejectsUnfinishedGame) {
    const auto hg = single_square();
    try {
        final_score(GameState(4), hg, Threshold(1, 4));
        FAIL() << "expected an error";
    } catch (const GameError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonTerminalState);
    }
}

TEST(PartialGoodCount, TerminalMatchesFinalScore) {
    const auto hg = single_square();
    const auto st = with(4, {0, 1}, {2, 3}, Player::Maker);
    EXPECT_EQ(partial_good_count(st, hg, Threshold(2, 4)), (GoodCount{1, 0}));
}

TEST(PartialGoodCount, EmptyState) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 3, 3});
    EXPECT_EQ(partial_good_count(GameState(9), hg, Threshold(2, 3)),
              (GoodCount{0, static_cast<int>(hg.set_count())}));
}

TEST(PartialGoodCount, DeadTriangle) {
    const GameHypergraph tri(3, 3, {WinningSet{{0, 1, 2}}});
    EXPECT_EQ(partial_good_count(with(3, {0}, {1, 2}, Player::Maker), tri, Threshold(2, 3)), (GoodCount{0, 0}));
}

TEST(Threshold, RejectsOutOfRange) {
    EXPECT_THROW(Threshold(0, 3), GameError);
    EXPECT_THROW(Threshold(4, 3), GameError);
    EXPECT_EQ(Threshold(3, 3).value(), 3);
}

TEST(Hypergraph, RejectsWrongSetSize) {
    EXPECT_THROW(GameHypergraph(3, 3, {WinningSet{{0, 1}}}), GameError);
}

TEST(Hypergraph, RejectsRepeatedVertex) {
    EXPECT_THROW(GameHypergraph(3, 2, {WinningSet{{1, 1}}}), GameError);
}

TEST(Hypergraph, RejectsVertexOutOfRange) {
    EXPECT_THROW(GameHypergraph(3, 2, {WinningSet{{1, 3}}}), GameError);
}

TEST(VertexSet, BasicOperations) {
    VertexSet s(70);
    s.set(3);
    s.set(69);
    EXPECT_EQ(s.count(), 2u);
    EXPECT_EQ(s.members(), (std::vector<VertexId>{3, 69}));
    s.reset(3);
    EXPECT_FALSE(s.test(3));
}
