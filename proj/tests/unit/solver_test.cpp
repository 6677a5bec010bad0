#include <gtest/gtest.h>

#include <set>

#include <random>

#include "sofk/grids.hpp"
#include "sofk/pairing.hpp"
#include "sofk/solver.hpp"
#include "sofk/strategies.hpp"

using namespace sofk;

TEST(SolveExact, CycleFourteen) {
    EXPECT_EQ(solve_exact(gen_cycle(14), Threshold(2, 2), Player::Maker).score, 3);
}

TEST(SolveExact, SingleSquare) {
    const auto hg = gen_square({FamilyTag::Square, 2, 2});
    EXPECT_EQ(solve_exact(hg, Threshold(2, 4), Player::Maker).score, 1);
    EXPECT_EQ(solve_exact(hg, Threshold(4, 4), Player::Maker).score, 0);
}

TEST(SolveExact, ThreeByFiveBothStarters) {
    const auto hg = gen_square({FamilyTag::Square, 5, 3});
    EXPECT_GE(solve_exact(hg, Threshold(3, 4), Player::Maker).score, 2);
    EXPECT_GE(solve_exact(hg, Threshold(3, 4), Player::Breaker).score, 2);
}

TEST(SolveExact, AgreesWithPlainMinimax) {
    for (const auto& hg : {gen_cycle(6), gen_triangular({FamilyTag::Triangular, 2, 2}),
                           gen_square({FamilyTag::Square, 3, 3}), gen_hexagonal({FamilyTag::Hexagonal, 2, 1})})
        for (int s = 1; s <= static_cast<int>(hg.k()); ++s)
            for (auto first : {Player::Maker, Player::Breaker})
                EXPECT_EQ(solve_exact(hg, Threshold(s, hg.k()), first).score,
                          solve_plain_minimax(hg, Threshold(s, hg.k()), first).score);
}

TEST(SolveExact, ConfigurationsAgree) {
    // 9 vertices: small enough for the unpruned, unmemoised walk
    const auto hg = gen_triangular({FamilyTag::Triangular, 3, 3});
    const int want = solve_exact(hg, Threshold(2, 3), Player::Maker).score;
    for (bool ab : {false, true})
        for (bool memo : {false, true})
            for (auto ord : {MoveOrdering::Natural, MoveOrdering::DegreeDesc, MoveOrdering::PotentialDesc}) {
                SolveConfig cfg;
                cfg.use_alpha_beta = ab;
                cfg.use_memo = memo;
                cfg.move_ordering = ord;
                EXPECT_EQ(solve_exact(hg, Threshold(2, 3), Player::Maker, cfg).score, want);
            }
}

TEST(SolveExact, PrincipalVariationReplaysToScore) {
    const auto hg = gen_cycle(8);
    const auto r = solve_exact(hg, Threshold(2, 2), Player::Maker);
    ASSERT_TRUE(r.principal_variation);
    GameState st(hg.vertex_count(), Player::Maker);
    for (auto v : *r.principal_variation) st = apply_move(st, v);
    for (auto v : legal_moves(st, hg)) st = apply_move(st, v);
    EXPECT_EQ(final_score(st, hg, Threshold(2, 2)), r.score);
}

TEST(SolveExact, BudgetReportsInterval) {
    const auto hg = gen_square({FamilyTag::Square, 5, 3});
    SolveConfig cfg;
    cfg.node_budget = 50;
    try {
        solve_exact(hg, Threshold(3, 4), Player::Maker, cfg);
        FAIL() << "expected budget exhaustion";
    } catch (const BudgetExhausted& e) {
        EXPECT_LE(e.lower, e.upper);
        EXPECT_LE(e.lower, 2);
    }
}

TEST(SolveExact, CapacityLimit) {
    const auto hg = gen_square({FamilyTag::Square, 9, 8});
    try {
        solve_exact(hg, Threshold(2, 4), Player::Maker);
        FAIL();
    } catch (const GameError& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
    }
}

TEST(PlainMinimax, SmallCases) {
    EXPECT_EQ(solve_plain_minimax(gen_square({FamilyTag::Square, 2, 2}), Threshold(1, 4), Player::Maker).score, 1);
    EXPECT_EQ(solve_plain_minimax(gen_cycle(6), Threshold(2, 2), Player::Maker).score,
              solve_exact(gen_cycle(6), Threshold(2, 2), Player::Maker).score);
}

TEST(VsStrategy, LowestIdOnSquare) {
    const auto hg = gen_square({FamilyTag::Square, 2, 2});
    EXPECT_EQ(best_breaker_vs_strategy(hg, Threshold(2, 4), LowestIdStrategy(), Player::Maker).score, 1);
}

TEST(VsStrategy, PairingPolicyNeverBeatsOptimum) {
    const auto hg = gen_cycle(14);
    std::vector<Pairing::Pair> pairs;
    for (VertexId v = 0; v < 14; v += 2) pairs.push_back({v, v + 1});
    const PairingStrategy maker(Pairing(14, pairs));
    EXPECT_LE(best_breaker_vs_strategy(hg, Threshold(2, 2), maker, Player::Maker).score, 3);
}

TEST(VsStrategy, OptimalMakerAgainstFixedBreaker) {
    const auto hg = gen_cycle(6);
    const int vs_lowest = best_maker_vs_strategy(hg, Threshold(2, 2), LowestIdStrategy(), Player::Maker).score;
    EXPECT_GE(vs_lowest, solve_exact(hg, Threshold(2, 2), Player::Maker).score);
}

TEST(SolvePosition, MatchesSolveAtRoot) {
    const auto hg = gen_cycle(10);
    const auto r = solve_position(hg, Threshold(2, 2), GameState(10, Player::Maker));
    EXPECT_EQ(r.score, solve_exact(hg, Threshold(2, 2), Player::Maker).score);
    ASSERT_TRUE(r.best_move);
    const auto after = solve_position(hg, Threshold(2, 2), apply_move(GameState(10), *r.best_move));
    EXPECT_EQ(after.score, r.score);
}

// Monotone in s and never above n.
TEST(SolveExact, RandomHypergraphsMonotone) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 4 + rng() % 6, k = 2 + rng() % 2, m = 2 + rng() % 5;
        std::set<std::vector<VertexId>> distinct;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<VertexId> all(n);
            for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexId>(v);
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(k);
            std::sort(all.begin(), all.end());
            distinct.insert(all);
        }
        std::vector<WinningSet> sets;
        for (const auto& e : distinct) sets.push_back({e});
        const GameHypergraph hg(n, k, sets);
        int prev = static_cast<int>(sets.size());
        for (int s = 1; s <= static_cast<int>(k); ++s) {
            const int v = solve_exact(hg, Threshold(s, k), Player::Maker).score;
            EXPECT_LE(v, prev);
            prev = v;
        }
    }
}
