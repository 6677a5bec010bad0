#include <gtest/gtest.h>

#include <cmath>

#include "sofk/grids.hpp"
#include "sofk/pairing.hpp"
#include "sofk/solver.hpp"
#include "sofk/strategies.hpp"

using namespace sofk;

namespace {

const GameHypergraph& square() {
    static const auto hg = gen_square({FamilyTag::Square, 2, 2});
    return hg;
}

// 0 1 / 2 3: the diagonals are (0,3) and (1,2).
Pairing diagonals() { return Pairing(4, {{0, 3}, {1, 2}}); }

}  // namespace

TEST(PairingType, NormalisesAndValidates) {
    const Pairing p(6, {{4, 1}, {0, 5}});
    EXPECT_EQ(p.pairs(), (std::vector<Pairing::Pair>{{0, 5}, {1, 4}}));
    EXPECT_EQ(p.partner(4), 1u);
    EXPECT_FALSE(p.partner(2).has_value());
    EXPECT_THROW(Pairing(4, {{0, 1}, {1, 2}}), GameError);
    EXPECT_THROW(Pairing(4, {{0, 0}}), GameError);
    EXPECT_THROW(Pairing(4, {{0, 4}}), GameError);
}

TEST(MDistribution, EmptyPairing) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 3, 3});
    const auto d = m_distribution(hg, Pairing(hg.vertex_count()));
    EXPECT_EQ(d.fraction(3), Rational(1));
}

TEST(MDistribution, HorizontalHexagons) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 6, 6});
    const auto d = m_distribution(hg, pairing_hexagonal(hg, HexPattern::Horizontal));
    EXPECT_EQ(d.interior_fraction(2), Rational(1));
}

TEST(MDistribution, FlowerHexagons) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 8, 6});
    const auto d = m_distribution(hg, pairing_hexagonal(hg, HexPattern::Flower));
    EXPECT_EQ(d.interior_fraction(0), Rational(2, 3));
    EXPECT_EQ(d.interior_fraction(6), Rational(1, 3));
}

TEST(Assignment, SquareDiagonals) {
    EXPECT_EQ(assignment_best_response(square(), 2, diagonals()).score, 1);
    EXPECT_EQ(assignment_best_response(square(), 3, diagonals()).score, 0);
}

TEST(Assignment, FourCycle) {
    const auto hg = gen_cycle(4);
    EXPECT_EQ(assignment_best_response(hg, 2, Pairing(4, {{0, 2}, {1, 3}})).score, 1);
    EXPECT_EQ(assignment_best_response(hg, 2, Pairing(4, {{0, 1}, {2, 3}})).score, 0);
}

TEST(Assignment, OneEndpointPerPairUnpairedToBreaker) {
    const auto hg = gen_cycle(6);
    const Pairing p(6, {{0, 3}, {1, 4}});
    const auto r = assignment_best_response(hg, 1, p);
    EXPECT_EQ(r.chosen.size(), 2u);
    EXPECT_EQ(r.maker.count(), 2u);
    EXPECT_FALSE(r.maker.test(2));
    EXPECT_FALSE(r.maker.test(5));
}

TEST(Assignment, HeuristicIsAnUpperBoundOfExact) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 6, 6});
    const auto p = pairing_triangular(hg, 1);
    AssignmentOptions opts;
    const int exact = assignment_best_response(hg, 1, p, opts).score;
    opts.mode = AssignmentMode::Heuristic;
    opts.seed = 5;
    const auto h = assignment_best_response(hg, 1, p, opts);
    EXPECT_FALSE(h.exact);
    EXPECT_GE(h.score, exact);
    EXPECT_EQ(h.score, assignment_best_response(hg, 1, p, opts).score);  // seeded
}

TEST(Assignment, ExactBudget) {
    const auto hg = gen_square({FamilyTag::Square, 10, 10});
    try {
        assignment_best_response(hg, 2, pairing_square(hg, SquarePattern::S2));
        FAIL();
    } catch (const GameError& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
    }
}

TEST(Search, CycleFourteen) {
    const auto r = exhaustive_pairing_search(gen_cycle(14), 2, PairingScope::Perfect);
    EXPECT_EQ(r.best_score, 2);
    EXPECT_EQ(r.witness.size(), 7u);
    EXPECT_EQ(assignment_best_response(gen_cycle(14), 2, r.witness).score, 2);
}

TEST(Search, FourCycleDiagonal) {
    const auto r = exhaustive_pairing_search(gen_cycle(4), 2, PairingScope::Perfect);
    EXPECT_EQ(r.best_score, 1);
    EXPECT_EQ(r.witness.pairs(), (std::vector<Pairing::Pair>{{0, 2}, {1, 3}}));
    EXPECT_EQ(r.pairings_examined, 3u);
}

TEST(Search, SquareNeverFour) {
    EXPECT_EQ(exhaustive_pairing_search(square(), 4, PairingScope::All).best_score, 0);
}

TEST(Search, ThreadsDoNotChangeResult) {
    const auto hg = gen_cycle(10);
    const auto a = exhaustive_pairing_search(hg, 2, PairingScope::All, 1);
    const auto b = exhaustive_pairing_search(hg, 2, PairingScope::All, 3);
    EXPECT_EQ(a.best_score, b.best_score);
    EXPECT_EQ(a.witness.pairs(), b.witness.pairs());
}

// Observation: a pairing value never exceeds the game value.
TEST(Search, BelowGameValue) {
    for (int n = 4; n <= 10; ++n) {
        const auto hg = gen_cycle(n);
        EXPECT_LE(exhaustive_pairing_search(hg, 2, PairingScope::All).best_score,
                  solve_exact(hg, Threshold(2, 2), Player::Maker).score);
    }
}

TEST(Playout, FourCycleDiagonals) {
    const auto hg = gen_cycle(4);
    EXPECT_GE(pairing_playout_value(hg, 2, Pairing(4, {{0, 2}, {1, 3}}), Player::Maker), 1);
}

TEST(Playout, SquareHorizontalEdges) {
    EXPECT_EQ(pairing_playout_value(square(), 2, Pairing(4, {{0, 1}, {2, 3}}), Player::Maker), 1);
}

TEST(Playout, EmptyPairingIsLowestId) {
    const auto hg = gen_cycle(7);
    EXPECT_EQ(pairing_playout_value(hg, 2, Pairing(7), Player::Maker),
              best_breaker_vs_strategy(hg, Threshold(2, 2), LowestIdStrategy(), Player::Maker).score);
}

TEST(MonteCarlo, SeededAndThreadIndependent) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 5, 4});
    const auto p = pairing_hexagonal(hg, HexPattern::Flower);
    const auto a = monte_carlo_expectation(hg, 3, p, 2000, 7, 1);
    const auto b = monte_carlo_expectation(hg, 3, p, 2000, 7, 3);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
}

TEST(MonteCarlo, MatchesExactExpectation) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 5, 4});
    const auto p = pairing_hexagonal(hg, HexPattern::Flower);
    const auto r = monte_carlo_expectation(hg, 3, p, 10000, 7);
    const double exact = static_cast<double>(exact_expectation(hg, 3, p));
    EXPECT_EQ(exact_expectation(hg, 3, p), Rational(85, 96) * r.n_interior);
    EXPECT_LE(std::abs(r.mean - exact), 3 * r.std_error);
}

TEST(MonteCarlo, EveryInteriorSetPaired) {
    const auto hg = gen_square({FamilyTag::Square, 6, 6});
    const auto r = monte_carlo_expectation(hg, 1, pairing_square(hg, SquarePattern::CheckerboardS1), 200, 1);
    EXPECT_EQ(r.mean, static_cast<double>(r.n_interior));
}

TEST(PairingText, RoundTrip) {
    const Pairing p(8, {{0, 7}, {2, 3}});
    EXPECT_EQ(parse_pairing(format_pairing(p), 8).pairs(), p.pairs());
    EXPECT_EQ(parse_pairing("# c\n1 2  # trailing\n\n", 3).pairs(), (std::vector<Pairing::Pair>{{1, 2}}));
    EXPECT_THROW(parse_pairing("1 x\n", 3), GameError);
    EXPECT_THROW(parse_pairing("1 2 3\n", 4), GameError);
}
