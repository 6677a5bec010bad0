#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "sofk/grids.hpp"
#include "sofk/solver.hpp"
#include "sofk/strategies.hpp"

using namespace sofk;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const GameError& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;  // never reached in the tests below
}

GameHypergraph board_for(const std::string& name, int periods) {
    const auto p = pairing_period(name);
    GridSpec spec{p.family, p.w * periods + p.offset_w, p.h * periods + p.offset_h};
    if (spec.width < 2) spec.width = 2 * p.w;
    if (spec.height < 2) spec.height = 2 * p.h;
    return generate(spec);
}

// The 13 vertices of the star around (5, 2) on a rhombus board, with only
// the sets lying inside it.
GameHypergraph star_patch() {
    const auto hg = gen_rhombus({FamilyTag::Rhombus, 8, 5});
    const LatticeIndex idx(hg);
    std::set<VertexId> star{*idx.find(5, 2)};
    const int d[12][2] = {{1, 0},  {0, 1},  {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
                          {1, 1},  {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}};
    for (const auto& o : d) star.insert(*idx.find(5 + o[0], 2 + o[1]));
    const std::vector<VertexId> ids(star.begin(), star.end());
    std::map<VertexId, VertexId> re;
    std::vector<Coord> coords;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        re[ids[i]] = static_cast<VertexId>(i);
        coords.push_back(hg.coords()[ids[i]]);
    }
    std::vector<WinningSet> sets;
    for (const auto& e : hg.sets()) {
        bool inside = true;
        for (auto v : e.vertices) inside = inside && star.count(v) > 0;
        if (!inside) continue;
        WinningSet f = e;
        for (auto& v : f.vertices) v = re[v];
        sets.push_back(f);
    }
    return GameHypergraph(ids.size(), 4, std::move(sets), FamilyTag::Rhombus, std::move(coords));
}

}  // namespace

TEST(Patterns, EveryNamedPairingBuilds) {
    for (const auto& name : pairing_names()) {
        const auto hg = board_for(name, 2);
        const auto p = named_pairing(name, hg);
        EXPECT_EQ(p.vertex_count(), hg.vertex_count()) << name;
        EXPECT_GT(p.size(), 0u) << name;
    }
}

TEST(Patterns, PeriodMismatch) {
    const auto tri = gen_triangular({FamilyTag::Triangular, 5, 4});
    EXPECT_EQ(code_of([&] { pairing_triangular(tri, 1); }), ErrorCode::PeriodMismatch);
    const auto sq = gen_square({FamilyTag::Square, 9, 9});
    EXPECT_EQ(code_of([&] { pairing_square(sq, SquarePattern::FractalS3); }), ErrorCode::PeriodMismatch);
    const auto hex = gen_hexagonal({FamilyTag::Hexagonal, 6, 4});
    EXPECT_EQ(code_of([&] { pairing_hexagonal(hex, HexPattern::Flower); }), ErrorCode::PeriodMismatch);
    EXPECT_EQ(code_of([&] { named_pairing("tri-s1", sq); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { named_pairing("nope", sq); }), ErrorCode::InvalidArgument);
}

TEST(Patterns, FractalLevels) {
    const auto hg = gen_square({FamilyTag::Square, 10, 10});
    const auto lp = fractal_pairing(hg);
    EXPECT_EQ(lp.level.size(), lp.pairing.size());
    EXPECT_GE(lp.levels, 2);
    for (int l : lp.level) {
        EXPECT_GE(l, 1);
        EXPECT_LE(l, lp.levels + 1);
    }
}

TEST(Patterns, StructuralChecksPass) {
    for (const auto& c : structural_checks()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(G35, ScoresTwoAgainstOptimalBreaker) {
    const auto hg = gen_square({FamilyTag::Square, 5, 3});
    for (auto first : {Player::Maker, Player::Breaker}) {
        const auto st = strategy_g35(first);
        EXPECT_GE(best_breaker_vs_strategy(hg, Threshold(3, 4), *st, first).score, 2);
    }
}

TEST(G35, RandomBreakers) {
    const auto hg = gen_square({FamilyTag::Square, 5, 3});
    int worst = 99;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto maker = strategy_g35();
        RandomStrategy breaker(seed);
        const auto g = play_game(hg.vertex_count(), *maker, breaker, seed % 2 ? Player::Maker : Player::Breaker);
        worst = std::min(worst, final_score(g, hg, Threshold(3, 4)));
    }
    EXPECT_GE(worst, 2);
}

TEST(SquareTiling, TwoPerTile) {
    const auto hg = gen_square({FamilyTag::Square, 10, 6});
    const auto st = strategy_square_tiling_s3(hg);
    int worst = 99;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto maker = st->clone();
        RandomStrategy breaker(seed);
        const auto g = play_game(hg.vertex_count(), *maker, breaker, seed % 2 ? Player::Maker : Player::Breaker);
        worst = std::min(worst, final_score(g, hg, Threshold(3, 4)));
    }
    EXPECT_GE(worst, 8);
    auto maker = st->clone();
    auto breaker = potential_strategy(hg, {Player::Breaker, PotentialTarget::FullClaim});
    const auto g = play_game(hg.vertex_count(), *maker, *breaker, Player::Breaker);
    EXPECT_GE(final_score(g, hg, Threshold(3, 4)), 8);
    EXPECT_EQ(code_of([&] { strategy_square_tiling_s3(gen_square({FamilyTag::Square, 4, 4})); }),
              ErrorCode::DimensionTooSmall);
}

TEST(SixStar, SinglePatch) {
    const auto hg = star_patch();
    ASSERT_EQ(hg.vertex_count(), 13u);
    const auto st = strategy_rhombus_sixstar_s4(hg);
    EXPECT_EQ(best_breaker_vs_strategy(hg, Threshold(4, 4), *st, Player::Maker).score, 1);
    EXPECT_EQ(code_of([&] { strategy_rhombus_sixstar_s4(gen_square({FamilyTag::Square, 3, 3})); }),
              ErrorCode::InvalidArgument);
}

TEST(HexSubgrid, OneHexagonPerBlockAndCandidateInvariant) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 6, 4});
    const auto st = strategy_hex_subgrid_s4(hg);
    ASSERT_GT(st->block_count(), 0u);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto maker = st->clone();
        auto& hm = dynamic_cast<HexSubgridStrategy&>(*maker);
        RandomStrategy breaker(seed);
        const auto g = play_game(hg.vertex_count(), *maker, breaker, seed % 2 ? Player::Maker : Player::Breaker);
        EXPECT_GE(final_score(g, hg, Threshold(4, 6)), static_cast<int>(st->block_count()));
        for (const auto& d : hm.decisions()) {
            EXPECT_GT(d.candidates, d.breaker_claims);
            EXPECT_GE(d.free_candidates, 1);
            EXPECT_GE(d.step, 1);
            EXPECT_LE(d.step, 3);
        }
    }
}

TEST(Potential, ConfigErrors) {
    const auto hg = gen_cycle(6);
    EXPECT_EQ(code_of([&] { potential_strategy(hg, {Player::Maker, PotentialTarget::FullClaim}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { potential_strategy(hg, {Player::Breaker, PotentialTarget::Touch}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(initial_potential(hg), Rational(6, 4));
}

TEST(Potential, BreakerHoldsErdosSelfridge) {
    const auto hg = gen_triangular({FamilyTag::Triangular, 4, 4});
    const auto breaker = potential_strategy(hg, {Player::Breaker, PotentialTarget::FullClaim});
    const auto r = best_maker_vs_strategy(hg, Threshold(3, 3), *breaker, Player::Breaker);
    EXPECT_LE(Rational(r.score), initial_potential(hg));
}

TEST(Strategies, NeverPickClaimedVertices) {
    const auto sq = gen_square({FamilyTag::Square, 5, 3});
    const auto hex = gen_hexagonal({FamilyTag::Hexagonal, 4, 4});
    const auto rh = gen_rhombus({FamilyTag::Rhombus, 6, 6});
    const std::vector<std::pair<std::string, const GameHypergraph*>> cases = {
        {"g35", &sq},           {"square-tiling-s3", &sq},   {"rhombus-sixstar-s4", &rh}, {"hex-subgrid-s4", &hex},
        {"potential-breaker", &hex}, {"potential-maker", &rh}, {"lowest-id", &sq}};
    for (const auto& [name, hg] : cases) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto mine = named_strategy(name, *hg);
            RandomStrategy other(seed);
            const bool as_maker = name != "potential-breaker";
            GameState state(hg->vertex_count(), seed % 2 ? Player::Maker : Player::Breaker);
            while (!state.is_terminal()) {
                const bool my_turn = (state.to_move() == Player::Maker) == as_maker;
                const VertexId v = my_turn ? mine->next_move(state) : other.next_move(state);
                ASSERT_LT(v, hg->vertex_count()) << name;
                ASSERT_FALSE(state.is_claimed(v)) << name;
                const auto before = state;
                const Player who = state.to_move();
                state = apply_move(state, v);
                mine->observe(before, v, who);
                other.observe(before, v, who);
            }
        }
    }
}

TEST(Strategies, Names) {
    const auto hg = gen_square({FamilyTag::Square, 4, 4});
    EXPECT_EQ(code_of([&] { named_strategy("g35", hg); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { named_strategy("unknown", hg); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(strategy_names().size(), 7u);
}
