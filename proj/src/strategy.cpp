#include "sofk/strategy.hpp"

namespace sofk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

VertexId lowest_unclaimed(const GameState& state) {
    for (VertexId v = 0; v < state.vertex_count(); ++v)
        if (!state.is_claimed(v)) return v;
    throw GameError(ErrorCode::StrategyIllegalMove, "no unclaimed vertex left");
}

VertexId LowestIdStrategy::next_move(const GameState& state) const { return lowest_unclaimed(state); }

VertexId RandomStrategy::next_move(const GameState& state) const {
    const auto free = state.vertex_count() - state.claimed_count();
    if (free == 0) throw GameError(ErrorCode::StrategyIllegalMove, "no unclaimed vertex left");
    auto pick = splitmix64(state_) % free;
    for (VertexId v = 0; v < state.vertex_count(); ++v) {
        if (state.is_claimed(v)) continue;
        if (pick-- == 0) return v;
    }
    return lowest_unclaimed(state);
}

void RandomStrategy::observe(const GameState&, VertexId v, Player who) {
    state_ = splitmix64(state_ ^ (std::uint64_t{v} << 1) ^ static_cast<std::uint64_t>(who));
}

GameState play_game(std::size_t vertex_count, Strategy& maker, Strategy& breaker, Player first) {
    GameState state(vertex_count, first);
    while (!state.is_terminal()) {
        const Player mover = state.to_move();
        const VertexId v = mover == Player::Maker ? maker.next_move(state) : breaker.next_move(state);
        if (v >= vertex_count || state.is_claimed(v))
            throw GameError(ErrorCode::StrategyIllegalMove,
                            std::string(to_string(mover)) + " strategy returned an unavailable vertex");
        maker.observe(state, v, mover);
        breaker.observe(state, v, mover);
        state = apply_move(state, v);
    }
    return state;
}

}  // namespace sofk
