// Deterministic move policies.
//
// A Strategy plays one side of one game. It is told about every move through
// observe() (its own moves included) and is asked for a move with next_move().
// Searches that branch over the opponent's replies clone the strategy per
// branch, and use state_key() to merge transpositions, so state_key() must
// capture everything next_move() depends on besides the claim sets.

#pragma once

#include <memory>
#include <string>

#include "sofk/core.hpp"

namespace sofk {

class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;
    virtual VertexId next_move(const GameState& state) const = 0;
    virtual void observe(const GameState& before, VertexId v, Player who) {
        (void)before;
        (void)v;
        (void)who;
    }
    virtual std::unique_ptr<Strategy> clone() const = 0;

    // Serialized internal progress; empty for positional (memoryless) policies.
    virtual std::string state_key() const { return {}; }
};

// Lowest unclaimed vertex id.
class LowestIdStrategy final : public Strategy {
public:
    std::string name() const override { return "lowest-id"; }
    VertexId next_move(const GameState& state) const override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<LowestIdStrategy>(*this); }
};

// Uniformly random unclaimed vertex from a seeded generator.
class RandomStrategy final : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::string name() const override { return "random"; }
    VertexId next_move(const GameState& state) const override;
    void observe(const GameState& before, VertexId v, Player who) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }
    std::string state_key() const override { return std::to_string(state_); }

private:
    std::uint64_t state_;
};

VertexId lowest_unclaimed(const GameState& state);

// Plays a full game between two strategies; returns the terminal state.
GameState play_game(std::size_t vertex_count, Strategy& maker, Strategy& breaker, Player first);

}  // namespace sofk
