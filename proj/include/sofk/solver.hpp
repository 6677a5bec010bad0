// Exact game values.
//
// solve_exact runs a memoised alpha-beta search over claim bitmasks. The value
// window of a node is [secured, secured + alive] (see partial_good_count);
// vertices outside every undecided set are never searched, since claiming one
// is a pass and a pass is never better than a real move in these games.
//
// solve_plain_minimax is an independent oracle: a bottom-up sweep over every
// position of the game, without pruning or search.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sofk/core.hpp"
#include "sofk/strategy.hpp"

namespace sofk {

inline constexpr std::size_t kSolverCapacity = 64;
inline constexpr std::size_t kPlainMinimaxCapacity = 18;

enum class MoveOrdering { Natural, DegreeDesc, PotentialDesc };

struct SolveConfig {
    bool use_alpha_beta = true;
    bool use_memo = true;
    MoveOrdering move_ordering = MoveOrdering::DegreeDesc;
    std::optional<std::uint64_t> node_budget;
    bool principal_variation = true;
};

struct SolveResult {
    int score = 0;
    Player first_player = Player::Maker;
    std::optional<std::vector<VertexId>> principal_variation;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
};

// Thrown when SolveConfig::node_budget runs out; carries the proven interval.
class BudgetExhausted : public GameError {
public:
    BudgetExhausted(int lower, int upper, std::uint64_t nodes)
        : GameError(ErrorCode::BudgetExhausted, "node budget exhausted; value in [" + std::to_string(lower) + ", " +
                                                    std::to_string(upper) + "]"),
          lower(lower), upper(upper), nodes(nodes) {}
    int lower;
    int upper;
    std::uint64_t nodes;
};

SolveResult solve_exact(const GameHypergraph& hg, const Threshold& s, Player first, const SolveConfig& cfg = {});

SolveResult solve_plain_minimax(const GameHypergraph& hg, const Threshold& s, Player first);

// Optimal Breaker against a fixed deterministic Maker policy.
SolveResult best_breaker_vs_strategy(const GameHypergraph& hg, const Threshold& s, const Strategy& maker,
                                     Player first);

// Optimal Maker against a fixed deterministic Breaker policy.
SolveResult best_maker_vs_strategy(const GameHypergraph& hg, const Threshold& s, const Strategy& breaker,
                                   Player first);

// Value of an arbitrary position under optimal play from both sides, plus the
// lowest-id optimal move for the side to move (none when the board is full).
struct PositionValue {
    int score = 0;
    std::optional<VertexId> best_move;
};
PositionValue solve_position(const GameHypergraph& hg, const Threshold& s, const GameState& state);

}  // namespace sofk
