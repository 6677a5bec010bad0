// Domain types and the game engine for s-of-k scoring Maker-Breaker games.
//
// A game is played on a k-uniform hypergraph. Maker and Breaker alternately
// claim unclaimed vertices until the board is full; Maker scores one point for
// every winning set in which she holds at least s vertices.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sofk {

using VertexId = std::uint32_t;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
    MoveOnClaimedVertex,
    VertexOutOfRange,
    NonTerminalState,
    InvalidHypergraph,
    InvalidThreshold,
    DimensionTooSmall,
    CapacityExceeded,
    BudgetExhausted,
    StrategyIllegalMove,
    StateOffTree,
    PeriodMismatch,
    ImperfectPairing,
    InvalidPairing,
    IndexParity,
    Infeasible,
    ParseError,
    IoError,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

class GameError : public std::runtime_error {
public:
    GameError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class Player : std::uint8_t { Maker, Breaker };

constexpr Player opponent(Player p) {
    return p == Player::Maker ? Player::Breaker : Player::Maker;
}
const char* to_string(Player p);
std::optional<Player> parse_player(const std::string& text);

enum class FamilyTag { Triangular, Square, Rhombus, Hexagonal, Cycle, Custom };

const char* to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family(const std::string& text);

// Dynamically sized vertex bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0), capacity_(capacity) {}

    std::size_t capacity() const { return capacity_; }
    bool test(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool intersects(const VertexSet& other) const;
    std::vector<VertexId> members() const;
    // Low 64 bits; only meaningful when capacity() <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t capacity_ = 0;
};

struct Coord {
    Rational x;
    Rational y;
    friend bool operator==(const Coord&, const Coord&) = default;
};

struct WinningSet {
    std::vector<VertexId> vertices;  // strictly increasing
    bool interior = false;
    friend bool operator==(const WinningSet&, const WinningSet&) = default;
};

// k-uniform hypergraph with optional geometry. Construction validates every
// invariant, so an existing GameHypergraph is always well formed.
class GameHypergraph {
public:
    GameHypergraph(std::size_t vertex_count, std::size_t k, std::vector<WinningSet> sets,
                   FamilyTag family = FamilyTag::Custom, std::vector<Coord> coords = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t k() const { return k_; }
    std::size_t set_count() const { return sets_.size(); }
    const std::vector<WinningSet>& sets() const { return sets_; }
    const WinningSet& set(std::size_t i) const { return sets_[i]; }
    FamilyTag family() const { return family_; }
    const std::vector<Coord>& coords() const { return coords_; }
    bool has_coords() const { return !coords_.empty(); }

    // Indices of the sets containing v.
    const std::vector<std::size_t>& incident(VertexId v) const { return incidence_[v]; }
    std::size_t degree(VertexId v) const { return incidence_[v].size(); }
    std::size_t max_degree() const;
    std::size_t interior_count() const;
    bool contains(std::size_t set_index, VertexId v) const;

    void set_interior(std::size_t set_index, bool interior) { sets_[set_index].interior = interior; }

    friend bool operator==(const GameHypergraph& a, const GameHypergraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.k_ == b.k_ && a.sets_ == b.sets_ &&
               a.family_ == b.family_ && a.coords_ == b.coords_;
    }

private:
    std::size_t vertex_count_;
    std::size_t k_;
    std::vector<WinningSet> sets_;
    FamilyTag family_;
    std::vector<Coord> coords_;
    std::vector<std::vector<std::size_t>> incidence_;
};

// Validated threshold 1 <= s <= k.
class Threshold {
public:
    Threshold(int s, std::size_t k);
    int value() const { return s_; }
    operator int() const { return s_; }

private:
    int s_;
};

class GameState {
public:
    explicit GameState(std::size_t vertex_count, Player to_move = Player::Maker);
    GameState(VertexSet maker, VertexSet breaker, Player to_move);

    const VertexSet& maker() const { return maker_; }
    const VertexSet& breaker() const { return breaker_; }
    const VertexSet& claimed_by(Player p) const { return p == Player::Maker ? maker_ : breaker_; }
    Player to_move() const { return to_move_; }
    std::size_t vertex_count() const { return maker_.capacity(); }
    std::size_t claimed_count() const { return maker_.count() + breaker_.count(); }
    bool is_claimed(VertexId v) const { return maker_.test(v) || breaker_.test(v); }
    bool is_terminal() const { return claimed_count() == vertex_count(); }

    friend bool operator==(const GameState&, const GameState&) = default;

private:
    VertexSet maker_;
    VertexSet breaker_;
    Player to_move_;
};

std::vector<VertexId> legal_moves(const GameState& state, const GameHypergraph& hg);

// Claims v for the side to move and returns the successor state.
GameState apply_move(const GameState& state, VertexId v);

// Number of good sets of a finished game.
int final_score(const GameState& state, const GameHypergraph& hg, const Threshold& s);

struct GoodCount {
    int secured = 0;  // already good
    int alive = 0;    // not yet good but still reachable
    friend bool operator==(const GoodCount&, const GoodCount&) = default;
};

GoodCount partial_good_count(const GameState& state, const GameHypergraph& hg, const Threshold& s);

// Counts good sets of any state without requiring it to be terminal; used by
// the interior-only evaluators and the play loop.
int good_sets(const VertexSet& maker, const GameHypergraph& hg, int s, bool interior_only = false);

}  // namespace sofk
