#include "sofk/core.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sofk {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MoveOnClaimedVertex: return "MoveOnClaimedVertex";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::NonTerminalState: return "NonTerminalState";
        case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
        case ErrorCode::InvalidThreshold: return "InvalidThreshold";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::StrategyIllegalMove: return "StrategyIllegalMove";
        case ErrorCode::StateOffTree: return "StateOffTree";
        case ErrorCode::PeriodMismatch: return "PeriodMismatch";
        case ErrorCode::ImperfectPairing: return "ImperfectPairing";
        case ErrorCode::InvalidPairing: return "InvalidPairing";
        case ErrorCode::IndexParity: return "IndexParity";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

const char* to_string(Player p) { return p == Player::Maker ? "maker" : "breaker"; }

std::optional<Player> parse_player(const std::string& text) {
    if (text == "maker" || text == "Maker" || text == "m") return Player::Maker;
    if (text == "breaker" || text == "Breaker" || text == "b") return Player::Breaker;
    return std::nullopt;
}

const char* to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Triangular: return "triangular";
        case FamilyTag::Square: return "square";
        case FamilyTag::Rhombus: return "rhombus";
        case FamilyTag::Hexagonal: return "hexagonal";
        case FamilyTag::Cycle: return "cycle";
        case FamilyTag::Custom: return "custom";
    }
    return "custom";
}

std::optional<FamilyTag> parse_family(const std::string& text) {
    if (text == "triangular" || text == "tri") return FamilyTag::Triangular;
    if (text == "square" || text == "sq") return FamilyTag::Square;
    if (text == "rhombus" || text == "rh") return FamilyTag::Rhombus;
    if (text == "hexagonal" || text == "hex") return FamilyTag::Hexagonal;
    if (text == "cycle") return FamilyTag::Cycle;
    if (text == "custom") return FamilyTag::Custom;
    return std::nullopt;
}

std::size_t VertexSet::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::intersects(const VertexSet& other) const {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

GameHypergraph::GameHypergraph(std::size_t vertex_count, std::size_t k, std::vector<WinningSet> sets,
                               FamilyTag family, std::vector<Coord> coords)
    : vertex_count_(vertex_count), k_(k), sets_(std::move(sets)), family_(family), coords_(std::move(coords)) {
    if (k_ < 1) throw GameError(ErrorCode::InvalidHypergraph, "k must be at least 1");
    if (sets_.empty()) throw GameError(ErrorCode::InvalidHypergraph, "hypergraph needs at least one winning set");
    if (!coords_.empty() && coords_.size() != vertex_count_)
        throw GameError(ErrorCode::InvalidHypergraph, "coordinate count does not match vertex count");
    std::set<std::vector<VertexId>> seen;
    incidence_.assign(vertex_count_, {});
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        const auto& vs = sets_[i].vertices;
        if (vs.size() != k_) throw GameError(ErrorCode::InvalidHypergraph, "winning set is not of size k");
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (vs[j] >= vertex_count_)
                throw GameError(ErrorCode::InvalidHypergraph, "winning set references vertex out of range");
            if (j > 0 && vs[j - 1] >= vs[j])
                throw GameError(ErrorCode::InvalidHypergraph, "winning set vertices must be strictly increasing");
            incidence_[vs[j]].push_back(i);
        }
        if (!seen.insert(vs).second) throw GameError(ErrorCode::InvalidHypergraph, "duplicate winning set");
    }
}

std::size_t GameHypergraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& inc : incidence_) best = std::max(best, inc.size());
    return best;
}

std::size_t GameHypergraph::interior_count() const {
    return static_cast<std::size_t>(
        std::count_if(sets_.begin(), sets_.end(), [](const WinningSet& e) { return e.interior; }));
}

bool GameHypergraph::contains(std::size_t set_index, VertexId v) const {
    const auto& vs = sets_[set_index].vertices;
    return std::binary_search(vs.begin(), vs.end(), v);
}

Threshold::Threshold(int s, std::size_t k) : s_(s) {
    if (s < 1 || static_cast<std::size_t>(s) > k)
        throw GameError(ErrorCode::InvalidThreshold,
                        "threshold s=" + std::to_string(s) + " outside [1," + std::to_string(k) + "]");
}

GameState::GameState(std::size_t vertex_count, Player to_move)
    : maker_(vertex_count), breaker_(vertex_count), to_move_(to_move) {}

GameState::GameState(VertexSet maker, VertexSet breaker, Player to_move)
    : maker_(std::move(maker)), breaker_(std::move(breaker)), to_move_(to_move) {
    if (maker_.capacity() != breaker_.capacity())
        throw GameError(ErrorCode::InvalidArgument, "claim sets have different capacities");
    if (maker_.intersects(breaker_))
        throw GameError(ErrorCode::MoveOnClaimedVertex, "a vertex is claimed by both players");
}

std::vector<VertexId> legal_moves(const GameState& state, const GameHypergraph& hg) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < hg.vertex_count(); ++v)
        if (!state.is_claimed(v)) out.push_back(v);
    return out;
}

GameState apply_move(const GameState& state, VertexId v) {
    if (v >= state.vertex_count())
        throw GameError(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    if (state.is_claimed(v))
        throw GameError(ErrorCode::MoveOnClaimedVertex, "vertex " + std::to_string(v) + " already claimed");
    VertexSet maker = state.maker();
    VertexSet breaker = state.breaker();
    if (state.to_move() == Player::Maker)
        maker.set(v);
    else
        breaker.set(v);
    return GameState(std::move(maker), std::move(breaker), opponent(state.to_move()));
}

static int count_in(const WinningSet& e, const VertexSet& vs) {
    int c = 0;
    for (auto v : e.vertices) c += vs.test(v) ? 1 : 0;
    return c;
}

int good_sets(const VertexSet& maker, const GameHypergraph& hg, int s, bool interior_only) {
    int total = 0;
    for (const auto& e : hg.sets()) {
        if (interior_only && !e.interior) continue;
        if (count_in(e, maker) >= s) ++total;
    }
    return total;
}

int final_score(const GameState& state, const GameHypergraph& hg, const Threshold& s) {
    if (!state.is_terminal()) throw GameError(ErrorCode::NonTerminalState, "final_score needs a finished game");
    return good_sets(state.maker(), hg, s.value());
}

GoodCount partial_good_count(const GameState& state, const GameHypergraph& hg, const Threshold& s) {
    GoodCount out;
    const int k = static_cast<int>(hg.k());
    for (const auto& e : hg.sets()) {
        const int m = count_in(e, state.maker());
        const int b = count_in(e, state.breaker());
        if (m >= s.value())
            ++out.secured;
        else if (b <= k - s.value())
            ++out.alive;
    }
    return out;
}

}  // namespace sofk
