#include "sofk/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <limits>
#include <unordered_map>

namespace sofk {

namespace {

using Mask = std::uint64_t;

struct Bound {
    int lo;
    int hi;
};

struct OutOfBudget {};

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ull;
    return x ^ (x >> 33);
}

struct PairKey {
    Mask maker;
    Mask breaker;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        return static_cast<std::size_t>(mix(k.maker) ^ mix(k.breaker + 0x9e3779b97f4a7c15ull));
    }
};

// Set masks plus the per-node classification shared by every search.
class Board {
public:
    Board(const GameHypergraph& hg, int s, Player first) : s_(s), k_(static_cast<int>(hg.k())), first_(first) {
        if (hg.vertex_count() > kSolverCapacity)
            throw GameError(ErrorCode::CapacityExceeded,
                            "board has " + std::to_string(hg.vertex_count()) + " vertices; capacity is " +
                                std::to_string(kSolverCapacity));
        vertex_count_ = static_cast<int>(hg.vertex_count());
        for (const auto& e : hg.sets()) {
            Mask m = 0;
            for (auto v : e.vertices) m |= Mask{1} << v;
            masks_.push_back(m);
        }
    }

    struct Info {
        int secured = 0;
        int alive = 0;
        Mask live = 0;
    };

    Info info(Mask maker, Mask breaker) const {
        Info out;
        const Mask taken = maker | breaker;
        for (Mask e : masks_) {
            if (std::popcount(e & maker) >= s_) {
                ++out.secured;
            } else if (std::popcount(e & breaker) <= k_ - s_) {
                ++out.alive;
                out.live |= e & ~taken;
            }
        }
        return out;
    }

    bool maker_to_move(Mask maker, Mask breaker) const {
        const int t = std::popcount(maker) + std::popcount(breaker);
        return first_ == Player::Maker ? t % 2 == 0 : t % 2 == 1;
    }

    Mask all() const { return vertex_count_ == 64 ? ~Mask{0} : (Mask{1} << vertex_count_) - 1; }
    int vertex_count() const { return vertex_count_; }
    int set_count() const { return static_cast<int>(masks_.size()); }
    const std::vector<Mask>& masks() const { return masks_; }
    int s() const { return s_; }
    int k() const { return k_; }
    Player first() const { return first_; }

    std::vector<VertexId> ordered_moves(Mask maker, Mask breaker, Mask candidates, MoveOrdering ordering) const {
        std::vector<VertexId> moves;
        for (Mask c = candidates; c; c &= c - 1) moves.push_back(static_cast<VertexId>(std::countr_zero(c)));
        if (ordering == MoveOrdering::Natural || moves.size() < 2) return moves;
        std::array<long long, 64> weight{};
        const Mask taken = maker | breaker;
        for (Mask e : masks_) {
            if (std::popcount(e & maker) >= s_ || std::popcount(e & breaker) > k_ - s_) continue;
            const int free = std::popcount(e & ~taken);
            const long long w = ordering == MoveOrdering::DegreeDesc ? 1 : (1ll << (k_ - free));
            for (Mask f = e & ~taken; f; f &= f - 1) weight[std::countr_zero(f)] += w;
        }
        std::stable_sort(moves.begin(), moves.end(),
                         [&](VertexId a, VertexId b) { return weight[a] > weight[b]; });
        return moves;
    }

private:
    int s_;
    int k_;
    Player first_;
    int vertex_count_ = 0;
    std::vector<Mask> masks_;
};

class ExactSearch {
public:
    ExactSearch(const Board& board, const SolveConfig& cfg) : board_(board), cfg_(cfg) {}

    int search(Mask maker, Mask breaker, int alpha, int beta) {
        if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) throw OutOfBudget{};
        ++nodes_;
        const auto info = board_.info(maker, breaker);
        if (info.alive == 0) return info.secured;
        int lo = info.secured;
        int hi = info.secured + info.alive;
        const bool ab = cfg_.use_alpha_beta;
        if (ab) {
            if (hi <= alpha) return hi;
            if (lo >= beta) return lo;
        }
        const PairKey key{maker, breaker};
        if (cfg_.use_memo) {
            if (auto it = memo_.find(key); it != memo_.end()) {
                ++hits_;
                lo = std::max(lo, it->second.lo);
                hi = std::min(hi, it->second.hi);
                if (lo == hi) return lo;
                if (ab && lo >= beta) return lo;
                if (ab && hi <= alpha) return hi;
            }
        }
        const bool maker_moves = board_.maker_to_move(maker, breaker);
        const auto moves = board_.ordered_moves(maker, breaker, info.live, cfg_.move_ordering);
        int a = alpha, b = beta;
        int best = maker_moves ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
        for (VertexId v : moves) {
            const Mask bit = Mask{1} << v;
            if (maker_moves) {
                best = std::max(best, search(maker | bit, breaker, a, b));
                if (best >= hi) break;
                if (ab) {
                    a = std::max(a, best);
                    if (best >= beta) break;
                }
            } else {
                best = std::min(best, search(maker, breaker | bit, a, b));
                if (best <= lo) break;
                if (ab) {
                    b = std::min(b, best);
                    if (best <= alpha) break;
                }
            }
        }
        if (cfg_.use_memo) {
            auto [it, inserted] = memo_.try_emplace(key, Bound{info.secured, info.secured + info.alive});
            auto& entry = it->second;
            if (!ab || (best > alpha && best < beta)) {
                entry = {best, best};
            } else if (best <= alpha) {
                entry.hi = std::min(entry.hi, best);
            } else {
                entry.lo = std::max(entry.lo, best);
            }
        }
        return best;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t hits() const { return hits_; }

private:
    const Board& board_;
    const SolveConfig& cfg_;
    std::unordered_map<PairKey, Bound, PairKeyHash> memo_;
    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;
};

GameState to_state(Mask maker, Mask breaker, std::size_t vertex_count, Player to_move) {
    VertexSet m(vertex_count), b(vertex_count);
    for (Mask x = maker; x; x &= x - 1) m.set(static_cast<VertexId>(std::countr_zero(x)));
    for (Mask x = breaker; x; x &= x - 1) b.set(static_cast<VertexId>(std::countr_zero(x)));
    return GameState(std::move(m), std::move(b), to_move);
}

// Search where one side follows a fixed policy and the other plays optimally.
class StrategySearch {
public:
    StrategySearch(const Board& board, Player fixed_side) : board_(board), fixed_(fixed_side) {}

    int search(Mask maker, Mask breaker, const Strategy& strat, int alpha, int beta) {
        ++nodes_;
        const auto info = board_.info(maker, breaker);
        if (info.alive == 0) return info.secured;
        int lo = info.secured;
        int hi = info.secured + info.alive;
        if (hi <= alpha) return hi;
        if (lo >= beta) return lo;
        std::string key(sizeof(Mask) * 2, '\0');
        std::memcpy(key.data(), &maker, sizeof(Mask));
        std::memcpy(key.data() + sizeof(Mask), &breaker, sizeof(Mask));
        key += strat.state_key();
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++hits_;
            lo = std::max(lo, it->second.lo);
            hi = std::min(hi, it->second.hi);
            if (lo == hi || lo >= beta) return lo;
            if (hi <= alpha) return hi;
        }
        const Player mover = board_.maker_to_move(maker, breaker) ? Player::Maker : Player::Breaker;
        const auto state = to_state(maker, breaker, static_cast<std::size_t>(board_.vertex_count()), mover);
        int best;
        if (mover == fixed_) {
            const VertexId v = strat.next_move(state);
            check_legal(maker | breaker, v);
            auto child = strat.clone();
            child->observe(state, v, mover);
            const Mask bit = Mask{1} << v;
            best = mover == Player::Maker ? search(maker | bit, breaker, *child, alpha, beta)
                                          : search(maker, breaker | bit, *child, alpha, beta);
        } else {
            const Mask free = board_.all() & ~(maker | breaker);
            const auto moves = board_.ordered_moves(maker, breaker, free, MoveOrdering::DegreeDesc);
            int a = alpha, b = beta;
            best = mover == Player::Maker ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
            for (VertexId v : moves) {
                auto child = strat.clone();
                child->observe(state, v, mover);
                const Mask bit = Mask{1} << v;
                if (mover == Player::Maker) {
                    best = std::max(best, search(maker | bit, breaker, *child, a, b));
                    if (best >= hi || best >= beta) break;
                    a = std::max(a, best);
                } else {
                    best = std::min(best, search(maker, breaker | bit, *child, a, b));
                    if (best <= lo || best <= alpha) break;
                    b = std::min(b, best);
                }
            }
        }
        auto [it, inserted] = memo_.try_emplace(key, Bound{info.secured, info.secured + info.alive});
        auto& entry = it->second;
        if (best > alpha && best < beta)
            entry = {best, best};
        else if (best <= alpha)
            entry.hi = std::min(entry.hi, best);
        else
            entry.lo = std::max(entry.lo, best);
        return best;
    }

    // Replays the line where the free side picks the lowest-id optimal reply.
    std::vector<VertexId> principal_variation(Mask maker, Mask breaker, std::unique_ptr<Strategy> strat) {
        std::vector<VertexId> pv;
        const int n = board_.set_count();
        while (true) {
            const auto info = board_.info(maker, breaker);
            if (info.alive == 0) break;
            const Player mover = board_.maker_to_move(maker, breaker) ? Player::Maker : Player::Breaker;
            const auto state = to_state(maker, breaker, static_cast<std::size_t>(board_.vertex_count()), mover);
            VertexId chosen;
            if (mover == fixed_) {
                chosen = strat->next_move(state);
                check_legal(maker | breaker, chosen);
            } else {
                const int target = search(maker, breaker, *strat, -1, n + 1);
                chosen = 0;
                bool found = false;
                for (Mask f = board_.all() & ~(maker | breaker); f && !found; f &= f - 1) {
                    const auto v = static_cast<VertexId>(std::countr_zero(f));
                    auto child = strat->clone();
                    child->observe(state, v, mover);
                    const Mask bit = Mask{1} << v;
                    const int val = mover == Player::Maker ? search(maker | bit, breaker, *child, -1, n + 1)
                                                           : search(maker, breaker | bit, *child, -1, n + 1);
                    if (val == target) {
                        chosen = v;
                        found = true;
                    }
                }
            }
            strat->observe(state, chosen, mover);
            pv.push_back(chosen);
            if (mover == Player::Maker)
                maker |= Mask{1} << chosen;
            else
                breaker |= Mask{1} << chosen;
        }
        return pv;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t hits() const { return hits_; }

private:
    void check_legal(Mask taken, VertexId v) const {
        if (v >= static_cast<VertexId>(board_.vertex_count()) || (taken >> v) & 1)
            throw GameError(ErrorCode::StrategyIllegalMove,
                            "strategy returned unavailable vertex " + std::to_string(v));
    }

    const Board& board_;
    Player fixed_;
    std::unordered_map<std::string, Bound> memo_;
    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;
};

SolveResult solve_vs_strategy(const GameHypergraph& hg, const Threshold& s, const Strategy& fixed, Player fixed_side,
                              Player first) {
    Board board(hg, s.value(), first);
    StrategySearch search(board, fixed_side);
    SolveResult out;
    out.first_player = first;
    out.score = search.search(0, 0, fixed, -1, board.set_count() + 1);
    out.principal_variation = search.principal_variation(0, 0, fixed.clone());
    out.nodes_expanded = search.nodes();
    out.memo_hits = search.hits();
    return out;
}

}  // namespace

SolveResult solve_exact(const GameHypergraph& hg, const Threshold& s, Player first, const SolveConfig& cfg) {
    if (cfg.node_budget && *cfg.node_budget == 0)
        throw GameError(ErrorCode::InvalidArgument, "node budget must be positive");
    Board board(hg, s.value(), first);
    ExactSearch search(board, cfg);
    const int n = board.set_count();
    SolveResult out;
    out.first_player = first;

    // The root is expanded here so an exhausted budget can still report the
    // interval proven by the finished root moves.
    const auto root = board.info(0, 0);
    const bool maker_root = first == Player::Maker;
    int best = maker_root ? root.secured - 1 : root.secured + root.alive + 1;
    try {
        if (root.alive == 0) {
            best = root.secured;
        } else {
            const auto moves = board.ordered_moves(0, 0, root.live, cfg.move_ordering);
            for (VertexId v : moves) {
                const Mask bit = Mask{1} << v;
                if (maker_root) {
                    const int alpha = cfg.use_alpha_beta ? best : -1;
                    best = std::max(best, search.search(bit, 0, alpha, n + 1));
                    if (best >= root.secured + root.alive) break;
                } else {
                    const int beta = cfg.use_alpha_beta ? best : n + 1;
                    best = std::min(best, search.search(0, bit, -1, beta));
                    if (best <= root.secured) break;
                }
            }
        }
    } catch (const OutOfBudget&) {
        const int lower = maker_root ? std::max(root.secured, best) : root.secured;
        const int upper = maker_root ? root.secured + root.alive : std::min(root.secured + root.alive, best);
        throw BudgetExhausted(lower, upper, search.nodes());
    }
    out.score = best;

    if (cfg.principal_variation) {
        std::vector<VertexId> pv;
        Mask maker = 0, breaker = 0;
        int value = best;
        SolveConfig exact_cfg = cfg;
        exact_cfg.node_budget.reset();
        ExactSearch walker(board, exact_cfg);
        while (true) {
            const auto info = board.info(maker, breaker);
            if (info.alive == 0) break;
            const bool maker_moves = board.maker_to_move(maker, breaker);
            bool found = false;
            for (Mask f = info.live; f && !found; f &= f - 1) {
                const auto v = static_cast<VertexId>(std::countr_zero(f));
                const Mask bit = Mask{1} << v;
                const Mask m2 = maker_moves ? maker | bit : maker;
                const Mask b2 = maker_moves ? breaker : breaker | bit;
                if (walker.search(m2, b2, -1, n + 1) == value) {
                    pv.push_back(v);
                    maker = m2;
                    breaker = b2;
                    found = true;
                }
            }
            if (!found) break;
        }
        out.principal_variation = std::move(pv);
    }
    out.nodes_expanded = search.nodes();
    out.memo_hits = search.hits();
    return out;
}

SolveResult solve_plain_minimax(const GameHypergraph& hg, const Threshold& s, Player first) {
    const int vc = static_cast<int>(hg.vertex_count());
    if (vc > static_cast<int>(kPlainMinimaxCapacity))
        throw GameError(ErrorCode::CapacityExceeded, "plain minimax is limited to " +
                                                         std::to_string(kPlainMinimaxCapacity) + " vertices");
    std::vector<Mask> masks;
    for (const auto& e : hg.sets()) {
        Mask m = 0;
        for (auto v : e.vertices) m |= Mask{1} << v;
        masks.push_back(m);
    }
    // binom[a][b] = C(a, b)
    std::vector<std::vector<std::uint64_t>> binom(vc + 2, std::vector<std::uint64_t>(vc + 2, 0));
    for (int a = 0; a <= vc + 1; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
    }
    auto rank = [&](Mask m) {  // combinatorial number system
        std::uint64_t r = 0;
        int i = 0;
        for (; m; m &= m - 1) r += binom[std::countr_zero(m)][++i];
        return r;
    };
    auto compress = [](Mask m, Mask within) {  // positions of m relative to within
        Mask out = 0;
        int pos = 0;
        for (Mask w = within; w; w &= w - 1, ++pos)
            if (m & (w & -w)) out |= Mask{1} << pos;
        return out;
    };
    auto deposit = [](Mask rel, Mask within) {
        Mask out = 0;
        for (Mask w = within; w; w &= w - 1, rel >>= 1)
            if (rel & 1) out |= w & -w;
        return out;
    };
    auto next_combination = [](Mask x) {  // Gosper's hack
        const Mask c = x & -x;
        const Mask r = x + c;
        return (((r ^ x) >> 2) / c) | r;
    };
    auto maker_count = [&](int t) { return first == Player::Maker ? (t + 1) / 2 : t / 2; };
    const Mask all = vc == 64 ? ~Mask{0} : (Mask{1} << vc) - 1;

    std::uint64_t states = 0;
    std::vector<std::uint8_t> upper_layer, layer;
    for (int t = vc; t >= 0; --t) {
        const int m = maker_count(t);
        const std::uint64_t inner = binom[t][m];
        layer.assign(binom[vc][t] * inner, 0);
        const bool maker_moves = maker_count(t + 1) > m;
        Mask claimed = t == 0 ? 0 : (Mask{1} << t) - 1;
        while (true) {
            const std::uint64_t outer = rank(claimed);
            Mask rel = m == 0 ? 0 : (Mask{1} << m) - 1;
            while (true) {
                const Mask maker = deposit(rel, claimed);
                std::uint8_t value;
                if (t == vc) {
                    int score = 0;
                    for (Mask e : masks) score += std::popcount(e & maker) >= s.value() ? 1 : 0;
                    value = static_cast<std::uint8_t>(score);
                } else {
                    int best = maker_moves ? -1 : 256;
                    const int m2 = maker_count(t + 1);
                    for (Mask f = all & ~claimed; f; f &= f - 1) {
                        const Mask bit = f & -f;
                        const Mask c2 = claimed | bit;
                        const Mask mk2 = maker_moves ? maker | bit : maker;
                        const auto idx = rank(c2) * binom[t + 1][m2] + rank(compress(mk2, c2));
                        const int child = upper_layer[idx];
                        best = maker_moves ? std::max(best, child) : std::min(best, child);
                    }
                    value = static_cast<std::uint8_t>(best);
                }
                layer[outer * inner + rank(rel)] = value;
                ++states;
                if (m == 0 || m == t) break;
                rel = next_combination(rel);
                if (rel >> t) break;
            }
            if (t == 0 || t == vc) break;
            claimed = next_combination(claimed);
            if (claimed >> vc) break;
        }
        upper_layer.swap(layer);
    }
    SolveResult out;
    out.first_player = first;
    out.score = upper_layer.at(0);
    out.nodes_expanded = states;
    return out;
}

SolveResult best_breaker_vs_strategy(const GameHypergraph& hg, const Threshold& s, const Strategy& maker,
                                     Player first) {
    return solve_vs_strategy(hg, s, maker, Player::Maker, first);
}

SolveResult best_maker_vs_strategy(const GameHypergraph& hg, const Threshold& s, const Strategy& breaker,
                                   Player first) {
    return solve_vs_strategy(hg, s, breaker, Player::Breaker, first);
}

PositionValue solve_position(const GameHypergraph& hg, const Threshold& s, const GameState& state) {
    if (state.vertex_count() != hg.vertex_count())
        throw GameError(ErrorCode::InvalidArgument, "state does not match the board");
    const bool even = state.claimed_count() % 2 == 0;
    const Player first = even ? state.to_move() : opponent(state.to_move());
    Board board(hg, s.value(), first);
    const SolveConfig cfg;
    ExactSearch search(board, cfg);
    const int n = board.set_count();
    const Mask maker = state.maker().low_word(), breaker = state.breaker().low_word();
    PositionValue out;
    out.score = search.search(maker, breaker, -1, n + 1);
    const bool maker_moves = state.to_move() == Player::Maker;
    for (Mask f = board.all() & ~(maker | breaker); f; f &= f - 1) {
        const auto v = static_cast<VertexId>(std::countr_zero(f));
        const Mask bit = Mask{1} << v;
        const int val = maker_moves ? search.search(maker | bit, breaker, -1, n + 1)
                                    : search.search(maker, breaker | bit, -1, n + 1);
        if (val == out.score) {
            out.best_move = v;
            break;
        }
    }
    return out;
}

}  // namespace sofk
