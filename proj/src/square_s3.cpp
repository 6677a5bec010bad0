// Square board, s = 3: the 3x5 case analysis and the tiling built from it.
//
// Local tile ids are row * 5 + column. In the case analysis the rows are
// named x, y, z (top to bottom) and the columns 1..5. The plan is written for
// Breaker moving first; any Maker vertex the plan did not ask for is a
// "spare": the plan treats it as unclaimed, and if the plan later asks for a
// spare it takes it for free and Maker plays another spare instead.

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "sofk/strategies.hpp"

namespace sofk {

namespace {

constexpr int kTileW = 5;
constexpr int kTileH = 3;
constexpr int kTileSize = kTileW * kTileH;

using Mask = std::uint16_t;

bool has(Mask m, int v) { return (m >> v) & 1u; }

struct TileView {
    Mask maker = 0;
    Mask breaker = 0;
    bool free(int v) const { return !has(maker, v) && !has(breaker, v); }
};

enum Stage : int { S0, A1, B1, B2, B3, C1, C2, C3, C4, C5, Done };

class G35Plan {
public:
    // Maker's reply. `b` is Breaker's last move if it was in this tile; when
    // absent Maker plays a spare. Returns -1 when the tile is full.
    std::pair<int, G35Plan> step(const TileView& view, std::optional<int> b) const {
        G35Plan next = *this;
        const int move = next.decide(view, b);
        return {move, next};
    }

    std::string key() const {
        std::ostringstream out;
        out << stage_ << hf_ << vf_ << side_ << ':' << t_ << ':' << b1_ << ':' << b2_ << ':' << extras_ << ':';
        for (auto [u, w] : pairs_) out << u << '-' << w << ',';
        return out.str();
    }

private:
    int stage_ = S0;
    bool hf_ = false;  // mirror columns
    bool vf_ = false;  // mirror rows
    int side_ = 0;     // 0 = left (columns 1, 2), 1 = right (columns 5, 4)
    int t_ = -1;       // pending threat
    int b1_ = -1, b2_ = -1;
    Mask extras_ = 0;
    std::vector<std::pair<int, int>> pairs_;

    // Plan coordinates -> tile id. row: 0 = x, 1 = y, 2 = z; col 1..5.
    int at(int row, int col) const {
        if (hf_) col = 6 - col;
        if (vf_) row = 2 - row;
        return row * kTileW + (col - 1);
    }
    int row_of(int v) const { return vf_ ? 2 - v / kTileW : v / kTileW; }
    int col_of(int v) const { return hf_ ? 5 - v % kTileW : v % kTileW + 1; }
    // Side-relative columns: end = 1 or 5, inner = 2 or 4.
    static int end_col(int side) { return side == 0 ? 1 : 5; }
    static int inner_col(int side) { return side == 0 ? 2 : 4; }

    static int lowest_free(const TileView& view) {
        for (int v = 0; v < kTileSize; ++v)
            if (view.free(v)) return v;
        return -1;
    }

    int spare(const TileView& view, int preferred) {
        const int v = preferred >= 0 && view.free(preferred) ? preferred : lowest_free(view);
        if (v >= 0) extras_ |= Mask(1u << v);
        return v;
    }

    // The plan asks for v.
    int claim(const TileView& view, int v) {
        if (has(view.breaker, v)) throw GameError(ErrorCode::StateOffTree, "3x5 plan wants a Breaker vertex");
        if (has(extras_, v)) {
            extras_ &= Mask(~(1u << v));
            return spare(view, -1);
        }
        if (has(view.maker, v)) return spare(view, -1);
        return v;
    }

    bool clear(const TileView& view, std::initializer_list<int> vs) const {
        return std::all_of(vs.begin(), vs.end(), [&](int v) { return !has(view.breaker, v); });
    }

    int finish(const TileView& view, int centre, std::vector<std::pair<int, int>> pairs) {
        for (auto p : pairs) pairs_.push_back(p);
        stage_ = Done;
        return claim(view, centre);
    }

    // Pair on whichever square of a 3x2 end block Breaker has not touched.
    void pair_clean_square(int side, int hit) {
        if (row_of(hit) == 0)
            pairs_.push_back({at(2, end_col(side)), at(2, inner_col(side))});
        else
            pairs_.push_back({at(0, end_col(side)), at(0, inner_col(side))});
    }

    int other_in_row(int side, int hit) const {
        const int r = row_of(hit);
        return col_of(hit) == end_col(side) ? at(r, inner_col(side)) : at(r, end_col(side));
    }

    int decide(const TileView& view, std::optional<int> b) {
        if (!b) return spare(view, stage_ == S0 ? 7 : -1);
        for (auto [u, w] : pairs_) {
            const int partner = *b == u ? w : *b == w ? u : -1;
            if (partner >= 0 && view.free(partner)) return partner;
        }
        const int x = 0, y = 1, z = 2;
        switch (stage_) {
            case S0: {
                const int row = *b / kTileW, col = *b % kTileW + 1;
                if (col == 3 && row == 1) {
                    stage_ = C1;
                    return claim(view, at(y, 2));
                }
                if (col == 3) {
                    vf_ = row == 2;
                    stage_ = B1;
                    return claim(view, at(y, 2));
                }
                hf_ = col >= 4;
                stage_ = A1;
                return claim(view, at(y, 4));
            }
            case A1: {
                // 3x2 blocks with y4 as one of the two middle vertices
                if (clear(view, {at(y, 3), at(x, 3), at(x, 4), at(z, 3), at(z, 4)}))
                    return finish(view, at(y, 3), {{at(x, 3), at(x, 4)}, {at(z, 3), at(z, 4)}});
                if (clear(view, {at(y, 5), at(x, 4), at(x, 5), at(z, 4), at(z, 5)}))
                    return finish(view, at(y, 5), {{at(x, 4), at(x, 5)}, {at(z, 4), at(z, 5)}});
                if (clear(view, {at(x, 4), at(x, 3), at(x, 5), at(y, 3), at(y, 5)}))
                    return finish(view, at(x, 4), {{at(x, 3), at(y, 3)}, {at(x, 5), at(y, 5)}});
                if (clear(view, {at(z, 4), at(z, 3), at(z, 5), at(y, 3), at(y, 5)}))
                    return finish(view, at(z, 4), {{at(z, 3), at(y, 3)}, {at(z, 5), at(y, 5)}});
                throw GameError(ErrorCode::StateOffTree, "3x5 plan: every block around y4 is blocked");
            }
            case B1:
                if (clear(view, {at(y, 1), at(x, 1), at(x, 2), at(z, 1), at(z, 2)}))
                    return finish(view, at(y, 1), {{at(x, 1), at(x, 2)}, {at(z, 1), at(z, 2)}});
                if (clear(view, {at(z, 2), at(y, 1), at(y, 3), at(z, 1), at(z, 3)}))
                    return finish(view, at(z, 2), {{at(y, 1), at(z, 1)}, {at(y, 3), at(z, 3)}});
                stage_ = B2;
                return claim(view, at(y, 4));
            case B2:
                if (clear(view, {at(y, 5), at(x, 4), at(x, 5), at(z, 4), at(z, 5)}))
                    return finish(view, at(y, 5), {{at(x, 4), at(x, 5)}, {at(z, 4), at(z, 5)}});
                if (clear(view, {at(z, 4), at(y, 3), at(y, 5), at(z, 3), at(z, 5)}))
                    return finish(view, at(z, 4), {{at(y, 3), at(z, 3)}, {at(y, 5), at(z, 5)}});
                stage_ = B3;
                return claim(view, at(y, 3));
            case B3:
                if (clear(view, {at(z, 3)})) return finish(view, at(z, 3), {});
                return finish(view, at(x, 2), {{at(x, 1), at(x, 4)}});
            case C1:
                if (clear(view, {at(y, 1), at(x, 1), at(x, 2), at(z, 1), at(z, 2)}))
                    return finish(view, at(y, 1), {{at(x, 1), at(x, 2)}, {at(z, 1), at(z, 2)}});
                b1_ = *b;
                stage_ = C2;
                return claim(view, at(y, 4));
            case C2: {
                if (clear(view, {at(y, 5), at(x, 4), at(x, 5), at(z, 4), at(z, 5)}))
                    return finish(view, at(y, 5), {{at(x, 4), at(x, 5)}, {at(z, 4), at(z, 5)}});
                b2_ = *b;
                if (b1_ != at(y, 1))
                    side_ = 0;
                else if (b2_ != at(y, 5))
                    side_ = 1;
                else {
                    stage_ = C4;
                    return claim(view, at(x, 3));
                }
                const int hit = side_ == 0 ? b1_ : b2_;
                pair_clean_square(side_, hit);
                t_ = other_in_row(side_, hit);
                stage_ = C3;
                return claim(view, at(y, end_col(side_)));
            }
            case C3: {
                if (clear(view, {t_})) {
                    stage_ = Done;
                    return claim(view, t_);
                }
                const int other = 1 - side_;
                const int hit = other == 0 ? b1_ : b2_;
                stage_ = Done;
                if (hit != at(y, end_col(other))) {
                    pair_clean_square(other, hit);
                    return claim(view, at(y, end_col(other)));
                }
                pairs_.push_back({at(x, 3), at(x, end_col(other))});
                return claim(view, at(x, inner_col(other)));
            }
            case C4: {
                const int col = col_of(*b);
                if (row_of(*b) == x && (col == 1 || col == 2)) {
                    side_ = 1;
                } else if (row_of(*b) == x && (col == 4 || col == 5)) {
                    side_ = 0;
                } else {
                    return finish(view, at(x, 2), {{at(x, 1), at(x, 4)}});
                }
                t_ = at(x, end_col(side_));
                stage_ = C5;
                return claim(view, at(x, inner_col(side_)));
            }
            case C5:
                if (clear(view, {t_})) {
                    stage_ = Done;
                    return claim(view, t_);
                }
                return finish(view, at(z, inner_col(side_)), {{at(z, 3), at(z, end_col(side_))}});
            default:
                return spare(view, -1);
        }
    }
};

struct Tile {
    std::array<VertexId, kTileSize> ids{};
};

// Shared by the single-tile strategy and the tiling.
class TiledPlans {
public:
    explicit TiledPlans(std::vector<Tile> tiles) : tiles_(std::move(tiles)), plans_(tiles_.size()) {
        for (std::size_t t = 0; t < tiles_.size(); ++t)
            for (int k = 0; k < kTileSize; ++k) where_[tiles_[t].ids[k]] = {t, k};
    }

    struct Choice {
        VertexId move;
        int tile = -1;
        G35Plan plan;
    };

    Choice choose(const GameState& state) const {
        if (last_breaker_) {
            auto it = where_.find(*last_breaker_);
            if (it != where_.end()) {
                const auto [t, k] = it->second;
                auto [move, next] = plans_[t].step(view(state, t), k);
                if (move >= 0) return {tiles_[t].ids[move], static_cast<int>(t), next};
            }
        }
        // Breaker played outside or in a full tile: move in the tile with
        // the fewest claimed vertices.
        int best = -1;
        std::size_t best_claimed = 0;
        for (std::size_t t = 0; t < tiles_.size(); ++t) {
            const auto v = view(state, t);
            const auto claimed = static_cast<std::size_t>(__builtin_popcount(v.maker | v.breaker));
            if (claimed == kTileSize) continue;
            if (best < 0 || claimed < best_claimed) {
                best = static_cast<int>(t);
                best_claimed = claimed;
            }
        }
        if (best >= 0) {
            auto [move, next] = plans_[best].step(view(state, best), std::nullopt);
            return {tiles_[best].ids[move], best, next};
        }
        return {lowest_unclaimed(state), -1, {}};
    }

    void observe(const GameState& before, VertexId v, Player who) {
        if (who == Player::Breaker) {
            last_breaker_ = v;
            return;
        }
        const auto c = choose(before);
        if (c.move == v && c.tile >= 0) plans_[c.tile] = c.plan;
        last_breaker_.reset();
    }

    std::string key() const {
        std::string out = last_breaker_ ? std::to_string(*last_breaker_) : "-";
        for (const auto& p : plans_) out += '|' + p.key();
        return out;
    }

private:
    TileView view(const GameState& state, std::size_t t) const {
        TileView out;
        for (int k = 0; k < kTileSize; ++k) {
            const VertexId v = tiles_[t].ids[k];
            if (state.maker().test(v)) out.maker |= Mask(1u << k);
            if (state.breaker().test(v)) out.breaker |= Mask(1u << k);
        }
        return out;
    }

    std::vector<Tile> tiles_;
    std::vector<G35Plan> plans_;
    std::map<VertexId, std::pair<std::size_t, int>> where_;
    std::optional<VertexId> last_breaker_;
};

class TiledStrategy final : public Strategy {
public:
    TiledStrategy(std::string name, std::vector<Tile> tiles) : name_(std::move(name)), plans_(std::move(tiles)) {}
    std::string name() const override { return name_; }
    VertexId next_move(const GameState& state) const override { return plans_.choose(state).move; }
    void observe(const GameState& before, VertexId v, Player who) override { plans_.observe(before, v, who); }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<TiledStrategy>(*this); }
    std::string state_key() const override { return plans_.key(); }

private:
    std::string name_;
    TiledPlans plans_;
};

}  // namespace

std::unique_ptr<Strategy> strategy_g35(Player first) {
    (void)first;  // a first Maker move is simply a spare
    Tile tile;
    for (int k = 0; k < kTileSize; ++k) tile.ids[k] = static_cast<VertexId>(k);
    return std::make_unique<TiledStrategy>("g35", std::vector<Tile>{tile});
}

std::unique_ptr<Strategy> strategy_square_tiling_s3(const GameHypergraph& hg) {
    if (hg.family() != FamilyTag::Square) throw GameError(ErrorCode::InvalidArgument, "square board required");
    const auto size = board_size(hg);
    const LatticeIndex index(hg);
    std::vector<Tile> tiles;
    for (int ty = 0; ty + kTileH <= size.height; ty += kTileH)
        for (int tx = 0; tx + kTileW <= size.width; tx += kTileW) {
            Tile tile;
            for (int r = 0; r < kTileH; ++r)
                for (int c = 0; c < kTileW; ++c) tile.ids[r * kTileW + c] = *index.find(tx + c, ty + r);
            tiles.push_back(tile);
        }
    if (tiles.empty()) throw GameError(ErrorCode::DimensionTooSmall, "no 5x3 tile fits on the board");
    return std::make_unique<TiledStrategy>("square-tiling-s3", std::move(tiles));
}

}  // namespace sofk
