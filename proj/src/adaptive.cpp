// Rhombus six-star and hexagonal 2x2 block strategies for s = 4, and the
// potential-function players.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sofk/strategies.hpp"

namespace sofk {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Squared distance in the triangular lattice.
int tri_dist2(LatticePoint a, LatticePoint b) {
    const int dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dx * dy + dy * dy;
}

LatticePoint add(LatticePoint a, LatticePoint b, LatticePoint c) {  // a + b - c
    return {a.x + b.x - c.x, a.y + b.y - c.y};
}

constexpr std::array<LatticePoint, 6> kNbr = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
constexpr std::array<LatticePoint, 6> kTip = {{{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}}};

// ---------------------------------------------------------------------------

class SixStarStrategy final : public Strategy {
public:
    explicit SixStarStrategy(const GameHypergraph& hg) : index_(std::make_shared<LatticeIndex>(hg)) {
        const auto& idx = *index_;
        for (VertexId v = 0; v < idx.size(); ++v) {
            const auto c = idx.point(v);
            if (mod(c.x + 4 * c.y, 13) != 0) continue;
            Star star;
            star.centre = v;
            bool whole = true;
            for (int k = 0; k < 6; ++k) {
                const auto n = idx.find(c.x + kNbr[k].x, c.y + kNbr[k].y);
                const auto t = idx.find(c.x + kTip[k].x, c.y + kTip[k].y);
                if (!n || !t) whole = false;
                if (n) star.ring[k] = *n;
                if (t) star.tips[k] = *t;
            }
            if (!whole) continue;
            const std::size_t s = stars_.size();
            member_[v] = s;
            for (int k = 0; k < 6; ++k) member_[star.ring[k]] = member_[star.tips[k]] = s;
            stars_.push_back(star);
        }
        plan_.assign(stars_.size(), {});
    }

    std::string name() const override { return "rhombus-sixstar-s4"; }

    VertexId next_move(const GameState& state) const override { return choose(state).move; }

    void observe(const GameState& before, VertexId v, Player who) override {
        if (who == Player::Breaker) {
            last_breaker_ = v;
            return;
        }
        const auto c = choose(before);
        if (c.move == v && c.star >= 0) plan_[c.star] = c.plan;
        last_breaker_.reset();
    }

    std::unique_ptr<Strategy> clone() const override { return std::make_unique<SixStarStrategy>(*this); }

    std::string state_key() const override {
        std::ostringstream out;
        out << (last_breaker_ ? static_cast<long>(*last_breaker_) : -1L);
        for (const auto& p : plan_) out << '|' << p.stage << ',' << p.edge << ',' << p.pair[0] << ',' << p.pair[1];
        return out.str();
    }

private:
    struct Star {
        VertexId centre = 0;
        std::array<VertexId, 6> ring{};
        std::array<VertexId, 6> tips{};
    };
    // stage: 0 untouched, 1 centre, 2 edge, 3 paired, -1 given up
    struct Plan {
        int stage = 0;
        long edge = -1;
        std::array<long, 2> pair{-1, -1};
    };
    struct Choice {
        VertexId move;
        int star = -1;
        Plan plan;
    };

    bool star_has_breaker(const GameState& state, const Star& s) const {
        if (state.breaker().test(s.centre)) return true;
        for (int k = 0; k < 6; ++k)
            if (state.breaker().test(s.ring[k]) || state.breaker().test(s.tips[k])) return true;
        return false;
    }

    Choice free_move(const GameState& state) const {
        for (std::size_t s = 0; s < stars_.size(); ++s) {
            if (plan_[s].stage != 0 || state.is_claimed(stars_[s].centre) || star_has_breaker(state, stars_[s]))
                continue;
            return {stars_[s].centre, static_cast<int>(s), Plan{1, -1, {-1, -1}}};
        }
        return {lowest_unclaimed(state), -1, {}};
    }

    Choice choose(const GameState& state) const {
        if (!last_breaker_) return free_move(state);
        const VertexId b = *last_breaker_;
        auto it = member_.find(b);
        if (it == member_.end()) return free_move(state);
        const std::size_t s = it->second;
        const Star& star = stars_[s];
        Plan plan = plan_[s];
        const auto& idx = *index_;
        switch (plan.stage) {
            case 0:
                plan.stage = -1;  // Breaker opened this star
                {
                    auto c = free_move(state);
                    if (c.star < 0 || static_cast<std::size_t>(c.star) != s) {
                        // record the loss together with the move made elsewhere
                        if (c.star >= 0) return c;
                        return {c.move, static_cast<int>(s), plan};
                    }
                    return c;
                }
            case 1: {
                // neighbour of the centre farthest from Breaker's move
                long best = -1;
                int best_d = -1;
                for (int k = 0; k < 6; ++k) {
                    const VertexId n = star.ring[k];
                    if (state.is_claimed(n)) continue;
                    const int d = tri_dist2(idx.point(n), idx.point(b));
                    if (d > best_d) {
                        best_d = d;
                        best = n;
                    }
                }
                if (best < 0) break;
                plan.stage = 2;
                plan.edge = best;
                return {static_cast<VertexId>(best), static_cast<int>(s), plan};
            }
            case 2: {
                const auto c = idx.point(star.centre), n = idx.point(static_cast<VertexId>(plan.edge));
                long best_a = -1;
                int best_free = 1, best_d = -1;
                std::array<long, 2> best_pair{-1, -1};
                for (int k = 0; k < 6; ++k) {
                    const auto a = idx.point(star.ring[k]);
                    if (tri_dist2(a, n) != 1 || state.is_claimed(star.ring[k])) continue;
                    std::vector<VertexId> ext;
                    for (auto p : {add(c, n, a), add(c, a, n), add(n, a, c)}) {
                        const auto v = idx.find(p);
                        if (v && !state.is_claimed(*v)) ext.push_back(*v);
                    }
                    std::sort(ext.begin(), ext.end());
                    const int d = tri_dist2(a, idx.point(b));
                    const int f = static_cast<int>(std::min<std::size_t>(ext.size(), 2));
                    if (f > best_free || (f == best_free && f >= 2 && d > best_d)) {
                        best_free = f;
                        best_d = d;
                        best_a = star.ring[k];
                        best_pair = {static_cast<long>(ext[0]), static_cast<long>(ext[1])};
                    }
                }
                if (best_a < 0) break;
                plan.stage = 3;
                plan.pair = best_pair;
                return {static_cast<VertexId>(best_a), static_cast<int>(s), plan};
            }
            case 3: {
                const long partner = plan.pair[0] == b ? plan.pair[1] : plan.pair[1] == b ? plan.pair[0] : -1;
                if (partner >= 0 && !state.is_claimed(static_cast<VertexId>(partner)))
                    return {static_cast<VertexId>(partner), static_cast<int>(s), plan};
                break;
            }
            default:
                break;
        }
        return free_move(state);
    }

    std::shared_ptr<const LatticeIndex> index_;
    std::vector<Star> stars_;
    std::map<VertexId, std::size_t> member_;
    std::vector<Plan> plan_;
    std::optional<VertexId> last_breaker_;
};

// ---------------------------------------------------------------------------
// Potential players.

class PotentialStrategy final : public Strategy {
public:
    PotentialStrategy(const GameHypergraph& hg, PotentialConfig cfg) : hg_(&hg), cfg_(cfg) {}
    std::string name() const override {
        return cfg_.role == Player::Breaker ? "potential-breaker" : "potential-maker";
    }

    // Largest drop of the potential: sum of 2^-(unclaimed) over the sets
    // through v that the opponent could still fill.
    VertexId next_move(const GameState& state) const override {
        const auto& blocker = state.claimed_by(cfg_.role);
        const int k = static_cast<int>(hg_->k());
        std::optional<VertexId> best;
        std::uint64_t best_w = 0;
        for (VertexId v = 0; v < hg_->vertex_count(); ++v) {
            if (state.is_claimed(v)) continue;
            std::uint64_t w = 0;
            for (auto e : hg_->incident(v)) {
                const auto& set = hg_->set(e);
                int open = 0;
                bool dead = false;
                for (auto u : set.vertices) {
                    if (blocker.test(u)) dead = true;
                    if (!state.is_claimed(u)) ++open;
                }
                if (!dead) w += std::uint64_t{1} << (k - open);
            }
            if (!best || w > best_w) {
                best = v;
                best_w = w;
            }
        }
        if (!best) throw GameError(ErrorCode::StrategyIllegalMove, "no unclaimed vertex left");
        return *best;
    }

    std::unique_ptr<Strategy> clone() const override { return std::make_unique<PotentialStrategy>(*this); }

private:
    const GameHypergraph* hg_;
    PotentialConfig cfg_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Hexagonal blocks.

struct HexSubgridStrategy::Layout {
    struct Block {
        std::array<VertexId, 2> centres{};
        std::vector<VertexId> plain;                 // vertices outside the shared pairs
        std::array<std::vector<VertexId>, 4> cells;  // plain vertices of each hexagon
    };
    std::vector<Block> blocks;
    std::map<VertexId, std::size_t> block_of;
    Pairing shared;
    std::shared_ptr<const LatticeIndex> index;
};

namespace {

// Block cells relative to the anchor, and the two shared edges of a block.
constexpr std::array<std::array<int, 2>, 4> kBlockCells = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
constexpr std::array<std::array<int, 4>, 2> kSharedEdges = {{{0, 0, 1, 0}, {1, 2, 2, 2}}};

std::shared_ptr<HexSubgridStrategy::Layout> build_layout(const GameHypergraph& hg) {
    if (hg.family() != FamilyTag::Hexagonal) throw GameError(ErrorCode::InvalidArgument, "hexagonal board required");
    auto layout = std::make_shared<HexSubgridStrategy::Layout>();
    layout->index = std::make_shared<LatticeIndex>(hg);
    const auto& idx = *layout->index;
    std::set<HexCell> cells;
    int max_r = 0, min_q = 0, max_q = 0;
    for (const auto& e : hg.sets()) {
        std::vector<LatticePoint> corners;
        for (auto v : e.vertices) corners.push_back(idx.point(v));
        const auto c = hex_cell_of(corners);
        cells.insert(c);
        max_r = std::max(max_r, c.r);
        min_q = std::min(min_q, c.q);
        max_q = std::max(max_q, c.q);
    }
    // Anchors m*(3,0) + n*(1,2), plus the shared edges they carry.
    std::vector<Pairing::Pair> shared;
    std::set<VertexId> in_shared;
    std::vector<std::array<int, 2>> anchors;
    for (int n = -2; 2 * n <= max_r + 2; ++n)
        for (int m = (min_q - n) / 3 - 3; 3 * m + n <= max_q + 3; ++m) {
            const int a = 3 * m + n, b = 2 * n;
            anchors.push_back({a, b});
            const int dx = 2 * a + b, dy = b;
            for (const auto& e : kSharedEdges) {
                const auto u = idx.find(e[0] + dx, e[1] + dy), w = idx.find(e[2] + dx, e[3] + dy);
                if (u && w) {
                    shared.push_back({*u, *w});
                    in_shared.insert(*u);
                    in_shared.insert(*w);
                }
            }
        }
    layout->shared = Pairing(hg.vertex_count(), shared);
    for (auto [a, b] : anchors) {
        bool whole = true;
        for (auto [dq, dr] : kBlockCells) whole = whole && cells.count(HexCell{a + dq, b + dr});
        if (!whole) continue;
        HexSubgridStrategy::Layout::Block block;
        std::set<VertexId> plain;
        for (int c = 0; c < 4; ++c) {
            for (auto p : hex_corners(HexCell{a + kBlockCells[c][0], b + kBlockCells[c][1]})) {
                const VertexId v = *idx.find(p);
                if (in_shared.count(v)) continue;
                block.cells[c].push_back(v);
                plain.insert(v);
            }
        }
        const int i = 2 * a + b;
        block.centres = {*idx.find(i + 2, b + 1), *idx.find(i + 3, b + 1)};
        block.plain.assign(plain.begin(), plain.end());
        const std::size_t id = layout->blocks.size();
        for (auto v : block.plain) layout->block_of[v] = id;
        layout->blocks.push_back(std::move(block));
    }
    return layout;
}

}  // namespace

HexSubgridStrategy::HexSubgridStrategy(const GameHypergraph& hg) : layout_(build_layout(hg)) {
    step_.assign(layout_->blocks.size(), 0);
    made_.assign(layout_->blocks.size(), {-1, -1});
}

std::size_t HexSubgridStrategy::block_count() const { return layout_->blocks.size(); }

const Pairing& HexSubgridStrategy::shared_pairs() const { return layout_->shared; }

HexSubgridStrategy::Choice HexSubgridStrategy::choose(const GameState& state) const {
    const auto& blocks = layout_->blocks;
    auto in_cell = [&](const Layout::Block& blk, int c, VertexId v) {
        const auto& cell = blk.cells[c];
        return std::find(cell.begin(), cell.end(), v) != cell.end();
    };
    auto breaker_in = [&](const Layout::Block& blk) {
        int n = 0;
        for (auto v : blk.plain) n += state.breaker().test(v);
        return n;
    };
    // Plain vertices of the hexagons holding both u and w, minus u and w.
    auto candidates = [&](const Layout::Block& blk, VertexId u, VertexId w) {
        std::vector<VertexId> out;
        for (int c = 0; c < 4; ++c) {
            if (!in_cell(blk, c, u) || !in_cell(blk, c, w)) continue;
            for (auto v : blk.cells[c])
                if (v != u && v != w) out.push_back(v);
        }
        return out;
    };
    auto advance = [&](std::size_t b) -> std::optional<Choice> {
        const auto& blk = blocks[b];
        Choice ch;
        ch.block = static_cast<int>(b);
        ch.record.block = b;
        ch.record.step = step_[b] + 1;
        ch.record.breaker_claims = breaker_in(blk);
        std::optional<VertexId> pick;
        if (step_[b] == 0) {
            ch.record.candidates = 2;
            int best_hits = 1 << 20;
            for (auto c : blk.centres) {
                if (state.is_claimed(c)) continue;
                ++ch.record.free_candidates;
                int hits = 0;
                for (int k = 0; k < 4; ++k)
                    if (in_cell(blk, k, c))
                        for (auto v : blk.cells[k]) hits += state.breaker().test(v);
                if (hits < best_hits) {
                    best_hits = hits;
                    pick = c;
                }
            }
        } else if (step_[b] == 1) {
            const auto m1 = static_cast<VertexId>(made_[b][0]);
            ch.record.candidates = 3;
            int best_free = -1;
            for (auto y : honeycomb_neighbors(layout_->index->point(m1))) {
                const auto v = layout_->index->find(y);
                if (!v || state.is_claimed(*v)) continue;
                ++ch.record.free_candidates;
                int f = 0;
                for (auto w : candidates(blk, m1, *v)) f += !state.is_claimed(w);
                if (f > best_free) {
                    best_free = f;
                    pick = *v;
                }
            }
        } else {
            const auto cand = candidates(blk, static_cast<VertexId>(made_[b][0]), static_cast<VertexId>(made_[b][1]));
            ch.record.candidates = static_cast<int>(cand.size());
            for (auto w : cand) {
                if (state.is_claimed(w)) continue;
                ++ch.record.free_candidates;
                if (!pick || w < *pick) pick = w;
            }
        }
        if (!pick) return std::nullopt;
        ch.move = *pick;
        return ch;
    };
    auto free_move = [&]() -> Choice {
        std::optional<std::size_t> best;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (step_[b] < 3 && (!best || step_[b] < step_[*best])) {
                if (auto c = advance(b)) {
                    if (!best || step_[b] < step_[*best]) best = b;
                }
            }
        if (best) return *advance(*best);
        Choice ch;
        ch.move = lowest_unclaimed(state);
        return ch;
    };

    if (!last_breaker_) return free_move();
    const VertexId b = *last_breaker_;
    if (auto p = layout_->shared.partner(b); p && !state.is_claimed(*p)) {
        Choice ch;
        ch.move = *p;
        return ch;
    }
    if (auto it = layout_->block_of.find(b); it != layout_->block_of.end() && step_[it->second] < 3) {
        if (auto c = advance(it->second)) return *c;
        throw GameError(ErrorCode::StateOffTree, "hexagonal block has no free candidate");
    }
    return free_move();
}

VertexId HexSubgridStrategy::next_move(const GameState& state) const { return choose(state).move; }

void HexSubgridStrategy::observe(const GameState& before, VertexId v, Player who) {
    if (who == Player::Breaker) {
        last_breaker_ = v;
        return;
    }
    const auto c = choose(before);
    if (c.move == v && c.block >= 0) {
        const auto b = static_cast<std::size_t>(c.block);
        if (step_[b] < 2) made_[b][step_[b]] = static_cast<int>(v);
        ++step_[b];
        log_.push_back(c.record);
    }
    last_breaker_.reset();
}

std::string HexSubgridStrategy::state_key() const {
    std::ostringstream out;
    out << (last_breaker_ ? static_cast<long>(*last_breaker_) : -1L);
    for (std::size_t b = 0; b < step_.size(); ++b) out << '|' << step_[b] << ',' << made_[b][0] << ',' << made_[b][1];
    return out.str();
}

// ---------------------------------------------------------------------------

std::unique_ptr<Strategy> strategy_rhombus_sixstar_s4(const GameHypergraph& hg) {
    if (hg.family() != FamilyTag::Rhombus) throw GameError(ErrorCode::InvalidArgument, "rhombus board required");
    return std::make_unique<SixStarStrategy>(hg);
}

std::unique_ptr<HexSubgridStrategy> strategy_hex_subgrid_s4(const GameHypergraph& hg) {
    return std::make_unique<HexSubgridStrategy>(hg);
}

std::unique_ptr<Strategy> potential_strategy(const GameHypergraph& hg, PotentialConfig cfg) {
    const bool ok = (cfg.role == Player::Breaker && cfg.target == PotentialTarget::FullClaim) ||
                    (cfg.role == Player::Maker && cfg.target == PotentialTarget::Touch);
    if (!ok) throw GameError(ErrorCode::InvalidArgument, "potential player needs Breaker+FullClaim or Maker+Touch");
    if (hg.k() > 62) throw GameError(ErrorCode::CapacityExceeded, "set size too large for potential weights");
    return std::make_unique<PotentialStrategy>(hg, cfg);
}

Rational initial_potential(const GameHypergraph& hg) {
    Rational total = 0;
    for (const auto& e : hg.sets())
        total += Rational(boost::multiprecision::cpp_int(1),
                          boost::multiprecision::cpp_int(1) << static_cast<unsigned>(e.vertices.size()));
    return total;
}

const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names = {"g35",       "square-tiling-s3",  "rhombus-sixstar-s4",
                                                   "hex-subgrid-s4", "potential-breaker", "potential-maker",
                                                   "lowest-id"};
    return names;
}

std::unique_ptr<Strategy> named_strategy(const std::string& name, const GameHypergraph& hg) {
    if (name == "g35") {
        if (hg.vertex_count() != 15 || hg.family() != FamilyTag::Square)
            throw GameError(ErrorCode::InvalidArgument, "g35 runs on the 5x3 square board");
        return strategy_g35();
    }
    if (name == "square-tiling-s3") return strategy_square_tiling_s3(hg);
    if (name == "rhombus-sixstar-s4") return strategy_rhombus_sixstar_s4(hg);
    if (name == "hex-subgrid-s4") return strategy_hex_subgrid_s4(hg);
    if (name == "potential-breaker") return potential_strategy(hg, {Player::Breaker, PotentialTarget::FullClaim});
    if (name == "potential-maker") return potential_strategy(hg, {Player::Maker, PotentialTarget::Touch});
    if (name == "lowest-id") return std::make_unique<LowestIdStrategy>();
    throw GameError(ErrorCode::InvalidArgument, "unknown strategy '" + name + "'");
}

}  // namespace sofk
