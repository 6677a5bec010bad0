// Explicit Maker strategies for the lattice boards: fixed pairings, the
// adaptive tile strategies, and the potential-function players.
//
// Every periodic pairing is anchored at the lattice origin. A board must be a
// whole number of periods wide and high; otherwise the constructor throws
// PeriodMismatch instead of truncating the pattern. Pairs whose partner falls
// off the board are dropped, leaving those vertices unpaired.

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sofk/core.hpp"
#include "sofk/grids.hpp"
#include "sofk/pairing.hpp"
#include "sofk/strategy.hpp"

namespace sofk {

// s = 1 and s = 2 share the horizontal pattern; s = 3 is the hexagon design.
Pairing pairing_triangular(const GameHypergraph& hg, int s);

enum class SquarePattern { CheckerboardS1, S2, FractalS3 };
Pairing pairing_square(const GameHypergraph& hg, SquarePattern pattern);

// The recursive s = 3 pairing with the level of every pair (level 1 is the
// finest; leftovers of the last level get level L + 1).
struct LeveledPairing {
    Pairing pairing;
    std::vector<int> level;  // parallel to pairing.pairs()
    int levels = 0;
};
LeveledPairing fractal_pairing(const GameHypergraph& hg);

Pairing pairing_rhombus(const GameHypergraph& hg, int s);

enum class HexPattern { Horizontal, ZigZag, Flower, TripletS4 };
Pairing pairing_hexagonal(const GameHypergraph& hg, HexPattern pattern);

// Board size divisors of a named pattern: width % w == offset_w and
// height % h == offset_h (the fractal pattern needs sizes 3m + 1).
struct PatternPeriod {
    FamilyTag family = FamilyTag::Square;
    int w = 1;
    int h = 1;
    int offset_w = 0;
    int offset_h = 0;
};

// Stable names: tri-s1 tri-s2 tri-s3 sq-checkerboard-s1 sq-s2 sq-fractal-s3
// rh-s1 rh-s2 rh-s3 hex-horizontal hex-zigzag hex-flower hex-triplet-s4.
const std::vector<std::string>& pairing_names();
PatternPeriod pairing_period(const std::string& name);
Pairing named_pairing(const std::string& name, const GameHypergraph& hg);

// Hexagon design shared by tri-s3 and rh-s3: centres where (x + 3y) % 7 == 0.
bool is_hexagon_centre(LatticePoint p);
const std::array<LatticePoint, 6>& hexagon_ring();

// Plane partner of the hexagon s = 4 pattern, in brick coordinates.
LatticePoint triplet_partner(LatticePoint brick);

// Board dimensions recovered from a generated hypergraph (cells for hexagonal).
struct BoardSize {
    int width = 0;
    int height = 0;
};
BoardSize board_size(const GameHypergraph& hg);

// ---------------------------------------------------------------------------
// Adaptive strategies.

// The 3x5 square board case analysis for s = 3, on gen_square({5, 3}). Works
// for either first player: a Maker move made before Breaker has moved is kept
// aside as a spare and never hurts the plan.
std::unique_ptr<Strategy> strategy_g35(Player first = Player::Breaker);

// Disjoint 5x3 tiles anchored at multiples of (5, 3); each runs the case
// analysis above.
std::unique_ptr<Strategy> strategy_square_tiling_s3(const GameHypergraph& hg);

// 13-vertex stars (centre, six neighbours, six tips) tiling the lattice with
// centres where (x + 4y) % 13 == 0; one full rhombus per star Maker opens.
std::unique_ptr<Strategy> strategy_rhombus_sixstar_s4(const GameHypergraph& hg);

// Blocks of 2x2 hexagons repeating along axial (3, 0) and (1, 2), with two
// shared pairs per block; three adaptive replies per block score a hexagon.
class HexSubgridStrategy;
std::unique_ptr<HexSubgridStrategy> strategy_hex_subgrid_s4(const GameHypergraph& hg);

enum class PotentialTarget { FullClaim, Touch };

struct PotentialConfig {
    Player role = Player::Breaker;
    PotentialTarget target = PotentialTarget::FullClaim;
};

// Breaker + FullClaim keeps Maker from filling sets; Maker + Touch keeps
// Breaker from filling sets. Other combinations are rejected.
std::unique_ptr<Strategy> potential_strategy(const GameHypergraph& hg, PotentialConfig cfg);

// Sum over sets of 2^-|e|.
Rational initial_potential(const GameHypergraph& hg);

// Names: g35, square-tiling-s3, rhombus-sixstar-s4, hex-subgrid-s4,
// potential-breaker, potential-maker, lowest-id.
const std::vector<std::string>& strategy_names();
std::unique_ptr<Strategy> named_strategy(const std::string& name, const GameHypergraph& hg);

// Record of one adaptive decision on a hexagonal block.
struct SubgridDecision {
    std::size_t block = 0;
    int step = 0;             // 1, 2 or 3
    int candidates = 0;       // candidate vertices for this step
    int free_candidates = 0;  // of those, still unclaimed
    int breaker_claims = 0;   // Breaker vertices in the block outside shared pairs
};

class HexSubgridStrategy final : public Strategy {
public:
    explicit HexSubgridStrategy(const GameHypergraph& hg);
    std::string name() const override { return "hex-subgrid-s4"; }
    VertexId next_move(const GameState& state) const override;
    void observe(const GameState& before, VertexId v, Player who) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<HexSubgridStrategy>(*this); }
    std::string state_key() const override;

    const std::vector<SubgridDecision>& decisions() const { return log_; }
    std::size_t block_count() const;
    const Pairing& shared_pairs() const;

    struct Layout;

private:
    struct Choice {
        VertexId move;
        int block = -1;  // -1: not an adaptive step
        SubgridDecision record;
    };
    Choice choose(const GameState& state) const;

    std::shared_ptr<const Layout> layout_;
    std::vector<int> step_;                 // per block: adaptive steps taken
    std::vector<std::array<int, 2>> made_;  // per block: first two Maker vertices
    std::optional<VertexId> last_breaker_;
    std::vector<SubgridDecision> log_;
};

// ---------------------------------------------------------------------------
// Per-pattern structural checks on period-aligned boards; no play involved.

struct StructuralCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<StructuralCheck> structural_checks();

}  // namespace sofk
