#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sofk/strategies.hpp"

namespace sofk {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int floordiv(int a, int m) { return (a - mod(a, m)) / m; }

using PartnerRule = std::function<std::optional<LatticePoint>(LatticePoint)>;

void require_family(const GameHypergraph& hg, FamilyTag family) {
    if (hg.family() != family)
        throw GameError(ErrorCode::InvalidArgument,
                        std::string("pattern needs a ") + to_string(family) + " board, got " + to_string(hg.family()));
}

void require_period(const GameHypergraph& hg, const PatternPeriod& p, const char* what) {
    const auto size = board_size(hg);
    if (mod(size.width, p.w) != p.offset_w || mod(size.height, p.h) != p.offset_h)
        throw GameError(ErrorCode::PeriodMismatch, std::string(what) + ": board " + std::to_string(size.width) + "x" +
                                                       std::to_string(size.height) + " does not fit the period " +
                                                       std::to_string(p.w) + "x" + std::to_string(p.h));
}

// Applies a plane rule to every board vertex; a pair is kept when both ends
// exist. The rule must be an involution, which is checked.
std::vector<Pairing::Pair> apply_rule(const GameHypergraph& hg, const PartnerRule& rule) {
    const LatticeIndex index(hg);
    std::vector<Pairing::Pair> pairs;
    for (VertexId v = 0; v < index.size(); ++v) {
        const auto p = index.point(v);
        const auto q = rule(p);
        if (!q) continue;
        const auto back = rule(*q);
        if (!back || *back != p)
            throw GameError(ErrorCode::InvalidPairing, "pattern rule is not symmetric at (" + std::to_string(p.x) +
                                                           "," + std::to_string(p.y) + ")");
        const auto w = index.find(*q);
        if (w && v < *w) pairs.push_back({v, *w});
    }
    return pairs;
}

std::optional<LatticePoint> horizontal_even(LatticePoint p) {
    return LatticePoint{mod(p.x, 2) == 0 ? p.x + 1 : p.x - 1, p.y};
}

// Vertical pairs starting on rows with y = x (mod 2): each unit square holds
// exactly one of them.
std::optional<LatticePoint> checkerboard(LatticePoint p) {
    return LatticePoint{p.x, mod(p.y - p.x, 2) == 0 ? p.y + 1 : p.y - 1};
}

// Rhombus s = 1: a 4x4 cell found by exhaustive search over lattice-edge
// matchings of a 4x4 torus. Entries are (x, y, x2, y2).
constexpr int kRhombusCell[8][4] = {{0, 0, 1, 0}, {2, 0, 1, 1}, {3, 0, 4, -1}, {0, 1, -1, 2},
                                    {2, 1, 3, 1}, {0, 2, 1, 2}, {2, 2, 1, 3}, {2, 3, 3, 3}};

std::optional<LatticePoint> rhombus_cell(LatticePoint p) {
    static const auto table = [] {
        std::map<std::pair<int, int>, std::pair<int, int>> t;
        for (const auto& e : kRhombusCell) {
            t[{mod(e[0], 4), mod(e[1], 4)}] = {e[2] - e[0], e[3] - e[1]};
            t[{mod(e[2], 4), mod(e[3], 4)}] = {e[0] - e[2], e[1] - e[3]};
        }
        return t;
    }();
    const auto& d = table.at({mod(p.x, 4), mod(p.y, 4)});
    return LatticePoint{p.x + d.first, p.y + d.second};
}

constexpr std::array<LatticePoint, 6> kRing = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
constexpr int kRingPartner[6] = {3, 5, 4, 0, 2, 1};

std::optional<LatticePoint> hexagon_design(LatticePoint p) {
    if (is_hexagon_centre(p)) return std::nullopt;
    for (int k = 0; k < 6; ++k) {
        const LatticePoint c{p.x - kRing[k].x, p.y - kRing[k].y};
        if (!is_hexagon_centre(c)) continue;
        const auto& o = kRing[kRingPartner[k]];
        return LatticePoint{c.x + o.x, c.y + o.y};
    }
    return std::nullopt;  // unreachable: the centres tile the lattice
}

// Centres get paired among themselves in reading order.
Pairing hexagon_design_pairing(const GameHypergraph& hg) {
    auto pairs = apply_rule(hg, hexagon_design);
    const LatticeIndex index(hg);
    std::vector<VertexId> centres;
    for (VertexId v = 0; v < index.size(); ++v)
        if (is_hexagon_centre(index.point(v))) centres.push_back(v);
    for (std::size_t i = 0; i + 1 < centres.size(); i += 2) pairs.push_back({centres[i], centres[i + 1]});
    return Pairing(hg.vertex_count(), std::move(pairs));
}

// Honeycomb patterns, brick-wall coordinates.
std::optional<LatticePoint> hex_vertical(LatticePoint p) {
    return LatticePoint{p.x, mod(p.x + p.y, 2) == 0 ? p.y + 1 : p.y - 1};
}

std::optional<LatticePoint> hex_zigzag(LatticePoint p) {
    return LatticePoint{mod(p.x + p.y, 2) == 0 ? p.x + 1 : p.x - 1, p.y};
}

// The three cells around a brick vertex.
std::vector<HexCell> cells_at(LatticePoint p) {
    std::vector<HexCell> out;
    for (int r : {p.y - 1, p.y})
        for (int i = p.x - 2; i <= p.x; ++i)
            if (mod(i - r, 2) == 0) out.push_back({(i - r) / 2, r});
    return out;
}

std::optional<LatticePoint> hex_flower(LatticePoint p) {
    for (auto cell : cells_at(p)) {
        if (mod(cell.q - cell.r, 3) != 0) continue;
        const auto corners = hex_corners(cell);
        for (auto n : honeycomb_neighbors(p))
            if (std::find(corners.begin(), corners.end(), n) == corners.end()) return n;
    }
    return std::nullopt;
}

// Hexagon s = 4: ten pairs repeating along axial (5, 0) and (-4, 2), found by
// annealing against the exact assignment adversary on several tori.
constexpr int kTripletCell[10][4] = {{0, 0, 3, 1}, {1, 1, -1, 0}, {3, 0, 0, -3}, {4, 0, 6, 3},  {5, 1, 2, 2},
                                     {6, 0, 2, 0}, {7, 0, 10, 3}, {7, 1, 5, 0}, {9, 1, 8, 3}, {10, 1, 11, 0}};

std::array<int, 3> triplet_class(LatticePoint p) {
    const int t = mod(p.x - p.y, 2);
    int q = (p.x - p.y - t) / 2;
    int r = p.y;
    const int k = floordiv(r, 2);
    q += 4 * k;
    r -= 2 * k;
    return {mod(q, 5), r, t};
}

std::optional<LatticePoint> hex_triplet(LatticePoint p) {
    static const auto table = [] {
        std::map<std::array<int, 3>, std::pair<int, int>> t;
        for (const auto& e : kTripletCell) {
            t[triplet_class({e[0], e[1]})] = {e[2] - e[0], e[3] - e[1]};
            t[triplet_class({e[2], e[3]})] = {e[0] - e[2], e[1] - e[3]};
        }
        return t;
    }();
    const auto& d = table.at(triplet_class(p));
    return LatticePoint{p.x + d.first, p.y + d.second};
}

// One level of the recursive square pattern, on the sublattice of spacing u:
// middle pairs on every block edge plus the two diagonals inside each block.
void fractal_level(const LatticeIndex& index, int w, int h, int u, int level, std::vector<Pairing::Pair>& pairs,
                   std::vector<int>& levels) {
    auto add = [&](int x1, int y1, int x2, int y2) {
        const auto a = index.find(x1, y1), b = index.find(x2, y2);
        if (!a || !b) return;
        pairs.push_back({std::min(*a, *b), std::max(*a, *b)});
        levels.push_back(level);
    };
    const int block = 3 * u;
    for (int y = 0; y < h; y += block)
        for (int x = 0; x < w; x += block) {
            add(x + u, y, x + 2 * u, y);  // edge middles
            add(x, y + u, x, y + 2 * u);
            if (x + block < w && y + block < h) {
                add(x + u, y + u, x + 2 * u, y + 2 * u);
                add(x + 2 * u, y + u, x + u, y + 2 * u);
            }
        }
}

}  // namespace

LatticePoint triplet_partner(LatticePoint brick) { return *hex_triplet(brick); }

bool is_hexagon_centre(LatticePoint p) { return mod(p.x + 3 * p.y, 7) == 0; }

const std::array<LatticePoint, 6>& hexagon_ring() { return kRing; }

BoardSize board_size(const GameHypergraph& hg) {
    if (hg.family() == FamilyTag::Hexagonal) {
        std::set<int> rows;
        int row0 = 0;
        const LatticeIndex index(hg);
        for (const auto& e : hg.sets()) {
            std::vector<LatticePoint> corners;
            for (auto v : e.vertices) corners.push_back(index.point(v));
            const auto cell = hex_cell_of(corners);
            rows.insert(cell.r);
            if (cell.r == 0) ++row0;
        }
        return {row0, static_cast<int>(rows.size())};
    }
    if (!hg.has_coords()) throw GameError(ErrorCode::InvalidArgument, "board has no coordinates");
    const LatticeIndex index(hg);
    int w = 0, h = 0;
    for (VertexId v = 0; v < index.size(); ++v) {
        w = std::max(w, index.point(v).x + 1);
        h = std::max(h, index.point(v).y + 1);
    }
    return {w, h};
}

const std::vector<std::string>& pairing_names() {
    static const std::vector<std::string> names = {
        "tri-s1", "tri-s2", "tri-s3", "sq-checkerboard-s1", "sq-s2", "sq-fractal-s3", "rh-s1",
        "rh-s2",  "rh-s3",  "hex-horizontal", "hex-zigzag", "hex-flower", "hex-triplet-s4"};
    return names;
}

PatternPeriod pairing_period(const std::string& name) {
    using F = FamilyTag;
    static const std::map<std::string, PatternPeriod> periods = {
        {"tri-s1", {F::Triangular, 2, 1}},
        {"tri-s2", {F::Triangular, 2, 1}},
        {"tri-s3", {F::Triangular, 7, 7}},
        {"sq-checkerboard-s1", {F::Square, 2, 2}},
        {"sq-s2", {F::Square, 2, 1}},
        {"sq-fractal-s3", {F::Square, 3, 3, 1, 1}},
        {"rh-s1", {F::Rhombus, 4, 4}},
        {"rh-s2", {F::Rhombus, 2, 1}},
        {"rh-s3", {F::Rhombus, 7, 7}},
        {"hex-horizontal", {F::Hexagonal, 1, 1}},
        {"hex-zigzag", {F::Hexagonal, 1, 1}},
        {"hex-flower", {F::Hexagonal, 3, 2, 2, 0}},  // interior spans whole periods
        // axial (-4, 2) moves the offset columns by -3, so rows repeat after 10
        {"hex-triplet-s4", {F::Hexagonal, 5, 10}},
    };
    auto it = periods.find(name);
    if (it == periods.end()) throw GameError(ErrorCode::InvalidArgument, "unknown pairing '" + name + "'");
    return it->second;
}

Pairing pairing_triangular(const GameHypergraph& hg, int s) {
    require_family(hg, FamilyTag::Triangular);
    if (s < 1 || s > 3) throw GameError(ErrorCode::InvalidThreshold, "triangular pairings exist for s = 1, 2, 3");
    const std::string name = "tri-s" + std::to_string(s);
    require_period(hg, pairing_period(name), name.c_str());
    if (s == 3) return hexagon_design_pairing(hg);
    return Pairing(hg.vertex_count(), apply_rule(hg, horizontal_even));
}

Pairing pairing_square(const GameHypergraph& hg, SquarePattern pattern) {
    require_family(hg, FamilyTag::Square);
    switch (pattern) {
        case SquarePattern::CheckerboardS1:
            require_period(hg, pairing_period("sq-checkerboard-s1"), "sq-checkerboard-s1");
            return Pairing(hg.vertex_count(), apply_rule(hg, checkerboard));
        case SquarePattern::S2:
            require_period(hg, pairing_period("sq-s2"), "sq-s2");
            return Pairing(hg.vertex_count(), apply_rule(hg, horizontal_even));
        case SquarePattern::FractalS3:
            return fractal_pairing(hg).pairing;
    }
    throw GameError(ErrorCode::InvalidArgument, "unknown square pattern");
}

LeveledPairing fractal_pairing(const GameHypergraph& hg) {
    require_family(hg, FamilyTag::Square);
    require_period(hg, pairing_period("sq-fractal-s3"), "sq-fractal-s3");
    const auto size = board_size(hg);
    const LatticeIndex index(hg);
    std::vector<Pairing::Pair> pairs;
    std::vector<int> levels;
    int u = 1, level = 0;
    while ((size.width - 1) % (3 * u) == 0 && (size.height - 1) % (3 * u) == 0) {
        ++level;
        fractal_level(index, size.width, size.height, u, level, pairs, levels);
        u *= 3;
    }
    // Leftover corners of the coarsest level, reading order.
    std::vector<VertexId> rest;
    for (int y = 0; y < size.height; y += u)
        for (int x = 0; x < size.width; x += u) rest.push_back(*index.find(x, y));
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
        pairs.push_back({rest[i], rest[i + 1]});
        levels.push_back(level + 1);
    }
    // Pairing sorts its pairs; carry the levels along.
    std::map<Pairing::Pair, int> by_pair;
    for (std::size_t i = 0; i < pairs.size(); ++i) by_pair[pairs[i]] = levels[i];
    LeveledPairing out{Pairing(hg.vertex_count(), std::move(pairs)), {}, level};
    for (const auto& p : out.pairing.pairs()) out.level.push_back(by_pair.at(p));
    return out;
}

Pairing pairing_rhombus(const GameHypergraph& hg, int s) {
    require_family(hg, FamilyTag::Rhombus);
    if (s < 1 || s > 3) throw GameError(ErrorCode::InvalidThreshold, "rhombus pairings exist for s = 1, 2, 3");
    const std::string name = "rh-s" + std::to_string(s);
    require_period(hg, pairing_period(name), name.c_str());
    if (s == 1) return Pairing(hg.vertex_count(), apply_rule(hg, rhombus_cell));
    if (s == 2) return Pairing(hg.vertex_count(), apply_rule(hg, horizontal_even));
    return hexagon_design_pairing(hg);
}

Pairing pairing_hexagonal(const GameHypergraph& hg, HexPattern pattern) {
    require_family(hg, FamilyTag::Hexagonal);
    switch (pattern) {
        case HexPattern::Horizontal:
            return Pairing(hg.vertex_count(), apply_rule(hg, hex_vertical));
        case HexPattern::ZigZag:
            return Pairing(hg.vertex_count(), apply_rule(hg, hex_zigzag));
        case HexPattern::Flower:
            require_period(hg, pairing_period("hex-flower"), "hex-flower");
            return Pairing(hg.vertex_count(), apply_rule(hg, hex_flower));
        case HexPattern::TripletS4:
            require_period(hg, pairing_period("hex-triplet-s4"), "hex-triplet-s4");
            return Pairing(hg.vertex_count(), apply_rule(hg, hex_triplet));
    }
    throw GameError(ErrorCode::InvalidArgument, "unknown hexagonal pattern");
}

Pairing named_pairing(const std::string& name, const GameHypergraph& hg) {
    if (name == "tri-s1") return pairing_triangular(hg, 1);
    if (name == "tri-s2") return pairing_triangular(hg, 2);
    if (name == "tri-s3") return pairing_triangular(hg, 3);
    if (name == "sq-checkerboard-s1") return pairing_square(hg, SquarePattern::CheckerboardS1);
    if (name == "sq-s2") return pairing_square(hg, SquarePattern::S2);
    if (name == "sq-fractal-s3") return pairing_square(hg, SquarePattern::FractalS3);
    if (name == "rh-s1") return pairing_rhombus(hg, 1);
    if (name == "rh-s2") return pairing_rhombus(hg, 2);
    if (name == "rh-s3") return pairing_rhombus(hg, 3);
    if (name == "hex-horizontal") return pairing_hexagonal(hg, HexPattern::Horizontal);
    if (name == "hex-zigzag") return pairing_hexagonal(hg, HexPattern::ZigZag);
    if (name == "hex-flower") return pairing_hexagonal(hg, HexPattern::Flower);
    if (name == "hex-triplet-s4") return pairing_hexagonal(hg, HexPattern::TripletS4);
    throw GameError(ErrorCode::InvalidArgument, "unknown pairing '" + name + "'");
}

}  // namespace sofk
