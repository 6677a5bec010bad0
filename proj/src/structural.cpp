// Structural facts about the named pairings, checked on period-aligned boards.

#include <algorithm>
#include <set>
#include <sstream>

#include "sofk/bounds.hpp"
#include "sofk/strategies.hpp"

namespace sofk {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }
int floordiv(int a, int m) { return (a - mod(a, m)) / m; }

int pairs_inside(const WinningSet& e, const Pairing& p) {
    return (static_cast<int>(e.vertices.size()) - unpaired_within(e, p)) / 2;
}

GameHypergraph keep_sets(const GameHypergraph& hg, const std::vector<std::size_t>& which) {
    std::vector<WinningSet> sets;
    for (auto i : which) sets.push_back(hg.set(i));
    return GameHypergraph(hg.vertex_count(), hg.k(), std::move(sets), hg.family(), hg.coords());
}

int best_response(const GameHypergraph& hg, const std::vector<std::size_t>& which, int s, const Pairing& p) {
    return assignment_best_response(keep_sets(hg, which), s, p).score;
}

std::vector<LatticePoint> points_of(const LatticeIndex& idx, const WinningSet& e) {
    std::vector<LatticePoint> out;
    for (auto v : e.vertices) out.push_back(idx.point(v));
    return out;
}

StructuralCheck tri_s1() {
    const auto hg = gen_triangular({FamilyTag::Triangular, 8, 8});
    const auto p = named_pairing("tri-s1", hg);
    const LatticeIndex idx(hg);
    int bad = 0, even = 0;
    for (const auto& e : hg.sets()) {
        int x = 1 << 20;
        for (auto q : points_of(idx, e)) x = std::min(x, q.x);
        const int want = x % 2 == 0 ? 1 : 0;
        even += want;
        bad += pairs_inside(e, p) != want;
    }
    std::ostringstream d;
    d << even << " even-anchored triangles of " << hg.set_count() << ", mismatches " << bad;
    return {"tri-s1: triangles anchored at even x hold one pair, the rest none", bad == 0, d.str()};
}

StructuralCheck sq_checkerboard() {
    const auto hg = gen_square({FamilyTag::Square, 8, 8});
    const auto p = named_pairing("sq-checkerboard-s1", hg);
    int bad = 0;
    for (const auto& e : hg.sets()) bad += pairs_inside(e, p) != 1;
    std::ostringstream d;
    d << hg.set_count() << " squares, mismatches " << bad;
    return {"sq-checkerboard-s1: every square holds exactly one pair", bad == 0, d.str()};
}

StructuralCheck hex_horizontal() {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 6, 6});
    const auto p = named_pairing("hex-horizontal", hg);
    int bad = 0;
    for (const auto& e : hg.sets()) bad += pairs_inside(e, p) != 2;
    std::ostringstream d;
    d << hg.set_count() << " hexagons, mismatches " << bad;
    return {"hex-horizontal: every hexagon holds exactly two pairs", bad == 0, d.str()};
}

StructuralCheck hex_flower() {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 8, 6});
    const auto p = named_pairing("hex-flower", hg);
    const LatticeIndex idx(hg);
    int bad = 0, centres = 0, interior = 0;
    for (const auto& e : hg.sets()) {
        if (!e.interior) continue;
        ++interior;
        const auto c = hex_cell_of(points_of(idx, e));
        const bool centre = mod(c.q - c.r, 3) == 0;
        centres += centre;
        bad += unpaired_within(e, p) != (centre ? 6 : 0);
    }
    const auto dist = m_distribution(hg, p);
    const bool fractions = dist.interior_fraction(0) == Rational(2, 3) && dist.interior_fraction(6) == Rational(1, 3);
    std::ostringstream d;
    d << interior << " interior hexagons, " << centres << " flower centres, mismatches " << bad << ", m0 "
      << to_string(dist.interior_fraction(0)) << ", m6 " << to_string(dist.interior_fraction(6));
    return {"hex-flower: centres have m = 6, petals m = 0; interior split 1/3 : 2/3", bad == 0 && fractions,
            d.str()};
}

// Sets of hg containing any of the given vertices.
std::vector<std::size_t> sets_through(const GameHypergraph& hg, const std::set<VertexId>& vs) {
    std::set<std::size_t> out;
    for (auto v : vs)
        for (auto i : hg.incident(v)) out.insert(i);
    return {out.begin(), out.end()};
}

// Sets lying inside a vertex set.
std::vector<std::size_t> sets_within(const GameHypergraph& hg, const std::set<VertexId>& vs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hg.set_count(); ++i) {
        const auto& e = hg.set(i).vertices;
        if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return vs.count(v) > 0; })) out.push_back(i);
    }
    return out;
}

// Paired hexagon centres whose full rings lie on the board.
std::vector<std::array<VertexId, 2>> centre_pairs(const GameHypergraph& hg, const LatticeIndex& idx, const Pairing& p) {
    auto whole = [&](VertexId c) {
        const auto q = idx.point(c);
        for (const auto& o : hexagon_ring())
            if (!idx.find(q.x + o.x, q.y + o.y)) return false;
        return true;
    };
    std::vector<std::array<VertexId, 2>> out;
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
        if (!is_hexagon_centre(idx.point(v))) continue;
        const auto w = p.partner(v);
        if (w && v < *w && whole(v) && whole(*w)) out.push_back({v, *w});
    }
    return out;
}

std::set<VertexId> hexagon_of(const LatticeIndex& idx, VertexId c) {
    std::set<VertexId> out{c};
    const auto q = idx.point(c);
    for (const auto& o : hexagon_ring()) out.insert(*idx.find(q.x + o.x, q.y + o.y));
    return out;
}

StructuralCheck tri_s3() {
    const auto hg = gen_triangular({FamilyTag::Triangular, 14, 14});
    const auto p = named_pairing("tri-s3", hg);
    const LatticeIndex idx(hg);
    int checked = 0, bad = 0, worst = 1 << 20;
    for (auto [a, b] : centre_pairs(hg, idx, p)) {
        const int got = best_response(hg, sets_through(hg, {a, b}), 3, p);
        worst = std::min(worst, got);
        ++checked;
        bad += got < 1;
    }
    std::ostringstream d;
    d << checked << " centre pairs, worst full triangles around them " << worst;
    return {"tri-s3: each centre pair yields a full triangle around one centre", bad == 0 && checked > 0, d.str()};
}

StructuralCheck rh_s3() {
    const auto hg = gen_rhombus({FamilyTag::Rhombus, 14, 14});
    const auto p = named_pairing("rh-s3", hg);
    const LatticeIndex idx(hg);
    int checked = 0, bad = 0, worst = 1 << 20;
    for (auto [a, b] : centre_pairs(hg, idx, p)) {
        auto vs = hexagon_of(idx, a);
        const auto vb = hexagon_of(idx, b);
        vs.insert(vb.begin(), vb.end());
        const int got = best_response(hg, sets_within(hg, vs), 3, p);
        worst = std::min(worst, got);
        ++checked;
        bad += got < 3;
    }
    std::ostringstream d;
    d << checked << " hexagon pairs, worst rhombi with three Maker vertices " << worst;
    return {"rh-s3: every hexagon pair gives at least three scoring rhombi", bad == 0 && checked > 0, d.str()};
}

StructuralCheck sq_fractal() {
    const auto hg = gen_square({FamilyTag::Square, 10, 10});
    const auto p = named_pairing("sq-fractal-s3", hg);
    const LatticeIndex idx(hg);
    int checked = 0, bad = 0;
    for (int y = 0; y + 3 < 10; y += 3)
        for (int x = 0; x + 3 < 10; x += 3) {
            // the four unit squares on the middle of each block side
            std::vector<std::size_t> sides;
            for (std::size_t i = 0; i < hg.set_count(); ++i) {
                int mx = 1 << 20, my = 1 << 20;
                for (auto q : points_of(idx, hg.set(i))) {
                    mx = std::min(mx, q.x);
                    my = std::min(my, q.y);
                }
                const int dx = mx - x, dy = my - y;
                if ((dx == 1 && (dy == 0 || dy == 2)) || (dy == 1 && (dx == 0 || dx == 2))) sides.push_back(i);
            }
            ++checked;
            bad += best_response(hg, sides, 3, p) < 1;
        }
    std::ostringstream d;
    d << checked << " level-1 blocks, failures " << bad;
    return {"sq-fractal-s3: each level-1 block has a side square with three Maker vertices", bad == 0, d.str()};
}

// Hexagonal torus spanned by axial (a, 0) and (b, c): a*c cells, 2*a*c vertices.
StructuralCheck hex_triplet_torus(int a, int b, int c) {
    const int w = 2 * a;
    auto id = [&](LatticePoint p) {
        const int k = floordiv(p.y, c);
        const int y = p.y - k * c;
        const int x = mod(p.x - k * (2 * b + c), w);
        return static_cast<VertexId>(y * w + x);
    };
    std::vector<WinningSet> sets;
    for (int r = 0; r < c; ++r)
        for (int q = 0; q < a; ++q) {
            WinningSet e;
            for (auto corner : hex_corners(HexCell{q, r})) e.vertices.push_back(id(corner));
            std::sort(e.vertices.begin(), e.vertices.end());
            sets.push_back(std::move(e));
        }
    const auto n = static_cast<std::size_t>(w * c);
    const GameHypergraph hg(n, 6, std::move(sets));
    std::vector<Pairing::Pair> pairs;
    for (int y = 0; y < c; ++y)
        for (int x = 0; x < w; ++x) {
            const auto u = id({x, y}), v = id(triplet_partner({x, y}));
            if (u < v) pairs.push_back({u, v});
        }
    const Pairing p(n, std::move(pairs));
    const int got = assignment_best_response(hg, 4, p).score;
    std::ostringstream name, d;
    name << "hex-triplet-s4: torus (" << a << ',' << b << ',' << c << ") scores at least a tenth of its hexagons";
    d << got << " of " << a * c << " hexagons";
    return {name.str(), got * 10 >= a * c, d.str()};
}

}  // namespace

std::vector<StructuralCheck> structural_checks() {
    return {tri_s1(),     sq_checkerboard(), hex_horizontal(), hex_flower(), tri_s3(), rh_s3(), sq_fractal(),
            hex_triplet_torus(10, -4, 2), hex_triplet_torus(5, -8, 4), hex_triplet_torus(5, 2, 4)};
}

}  // namespace sofk
