#include "sofk/grids.hpp"

#include <algorithm>
#include <set>

namespace sofk {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw GameError(ErrorCode::DimensionTooSmall, what);
}

WinningSet make_set(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    return WinningSet{std::move(vs), false};
}

std::vector<Coord> lattice_coords(const std::vector<LatticePoint>& pts) {
    std::vector<Coord> out;
    out.reserve(pts.size());
    for (auto p : pts) out.push_back(Coord{Rational(p.x), Rational(p.y)});
    return out;
}

std::vector<LatticePoint> rect_points(int w, int h) {
    std::vector<LatticePoint> pts;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) pts.push_back({x, y});
    return pts;
}

}  // namespace

GameHypergraph gen_triangular(const GridSpec& spec) {
    const int w = spec.width, h = spec.height;
    require(w >= 2 && h >= 2, "triangular grid needs width, height >= 2");
    auto id = [w](int x, int y) { return static_cast<VertexId>(y * w + x); };
    std::vector<WinningSet> sets;
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x + 1 < w; ++x) {
            sets.push_back(make_set({id(x, y), id(x + 1, y), id(x, y + 1)}));
            sets.push_back(make_set({id(x + 1, y), id(x, y + 1), id(x + 1, y + 1)}));
        }
    return classify_interior(GameHypergraph(static_cast<std::size_t>(w * h), 3, std::move(sets),
                                            FamilyTag::Triangular, lattice_coords(rect_points(w, h))));
}

GameHypergraph gen_square(const GridSpec& spec) {
    const int w = spec.width, h = spec.height;
    require(w >= 2 && h >= 2, "square grid needs width, height >= 2");
    auto id = [w](int x, int y) { return static_cast<VertexId>(y * w + x); };
    std::vector<WinningSet> sets;
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x + 1 < w; ++x)
            sets.push_back(make_set({id(x, y), id(x + 1, y), id(x, y + 1), id(x + 1, y + 1)}));
    return classify_interior(GameHypergraph(static_cast<std::size_t>(w * h), 4, std::move(sets), FamilyTag::Square,
                                            lattice_coords(rect_points(w, h))));
}

GameHypergraph gen_rhombus(const GridSpec& spec) {
    const int w = spec.width, h = spec.height;
    require(w >= 2 && h >= 2, "rhombus grid needs width, height >= 2");
    auto id = [w](int x, int y) { return static_cast<VertexId>(y * w + x); };
    auto inside = [w, h](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h; };
    // Every lattice edge is shared by one upward and one downward triangle;
    // the rhombus of an edge is their union.
    std::vector<WinningSet> sets;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            // horizontal edge (x,y)-(x+1,y): apexes (x,y+1) and (x+1,y-1)
            if (inside(x + 1, y) && inside(x, y + 1) && inside(x + 1, y - 1))
                sets.push_back(make_set({id(x, y), id(x + 1, y), id(x, y + 1), id(x + 1, y - 1)}));
            // vertical edge (x,y)-(x,y+1): apexes (x+1,y) and (x-1,y+1)
            if (inside(x, y + 1) && inside(x + 1, y) && inside(x - 1, y + 1))
                sets.push_back(make_set({id(x, y), id(x, y + 1), id(x + 1, y), id(x - 1, y + 1)}));
            // diagonal edge (x+1,y)-(x,y+1): apexes (x,y) and (x+1,y+1)
            if (inside(x + 1, y + 1))
                sets.push_back(make_set({id(x + 1, y), id(x, y + 1), id(x, y), id(x + 1, y + 1)}));
        }
    return classify_interior(GameHypergraph(static_cast<std::size_t>(w * h), 4, std::move(sets), FamilyTag::Rhombus,
                                            lattice_coords(rect_points(w, h))));
}

std::vector<LatticePoint> hex_corners(HexCell cell) {
    const int i = 2 * cell.q + cell.r;
    const int j = cell.r;
    return {{i, j}, {i + 1, j}, {i + 2, j}, {i, j + 1}, {i + 1, j + 1}, {i + 2, j + 1}};
}

HexCell hex_cell_of(const std::vector<LatticePoint>& corners) {
    int min_i = corners.front().x, min_j = corners.front().y;
    for (auto p : corners) {
        min_i = std::min(min_i, p.x);
        min_j = std::min(min_j, p.y);
    }
    return HexCell{(min_i - min_j) / 2, min_j};
}

std::vector<LatticePoint> honeycomb_neighbors(LatticePoint p) {
    const bool up = ((p.x + p.y) % 2 + 2) % 2 == 0;
    return {{p.x - 1, p.y}, {p.x + 1, p.y}, {p.x, up ? p.y + 1 : p.y - 1}};
}

GameHypergraph gen_hexagonal(const GridSpec& spec) {
    const int w = spec.width, h = spec.height;
    require(w >= 1 && h >= 1, "hexagonal grid needs at least one cell in each direction");
    // Cell (r, c) has its left brick column at 2c + (r mod 2); in axial terms
    // q = c - floor(r/2).
    std::vector<std::vector<LatticePoint>> cells;
    std::set<std::pair<int, int>> seen;  // (j, i) for row-major order
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const HexCell cell{c - r / 2, r};
            auto corners = hex_corners(cell);
            for (auto p : corners) seen.insert({p.y, p.x});
            cells.push_back(std::move(corners));
        }
    std::map<LatticePoint, VertexId> ids;
    std::vector<LatticePoint> pts;
    for (auto [j, i] : seen) {
        ids[{i, j}] = static_cast<VertexId>(pts.size());
        pts.push_back({i, j});
    }
    std::vector<WinningSet> sets;
    for (const auto& corners : cells) {
        std::vector<VertexId> vs;
        for (auto p : corners) vs.push_back(ids.at(p));
        sets.push_back(make_set(std::move(vs)));
    }
    return classify_interior(
        GameHypergraph(pts.size(), 6, std::move(sets), FamilyTag::Hexagonal, lattice_coords(pts)));
}

GameHypergraph gen_cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<WinningSet> sets;
    for (int i = 0; i < n; ++i)
        sets.push_back(make_set({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)}));
    // Points on a regular polygon are irrational; cycles carry no coords.
    return classify_interior(GameHypergraph(static_cast<std::size_t>(n), 2, std::move(sets), FamilyTag::Cycle));
}

GameHypergraph generate(const GridSpec& spec) {
    switch (spec.family) {
        case FamilyTag::Triangular: return gen_triangular(spec);
        case FamilyTag::Square: return gen_square(spec);
        case FamilyTag::Rhombus: return gen_rhombus(spec);
        case FamilyTag::Hexagonal: return gen_hexagonal(spec);
        case FamilyTag::Cycle: return gen_cycle(spec.width);
        case FamilyTag::Custom: break;
    }
    throw GameError(ErrorCode::InvalidArgument, "no generator for custom hypergraphs");
}

std::size_t full_degree(FamilyTag family) {
    switch (family) {
        case FamilyTag::Triangular: return 6;
        case FamilyTag::Square: return 4;
        case FamilyTag::Rhombus: return 12;
        case FamilyTag::Hexagonal: return 3;
        case FamilyTag::Cycle: return 2;
        case FamilyTag::Custom: return 0;
    }
    return 0;
}

GameHypergraph classify_interior(GameHypergraph hg) {
    std::size_t full = full_degree(hg.family());
    if (full == 0) full = hg.max_degree();
    for (std::size_t i = 0; i < hg.set_count(); ++i) {
        const auto& vs = hg.set(i).vertices;
        const bool interior =
            std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return hg.degree(v) == full; });
        hg.set_interior(i, interior);
    }
    return hg;
}

UniformityStats uniformity_stats(const GameHypergraph& hg) {
    UniformityStats st;
    std::size_t full = full_degree(hg.family());
    if (full == 0) full = hg.max_degree();
    std::map<std::pair<VertexId, VertexId>, std::size_t> pair_counts;
    for (const auto& e : hg.sets())
        for (std::size_t a = 0; a < e.vertices.size(); ++a)
            for (std::size_t b = a + 1; b < e.vertices.size(); ++b) ++pair_counts[{e.vertices[a], e.vertices[b]}];
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
        st.ell = std::max(st.ell, hg.degree(v));
        if (hg.degree(v) == full) st.ell_interior = std::max(st.ell_interior, hg.degree(v));
    }
    for (const auto& [uv, count] : pair_counts) {
        st.q = std::max(st.q, count);
        if (hg.degree(uv.first) == full && hg.degree(uv.second) == full)
            st.q_interior = std::max(st.q_interior, count);
    }
    st.delta = st.ell;
    // Boards too small to have a full-degree vertex fall back to global maxima.
    if (st.ell_interior == 0) st.ell_interior = st.ell;
    if (st.q_interior == 0) st.q_interior = st.q;
    return st;
}

LatticeIndex::LatticeIndex(const GameHypergraph& hg) {
    if (!hg.has_coords()) throw GameError(ErrorCode::InvalidArgument, "hypergraph has no lattice coordinates");
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
        const auto& c = hg.coords()[v];
        if (denominator(c.x) != 1 || denominator(c.y) != 1)
            throw GameError(ErrorCode::InvalidArgument, "coordinates are not integral lattice points");
        LatticePoint p{static_cast<int>(numerator(c.x)), static_cast<int>(numerator(c.y))};
        points_.push_back(p);
        ids_[p] = v;
    }
}

std::optional<VertexId> LatticeIndex::find(int x, int y) const {
    auto it = ids_.find({x, y});
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

}  // namespace sofk
