// Generators for the lattice board families and their structural statistics.
//
// Triangular and rhombus boards live on the sheared triangular lattice: vertex
// (x, y) has neighbours (x+-1, y), (x, y+-1), (x+1, y-1) and (x-1, y+1).
// Hexagonal boards use brick-wall coordinates (i, j): horizontal neighbours
// (i+-1, j) always, and a vertical neighbour (i, j+1) when i+j is even or
// (i, j-1) when i+j is odd. Every generator stores those integer lattice
// coordinates as the vertex coords and numbers vertices row-major.

#pragma once

#include <map>
#include <optional>
#include <utility>

#include "sofk/core.hpp"

namespace sofk {

struct GridSpec {
    FamilyTag family = FamilyTag::Square;
    int width = 2;   // vertex columns (cells for hexagonal, length for cycle)
    int height = 2;  // vertex rows (cells for hexagonal, ignored for cycle)
};

struct UniformityStats {
    std::size_t ell = 0;
    std::size_t q = 0;
    std::size_t delta = 0;
    std::size_t ell_interior = 0;
    std::size_t q_interior = 0;
};

GameHypergraph gen_triangular(const GridSpec& spec);
GameHypergraph gen_square(const GridSpec& spec);
GameHypergraph gen_rhombus(const GridSpec& spec);
GameHypergraph gen_hexagonal(const GridSpec& spec);
GameHypergraph gen_cycle(int n);

// Dispatches on spec.family; Custom is rejected.
GameHypergraph generate(const GridSpec& spec);

// Degree of a vertex far from the boundary of the family's infinite board.
std::size_t full_degree(FamilyTag family);

UniformityStats uniformity_stats(const GameHypergraph& hg);

// Marks a set interior iff each of its vertices has the family's full degree.
GameHypergraph classify_interior(GameHypergraph hg);

// Integer lattice position of a vertex, read back from the stored coords.
struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Bidirectional map between vertex ids and lattice points of a generated board.
class LatticeIndex {
public:
    explicit LatticeIndex(const GameHypergraph& hg);

    LatticePoint point(VertexId v) const { return points_[v]; }
    std::optional<VertexId> find(int x, int y) const;
    std::optional<VertexId> find(LatticePoint p) const { return find(p.x, p.y); }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<LatticePoint> points_;
    std::map<LatticePoint, VertexId> ids_;
};

// Cell of a hexagonal board in axial coordinates (q, r): row r, and the cell's
// left brick column is i = 2q + r.
struct HexCell {
    int q = 0;
    int r = 0;
    friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

// The six brick-wall corners of a hexagonal cell, bottom row first.
std::vector<LatticePoint> hex_corners(HexCell cell);

// Axial cell of the hexagonal winning set with the given corners.
HexCell hex_cell_of(const std::vector<LatticePoint>& corners);

// Neighbours of a brick-wall vertex in the honeycomb (always three).
std::vector<LatticePoint> honeycomb_neighbors(LatticePoint p);

}  // namespace sofk
