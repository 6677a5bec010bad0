#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "sofk/grids.hpp"
#include "sofk/io.hpp"

using namespace sofk;

namespace {

void expect_same(const GameHypergraph& a, const GameHypergraph& b) {
    EXPECT_EQ(a.vertex_count(), b.vertex_count());
    EXPECT_EQ(a.k(), b.k());
    EXPECT_EQ(a.family(), b.family());
    ASSERT_EQ(a.set_count(), b.set_count());
    for (std::size_t i = 0; i < a.set_count(); ++i) {
        EXPECT_EQ(a.set(i).vertices, b.set(i).vertices);
        EXPECT_EQ(a.set(i).interior, b.set(i).interior);
    }
    ASSERT_EQ(a.coords().size(), b.coords().size());
    for (std::size_t v = 0; v < a.coords().size(); ++v) {
        EXPECT_EQ(a.coords()[v].x, b.coords()[v].x);
        EXPECT_EQ(a.coords()[v].y, b.coords()[v].y);
    }
}

ErrorCode parse_code(const std::string& text) {
    try {
        parse_hypergraph(text);
    } catch (const GameError& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Io, RoundTripGeneratedBoards) {
    for (auto f : {FamilyTag::Triangular, FamilyTag::Square, FamilyTag::Rhombus, FamilyTag::Hexagonal}) {
        const auto hg = generate({f, 5, 4});
        expect_same(hg, parse_hypergraph(format_hypergraph(hg)));
    }
    const auto c = gen_cycle(9);
    expect_same(c, parse_hypergraph(format_hypergraph(c)));
}

TEST(Io, FileRoundTrip) {
    const auto path = (std::filesystem::temp_directory_path() / "sofk_io_test.hg").string();
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 3, 2});
    write_hypergraph_file(path, hg);
    expect_same(hg, read_hypergraph_file(path));
    std::remove(path.c_str());
    EXPECT_THROW(read_hypergraph_file("/nonexistent/dir/x.hg"), GameError);
}

TEST(Io, CommentsAndRationalCoords) {
    const auto hg = parse_hypergraph("# header\nk 2\nvertices 2\nset 1 0  # reversed\ncoord 0 1/2 0\ncoord 1 -3 7/4\n");
    EXPECT_EQ(hg.set(0).vertices, (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(hg.coords()[0].x, Rational(1, 2));
    EXPECT_EQ(hg.coords()[1].y, Rational(7, 4));
}

TEST(Io, ParseErrors) {
    EXPECT_EQ(parse_code("vertices 3\nset 0 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nset 0 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nvertices 3\nset 0 x\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nvertices 3\nbogus\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nvertices 2\nset 0 1\ncoord 0 0 0\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nvertices 2\nset 0 1\ninterior 3\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nvertices 2\nfamily weird\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("k 2\nvertices 2\nset 0 5\n"), ErrorCode::InvalidHypergraph);
}

TEST(Io, LineNumbersInMessages) {
    try {
        parse_hypergraph("k 2\nvertices 2\n\nset 0 q\n");
        FAIL();
    } catch (const GameError& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
}
