#include "sofk/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "sofk/bounds.hpp"

namespace sofk {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw GameError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace

std::string format_hypergraph(const GameHypergraph& hg) {
    std::ostringstream out;
    out << "k " << hg.k() << '\n';
    out << "vertices " << hg.vertex_count() << '\n';
    out << "family " << to_string(hg.family()) << '\n';
    for (const auto& e : hg.sets()) {
        out << "set";
        for (auto v : e.vertices) out << ' ' << v;
        out << '\n';
    }
    for (std::size_t v = 0; v < hg.coords().size(); ++v)
        out << "coord " << v << ' ' << to_string(hg.coords()[v].x) << ' ' << to_string(hg.coords()[v].y) << '\n';
    for (std::size_t i = 0; i < hg.set_count(); ++i)
        if (hg.set(i).interior) out << "interior " << i << '\n';
    return out.str();
}

GameHypergraph parse_hypergraph(const std::string& text) {
    std::optional<long long> k, n;
    FamilyTag family = FamilyTag::Custom;
    std::vector<WinningSet> sets;
    std::map<long long, Coord> coords;
    std::vector<std::pair<long long, int>> interior;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto& key = tok[0];
        if (key == "k" || key == "vertices") {
            if (tok.size() != 2) fail(line, key + " takes one value");
            const long long v = parse_int(tok[1], line);
            if (v < 0) fail(line, key + " must be non-negative");
            (key == "k" ? k : n) = v;
        } else if (key == "family") {
            if (tok.size() != 2) fail(line, "family takes one value");
            const auto f = parse_family(tok[1]);
            if (!f) fail(line, "unknown family '" + tok[1] + "'");
            family = *f;
        } else if (key == "set") {
            WinningSet e;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const long long v = parse_int(tok[i], line);
                if (v < 0) fail(line, "negative vertex id");
                e.vertices.push_back(static_cast<VertexId>(v));
            }
            std::sort(e.vertices.begin(), e.vertices.end());
            sets.push_back(std::move(e));
        } else if (key == "coord") {
            if (tok.size() != 4) fail(line, "coord takes id x y");
            try {
                coords[parse_int(tok[1], line)] = Coord{parse_rational(tok[2]), parse_rational(tok[3])};
            } catch (const GameError& err) {
                if (err.code() == ErrorCode::ParseError) throw;
                fail(line, err.what());
            } catch (const std::exception&) {
                fail(line, "bad coordinate");
            }
        } else if (key == "interior") {
            if (tok.size() != 2) fail(line, "interior takes a set index");
            interior.push_back({parse_int(tok[1], line), line});
        } else {
            fail(line, "unknown keyword '" + key + "'");
        }
    }
    if (!k) throw GameError(ErrorCode::ParseError, "missing 'k' line");
    if (!n) throw GameError(ErrorCode::ParseError, "missing 'vertices' line");
    std::vector<Coord> coord_list;
    if (!coords.empty()) {
        if (static_cast<long long>(coords.size()) != *n || coords.begin()->first != 0 || coords.rbegin()->first != *n - 1)
            throw GameError(ErrorCode::ParseError, "coords must be given for every vertex or none");
        for (auto& [id, c] : coords) coord_list.push_back(std::move(c));
    }
    for (auto [idx, at] : interior) {
        if (idx < 0 || idx >= static_cast<long long>(sets.size())) fail(at, "interior index out of range");
        sets[static_cast<std::size_t>(idx)].interior = true;
    }
    return GameHypergraph(static_cast<std::size_t>(*n), static_cast<std::size_t>(*k), std::move(sets), family,
                          std::move(coord_list));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GameError(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw GameError(ErrorCode::IoError, "cannot write " + path);
    out << text;
    if (!out) throw GameError(ErrorCode::IoError, "write failed for " + path);
}

GameHypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(read_text_file(path)); }

void write_hypergraph_file(const std::string& path, const GameHypergraph& hg) {
    write_text_file(path, format_hypergraph(hg));
}

}  // namespace sofk
