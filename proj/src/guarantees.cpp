#include "sofk/guarantees.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sofk/bounds.hpp"
#include "sofk/strategies.hpp"

namespace sofk {

namespace {

long long ceil_of(const Rational& r) {
    const boost::multiprecision::cpp_int n = numerator(r), d = denominator(r);
    boost::multiprecision::cpp_int q = n / d;
    if (q * d < n) ++q;
    return static_cast<long long>(q);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

AssignmentOutcome evaluate(const GameHypergraph& hg, int s, const Pairing& p, AssignmentOptions opts) {
    try {
        return assignment_best_response(hg, s, p, opts);
    } catch (const GameError& e) {
        if (e.code() != ErrorCode::CapacityExceeded) throw;
        opts.mode = AssignmentMode::Heuristic;
        return assignment_best_response(hg, s, p, opts);
    }
}

}  // namespace

int boundary_slack(const GameHypergraph& hg, const Pairing& p) {
    std::vector<bool> inside(hg.vertex_count(), false);
    for (const auto& e : hg.sets())
        if (e.interior)
            for (auto v : e.vertices) inside[v] = true;
    // endpoints of boundary pairs, plus unpaired vertices of the interior
    std::vector<bool> loose(hg.vertex_count(), false);
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
        if (!inside[v]) continue;
        const auto w = p.partner(v);
        loose[v] = !w || !inside[*w];
    }
    int slack = 0;
    for (const auto& e : hg.sets()) {
        if (!e.interior) continue;
        for (auto v : e.vertices)
            if (loose[v]) {
                ++slack;
                break;
            }
    }
    return slack;
}

GuaranteeCheck check_guarantee(const std::string& pattern, const GridSpec& spec, int s, const Rational& rate,
                               std::uint64_t seed, int iterations) {
    const auto hg = generate(spec);
    const auto p = named_pairing(pattern, hg);
    GuaranteeCheck c;
    c.pattern = pattern;
    c.spec = spec;
    c.s = s;
    c.rate = rate;
    c.n_int = static_cast<long long>(hg.interior_count());
    AssignmentOptions opts;
    opts.interior_only = true;
    opts.seed = seed;
    opts.iterations = iterations;
    const auto out = evaluate(hg, s, p, opts);
    c.score = out.score;
    c.exact = out.exact;
    c.relevant_pairs = out.relevant_pairs;
    c.slack = boundary_slack(hg, p);
    c.required = ceil_of(rate * c.n_int) - c.slack;
    c.passed = c.score >= c.required;
    return c;
}


GuaranteeCheck check_torus(const std::string& pattern, int s, const Rational& rate, int periods_w, int periods_h,
                           std::uint64_t seed, int iterations) {
    const auto period = pairing_period(pattern);
    if (period.offset_w != 0 || period.offset_h != 0)
        throw GameError(ErrorCode::InvalidArgument, pattern + " is not a plain periodic pattern");
    // Torus translations in lattice coordinates; a hexagonal board period of
    // (w cells, h rows) with h even is the brick translation (2w, 0), (0, h).
    const bool hex = period.family == FamilyTag::Hexagonal;
    const int pw = period.w * periods_w, ph = period.h * periods_h;
    if (hex && ph % 2 != 0) throw GameError(ErrorCode::PeriodMismatch, "hexagonal torus needs an even row count");
    const int tx = hex ? 2 * pw : pw, ty = ph;
    const auto big = generate({period.family, 3 * pw, 3 * ph});
    const auto bp = named_pairing(pattern, big);
    const LatticeIndex idx(big);
    auto torus_id = [&](LatticePoint q) { return static_cast<VertexId>(mod(q.y, ty) * tx + mod(q.x, tx)); };
    auto central = [&](LatticePoint q) { return q.x >= tx && q.x < 2 * tx && q.y >= ty && q.y < 2 * ty; };

    std::set<std::vector<VertexId>> seen;
    std::vector<WinningSet> sets;
    for (const auto& e : big.sets()) {
        WinningSet t;
        t.interior = true;
        for (auto v : e.vertices) t.vertices.push_back(torus_id(idx.point(v)));
        std::sort(t.vertices.begin(), t.vertices.end());
        if (std::adjacent_find(t.vertices.begin(), t.vertices.end()) != t.vertices.end())
            throw GameError(ErrorCode::DimensionTooSmall, "torus too small: a set wraps onto itself");
        if (seen.insert(t.vertices).second) sets.push_back(std::move(t));
    }
    const auto n = static_cast<std::size_t>(tx * ty);
    std::vector<Pairing::Pair> pairs;
    for (VertexId v = 0; v < big.vertex_count(); ++v) {
        const auto q = idx.point(v);
        if (!central(q)) continue;
        const auto w = bp.partner(v);
        if (!w) throw GameError(ErrorCode::InvalidPairing, pattern + " leaves an inner vertex unpaired");
        const VertexId a = torus_id(q), b = torus_id(idx.point(*w));
        if (a < b) pairs.push_back({a, b});
    }
    const GameHypergraph torus(n, big.k(), std::move(sets), FamilyTag::Custom);
    const Pairing p(n, std::move(pairs));

    GuaranteeCheck c;
    c.pattern = pattern;
    c.spec = {period.family, pw, ph};
    c.s = s;
    c.rate = rate;
    c.torus = true;
    c.n_int = static_cast<long long>(torus.set_count());
    AssignmentOptions opts;
    opts.seed = seed;
    opts.iterations = iterations;
    const auto out = evaluate(torus, s, p, opts);
    c.score = out.score;
    c.exact = out.exact;
    c.relevant_pairs = out.relevant_pairs;
    c.required = ceil_of(rate * c.n_int);
    c.passed = c.score >= c.required;
    return c;
}

std::vector<GuaranteeCheck> pairing_rate_checks(std::uint64_t seed) {
    using F = FamilyTag;
    return {
        check_guarantee("tri-s1", {F::Triangular, 6, 6}, 1, Rational(3, 4), seed),
        check_guarantee("tri-s2", {F::Triangular, 6, 6}, 2, Rational(3, 8), seed),
        check_guarantee("sq-s2", {F::Square, 6, 6}, 2, Rational(2, 3), seed),
        check_guarantee("rh-s1", {F::Rhombus, 8, 8}, 1, Rational(11, 12), seed),
        check_guarantee("rh-s2", {F::Rhombus, 6, 6}, 2, Rational(19, 36), seed),
        check_guarantee("rh-s3", {F::Rhombus, 14, 14}, 3, Rational(7, 96), seed),
        check_guarantee("hex-triplet-s4", {F::Hexagonal, 10, 10}, 4, Rational(1, 10), seed),
    };
}

std::vector<GuaranteeCheck> pairing_rate_torus_checks(std::uint64_t seed) {
    return {
        check_torus("tri-s1", 1, Rational(3, 4), 3, 6, seed),
        check_torus("tri-s2", 2, Rational(3, 8), 3, 6, seed),
        check_torus("sq-s2", 2, Rational(2, 3), 3, 6, seed),
        check_torus("rh-s1", 1, Rational(11, 12), 1, 1, seed),
        check_torus("rh-s2", 2, Rational(19, 36), 3, 6, seed),
        check_torus("rh-s3", 3, Rational(7, 96), 2, 1, seed),
        check_torus("hex-triplet-s4", 4, Rational(1, 10), 1, 1, seed),
    };
}

std::string describe(const GuaranteeCheck& c) {
    std::ostringstream out;
    out << c.pattern << " on " << (c.torus ? "torus " : "") << to_string(c.spec.family) << ' ' << c.spec.width << 'x'
        << c.spec.height << " s=" << c.s << ": score " << c.score << " of " << (c.torus ? "n " : "n_int ") << c.n_int
        << " (" << (c.exact ? "exact" : "heuristic") << ", " << c.relevant_pairs << " relevant pairs), needs ceil("
        << to_string(c.rate) << (c.torus ? " n)" : " n_int) - slack ") ;
    if (!c.torus) out << c.slack;
    out << " = " << c.required;
    return out.str();
}

}  // namespace sofk
