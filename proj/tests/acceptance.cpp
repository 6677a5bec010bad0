// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sofk/bounds.hpp"
#include "sofk/grids.hpp"
#include "sofk/guarantees.hpp"
#include "sofk/pairing.hpp"
#include "sofk/solver.hpp"
#include "sofk/strategies.hpp"

using namespace sofk;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using boost::multiprecision::cpp_int;

long long ceil_of(const Rational& r) {
    const cpp_int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    cpp_int q = n / d;
    if (q * d != n && n > 0) q += 1;
    return q.convert_to<long long>();
}

long long floor_of(const Rational& r) {
    const cpp_int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    cpp_int q = n / d;
    if (q * d != n && n < 0) q -= 1;
    return q.convert_to<long long>();
}

const char* side(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

void c1(Outcome& o) {
    const auto hg = gen_cycle(14);
    const int game = solve_exact(hg, Threshold(2, 2), Player::Maker).score;
    const auto search = exhaustive_pairing_search(hg, 2, PairingScope::Perfect);
    const int witness = assignment_best_response(hg, 2, search.witness).score;
    o.detail << "game " << game << ", best perfect pairing " << search.best_score << " (witness " << witness << ", "
             << search.pairings_examined << " pairings)";
    o.require(game == 3, "game value 3");
    o.require(search.best_score == 2 && witness == 2 && search.witness.is_perfect(), "pairing value 2");
}

void c2(Outcome& o) {
    const auto hg = gen_square({FamilyTag::Square, 5, 3});
    for (auto first : {Player::Maker, Player::Breaker}) {
        const int exact = solve_exact(hg, Threshold(3, 4), first).score;
        const auto st = strategy_g35(first);
        const int vs = best_breaker_vs_strategy(hg, Threshold(3, 4), *st, first).score;
        o.detail << side(first) << " first: game " << exact << ", strategy " << vs << "; ";
        o.require(exact >= 2 && vs >= 2, std::string("two sets with ") + side(first) + " first");
    }
}

void c3(Outcome& o) {
    auto z = [](const TableReport& t, int s) { return t.rows.at(static_cast<std::size_t>(s - 1)).solution.z; };
    const auto tri = table2_report({FamilyTag::Triangular, 10, 10});
    const auto sq = table2_report({FamilyTag::Square, 10, 10});
    const auto rh = table2_report({FamilyTag::Rhombus, 10, 10});
    const auto hex = table2_report({FamilyTag::Hexagonal, 10, 10});
    o.require(z(tri, 1) == Rational(15, 16) && z(tri, 2) == Rational(1, 2) && z(tri, 3) == Rational(1, 8),
              "triangular row");
    o.require(z(sq, 1) == 1 && z(sq, 3) == Rational(5, 16) && z(sq, 4) == Rational(1, 16), "square s=1,3,4");
    o.require(z(rh, 3) == Rational(5, 16) && z(rh, 4) == Rational(1, 16), "rhombus s=3,4");
    const Rational hex_want[] = {1, 1, Rational(85, 96), Rational(11, 32), Rational(7, 64), Rational(1, 64)};
    for (int s = 1; s <= 6; ++s) o.require(z(hex, s) == hex_want[s - 1], "hexagonal s=" + std::to_string(s));
    for (const auto* t : {&sq, &rh}) {
        const auto& row = t->rows.at(1);
        const bool flagged = !row.matches && row.coefficient_mismatches == std::vector<int>{4} &&
                             row.coefficients.at(4) == Rational(11, 16);
        o.require(flagged, std::string(to_string(t->family)) + " s=2 flagged at coefficient 4");
        o.detail << to_string(t->family) << " s=2 z " << to_string(row.solution.z) << " (published "
                 << (row.published ? to_string(*row.published) : "-") << ", flagged " << (flagged ? "yes" : "no")
                 << "); ";
    }
    o.detail << "rhombus q " << rh.stats.q_interior << ": s=1 " << to_string(z(rh, 1)) << " vs "
             << to_string(*rh.rows[0].published) << (rh.rows[0].matches ? " match" : " differ") << ", s=3 "
             << to_string(z(rh, 3)) << ", s=4 " << to_string(z(rh, 4));
}

void c4(Outcome& o) {
    for (auto [w, h] : {std::pair{4, 4}, {5, 4}, {6, 4}}) {
        const auto hg = gen_triangular({FamilyTag::Triangular, w, h});
        const Rational phi = initial_potential(hg);
        Rational inc = 0;  // largest potential gain of a single opening Maker move
        for (VertexId v = 0; v < hg.vertex_count(); ++v)
            inc = std::max(inc, Rational(static_cast<long long>(hg.incident(v).size()), 8));
        const long long n = static_cast<long long>(hg.set_count());
        const auto breaker = potential_strategy(hg, {Player::Breaker, PotentialTarget::FullClaim});
        const int full_b = best_maker_vs_strategy(hg, Threshold(3, 3), *breaker, Player::Breaker).score;
        const int full_m = best_maker_vs_strategy(hg, Threshold(3, 3), *breaker, Player::Maker).score;
        const auto maker = potential_strategy(hg, {Player::Maker, PotentialTarget::Touch});
        const int touch = best_breaker_vs_strategy(hg, Threshold(1, 3), *maker, Player::Maker).score;
        o.detail << w << 'x' << h << " n " << n << " phi " << to_string(phi) << ": full " << full_b << '/' << full_m
                 << " touch " << touch << "; ";
        o.require(full_b <= ceil_of(phi), "s=3 Breaker first within ceil(phi)");
        o.require(full_m <= floor_of(phi + inc), "s=3 Maker first within floor(phi + opening gain)");
        o.require(touch >= n - floor_of(phi), "s=1 within n - floor(phi)");
    }
}

std::vector<GameHypergraph> small_instances(std::size_t max_v) {
    std::vector<GameHypergraph> out;
    for (int n = 3; n <= static_cast<int>(max_v); ++n) out.push_back(gen_cycle(n));
    for (auto f : {FamilyTag::Triangular, FamilyTag::Square, FamilyTag::Rhombus, FamilyTag::Hexagonal})
        for (int w = 1; w <= 9; ++w)
            for (int h = 1; h <= 9; ++h) {
                try {
                    auto hg = generate({f, w, h});
                    if (hg.vertex_count() <= max_v) out.push_back(std::move(hg));
                } catch (const GameError&) {
                }
            }
    return out;
}

void c5(Outcome& o) {
    int validated = 0, checked = 0, worst_slack = 1 << 20;
    for (const auto& hg : small_instances(12))
        for (int s = 1; s <= static_cast<int>(hg.k()); ++s) {
            ++validated;
            o.require(solve_exact(hg, Threshold(s, hg.k()), Player::Maker).score ==
                          solve_plain_minimax(hg, Threshold(s, hg.k()), Player::Maker).score,
                      "solver agrees with enumeration");
        }
    for (const auto& hg : small_instances(18))
        for (int s = 1; s <= static_cast<int>(hg.k()); ++s) {
            const auto r = duality_check(hg, s);
            ++checked;
            worst_slack = std::min(worst_slack, r.delta - r.gap);
            o.require(r.gap <= r.delta, "gap within max degree");
        }
    o.detail << validated << " (instance, s) validated by enumeration, " << checked
             << " duality checks, smallest margin " << worst_slack;
}

void c6(Outcome& o) {
    const auto hg = gen_hexagonal({FamilyTag::Hexagonal, 5, 5});
    const auto p = pairing_hexagonal(hg, HexPattern::Horizontal);
    AssignmentOptions opts;
    opts.interior_only = true;
    const long long n_int = m_distribution(hg, p).n_interior;
    o.detail << "n_int " << n_int << ':';
    for (int s : {1, 2}) {
        const auto r = assignment_best_response(hg, s, p, opts);
        o.detail << " s=" << s << ' ' << r.score;
        o.require(r.exact && r.score == n_int, "all interior hexagons at s=" + std::to_string(s));
    }
    for (int s : {5, 6}) {
        // Breaker pairing: Maker keeps at most 6 - (7 - s) vertices per hexagon.
        const auto r = assignment_best_response(hg, 7 - s, p, opts);
        const long long dual = n_int - r.score;
        o.detail << " dual s=" << s << ' ' << dual;
        o.require(r.exact && dual == 0, "dual zero at s=" + std::to_string(s));
    }
}

void c7(Outcome& o) {
    const GridSpec spec{FamilyTag::Hexagonal, 5, 4};
    const auto c = check_guarantee("hex-flower", spec, 3, Rational(3, 4));
    o.detail << describe(c) << "; ";
    o.require(c.exact && c.relevant_pairs <= kExactPairBudget, "exact evaluation");
    o.require(c.passed, "score >= ceil(3 n_int / 4) - slack");
    const auto hg = generate(spec);
    const auto p = pairing_hexagonal(hg, HexPattern::Flower);
    const auto mc = monte_carlo_expectation(hg, 3, p, 10000, 2024);
    const double want = 85.0 / 96.0 * static_cast<double>(mc.n_interior);
    o.detail << "MC mean " << mc.mean << " se " << mc.std_error << " vs " << want;
    o.require(std::abs(mc.mean - want) <= 3 * mc.std_error, "Monte Carlo within 3 SE");
}

void c8(Outcome& o) {
    int ok = 0;
    const auto checks = structural_checks();
    for (const auto& c : checks) {
        ok += c.passed;
        o.require(c.passed, c.name + " (" + c.detail + ")");
    }
    o.detail << ok << '/' << checks.size() << " structural checks";
}

void c9(Outcome& o) {
    int exact = 0, heuristic = 0;
    auto record = [&](const GuaranteeCheck& c) {
        (c.exact ? exact : heuristic) += 1;
        o.detail << "\n    " << describe(c);
        o.require(c.passed, c.pattern + (c.torus ? " torus" : " patch"));
    };
    for (const auto& c : pairing_rate_checks(1)) record(c);
    for (const auto& c : pairing_rate_torus_checks(1)) record(c);
    o.detail << "\n    " << exact << " exact, " << heuristic << " heuristic";
}

void c10(Outcome& o) {
    std::mt19937_64 rng(20240601);
    int done = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + rng() % 10;  // 3..12
        const std::size_t k = 1 + rng() % std::min<std::size_t>(4, n);
        const std::size_t m = 1 + rng() % 8;
        std::set<std::vector<VertexId>> distinct;
        std::vector<VertexId> all(n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexId>(v);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<VertexId> e(all.begin(), all.begin() + static_cast<long>(k));
            std::sort(e.begin(), e.end());
            distinct.insert(e);
        }
        std::vector<WinningSet> sets;
        for (const auto& e : distinct) sets.push_back({e});
        const GameHypergraph hg(n, k, std::move(sets));
        const int ks = static_cast<int>(k);
        std::vector<int> value(k + 2, 0);
        for (auto first : {Player::Maker, Player::Breaker})
            for (int s = 1; s <= ks; ++s) {
                const int a = solve_exact(hg, Threshold(s, k), first).score;
                const int b = solve_plain_minimax(hg, Threshold(s, k), first).score;
                o.require(a == b, "solve_exact equals enumeration");
                if (first == Player::Maker) value[static_cast<std::size_t>(s)] = a;
            }
        for (int s = 2; s <= ks; ++s) o.require(value[s] <= value[s - 1], "monotone in s");
        const int n_sets = static_cast<int>(hg.set_count());
        for (int s = 1; s <= ks; ++s)
            o.require(std::abs(value[s] + value[ks - s + 1] - n_sets) <= static_cast<int>(hg.max_degree()),
                      "duality within max degree");
        ++done;
    }
    o.detail << done << " random hypergraphs";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"cycle C14 game 3, pairing 2", c1},
        {"3x5 square board, s=3, two sets either way", c2},
        {"upper-bound table", c3},
        {"potential bounds on triangular patches", c4},
        {"duality on small generated boards", c5},
        {"hexagon horizontal pairing rows", c6},
        {"flower pairing", c7},
        {"pattern structure", c8},
        {"pairing rates on patches and tori", c9},
        {"solver fuzz", c10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.passed;
        std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << " - " << criteria[i].first
                  << " (" << secs << " s): " << o.detail.str() << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
