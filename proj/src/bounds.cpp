#include "sofk/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "sofk/solver.hpp"

namespace sofk {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    cpp_int out = 1;
    for (int j = 1; j <= r; ++j) out = out * (n - r + j) / j;
    return out;
}

Rational pow2_inv(int e) { return Rational(cpp_int(1), cpp_int(1) << e); }

Rational r(long long num, long long den = 1) { return Rational(cpp_int(num), cpp_int(den)); }

using Coeffs = std::map<int, std::map<int, Rational>>;

Coeffs make_coeffs(std::initializer_list<std::pair<int, std::map<int, Rational>>> rows) {
    Coeffs out;
    for (const auto& [s, row] : rows) out[s] = row;
    return out;
}

LpSolution solve_with(const std::map<int, Rational>& p, const Rational& c) {
    std::vector<int> idx;
    for (const auto& kv : p) idx.push_back(kv.first);
    std::optional<LpSolution> best;
    std::vector<int> best_support;
    auto consider = [&](LpSolution cand, std::vector<int> support) {
        if (!best || cand.z > best->z || (cand.z == best->z && support < best_support)) {
            best = std::move(cand);
            best_support = std::move(support);
        }
    };
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const int i = idx[a];
        if (Rational(i) >= c) {
            LpSolution sol;
            sol.z = p.at(i);
            sol.m[i] = 1;
            consider(sol, {i});
        }
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const int j = idx[b];
            if (!(Rational(i) < c && c < Rational(j))) continue;
            const Rational mj = (c - i) / (j - i);
            const Rational mi = 1 - mj;
            LpSolution sol;
            sol.m[i] = mi;
            sol.m[j] = mj;
            sol.z = mi * p.at(i) + mj * p.at(j);
            consider(sol, {i, j});
        }
    }
    if (!best) throw GameError(ErrorCode::Infeasible, "linear program has no feasible support");
    return *best;
}

}  // namespace

std::string to_string(const Rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return GameError(ErrorCode::ParseError, "not a rational: '" + text + "'"); };
    auto parse_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) throw bad();
        std::size_t start = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start == part.size()) throw bad();
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return cpp_int(part[0] == '+' ? part.substr(1) : part);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, true));
    const cpp_int num = parse_int(text.substr(0, slash), true);
    const cpp_int den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw GameError(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::vector<int> lp_index_set(int k) {
    if (k < 1) throw GameError(ErrorCode::InvalidArgument, "k must be positive");
    std::vector<int> out;
    for (int i = k % 2; i <= k; i += 2) out.push_back(i);
    return out;
}

Rational binomial_tail(int k, int s, int i) {
    if (k < 1 || s < 1 || s > k) throw GameError(ErrorCode::InvalidThreshold, "need 1 <= s <= k");
    if (i < 0 || i > k) throw GameError(ErrorCode::InvalidArgument, "index out of range");
    if ((k - i) % 2 != 0) throw GameError(ErrorCode::IndexParity, "k - i must be even");
    const int need = s - (k - i) / 2;
    cpp_int count = 0;
    for (int j = std::max(need, 0); j <= i; ++j) count += binom(i, j);
    return Rational(count, cpp_int(1) << i);
}

Rational LpInstance::constraint() const {
    if (ell <= 0) throw GameError(ErrorCode::InvalidArgument, "ell must be positive");
    return Rational(cpp_int(k) * (ell - q), cpp_int(ell));
}

std::map<int, Rational> LpInstance::coefficients() const {
    std::map<int, Rational> out;
    for (int i : lp_index_set(k)) out[i] = binomial_tail(k, s, i);
    return out;
}

LpSolution lp_upper_bound(const LpInstance& inst) {
    if (inst.s < 1 || inst.s > inst.k) throw GameError(ErrorCode::InvalidThreshold, "need 1 <= s <= k");
    if (inst.q < 0 || inst.q > inst.ell) throw GameError(ErrorCode::InvalidArgument, "need 0 <= q <= ell");
    return solve_with(inst.coefficients(), inst.constraint());
}

EsBounds es_bounds(long long n, int k) {
    if (n < 1 || k < 1) throw GameError(ErrorCode::InvalidArgument, "need n >= 1 and k >= 1");
    const Rational unit = pow2_inv(k);
    return {Rational(n) * unit, Rational(n) * (1 - unit)};
}

DualityReport duality_check(const GameHypergraph& hg, int s) {
    const int k = static_cast<int>(hg.k());
    SolveConfig cfg;
    cfg.principal_variation = false;
    DualityReport out;
    out.lhs = solve_exact(hg, Threshold(s, k), Player::Maker, cfg).score;
    out.rhs = static_cast<int>(hg.set_count()) - solve_exact(hg, Threshold(k - s + 1, k), Player::Maker, cfg).score;
    out.gap = std::abs(out.lhs - out.rhs);
    out.delta = static_cast<int>(hg.max_degree());
    return out;
}

std::map<int, Rational> published_bounds(FamilyTag family) {
    switch (family) {
        case FamilyTag::Triangular:
            return {{1, r(15, 16)}, {2, r(1, 2)}, {3, r(1, 8)}};
        case FamilyTag::Square:
            return {{1, r(1)}, {2, r(3, 4)}, {3, r(5, 16)}, {4, r(1, 16)}};
        case FamilyTag::Rhombus:
            return {{1, r(23, 24)}, {2, r(71, 96)}, {3, r(5, 16)}, {4, r(1, 16)}};
        case FamilyTag::Hexagonal:
            return {{1, r(1)}, {2, r(1)}, {3, r(85, 96)}, {4, r(11, 32)}, {5, r(7, 64)}, {6, r(1, 64)}};
        default:
            return {};
    }
}

std::map<int, std::map<int, Rational>> published_coefficients(FamilyTag family) {
    switch (family) {
        case FamilyTag::Triangular:
            return make_coeffs({{1, {{1, r(1)}, {3, r(7, 8)}}}, {2, {{1, r(1, 2)}, {3, r(1, 2)}}}, {3, {{3, r(1, 8)}}}});
        case FamilyTag::Square:
        case FamilyTag::Rhombus:
            return make_coeffs({{1, {{0, r(1)}, {2, r(1)}, {4, r(15, 16)}}},
                                {2, {{0, r(1)}, {2, r(3, 4)}, {4, r(1, 2)}}},
                                {3, {{2, r(1, 4)}, {4, r(5, 16)}}},
                                {4, {{4, r(1, 16)}}}});
        case FamilyTag::Hexagonal:
            return make_coeffs({{1, {{0, r(1)}, {2, r(1)}, {4, r(1)}, {6, r(63, 64)}}},
                                {2, {{0, r(1)}, {2, r(1)}, {4, r(15, 16)}, {6, r(57, 64)}}},
                                {3, {{0, r(1)}, {2, r(3, 4)}, {4, r(11, 16)}, {6, r(21, 32)}}},
                                {4, {{2, r(1, 4)}, {4, r(5, 16)}, {6, r(11, 32)}}},
                                {5, {{4, r(1, 16)}, {6, r(7, 64)}}},
                                {6, {{6, r(1, 64)}}}});
        default:
            return {};
    }
}

TableReport table2_report(const GridSpec& spec) {
    const auto hg = generate(spec);
    TableReport report;
    report.family = spec.family;
    report.stats = uniformity_stats(hg);
    const int k = static_cast<int>(hg.k());
    const int ell = static_cast<int>(report.stats.ell_interior);
    const int q = static_cast<int>(report.stats.q_interior);
    const auto bounds = published_bounds(spec.family);
    const auto coeffs = published_coefficients(spec.family);
    for (int s = 1; s <= k; ++s) {
        TableRow row;
        row.s = s;
        LpInstance inst{k, s, ell, q};
        row.coefficients = inst.coefficients();
        row.solution = lp_upper_bound(inst);
        if (auto it = bounds.find(s); it != bounds.end()) {
            row.published = it->second;
            row.matches = row.solution.z == it->second;
            for (int alt = 0; alt <= ell; ++alt) {
                LpInstance other{k, s, ell, alt};
                if (lp_upper_bound(other).z == it->second) row.consistent_q.push_back(alt);
            }
        }
        if (auto it = coeffs.find(s); it != coeffs.end()) {
            std::map<int, Rational> published;
            for (const auto& [i, p] : row.coefficients) {
                auto found = it->second.find(i);
                published[i] = found == it->second.end() ? Rational(0) : found->second;
                if (published[i] != p) row.coefficient_mismatches.push_back(i);
            }
            row.z_with_published_coefficients = solve_with(published, inst.constraint()).z;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_table(const TableReport& report) {
    std::ostringstream out;
    out << "family " << to_string(report.family) << "  ell=" << report.stats.ell_interior
        << " q=" << report.stats.q_interior << '\n';
    for (const auto& row : report.rows) {
        out << "s=" << row.s << "  objective:";
        for (const auto& [i, p] : row.coefficients) out << ' ' << to_string(p) << "*m" << i;
        out << "\n     z=" << to_string(row.solution.z) << "  witness:";
        for (const auto& [i, m] : row.solution.m) out << " m" << i << '=' << to_string(m);
        if (row.published) {
            out << "\n     published=" << to_string(*row.published) << (row.matches ? "  match" : "  MISMATCH");
            if (!row.matches) {
                out << "  (q reproducing it:";
                if (row.consistent_q.empty()) out << " none";
                for (int q : row.consistent_q) out << ' ' << q;
                out << ')';
            }
        }
        if (!row.coefficient_mismatches.empty()) {
            out << "\n     published coefficients differ at i =";
            for (int i : row.coefficient_mismatches) out << ' ' << i;
            if (row.z_with_published_coefficients)
                out << "; z with them = " << to_string(*row.z_with_published_coefficients);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_table_csv(const TableReport& report) {
    std::ostringstream out;
    out << "family,s,z_num,z_den,expected_num,expected_den,match\n";
    for (const auto& row : report.rows) {
        out << to_string(report.family) << ',' << row.s << ',' << boost::multiprecision::numerator(row.solution.z)
            << ',' << boost::multiprecision::denominator(row.solution.z) << ',';
        if (row.published)
            out << boost::multiprecision::numerator(*row.published) << ','
                << boost::multiprecision::denominator(*row.published) << ',' << (row.matches ? "true" : "false");
        else
            out << ",,";
        out << '\n';
    }
    return out.str();
}

}  // namespace sofk
