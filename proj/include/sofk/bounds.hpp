// Exact analytic bounds: binomial tails, the pair-assignment linear program,
// Erdos-Selfridge potential bounds, the Maker/Breaker duality check, and the
// upper-bound table regeneration with the published values as fixtures.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sofk/core.hpp"
#include "sofk/grids.hpp"

namespace sofk {

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Indices i with k - i even, 0 <= i <= k, in increasing order.
std::vector<int> lp_index_set(int k);

// Probability that (k - i)/2 + Bin(i, 1/2) >= s.
Rational binomial_tail(int k, int s, int i);

struct LpInstance {
    int k = 0;
    int s = 0;
    int ell = 0;
    int q = 0;

    Rational constraint() const;  // k (ell - q) / ell
    std::map<int, Rational> coefficients() const;
};

struct LpSolution {
    Rational z;
    std::map<int, Rational> m;  // support only
    std::size_t support_size() const { return m.size(); }
};

// Maximises sum_i p_{s,i} m_i subject to sum m_i = 1, sum i m_i >= c, m >= 0.
LpSolution lp_upper_bound(const LpInstance& inst);

struct EsBounds {
    Rational upper_full;   // n 2^-k
    Rational lower_touch;  // n (1 - 2^-k)
};

EsBounds es_bounds(long long n, int k);

struct DualityReport {
    int lhs = 0;  // SC(H, s)
    int rhs = 0;  // n - SC(H, k - s + 1)
    int gap = 0;
    int delta = 0;
};

DualityReport duality_check(const GameHypergraph& hg, int s);

struct TableRow {
    int s = 0;
    std::map<int, Rational> coefficients;
    LpSolution solution;
    std::optional<Rational> published;  // fixture value, if the family has one
    bool matches = false;
    std::vector<int> coefficient_mismatches;  // indices whose published coefficient differs
    std::optional<Rational> z_with_published_coefficients;
    std::vector<int> consistent_q;  // q values reproducing the published bound
};

struct TableReport {
    FamilyTag family = FamilyTag::Custom;
    UniformityStats stats;
    std::vector<TableRow> rows;
};

// Published upper-bound fixtures for a family, keyed by s.
std::map<int, Rational> published_bounds(FamilyTag family);
// Published objective coefficients p_{s,i}, keyed by s then i.
std::map<int, std::map<int, Rational>> published_coefficients(FamilyTag family);

TableReport table2_report(const GridSpec& spec);

// Aligned plain-text rendering.
std::string format_table(const TableReport& report);
// Machine-readable rows: family,s,z_num,z_den,expected_num,expected_den,match
std::string format_table_csv(const TableReport& report);

}  // namespace sofk
