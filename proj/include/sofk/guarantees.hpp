// Pairing lower bounds checked on finite patches.
//
// A rate f claimed for a pattern holds on a patch when Breaker's best endpoint
// assignment still leaves at least ceil(f * n_int) - slack good interior sets.
// A boundary pair has one endpoint inside the union of the interior sets and
// one outside it; slack counts the interior sets holding an endpoint of a
// boundary pair or an unpaired vertex, i.e. the interior sets the outside can
// reach.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sofk/core.hpp"
#include "sofk/grids.hpp"
#include "sofk/pairing.hpp"

namespace sofk {

int boundary_slack(const GameHypergraph& hg, const Pairing& p);

struct GuaranteeCheck {
    std::string pattern;
    GridSpec spec;
    int s = 1;
    Rational rate;
    long long n_int = 0;
    int score = 0;
    bool exact = true;  // false: heuristic search, score is an upper bound on the true minimum
    std::size_t relevant_pairs = 0;
    int slack = 0;
    long long required = 0;
    bool passed = false;
    bool torus = false;
};

// Exact evaluation when the interior-relevant pairs fit the exact budget,
// seeded heuristic otherwise.
GuaranteeCheck check_guarantee(const std::string& pattern, const GridSpec& spec, int s, const Rational& rate,
                               std::uint64_t seed = 1, int iterations = 64);

// Boundary-free variant: the pattern wrapped on a torus of `periods` x
// `periods` pattern periods, where every set counts and no slack applies.
GuaranteeCheck check_torus(const std::string& pattern, int s, const Rational& rate, int periods_w, int periods_h,
                           std::uint64_t seed = 1, int iterations = 64);

// The pairing rates of the lower-bound column, one patch each.
std::vector<GuaranteeCheck> pairing_rate_checks(std::uint64_t seed = 1);

std::vector<GuaranteeCheck> pairing_rate_torus_checks(std::uint64_t seed = 1);

std::string describe(const GuaranteeCheck& c);

}  // namespace sofk
