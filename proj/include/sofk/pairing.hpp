// Pairings and the pair-assignment model.
//
// In the assignment model Breaker decides, for every pair, which endpoint
// Maker receives; unpaired vertices all go to Breaker. That is the adversary
// behind the LP bound. The playout model instead plays the real alternating
// game with a pairing-following Maker, so the two can be compared.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sofk/core.hpp"
#include "sofk/strategy.hpp"

namespace sofk {

class Pairing {
public:
    using Pair = std::pair<VertexId, VertexId>;

    explicit Pairing(std::size_t vertex_count = 0) : vertex_count_(vertex_count), partner_(vertex_count) {}
    // Validates and normalises: smaller id first, list sorted.
    Pairing(std::size_t vertex_count, std::vector<Pair> pairs);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    std::optional<VertexId> partner(VertexId v) const { return partner_.at(v); }
    bool is_paired(VertexId v) const { return partner_.at(v).has_value(); }
    VertexSet unpaired() const;
    bool is_perfect() const { return 2 * pairs_.size() == vertex_count_; }

    friend bool operator==(const Pairing& a, const Pairing& b) {
        return a.vertex_count_ == b.vertex_count_ && a.pairs_ == b.pairs_;
    }

private:
    std::size_t vertex_count_;
    std::vector<Pair> pairs_;
    std::vector<std::optional<VertexId>> partner_;
};

// Number of vertices of set e whose partner lies outside e (unpaired included).
int unpaired_within(const WinningSet& e, const Pairing& p);

struct MDistribution {
    std::map<int, long long> counts;           // over all sets
    std::map<int, long long> interior_counts;  // over interior sets
    long long n = 0;
    long long n_interior = 0;

    Rational fraction(int i) const;
    Rational interior_fraction(int i) const;
};

MDistribution m_distribution(const GameHypergraph& hg, const Pairing& p);

enum class AssignmentMode { Exact, Heuristic };

inline constexpr std::size_t kExactPairBudget = 26;

struct AssignmentOptions {
    AssignmentMode mode = AssignmentMode::Exact;
    std::uint64_t seed = 1;
    int iterations = 64;  // heuristic restarts
    bool interior_only = false;
};

struct AssignmentOutcome {
    std::vector<VertexId> chosen;  // Maker's endpoint, one per pair, in pair order
    VertexSet maker;
    int score = 0;
    bool exact = true;
    std::size_t relevant_pairs = 0;  // pairs touching a scored set
};

// Breaker's best endpoint choice against pairing p. Exact mode is limited to
// kExactPairBudget pairs that touch a scored set.
AssignmentOutcome assignment_best_response(const GameHypergraph& hg, int s, const Pairing& p,
                                           const AssignmentOptions& opts = {});

enum class PairingScope { Perfect, All };

inline constexpr std::size_t kPerfectSearchCapacity = 16;
inline constexpr std::size_t kAllSearchCapacity = 12;

struct PairingSearchResult {
    int best_score = 0;
    Pairing witness;
    std::uint64_t pairings_examined = 0;
};

// Best assignment-model value over every pairing in scope. With an odd vertex
// count a perfect pairing leaves exactly one vertex out.
PairingSearchResult exhaustive_pairing_search(const GameHypergraph& hg, int s, PairingScope scope,
                                              unsigned threads = 1, bool interior_only = false);

// Maker answers Breaker's last move with its partner when free, and otherwise
// takes the lowest unclaimed vertex.
class PairingStrategy final : public Strategy {
public:
    explicit PairingStrategy(Pairing p, std::string label = "pairing")
        : pairing_(std::move(p)), label_(std::move(label)) {}
    std::string name() const override { return label_; }
    VertexId next_move(const GameState& state) const override;
    void observe(const GameState& before, VertexId v, Player who) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<PairingStrategy>(*this); }
    std::string state_key() const override;

private:
    Pairing pairing_;
    std::string label_;
    std::optional<VertexId> last_breaker_;
};

// Value of the alternating game against an optimal Breaker.
int pairing_playout_value(const GameHypergraph& hg, int s, const Pairing& p, Player first);

struct MonteCarloResult {
    double mean = 0;
    double std_error = 0;
    std::uint64_t trials = 0;
    long long n_interior = 0;
};

// Uniform random endpoint per pair, interior sets scored. The per-trial
// generator is derived from (seed, trial index), so the result does not depend
// on the number of workers.
MonteCarloResult monte_carlo_expectation(const GameHypergraph& hg, int s, const Pairing& p, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads = 1);

// Exact value of the same expectation: sum over interior sets of the chance
// that internal pairs plus fair coins on boundary pairs reach s.
Rational exact_expectation(const GameHypergraph& hg, int s, const Pairing& p);

// Text format: one "u v" pair per line, '#' starts a comment.
Pairing parse_pairing(const std::string& text, std::size_t vertex_count);
std::string format_pairing(const Pairing& p);
Pairing read_pairing_file(const std::string& path, std::size_t vertex_count);
void write_pairing_file(const std::string& path, const Pairing& p);

}  // namespace sofk
