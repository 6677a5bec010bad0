#include "sofk/pairing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "sofk/solver.hpp"

namespace sofk {

namespace {

using boost::multiprecision::cpp_int;

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool scored(const WinningSet& e, bool interior_only) { return !interior_only || e.interior; }

// Per-set view of a pairing used by the assignment evaluators.
struct AssignmentModel {
    struct Effect {
        std::size_t set;  // index into need/cross
        int side;         // endpoint (0 = first, 1 = second) that lands in the set
    };
    std::vector<int> need;   // Maker vertices still required, per scored set
    std::vector<int> cross;  // pairs with exactly one endpoint in the set
    std::vector<std::size_t> relevant;             // pair indices whose choice matters
    std::vector<std::vector<Effect>> effects;      // per relevant pair
    int always = 0;                                // sets good whatever Breaker does

    AssignmentModel(const GameHypergraph& hg, int s, const Pairing& p, bool interior_only) {
        std::vector<int> pair_of(hg.vertex_count(), -1);
        for (std::size_t j = 0; j < p.pairs().size(); ++j) {
            pair_of[p.pairs()[j].first] = static_cast<int>(j);
            pair_of[p.pairs()[j].second] = static_cast<int>(j);
        }
        std::vector<std::vector<Effect>> by_pair(p.size());
        for (const auto& e : hg.sets()) {
            if (!scored(e, interior_only)) continue;
            int internal = 0, boundary = 0;
            std::vector<std::pair<int, int>> touches;
            for (VertexId v : e.vertices) {
                const int j = pair_of[v];
                if (j < 0) continue;
                const auto [a, b] = p.pairs()[j];
                const VertexId other = v == a ? b : a;
                if (std::binary_search(e.vertices.begin(), e.vertices.end(), other)) {
                    if (v == a) ++internal;
                } else {
                    ++boundary;
                    touches.emplace_back(j, v == a ? 0 : 1);
                }
            }
            const int needed = s - internal;
            if (needed <= 0) {
                ++always;
                continue;
            }
            if (needed > boundary) continue;
            const std::size_t idx = need.size();
            need.push_back(needed);
            cross.push_back(boundary);
            for (auto [j, side] : touches) by_pair[j].push_back({idx, side});
        }
        for (std::size_t j = 0; j < by_pair.size(); ++j) {
            if (by_pair[j].empty()) continue;
            relevant.push_back(j);
            effects.push_back(std::move(by_pair[j]));
        }
    }

    // Score of a full choice vector over the relevant pairs.
    int evaluate(const std::vector<int>& choice) const {
        std::vector<int> have(need.size(), 0);
        for (std::size_t r = 0; r < relevant.size(); ++r)
            for (const auto& ef : effects[r])
                if (ef.side == choice[r]) ++have[ef.set];
        int score = always;
        for (std::size_t e = 0; e < need.size(); ++e) score += have[e] >= need[e] ? 1 : 0;
        return score;
    }
};

class ExactAssignment {
public:
    explicit ExactAssignment(const AssignmentModel& model) : m_(model) {
        have_.assign(m_.need.size(), 0);
        left_ = m_.cross;
        order_ = locality_order();
    }

    // Returns the minimum score; `choice` receives an optimal choice vector.
    int run(int upper, std::vector<int>& choice) {
        best_ = upper;
        cur_.assign(m_.relevant.size(), 0);
        best_choice_ = choice;
        dfs(0, m_.always);
        choice = best_choice_;
        return best_;
    }

private:
    std::vector<std::size_t> locality_order() const {
        const std::size_t n = m_.relevant.size();
        std::vector<std::size_t> order;
        std::vector<char> used(n, 0), touched(m_.need.size(), 0);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t pick = n;
            int pick_touch = -1, pick_deg = -1;
            for (std::size_t r = 0; r < n; ++r) {
                if (used[r]) continue;
                int t = 0;
                for (const auto& ef : m_.effects[r]) t += touched[ef.set];
                const int deg = static_cast<int>(m_.effects[r].size());
                if (t > pick_touch || (t == pick_touch && deg > pick_deg)) {
                    pick = r;
                    pick_touch = t;
                    pick_deg = deg;
                }
            }
            used[pick] = 1;
            order.push_back(pick);
            for (const auto& ef : m_.effects[pick]) touched[ef.set] = 1;
        }
        return order;
    }

    // Applies a choice and returns how many sets became good.
    int apply(std::size_t r, int side, int dir) {
        int gained = 0;
        for (const auto& ef : m_.effects[r]) {
            left_[ef.set] -= dir;
            if (ef.side == side) {
                if (dir > 0 && have_[ef.set] + 1 == m_.need[ef.set]) ++gained;
                have_[ef.set] += dir;
            }
        }
        return gained;
    }

    int greedy_cost(std::size_t r, int side) const {
        int cost = 0;
        for (const auto& ef : m_.effects[r])
            if (ef.side == side && have_[ef.set] < m_.need[ef.set]) cost += have_[ef.set] + 1 == m_.need[ef.set] ? 4 : 1;
        return cost;
    }

    void dfs(std::size_t depth, int secured) {
        if (secured >= best_) return;
        if (depth == order_.size()) {
            best_ = secured;
            best_choice_ = cur_;
            return;
        }
        const std::size_t r = order_[depth];
        const int first = greedy_cost(r, 0) <= greedy_cost(r, 1) ? 0 : 1;
        for (int side : {first, 1 - first}) {
            const int gained = apply(r, side, +1);
            cur_[r] = side;
            dfs(depth + 1, secured + gained);
            apply(r, side, -1);
        }
    }

    const AssignmentModel& m_;
    std::vector<int> have_, left_;
    std::vector<std::size_t> order_;
    std::vector<int> cur_, best_choice_;
    int best_ = 0;
};

std::pair<int, std::vector<int>> heuristic_assignment(const AssignmentModel& m, std::uint64_t seed, int iterations) {
    const std::size_t n = m.relevant.size();
    std::mt19937_64 rng(seed);
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_choice(n, 0);
    std::vector<int> choice(n), have(m.need.size());
    for (int it = 0; it < std::max(iterations, 1); ++it) {
        for (auto& c : choice) c = static_cast<int>(rng() & 1);
        std::fill(have.begin(), have.end(), 0);
        for (std::size_t r = 0; r < n; ++r)
            for (const auto& ef : m.effects[r])
                if (ef.side == choice[r]) ++have[ef.set];
        int score = m.always;
        for (std::size_t e = 0; e < m.need.size(); ++e) score += have[e] >= m.need[e] ? 1 : 0;
        while (true) {  // steepest descent over single flips
            int best_delta = 0;
            std::size_t best_r = n;
            for (std::size_t r = 0; r < n; ++r) {
                int delta = 0;
                for (const auto& ef : m.effects[r]) {
                    const bool good = have[ef.set] >= m.need[ef.set];
                    const int after = have[ef.set] + (ef.side == choice[r] ? -1 : 1);
                    delta += (after >= m.need[ef.set] ? 1 : 0) - (good ? 1 : 0);
                }
                if (delta < best_delta) {
                    best_delta = delta;
                    best_r = r;
                }
            }
            if (best_r == n) break;
            for (const auto& ef : m.effects[best_r]) have[ef.set] += ef.side == choice[best_r] ? -1 : 1;
            choice[best_r] = 1 - choice[best_r];
            score += best_delta;
        }
        if (score < best) {
            best = score;
            best_choice = choice;
        }
    }
    return {best, best_choice};
}

// Exhaustive search helpers on 64-bit masks.
struct SearchBoard {
    std::vector<std::uint64_t> masks;
    int s = 0;
    std::size_t vertex_count = 0;
};

// Breaker's minimum, stopping as soon as it drops to `floor` or below.
int min_over_assignments(const SearchBoard& b, const std::vector<Pairing::Pair>& pairs, int floor) {
    const std::size_t np = pairs.size();
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << np); ++bits) {
        std::uint64_t maker = 0;
        for (std::size_t j = 0; j < np; ++j)
            maker |= std::uint64_t{1} << ((bits >> j) & 1 ? pairs[j].second : pairs[j].first);
        int score = 0;
        for (auto e : b.masks) score += std::popcount(e & maker) >= b.s ? 1 : 0;
        best = std::min(best, score);
        if (best <= floor) break;
    }
    return best;
}

struct BranchResult {
    int best = -1;
    std::vector<Pairing::Pair> witness;
    std::uint64_t examined = 0;
};

void enumerate_pairings(const SearchBoard& b, PairingScope scope, std::uint64_t free, bool skip_left,
                        std::vector<Pairing::Pair>& cur, BranchResult& out) {
    if (free == 0) {
        ++out.examined;
        const int v = min_over_assignments(b, cur, out.best);
        if (v > out.best) {
            out.best = v;
            out.witness = cur;
        }
        return;
    }
    const auto v = static_cast<VertexId>(std::countr_zero(free));
    const std::uint64_t rest = free & (free - 1);
    for (std::uint64_t f = rest; f; f &= f - 1) {
        const auto u = static_cast<VertexId>(std::countr_zero(f));
        cur.emplace_back(v, u);
        enumerate_pairings(b, scope, rest & ~(std::uint64_t{1} << u), skip_left, cur, out);
        cur.pop_back();
    }
    if (scope == PairingScope::All) {
        enumerate_pairings(b, scope, rest, skip_left, cur, out);
    } else if (skip_left) {
        enumerate_pairings(b, scope, rest, false, cur, out);
    }
}

}  // namespace

Pairing::Pairing(std::size_t vertex_count, std::vector<Pair> pairs) : vertex_count_(vertex_count), partner_(vertex_count) {
    for (auto& [a, b] : pairs) {
        if (a >= vertex_count || b >= vertex_count)
            throw GameError(ErrorCode::InvalidPairing, "pair endpoint out of range: " + std::to_string(std::max(a, b)));
        if (a == b) throw GameError(ErrorCode::InvalidPairing, "vertex paired with itself: " + std::to_string(a));
        if (a > b) std::swap(a, b);
        for (VertexId v : {a, b}) {
            if (partner_[v]) throw GameError(ErrorCode::InvalidPairing, "vertex in two pairs: " + std::to_string(v));
        }
        partner_[a] = b;
        partner_[b] = a;
    }
    std::sort(pairs.begin(), pairs.end());
    pairs_ = std::move(pairs);
}

VertexSet Pairing::unpaired() const {
    VertexSet out(vertex_count_);
    for (VertexId v = 0; v < vertex_count_; ++v)
        if (!partner_[v]) out.set(v);
    return out;
}

int unpaired_within(const WinningSet& e, const Pairing& p) {
    int count = 0;
    for (VertexId v : e.vertices) {
        const auto w = p.partner(v);
        if (!w || !std::binary_search(e.vertices.begin(), e.vertices.end(), *w)) ++count;
    }
    return count;
}

Rational MDistribution::fraction(int i) const {
    if (n == 0) return 0;
    auto it = counts.find(i);
    return Rational(it == counts.end() ? 0 : it->second, n);
}

Rational MDistribution::interior_fraction(int i) const {
    if (n_interior == 0) return 0;
    auto it = interior_counts.find(i);
    return Rational(it == interior_counts.end() ? 0 : it->second, n_interior);
}

MDistribution m_distribution(const GameHypergraph& hg, const Pairing& p) {
    if (p.vertex_count() != hg.vertex_count())
        throw GameError(ErrorCode::InvalidPairing, "pairing and hypergraph disagree on vertex count");
    MDistribution out;
    const int k = static_cast<int>(hg.k());
    for (int i = k % 2; i <= k; i += 2) {
        out.counts[i] = 0;
        out.interior_counts[i] = 0;
    }
    for (const auto& e : hg.sets()) {
        const int i = unpaired_within(e, p);
        ++out.counts[i];
        ++out.n;
        if (e.interior) {
            ++out.interior_counts[i];
            ++out.n_interior;
        }
    }
    return out;
}

AssignmentOutcome assignment_best_response(const GameHypergraph& hg, int s, const Pairing& p,
                                           const AssignmentOptions& opts) {
    Threshold(s, hg.k());
    if (p.vertex_count() != hg.vertex_count())
        throw GameError(ErrorCode::InvalidPairing, "pairing and hypergraph disagree on vertex count");
    const AssignmentModel model(hg, s, p, opts.interior_only);
    AssignmentOutcome out;
    out.relevant_pairs = model.relevant.size();
    std::vector<int> choice;
    if (opts.mode == AssignmentMode::Exact) {
        if (model.relevant.size() > kExactPairBudget)
            throw GameError(ErrorCode::CapacityExceeded, std::to_string(model.relevant.size()) +
                                                             " relevant pairs exceed the exact budget of " +
                                                             std::to_string(kExactPairBudget));
        // A quick local search supplies the initial bound for the DFS.
        auto [upper, start] = heuristic_assignment(model, opts.seed, 4);
        choice = start;
        ExactAssignment exact(model);
        out.score = exact.run(upper, choice);
        out.exact = true;
    } else {
        auto [score, best] = heuristic_assignment(model, opts.seed, opts.iterations);
        choice = best;
        out.score = score;
        out.exact = false;
    }
    std::vector<int> side(p.size(), 0);
    for (std::size_t r = 0; r < model.relevant.size(); ++r) side[model.relevant[r]] = choice[r];
    out.maker = VertexSet(hg.vertex_count());
    for (std::size_t j = 0; j < p.size(); ++j) {
        const VertexId v = side[j] ? p.pairs()[j].second : p.pairs()[j].first;
        out.chosen.push_back(v);
        out.maker.set(v);
    }
    const int check = good_sets(out.maker, hg, s, opts.interior_only);
    if (check != out.score) throw std::logic_error("assignment score bookkeeping diverged");
    return out;
}

PairingSearchResult exhaustive_pairing_search(const GameHypergraph& hg, int s, PairingScope scope, unsigned threads,
                                              bool interior_only) {
    Threshold(s, hg.k());
    const std::size_t vc = hg.vertex_count();
    const std::size_t cap = scope == PairingScope::Perfect ? kPerfectSearchCapacity : kAllSearchCapacity;
    if (vc > cap)
        throw GameError(ErrorCode::CapacityExceeded,
                        "pairing search is limited to " + std::to_string(cap) + " vertices in this scope");
    SearchBoard board;
    board.s = s;
    board.vertex_count = vc;
    for (const auto& e : hg.sets()) {
        if (!scored(e, interior_only)) continue;
        std::uint64_t m = 0;
        for (VertexId v : e.vertices) m |= std::uint64_t{1} << v;
        board.masks.push_back(m);
    }
    PairingSearchResult result;
    result.witness = Pairing(vc);
    if (vc == 0) return result;

    // One branch per choice for vertex 0: a partner, or staying unpaired.
    const std::uint64_t all = vc == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vc) - 1;
    const bool odd = vc % 2 == 1;
    std::vector<int> branches;  // partner id, or -1 for unpaired
    for (std::size_t u = 1; u < vc; ++u) branches.push_back(static_cast<int>(u));
    if (scope == PairingScope::All || odd) branches.push_back(-1);

    std::vector<BranchResult> results(branches.size());
    auto work = [&](std::size_t worker, std::size_t stride) {
        for (std::size_t bi = worker; bi < branches.size(); bi += stride) {
            std::vector<Pairing::Pair> cur;
            std::uint64_t free = all & ~std::uint64_t{1};
            bool skip_left = odd && scope == PairingScope::Perfect;
            if (branches[bi] >= 0) {
                cur.emplace_back(0, static_cast<VertexId>(branches[bi]));
                free &= ~(std::uint64_t{1} << branches[bi]);
            } else {
                skip_left = false;
            }
            enumerate_pairings(board, scope, free, skip_left, cur, results[bi]);
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, branches.size()));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& t : pool) t.join();
    }
    result.best_score = -1;
    for (const auto& br : results) {
        result.pairings_examined += br.examined;
        if (br.best > result.best_score) {
            result.best_score = br.best;
            result.witness = Pairing(vc, br.witness);
        }
    }
    return result;
}

VertexId PairingStrategy::next_move(const GameState& state) const {
    if (last_breaker_) {
        const auto w = pairing_.partner(*last_breaker_);
        if (w && !state.is_claimed(*w)) return *w;
    }
    return lowest_unclaimed(state);
}

void PairingStrategy::observe(const GameState&, VertexId v, Player who) {
    if (who == Player::Breaker) last_breaker_ = v;
}

std::string PairingStrategy::state_key() const { return last_breaker_ ? std::to_string(*last_breaker_) : "-"; }

int pairing_playout_value(const GameHypergraph& hg, int s, const Pairing& p, Player first) {
    if (p.vertex_count() != hg.vertex_count())
        throw GameError(ErrorCode::InvalidPairing, "pairing and hypergraph disagree on vertex count");
    PairingStrategy maker(p);
    return best_breaker_vs_strategy(hg, Threshold(s, hg.k()), maker, first).score;
}

MonteCarloResult monte_carlo_expectation(const GameHypergraph& hg, int s, const Pairing& p, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads) {
    Threshold(s, hg.k());
    if (trials == 0) throw GameError(ErrorCode::InvalidArgument, "need at least one trial");
    std::vector<std::vector<VertexId>> interior;
    for (const auto& e : hg.sets()) {
        if (!e.interior) continue;
        for (VertexId v : e.vertices)
            if (!p.is_paired(v))
                throw GameError(ErrorCode::ImperfectPairing,
                                "interior set contains unpaired vertex " + std::to_string(v));
        interior.push_back(e.vertices);
    }
    const auto& pairs = p.pairs();
    auto run = [&](std::uint64_t from, std::uint64_t to, std::uint64_t& sum, std::uint64_t& sum_sq) {
        std::vector<char> maker(hg.vertex_count(), 0);
        for (std::uint64_t t = from; t < to; ++t) {
            std::uint64_t state = seed ^ (0xd1b54a32d192ed03ull * (t + 1));
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                if (j % 64 == 0) bits = splitmix64(state);
                const bool second = (bits >> (j % 64)) & 1;
                maker[pairs[j].first] = !second;
                maker[pairs[j].second] = second;
            }
            std::uint64_t score = 0;
            for (const auto& e : interior) {
                int c = 0;
                for (VertexId v : e) c += maker[v];
                score += c >= s ? 1 : 0;
            }
            sum += score;
            sum_sq += score * score;
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, trials));
    std::vector<std::uint64_t> sums(workers, 0), sq(workers, 0);
    if (workers == 1) {
        run(0, trials, sums[0], sq[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::uint64_t from = trials * w / workers, to = trials * (w + 1) / workers;
            pool.emplace_back(run, from, to, std::ref(sums[w]), std::ref(sq[w]));
        }
        for (auto& t : pool) t.join();
    }
    std::uint64_t sum = 0, sum_sq = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        sum += sums[w];
        sum_sq += sq[w];
    }
    MonteCarloResult out;
    out.trials = trials;
    out.n_interior = static_cast<long long>(interior.size());
    const double n = static_cast<double>(trials);
    out.mean = static_cast<double>(sum) / n;
    if (trials > 1) {
        const double var = (static_cast<double>(sum_sq) - n * out.mean * out.mean) / (n - 1);
        out.std_error = std::sqrt(std::max(var, 0.0) / n);
    }
    return out;
}

Rational exact_expectation(const GameHypergraph& hg, int s, const Pairing& p) {
    Threshold(s, hg.k());
    Rational total = 0;
    for (const auto& e : hg.sets()) {
        if (!e.interior) continue;
        int internal = 0, boundary = 0;
        for (VertexId v : e.vertices) {
            const auto w = p.partner(v);
            if (!w) continue;
            if (std::binary_search(e.vertices.begin(), e.vertices.end(), *w))
                internal += v < *w ? 1 : 0;
            else
                ++boundary;
        }
        cpp_int ways = 0, c = 1;  // c runs through C(boundary, j)
        for (int j = 0; j <= boundary; ++j) {
            if (internal + j >= s) ways += c;
            c = c * (boundary - j) / (j + 1);
        }
        total += Rational(ways, cpp_int(1) << boundary);
    }
    return total;
}

Pairing parse_pairing(const std::string& text, std::size_t vertex_count) {
    std::istringstream in(text);
    std::string line;
    std::vector<Pairing::Pair> pairs;
    std::vector<int> seen_on(vertex_count, 0);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        auto fail = [&](const std::string& why) {
            return GameError(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why);
        };
        if (!(ls >> b) || (ls >> extra)) throw fail("expected two vertex ids");
        auto to_id = [&](const std::string& t) -> VertexId {
            if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw fail("not a vertex id: '" + t + "'");
            return static_cast<VertexId>(std::stoul(t));
        };
        const VertexId u = to_id(a), v = to_id(b);
        for (VertexId x : {u, v}) {
            if (x >= vertex_count)
                throw GameError(ErrorCode::InvalidPairing,
                                "line " + std::to_string(lineno) + ": vertex " + std::to_string(x) + " out of range");
            if (seen_on[x])
                throw GameError(ErrorCode::InvalidPairing, "line " + std::to_string(lineno) + ": vertex " +
                                                               std::to_string(x) + " already paired on line " +
                                                               std::to_string(seen_on[x]));
            seen_on[x] = lineno;
        }
        if (u == v)
            throw GameError(ErrorCode::InvalidPairing, "line " + std::to_string(lineno) + ": vertex paired with itself");
        pairs.emplace_back(u, v);
    }
    return Pairing(vertex_count, std::move(pairs));
}

std::string format_pairing(const Pairing& p) {
    std::ostringstream out;
    out << "# " << p.size() << " pairs on " << p.vertex_count() << " vertices\n";
    for (const auto& [a, b] : p.pairs()) out << a << ' ' << b << '\n';
    return out.str();
}

Pairing read_pairing_file(const std::string& path, std::size_t vertex_count) {
    std::ifstream in(path);
    if (!in) throw GameError(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pairing(buf.str(), vertex_count);
}

void write_pairing_file(const std::string& path, const Pairing& p) {
    std::ofstream out(path);
    if (!out) throw GameError(ErrorCode::IoError, "cannot write " + path);
    out << format_pairing(p);
    if (!out) throw GameError(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace sofk
