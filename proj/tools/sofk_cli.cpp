// Command-line front end.
//
// Exit codes: 0 success, 2 parse or validation error, 3 capacity, 4 internal
// invariant violation. Every command ends with a one-line JSON run record.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sofk/bounds.hpp"
#include "sofk/grids.hpp"
#include "sofk/io.hpp"
#include "sofk/pairing.hpp"
#include "sofk/solver.hpp"
#include "sofk/strategies.hpp"

using namespace sofk;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "sofk 1.0.0";

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::CapacityExceeded:
        case ErrorCode::BudgetExhausted:
            return 3;
        case ErrorCode::StrategyIllegalMove:
        case ErrorCode::StateOffTree:
        case ErrorCode::NonTerminalState:
        case ErrorCode::Infeasible:
            return 4;
        default:
            return 2;
    }
}

struct Record {
    json doc;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::string path;

    void finish(const json& result) {
        doc["version"] = kVersion;
        doc["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        doc["result"] = result;
        std::cout << "record " << doc.dump() << '\n';
        if (!path.empty()) write_text_file(path, doc.dump(2) + "\n");
    }
};

Player player_arg(const std::string& text) {
    const auto p = parse_player(text);
    if (!p) throw GameError(ErrorCode::InvalidArgument, "expected maker or breaker, got '" + text + "'");
    return *p;
}

std::string join(const std::vector<VertexId>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

json pairs_json(const Pairing& p) {
    json out = json::array();
    for (auto [u, v] : p.pairs()) out.push_back({u, v});
    return out;
}

// --- grid ------------------------------------------------------------------

int cmd_grid(const std::string& family_text, int width, int height, const std::string& out_path, Record& rec) {
    const auto family = parse_family(family_text);
    if (!family || *family == FamilyTag::Custom)
        throw GameError(ErrorCode::InvalidArgument, "unknown family '" + family_text + "'");
    const GridSpec spec{*family, width, *family == FamilyTag::Cycle ? 0 : height};
    const auto hg = generate(spec);
    const auto stats = uniformity_stats(hg);
    const auto text = format_hypergraph(hg);
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_text_file(out_path, text);
    std::cout << "n=" << hg.set_count() << " V=" << hg.vertex_count() << " k=" << hg.k()
              << " n_int=" << hg.interior_count() << " ell=" << stats.ell << " q=" << stats.q
              << " delta=" << stats.delta << " ell_int=" << stats.ell_interior << " q_int=" << stats.q_interior
              << '\n';
    rec.finish({{"n", hg.set_count()},
                {"V", hg.vertex_count()},
                {"k", hg.k()},
                {"n_int", hg.interior_count()},
                {"ell", stats.ell},
                {"q", stats.q},
                {"delta", stats.delta},
                {"ell_interior", stats.ell_interior},
                {"q_interior", stats.q_interior}});
    return 0;
}

// --- solve -----------------------------------------------------------------

int cmd_solve(const std::string& path, int s, const std::string& first_text, std::optional<std::uint64_t> budget,
              const std::string& ordering, const std::string& vs_strategy, Record& rec) {
    const auto hg = read_hypergraph_file(path);
    const Threshold th(s, hg.k());
    const Player first = player_arg(first_text);
    SolveResult r;
    if (!vs_strategy.empty()) {
        const auto maker = named_strategy(vs_strategy, hg);
        r = best_breaker_vs_strategy(hg, th, *maker, first);
    } else {
        SolveConfig cfg;
        cfg.node_budget = budget;
        if (ordering == "natural")
            cfg.move_ordering = MoveOrdering::Natural;
        else if (ordering == "potential")
            cfg.move_ordering = MoveOrdering::PotentialDesc;
        else if (ordering != "degree")
            throw GameError(ErrorCode::InvalidArgument, "ordering must be natural, degree or potential");
        try {
            r = solve_exact(hg, th, first, cfg);
        } catch (const BudgetExhausted& e) {
            std::cout << "budget exhausted: value in [" << e.lower << ", " << e.upper << "] after " << e.nodes
                      << " nodes\n";
            rec.finish({{"exhausted", true}, {"lower", e.lower}, {"upper", e.upper}, {"nodes", e.nodes}});
            return 3;
        }
    }
    std::cout << "score " << r.score << '\n';
    if (r.principal_variation) std::cout << "pv " << join(*r.principal_variation) << '\n';
    std::cout << "nodes " << r.nodes_expanded << " memo_hits " << r.memo_hits << '\n';
    json res{{"score", r.score}, {"nodes", r.nodes_expanded}, {"memo_hits", r.memo_hits}};
    if (r.principal_variation) res["pv"] = *r.principal_variation;
    rec.finish(res);
    return 0;
}

// --- pairing ---------------------------------------------------------------

struct PairingArgs {
    std::string hg_path;
    std::string pr_path;
    std::string name;
    std::string out_path;
    int s = 1;
    bool heuristic = false;
    int iterations = 64;
    bool interior = false;
    std::string scope = "perfect";
    std::uint64_t trials = 10000;
    std::string first = "maker";
};

int cmd_pairing(const std::string& sub, const PairingArgs& a, std::uint64_t seed, unsigned threads, Record& rec) {
    const auto hg = read_hypergraph_file(a.hg_path);
    if (sub == "named") {
        const auto p = named_pairing(a.name, hg);
        const auto text = format_pairing(p);
        if (a.out_path.empty() || a.out_path == "-")
            std::cout << text;
        else
            write_text_file(a.out_path, text);
        std::cout << "pairs " << p.size() << '\n';
        rec.finish({{"pairs", p.size()}});
        return 0;
    }
    const Threshold th(a.s, hg.k());
    if (sub == "search") {
        const auto scope = a.scope == "all" ? PairingScope::All : PairingScope::Perfect;
        if (a.scope != "all" && a.scope != "perfect")
            throw GameError(ErrorCode::InvalidArgument, "scope must be perfect or all");
        const auto r = exhaustive_pairing_search(hg, th.value(), scope, threads, a.interior);
        std::cout << "best " << r.best_score << '\n' << "examined " << r.pairings_examined << '\n';
        std::cout << "witness\n" << format_pairing(r.witness);
        rec.finish({{"best", r.best_score}, {"examined", r.pairings_examined}, {"witness", pairs_json(r.witness)}});
        return 0;
    }
    const auto p = read_pairing_file(a.pr_path, hg.vertex_count());
    if (sub == "eval") {
        AssignmentOptions opts;
        opts.mode = a.heuristic ? AssignmentMode::Heuristic : AssignmentMode::Exact;
        opts.seed = seed;
        opts.iterations = a.iterations;
        opts.interior_only = a.interior;
        const auto r = assignment_best_response(hg, th.value(), p, opts);
        const auto dist = m_distribution(hg, p);
        std::cout << "score " << r.score << (r.exact ? " (exact)" : " (heuristic upper bound)") << '\n';
        std::cout << "relevant_pairs " << r.relevant_pairs << '\n';
        std::cout << "maker " << join(r.chosen) << '\n';
        std::cout << "m:";
        for (auto [i, c] : dist.counts) std::cout << " m" << i << '=' << c;
        std::cout << '\n';
        json m = json::object();
        for (auto [i, c] : dist.counts) m[std::to_string(i)] = c;
        rec.finish({{"score", r.score}, {"exact", r.exact}, {"relevant_pairs", r.relevant_pairs}, {"maker", r.chosen},
                    {"m", m}});
        return 0;
    }
    if (sub == "mc") {
        const auto r = monte_carlo_expectation(hg, th.value(), p, a.trials, seed, threads);
        const auto exact = exact_expectation(hg, th.value(), p);
        const double ex = static_cast<double>(exact);
        const double z = r.std_error > 0 ? (r.mean - ex) / r.std_error : 0.0;
        std::cout << std::setprecision(10) << "mean " << r.mean << " se " << r.std_error << " trials " << r.trials
                  << " n_int " << r.n_interior << '\n';
        std::cout << "exact " << to_string(exact) << " (" << ex << ") z " << z << '\n';
        rec.finish({{"mean", r.mean},
                    {"std_error", r.std_error},
                    {"trials", r.trials},
                    {"n_interior", r.n_interior},
                    {"exact", to_string(exact)},
                    {"z", z}});
        return 0;
    }
    if (sub == "playout") {
        const int v = pairing_playout_value(hg, th.value(), p, player_arg(a.first));
        std::cout << "score " << v << '\n';
        rec.finish({{"score", v}});
        return 0;
    }
    throw GameError(ErrorCode::InvalidArgument, "unknown pairing subcommand '" + sub + "'");
}

// --- table -----------------------------------------------------------------

int cmd_table(const std::string& family_text, int width, int height, bool csv, Record& rec) {
    const auto family = parse_family(family_text);
    if (!family || *family == FamilyTag::Custom || *family == FamilyTag::Cycle)
        throw GameError(ErrorCode::InvalidArgument, "table needs a lattice family");
    const auto report = table2_report({*family, width, height});
    std::cout << (csv ? format_table_csv(report) : format_table(report));
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"s", r.s},
                        {"z", to_string(r.solution.z)},
                        {"published", r.published ? to_string(*r.published) : ""},
                        {"match", r.matches},
                        {"coefficient_mismatches", r.coefficient_mismatches}});
    rec.finish({{"q_interior", report.stats.q_interior}, {"ell_interior", report.stats.ell_interior}, {"rows", rows}});
    return 0;
}

// --- play ------------------------------------------------------------------

class ExactOpponent final : public Strategy {
public:
    ExactOpponent(const GameHypergraph& hg, int s) : hg_(&hg), s_(s) {}
    std::string name() const override { return "exact"; }
    VertexId next_move(const GameState& state) const override {
        const auto r = solve_position(*hg_, Threshold(s_, hg_->k()), state);
        if (!r.best_move) throw GameError(ErrorCode::StrategyIllegalMove, "board is full");
        return *r.best_move;
    }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<ExactOpponent>(*this); }

private:
    const GameHypergraph* hg_;
    int s_;
};

std::unique_ptr<Strategy> make_opponent(const std::string& spec, const GameHypergraph& hg, int s, Player side) {
    if (spec == "exact") return std::make_unique<ExactOpponent>(hg, s);
    if (spec == "potential")
        return potential_strategy(hg, side == Player::Breaker ? PotentialConfig{Player::Breaker, PotentialTarget::FullClaim}
                                                              : PotentialConfig{Player::Maker, PotentialTarget::Touch});
    if (spec.rfind("strategy:", 0) == 0) return named_strategy(spec.substr(9), hg);
    if (spec.rfind("random:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(spec.substr(7));
        } catch (const std::exception&) {
            throw GameError(ErrorCode::InvalidArgument, "random opponent needs a numeric seed");
        }
        return std::make_unique<RandomStrategy>(seed);
    }
    throw GameError(ErrorCode::InvalidArgument, "opponent must be exact, potential, strategy:<name> or random:<seed>");
}

// Coordinate-labelled text board; rows from the top, sheared lattices unsheared.
void render(const GameHypergraph& hg, const GameState& state) {
    auto mark = [&](VertexId v) { return state.maker().test(v) ? 'M' : state.breaker().test(v) ? 'B' : '.'; };
    if (!hg.has_coords()) {
        for (VertexId v = 0; v < hg.vertex_count(); ++v)
            std::cout << std::setw(4) << v << mark(v) << ((v + 1) % 10 == 0 ? "\n" : "");
        std::cout << '\n';
        return;
    }
    const bool sheared = hg.family() == FamilyTag::Triangular || hg.family() == FamilyTag::Rhombus;
    std::map<double, std::vector<std::pair<double, VertexId>>, std::greater<>> rows;
    for (VertexId v = 0; v < hg.vertex_count(); ++v) {
        const double x = static_cast<double>(hg.coords()[v].x), y = static_cast<double>(hg.coords()[v].y);
        rows[y].push_back({sheared ? x + y / 2 : x, v});
    }
    double min_x = 1e300;
    for (auto& [y, row] : rows)
        for (auto& [x, v] : row) min_x = std::min(min_x, x);
    for (auto& [y, row] : rows) {
        std::sort(row.begin(), row.end());
        std::string line;
        for (auto& [x, v] : row) {
            const auto col = static_cast<std::size_t>(std::lround((x - min_x) * 5));
            std::ostringstream cell;
            cell << v << mark(v);
            if (line.size() < col) line.append(col - line.size(), ' ');
            else if (!line.empty()) line += ' ';
            line += cell.str();
        }
        std::cout << line << '\n';
    }
}

int cmd_play(const std::string& path, int s, const std::string& human_text, const std::string& opponent_spec,
             const std::string& first_text, Record& rec) {
    const auto hg = read_hypergraph_file(path);
    const Threshold th(s, hg.k());
    const Player human = player_arg(human_text);
    const Player first = player_arg(first_text);
    auto bot = make_opponent(opponent_spec, hg, th.value(), opponent(human));
    GameState state(hg.vertex_count(), first);
    std::vector<VertexId> moves;
    bool quit = false;
    while (!state.is_terminal()) {
        const auto g = partial_good_count(state, hg, th);
        render(hg, state);
        std::cout << "good " << g.secured << " (still reachable " << g.alive << ")\n";
        VertexId v;
        if (state.to_move() == human) {
            std::cout << to_string(human) << " to move; vertex id or 'quit': " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                quit = true;
                break;
            }
            std::istringstream ls(line);
            std::string tok, extra;
            ls >> tok;
            if (tok == "quit" || tok == "q") {
                quit = true;
                break;
            }
            long long id = -1;
            try {
                std::size_t used = 0;
                id = std::stoll(tok, &used);
                if (used != tok.size() || (ls >> extra)) id = -1;
            } catch (const std::exception&) {
                id = -1;
            }
            if (id < 0 || id >= static_cast<long long>(hg.vertex_count()) || state.is_claimed(static_cast<VertexId>(id))) {
                std::cout << "not an unclaimed vertex id, try again\n";
                continue;
            }
            v = static_cast<VertexId>(id);
        } else {
            v = bot->next_move(state);
            std::cout << to_string(state.to_move()) << " (" << bot->name() << ") claims " << v << '\n';
        }
        bot->observe(state, v, state.to_move());
        state = apply_move(state, v);
        moves.push_back(v);
    }
    json res{{"moves", moves}, {"finished", !quit}};
    if (!quit) {
        render(hg, state);
        const int score = final_score(state, hg, th);
        std::cout << "final score " << score << '\n';
        res["score"] = score;
    } else {
        std::cout << "quit after " << moves.size() << " moves\n";
        res["good_so_far"] = partial_good_count(state, hg, th).secured;
    }
    rec.finish(res);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"s-of-k Maker-Breaker games: solving, pairings, bounds"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string record_path;
    app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (results do not depend on it)")->capture_default_str();
    app.add_option("--record", record_path, "Also write the run record to this file");
    app.fallthrough();

    std::string family, out_path, path, first = "maker";
    int width = 0, height = 0, s = 1;

    auto* grid = app.add_subcommand("grid", "Generate a board and write it in text form");
    grid->add_option("family", family, "triangular, square, rhombus, hexagonal or cycle")->required();
    grid->add_option("width", width, "Vertex columns (cells for hexagonal, length for cycle)")->required();
    grid->add_option("height", height, "Vertex rows (cells for hexagonal)");
    grid->add_option("-o,--out", out_path, "Output file (default stdout)");

    std::optional<std::uint64_t> budget;
    std::string ordering = "degree", vs_strategy;
    auto* solve = app.add_subcommand("solve", "Exact game value");
    solve->add_option("file", path, "Hypergraph file")->required();
    solve->add_option("--s", s, "Threshold")->required();
    solve->add_option("--first", first, "maker or breaker")->capture_default_str();
    solve->add_option("--budget", budget, "Node budget");
    solve->add_option("--ordering", ordering, "natural, degree or potential")->capture_default_str();
    solve->add_option("--vs-strategy", vs_strategy, "Fix Maker to a named strategy; Breaker plays optimally");

    PairingArgs pa;
    auto* pairing = app.add_subcommand("pairing", "Pairing strategies");
    pairing->require_subcommand(1);
    auto* p_eval = pairing->add_subcommand("eval", "Breaker's best endpoint assignment against a pairing");
    p_eval->add_option("hypergraph", pa.hg_path)->required();
    p_eval->add_option("pairing", pa.pr_path)->required();
    p_eval->add_option("--s", pa.s)->required();
    p_eval->add_flag("--heuristic", pa.heuristic, "Seeded local search instead of exact");
    p_eval->add_option("--iterations", pa.iterations, "Heuristic restarts")->capture_default_str();
    p_eval->add_flag("--interior", pa.interior, "Score interior sets only");
    auto* p_search = pairing->add_subcommand("search", "Best pairing by exhaustive search");
    p_search->add_option("hypergraph", pa.hg_path)->required();
    p_search->add_option("--s", pa.s)->required();
    p_search->add_option("--scope", pa.scope, "perfect or all")->capture_default_str();
    p_search->add_flag("--interior", pa.interior, "Score interior sets only");
    auto* p_mc = pairing->add_subcommand("mc", "Monte Carlo over random endpoint choices");
    p_mc->add_option("hypergraph", pa.hg_path)->required();
    p_mc->add_option("pairing", pa.pr_path)->required();
    p_mc->add_option("--s", pa.s)->required();
    p_mc->add_option("--trials", pa.trials)->capture_default_str();
    auto* p_play = pairing->add_subcommand("playout", "Pairing strategy against an optimal Breaker");
    p_play->add_option("hypergraph", pa.hg_path)->required();
    p_play->add_option("pairing", pa.pr_path)->required();
    p_play->add_option("--s", pa.s)->required();
    p_play->add_option("--first", pa.first)->capture_default_str();
    auto* p_named = pairing->add_subcommand("named", "Write a named pattern for a board");
    p_named->add_option("name", pa.name, "tri-s1, sq-fractal-s3, hex-flower, ...")->required();
    p_named->add_option("hypergraph", pa.hg_path)->required();
    p_named->add_option("-o,--out", pa.out_path, "Output file (default stdout)");
    for (auto* sub : pairing->get_subcommands({})) sub->fallthrough();

    bool csv = false;
    int t_width = 10, t_height = 10;
    auto* table = app.add_subcommand("table", "Pairing LP bounds next to the published values");
    table->add_option("family", family)->required();
    table->add_option("width", t_width)->capture_default_str();
    table->add_option("height", t_height)->capture_default_str();
    table->add_flag("--csv", csv, "Machine-readable rows");

    std::string human = "breaker", opponent_spec = "exact";
    auto* play = app.add_subcommand("play", "Play against the computer in the terminal");
    play->add_option("file", path)->required();
    play->add_option("--s", s)->required();
    play->add_option("--human", human, "maker or breaker")->capture_default_str();
    play->add_option("--opponent", opponent_spec, "exact, potential, strategy:<name> or random:<seed>")
        ->capture_default_str();
    play->add_option("--first", first)->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Record rec;
    rec.path = record_path;
    json argv_json = json::array();
    for (int i = 0; i < argc; ++i) argv_json.push_back(argv[i]);
    rec.doc["argv"] = argv_json;
    rec.doc["seed"] = seed;
    rec.doc["threads"] = threads;
    try {
        if (*grid) {
            rec.doc["command"] = "grid";
            rec.doc["params"] = {{"family", family}, {"width", width}, {"height", height}, {"out", out_path}};
            return cmd_grid(family, width, height, out_path, rec);
        }
        if (*solve) {
            rec.doc["command"] = "solve";
            rec.doc["params"] = {{"file", path}, {"s", s}, {"first", first}, {"ordering", ordering},
                                 {"vs_strategy", vs_strategy}};
            if (budget) rec.doc["params"]["budget"] = *budget;
            return cmd_solve(path, s, first, budget, ordering, vs_strategy, rec);
        }
        if (*pairing) {
            const auto* sub = pairing->get_subcommands().front();
            rec.doc["command"] = "pairing " + sub->get_name();
            rec.doc["params"] = {{"hypergraph", pa.hg_path}, {"pairing", pa.pr_path}, {"s", pa.s},
                                 {"heuristic", pa.heuristic}, {"iterations", pa.iterations},
                                 {"interior", pa.interior}, {"scope", pa.scope}, {"trials", pa.trials},
                                 {"first", pa.first}, {"name", pa.name}};
            return cmd_pairing(sub->get_name(), pa, seed, threads, rec);
        }
        if (*table) {
            rec.doc["command"] = "table";
            rec.doc["params"] = {{"family", family}, {"width", t_width}, {"height", t_height}, {"csv", csv}};
            return cmd_table(family, t_width, t_height, csv, rec);
        }
        if (*play) {
            rec.doc["command"] = "play";
            rec.doc["params"] = {{"file", path}, {"s", s}, {"human", human}, {"opponent", opponent_spec},
                                 {"first", first}};
            return cmd_play(path, s, human, opponent_spec, first, rec);
        }
    } catch (const GameError& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
