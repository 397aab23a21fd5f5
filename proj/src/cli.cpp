#include "hqg/cli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hqg/coordgame.hpp"
#include "hqg/parrondo.hpp"

namespace hqg {
namespace {

double max_diff(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    double d = 0;
    for (std::size_t k = 0; k < a.probs.size(); ++k) d = std::max(d, std::abs(a.probs[k] - b.probs[k]));
    return d;
}

Json dist_json(const OutcomeDistribution& d, double tol) {
    Json j = Json::object();
    for (std::size_t k = 0; k < d.labels.size(); ++k) j[d.labels[k]] = num(d.probs[k], tol);
    return j;
}

std::string yes_no(bool b) { return b ? "YES" : "NO"; }

Json known_table_notes(const Game3Payoffs& g) {
    const auto& b = builtin_games();
    Json notes = Json::array();
    if (g.w == b.poker_printed.w) {
        notes.push_back("table matches the printed Nash-Shapley poker table (the three-player dilemma table is printed identically)");
        notes.push_back("cells FNF and FFN are not zero-sum; with player 3 set to -(X+Y) the player-3 average is -1.75, here it is +3");
        notes.push_back("the (10,10,20) cell makes FFN a pure equilibrium; the zero-sum-corrected table has none");
        notes.push_back("read as the dilemma, the expected classical equilibrium (D,D,D) with payoff (2,2,2) and quantum payoff (0.5,0.5,0.5) do not follow from this table");
    } else if (g.w == b.poker_zero_sum_corrected.w) {
        notes.push_back("table is the poker table with player 3 replaced by -(X+Y); averages (0.875, 0.875, -1.75)");
    }
    return notes;
}

Json mixed_json(const Game3Payoffs& g, double p, double q, double r, double tol) {
    const auto pay = classical_mixed_payoff(g, p, q, r);
    const auto pv = classical_pure_vs_mixed(g, p, q, r);
    Json j{{"p", num(p, tol)}, {"q", num(q, tol)}, {"r", num(r, tol)}, {"payoffs", num_array(pay, tol)}};
    Json gaps = Json::array();
    bool indifferent = true;
    for (std::size_t k = 0; k < 3; ++k) {
        const double gap = std::abs(pv[k][0] - pv[k][1]);
        gaps.push_back(num(gap, tol));
        indifferent = indifferent && gap < tol;
    }
    j["pure_strategy_payoff_gaps"] = gaps;
    j["all_players_indifferent"] = indifferent;
    return j;
}

HistoryConvention parse_convention(const std::string& s) {
    if (s == "gain-first") return HistoryConvention::gain_first;
    if (s == "loss-first") return HistoryConvention::loss_first;
    throw InputError("convention must be gain-first or loss-first");
}

template <std::size_t N>
std::array<double, N> to_array(const std::vector<double>& v) {
    std::array<double, N> a{};
    std::copy_n(v.begin(), N, a.begin());
    return a;
}

}  // namespace

std::vector<double> parse_reals(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("malformed " + what + " '" + text + "': '" + item + "' is not a number");
        }
        if (!std::isfinite(out.back())) throw InputError("malformed " + what + " '" + text + "': values must be finite");
    }
    if (out.size() != expected)
        throw InputError("malformed " + what + " '" + text + "': expected " + std::to_string(expected) + " comma-separated reals");
    return out;
}

ParsedStrategy parse_strategy(const std::string& text) {
    const auto v = parse_reals(text, 4, "strategy");
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    const double dev = std::abs(norm - 1.0);
    if (dev > 1e-3) {
        std::ostringstream os;
        os.precision(12);
        os << "strategy is not unit norm: '" << text << "' has norm " << norm;
        throw InputError(os.str());
    }
    ParsedStrategy s{{cplx{v[0], v[1]}, cplx{v[2], v[3]}}, norm, false};
    if (dev > 1e-9) {
        s.gate.x /= norm;
        s.gate.y /= norm;
        s.normalized = true;
    }
    return s;
}

CommandResult cmd_distribution(const DistributionOptions& o) {
    const std::size_t n = o.strategies.size();
    if (n != 2 && n != 3) throw InputError("give 2 or 3 strategies (one --strategy per player)");
    const std::string& m = o.method;
    if (m != "octonion" && m != "quaternion" && m != "oracle" && m != "both")
        throw InputError("method must be octonion, quaternion, oracle or both");
    if (m == "octonion" && n != 3) throw InputError("the octonion method needs 3 players");
    if (m == "quaternion" && n != 2) throw InputError("the quaternion method needs 2 players");

    std::optional<GameFile> game;
    if (o.game_path) {
        game = load_game_file(*o.game_path);
        if (static_cast<std::size_t>(game->players) != n)
            throw InputError("game file has " + std::to_string(game->players) + " players but " + std::to_string(n) +
                             " strategies were given");
    }

    Json warnings = Json::array();
    std::vector<SU2Gate> g;
    for (std::size_t k = 0; k < n; ++k) {
        const auto s = parse_strategy(o.strategies[k]);
        if (s.normalized) {
            std::ostringstream os;
            os.precision(12);
            os << "strategy " << k + 1 << " had norm " << s.norm << " and was normalized";
            warnings.push_back(os.str());
        }
        g.push_back(s.gate);
    }

    const std::string coord_name = n == 3 ? "octonion" : "quaternion";
    std::optional<OutcomeDistribution> coord, oracle;
    if (m != "oracle") coord = n == 3 ? theorem1_distribution(g[0], g[1], g[2]) : landsburg_probs(g[0], g[1]);
    if (m == "oracle" || m == "both") oracle = n == 3 ? oracle_distribution3(g[0], g[1], g[2]) : oracle_distribution2(g[0], g[1]);

    CommandResult res;
    Json& r = res.report;
    r["command"] = "distribution";
    r["players"] = n;
    r["config"] = Json{{"method", m}, {"strategies", o.strategies}};
    Json dists = Json::object();
    if (coord) dists[coord_name] = dist_json(*coord, o.tol);
    if (oracle) dists["oracle"] = dist_json(*oracle, o.tol);
    r["distributions"] = dists;
    bool pass = true;
    const auto& any = coord ? *coord : *oracle;
    const double sum_dev = std::abs(any.total() - 1.0);
    r["sum_deviation"] = num(sum_dev, o.tol);
    pass = sum_dev < o.tol;
    if (coord && oracle) {
        const double dev = max_diff(*coord, *oracle);
        r["max_deviation"] = num(dev, o.tol);
        pass = pass && dev < o.tol;
    }
    if (game) {
        Json pay = Json::object();
        if (coord) pay[coord_name] = num_array(expected_payoffs(*game, *coord), o.tol);
        if (oracle) pay["oracle"] = num_array(expected_payoffs(*game, *oracle), o.tol);
        r["expected_payoffs"] = pay;
    }
    r["warnings"] = warnings;
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

CommandResult cmd_equilibrium(const EquilibriumOptions& o) {
    const Game3Payoffs g = to_game3(load_game_file(o.game_path));
    if (o.samples == 0) throw InputError("--samples must be at least 1");
    constexpr double exact = 1e-12;

    CommandResult res;
    Json& r = res.report;
    r["command"] = "equilibrium";
    r["config"] = Json{{"game", o.game_path}, {"samples", o.samples}, {"seed", o.seed}, {"tol", o.tol}};

    const auto avg = average_payoffs(g);
    r["average_payoffs"] = num_array(avg, exact);

    std::array<double, 3> sd{};
    double sd_dev = 0;
    for (int k = 1; k <= 3; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        sd[i] = expected_payoff_mixture(k, special_distribution(1), special_distribution(2), special_distribution(3), g);
        sd_dev = std::max(sd_dev, std::abs(sd[i] - avg[i]));
    }
    bool pass = sd_dev < exact;
    r["special_distribution"] = Json{{"expected_payoffs", num_array(sd, exact)},
                                     {"max_deviation_from_average", num(sd_dev, exact)},
                                     {"pass", sd_dev < exact}};

    Json ind = Json::array();
    for (int k = 1; k <= 3; ++k) {
        const auto c = indifference_check(k, g, o.samples, o.tol, o.seed + static_cast<std::uint64_t>(k));
        ind.push_back(Json{{"player", k},
                           {"expected", num(c.expected, o.tol)},
                           {"max_deviation", num(c.max_deviation, o.tol)},
                           {"pass", c.pass}});
        pass = pass && c.pass;
    }
    r["indifference"] = ind;

    Json scan = Json::array();
    for (const auto& pr : classical_pure_scan(g))
        scan.push_back(Json{{"profile", profile_label(pr)}, {"payoffs", num_array(classical_payoff(g, pr), 0.0)}});
    r["classical_pure_nash"] = scan;

    if (o.mixed) {
        const auto v = parse_reals(*o.mixed, 3, "--mixed");
        for (double x : v)
            if (x < 0 || x > 1) throw InputError("--mixed probabilities must lie in [0, 1]");
        r["classical_mixed"] = mixed_json(g, v[0], v[1], v[2], 1e-9);
    }

    Json warnings = Json::array();
    const auto viol = zero_sum_violations(g);
    if (!viol.empty() && viol.size() < 8) {
        std::string s = "payoffs are not zero-sum at";
        for (const auto& l : viol) s += " " + l;
        warnings.push_back(s);
    }
    r["warnings"] = warnings;

    Json notes = known_table_notes(g);
    if (!notes.empty()) {
        const double p = std::sqrt(7.0 / 5.0) - 1.0;
        Json ref = mixed_json(g, p, p, (4 * p + 8) / (5 * p + 12), 1e-9);
        const std::array<double, 3> stated{-0.40456, -0.40456, 0.80912};
        const auto got = classical_mixed_payoff(g, p, p, (4 * p + 8) / (5 * p + 12));
        std::array<double, 3> diff{};
        for (std::size_t k = 0; k < 3; ++k) diff[k] = std::abs(got[k] - stated[k]);
        ref["reference_payoffs"] = num_array(stated, 5e-6);
        ref["deviation_from_reference"] = num_array(diff, 5e-6);
        r["classical_mixed_reference"] = ref;
    }
    r["notes"] = notes;
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

CommandResult cmd_verify(const VerifyOptions& o) {
    if (o.samples == 0) throw InputError("--samples must be at least 1");
    std::vector<SuiteResult> suites;
    try {
        suites = run_suites(o.suite, o.samples, o.seed);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    CommandResult res;
    Json& r = res.report;
    r["command"] = "verify";
    r["config"] = Json{{"suite", o.suite}, {"samples", o.samples}, {"seed", o.seed}};
    Json arr = Json::array();
    bool pass = true;
    for (const auto& s : suites) {
        arr.push_back(to_json(s));
        pass = pass && s.pass();
    }
    r["suites"] = arr;
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

namespace {

CommandResult parrondo_hd(const ParrondoOptions& o) {
    const HistoryConvention c = parse_convention(o.convention);
    const HDGameParams g{to_array<4>(parse_reals(o.probs, 4, "--p"))};
    validate(g);
    const double tol = o.tol;
    CommandResult res;
    Json& r = res.report;
    r["command"] = "parrondo";
    r["config"] = Json{{"game", "hd"}, {"p", o.probs}, {"convention", o.convention}};
    const auto pi = hd_stationary(g, c);
    const auto t = hd_transition(g, c);
    double resid = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < 4; ++j) s += t[i][j] * pi[j];
        resid = std::max(resid, std::abs(s - pi[i]));
    }
    const double weighted = hd_p_gain_weighted(g, c);
    const auto [x, y] = hd_xy(g, c);
    Json classical{{"stationary", num_array(pi, tol)},
                   {"fixed_point_residual", num(resid, tol)},
                   {"x", num(x, tol)},
                   {"y", num(y, tol)},
                   {"p_gain", num(weighted, tol)}};
    bool pass = resid < tol;
    if (y > 0) {
        const double closed = hd_p_gain(g, c);
        classical["p_gain_closed_form"] = num(closed, tol);
        classical["forms_deviation"] = num(std::abs(closed - weighted), tol);
        pass = pass && std::abs(closed - weighted) < tol;
    }
    classical["classification"] = classify(weighted, tol);
    r["classical"] = classical;

    const HDGameParams gf = c == HistoryConvention::gain_first ? g : translate_convention(g);
    const auto init = proper_initial_state(hd_stationary(gf));
    Json quantum = Json::object();
    for (auto [name, kind] : {std::pair{"type1", CoinKind::type1}, std::pair{"type2", CoinKind::type2}}) {
        const double q = quantized_p_gain(mux_from_coins(gf, {kind, eta(3)}), init, 0);
        quantum[name] = Json{{"p_gain", num(q, tol)}, {"deviation_from_classical", num(std::abs(q - weighted), tol)}};
        pass = pass && std::abs(q - weighted) < tol;
    }
    r["quantum"] = quantum;
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

Json capital_json(double p1, double p2, double tol) {
    const auto pi = capital_game_stationary(p1, p2);
    const auto t = capital_transition(p1, p2);
    double resid = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += t[i][j] * pi[j];
        resid = std::max(resid, std::abs(s - pi[i]));
    }
    const double pg = capital_p_gain(p1, p2);
    return Json{{"p1", num(p1, tol)},
                {"p2", num(p2, tol)},
                {"stationary", num_array(pi, tol)},
                {"fixed_point_residual", num(resid, tol)},
                {"p_gain", num(pg, tol)},
                {"classification", classify(pg, tol)}};
}

CommandResult parrondo_capital(const ParrondoOptions& o) {
    CommandResult res;
    Json& r = res.report;
    r["command"] = "parrondo";
    r["config"] = Json{{"game", "capital"}};
    Json b = capital_json(o.p1, o.p2, o.tol);
    bool pass = b["fixed_point_residual"]["value"].get<double>() < o.tol;
    r["game_b"] = b;
    if (o.q) {
        const auto mp = capital_mixed_params(*o.q, o.pa, o.p1, o.p2);
        Json m = capital_json(mp[0], mp[1], o.tol);
        m["q"] = num(*o.q, o.tol);
        m["pa"] = num(o.pa, o.tol);
        pass = pass && m["fixed_point_residual"]["value"].get<double>() < o.tol;
        r["mixed"] = m;
    }
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

CommandResult parrondo_sequence(const ParrondoOptions& o) {
    const double tol = o.tol;
    const auto e = parrondo_effect_check(o.epsilon);
    if (o.r < 0 || o.r > 1) throw InputError("--r must lie in [0, 1]");
    CommandResult res;
    Json& r = res.report;
    r["command"] = "parrondo";
    r["config"] = Json{{"game", "sequence"}, {"epsilon", e.epsilon}, {"r", o.r}};
    r["parameters"] = Json{{"p", num(e.p, tol)}, {"alpha", num_array(e.alpha, tol)}, {"mixture", num_array(e.mix, tol)}};
    r["inequalities"] = Json{{"A_game_a_losing", e.a_losing}, {"B_game_b_losing", e.b_losing}, {"C_mixture_winning", e.mix_winning}};
    r["classical_p_gain"] = Json{{"game_a", num(e.p_gain_a, tol)}, {"game_b", num(e.p_gain_b, tol)}, {"mixture", num(e.p_gain_mix, tol)}};
    r["parrondo_effect"] = yes_no(e.effect);

    // quantize in the gain-first convention; game A is history-independent
    const HDGameParams a = translate_convention(HDGameParams{{e.p, e.p, e.p, e.p}});
    const HDGameParams b = translate_convention(HDGameParams{e.alpha});
    const HDGameParams t = combined_params(o.r, a, b);
    const double classical = hd_p_gain_weighted(t);
    const auto init = proper_initial_state(hd_stationary(t));
    const double sup = quantized_p_gain(
        superpose_mux(o.r, mux_from_coins(a, {CoinKind::type2, eta(3)}), mux_from_coins(b, {CoinKind::type1, eta(3)})).matrices(),
        init, 0);
    const double sec = quantized_p_gain(second_quantization_mux(o.r, a, b), init, 0);
    r["randomized_sequence"] = Json{{"classical_p_gain", num(classical, tol)},
                                    {"superposed_p_gain", num(sup, tol)},
                                    {"second_quantization_p_gain", num(sec, tol)},
                                    {"classification", classify(classical, tol)}};
    const bool pass = std::abs(sup - classical) < tol && std::abs(sec - classical) < tol;
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

CommandResult parrondo_fna(const ParrondoOptions& o) {
    const double tol = o.tol;
    std::vector<std::string> angles = o.angles;
    if (angles.empty()) angles.assign(4, "0,0,0");
    if (angles.size() != 4) throw InputError("give four --angles theta,phi,eta (one per history)");
    std::array<FnaAngles, 4> ang;
    std::array<SU2Gate, 4> gates;
    for (std::size_t j = 0; j < 4; ++j) {
        const auto v = parse_reals(angles[j], 3, "--angles");
        ang[j] = {v[0], v[1], v[2]};
        gates[j] = gate_from_angles(ang[j]);
    }
    const double s = std::sqrt(0.5);
    std::array<Qubit, 3> q{Qubit{s, s}, Qubit{s, s}, Qubit{s, s}};
    const bool equal = o.inputs.empty();
    if (!equal) {
        if (o.inputs.size() != 3) throw InputError("give three --input qubits re,im,re,im");
        for (std::size_t k = 0; k < 3; ++k) {
            const auto p = parse_strategy(o.inputs[k]);
            q[k] = {p.gate.x, p.gate.y};
        }
    }
    const double closed = fna_p_win(gates, q[0], q[1], q[2]);
    const double direct = fna_p_win_direct(gates, q[0], q[1], q[2]);
    CommandResult res;
    Json& r = res.report;
    r["command"] = "parrondo";
    r["config"] = Json{{"game", "fna"}, {"angles", angles}, {"inputs", equal ? Json("equal superposition") : Json(o.inputs)}};
    r["p_win"] = num(closed, tol);
    r["p_win_direct"] = num(direct, tol);
    r["deviation"] = num(std::abs(closed - direct), tol);
    bool pass = std::abs(closed - direct) < tol;
    if (equal) {
        const double f = fna_equal_superposition(ang);
        r["p_win_equal_superposition_formula"] = num(f, tol);
        pass = pass && std::abs(f - direct) < tol;
    }
    r["classification"] = classify(direct, tol);
    r["pass"] = pass;
    res.status = pass ? 0 : 1;
    return res;
}

}  // namespace

CommandResult cmd_parrondo(const ParrondoOptions& o) {
    try {
        if (o.game == "hd") return parrondo_hd(o);
        if (o.game == "capital") return parrondo_capital(o);
        if (o.game == "sequence") return parrondo_sequence(o);
        if (o.game == "fna") return parrondo_fna(o);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
    throw InputError("--game must be hd, capital, sequence or fna");
}

}  // namespace hqg
