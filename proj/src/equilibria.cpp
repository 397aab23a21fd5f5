#include "hqg/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hqg/random.hpp"

namespace hqg {
namespace {

std::size_t player_slot(int player) {
    if (player < 1 || player > 3) throw std::invalid_argument("player must be 1, 2 or 3");
    return static_cast<std::size_t>(player - 1);
}

}  // namespace

std::size_t outcome_index(const std::string& label) {
    const auto& labels = outcome_labels(3);
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("invalid 3-player outcome label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

double Game3Payoffs::at(int player, std::size_t oct_index) const {
    return w[player_slot(player)].at(oct_index);
}

double Game3Payoffs::at(int player, const std::string& label) const {
    return at(player, kOctIndexOfOutcome[outcome_index(label)]);
}

void Game3Payoffs::set(const std::string& label, const std::array<double, 3>& payoffs) {
    const std::size_t l = kOctIndexOfOutcome[outcome_index(label)];
    for (std::size_t k = 0; k < 3; ++k) w[k][l] = payoffs[k];
}

std::array<double, 3> average_payoffs(const Game3Payoffs& g) {
    std::array<double, 3> r{};
    for (std::size_t k = 0; k < 3; ++k) {
        for (double v : g.w[k]) r[k] += v;
        r[k] /= 8.0;
    }
    return r;
}

std::vector<std::string> zero_sum_violations(const Game3Payoffs& g, double tol) {
    std::vector<std::string> out;
    for (const auto& label : outcome_labels(3)) {
        const double s = g.at(1, label) + g.at(2, label) + g.at(3, label);
        if (std::abs(s) > tol) out.push_back(label);
    }
    return out;
}

double payoff_pure_basis(int player, std::size_t s, std::size_t t, std::size_t u, const Game3Payoffs& g) {
    if (!is_player_basis(1, s) || !is_player_basis(2, t) || !is_player_basis(3, u))
        throw std::invalid_argument("basis strategy outside the player's subalgebra");
    return g.at(player, basis_product_index(s, t, u));
}

void validate(const DiscreteQuantumMixture& m) {
    double total = 0;
    for (const auto& [k, wgt] : m.support) {
        if (!is_player_basis(m.player, k)) throw std::invalid_argument("mixture support outside the player's subalgebra");
        if (wgt < 0) throw std::invalid_argument("mixture weights must be nonnegative");
        total += wgt;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mixture weights must sum to 1");
}

DiscreteQuantumMixture special_distribution(int player) {
    DiscreteQuantumMixture m{player, {}};
    for (std::size_t k : kSubalgebra[player_slot(player)]) m.support.emplace_back(k, 0.25);
    return m;
}

DiscreteQuantumMixture point_mixture(int player, std::size_t k) {
    DiscreteQuantumMixture m{player, {{k, 1.0}}};
    validate(m);
    return m;
}

double expected_payoff_mixture(int player, const DiscreteQuantumMixture& m1, const DiscreteQuantumMixture& m2,
                               const DiscreteQuantumMixture& m3, const Game3Payoffs& g) {
    if (m1.player != 1 || m2.player != 2 || m3.player != 3)
        throw std::invalid_argument("mixtures must belong to players 1, 2, 3 in order");
    validate(m1);
    validate(m2);
    validate(m3);
    double acc = 0;
    for (const auto& [s, ws] : m1.support)
        for (const auto& [t, wt] : m2.support)
            for (const auto& [u, wu] : m3.support) acc += ws * wt * wu * payoff_pure_basis(player, s, t, u, g);
    return acc;
}

double payoff_pure_quantum(int player, const SU2Gate& a, const SU2Gate& p, const SU2Gate& e,
                           const Game3Payoffs& g) {
    const auto d = theorem1_distribution(a, p, e);
    double acc = 0;
    for (std::size_t out = 0; out < 8; ++out) acc += d.probs[out] * g.at(player, kOctIndexOfOutcome[out]);
    return acc;
}

double payoff_against_special(int player, const SU2Gate& dev, const Game3Payoffs& g) {
    const std::size_t me = player_slot(player);
    double acc = 0;
    std::array<SU2Gate, 3> st{};
    st[me] = dev;
    const std::size_t o1 = (me + 1) % 3, o2 = (me + 2) % 3;
    for (std::size_t k1 : kSubalgebra[o1]) {
        st[o1] = su2_of_basis(k1, static_cast<int>(o1 + 1));
        for (std::size_t k2 : kSubalgebra[o2]) {
            st[o2] = su2_of_basis(k2, static_cast<int>(o2 + 1));
            acc += payoff_pure_quantum(player, st[0], st[1], st[2], g);
        }
    }
    return acc / 16.0;
}

IndifferenceReport indifference_check(int player, const Game3Payoffs& g, std::size_t samples, double tol,
                                      std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("samples must be at least 1");
    IndifferenceReport r{player, samples, average_payoffs(g)[player_slot(player)], 0.0, tol, false};
    Rng rng(seed);
    for (std::size_t n = 0; n < samples; ++n) {
        const double v = payoff_against_special(player, random_su2(rng), g);
        r.max_deviation = std::max(r.max_deviation, std::abs(v - r.expected));
    }
    r.pass = r.max_deviation < tol;
    return r;
}

std::string profile_label(const Profile& pr) {
    std::string s;
    for (int c : pr) s += c ? 'F' : 'N';
    return s;
}

std::array<double, 3> classical_payoff(const Game3Payoffs& g, const Profile& pr) {
    const std::string label = profile_label(pr);
    return {g.at(1, label), g.at(2, label), g.at(3, label)};
}

std::vector<Profile> classical_pure_scan(const Game3Payoffs& g) {
    std::vector<Profile> eq;
    for (int bits = 0; bits < 8; ++bits) {
        const Profile pr{(bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        const auto base = classical_payoff(g, pr);
        bool stable = true;
        for (std::size_t k = 0; k < 3 && stable; ++k) {
            Profile dev = pr;
            dev[k] = 1 - dev[k];
            if (classical_payoff(g, dev)[k] > base[k]) stable = false;
        }
        if (stable) eq.push_back(pr);
    }
    return eq;
}

std::array<double, 3> classical_mixed_payoff(const Game3Payoffs& g, double p, double q, double r) {
    for (double v : {p, q, r})
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("mixing probabilities must lie in [0, 1]");
    const std::array<double, 3> mix{p, q, r};
    std::array<double, 3> out{};
    for (int bits = 0; bits < 8; ++bits) {
        const Profile pr{(bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        double w = 1;
        for (std::size_t k = 0; k < 3; ++k) w *= pr[k] ? mix[k] : 1.0 - mix[k];
        const auto pay = classical_payoff(g, pr);
        for (std::size_t k = 0; k < 3; ++k) out[k] += w * pay[k];
    }
    return out;
}

std::array<std::array<double, 2>, 3> classical_pure_vs_mixed(const Game3Payoffs& g, double p, double q, double r) {
    std::array<std::array<double, 2>, 3> out{};
    const std::array<double, 3> mix{p, q, r};
    for (std::size_t k = 0; k < 3; ++k) {
        for (int c = 0; c < 2; ++c) {
            auto m = mix;
            m[k] = c;
            out[k][static_cast<std::size_t>(c)] = classical_mixed_payoff(g, m[0], m[1], m[2])[k];
        }
    }
    return out;
}

const BuiltinGames& builtin_games() {
    static const BuiltinGames games = [] {
        // strategy 1 = N, strategy 2 = F
        Game3Payoffs poker;
        poker.set("NNN", {-2, -2, 4});
        poker.set("NFN", {-2, 6, -4});
        poker.set("FNN", {6, -2, -4});
        poker.set("FFN", {10, 10, 20});
        poker.set("NNF", {0, 0, 0});
        poker.set("NFF", {2, -4, 2});
        poker.set("FNF", {-4, 2, 0});
        poker.set("FFF", {-3, -3, 6});

        Game3Payoffs corrected = poker;
        corrected.zero_sum = true;
        for (std::size_t l = 0; l < 8; ++l) corrected.w[2][l] = -(poker.w[0][l] + poker.w[1][l]);

        return BuiltinGames{poker, corrected, poker};
    }();
    return games;
}

}  // namespace hqg
