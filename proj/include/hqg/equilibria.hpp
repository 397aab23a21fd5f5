#pragma once
// Payoffs, the special discrete distribution and classical equilibrium scans
// for 3-player, 2-strategy games.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hqg/coordgame.hpp"

namespace hqg {

// w[player - 1][l] is the payoff when (st)u lands on basis element i_l
struct Game3Payoffs {
    std::array<std::array<double, 8>, 3> w{};
    bool zero_sum = false;

    double at(int player, std::size_t oct_index) const;
    // payoff indexed by outcome label, e.g. "NFF"
    double at(int player, const std::string& label) const;
    void set(const std::string& label, const std::array<double, 3>& payoffs);
};

std::size_t outcome_index(const std::string& label);  // position in NNN..FFF

std::array<double, 3> average_payoffs(const Game3Payoffs& g);
// labels of outcomes whose payoffs do not sum to zero
std::vector<std::string> zero_sum_violations(const Game3Payoffs& g, double tol = 1e-12);

double payoff_pure_basis(int player, std::size_t s, std::size_t t, std::size_t u, const Game3Payoffs& g);

struct DiscreteQuantumMixture {
    int player = 1;
    std::vector<std::pair<std::size_t, double>> support;  // (basis index, weight)
};

// throws if weights are negative, do not sum to 1, or use foreign basis elements
void validate(const DiscreteQuantumMixture& m);
DiscreteQuantumMixture special_distribution(int player);
DiscreteQuantumMixture point_mixture(int player, std::size_t k);

double expected_payoff_mixture(int player, const DiscreteQuantumMixture& m1, const DiscreteQuantumMixture& m2,
                               const DiscreteQuantumMixture& m3, const Game3Payoffs& g);

double payoff_pure_quantum(int player, const SU2Gate& a, const SU2Gate& p, const SU2Gate& e,
                           const Game3Payoffs& g);

// payoff to `player` playing pure strategy `dev` while the others play the special distribution
double payoff_against_special(int player, const SU2Gate& dev, const Game3Payoffs& g);

struct IndifferenceReport {
    int player = 1;
    std::size_t samples = 0;
    double expected = 0;
    double max_deviation = 0;
    double tol = 0;
    bool pass = false;
};

IndifferenceReport indifference_check(int player, const Game3Payoffs& g, std::size_t samples, double tol,
                                      std::uint64_t seed);

// strategy choices, 0 = first (N), 1 = second (F), players in order
using Profile = std::array<int, 3>;

std::string profile_label(const Profile& pr);
std::array<double, 3> classical_payoff(const Game3Payoffs& g, const Profile& pr);
std::vector<Profile> classical_pure_scan(const Game3Payoffs& g);
// p, q, r are the probabilities of each player's second strategy
std::array<double, 3> classical_mixed_payoff(const Game3Payoffs& g, double p, double q, double r);
// for each player, the payoff of each pure strategy against the others' mixtures
std::array<std::array<double, 2>, 3> classical_pure_vs_mixed(const Game3Payoffs& g, double p, double q, double r);

struct BuiltinGames {
    Game3Payoffs poker_printed;
    Game3Payoffs poker_zero_sum_corrected;
    Game3Payoffs dilemma_printed;
};

const BuiltinGames& builtin_games();

}  // namespace hqg
