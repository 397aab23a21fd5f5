#pragma once
// Hypercomplex coordinatizations of the 2- and 3-player games.

#include <array>
#include <cstddef>

#include "hqg/hypercomplex.hpp"
#include "hqg/qstate.hpp"

namespace hqg {

// Outcome labels (binary order NNN..FFF) <-> octonion basis index.
inline constexpr std::array<std::size_t, 8> kOctIndexOfOutcome{0, 7, 6, 2, 4, 5, 3, 1};
inline constexpr std::array<std::size_t, 8> kOutcomeOfOctIndex{0, 7, 3, 6, 4, 5, 2, 1};

// A strategy as a unit octonion plus the two sign variants:
// v10 flips the sign of the real coefficient, v01 that of the i1 coefficient.
struct OctStrategyFamily {
    Octonion v00, v10, v01;
};

// player is 1, 2 or 3; throws on a non-unit pair
OctStrategyFamily embed3(int player, cplx a, cplx b);
OctStrategyFamily embed3(int player, const SU2Gate& g);

OutcomeDistribution theorem1_distribution(const OctStrategyFamily& s, const OctStrategyFamily& t,
                                          const OctStrategyFamily& u);
OutcomeDistribution theorem1_distribution(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e);

// true if basis index k is one of the player's four strategy units
bool is_player_basis(int player, std::size_t k);
// basis index of +-(i_s i_t) i_u
std::size_t basis_product_index(std::size_t s, std::size_t t, std::size_t u);
OutcomeDistribution corollary_distribution(std::size_t s, std::size_t t, std::size_t u);
SU2Gate su2_of_basis(std::size_t k, int player);

Quaternion landsburg_product(const SU2Gate& a, const SU2Gate& p);
OutcomeDistribution landsburg_probs(const SU2Gate& a, const SU2Gate& p);

}  // namespace hqg
