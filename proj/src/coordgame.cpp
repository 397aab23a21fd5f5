#include "hqg/coordgame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hqg {
namespace {

const std::array<std::size_t, 4>& units_of(int player) {
    if (player < 1 || player > 3) throw std::invalid_argument("player must be 1, 2 or 3");
    return kSubalgebra[static_cast<std::size_t>(player - 1)];
}

}  // namespace

OctStrategyFamily embed3(int player, cplx a, cplx b) {
    const auto& u = units_of(player);
    SU2Gate::checked(a, b);
    constexpr double h = std::numbers::sqrt3 / 2;
    Octonion o;
    o[0] = a.real();
    o[1] = a.imag();
    o[u[2]] = h * b.real() - 0.5 * b.imag();
    o[u[3]] = 0.5 * b.real() + h * b.imag();
    OctStrategyFamily f{o, o, o};
    f.v10[0] = -o[0];
    f.v01[1] = -o[1];
    return f;
}

OctStrategyFamily embed3(int player, const SU2Gate& g) { return embed3(player, g.x, g.y); }

OutcomeDistribution theorem1_distribution(const OctStrategyFamily& s, const OctStrategyFamily& t,
                                          const OctStrategyFamily& u) {
    const Octonion x1 = (s.v10 * t.v10) * u.v01;
    const Octonion y1 = (s.v01 * t.v10) * u.v01;
    const Octonion x2 = (s.v10 * t.v00) * u.v00;
    const Octonion y2 = (s.v01 * t.v00) * u.v00;
    const Octonion pl1 = 0.5 * (x1 + y1), mi1 = 0.5 * (x1 - y1);
    const Octonion pl2 = 0.5 * (x2 + y2), mi2 = 0.5 * (x2 - y2);

    OutcomeDistribution d{outcome_labels(3), std::vector<double>(8)};
    for (std::size_t out = 0; out < 8; ++out) {
        const std::size_t k = kOctIndexOfOutcome[out];
        const bool first = (k == 0 || k == 1 || k == 3 || k == 7);
        const Octonion& pl = first ? pl1 : pl2;
        const Octonion& mi = first ? mi1 : mi2;
        const double a = oct_project(pl, k), b = oct_project(mi, k);
        d.probs[out] = a * a + b * b;
    }
    return d;
}

OutcomeDistribution theorem1_distribution(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e) {
    return theorem1_distribution(embed3(1, a), embed3(2, p), embed3(3, e));
}

bool is_player_basis(int player, std::size_t k) {
    for (std::size_t v : units_of(player))
        if (v == k) return true;
    return false;
}

std::size_t basis_product_index(std::size_t s, std::size_t t, std::size_t u) {
    return kFano.mul(kFano.mul(s, t).index, u).index;
}

OutcomeDistribution corollary_distribution(std::size_t s, std::size_t t, std::size_t u) {
    if (!is_player_basis(1, s) || !is_player_basis(2, t) || !is_player_basis(3, u))
        throw std::invalid_argument("basis strategies must come from {1,i1,i2,i4}, {1,i1,i5,i6}, {1,i1,i3,i7}");
    const Octonion prod = (Octonion::unit(s) * Octonion::unit(t)) * Octonion::unit(u);
    OutcomeDistribution d{outcome_labels(3), std::vector<double>(8)};
    for (std::size_t k = 0; k < 8; ++k) {
        const double c = oct_project(prod, k);
        d.probs[kOutcomeOfOctIndex[k]] = c * c;
    }
    return d;
}

SU2Gate su2_of_basis(std::size_t k, int player) {
    const auto& u = units_of(player);
    constexpr double h = std::numbers::sqrt3 / 2;
    if (k == u[0]) return {1.0, 0.0};
    if (k == u[1]) return {cplx{0.0, 1.0}, 0.0};
    if (k == u[2]) return {0.0, cplx{h, -0.5}};
    if (k == u[3]) return {0.0, cplx{0.5, h}};
    throw std::invalid_argument("basis element is not a strategy of player " + std::to_string(player));
}

Quaternion landsburg_product(const SU2Gate& a, const SU2Gate& p) {
    const cplx n = eta(2);
    // p = A + (B eta) j,  q = P - (eta j) Q = P - eta conj(Q) j
    const Quaternion pa = Quaternion::from_pair(a.x, a.y * n);
    const Quaternion qa = Quaternion::from_pair(p.x, -n * std::conj(p.y));
    return pa * qa;
}

OutcomeDistribution landsburg_probs(const SU2Gate& a, const SU2Gate& p) {
    const Quaternion pq = landsburg_product(a, p);
    // outcome order NN, NF, FN, FF
    const std::array<double, 4> c{quat_project(pq, 1), quat_project(pq, 3), quat_project(pq, 4),
                                  quat_project(pq, 2)};
    double n = 0;
    for (double v : c) n += v * v;
    OutcomeDistribution d{outcome_labels(2), {}};
    for (double v : c) d.probs.push_back(v * v / n);
    return d;
}

}  // namespace hqg
