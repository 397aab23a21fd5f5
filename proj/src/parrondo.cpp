#include "hqg/parrondo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hqg {
namespace {

void check_probability(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

HDGameParams as_gain_first(const HDGameParams& g, HistoryConvention c) {
    validate(g);
    return c == HistoryConvention::gain_first ? g : translate_convention(g);
}

}  // namespace

void validate(const HDGameParams& g) {
    for (double v : g.p) check_probability(v, "coin probability");
}

HDGameParams translate_convention(const HDGameParams& g) { return {{g.p[3], g.p[2], g.p[1], g.p[0]}}; }

Mat4 hd_transition(const HDGameParams& g, HistoryConvention c) {
    const auto [p1, p2, p3, p4] = as_gain_first(g, c).p;
    const Mat4 x{{
        {p1, 0, p3, 0},
        {1 - p1, 0, 1 - p3, 0},
        {0, p2, 0, p4},
        {0, 1 - p2, 0, 1 - p4},
    }};
    if (c == HistoryConvention::gain_first) return x;
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i][j] = x[3 - i][3 - j];
    return r;
}

std::array<double, 4> hd_stationary(const HDGameParams& g, HistoryConvention c) {
    const auto [p1, p2, p3, p4] = as_gain_first(g, c).p;
    const double n = (1 - p1) * (2 * p4 + 1 - p2) + p3 * p4;
    if (!(n > 0)) throw std::domain_error("history-dependent chain has no unique stationary state (N = 0)");
    std::array<double, 4> pi{p3 * p4 / n, p4 * (1 - p1) / n, p4 * (1 - p1) / n, (1 - p1) * (1 - p2) / n};
    if (c == HistoryConvention::loss_first) std::reverse(pi.begin(), pi.end());
    return pi;
}

HDxy hd_xy(const HDGameParams& g, HistoryConvention c) {
    const auto [p1, p2, p3, p4] = as_gain_first(g, c).p;
    return {(1 - p1) * (1 - p2) - p3 * p4, p4 * (p3 + 1 - p1)};
}

double hd_p_gain(const HDGameParams& g, HistoryConvention c) {
    const auto [x, y] = hd_xy(g, c);
    if (!(y > 0)) throw std::domain_error("p_gain = 1/(2 + x/y) needs y > 0");
    return 1.0 / (2.0 + x / y);
}

double hd_p_gain_weighted(const HDGameParams& g, HistoryConvention c) {
    const auto pi = hd_stationary(g, c);
    double s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += pi[j] * g.p[j];
    return s;
}

std::string classify(double p_gain, double tol) {
    if (p_gain > 0.5 + tol) return "winning";
    if (p_gain < 0.5 - tol) return "losing";
    return "fair";
}

Mat3 capital_transition(double p1, double p2) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    Mat3 t{};
    t[1][0] = p1;
    t[2][0] = 1 - p1;
    t[2][1] = p2;
    t[0][1] = 1 - p2;
    t[0][2] = p2;
    t[1][2] = 1 - p2;
    return t;
}

std::array<double, 3> capital_game_stationary(double p1, double p2) {
    const Mat3 t = capital_transition(p1, p2);
    // (T - I) pi = 0 with the last balance row swapped for sum(pi) = 1
    std::array<std::array<double, 4>, 3> m{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = t[i][j] - (i == j ? 1.0 : 0.0);
    }
    m[2] = {1, 1, 1, 1};
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-14)
            throw std::domain_error("capital chain is reducible: stationary state is not unique");
        std::swap(m[col], m[piv]);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

double capital_p_gain(double p1, double p2) {
    const auto pi = capital_game_stationary(p1, p2);
    return pi[0] * p1 + (pi[1] + pi[2]) * p2;
}

std::array<double, 2> capital_mixed_params(double q, double pa, double p1, double p2) {
    check_probability(q, "q");
    check_probability(pa, "pa");
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    return {q * pa + (1 - q) * p1, q * pa + (1 - q) * p2};
}

SU2Gate embed_coin(double p, const CoinEmbedding& e) {
    check_probability(p, "coin probability");
    const double s = std::sqrt(p), c = std::sqrt(1 - p);
    if (e.kind == CoinKind::type1) return {s, -c * std::conj(e.eta)};
    const cplx i{0.0, 1.0};
    return {i * s, -c * std::conj(i * e.eta)};
}

std::array<Mat2, 4> Multiplexer3::matrices() const {
    std::array<Mat2, 4> m;
    for (std::size_t j = 0; j < 4; ++j) m[j] = blocks[j].matrix();
    return m;
}

Multiplexer3 mux_from_coins(const HDGameParams& g, const CoinEmbedding& e) {
    validate(g);
    Multiplexer3 m;
    for (std::size_t j = 0; j < 4; ++j) m.blocks[j] = embed_coin(g.p[j], e);
    return m;
}

StateVector apply_mux(const std::array<Mat2, 4>& blocks, const StateVector& v) {
    if (v.dim() != 8) throw std::invalid_argument("multiplexer acts on 3 qubits");
    StateVector r(8);
    for (std::size_t j = 0; j < 4; ++j) {
        const Mat2& b = blocks[j];
        r[2 * j] = b(0, 0) * v[2 * j] + b(0, 1) * v[2 * j + 1];
        r[2 * j + 1] = b(1, 0) * v[2 * j] + b(1, 1) * v[2 * j + 1];
    }
    return r;
}

double unitarity_defect(const std::array<Mat2, 4>& blocks) {
    double d = 0;
    for (const auto& b : blocks) {
        const Mat2 p = b * adjoint(b);
        const Mat2 id = Mat2::identity();
        for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(p.m[k] - id.m[k]));
    }
    return d;
}

StateVector proper_initial_state(const std::array<double, 4>& pi) {
    StateVector v(8);
    for (std::size_t j = 0; j < 4; ++j) {
        if (pi[j] < 0) throw std::invalid_argument("stationary weights must be nonnegative");
        v[2 * j] = std::sqrt(pi[j]);
    }
    if (v.norm2() == 0.0) throw std::invalid_argument("stationary weights are all zero");
    return v.normalized();
}

double quantized_p_gain(const std::array<Mat2, 4>& blocks, const StateVector& init, int win_qubit_value) {
    if (win_qubit_value != 0 && win_qubit_value != 1) throw std::invalid_argument("win qubit value must be 0 or 1");
    const StateVector out = apply_mux(blocks, init);
    double s = 0;
    for (std::size_t k = 0; k < 8; ++k)
        if (static_cast<int>(k & 1) == win_qubit_value) s += std::norm(out[k]);
    return s / out.norm2();
}

double quantized_p_gain(const Multiplexer3& m, const StateVector& init, int win_qubit_value) {
    return quantized_p_gain(m.matrices(), init, win_qubit_value);
}

std::array<Mat2, 4> SuperposedMux::matrices() const {
    const auto a = mux1.matrices(), b = mux2.matrices();
    std::array<Mat2, 4> m;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) m[j].m[k] = gamma1 * a[j].m[k] + gamma2 * b[j].m[k];
    return m;
}

SuperposedMux make_superposed(cplx gamma1, cplx gamma2, const Multiplexer3& a, const Multiplexer3& b) {
    constexpr double tol = 1e-12;
    const bool ok = std::abs(gamma1 * gamma1 + gamma2 * gamma2 - 1.0) < tol &&
                    std::abs(std::norm(gamma1) + std::norm(gamma2) - 1.0) < tol &&
                    std::abs(std::conj(gamma1) * gamma2 - std::conj(gamma2) * gamma1) < tol;
    if (!ok) throw std::invalid_argument("superposition weights violate the unitarity conditions");
    return {gamma1, gamma2, a, b};
}

SuperposedMux superpose_mux(double r, const Multiplexer3& mux_a, const Multiplexer3& mux_b) {
    check_probability(r, "r");
    return make_superposed(std::sqrt(r), std::sqrt(1 - r), mux_a, mux_b);
}

HDGameParams combined_params(double r, const HDGameParams& a, const HDGameParams& b) {
    check_probability(r, "r");
    validate(a);
    validate(b);
    HDGameParams t;
    for (std::size_t j = 0; j < 4; ++j) t.p[j] = r * a.p[j] + (1 - r) * b.p[j];
    return t;
}

Multiplexer3 second_quantization_mux(double r, const HDGameParams& a, const HDGameParams& b) {
    return mux_from_coins(combined_params(r, a, b), CoinEmbedding{CoinKind::type1, eta(3)});
}

double fna_p_win(const std::array<SU2Gate, 4>& gates, const Qubit& q1, const Qubit& q2, const Qubit& q3) {
    double s = 0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const SU2Gate& g = gates[2 * r + c];
            const cplx amp = std::conj(g.x) * q3[1] - std::conj(g.y) * q3[0];
            s += std::norm(q1[r]) * std::norm(q2[c]) * std::norm(amp);
        }
    }
    return s;
}

double fna_p_win_direct(const std::array<SU2Gate, 4>& gates, const Qubit& q1, const Qubit& q2, const Qubit& q3) {
    const StateVector v = kron(kron(StateVector({q1[0], q1[1]}), StateVector({q2[0], q2[1]})),
                               StateVector({q3[0], q3[1]}));
    std::array<Mat2, 4> m;
    for (std::size_t j = 0; j < 4; ++j) m[j] = gates[j].matrix();
    return quantized_p_gain(m, v, 1);
}

SU2Gate gate_from_angles(const FnaAngles& a) {
    return {std::polar(std::cos(a.theta / 2), a.phi), std::polar(std::sin(a.theta / 2), a.eta)};
}

double fna_equal_superposition(const std::array<FnaAngles, 4>& angles) {
    double s = 0;
    for (const auto& a : angles) s += std::sin(a.theta) * std::cos(a.eta - a.phi);
    return 0.5 - s / 8.0;
}

ParrondoEffectReport parrondo_effect_check(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 0.25)) throw std::invalid_argument("epsilon must lie in [0, 1/4)");
    ParrondoEffectReport r;
    r.epsilon = epsilon;
    r.p = 0.5 - epsilon;
    r.alpha = {0.9 - epsilon, 0.25 - epsilon, 0.25 - epsilon, 0.7 - epsilon};
    for (std::size_t j = 0; j < 4; ++j) r.mix[j] = (r.alpha[j] + r.p) / 2;
    const auto& a = r.alpha;
    const auto& q = r.mix;
    r.a_losing = 1 - r.p > r.p;
    r.b_losing = (1 - a[2]) * (1 - a[3]) > a[0] * a[1];
    r.mix_winning = (1 - q[2]) * (1 - q[3]) < q[0] * q[1];
    r.p_gain_a = r.p;
    r.p_gain_b = hd_p_gain(HDGameParams{a}, HistoryConvention::loss_first);
    r.p_gain_mix = hd_p_gain(HDGameParams{q}, HistoryConvention::loss_first);
    r.effect = r.a_losing && r.b_losing && r.mix_winning;
    return r;
}

}  // namespace hqg
