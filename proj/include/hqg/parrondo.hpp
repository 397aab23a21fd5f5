#pragma once
// Capital- and history-dependent Parrondo games and their quantizations by
// three-qubit multiplexers (two control qubits, target qubit last).

#include <array>
#include <string>

#include "hqg/qstate.hpp"

namespace hqg {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// probabilities of gain after each of the four two-step histories
struct HDGameParams {
    std::array<double, 4> p{};
};

void validate(const HDGameParams& g);

// gain_first: history states ordered as in the proper quantization,
// loss_first: the index order used for the randomized-sequence inequalities.
// The two are related by p_j <-> p_{5-j}.
enum class HistoryConvention { gain_first, loss_first };

HDGameParams translate_convention(const HDGameParams& g);

// column-stochastic: t[i][j] = Pr(state j -> state i)
Mat4 hd_transition(const HDGameParams& g, HistoryConvention c = HistoryConvention::gain_first);
std::array<double, 4> hd_stationary(const HDGameParams& g, HistoryConvention c = HistoryConvention::gain_first);
// 1 / (2 + x/y)
double hd_p_gain(const HDGameParams& g, HistoryConvention c = HistoryConvention::gain_first);
// sum_j pi_j p_j
double hd_p_gain_weighted(const HDGameParams& g, HistoryConvention c = HistoryConvention::gain_first);
struct HDxy {
    double x, y;
};
HDxy hd_xy(const HDGameParams& g, HistoryConvention c = HistoryConvention::gain_first);

std::string classify(double p_gain, double tol = 1e-12);  // "winning", "fair" or "losing"

Mat3 capital_transition(double p1, double p2);
std::array<double, 3> capital_game_stationary(double p1, double p2);
double capital_p_gain(double p1, double p2);
// game B biases after randomizing with game A (bias pa) with probability q
std::array<double, 2> capital_mixed_params(double q, double pa, double p1, double p2);

enum class CoinKind { type1, type2 };

struct CoinEmbedding {
    CoinKind kind = CoinKind::type1;
    cplx eta = {0.5, 0.8660254037844386};
};

SU2Gate embed_coin(double p, const CoinEmbedding& e);

struct Multiplexer3 {
    std::array<SU2Gate, 4> blocks{};
    std::array<Mat2, 4> matrices() const;
};

Multiplexer3 mux_from_coins(const HDGameParams& g, const CoinEmbedding& e);

// block-diagonal 8x8 action; blocks act on the last qubit
StateVector apply_mux(const std::array<Mat2, 4>& blocks, const StateVector& v);
// max |(M M^dagger - I)_{ij}|
double unitarity_defect(const std::array<Mat2, 4>& blocks);

StateVector proper_initial_state(const std::array<double, 4>& pi);
double quantized_p_gain(const std::array<Mat2, 4>& blocks, const StateVector& init, int win_qubit_value);
double quantized_p_gain(const Multiplexer3& m, const StateVector& init, int win_qubit_value);

struct SuperposedMux {
    cplx gamma1, gamma2;
    Multiplexer3 mux1, mux2;
    std::array<Mat2, 4> matrices() const;
};

// throws unless (g1)^2 + (g2)^2 = 1, |g1|^2 + |g2|^2 = 1 and conj(g1) g2 is real
SuperposedMux make_superposed(cplx gamma1, cplx gamma2, const Multiplexer3& a, const Multiplexer3& b);
// weights sqrt(r) on mux_a, sqrt(1 - r) on mux_b
SuperposedMux superpose_mux(double r, const Multiplexer3& mux_a, const Multiplexer3& mux_b);

HDGameParams combined_params(double r, const HDGameParams& a, const HDGameParams& b);
Multiplexer3 second_quantization_mux(double r, const HDGameParams& a, const HDGameParams& b);

// Quantization with an unentangled product input q1 (x) q2 (x) q3; wins on |1>.
using Qubit = std::array<cplx, 2>;
double fna_p_win(const std::array<SU2Gate, 4>& gates, const Qubit& q1, const Qubit& q2, const Qubit& q3);
double fna_p_win_direct(const std::array<SU2Gate, 4>& gates, const Qubit& q1, const Qubit& q2, const Qubit& q3);

// a = e^{i phi} cos(theta/2), b = e^{i eta} sin(theta/2)
struct FnaAngles {
    double theta = 0, phi = 0, eta = 0;
};
SU2Gate gate_from_angles(const FnaAngles& a);
double fna_equal_superposition(const std::array<FnaAngles, 4>& angles);

struct ParrondoEffectReport {
    double epsilon = 0;
    double p = 0;
    std::array<double, 4> alpha{};
    std::array<double, 4> mix{};
    bool a_losing = false;    // 1 - p > p
    bool b_losing = false;    // (1 - a3)(1 - a4) > a1 a2
    bool mix_winning = false; // (1 - q3)(1 - q4) < q1 q2
    double p_gain_a = 0, p_gain_b = 0, p_gain_mix = 0;
    bool effect = false;
};

ParrondoEffectReport parrondo_effect_check(double epsilon);

}  // namespace hqg
