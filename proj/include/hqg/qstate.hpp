#pragma once
// Dense state vectors for 1-3 qubits, the EWL game states and action bases.
// Qubit 0 is the most significant bit of a basis index.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hqg/hypercomplex.hpp"

namespace hqg {

// general 2x2 complex matrix, row-major
struct Mat2 {
    std::array<cplx, 4> m{};
    cplx operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }
    static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);

// [[x, y], [-conj(y), conj(x)]]
struct SU2Gate {
    cplx x{1.0};
    cplx y{0.0};

    static constexpr double kUnitTol = 1e-10;

    // throws std::invalid_argument when |x|^2 + |y|^2 is not 1
    static SU2Gate checked(cplx x, cplx y);
    static SU2Gate identity() { return {}; }

    double norm2() const { return std::norm(x) + std::norm(y); }
    Mat2 matrix() const { return {{x, y, -std::conj(y), std::conj(x)}}; }
};

class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim);
    explicit StateVector(std::vector<cplx> amps);

    std::size_t dim() const { return amps_.size(); }
    std::size_t qubits() const;
    cplx operator[](std::size_t k) const { return amps_[k]; }
    cplx& operator[](std::size_t k) { return amps_[k]; }
    std::span<const cplx> amps() const { return amps_; }

    double norm2() const;
    StateVector normalized() const;

private:
    std::vector<cplx> amps_;
};

cplx inner(const StateVector& u, const StateVector& v);  // <u, v>, conjugate-linear in u
StateVector kron(const StateVector& a, const StateVector& b);
StateVector apply_gate(const StateVector& v, std::size_t qubit, const Mat2& g);

struct OutcomeDistribution {
    std::vector<std::string> labels;
    std::vector<double> probs;

    double at(const std::string& label) const;
    double total() const;
};

// N/F labels in binary order, N = 0, player 1 first
const std::vector<std::string>& outcome_labels(std::size_t players);

cplx eta(int players);
SU2Gate flip_gate(cplx eta);

StateVector ghz_initial(std::size_t qubits);  // |0..0> + |1..1>, unnormalized

StateVector game_state3(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e);
StateVector game_state3_tensor(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e);
std::array<StateVector, 8> action_basis3(cplx eta);
// printed change-of-basis matrix A^{-1}, row-major
std::array<std::array<cplx, 8>, 8> a_inverse3(cplx eta);
StateVector to_action_basis3(const StateVector& v, cplx eta);
StateVector from_action_basis3(const StateVector& w, cplx eta);

StateVector game_state2(const SU2Gate& a, const SU2Gate& p);
StateVector game_state2_tensor(const SU2Gate& a, const SU2Gate& p);
std::array<StateVector, 4> action_basis2(cplx eta);
StateVector to_action_basis2(const StateVector& v, cplx eta);

// probs_k = |v_k|^2 / |v|^2; throws on the zero vector
OutcomeDistribution measure(const StateVector& v, std::vector<std::string> labels);

OutcomeDistribution oracle_distribution3(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e);
OutcomeDistribution oracle_distribution2(const SU2Gate& a, const SU2Gate& p);

Mat2 hadamard();
// probability the coin reads |0> after u1, a flip with probability p, then u2
double meyer_penny(double p, const Mat2& u1, const Mat2& u2);

}  // namespace hqg
