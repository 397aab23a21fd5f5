#include "hqg/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hqg {

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r.m[2 * i + j] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

Mat2 adjoint(const Mat2& a) {
    return {{std::conj(a(0, 0)), std::conj(a(1, 0)), std::conj(a(0, 1)), std::conj(a(1, 1))}};
}

SU2Gate SU2Gate::checked(cplx x, cplx y) {
    SU2Gate g{x, y};
    if (std::abs(g.norm2() - 1.0) > kUnitTol)
        throw std::invalid_argument("strategy pair is not unit norm: |x|^2+|y|^2 = " +
                                    std::to_string(g.norm2()));
    return g;
}

StateVector::StateVector(std::size_t dim) : amps_(dim) {}

StateVector::StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {}

std::size_t StateVector::qubits() const {
    return static_cast<std::size_t>(std::countr_zero(amps_.size()));
}

double StateVector::norm2() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

StateVector StateVector::normalized() const {
    const double n = std::sqrt(norm2());
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    StateVector r = *this;
    for (auto& a : r.amps_) a /= n;
    return r;
}

cplx inner(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    cplx s = 0;
    for (std::size_t k = 0; k < u.dim(); ++k) s += std::conj(u[k]) * v[k];
    return s;
}

StateVector kron(const StateVector& a, const StateVector& b) {
    StateVector r(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = a[i] * b[j];
    return r;
}

StateVector apply_gate(const StateVector& v, std::size_t qubit, const Mat2& g) {
    const std::size_t n = v.qubits();
    if (qubit >= n) throw std::out_of_range("qubit index out of range");
    const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
    StateVector r(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) {
        if (k & bit) continue;
        const cplx a0 = v[k], a1 = v[k | bit];
        r[k] = g(0, 0) * a0 + g(0, 1) * a1;
        r[k | bit] = g(1, 0) * a0 + g(1, 1) * a1;
    }
    return r;
}

double OutcomeDistribution::at(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("unknown outcome label " + label);
    return probs[static_cast<std::size_t>(it - labels.begin())];
}

double OutcomeDistribution::total() const {
    double s = 0;
    for (double p : probs) s += p;
    return s;
}

const std::vector<std::string>& outcome_labels(std::size_t players) {
    static const std::vector<std::string> two{"NN", "NF", "FN", "FF"};
    static const std::vector<std::string> three{"NNN", "NNF", "NFN", "NFF",
                                                "FNN", "FNF", "FFN", "FFF"};
    if (players == 2) return two;
    if (players == 3) return three;
    throw std::invalid_argument("only 2 or 3 players are supported");
}

cplx eta(int players) {
    if (players == 2) return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
    if (players == 3) return {0.5, std::numbers::sqrt3 / 2};
    throw std::invalid_argument("eta is defined for 2 or 3 players");
}

SU2Gate flip_gate(cplx eta) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-12) throw std::invalid_argument("eta must have unit modulus");
    return {0.0, eta};
}

StateVector ghz_initial(std::size_t qubits) {
    StateVector v(std::size_t{1} << qubits);
    v[0] = 1.0;
    v[v.dim() - 1] = 1.0;
    return v;
}

StateVector game_state3(const SU2Gate& g1, const SU2Gate& g2, const SU2Gate& g3) {
    const cplx A = g1.x, B = g1.y, P = g2.x, Q = g2.y, E = g3.x, F = g3.y;
    const auto c = [](cplx z) { return std::conj(z); };
    return StateVector({
        A * P * E + B * Q * F,
        B * Q * c(E) - A * P * c(F),
        B * c(P) * F - A * c(Q) * E,
        A * c(Q) * c(F) + B * c(P) * c(E),
        c(A) * Q * F - c(B) * P * E,
        c(B) * P * c(F) + c(A) * Q * c(E),
        c(B) * c(Q) * E + c(A) * c(P) * F,
        c(A) * c(P) * c(E) - c(B) * c(Q) * c(F),
    });
}

StateVector game_state3_tensor(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e) {
    StateVector v = ghz_initial(3);
    v = apply_gate(v, 0, a.matrix());
    v = apply_gate(v, 1, p.matrix());
    return apply_gate(v, 2, e.matrix());
}

std::array<StateVector, 8> action_basis3(cplx n) {
    const cplx nb = std::conj(n), n2 = n * n, nb2 = nb * nb, n3 = n2 * n, nb3 = nb2 * nb;
    const cplx o = 0.0, l = 1.0;
    return {
        StateVector({l, o, o, o, o, o, o, l}),
        StateVector({o, -nb, o, o, o, o, n, o}),
        StateVector({o, o, -nb, o, o, n, o, o}),
        StateVector({o, o, o, nb2, n2, o, o, o}),
        StateVector({o, o, o, n, -nb, o, o, o}),
        StateVector({o, o, n2, o, o, nb2, o, o}),
        StateVector({o, n2, o, o, o, o, nb2, o}),
        StateVector({n3, o, o, o, o, o, o, -nb3}),
    };
}

std::array<std::array<cplx, 8>, 8> a_inverse3(cplx n) {
    const cplx nb = std::conj(n), n2 = n * n, nb2 = nb * nb;
    std::array<std::array<cplx, 8>, 8> m{};
    m[0][0] = 1.0;      m[0][7] = 1.0;
    m[1][1] = -n;       m[1][6] = nb;
    m[2][2] = -n;       m[2][5] = nb;
    m[3][3] = n2;       m[3][4] = nb2;
    m[4][3] = nb;       m[4][4] = -n;
    m[5][2] = nb2;      m[5][5] = n2;
    m[6][1] = nb2;      m[6][6] = n2;
    m[7][0] = nb2 * nb; m[7][7] = -n2 * n;
    return m;
}

StateVector to_action_basis3(const StateVector& v, cplx n) {
    if (v.dim() != 8) throw std::invalid_argument("expected an 8-dimensional state");
    const auto m = a_inverse3(n);
    StateVector w(8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) w[r] += m[r][c] * v[c];
    return w;
}

StateVector from_action_basis3(const StateVector& w, cplx n) {
    if (w.dim() != 8) throw std::invalid_argument("expected an 8-dimensional state");
    // A = adjoint of A^{-1}; A A^{-1} = 2I
    const auto m = a_inverse3(n);
    StateVector v(8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) v[r] += std::conj(m[c][r]) * w[c] / 2.0;
    return v;
}

StateVector game_state2(const SU2Gate& g1, const SU2Gate& g2) {
    const cplx A = g1.x, B = g1.y, P = g2.x, Q = g2.y;
    const auto c = [](cplx z) { return std::conj(z); };
    return StateVector({
        A * P + B * Q,
        -A * c(Q) + B * c(P),
        -c(B) * P + c(A) * Q,
        c(B) * c(Q) + c(A) * c(P),
    });
}

StateVector game_state2_tensor(const SU2Gate& a, const SU2Gate& p) {
    StateVector v = ghz_initial(2);
    v = apply_gate(v, 0, a.matrix());
    return apply_gate(v, 1, p.matrix());
}

std::array<StateVector, 4> action_basis2(cplx n) {
    const cplx nb = std::conj(n), o = 0.0, l = 1.0;
    return {
        StateVector({l, o, o, l}),
        StateVector({o, -nb, n, o}),
        StateVector({o, n, -nb, o}),
        StateVector({n * n, o, o, nb * nb}),
    };
}

StateVector to_action_basis2(const StateVector& v, cplx n) {
    if (v.dim() != 4) throw std::invalid_argument("expected a 4-dimensional state");
    const auto basis = action_basis2(n);
    StateVector w(4);
    for (std::size_t k = 0; k < 4; ++k) w[k] = inner(basis[k], v);
    return w;
}

OutcomeDistribution measure(const StateVector& v, std::vector<std::string> labels) {
    if (labels.size() != v.dim()) throw std::invalid_argument("label count does not match dimension");
    const double n = v.norm2();
    if (n == 0.0) throw std::invalid_argument("cannot measure the zero vector");
    OutcomeDistribution d{std::move(labels), {}};
    d.probs.reserve(v.dim());
    for (const auto& a : v.amps()) d.probs.push_back(std::norm(a) / n);
    return d;
}

OutcomeDistribution oracle_distribution3(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e) {
    return measure(to_action_basis3(game_state3_tensor(a, p, e), eta(3)), outcome_labels(3));
}

OutcomeDistribution oracle_distribution2(const SU2Gate& a, const SU2Gate& p) {
    return measure(to_action_basis2(game_state2_tensor(a, p), eta(2)), outcome_labels(2));
}

Mat2 hadamard() {
    const double s = std::numbers::sqrt2 / 2;
    return {{s, s, s, -s}};
}

double meyer_penny(double p, const Mat2& u1, const Mat2& u2) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("flip probability must lie in [0, 1]");
    const Mat2 flip{{0.0, 1.0, 1.0, 0.0}};
    const Mat2 rho0{{1.0, 0.0, 0.0, 0.0}};
    const Mat2 rho1 = u1 * rho0 * adjoint(u1);
    const Mat2 f = flip * rho1 * flip;
    Mat2 rho2;
    for (std::size_t k = 0; k < 4; ++k) rho2.m[k] = p * f.m[k] + (1.0 - p) * rho1.m[k];
    const Mat2 rho3 = u2 * rho2 * adjoint(u2);
    return rho3(0, 0).real();
}

}  // namespace hqg
