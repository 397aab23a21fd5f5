// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

#include "hqg/coordgame.hpp"
#include "hqg/equilibria.hpp"
#include "hqg/parrondo.hpp"
#include "hqg/random.hpp"

using namespace hqg;

namespace {

int failures = 0;

void report(int n, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", n, title.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double max_diff(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    double d = 0;
    for (std::size_t k = 0; k < a.probs.size(); ++k) d = std::max(d, std::abs(a.probs[k] - b.probs[k]));
    return d;
}

HDGameParams random_params(Rng& rng) {
    HDGameParams g;
    for (double& p : g.p) p = random_unit_interval(rng);
    return g;
}

void theorem1() {
    Rng rng(20240601);
    const auto t0 = std::chrono::steady_clock::now();
    double dev = 0;
    for (int n = 0; n < 10000; ++n) {
        const SU2Gate a = random_su2(rng), p = random_su2(rng), e = random_su2(rng);
        dev = std::max(dev, max_diff(theorem1_distribution(a, p, e), oracle_distribution3(a, p, e)));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "octonionic distribution vs state-vector oracle", dev < 1e-10 && secs < 10.0,
           "10000 triples, max deviation " + fmt(dev) + " (tol 1e-10), " + fmt(secs) + " s (limit 10 s)");
}

void corollary() {
    double dev = 0;
    int onehot = 0, count = 0;
    for (std::size_t s : kSubalgebra[0])
        for (std::size_t t : kSubalgebra[1])
            for (std::size_t u : kSubalgebra[2]) {
                const auto c = corollary_distribution(s, t, u);
                ++count;
                if (std::count(c.probs.begin(), c.probs.end(), 1.0) == 1 &&
                    std::count(c.probs.begin(), c.probs.end(), 0.0) == 7)
                    ++onehot;
                dev = std::max(dev, max_diff(c, oracle_distribution3(su2_of_basis(s, 1), su2_of_basis(t, 2),
                                                                     su2_of_basis(u, 3))));
            }
    report(2, "basis-triple reduction", count == 64 && onehot == 64 && dev < 1e-12,
           std::to_string(onehot) + "/" + std::to_string(count) + " one-hot, max deviation " + fmt(dev) +
               " (tol 1e-12)");
}

void orthogonality() {
    const auto b3 = action_basis3(eta(3));
    double w3 = 0;
    int pairs = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j, ++pairs) w3 = std::max(w3, std::abs(inner(b3[i], b3[j])));
    const auto b2 = action_basis2(eta(2));
    double w2 = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) w2 = std::max(w2, std::abs(inner(b2[i], b2[j])));
    const double e6 = std::abs(std::pow(eta(3), 6) - 1.0), e8 = std::abs(std::pow(eta(2), 8) - 1.0);
    report(3, "action-basis orthogonality", pairs == 28 && w3 < 1e-12 && w2 < 1e-12 && e6 < 1e-12 && e8 < 1e-12,
           "3-player max |<u,v>| " + fmt(w3) + " over " + std::to_string(pairs) + " pairs, 2-player " + fmt(w2) +
               ", |eta3^6-1| " + fmt(e6) + ", |eta2^8-1| " + fmt(e8) + " (tol 1e-12)");
}

void special_distribution_payoff() {
    Rng rng(777);
    std::uniform_real_distribution<double> u(-10, 10);
    double dev = 0;
    Game3Payoffs g;
    for (int n = 0; n < 100; ++n) {
        for (auto& row : g.w)
            for (double& v : row) v = u(rng);
        const auto avg = average_payoffs(g);
        for (int k = 1; k <= 3; ++k)
            dev = std::max(dev, std::abs(expected_payoff_mixture(k, special_distribution(1), special_distribution(2),
                                                                 special_distribution(3), g) -
                                         avg[static_cast<std::size_t>(k - 1)]));
    }
    double ind = 0;
    for (int k = 1; k <= 3; ++k) ind = std::max(ind, indifference_check(k, g, 1000, 1e-10, 4000 + k).max_deviation);
    report(4, "special distribution payoff and indifference", dev < 1e-12 && ind < 1e-10,
           "100 games, max |E - sum W/8| " + fmt(dev) + " (tol 1e-12); 1000 deviations per player, max " +
               fmt(ind) + " (tol 1e-10)");
}

void poker() {
    const auto& g = builtin_games();
    const auto printed = average_payoffs(g.poker_printed);
    const auto corrected = average_payoffs(g.poker_zero_sum_corrected);
    const auto viol = zero_sum_violations(g.poker_printed);
    const auto scan = classical_pure_scan(g.poker_zero_sum_corrected);
    const auto scan_printed = classical_pure_scan(g.poker_printed);
    const auto dilemma = classical_pure_scan(g.dilemma_printed);

    std::ostringstream os;
    os << "printed (" << printed[0] << ", " << printed[1] << ", " << printed[2] << "), corrected player 3 "
       << corrected[2] << "; WARNING printed table is not zero-sum at";
    for (const auto& l : viol) os << ' ' << l;
    os << " so printed player 3 = " << printed[2] << "; pure Nash (corrected):";
    if (scan.empty()) os << " none";
    os << "; pure Nash (printed):";
    for (const auto& p : scan_printed) os << ' ' << profile_label(p);
    os << "; dilemma pure Nash:";
    for (const auto& p : dilemma) {
        const auto pay = classical_payoff(g.dilemma_printed, p);
        os << ' ' << profile_label(p) << " payoff (" << pay[0] << ", " << pay[1] << ", " << pay[2] << ")";
    }
    const auto dq = average_payoffs(g.dilemma_printed);
    os << " [note: expected DDD with (2,2,2) and quantum (0.5,0.5,0.5); table gives quantum (" << dq[0] << ", "
       << dq[1] << ", " << dq[2] << ")]";
    const bool ok = printed[0] == 0.875 && printed[1] == 0.875 && corrected[2] == -1.75 && printed[2] == 3.0 &&
                    !viol.empty() && scan.empty() && !dilemma.empty();
    report(5, "poker and dilemma applications", ok, os.str());
}

void landsburg() {
    Rng rng(99);
    double dev = 0;
    for (int n = 0; n < 1000; ++n) {
        const SU2Gate a = random_su2(rng), p = random_su2(rng);
        dev = std::max(dev, max_diff(landsburg_probs(a, p), oracle_distribution2(a, p)));
    }
    report(6, "quaternionic 2-player distribution vs oracle", dev < 1e-10,
           "1000 pairs, max deviation " + fmt(dev) + " (tol 1e-10)");
}

void parrondo() {
    const auto cap = capital_game_stationary(0.1, 0.75);
    const double dcap = std::max({std::abs(cap[0] - 5.0 / 13), std::abs(cap[1] - 2.0 / 13), std::abs(cap[2] - 6.0 / 13)});
    const auto mp = capital_mixed_params(0.5, 0.5, 0.1, 0.75);
    const auto mix = capital_game_stationary(mp[0], mp[1]);
    const double dmix = std::max(
        {std::abs(mix[0] - 245.0 / 709), std::abs(mix[1] - 180.0 / 709), std::abs(mix[2] - 284.0 / 709)});

    Rng rng(31415);
    const CoinEmbedding t1{CoinKind::type1, eta(3)}, t2{CoinKind::type2, eta(3)};
    double hd = 0, sup = 0, sec = 0, fna = 0;
    const double s = std::sqrt(0.5);
    const Qubit plus{s, s};
    for (int n = 0; n < 1000; ++n) {
        const HDGameParams g = random_params(rng);
        hd = std::max(hd, std::abs(quantized_p_gain(mux_from_coins(g, t1), proper_initial_state(hd_stationary(g)), 0) -
                                   hd_p_gain_weighted(g)));

        const HDGameParams a = random_params(rng), b = random_params(rng);
        const double r = random_unit_interval(rng);
        const HDGameParams t = combined_params(r, a, b);
        const auto tau = hd_stationary(t);
        double num = 0, den = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            num += tau[j] * t.p[j];
            den += tau[j];
        }
        const auto init = proper_initial_state(tau);
        sup = std::max(sup, std::abs(quantized_p_gain(superpose_mux(r, mux_from_coins(a, t2), mux_from_coins(b, t1)).matrices(),
                                                      init, 0) - num / den));
        sec = std::max(sec, std::abs(quantized_p_gain(second_quantization_mux(r, a, b), init, 0) - num / den));

        std::array<FnaAngles, 4> ang;
        std::array<SU2Gate, 4> gates;
        for (std::size_t j = 0; j < 4; ++j) {
            ang[j] = {std::numbers::pi * random_unit_interval(rng), 2 * std::numbers::pi * random_unit_interval(rng),
                      2 * std::numbers::pi * random_unit_interval(rng)};
            gates[j] = gate_from_angles(ang[j]);
        }
        fna = std::max(fna, std::abs(fna_equal_superposition(ang) - fna_p_win_direct(gates, plus, plus, plus)));
    }
    const auto eff = parrondo_effect_check(1.0 / 200);
    const bool ok = dcap < 1e-12 && dmix < 1e-12 && hd < 1e-12 && sup < 1e-12 && sec < 1e-12 && fna < 1e-12 &&
                    eff.a_losing && eff.b_losing && eff.mix_winning;
    report(7, "Parrondo golden values and quantizations", ok,
           "capital " + fmt(dcap) + ", mixed " + fmt(dmix) + ", HD quantized " + fmt(hd) + ", superposed " + fmt(sup) +
               ", second quantization " + fmt(sec) + ", FNA " + fmt(fna) + " (tol 1e-12); eps=1/200 (A)=" +
               (eff.a_losing ? "yes" : "no") + " (B)=" + (eff.b_losing ? "yes" : "no") +
               " (C)=" + (eff.mix_winning ? "yes" : "no"));
}

void algebra() {
    Rng rng(2718);
    std::normal_distribution<double> nd;
    double comp = 0, alt = 0;
    for (int n = 0; n < 10000; ++n) {
        Octonion a, b;
        for (double& c : a.c) c = nd(rng);
        for (double& c : b.c) c = nd(rng);
        comp = std::max(comp, std::abs(oct_norm(a * b) - oct_norm(a) * oct_norm(b)));
        const Octonion l = (a * a) * b - a * (a * b), r = (a * b) * b - a * (b * b);
        for (std::size_t k = 0; k < 8; ++k) alt = std::max({alt, std::abs(l[k]), std::abs(r[k])});
    }
    bool closed = true;
    for (const auto& sub : kSubalgebra)
        for (std::size_t x : sub)
            for (std::size_t y : sub)
                closed = closed && std::find(sub.begin(), sub.end(), kFano.mul(x, y).index) != sub.end();
    int witnesses = 0;
    for (std::size_t a = 1; a < 8; ++a)
        for (std::size_t b = 1; b < 8; ++b)
            for (std::size_t c = 1; c < 8; ++c) {
                const Octonion ea = Octonion::unit(a), eb = Octonion::unit(b), ec = Octonion::unit(c);
                if ((ea * eb) * ec != ea * (eb * ec)) ++witnesses;
            }
    report(8, "octonion algebra properties", comp < 1e-10 && alt < 1e-10 && closed && witnesses > 0,
           "10000 pairs, composition " + fmt(comp) + ", alternativity " + fmt(alt) + " (tol 1e-10); subalgebras " +
               (closed ? "closed" : "NOT closed") + "; " + std::to_string(witnesses) + " non-associative unit triples");
}

void meyer() {
    double dev = 0;
    for (int k = 0; k <= 10; ++k) dev = std::max(dev, std::abs(meyer_penny(k / 10.0, hadamard(), hadamard()) - 1.0));
    report(9, "penny flip winning strategy", dev < 1e-12, "p = 0, 0.1, ..., 1, max |P(win) - 1| " + fmt(dev) + " (tol 1e-12)");
}

}  // namespace

int main() {
    theorem1();
    corollary();
    orthogonality();
    special_distribution_payoff();
    poker();
    landsburg();
    parrondo();
    algebra();
    meyer();
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
