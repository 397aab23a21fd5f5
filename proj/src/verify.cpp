#include "hqg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hqg/coordgame.hpp"
#include "hqg/parrondo.hpp"
#include "hqg/random.hpp"

namespace hqg {
namespace {

double max_abs_diff(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    double d = 0;
    for (std::size_t k = 0; k < a.probs.size(); ++k) d = std::max(d, std::abs(a.probs[k] - b.probs[k]));
    return d;
}

Metric below(std::string name, double value, double tol) { return {std::move(name), value, tol, value < tol}; }

HDGameParams random_params(Rng& rng) {
    HDGameParams g;
    for (double& p : g.p) p = random_unit_interval(rng);
    return g;
}

}  // namespace

bool SuiteResult::pass() const {
    return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.pass; });
}

SuiteResult verify_theorem1(std::size_t samples, std::uint64_t seed, double tol) {
    Rng rng(seed);
    double dev = 0, sum_dev = 0;
    for (std::size_t n = 0; n < samples; ++n) {
        const SU2Gate a = random_su2(rng), p = random_su2(rng), e = random_su2(rng);
        const auto t = theorem1_distribution(a, p, e);
        dev = std::max(dev, max_abs_diff(t, oracle_distribution3(a, p, e)));
        sum_dev = std::max(sum_dev, std::abs(t.total() - 1.0));
    }
    return {"theorem1", samples, seed,
            {below("max_outcome_deviation", dev, tol), below("max_unnormalized_sum_deviation", sum_dev, tol)}};
}

SuiteResult verify_corollary(double tol) {
    double dev = 0, onehot = 0;
    std::size_t matches = 0;
    for (std::size_t s : kSubalgebra[0])
        for (std::size_t t : kSubalgebra[1])
            for (std::size_t u : kSubalgebra[2]) {
                const auto c = corollary_distribution(s, t, u);
                const auto o = oracle_distribution3(su2_of_basis(s, 1), su2_of_basis(t, 2), su2_of_basis(u, 3));
                const auto th = theorem1_distribution(su2_of_basis(s, 1), su2_of_basis(t, 2), su2_of_basis(u, 3));
                const double d = std::max(max_abs_diff(c, o), max_abs_diff(c, th));
                dev = std::max(dev, d);
                const double hot = *std::max_element(c.probs.begin(), c.probs.end());
                onehot = std::max(onehot, std::abs(hot - 1.0) + std::abs(c.total() - 1.0));
                if (d < tol) ++matches;
            }
    return {"corollary", 64, 0,
            {below("max_deviation_vs_oracle", dev, tol), below("one_hot_defect", onehot, tol),
             Metric{"exact_matches_of_64", static_cast<double>(matches), 0, matches == 64}}};
}

SuiteResult verify_landsburg(std::size_t samples, std::uint64_t seed, double tol) {
    Rng rng(seed);
    double dev = 0;
    for (std::size_t n = 0; n < samples; ++n) {
        const SU2Gate a = random_su2(rng), p = random_su2(rng);
        dev = std::max(dev, max_abs_diff(landsburg_probs(a, p), oracle_distribution2(a, p)));
    }
    return {"landsburg", samples, seed, {below("max_outcome_deviation", dev, tol)}};
}

SuiteResult verify_parrondo(std::size_t samples, std::uint64_t seed, double tol) {
    Rng rng(seed);
    double hd = 0, forms = 0, sup = 0, second = 0, fna = 0, unit = 0;
    const CoinEmbedding t1{CoinKind::type1, eta(3)}, t2{CoinKind::type2, eta(3)};
    for (std::size_t n = 0; n < samples; ++n) {
        const HDGameParams g = random_params(rng);
        const double classical = hd_p_gain_weighted(g);
        const Multiplexer3 m = mux_from_coins(g, t1);
        hd = std::max(hd, std::abs(quantized_p_gain(m, proper_initial_state(hd_stationary(g)), 0) - classical));
        forms = std::max(forms, std::abs(hd_p_gain(g) - classical));
        unit = std::max(unit, unitarity_defect(m.matrices()));

        const HDGameParams a = random_params(rng), b = random_params(rng);
        const double r = random_unit_interval(rng);
        const HDGameParams t = combined_params(r, a, b);
        const auto init = proper_initial_state(hd_stationary(t));
        const double target = hd_p_gain_weighted(t);
        const SuperposedMux s = superpose_mux(r, mux_from_coins(a, t2), mux_from_coins(b, t1));
        sup = std::max(sup, std::abs(quantized_p_gain(s.matrices(), init, 0) - target));
        unit = std::max(unit, unitarity_defect(s.matrices()));
        second = std::max(second, std::abs(quantized_p_gain(second_quantization_mux(r, a, b), init, 0) - target));

        std::array<SU2Gate, 4> gates;
        for (auto& x : gates) x = random_su2(rng);
        std::array<Qubit, 3> q;
        for (auto& x : q) {
            const SU2Gate h = random_su2(rng);
            x = {h.x, h.y};
        }
        fna = std::max(fna, std::abs(fna_p_win(gates, q[0], q[1], q[2]) - fna_p_win_direct(gates, q[0], q[1], q[2])));
    }
    return {"parrondo", samples, seed,
            {below("hd_quantized_vs_classical", hd, tol), below("p_gain_forms_agreement", forms, tol),
             below("superposed_vs_classical", sup, tol), below("second_quantization_vs_classical", second, tol),
             below("fna_closed_form_vs_direct", fna, tol), below("multiplexer_unitarity_defect", unit, tol)}};
}

std::vector<SuiteResult> run_suites(const std::string& suite, std::size_t samples, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    if (!all && suite != "theorem1" && suite != "corollary" && suite != "landsburg" && suite != "parrondo")
        throw std::invalid_argument("unknown suite '" + suite + "'");
    if (all || suite == "theorem1") out.push_back(verify_theorem1(samples, seed));
    if (all || suite == "corollary") out.push_back(verify_corollary());
    if (all || suite == "landsburg") out.push_back(verify_landsburg(samples, seed));
    if (all || suite == "parrondo") out.push_back(verify_parrondo(samples, seed));
    return out;
}

}  // namespace hqg
