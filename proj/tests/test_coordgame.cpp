#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hqg/coordgame.hpp"
#include "hqg/random.hpp"

using namespace hqg;

namespace {

double max_diff(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    REQUIRE(a.labels == b.labels);
    double d = 0;
    for (std::size_t k = 0; k < a.probs.size(); ++k) d = std::max(d, std::abs(a.probs[k] - b.probs[k]));
    return d;
}

// projection onto the printed action vectors of the printed game state
OutcomeDistribution projected(const SU2Gate& a, const SU2Gate& p, const SU2Gate& e) {
    const StateVector v = game_state3(a, p, e);
    const auto basis = action_basis3(eta(3));
    std::vector<double> pr;
    double tot = 0;
    for (const auto& b : basis) {
        pr.push_back(std::norm(inner(b, v)));
        tot += pr.back();
    }
    for (double& x : pr) x /= tot;
    return {outcome_labels(3), pr};
}

constexpr double h = std::numbers::sqrt3 / 2;

}  // namespace

TEST_CASE("embedding coefficients") {
    const auto f = embed3(1, 1.0, 0.0);
    CHECK(f.v00 == Octonion::real(1));
    CHECK(f.v10 == Octonion::real(-1));
    CHECK(f.v01 == Octonion::real(1));

    const auto s = embed3(1, 0.0, 1.0);
    CHECK(s.v00[2] == doctest::Approx(h));
    CHECK(s.v00[4] == doctest::Approx(0.5));
    CHECK(oct_norm(s.v00) == doctest::Approx(1.0));

    const auto u = embed3(3, 0.0, eta(3));
    CHECK(std::abs(u.v00[3]) < 1e-15);
    CHECK(u.v00[7] == doctest::Approx(1.0));

    CHECK_THROWS_AS(embed3(1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(embed3(4, 1.0, 0.0), std::invalid_argument);

    Rng rng(4);
    for (int n = 0; n < 500; ++n)
        for (int pl = 1; pl <= 3; ++pl) {
            const auto g = embed3(pl, random_su2(rng));
            CHECK(std::abs(oct_norm(g.v00) - 1.0) < 1e-12);
            int d10 = 0, d01 = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                d10 += g.v10[k] != g.v00[k];
                d01 += g.v01[k] != g.v00[k];
            }
            CHECK(d10 <= 1);
            CHECK(d01 <= 1);
            CHECK(g.v10[0] == -g.v00[0]);
            CHECK(g.v01[1] == -g.v00[1]);
        }
}

TEST_CASE("outcome index map is a bijection") {
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(kOutcomeOfOctIndex[kOctIndexOfOutcome[k]] == k);
        CHECK(kOctIndexOfOutcome[kOutcomeOfOctIndex[k]] == k);
    }
    const auto& l = outcome_labels(3);
    CHECK(l[kOutcomeOfOctIndex[0]] == "NNN");
    CHECK(l[kOutcomeOfOctIndex[1]] == "FFF");
    CHECK(l[kOutcomeOfOctIndex[2]] == "NFF");
    CHECK(l[kOutcomeOfOctIndex[3]] == "FFN");
    CHECK(l[kOutcomeOfOctIndex[4]] == "FNN");
    CHECK(l[kOutcomeOfOctIndex[5]] == "FNF");
    CHECK(l[kOutcomeOfOctIndex[6]] == "NFN");
    CHECK(l[kOutcomeOfOctIndex[7]] == "NNF");
}

TEST_CASE("octonionic distribution matches oracle") {
    const SU2Gate id = SU2Gate::identity();
    const auto d = theorem1_distribution(id, id, id);
    CHECK(d.at("NNN") == doctest::Approx(1.0));
    CHECK(d.total() == doctest::Approx(1.0));

    const SU2Gate f = flip_gate(eta(3));
    CHECK(theorem1_distribution(f, f, f).at("FFF") == doctest::Approx(1.0));
    CHECK(theorem1_distribution(f, id, id).at("FNN") == doctest::Approx(1.0));
    CHECK(theorem1_distribution(id, f, f).at("NFF") == doctest::Approx(1.0));

    Rng rng(31337);
    double d_or = 0, d_proj = 0, sum = 0;
    for (int n = 0; n < 2000; ++n) {
        const SU2Gate a = random_su2(rng), p = random_su2(rng), e = random_su2(rng);
        const auto t = theorem1_distribution(a, p, e);
        d_or = std::max(d_or, max_diff(t, oracle_distribution3(a, p, e)));
        d_proj = std::max(d_proj, max_diff(t, projected(a, p, e)));
        sum = std::max(sum, std::abs(t.total() - 1.0));
    }
    CHECK(d_or < 1e-10);
    CHECK(d_proj < 1e-10);
    CHECK(sum < 1e-12);
}

TEST_CASE("corollary basis triples") {
    CHECK(corollary_distribution(0, 0, 0).at("NNN") == 1.0);
    CHECK(corollary_distribution(4, 6, 7).at("FFF") == 1.0);
    CHECK_THROWS_AS(corollary_distribution(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(corollary_distribution(0, 2, 0), std::invalid_argument);

    int count = 0;
    for (std::size_t s : kSubalgebra[0])
        for (std::size_t t : kSubalgebra[1])
            for (std::size_t u : kSubalgebra[2]) {
                const auto c = corollary_distribution(s, t, u);
                const std::size_t hot = kOutcomeOfOctIndex[basis_product_index(s, t, u)];
                CHECK(c.probs[hot] == 1.0);
                CHECK(c.total() == 1.0);
                const SU2Gate a = su2_of_basis(s, 1), p = su2_of_basis(t, 2), e = su2_of_basis(u, 3);
                CHECK(max_diff(c, oracle_distribution3(a, p, e)) < 1e-12);
                CHECK(max_diff(c, theorem1_distribution(a, p, e)) < 1e-12);
                ++count;
            }
    CHECK(count == 64);
}

TEST_CASE("basis preimages") {
    const auto a = su2_of_basis(0, 1);
    CHECK(a.x == cplx{1, 0});
    CHECK(a.y == cplx{0, 0});
    CHECK(su2_of_basis(1, 1).x == cplx{0, 1});
    const auto b = su2_of_basis(4, 1);
    CHECK(std::abs(b.y - eta(3)) < 1e-15);
    CHECK_THROWS_AS(su2_of_basis(5, 1), std::invalid_argument);
    for (int pl = 1; pl <= 3; ++pl)
        for (std::size_t k : kSubalgebra[static_cast<std::size_t>(pl - 1)]) {
            const auto g = embed3(pl, su2_of_basis(k, pl)).v00;
            const Octonion want = Octonion::unit(k);
            for (std::size_t c = 0; c < 8; ++c) CHECK(std::abs(g[c] - want[c]) < 1e-15);
        }
}

TEST_CASE("landsburg 2-player coordinatization") {
    const SU2Gate id = SU2Gate::identity();
    CHECK(landsburg_probs(id, id).at("NN") == doctest::Approx(1.0));
    const SU2Gate f{0.0, eta(2)};
    CHECK(landsburg_probs(f, f).at("FF") == doctest::Approx(1.0));
    CHECK(landsburg_probs(f, id).at("FN") == doctest::Approx(1.0));
    CHECK(landsburg_probs(id, f).at("NF") == doctest::Approx(1.0));

    Rng rng(77);
    double d = 0;
    for (int n = 0; n < 1000; ++n) {
        const SU2Gate a = random_su2(rng), p = random_su2(rng);
        const auto l = landsburg_probs(a, p);
        CHECK(std::abs(l.total() - 1.0) < 1e-12);
        CHECK(std::abs(quat_norm(landsburg_product(a, p)) - 1.0) < 1e-12);
        d = std::max(d, max_diff(l, oracle_distribution2(a, p)));
    }
    CHECK(d < 1e-10);
}
