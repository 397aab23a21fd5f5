#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hqg/hypercomplex.hpp"

using namespace hqg;

namespace {

Octonion random_oct(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Octonion o;
    for (double& c : o.c) c = n(rng);
    return o;
}

Quaternion random_quat(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng), n(rng), n(rng)};
}

double max_diff(const Octonion& a, const Octonion& b) {
    double d = 0;
    for (std::size_t k = 0; k < 8; ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

double max_diff(const Quaternion& a, const Quaternion& b) {
    return std::max({std::abs(a.re - b.re), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

const Octonion e(std::size_t k) { return Octonion::unit(k); }

}  // namespace

TEST_CASE("octonion unit products") {
    CHECK(e(0) * e(5) == e(5));
    CHECK(e(1) * e(1) == Octonion::real(-1));
    CHECK(e(1) * e(2) == e(4));
    CHECK(e(2) * e(1) == -e(4));
    CHECK((e(4) * e(6)) * e(7) == e(1));
}

TEST_CASE("fano table structure") {
    for (std::size_t j = 1; j < 8; ++j) {
        CHECK(e(j) * e(j) == Octonion::real(-1));
        for (std::size_t k = 1; k < 8; ++k) {
            if (j == k) continue;
            CHECK(e(j) * e(k) == -(e(k) * e(j)));
            const auto p = kFano.mul(j, k);
            CHECK(p.index != 0);
            CHECK(p.index != j);
            CHECK(p.index != k);
        }
    }
    // each line (a,b,c) satisfies i_a i_b i_c = -1
    for (const auto& l : kFanoLines) CHECK((e(l[0]) * e(l[1])) * e(l[2]) == Octonion::real(-1));
}

TEST_CASE("conjugate and projection") {
    CHECK(oct_conj(e(0)) == e(0));
    CHECK(oct_conj(e(3)) == -e(3));
    CHECK(oct_conj(2.0 * e(0) + 3.0 * e(5)) == 2.0 * e(0) - 3.0 * e(5));
    CHECK(oct_project(e(0), 0) == 1.0);
    CHECK(oct_project((e(4) * e(6)) * e(7), 1) == 1.0);
    CHECK_THROWS_AS(oct_project(e(0), 8), std::out_of_range);

    // identity strategies: s10 = t10 = -1, s01 = u01 = 1
    const Octonion s10 = Octonion::real(-1), s01 = Octonion::real(1), t10 = Octonion::real(-1),
                   u01 = Octonion::real(1);
    const Octonion half = 0.5 * ((s10 * t10) * u01 - (s01 * t10) * u01);
    CHECK(oct_project(half, 0) == doctest::Approx(1.0));
}

TEST_CASE("octonion conjugate properties") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 200; ++n) {
        const Octonion a = random_oct(rng);
        CHECK(oct_conj(oct_conj(a)) == a);
        const Octonion aa = a * oct_conj(a);
        CHECK(aa[0] == doctest::Approx(oct_norm2(a)).epsilon(1e-12));
        for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(aa[k]) < 1e-12);
    }
}

TEST_CASE("composition and alternativity") {
    std::mt19937_64 rng(11);
    double comp = 0, alt = 0;
    for (int n = 0; n < 10000; ++n) {
        const Octonion a = random_oct(rng), b = random_oct(rng);
        comp = std::max(comp, std::abs(oct_norm(a * b) - oct_norm(a) * oct_norm(b)));
        if (n < 1000) {
            alt = std::max(alt, max_diff((a * a) * b, a * (a * b)));
            alt = std::max(alt, max_diff((a * b) * b, a * (b * b)));
        }
    }
    CHECK(comp < 1e-10);
    CHECK(alt < 1e-10);
}

TEST_CASE("octonions are not associative") {
    int witnesses = 0;
    for (std::size_t a = 1; a < 8; ++a)
        for (std::size_t b = 1; b < 8; ++b)
            for (std::size_t c = 1; c < 8; ++c)
                if ((e(a) * e(b)) * e(c) != e(a) * (e(b) * e(c))) ++witnesses;
    CHECK(witnesses > 0);
    CHECK((e(1) * e(2)) * e(3) == -(e(1) * (e(2) * e(3))));
}

TEST_CASE("quaternionic subalgebras close exactly") {
    std::mt19937_64 rng(3);
    for (std::size_t s = 0; s < 3; ++s) {
        const auto& u = kSubalgebra[s];
        for (std::size_t a : u)
            for (std::size_t b : u) {
                const auto p = kFano.mul(a, b);
                CHECK(std::find(u.begin(), u.end(), p.index) != u.end());
            }
        for (int n = 0; n < 100; ++n) {
            const Quaternion p = random_quat(rng), q = random_quat(rng);
            const Octonion prod = embed_quaternion(p, s) * embed_quaternion(q, s);
            for (std::size_t k = 0; k < 8; ++k)
                if (std::find(u.begin(), u.end(), k) == u.end()) CHECK(prod[k] == 0.0);
            CHECK(max_diff(prod, embed_quaternion(p * q, s)) < 1e-12);
        }
    }
}

TEST_CASE("quaternion products") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(i * j == k);
    CHECK(j * i == -1.0 * k);
    CHECK(i * j * k == Quaternion{-1, 0, 0, 0});

    // z j = j conj(z)
    const cplx z{0.3, -1.7};
    CHECK(max_diff(Quaternion::from_pair(z, 0) * j, j * Quaternion::from_pair(std::conj(z), 0)) < 1e-15);

    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    const cplx et{std::sqrt(0.5), std::sqrt(0.5)};
    for (int t = 0; t < 100; ++t) {
        const cplx A{n(rng), n(rng)}, B{n(rng), n(rng)}, P{n(rng), n(rng)}, Q{n(rng), n(rng)};
        // (A + B eta j)(P - eta j Q) = (AP + BQ) + (-A conj Q + B conj P) eta j
        const Quaternion lhs = Quaternion::from_pair(A, B * et) * Quaternion::from_pair(P, -et * std::conj(Q));
        const Quaternion rhs = Quaternion::from_pair(A * P + B * Q, (-A * std::conj(Q) + B * std::conj(P)) * et);
        CHECK(max_diff(lhs, rhs) < 1e-12);

        const Quaternion a = random_quat(rng), b = random_quat(rng);
        CHECK(std::abs(quat_norm(a * b) - quat_norm(a) * quat_norm(b)) < 1e-12);
        CHECK(quat_conj(quat_conj(a)) == a);
        const Quaternion aa = a * quat_conj(a);
        CHECK(std::abs(aa.x) + std::abs(aa.y) + std::abs(aa.z) < 1e-12);
    }
}

TEST_CASE("quaternion projections") {
    CHECK(quat_project(Quaternion{1, 0, 0, 0}, 1) == 1.0);
    CHECK(quat_project(Quaternion::from_pair(1.0, 0.0) * Quaternion::from_pair(1.0, 0.0), 1) == 1.0);
    CHECK(quat_project(Quaternion::from_pair(cplx{0, 1}, 0.0) * Quaternion::from_pair(1.0, 0.0), 2) == 1.0);
    CHECK_THROWS_AS(quat_project(Quaternion{}, 0), std::out_of_range);
    CHECK_THROWS_AS(quat_project(Quaternion{}, 5), std::out_of_range);
}
