#pragma once
// Quaternions and octonions with a fixed Fano-plane product table.

#include <array>
#include <complex>
#include <cstddef>

namespace hqg {

using cplx = std::complex<double>;

struct Octonion {
    std::array<double, 8> c{};

    static constexpr Octonion unit(std::size_t k) {
        Octonion o;
        o.c.at(k) = 1.0;
        return o;
    }
    static constexpr Octonion real(double r) {
        Octonion o;
        o.c[0] = r;
        return o;
    }

    constexpr double operator[](std::size_t k) const { return c[k]; }
    constexpr double& operator[](std::size_t k) { return c[k]; }

    friend constexpr bool operator==(const Octonion&, const Octonion&) = default;
};

Octonion operator+(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a);
Octonion operator*(double s, const Octonion& a);
Octonion operator*(const Octonion& a, const Octonion& b);

Octonion oct_mul(const Octonion& a, const Octonion& b);
Octonion oct_conj(const Octonion& a);
double oct_norm2(const Octonion& a);
double oct_norm(const Octonion& a);
// coefficient on i_k (i_0 = 1); throws std::out_of_range for k > 7
double oct_project(const Octonion& a, std::size_t k);

// Product of two imaginary units i_j i_k (j,k in 1..7).
struct FanoTable {
    std::array<std::array<int, 7>, 7> sign{};
    std::array<std::array<std::size_t, 7>, 7> index{};

    struct Product {
        int sign;
        std::size_t index;
    };
    // basis-element product for any j,k in 0..7
    constexpr Product mul(std::size_t j, std::size_t k) const {
        if (j == 0) return {1, k};
        if (k == 0) return {1, j};
        return {sign[j - 1][k - 1], index[j - 1][k - 1]};
    }
};

inline constexpr std::array<std::array<std::size_t, 3>, 7> kFanoLines{{
    {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
}};

constexpr FanoTable make_fano_table() {
    FanoTable t;
    for (std::size_t j = 0; j < 7; ++j) {
        t.sign[j][j] = -1;
        t.index[j][j] = 0;
    }
    for (const auto& l : kFanoLines) {
        for (std::size_t r = 0; r < 3; ++r) {
            const std::size_t a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
            t.sign[a - 1][b - 1] = 1;
            t.index[a - 1][b - 1] = c;
            t.sign[b - 1][a - 1] = -1;
            t.index[b - 1][a - 1] = c;
        }
    }
    return t;
}

inline constexpr FanoTable kFano = make_fano_table();

// The three quaternionic subalgebras {1, i1, u, v} used for players 1..3;
// the embedding is i -> i1, j -> u, k -> v.
inline constexpr std::array<std::array<std::size_t, 4>, 3> kSubalgebra{{
    {0, 1, 2, 4},
    {0, 1, 5, 6},
    {0, 1, 3, 7},
}};

struct Quaternion {
    double re = 0, x = 0, y = 0, z = 0;

    // A + B j with z j = j conj(z)
    static Quaternion from_pair(cplx a, cplx b) {
        return {a.real(), a.imag(), b.real(), b.imag()};
    }
    cplx first() const { return {re, x}; }
    cplx second() const { return {y, z}; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator*(double s, const Quaternion& a);
Quaternion operator*(const Quaternion& a, const Quaternion& b);

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion quat_conj(const Quaternion& a);
double quat_norm(const Quaternion& a);
// k = 1..4 over {1, i, j, k}; throws std::out_of_range otherwise
double quat_project(const Quaternion& a, std::size_t k);

// quaternion placed in subalgebra 0..2 (see kSubalgebra)
Octonion embed_quaternion(const Quaternion& q, std::size_t subalgebra);

}  // namespace hqg
