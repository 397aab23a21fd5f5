#include "hqg/hypercomplex.hpp"

#include <cmath>
#include <stdexcept>

namespace hqg {

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = a[k] + b[k];
    return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = a[k] - b[k];
    return r;
}

Octonion operator-(const Octonion& a) { return -1.0 * a; }

Octonion operator*(double s, const Octonion& a) {
    Octonion r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = s * a[k];
    return r;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t j = 0; j < 8; ++j) {
        if (a[j] == 0.0) continue;
        for (std::size_t k = 0; k < 8; ++k) {
            const auto p = kFano.mul(j, k);
            r[p.index] += p.sign * a[j] * b[k];
        }
    }
    return r;
}

Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

Octonion oct_conj(const Octonion& a) {
    Octonion r = -a;
    r[0] = a[0];
    return r;
}

double oct_norm2(const Octonion& a) {
    double s = 0;
    for (double v : a.c) s += v * v;
    return s;
}

double oct_norm(const Octonion& a) { return std::sqrt(oct_norm2(a)); }

double oct_project(const Octonion& a, std::size_t k) {
    if (k > 7) throw std::out_of_range("octonion projection index must be 0..7");
    return a[k];
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.re + b.re, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.re - b.re, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.re, s * a.x, s * a.y, s * a.z};
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {
        a.re * b.re - a.x * b.x - a.y * b.y - a.z * b.z,
        a.re * b.x + a.x * b.re + a.y * b.z - a.z * b.y,
        a.re * b.y - a.x * b.z + a.y * b.re + a.z * b.x,
        a.re * b.z + a.x * b.y - a.y * b.x + a.z * b.re,
    };
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

Quaternion quat_conj(const Quaternion& a) { return {a.re, -a.x, -a.y, -a.z}; }

double quat_norm(const Quaternion& a) {
    return std::sqrt(a.re * a.re + a.x * a.x + a.y * a.y + a.z * a.z);
}

double quat_project(const Quaternion& a, std::size_t k) {
    switch (k) {
        case 1: return a.re;
        case 2: return a.x;
        case 3: return a.y;
        case 4: return a.z;
        default: throw std::out_of_range("quaternion projection index must be 1..4");
    }
}

Octonion embed_quaternion(const Quaternion& q, std::size_t subalgebra) {
    const auto& s = kSubalgebra.at(subalgebra);
    Octonion o;
    o[s[0]] = q.re;
    o[s[1]] = q.x;
    o[s[2]] = q.y;
    o[s[3]] = q.z;
    return o;
}

}  // namespace hqg
