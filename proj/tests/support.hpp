#pragma once

// Independent oracles and random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "hypdisc/mobius.hpp"
#include "hypdisc/quaternion.hpp"
#include "hypdisc/sp.hpp"

namespace testsupport {

using namespace hypdisc;

// Clifford product by explicit word reduction: concatenate generator index lists, bubble-sort
// with a sign flip per transposition, then cancel equal neighbours with i_t^2 = -1.
inline std::pair<int, std::vector<int>> reduce_word(std::vector<int> w) {
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                sign = -sign;
                changed = true;
            } else if (w[k] == w[k + 1]) {
                w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    return {sign, w};
}

using Terms = std::map<std::vector<int>, double>;

inline Terms to_terms(const CliffordNumber& a) {
    Terms t;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        if (a[b] == 0.0) continue;
        std::vector<int> idx;
        for (int k = 1; k <= a.n(); ++k)
            if (b & (std::size_t{1} << (k - 1))) idx.push_back(k);
        t[idx] = a[b];
    }
    return t;
}

inline CliffordNumber from_terms(int n, const Terms& t) {
    std::vector<std::pair<std::vector<int>, double>> v(t.begin(), t.end());
    return CliffordNumber::from_terms(n, v);
}

inline CliffordNumber oracle_mul(const CliffordNumber& a, const CliffordNumber& b) {
    Terms out;
    for (const auto& [ka, va] : to_terms(a))
        for (const auto& [kb, vb] : to_terms(b)) {
            std::vector<int> w = ka;
            w.insert(w.end(), kb.begin(), kb.end());
            const auto [sign, red] = reduce_word(w);
            out[red] += sign * va * vb;
        }
    return from_terms(a.n(), out);
}

// Reversal of a blade of grade k contributes (-1)^{k(k-1)/2}.
inline CliffordNumber oracle_star(const CliffordNumber& a) {
    Terms t = to_terms(a);
    for (auto& [k, v] : t) {
        const std::size_t g = k.size();
        if ((g * (g - 1) / 2) % 2 == 1) v = -v;
    }
    return from_terms(a.n(), t);
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    CliffordNumber element(int n) {
        CliffordNumber a(n);
        for (std::size_t b = 0; b < a.dim(); ++b) a[b] = normal();
        return a;
    }
    std::vector<double> coords(int n) {
        std::vector<double> c(static_cast<std::size_t>(n) + 1);
        for (double& x : c) x = normal();
        return c;
    }
    CliffordNumber vec(int n) { return CliffordNumber::vector(n, coords(n)); }
    // Products of random nonzero vectors lie in Gamma_n.
    CliffordNumber gamma(int n, int factors = 3) {
        CliffordNumber a = CliffordNumber::scalar(n, 1.0);
        for (int k = 0; k < factors; ++k) a = a * vec(n);
        return a;
    }
    BoundaryPoint point(int n) { return BoundaryPoint::finite(n, coords(n)); }

    // Random valid matrix as a product of translations, inversions and dilations diag(v, v^{-1}).
    CliffordMatrix matrix(int n, int factors = 4) {
        const CliffordNumber one = CliffordNumber::scalar(n, 1.0), zero(n);
        CliffordMatrix t = CliffordMatrix::identity(n);
        for (int k = 0; k < factors; ++k) {
            switch (integer(0, 2)) {
                case 0: t = t * CliffordMatrix{one, vec(n) * 0.7, zero, one}; break;
                case 1: t = t * CliffordMatrix{zero, -one, one, zero}; break;
                default: {
                    CliffordNumber v = vec(n);
                    v *= std::exp(uniform(-0.5, 0.5)) / v.norm();
                    t = t * CliffordMatrix{v, zero, zero, cl_inverse(v)};
                }
            }
        }
        return t;
    }

    Quaternion quat() { return {normal(), normal(), normal(), normal()}; }
    QuatMatrix quat_matrix(int r, int c) {
        QuatMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < c; ++k) m(i, k) = quat();
        return m;
    }

    // Heisenberg translation with random s and zeta (Re s = |zeta|^2 / 2).
    SpMatrix heis(int n, double scale = 1.0) {
        std::vector<Quaternion> zeta(static_cast<std::size_t>(n - 1));
        double z2 = 0.0;
        for (Quaternion& z : zeta) {
            z = quat() * scale;
            z2 += z.norm_sq();
        }
        return heisenberg(Quaternion{0.5 * z2, normal() * scale, normal() * scale, normal() * scale}, zeta);
    }
    // J2 dilation diag(lambda, conj(lambda)^{-1}, U) with unit-quaternion diagonal U.
    SpMatrix sp_dilation(int n) {
        std::vector<Quaternion> d(static_cast<std::size_t>(n + 1));
        Quaternion l = quat();
        l *= std::exp(uniform(-0.5, 0.5)) / l.norm();
        d[0] = l;
        d[1] = l.conj().inverse();
        for (std::size_t k = 2; k < d.size(); ++k) {
            Quaternion u = quat();
            d[k] = u * (1.0 / u.norm());
        }
        return {QuatMatrix::diagonal(d), FormTag::J2};
    }
    SpMatrix sp_swap(int n) {
        QuatMatrix w = QuatMatrix::identity(n + 1);
        w(0, 0) = w(1, 1) = Quaternion{};
        w(0, 1) = w(1, 0) = Quaternion{1.0};
        return {w, FormTag::J2};
    }
    SpMatrix sp_matrix(int n, int factors = 4) {
        SpMatrix a{QuatMatrix::identity(n + 1), FormTag::J2};
        for (int k = 0; k < factors; ++k) {
            switch (integer(0, 2)) {
                case 0: a = a * heis(n, 0.6); break;
                case 1: a = a * sp_swap(n); break;
                default: a = a * sp_dilation(n);
            }
        }
        return a;
    }
};

}  // namespace testsupport
