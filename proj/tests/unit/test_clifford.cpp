#include <doctest.h>

#include "../support.hpp"
#include "hypdisc/errors.hpp"

using namespace hypdisc;
using testsupport::Rng;

namespace {

CliffordNumber gen(int n, int k) { return CliffordNumber::generator(n, k); }

}  // namespace

TEST_CASE("generator relations") {
    const int n = 3;
    CHECK(max_abs_diff(gen(n, 1) * gen(n, 1), CliffordNumber::scalar(n, -1.0)) == 0.0);
    CHECK(max_abs_diff(gen(n, 1) * gen(n, 2), CliffordNumber::from_terms(n, {{{1, 2}, 1.0}})) == 0.0);
    CHECK(max_abs_diff(gen(n, 2) * gen(n, 1), CliffordNumber::from_terms(n, {{{1, 2}, -1.0}})) == 0.0);
    const CliffordNumber one = CliffordNumber::scalar(n, 1.0);
    CHECK(max_abs_diff((one + gen(n, 1)) * (one - gen(n, 1)), CliffordNumber::scalar(n, 2.0)) == 0.0);
}

TEST_CASE("product matches the word-reduction oracle") {
    Rng rng(11);
    for (int n = 0; n <= 5; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const CliffordNumber a = rng.element(n), b = rng.element(n);
            CHECK(max_abs_diff(a * b, testsupport::oracle_mul(a, b)) < 1e-12);
            CHECK(max_abs_diff(star(a), testsupport::oracle_star(a)) == 0.0);
        }
}

TEST_CASE("involution examples") {
    const int n = 2;
    const CliffordNumber e12 = CliffordNumber::from_terms(n, {{{1, 2}, 1.0}});
    CHECK(max_abs_diff(star(e12), -e12) == 0.0);
    CHECK(max_abs_diff(prime(gen(n, 1)), -gen(n, 1)) == 0.0);
    CHECK(max_abs_diff(bar(e12), -e12) == 0.0);
    Rng rng(3);
    for (int k = 0; k < 10; ++k) {
        const CliffordNumber a = rng.element(4), b = rng.element(4);
        CHECK(max_abs_diff(star(a * b), star(b) * star(a)) < 1e-12);
        CHECK(max_abs_diff(prime(a * b), prime(a) * prime(b)) < 1e-12);
        CHECK(max_abs_diff(bar(a * b), bar(b) * bar(a)) < 1e-12);
        CHECK(max_abs_diff(star(star(a)), a) == 0.0);
        CHECK(max_abs_diff(bar(a), prime(star(a))) == 0.0);
    }
}

TEST_CASE("quaternion identification of C_2") {
    const int n = 2;
    const CliffordNumber i = gen(n, 1), j = gen(n, 2), k = i * j;
    CHECK(max_abs_diff(k * k, CliffordNumber::scalar(n, -1.0)) == 0.0);
    CHECK(max_abs_diff(j * k, i) == 0.0);
    CHECK(max_abs_diff(k * i, j) == 0.0);
    CHECK(max_abs_diff(i * j * k, CliffordNumber::scalar(n, -1.0)) == 0.0);
}

TEST_CASE("inverse") {
    const int n = 1;
    const CliffordNumber one = CliffordNumber::scalar(n, 1.0);
    CHECK(max_abs_diff(cl_inverse(one + gen(n, 1)), (one - gen(n, 1)) * 0.5) < 1e-15);
    CHECK(max_abs_diff(cl_inverse(one), one) == 0.0);
    CHECK_THROWS_AS(cl_inverse(CliffordNumber(n)), NotInvertible);
    Rng rng(5);
    for (int m = 0; m <= 5; ++m) {
        const CliffordNumber a = rng.element(m);
        const CliffordNumber inv = cl_inverse(a);
        CHECK(max_abs_diff(a * inv, CliffordNumber::scalar(m, 1.0)) < 1e-9);
        CHECK(max_abs_diff(inv * a, CliffordNumber::scalar(m, 1.0)) < 1e-9);
    }
    // e123^2 = 1 in C_3, so 1 + e123 is a zero divisor.
    const CliffordNumber e123 = CliffordNumber::from_terms(3, {{{1, 2, 3}, 1.0}});
    CHECK_THROWS_AS(cl_inverse(CliffordNumber::scalar(3, 1.0) + e123), NotInvertible);
}

TEST_CASE("vector and Clifford group membership") {
    const int n = 2;
    const CliffordNumber one = CliffordNumber::scalar(n, 1.0);
    const CliffordNumber e12 = CliffordNumber::from_terms(n, {{{1, 2}, 1.0}});
    CHECK(is_vector(CliffordNumber::scalar(n, 3.0) + gen(n, 1) * 2.0, 1e-12));
    CHECK_FALSE(is_vector(e12, 1e-12));
    CHECK(is_vector(gen(n, 1) + e12 * 1e-15, 1e-12));
    CHECK(gamma_member(one + gen(n, 1), 1e-9));
    CHECK(gamma_member(gen(n, 1) + e12, 1e-9));
    CHECK(gamma_member(one + e12, 1e-9));
    CHECK_FALSE(gamma_member(CliffordNumber(n), 1e-9));
    // In C_3, 1 + i1 i2 i3 is not a product of vectors.
    const CliffordNumber e123 = CliffordNumber::from_terms(3, {{{1, 2, 3}, 1.0}});
    CHECK_FALSE(gamma_member(CliffordNumber::scalar(3, 1.0) + e123, 1e-9));
    Rng rng(8);
    for (int m = 0; m <= 5; ++m) {
        const CliffordNumber a = rng.gamma(m), b = rng.gamma(m);
        CHECK(gamma_member(a, 1e-9));
        CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-9 * (1 + a.norm() * b.norm()));
    }
}

TEST_CASE("canonical form and embedding") {
    CliffordNumber a = CliffordNumber::from_terms(2, {{{}, 1.0}, {{1}, 1e-15}});
    CHECK(a.canonical()[1] == 0.0);
    const CliffordNumber e = a.embed_next();
    CHECK(e.n() == 3);
    CHECK(e[0] == 1.0);
    CHECK_THROWS_AS(CliffordNumber::from_terms(2, {{{2, 1}, 1.0}}), DimensionMismatch);
    CHECK_THROWS_AS(CliffordNumber::from_terms(2, {{{3}, 1.0}}), DimensionMismatch);
}
