#include "hypdisc/mobius.hpp"

#include <cmath>

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

namespace {

CliffordNumber vector_part(const CliffordNumber& v) {
    return CliffordNumber::vector(v.n(), v.vector_coords());
}

// Inverse for elements of the Clifford group: bar(x) / (x bar(x)).
CliffordNumber group_inverse(const CliffordNumber& x) {
    const CliffordNumber s = x * bar(x);
    const double s0 = s.scalar_part();
    if (s0 > 0.0 && is_scalar(s, 1e-9 * s0)) return bar(x) * (1.0 / s0);
    return cl_inverse(x);
}

CliffordNumber diff(const BoundaryPoint& p, const BoundaryPoint& q) { return p.value() - q.value(); }

CliffordNumber inv_diff(const BoundaryPoint& p, const BoundaryPoint& q) {
    const CliffordNumber d = diff(p, q);
    if (d.norm() == 0.0) throw DegenerateConfiguration("coincident points in cross-ratio");
    return cl_inverse(d);
}

void require_distinct(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (same_point(p, q, tol::kGeo)) throw DegenerateConfiguration("cross-ratio points are not distinct");
}

}  // namespace

BoundaryPoint BoundaryPoint::finite(const CliffordNumber& v) {
    if (!is_vector(v, 1e-6 * std::max(1.0, v.norm())))
        throw InvalidMatrix("boundary point must be a vector of R^{n+1}");
    BoundaryPoint p(v.n());
    p.value_ = vector_part(v);
    return p;
}

BoundaryPoint BoundaryPoint::embed_next() const {
    if (is_infinity()) return infinity(n_ + 1);
    return finite(value_->embed_next());
}

double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.n() != q.n()) throw DimensionMismatch("boundary points from different dimensions");
    if (p.is_infinity() && q.is_infinity()) return 0.0;
    if (p.is_infinity()) return 2.0 / std::sqrt(1.0 + q.value().norm_sq());
    if (q.is_infinity()) return 2.0 / std::sqrt(1.0 + p.value().norm_sq());
    const double d = (p.value() - q.value()).norm();
    return 2.0 * d / std::sqrt((1.0 + p.value().norm_sq()) * (1.0 + q.value().norm_sq()));
}

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
    return chordal_distance(p, q) <= tol;
}

CliffordMatrix CliffordMatrix::identity(int n) {
    return {CliffordNumber::scalar(n, 1.0), CliffordNumber(n), CliffordNumber(n), CliffordNumber::scalar(n, 1.0)};
}

CliffordMatrix CliffordMatrix::from_reals(double a, double b, double c, double d, int n) {
    return {CliffordNumber::scalar(n, a), CliffordNumber::scalar(n, b), CliffordNumber::scalar(n, c),
            CliffordNumber::scalar(n, d)};
}

CliffordNumber CliffordMatrix::determinant() const { return a * star(d) - b * star(c); }

CliffordMatrix CliffordMatrix::embed_next() const {
    return {a.embed_next(), b.embed_next(), c.embed_next(), d.embed_next()};
}

bool validate(const CliffordMatrix& t, double tol) {
    const int n = t.n();
    if (t.b.n() != n || t.c.n() != n || t.d.n() != n) return false;
    for (const CliffordNumber* e : {&t.a, &t.b, &t.c, &t.d}) {
        if (e->norm() <= tol) continue;
        if (!gamma_member(*e, tol)) return false;
    }
    const CliffordNumber delta = t.determinant();
    if (max_abs_diff(delta, CliffordNumber::scalar(n, 1.0)) > tol) return false;
    const double scale = std::max({1.0, t.a.norm_sq(), t.b.norm_sq(), t.c.norm_sq(), t.d.norm_sq()});
    return is_vector(t.a * star(t.b), tol * scale) && is_vector(t.c * star(t.d), tol * scale) &&
           is_vector(star(t.c) * t.a, tol * scale) && is_vector(star(t.d) * t.b, tol * scale);
}

CliffordMatrix mat_mul(const CliffordMatrix& s, const CliffordMatrix& t) {
    return {s.a * t.a + s.b * t.c, s.a * t.b + s.b * t.d, s.c * t.a + s.d * t.c, s.c * t.b + s.d * t.d};
}

CliffordMatrix mat_inverse_unchecked(const CliffordMatrix& t) {
    return {star(t.d), -star(t.b), -star(t.c), star(t.a)};
}

CliffordMatrix mat_inverse(const CliffordMatrix& t) {
    if (!validate(t, tol::kAlg)) throw InvalidMatrix("not a Clifford matrix");
    return mat_inverse_unchecked(t);
}

double max_abs_diff(const CliffordMatrix& s, const CliffordMatrix& t) {
    return std::max({max_abs_diff(s.a, t.a), max_abs_diff(s.b, t.b), max_abs_diff(s.c, t.c),
                     max_abs_diff(s.d, t.d)});
}

BoundaryPoint mobius_apply(const CliffordMatrix& t, const BoundaryPoint& z) {
    const int n = t.n();
    if (z.n() != n) throw DimensionMismatch("point and matrix dimensions differ");
    if (z.is_infinity()) {
        if (t.c.norm() < tol::kPole) return BoundaryPoint::infinity(n);
        return BoundaryPoint::finite(vector_part(t.a * group_inverse(t.c)));
    }
    const CliffordNumber& v = z.value();
    const CliffordNumber den = t.c * v + t.d;
    if (den.norm() < tol::kPole) return BoundaryPoint::infinity(n);
    return BoundaryPoint::finite(vector_part((t.a * v + t.b) * group_inverse(den)));
}

CliffordNumber cross_ratio_lenient(const BoundaryPoint& z1, const BoundaryPoint& z2, const BoundaryPoint& z3,
                                   const BoundaryPoint& z4) {
    const int n = z1.n();
    if (z2.n() != n || z3.n() != n || z4.n() != n)
        throw DimensionMismatch("cross-ratio points from different dimensions");
    const int infinite = z1.is_infinity() + z2.is_infinity() + z3.is_infinity() + z4.is_infinity();
    if (infinite >= 2) {
        if (z1.is_infinity() && z2.is_infinity()) throw DegenerateConfiguration("z1 = z2 = inf");
        if (z3.is_infinity() && z4.is_infinity()) throw DegenerateConfiguration("z3 = z4 = inf");
        if (infinite > 2) throw DegenerateConfiguration("too many points at infinity");
        // Remaining pairs: {z1,z3}, {z2,z4} give a vanishing factor; {z1,z4}, {z2,z3} give 1.
        if ((z1.is_infinity() && z3.is_infinity()) || (z2.is_infinity() && z4.is_infinity()))
            return CliffordNumber(n);
        return CliffordNumber::scalar(n, 1.0);
    }
    if (z1.is_infinity()) return diff(z4, z2) * inv_diff(z4, z3);
    if (z2.is_infinity()) return -(diff(z1, z3) * inv_diff(z3, z4));
    // Limit along the real axis; norm and real part do not depend on the direction.
    if (z3.is_infinity()) return -(inv_diff(z1, z2) * diff(z2, z4));
    if (z4.is_infinity()) return diff(z1, z3) * inv_diff(z1, z2);
    return diff(z1, z3) * inv_diff(z1, z2) * diff(z2, z4) * inv_diff(z3, z4);
}

CliffordNumber cross_ratio(const BoundaryPoint& z1, const BoundaryPoint& z2, const BoundaryPoint& z3,
                           const BoundaryPoint& z4) {
    require_distinct(z1, z2);
    require_distinct(z1, z3);
    require_distinct(z1, z4);
    require_distinct(z2, z3);
    require_distinct(z2, z4);
    require_distinct(z3, z4);
    return cross_ratio_lenient(z1, z2, z3, z4);
}

}  // namespace hypdisc
