#include "hypdisc/jorgensen.hpp"

#include <cmath>
#include <numbers>

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

namespace {

constexpr double kDistinct = 1e-6;

double entry_scale(const CliffordMatrix& t) {
    return std::max({1.0, t.a.norm(), t.b.norm(), t.c.norm(), t.d.norm()});
}

bool same_pair(const BoundaryPoint& u, const BoundaryPoint& v, const BoundaryPoint& x, const BoundaryPoint& y) {
    return (same_point(u, x, tol::kGeo) && same_point(v, y, tol::kGeo)) ||
           (same_point(u, y, tol::kGeo) && same_point(v, x, tol::kGeo));
}

void add_evidence(Certificate& cert, const CliffordMatrix& f, const CliffordMatrix& g, std::uint64_t seed) {
    cert.distinct_limit_points = distinct_limit_points(f, g, seed);
    cert.non_elementary = cert.distinct_limit_points >= 3;
    cert.record("non_elementary", cert.non_elementary, cert.distinct_limit_points);
}

}  // namespace

double elliptic_constant() {
    const double s = std::sin(std::numbers::pi / 10.0);
    return 1.0 / (4.0 * s * s);
}

bool shares_fixed_point(const Analysis& f, const CliffordMatrix& g) {
    for (const BoundaryPoint& p : f.fixed)
        if (same_point(mobius_apply(g, p), p, tol::kGeo)) return true;
    return false;
}

int distinct_limit_points(const CliffordMatrix& f, const CliffordMatrix& g, std::uint64_t seed) {
    std::vector<BoundaryPoint> seeds;
    for (const CliffordMatrix* x : {&f, &g}) {
        try {
            const Analysis a = analyze(*x, seed);
            if (is_elliptic(a.inv.kind)) continue;
            seeds.insert(seeds.end(), a.fixed.begin(), a.fixed.end());
        } catch (const Error&) {
        }
    }
    const std::vector<CliffordMatrix> maps{f, mat_inverse_unchecked(f), g, mat_inverse_unchecked(g)};
    std::vector<BoundaryPoint> points;
    auto add = [&](const BoundaryPoint& p) {
        for (const BoundaryPoint& q : points)
            if (chordal_distance(p, q) < kDistinct) return;
        points.push_back(p);
    };
    for (const BoundaryPoint& p : seeds) {
        add(p);
        for (const CliffordMatrix& m : maps) add(mobius_apply(m, p));
    }
    return static_cast<int>(points.size());
}

Certificate check_lox(const CliffordMatrix& f, const CliffordMatrix& g, std::uint64_t seed) {
    if (f.n() != g.n()) throw DimensionMismatch("f and g act on different dimensions");
    Certificate cert;
    cert.inequality_id = InequalityId::lox_cw;
    const Analysis fa = analyze(f, seed);
    if (fa.inv.kind != IsometryKind::loxodromic)
        throw PreconditionFailed("f_loxodromic", "f is " + to_string(fa.inv.kind));
    cert.record("f_loxodromic", true, fa.inv.beta);
    const BoundaryPoint& u = fa.fixed[0];
    const BoundaryPoint& v = fa.fixed[1];
    const BoundaryPoint gu = mobius_apply(g, u);
    const BoundaryPoint gv = mobius_apply(g, v);
    if (same_pair(u, v, gu, gv)) throw PreconditionFailed("g_moves_fixed_pair", "{gu, gv} = {u, v}");
    cert.record("g_moves_fixed_pair", true);
    cert.record("fixed_points_disjoint", !shares_fixed_point(fa, g));

    const double x = cross_ratio_lenient(u, v, gu, gv).norm();
    cert.lhs = fa.inv.beta * (1.0 + x);
    cert.rhs = 1.0;
    add_evidence(cert, f, g, seed);
    finalize(cert);
    return cert;
}

Certificate check_elliptic(const CliffordMatrix& f_in, const CliffordMatrix& g_in, std::uint64_t seed) {
    if (f_in.n() != g_in.n()) throw DimensionMismatch("f and g act on different dimensions");
    Certificate cert;
    cert.inequality_id = InequalityId::elliptic_cw;
    CliffordMatrix f = f_in, g = g_in;
    Analysis fa = analyze(f, seed);
    if (!is_elliptic(fa.inv.kind)) throw PreconditionFailed("f_elliptic", "f is " + to_string(fa.inv.kind));
    const bool embedded = fa.fixed.size() < 2;
    if (embedded) {
        f = embed_next(f);
        g = embed_next(g);
        fa = analyze(f, seed);
        if (fa.fixed.size() < 2) throw NoBoundaryFixedPoint("no boundary fixed points after embedding");
    }
    cert.record("f_elliptic", true, fa.inv.beta);
    cert.record("embedded", embedded);

    const BoundaryPoint& u = fa.fixed[0];
    const BoundaryPoint& v = fa.fixed[1];
    const double x = cross_ratio_lenient(u, v, mobius_apply(g, u), mobius_apply(g, v)).norm();
    cert.lhs = fa.inv.beta * (elliptic_constant() + x);
    cert.rhs = 1.0;
    add_evidence(cert, f_in, g_in, seed);
    finalize(cert);
    return cert;
}

double nonelliptic_lhs_direct(const CliffordMatrix& f, const CliffordMatrix& g) {
    if (g.c.norm() < tol::kPole) throw DegenerateConfiguration("g fixes inf");
    const CliffordNumber cinv = cl_inverse(g.c);
    const BoundaryPoint p = BoundaryPoint::finite(g.a * cinv);          // g(inf)
    const BoundaryPoint q = BoundaryPoint::finite(-(cinv * g.d));       // g^{-1}(inf)
    const BoundaryPoint fp = mobius_apply(f, p);
    const BoundaryPoint fq = mobius_apply(f, q);
    if (fp.is_infinity() || fq.is_infinity()) throw DegenerateConfiguration("f does not fix inf");
    const double lam2 = f.a.norm_sq();
    return g.c.norm_sq() * (fp.value() - p.value()).norm() * (fq.value() - q.value()).norm() / lam2;
}

Certificate check_nonelliptic(const CliffordMatrix& f_in, const CliffordMatrix& g, std::uint64_t seed) {
    if (f_in.n() != g.n()) throw DimensionMismatch("f and g act on different dimensions");
    Certificate cert;
    cert.inequality_id = InequalityId::nonelliptic_cw;
    if (f_in.c.norm() > tol::kAlg * entry_scale(f_in))
        throw PreconditionFailed("f_fixes_inf", "f is not upper triangular");
    cert.record("f_fixes_inf", true, f_in.c.norm());

    const Analysis fa = analyze(f_in, seed);
    if (is_elliptic(fa.inv.kind)) throw PreconditionFailed("f_nonelliptic", "f is " + to_string(fa.inv.kind));
    const double beta = fa.inv.beta;
    const double rho = 2.0 * std::cosh(fa.inv.tau / 2.0) * std::sqrt(beta);
    if (!(rho < 1.0)) throw PreconditionFailed("rho_lt_1", "rho = " + std::to_string(rho));
    cert.record("rho_lt_1", true, rho);
    const double disc = (1.0 - rho) * (1.0 - rho) - 4.0 * beta;
    if (disc < 0.0) throw PreconditionFailed("discriminant", "(1 - rho)^2 - 4 beta = " + std::to_string(disc));
    cert.record("discriminant", true, disc);
    if (shares_fixed_point(fa, g)) throw PreconditionFailed("fixed_points_disjoint", "f and g share a fixed point");
    cert.record("fixed_points_disjoint", true);

    cert.rhs = (1.0 - rho + std::sqrt(disc)) / 2.0;

    // A translation may carry the representative -f; the action is the same.
    CliffordMatrix f = f_in;
    if (max_abs_diff(f.a, CliffordNumber::scalar(f.n(), -1.0)) <= tol::kAlg) f = -f;
    const bool translation = max_abs_diff(f.a, CliffordNumber::scalar(f.n(), 1.0)) <= tol::kAlg &&
                             max_abs_diff(f.d, CliffordNumber::scalar(f.n(), 1.0)) <= tol::kAlg;
    cert.record("translation", translation);
    if (translation) {
        cert.lhs = g.c.norm_sq() * f.b.norm_sq();
    } else {
        const CliffordMatrix finv = mat_inverse_unchecked(f);
        const CliffordMatrix ginv = mat_inverse_unchecked(g);
        const CliffordMatrix conj = f * g * finv;
        const CliffordNumber tr = conj.a + conj.d;
        const int n = f.n();
        const BoundaryPoint inf = BoundaryPoint::infinity(n);
        const BoundaryPoint z3 = mobius_apply(g, inf);
        const BoundaryPoint z4 = mobius_apply(ginv, inf);
        if (tr.norm() > tol::kGeo && !same_point(z3, z4, tol::kGeo)) {
            const CliffordNumber x = cross_ratio_lenient(mobius_apply(f, z3), mobius_apply(f, z4), z3, z4);
            cert.lhs = (tr * tr * x).norm();
        } else {
            cert.lhs = nonelliptic_lhs_direct(f, g);
        }
    }
    add_evidence(cert, f_in, g, seed);
    finalize(cert);
    return cert;
}

std::pair<CliffordMatrix, CliffordMatrix> conjugate_to_infinity(const CliffordMatrix& f, std::uint64_t seed) {
    const int n = f.n();
    if (f.c.norm() <= tol::kAlg * entry_scale(f)) return {CliffordMatrix::identity(n), f};
    const Analysis fa = analyze(f, seed);
    if (fa.fixed.empty()) throw NoBoundaryFixedPoint("f has no boundary fixed point");
    BoundaryPoint p = fa.fixed.front();
    for (const BoundaryPoint& q : fa.fixed)
        if (q.is_infinity()) p = q;
    if (p.is_infinity()) return {CliffordMatrix::identity(n), f};
    const CliffordNumber one = CliffordNumber::scalar(n, 1.0);
    const CliffordMatrix h{CliffordNumber(n), -one, one, -p.value()};
    const CliffordMatrix hinv{-p.value(), one, -one, CliffordNumber(n)};
    CliffordMatrix out = h * f * hinv;
    if (out.c.norm() <= 1e-9 * entry_scale(out)) out.c = CliffordNumber(n);
    return {h, out};
}

}  // namespace hypdisc
