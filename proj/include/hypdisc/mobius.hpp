#pragma once

// Clifford matrices SL(2, C_n) and their action on R^{n+1} u {inf}.

#include <optional>
#include <string>

#include "hypdisc/clifford.hpp"

namespace hypdisc {

/// A finite vector of R^{n+1} or the point at infinity.
class BoundaryPoint {
public:
    static BoundaryPoint infinity(int n) { return BoundaryPoint(n); }
    static BoundaryPoint finite(const CliffordNumber& v);
    static BoundaryPoint finite(int n, const std::vector<double>& coords) {
        return finite(CliffordNumber::vector(n, coords));
    }

    bool is_infinity() const noexcept { return !value_.has_value(); }
    int n() const noexcept { return n_; }
    /// Precondition: !is_infinity().
    const CliffordNumber& value() const { return *value_; }
    BoundaryPoint embed_next() const;

private:
    explicit BoundaryPoint(int n) : n_(n) {}
    int n_;
    std::optional<CliffordNumber> value_;
};

/// Chordal distance on the sphere R^{n+1} u {inf}; bounded by 2.
double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q);
bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol);

struct CliffordMatrix {
    CliffordNumber a, b, c, d;

    int n() const noexcept { return a.n(); }

    static CliffordMatrix identity(int n);
    static CliffordMatrix from_reals(double a, double b, double c, double d, int n = 0);
    /// Clifford determinant a d* - b c*.
    CliffordNumber determinant() const;
    CliffordMatrix embed_next() const;
    CliffordMatrix operator-() const { return {-a, -b, -c, -d}; }
};

/// Ahlfors-Waterman conditions: entries in Gamma_n u {0}, determinant 1, and
/// a b*, c d*, c* a, d* b vectors.
bool validate(const CliffordMatrix& t, double tol);

CliffordMatrix mat_mul(const CliffordMatrix& s, const CliffordMatrix& t);
/// [[d*, -b*], [-c*, a*]]; throws InvalidMatrix when validation fails.
CliffordMatrix mat_inverse(const CliffordMatrix& t);
/// Inverse formula without validation, for hot loops over already-validated matrices.
CliffordMatrix mat_inverse_unchecked(const CliffordMatrix& t);
inline CliffordMatrix operator*(const CliffordMatrix& s, const CliffordMatrix& t) { return mat_mul(s, t); }

double max_abs_diff(const CliffordMatrix& s, const CliffordMatrix& t);

/// v -> (a v + b)(c v + d)^{-1}; poles route to infinity.
BoundaryPoint mobius_apply(const CliffordMatrix& t, const BoundaryPoint& z);

/// Clifford cross-ratio (z1 - z3)(z1 - z2)^{-1}(z2 - z4)(z3 - z4)^{-1}, extended to the point
/// at infinity by continuity. Throws DegenerateConfiguration unless the points are pairwise
/// distinct.
CliffordNumber cross_ratio(const BoundaryPoint& z1, const BoundaryPoint& z2, const BoundaryPoint& z3,
                           const BoundaryPoint& z4);

/// As cross_ratio, but only the differences that get inverted (z1 != z2, z3 != z4) must be
/// nonzero; coincidences elsewhere just produce a zero factor.
CliffordNumber cross_ratio_lenient(const BoundaryPoint& z1, const BoundaryPoint& z2,
                                   const BoundaryPoint& z3, const BoundaryPoint& z4);

}  // namespace hypdisc
