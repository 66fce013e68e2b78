#pragma once

// Jorgensen-type inequalities for two-generator subgroups of SL(2, C_n).
// Each checker evaluates an inequality every discrete non-elementary pair satisfies.

#include <cstdint>
#include <utility>

#include "hypdisc/certificate.hpp"
#include "hypdisc/lorentz.hpp"

namespace hypdisc {

/// 1 / (4 sin^2(pi/10)), the golden ratio squared.
double elliptic_constant();

/// beta(f) (1 + |[u, v, gu, gv]|) >= 1 with u, v the fixed points of loxodromic f.
Certificate check_lox(const CliffordMatrix& f, const CliffordMatrix& g, std::uint64_t seed = kDefaultFrameSeed);

/// beta(f) (1/(4 sin^2(pi/10)) + |[u, v, gu, gv]|) >= 1 with u, v boundary fixed points of
/// elliptic f, found after one embedding when f has none.
Certificate check_elliptic(const CliffordMatrix& f, const CliffordMatrix& g,
                           std::uint64_t seed = kDefaultFrameSeed);

/// For non-elliptic f fixing inf with 0 <= rho = 2 cosh(tau/2) sqrt(beta) < 1:
///   |(a+d)^2 [fg(inf), fg^{-1}(inf), g(inf), g^{-1}(inf)]| >= (1 - rho + sqrt((1-rho)^2 - 4 beta)) / 2,
/// with a + d the trace of f g f^{-1}; translations use |c|^2 |mu|^2 on the left.
Certificate check_nonelliptic(const CliffordMatrix& f, const CliffordMatrix& g,
                              std::uint64_t seed = kDefaultFrameSeed);

/// |lambda|^{-2} |c|^2 |f(a c^{-1}) - a c^{-1}| |f(-c^{-1} d) + c^{-1} d| for g = [[a, b], [c, d]]
/// and f = [[lambda, mu], [0, lambda*^{-1}]].
double nonelliptic_lhs_direct(const CliffordMatrix& f, const CliffordMatrix& g);

/// Returns (h, h f h^{-1}) with the second fixing inf.
std::pair<CliffordMatrix, CliffordMatrix> conjugate_to_infinity(const CliffordMatrix& f,
                                                                std::uint64_t seed = kDefaultFrameSeed);

/// Distinct limit points found among the fixed points of non-elliptic f, g and their images
/// under f, g and their inverses.
int distinct_limit_points(const CliffordMatrix& f, const CliffordMatrix& g, std::uint64_t seed = kDefaultFrameSeed);

/// Whether some fixed point of non-elliptic f is also fixed by g.
bool shares_fixed_point(const Analysis& f, const CliffordMatrix& g);

}  // namespace hypdisc
