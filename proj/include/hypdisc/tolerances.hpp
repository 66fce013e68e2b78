#pragma once

#include <cstddef>

namespace hypdisc::tol {

inline constexpr double kZero = 1e-13;       // coefficient cutoff in canonical form
inline constexpr double kAlg = 1e-9;         // algebraic identities
inline constexpr double kGeo = 1e-8;         // point coincidence / invariance
inline constexpr double kPole = 1e-10;       // |cv+d| below this routes to infinity
inline constexpr double kLor = 1e-8;         // M^T q M = q
inline constexpr double kClass = 1e-7;       // spectral classification
inline constexpr int kRetry = 5;             // random frames tried by the Lorentz reconstruction
inline constexpr double kCert = 1e-9;        // slack on inequality comparison
inline constexpr double kEig = 1e-7;         // right-eigenvalue clustering radius
inline constexpr double kSp = 1e-10;         // A^* J A = J
inline constexpr double kDedup = 1e-9;       // word-ball rounding grid
inline constexpr std::size_t kBallBudget = 1'000'000;

}  // namespace hypdisc::tol
