#pragma once

// Lorentz-matrix model of SL(2, C_n): the Mobius action on R^{n+1} u {inf} is realized as a
// linear map of R^{n+2,1} preserving q = diag(1, ..., 1, -1). Classification, rotation angles,
// translation length and boundary fixed points are read off this representation.

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "hypdisc/mobius.hpp"

namespace hypdisc {

inline constexpr std::uint64_t kDefaultFrameSeed = 0x6879706469736331ULL;

enum class IsometryKind { elliptic, regular_elliptic, parabolic, loxodromic };

std::string to_string(IsometryKind k);
inline bool is_elliptic(IsometryKind k) {
    return k == IsometryKind::elliptic || k == IsometryKind::regular_elliptic;
}

struct LorentzMatrix {
    Eigen::MatrixXd m;
    int n() const { return static_cast<int>(m.rows()) - 3; }
};

/// Minkowski product with signature (+, ..., +, -).
double minkowski(const Eigen::VectorXd& x, const Eigen::VectorXd& y);
Eigen::MatrixXd minkowski_form(int size);

/// Null-cone chart: z -> (z, (1 - |z|^2)/2, (1 + |z|^2)/2), inf -> (0, -1, 1).
Eigen::VectorXd lift(const BoundaryPoint& z);
/// Inverse of lift on future or past null rays. Throws DegenerateConfiguration on zero or
/// non-null input.
BoundaryPoint drop(const Eigen::VectorXd& x);

/// Reconstructs the Lorentz matrix from the action on a random boundary frame.
LorentzMatrix to_lorentz(const CliffordMatrix& t, std::uint64_t seed = kDefaultFrameSeed);

/// Max deviation of M^T q M from q.
double lorentz_residual(const LorentzMatrix& lm);

struct IsometryInvariants {
    IsometryKind kind = IsometryKind::elliptic;
    std::vector<double> angles;  // rotation angles in (0, pi], descending
    double theta_max = 0.0;
    double tau = 0.0;
    double beta = 0.0;
};

double beta_value(IsometryKind kind, double tau, double theta_max);

IsometryInvariants classify(const LorentzMatrix& lm);
IsometryInvariants classify(const CliffordMatrix& t, std::uint64_t seed = kDefaultFrameSeed);

/// Loxodromic: {attracting, repelling}. Parabolic: the single fixed point. Elliptic: empty when
/// the fixed set in the closed ball is a single interior point, otherwise two fixed boundary
/// points (a representative antipodal pair when the fixed boundary set is a sphere).
std::vector<BoundaryPoint> fixed_points(const CliffordMatrix& t, std::uint64_t seed = kDefaultFrameSeed);

/// Same entries read in C_{n+1}.
inline CliffordMatrix embed_next(const CliffordMatrix& t) { return t.embed_next(); }

/// Everything the checkers need about one element, computed once.
struct Analysis {
    CliffordMatrix matrix;
    IsometryInvariants inv;
    std::vector<BoundaryPoint> fixed;
};

Analysis analyze(const CliffordMatrix& t, std::uint64_t seed = kDefaultFrameSeed);

}  // namespace hypdisc
