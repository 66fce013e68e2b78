#pragma once

// Sp(n,1) under the forms J1 = diag(-1, I_n) and
//   J2 = [[0, -1, 0], [-1, 0, 0], [0, 0, I_{n-1}]],
// with J2 block layout A = [[a, b, gamma*], [c, d, delta*], [alpha, beta, U]].
// SU(n,1) is the case of complex entries.

#include <string>
#include <vector>

#include "hypdisc/certificate.hpp"
#include "hypdisc/lorentz.hpp"
#include "hypdisc/quaternion.hpp"

namespace hypdisc {

enum class FormTag { J1, J2 };

std::string to_string(FormTag f);
FormTag form_from_string(const std::string& s);
/// The (n+1) x (n+1) form matrix.
QuatMatrix form_matrix(FormTag tag, int size);

struct SpMatrix {
    QuatMatrix A;
    FormTag form = FormTag::J2;

    int size() const noexcept { return A.rows(); }
    int n() const noexcept { return A.rows() - 1; }

    // J2 blocks.
    const Quaternion& a() const { return A(0, 0); }
    const Quaternion& b() const { return A(0, 1); }
    const Quaternion& c() const { return A(1, 0); }
    const Quaternion& d() const { return A(1, 1); }
    QuatMatrix alpha() const { return A.block(2, 0, size() - 2, 1); }
    QuatMatrix beta() const { return A.block(2, 1, size() - 2, 1); }
    QuatMatrix gamma() const { return A.block(0, 2, 1, size() - 2).adjoint(); }
    QuatMatrix delta() const { return A.block(1, 2, 1, size() - 2).adjoint(); }
    QuatMatrix U() const { return A.block(2, 2, size() - 2, size() - 2); }
};

SpMatrix operator*(const SpMatrix& x, const SpMatrix& y);

/// A* J A = J within tol * max(1, |A|_F^2).
bool sp_validate(const QuatMatrix& a, FormTag form, double tol);
inline bool sp_validate(const SpMatrix& a, double tol) { return sp_validate(a.A, a.form, tol); }
/// J A* J; throws InvalidMatrix for non-members.
SpMatrix sp_inverse(const SpMatrix& a);
SpMatrix sp_inverse_unchecked(const SpMatrix& a);

/// Change of basis C = (1/sqrt 2)[[1, 1], [1, -1]] (+) I with C* J1 C = J2 and C^{-1} = C.
QuatMatrix form_change(int size);
SpMatrix to_form(const SpMatrix& a, FormTag target);

/// Boundary points o = (0, 1, 0, ...) and inf = (1, 0, ...) for J2.
QuatMatrix point_o(int size);
QuatMatrix point_inf(int size);

/// Heisenberg translation T_{s,zeta} = [[1, 0, 0], [s, 1, zeta*], [zeta, 0, I]] under J2.
/// Throws InvalidTranslation unless Re(s) = |zeta|^2 / 2.
SpMatrix heisenberg(const Quaternion& s, const std::vector<Quaternion>& zeta);
/// Reads (s, zeta) back; throws InvalidTranslation when a is not of that shape.
std::pair<Quaternion, std::vector<Quaternion>> heisenberg_params(const SpMatrix& t);

struct SpInvariants {
    IsometryKind kind = IsometryKind::elliptic;
    std::vector<EigenClass> classes;
    std::vector<std::string> eigen_types;  // per class: negative, positive or null
    Quaternion lambda1;
    double delta_cp = 0.0;
    double M = 0.0;
    double delta_ell = 0.0;
};

/// Throws AmbiguousClass when a modulus sits in the noise band around 1.
SpInvariants sp_classify(const SpMatrix& a);

/// Hermitian projector distance between quaternionic lines.
double line_distance(const QuatMatrix& x, const QuatMatrix& y);
/// Isotropic eigen-lines: the two for loxodromic, one for parabolic, none otherwise.
std::vector<QuatMatrix> sp_fixed_points(const SpMatrix& a, const SpInvariants& inv);

/// Limit points obtained from fixed points of non-elliptic f, g and their images under f, g and
/// their inverses; at least three distinct points evidence a non-elementary group.
int sp_distinct_limit_points(const SpMatrix& f, const SpMatrix& g);

Certificate check_sp_elliptic(const SpMatrix& g, const SpMatrix& h);
Certificate check_sp_shimizu(const SpMatrix& t, const SpMatrix& a);
Certificate check_cao_parker(const SpMatrix& g, const SpMatrix& h);

}  // namespace hypdisc
