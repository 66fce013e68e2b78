#include "hypdisc/lorentz.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kUnitRoundoff = 2.2e-16;

struct Spectrum {
    LorentzMatrix lm;
    Eigen::VectorXcd eig;
    double eta = 0.0;        // cluster radius a defective eigenvalue 1 can spread to
    Index i_max = -1, i_min = -1;
    double log_rho = 0.0;
    MatrixXd kernel;         // orthonormal basis of the numerical kernel of M - I
    VectorXd gram_eval;      // eigen-decomposition of kernel^T q kernel
    MatrixXd gram_evec;
    IsometryKind kind = IsometryKind::elliptic;
};

MatrixXd numerical_kernel(const MatrixXd& a, double tol) {
    Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullV);
    const VectorXd& s = svd.singularValues();
    Index rank = 0;
    while (rank < s.size() && s(rank) > tol) ++rank;
    return svd.matrixV().rightCols(a.cols() - rank);
}

Spectrum analyse_spectrum(const LorentzMatrix& lm) {
    Spectrum sp;
    sp.lm = lm;
    const MatrixXd& m = lm.m;
    const Index size = m.rows();
    Eigen::EigenSolver<MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) throw EigenSolverFailure("Lorentz eigen-decomposition failed");
    sp.eig = es.eigenvalues();

    const double fro2 = std::max(1.0, m.squaredNorm());
    const double rel = std::max(kUnitRoundoff * 4, lorentz_residual(lm) / fro2);
    sp.eta = std::max(tol::kClass, 4.0 * std::cbrt(rel * fro2));

    sp.i_max = 0;
    sp.i_min = 0;
    for (Index i = 1; i < size; ++i) {
        if (std::abs(sp.eig(i)) > std::abs(sp.eig(sp.i_max))) sp.i_max = i;
        if (std::abs(sp.eig(i)) < std::abs(sp.eig(sp.i_min))) sp.i_min = i;
    }
    sp.log_rho = std::log(std::abs(sp.eig(sp.i_max)));

    if (sp.log_rho > 2.0 * sp.eta) {
        sp.kind = IsometryKind::loxodromic;
        return sp;
    }
    if (sp.log_rho > sp.eta)
        throw AmbiguousClass({"loxodromic", "parabolic"},
                             "log spectral radius " + std::to_string(sp.log_rho) + " inside noise band");

    const double ktol = 1e-6 * std::sqrt(fro2);
    sp.kernel = numerical_kernel(m - MatrixXd::Identity(size, size), ktol);
    if (sp.kernel.cols() == 0) throw EigenSolverFailure("no eigenvalue 1 for a non-loxodromic element");
    const MatrixXd gram = sp.kernel.transpose() * minkowski_form(static_cast<int>(size)) * sp.kernel;
    Eigen::SelfAdjointEigenSolver<MatrixXd> ges(gram);
    sp.gram_eval = ges.eigenvalues();
    sp.gram_evec = ges.eigenvectors();

    if (sp.gram_eval(0) < -1e-9) {
        sp.kind = sp.kernel.cols() <= 2 ? IsometryKind::regular_elliptic : IsometryKind::elliptic;
    } else {
        sp.kind = IsometryKind::parabolic;
    }
    return sp;
}

std::vector<double> rotation_angles(const Spectrum& sp) {
    const double snap = sp.kind == IsometryKind::parabolic ? 2.0 * sp.eta : tol::kClass;
    std::vector<double> angles;
    int minus_one = 0;
    for (Index i = 0; i < sp.eig.size(); ++i) {
        if (sp.kind == IsometryKind::loxodromic && (i == sp.i_max || i == sp.i_min)) continue;
        const std::complex<double> l = sp.eig(i);
        if (std::abs(l - 1.0) <= snap) continue;
        if (std::abs(l + 1.0) <= tol::kClass) {
            ++minus_one;
            continue;
        }
        if (l.imag() > 0.0) angles.push_back(std::arg(l));
    }
    for (int k = 0; k < minus_one / 2; ++k) angles.push_back(std::numbers::pi);
    std::sort(angles.begin(), angles.end(), std::greater<>());
    return angles;
}

VectorXd real_eigenvector(const MatrixXd& m, double lambda) {
    const MatrixXd shifted = m - lambda * MatrixXd::Identity(m.rows(), m.cols());
    Eigen::JacobiSVD<MatrixXd> svd(shifted, Eigen::ComputeFullV);
    return svd.matrixV().col(m.cols() - 1);
}

// Rescales the spatial part so the vector lies on the null cone; removes eigenvector noise.
VectorXd nearest_null(VectorXd x) {
    const Index last = x.size() - 1;
    if (x(last) < 0.0) x = -x;
    const double s = x.head(last).norm();
    if (s > 0.0) x.head(last) *= x(last) / s;
    return x;
}

}  // namespace

std::string to_string(IsometryKind k) {
    switch (k) {
        case IsometryKind::elliptic: return "elliptic";
        case IsometryKind::regular_elliptic: return "regular_elliptic";
        case IsometryKind::parabolic: return "parabolic";
        case IsometryKind::loxodromic: return "loxodromic";
    }
    return "unknown";
}

double minkowski(const VectorXd& x, const VectorXd& y) {
    const Index last = x.size() - 1;
    return x.head(last).dot(y.head(last)) - x(last) * y(last);
}

MatrixXd minkowski_form(int size) {
    MatrixXd q = MatrixXd::Identity(size, size);
    q(size - 1, size - 1) = -1.0;
    return q;
}

VectorXd lift(const BoundaryPoint& z) {
    const int n = z.n();
    VectorXd x = VectorXd::Zero(n + 3);
    if (z.is_infinity()) {
        x(n + 1) = -1.0;
        x(n + 2) = 1.0;
        return x;
    }
    const std::vector<double> c = z.value().vector_coords();
    double r2 = 0.0;
    for (int k = 0; k <= n; ++k) {
        x(k) = c[k];
        r2 += c[k] * c[k];
    }
    x(n + 1) = 0.5 * (1.0 - r2);
    x(n + 2) = 0.5 * (1.0 + r2);
    return x;
}

BoundaryPoint drop(const VectorXd& x_in) {
    const Index size = x_in.size();
    if (size < 3) throw DimensionMismatch("null vector too short");
    const double nrm = x_in.norm();
    if (nrm == 0.0) throw DegenerateConfiguration("zero vector");
    if (std::abs(minkowski(x_in, x_in)) > tol::kLor * nrm * nrm)
        throw DegenerateConfiguration("vector is not null");
    const VectorXd x = x_in(size - 1) < 0.0 ? VectorXd(-x_in) : x_in;
    const int n = static_cast<int>(size) - 3;
    const double denom = x(size - 2) + x(size - 1);
    if (denom <= tol::kPole * nrm) return BoundaryPoint::infinity(n);
    std::vector<double> coords(n + 1);
    for (int k = 0; k <= n; ++k) coords[k] = x(k) / denom;
    return BoundaryPoint::finite(n, coords);
}

double lorentz_residual(const LorentzMatrix& lm) {
    const auto size = static_cast<int>(lm.m.rows());
    const MatrixXd q = minkowski_form(size);
    return (lm.m.transpose() * q * lm.m - q).cwiseAbs().maxCoeff();
}

LorentzMatrix to_lorentz(const CliffordMatrix& t, std::uint64_t seed) {
    const int n = t.n();
    const int size = n + 3;
    std::normal_distribution<double> normal(0.0, 1.0);

    for (int attempt = 0; attempt < tol::kRetry; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
        auto sample = [&] {
            // Keep the frame away from the pole of t so images stay well scaled.
            for (int tries = 0; tries < 100; ++tries) {
                std::vector<double> c(n + 1);
                for (double& v : c) v = normal(rng);
                const BoundaryPoint p = BoundaryPoint::finite(n, c);
                const double den = (t.c * p.value() + t.d).norm();
                const double scale = std::max(1.0, t.c.norm() * p.value().norm() + t.d.norm());
                if (den > 1e-3 * scale) return p;
            }
            return BoundaryPoint::finite(n, std::vector<double>(n + 1, 0.0));
        };

        std::vector<BoundaryPoint> frame;
        for (int i = 0; i < size + 1; ++i) frame.push_back(sample());

        MatrixXd src(size, size), img(size, size);
        for (int i = 0; i < size; ++i) {
            src.col(i) = lift(frame[i]);
            img.col(i) = lift(mobius_apply(t, frame[i]));
        }

        // log s_i + log s_j = log(<x_i, x_j> / <y_i, y_j>) for every pair.
        const int pairs = size * (size - 1) / 2;
        MatrixXd sys = MatrixXd::Zero(pairs, size);
        VectorXd rhs(pairs);
        bool ok = true;
        int row = 0;
        for (int i = 0; i < size && ok; ++i) {
            for (int j = i + 1; j < size; ++j, ++row) {
                const double gs = minkowski(src.col(i), src.col(j));
                const double gi = minkowski(img.col(i), img.col(j));
                if (!(gs < 0.0 && gi < 0.0)) {
                    ok = false;
                    break;
                }
                sys(row, i) = 1.0;
                sys(row, j) = 1.0;
                rhs(row) = std::log(gs / gi);
            }
        }
        if (!ok) continue;
        const VectorXd log_scale = sys.colPivHouseholderQr().solve(rhs);
        for (int i = 0; i < size; ++i) img.col(i) *= std::exp(log_scale(i));

        Eigen::FullPivLU<MatrixXd> lu(src);
        if (!lu.isInvertible()) continue;
        LorentzMatrix lm{img * lu.inverse()};

        const double scale = std::max(1.0, lm.m.cwiseAbs().maxCoeff());
        if (lorentz_residual(lm) > tol::kLor * scale * scale) continue;
        const BoundaryPoint check = frame.back();
        if (!same_point(drop(nearest_null(lm.m * lift(check))), mobius_apply(t, check), tol::kGeo * scale)) continue;
        return lm;
    }
    throw ReconstructionFailure("Lorentz reconstruction failed on every random frame");
}

double beta_value(IsometryKind kind, double tau, double theta_max) {
    const double s = std::sin(theta_max / 2.0);
    double beta = 4.0 * s * s;
    if (kind == IsometryKind::loxodromic) {
        const double sh = std::sinh(tau / 2.0);
        beta += 4.0 * sh * sh;
    }
    return beta;
}

IsometryInvariants classify(const LorentzMatrix& lm) {
    const Spectrum sp = analyse_spectrum(lm);
    IsometryInvariants inv;
    inv.kind = sp.kind;
    inv.angles = rotation_angles(sp);
    inv.theta_max = inv.angles.empty() ? 0.0 : inv.angles.front();
    inv.tau = sp.kind == IsometryKind::loxodromic ? sp.log_rho : 0.0;
    inv.beta = beta_value(inv.kind, inv.tau, inv.theta_max);
    return inv;
}

IsometryInvariants classify(const CliffordMatrix& t, std::uint64_t seed) {
    return classify(to_lorentz(t, seed));
}

namespace {

std::vector<BoundaryPoint> fixed_points_of(const Spectrum& sp) {
    const MatrixXd& m = sp.lm.m;
    std::vector<BoundaryPoint> out;
    switch (sp.kind) {
        case IsometryKind::loxodromic: {
            // The repelling ray is the attracting ray of the exact inverse q M^T q.
            const MatrixXd q = minkowski_form(static_cast<int>(m.rows()));
            const MatrixXd inv = q * m.transpose() * q;
            const double top = std::abs(sp.eig(sp.i_max));
            out.push_back(drop(nearest_null(real_eigenvector(m, top))));
            out.push_back(drop(nearest_null(real_eigenvector(inv, top))));
            break;
        }
        case IsometryKind::parabolic: {
            // Gram is positive semidefinite on the kernel; its null direction is the fixed ray.
            Index best = 0;
            for (Index i = 1; i < sp.gram_eval.size(); ++i)
                if (std::abs(sp.gram_eval(i)) < std::abs(sp.gram_eval(best))) best = i;
            out.push_back(drop(nearest_null(sp.kernel * sp.gram_evec.col(best))));
            break;
        }
        case IsometryKind::elliptic:
        case IsometryKind::regular_elliptic: {
            if (sp.kernel.cols() < 2) break;
            const VectorXd time = sp.kernel * sp.gram_evec.col(0) / std::sqrt(-sp.gram_eval(0));
            const Index s = sp.gram_eval.size() - 1;
            const VectorXd space = sp.kernel * sp.gram_evec.col(s) / std::sqrt(sp.gram_eval(s));
            out.push_back(drop(nearest_null(time + space)));
            out.push_back(drop(nearest_null(time - space)));
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<BoundaryPoint> fixed_points(const CliffordMatrix& t, std::uint64_t seed) {
    return fixed_points_of(analyse_spectrum(to_lorentz(t, seed)));
}

Analysis analyze(const CliffordMatrix& t, std::uint64_t seed) {
    const Spectrum sp = analyse_spectrum(to_lorentz(t, seed));
    Analysis a{t, {}, fixed_points_of(sp)};
    a.inv.kind = sp.kind;
    a.inv.angles = rotation_angles(sp);
    a.inv.theta_max = a.inv.angles.empty() ? 0.0 : a.inv.angles.front();
    a.inv.tau = sp.kind == IsometryKind::loxodromic ? sp.log_rho : 0.0;
    a.inv.beta = beta_value(a.inv.kind, a.inv.tau, a.inv.theta_max);
    return a;
}

}  // namespace hypdisc
