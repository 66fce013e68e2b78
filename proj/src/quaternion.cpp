#include "hypdisc/quaternion.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

using cd = std::complex<double>;
constexpr double kRoundoff = std::numeric_limits<double>::epsilon() / 2;

double Quaternion::norm() const noexcept { return std::sqrt(norm_sq()); }
double Quaternion::imag_norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

Quaternion Quaternion::inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw NotInvertible("zero quaternion");
    return conj() * (1.0 / n2);
}

bool Quaternion::is_complex(double tol) const noexcept { return std::abs(y) <= tol && std::abs(z) <= tol; }

Quaternion& Quaternion::operator+=(const Quaternion& o) noexcept {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) noexcept {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
}

Quaternion& Quaternion::operator*=(double s) noexcept {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z, p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x, p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

double abs(const Quaternion& q) noexcept { return q.norm(); }

double max_abs_diff(const Quaternion& p, const Quaternion& q) noexcept {
    return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y), std::abs(p.z - q.z)});
}

Quaternion similarity_rotation(const Quaternion& from, const Quaternion& to) {
    const double nf = from.imag_norm();
    const double nt = to.imag_norm();
    if (nf == 0.0 || nt == 0.0) return {1.0};
    const Quaternion a{0.0, from.x / nf, from.y / nf, from.z / nf};
    const Quaternion b{0.0, to.x / nt, to.y / nt, to.z / nt};
    // (1 - a b) b = a (1 - a b) for unit imaginary a, b.
    Quaternion r = Quaternion{1.0} - a * b;
    if (r.norm() < 1e-8) {
        // Antipodal: any unit imaginary quaternion orthogonal to a.
        const Quaternion trial = std::abs(a.x) < 0.9 ? Quaternion{0, 1, 0, 0} : Quaternion{0, 0, 1, 0};
        const double dot = trial.x * a.x + trial.y * a.y + trial.z * a.z;
        r = trial - a * dot;
    }
    return r * (1.0 / r.norm());
}

QuatMatrix::QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix shape");
    data_.assign(static_cast<std::size_t>(rows) * cols, Quaternion{});
}

QuatMatrix QuatMatrix::identity(int n) {
    QuatMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = Quaternion{1.0};
    return out;
}

QuatMatrix QuatMatrix::diagonal(const std::vector<Quaternion>& d) {
    const int n = static_cast<int>(d.size());
    QuatMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = d[i];
    return out;
}

QuatMatrix QuatMatrix::column(const std::vector<Quaternion>& v) {
    QuatMatrix out(static_cast<int>(v.size()), 1);
    for (int i = 0; i < out.rows(); ++i) out(i, 0) = v[i];
    return out;
}

QuatMatrix QuatMatrix::adjoint() const {
    QuatMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

bool QuatMatrix::is_complex(double tol) const noexcept {
    return std::all_of(data_.begin(), data_.end(), [tol](const Quaternion& q) { return q.is_complex(tol); });
}

QuatMatrix QuatMatrix::block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    QuatMatrix out(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("quaternionic matrix product shape");
    QuatMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Quaternion& aik = a(i, k);
            if (aik.norm_sq() == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

namespace {

void check_shape(const QuatMatrix& a, const QuatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("quaternionic matrix shape");
}

}  // namespace

QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a, b);
    QuatMatrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a, b);
    QuatMatrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

QuatMatrix operator*(const QuatMatrix& a, const Quaternion& q) {
    QuatMatrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * q;
    return out;
}

double max_abs_diff(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a, b);
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, max_abs_diff(a(i, j), b(i, j)));
    return m;
}

double frobenius(const QuatMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j).norm_sq();
    return std::sqrt(s);
}

Eigen::MatrixXcd complex_adjoint(const QuatMatrix& a) {
    const int r = a.rows(), c = a.cols();
    Eigen::MatrixXcd m(2 * r, 2 * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const Quaternion& q = a(i, j);
            const cd z1{q.w, q.x}, z2{q.y, q.z};
            m(i, j) = z1;
            m(i, c + j) = -z2;
            m(r + i, j) = std::conj(z2);
            m(r + i, c + j) = std::conj(z1);
        }
    return m;
}

QuatMatrix from_complex_adjoint(const Eigen::MatrixXcd& m) {
    if (m.rows() % 2 != 0 || m.cols() % 2 != 0) throw DimensionMismatch("complex adjoint needs even shape");
    const int r = static_cast<int>(m.rows() / 2), c = static_cast<int>(m.cols() / 2);
    QuatMatrix out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const cd z1 = m(i, j), z2 = -m(i, c + j);
            out(i, j) = {z1.real(), z1.imag(), z2.real(), z2.imag()};
        }
    return out;
}

QuatMatrix column_from_chi(const Eigen::VectorXcd& v) {
    const int r = static_cast<int>(v.size() / 2);
    QuatMatrix out(r, 1);
    for (int i = 0; i < r; ++i) {
        const cd p = v(i), q = std::conj(v(r + i));
        out(i, 0) = {p.real(), p.imag(), q.real(), q.imag()};
    }
    return out;
}

Eigen::VectorXcd chi_column(const QuatMatrix& x) { return complex_adjoint(x).col(0); }

std::vector<EigenClass> right_eigenvalues(const QuatMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("right eigenvalues need a square matrix");
    const int m = a.rows();
    if (m == 0) return {};
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(a), false);
    if (es.info() != Eigen::Success) throw EigenSolverFailure("complex adjoint eigen-decomposition failed");
    std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + 2 * m);

    // The spectrum of chi(A) is closed under conjugation. Cluster it in the full plane and fold only
    // the cluster means, so scatter around a real eigenvalue does not bias the imaginary part.
    struct Cluster {
        cd sum;
        int count;
        cd mean() const { return sum / static_cast<double>(count); }
    };
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    // A Jordan block of size k scatters its eigenvalues by about u^{1/k} |chi|. Near the real axis
    // the blocks for mu and conj(mu) coincide, so the block size is half the count.
    auto jordan = [&](int k) { return k > 1 ? 4.0 * std::pow(kRoundoff, 1.0 / k) * scale : 0.0; };
    auto radius = [&](const Cluster& c) {
        const cd mu = c.mean();
        const double floor = tol::kEig * std::max(1.0, std::abs(mu));
        const int half = std::max(1, c.count / 2);
        const bool near_real = std::abs(mu.imag()) <= std::max(floor, jordan(half));
        return std::max(floor, jordan(near_real ? half : c.count));
    };
    // From each seed take the largest set of nearest eigenvalues that fits inside the radius for
    // its own size.
    std::vector<Cluster> clusters;
    std::vector<cd> rest = ev;
    while (!rest.empty()) {
        const cd seed = rest.front();
        std::sort(rest.begin(), rest.end(),
                  [&](const cd& x, const cd& y) { return std::abs(x - seed) < std::abs(y - seed); });
        std::size_t take = 1;
        for (std::size_t c = rest.size(); c > 1; --c) {
            Cluster u{0.0, static_cast<int>(c)};
            for (std::size_t i = 0; i < c; ++i) u.sum += rest[i];
            const double r = radius(u);
            if (std::all_of(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(c),
                            [&](const cd& z) { return std::abs(z - u.mean()) <= r; })) {
                take = c;
                break;
            }
        }
        Cluster c{0.0, static_cast<int>(take)};
        for (std::size_t i = 0; i < take; ++i) c.sum += rest[i];
        clusters.push_back(c);
        rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(take));
    }

    std::vector<EigenClass> classes;
    for (const Cluster& c : clusters) {
        const cd mu = c.mean();
        const bool real = std::abs(mu.imag()) <= radius(c);
        if (!real && mu.imag() < 0.0) continue;
        const int mult = real ? std::max(1, (c.count + 1) / 2) : c.count;
        classes.push_back({Quaternion::from_complex({mu.real(), real ? 0.0 : mu.imag()}), mult});
    }
    std::sort(classes.begin(), classes.end(), [](const EigenClass& p, const EigenClass& q) {
        const double mp = p.rep.norm(), mq = q.rep.norm();
        if (std::abs(mp - mq) > tol::kEig) return mp > mq;
        return std::atan2(p.rep.x, p.rep.w) > std::atan2(q.rep.x, q.rep.w);
    });
    return classes;
}

Eigen::MatrixXcd chi_eigenspace(const QuatMatrix& a, cd mu, double tol) {
    const Eigen::MatrixXcd chi = complex_adjoint(a);
    const Eigen::Index size = chi.rows();
    const Eigen::MatrixXcd shifted = chi - mu * Eigen::MatrixXcd::Identity(size, size);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double thr = tol * std::max(1.0, chi.norm());
    Eigen::Index rank = 0;
    while (rank < s.size() && s(rank) > thr) ++rank;
    return svd.matrixV().rightCols(size - rank);
}

QuatMatrix eigvec_for(const QuatMatrix& a, const Quaternion& lambda) {
    if (a.rows() != a.cols()) throw DimensionMismatch("eigenvector needs a square matrix");
    const cd mu{lambda.w, lambda.imag_norm()};
    const Eigen::MatrixXcd chi = complex_adjoint(a);
    const Eigen::Index size = chi.rows();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi - mu * Eigen::MatrixXcd::Identity(size, size),
                                           Eigen::ComputeFullV);
    const double smin = svd.singularValues()(size - 1);
    if (smin > 1e-5 * std::max(1.0, chi.norm()))
        throw DegenerateConfiguration("not a right eigenvalue (residual " + std::to_string(smin) + ")");
    const QuatMatrix v = column_from_chi(svd.matrixV().col(size - 1));
    // v mu = A v; rotate mu onto lambda inside its similarity class.
    return v * similarity_rotation(Quaternion::from_complex(mu), lambda);
}

}  // namespace hypdisc
