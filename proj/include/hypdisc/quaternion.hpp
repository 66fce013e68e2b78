#pragma once

// Quaternions, quaternionic matrices and right eigenvalues through the complex adjoint
//   chi(A1 + A2 j) = [[A1, -A2], [conj(A2), conj(A1)]].

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace hypdisc {

struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}
    static Quaternion from_complex(std::complex<double> c) { return {c.real(), c.imag()}; }

    double norm_sq() const noexcept { return w * w + x * x + y * y + z * z; }
    double norm() const noexcept;
    double imag_norm() const noexcept;
    Quaternion conj() const noexcept { return {w, -x, -y, -z}; }
    /// Throws NotInvertible on zero.
    Quaternion inverse() const;
    bool is_complex(double tol) const noexcept;

    Quaternion& operator+=(const Quaternion& o) noexcept;
    Quaternion& operator-=(const Quaternion& o) noexcept;
    Quaternion& operator*=(double s) noexcept;
};

Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept;
inline Quaternion operator+(Quaternion p, const Quaternion& q) noexcept { return p += q; }
inline Quaternion operator-(Quaternion p, const Quaternion& q) noexcept { return p -= q; }
inline Quaternion operator-(const Quaternion& p) noexcept { return {-p.w, -p.x, -p.y, -p.z}; }
inline Quaternion operator*(Quaternion p, double s) noexcept { return p *= s; }
inline Quaternion operator*(double s, Quaternion p) noexcept { return p *= s; }
double abs(const Quaternion& q) noexcept;
double max_abs_diff(const Quaternion& p, const Quaternion& q) noexcept;

/// Unit quaternion r with r^{-1} * from * r = to, for unit-modulus similarity classes.
/// Both arguments must share real part and imaginary norm.
Quaternion similarity_rotation(const Quaternion& from, const Quaternion& to);

class QuatMatrix {
public:
    QuatMatrix() = default;
    QuatMatrix(int rows, int cols);
    static QuatMatrix identity(int n);
    static QuatMatrix diagonal(const std::vector<Quaternion>& d);
    static QuatMatrix column(const std::vector<Quaternion>& v);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Quaternion& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Quaternion& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    /// Conjugate transpose T*.
    QuatMatrix adjoint() const;
    bool is_complex(double tol) const noexcept;
    QuatMatrix block(int r0, int c0, int nr, int nc) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Quaternion> data_;
};

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b);
/// Right scalar multiplication A q.
QuatMatrix operator*(const QuatMatrix& a, const Quaternion& q);
double max_abs_diff(const QuatMatrix& a, const QuatMatrix& b);
/// Frobenius norm.
double frobenius(const QuatMatrix& a);

Eigen::MatrixXcd complex_adjoint(const QuatMatrix& a);
/// Left inverse of complex_adjoint; reads the A1 and A2 blocks.
QuatMatrix from_complex_adjoint(const Eigen::MatrixXcd& m);
/// Quaternionic column x = p + conj(q) j from the chi-vector [p; q].
QuatMatrix column_from_chi(const Eigen::VectorXcd& v);
/// First column of chi(x) for a column x.
Eigen::VectorXcd chi_column(const QuatMatrix& x);

struct EigenClass {
    Quaternion rep;  // w + x i with x >= 0
    int multiplicity = 0;
};

/// Similarity classes of right eigenvalues, ordered by decreasing modulus, then decreasing argument.
std::vector<EigenClass> right_eigenvalues(const QuatMatrix& a);

/// Nonzero column v with A v = v lambda. Throws DegenerateConfiguration when lambda is
/// not a right eigenvalue.
QuatMatrix eigvec_for(const QuatMatrix& a, const Quaternion& lambda);

/// Orthonormal basis (in chi-coordinates) of the complex eigenspace of chi(A) at mu.
Eigen::MatrixXcd chi_eigenspace(const QuatMatrix& a, std::complex<double> mu, double tol);

}  // namespace hypdisc
