#include "hypdisc/clifford.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <string>

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

int blade_grade(Blade b) noexcept { return std::popcount(b); }

int blade_product_sign(Blade a, Blade b) noexcept {
    // Moving each generator of b leftwards past the higher generators of a.
    int swaps = 0;
    Blade rest = a >> 1;
    while (rest != 0) {
        swaps += std::popcount(rest & b);
        rest >>= 1;
    }
    // Each shared generator squares to -1.
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxGenerators)
        throw DimensionMismatch("generator count out of range: " + std::to_string(n));
}

void check_same(const CliffordNumber& a, const CliffordNumber& b) {
    if (a.n() != b.n())
        throw DimensionMismatch("C_" + std::to_string(a.n()) + " vs C_" + std::to_string(b.n()));
}

}  // namespace

CliffordNumber::CliffordNumber(int n) : n_(n) {
    check_n(n);
    coeffs_.assign(std::size_t{1} << n, 0.0);
}

CliffordNumber::CliffordNumber(int n, double s) : CliffordNumber(n) { coeffs_[0] = s; }

CliffordNumber CliffordNumber::generator(int n, int k) {
    CliffordNumber out(n);
    if (k < 0 || k > n) throw DimensionMismatch("generator index out of range");
    out.coeffs_[k == 0 ? 0 : (Blade{1} << (k - 1))] = 1.0;
    return out;
}

CliffordNumber CliffordNumber::vector(int n, const std::vector<double>& coords) {
    if (static_cast<int>(coords.size()) != n + 1)
        throw DimensionMismatch("vector needs n+1 coordinates");
    CliffordNumber out(n);
    out.coeffs_[0] = coords[0];
    for (int k = 1; k <= n; ++k) out.coeffs_[Blade{1} << (k - 1)] = coords[k];
    return out;
}

CliffordNumber CliffordNumber::from_terms(int n,
                                          const std::vector<std::pair<std::vector<int>, double>>& terms) {
    CliffordNumber out(n);
    for (const auto& [idx, c] : terms) {
        Blade b = 0;
        int prev = 0;
        for (int k : idx) {
            if (k <= prev || k > n)
                throw DimensionMismatch("blade indices must be strictly increasing in 1..n");
            b |= Blade{1} << (k - 1);
            prev = k;
        }
        out.coeffs_[b] += c;
    }
    return out;
}

double CliffordNumber::norm_sq() const noexcept {
    double s = 0.0;
    for (double c : coeffs_) s += c * c;
    return s;
}

double CliffordNumber::norm() const noexcept { return std::sqrt(norm_sq()); }

bool CliffordNumber::is_zero(double tol) const noexcept {
    for (double c : coeffs_)
        if (std::abs(c) > tol) return false;
    return true;
}

std::vector<double> CliffordNumber::vector_coords() const {
    std::vector<double> out(n_ + 1);
    out[0] = coeffs_[0];
    for (int k = 1; k <= n_; ++k) out[k] = coeffs_[Blade{1} << (k - 1)];
    return out;
}

CliffordNumber CliffordNumber::canonical() const {
    CliffordNumber out = *this;
    for (double& c : out.coeffs_)
        if (std::abs(c) < tol::kZero) c = 0.0;
    return out;
}

CliffordNumber CliffordNumber::embed_next() const {
    CliffordNumber out(n_ + 1);
    std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
    return out;
}

CliffordNumber& CliffordNumber::operator+=(const CliffordNumber& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CliffordNumber& CliffordNumber::operator-=(const CliffordNumber& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CliffordNumber& CliffordNumber::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

CliffordNumber operator*(const CliffordNumber& a, const CliffordNumber& b) {
    check_same(a, b);
    CliffordNumber out(a.n());
    const auto dim = static_cast<Blade>(a.dim());
    for (Blade i = 0; i < dim; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (Blade j = 0; j < dim; ++j) {
            const double bj = b[j];
            if (bj == 0.0) continue;
            out[i ^ j] += blade_product_sign(i, j) * ai * bj;
        }
    }
    return out.canonical();
}

CliffordNumber cl_mul(const CliffordNumber& a, const CliffordNumber& b) { return a * b; }

CliffordNumber involution(const CliffordNumber& a, Involution kind) {
    CliffordNumber out = a;
    const auto dim = static_cast<Blade>(a.dim());
    for (Blade i = 0; i < dim; ++i) {
        const int k = blade_grade(i);
        int sign = 1;
        if (kind != Involution::prime && ((k * (k - 1) / 2) & 1)) sign = -sign;
        if (kind != Involution::star && (k & 1)) sign = -sign;
        out[i] = sign * a[i];
    }
    return out;
}

bool is_vector(const CliffordNumber& a, double tol) {
    const auto dim = static_cast<Blade>(a.dim());
    for (Blade i = 0; i < dim; ++i)
        if (blade_grade(i) >= 2 && std::abs(a[i]) > tol) return false;
    return true;
}

bool is_scalar(const CliffordNumber& a, double tol) {
    for (std::size_t i = 1; i < a.dim(); ++i)
        if (std::abs(a[static_cast<Blade>(i)]) > tol) return false;
    return true;
}

CliffordNumber cl_inverse(const CliffordNumber& a) {
    const double nsq = a.norm_sq();
    if (nsq == 0.0) throw NotInvertible("zero element");
    if (is_vector(a, 0.0)) return bar(a) * (1.0 / nsq);

    const auto dim = static_cast<Eigen::Index>(a.dim());
    Eigen::MatrixXd left(dim, dim);
    left.setZero();
    for (Blade i = 0; i < static_cast<Blade>(dim); ++i) {
        if (a[i] == 0.0) continue;
        for (Blade j = 0; j < static_cast<Blade>(dim); ++j)
            left(i ^ j, j) += blade_product_sign(i, j) * a[i];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(left / std::sqrt(nsq));
    lu.setThreshold(tol::kZero);
    if (!lu.isInvertible()) throw NotInvertible("left-multiplication matrix is singular");
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
    rhs(0) = 1.0;
    const Eigen::VectorXd x = lu.solve(rhs) / std::sqrt(nsq);
    CliffordNumber out(a.n());
    for (Eigen::Index i = 0; i < dim; ++i) out[static_cast<Blade>(i)] = x(i);
    return out;
}

bool gamma_member(const CliffordNumber& a, double tol) {
    const double nrm = a.norm();
    if (nrm <= tol::kZero) return false;
    const CliffordNumber u = a * (1.0 / nrm);
    const CliffordNumber s = u * bar(u);
    if (!is_scalar(s, tol) || s.scalar_part() <= tol) return false;

    CliffordNumber pinv;
    try {
        pinv = cl_inverse(prime(u));
    } catch (const NotInvertible&) {
        return false;
    }
    for (int k = 0; k <= a.n(); ++k) {
        const CliffordNumber e = CliffordNumber::generator(a.n(), k);
        if (!is_vector(u * e * pinv, tol)) return false;
    }
    return true;
}

double max_abs_diff(const CliffordNumber& a, const CliffordNumber& b) {
    check_same(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        m = std::max(m, std::abs(a[static_cast<Blade>(i)] - b[static_cast<Blade>(i)]));
    return m;
}

}  // namespace hypdisc
