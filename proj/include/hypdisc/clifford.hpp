#pragma once

// Real Clifford algebra C_n on anticommuting generators i_1..i_n with i_t^2 = -1.
// Elements are stored densely, indexed by blade bitmask (bit t-1 set <=> i_t present).

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hypdisc {

using Blade = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

/// Sign of the product of two basis blades, e_A * e_B = sign * e_{A xor B}.
int blade_product_sign(Blade a, Blade b) noexcept;
int blade_grade(Blade b) noexcept;

enum class Involution { star, prime, bar };

class CliffordNumber {
public:
    CliffordNumber() : CliffordNumber(0) {}
    explicit CliffordNumber(int n);
    CliffordNumber(int n, double scalar);

    static CliffordNumber scalar(int n, double s) { return {n, s}; }
    /// The generator i_k (k in 1..n); k = 0 gives the unit.
    static CliffordNumber generator(int n, int k);
    /// Vector a_0 + a_1 i_1 + ... + a_n i_n from its n+1 coordinates.
    static CliffordNumber vector(int n, const std::vector<double>& coords);
    /// Build from (blade index list, coefficient) pairs; blades must be strictly increasing in 1..n.
    static CliffordNumber from_terms(int n, const std::vector<std::pair<std::vector<int>, double>>& terms);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return coeffs_.size(); }
    double operator[](Blade b) const { return coeffs_[b]; }
    double& operator[](Blade b) { return coeffs_[b]; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    double scalar_part() const { return coeffs_[0]; }
    double norm_sq() const noexcept;
    double norm() const noexcept;
    bool is_zero(double tol) const noexcept;

    /// Vector coordinates (a_0, a_1, ..., a_n); higher blades are ignored.
    std::vector<double> vector_coords() const;

    /// Copy with |c| < kZero coefficients zeroed.
    CliffordNumber canonical() const;
    /// Same coefficients viewed in C_{n+1}.
    CliffordNumber embed_next() const;

    CliffordNumber& operator+=(const CliffordNumber& o);
    CliffordNumber& operator-=(const CliffordNumber& o);
    CliffordNumber& operator*=(double s);

    friend CliffordNumber operator+(CliffordNumber a, const CliffordNumber& b) { return a += b; }
    friend CliffordNumber operator-(CliffordNumber a, const CliffordNumber& b) { return a -= b; }
    friend CliffordNumber operator*(CliffordNumber a, double s) { return a *= s; }
    friend CliffordNumber operator*(double s, CliffordNumber a) { return a *= s; }
    friend CliffordNumber operator*(const CliffordNumber& a, const CliffordNumber& b);
    CliffordNumber operator-() const { return *this * -1.0; }

private:
    int n_;
    std::vector<double> coeffs_;
};

CliffordNumber cl_mul(const CliffordNumber& a, const CliffordNumber& b);
CliffordNumber involution(const CliffordNumber& a, Involution kind);
inline CliffordNumber star(const CliffordNumber& a) { return involution(a, Involution::star); }
inline CliffordNumber prime(const CliffordNumber& a) { return involution(a, Involution::prime); }
inline CliffordNumber bar(const CliffordNumber& a) { return involution(a, Involution::bar); }

/// Two-sided inverse. Vectors use bar(v)/|v|^2; everything else goes through the
/// 2^n x 2^n left-regular representation. Throws NotInvertible.
CliffordNumber cl_inverse(const CliffordNumber& a);

bool is_vector(const CliffordNumber& a, double tol);
bool is_scalar(const CliffordNumber& a, double tol);

/// Lipschitz-group membership: a*bar(a) is a positive scalar and x -> a x prime(a)^{-1}
/// maps every basis vector to a vector.
bool gamma_member(const CliffordNumber& a, double tol);

/// Max-coefficient distance.
double max_abs_diff(const CliffordNumber& a, const CliffordNumber& b);

}  // namespace hypdisc
