#include "hypdisc/sp.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "hypdisc/errors.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

using cd = std::complex<double>;

namespace {

constexpr double kUnitRoundoff = 2.2e-16;
constexpr double kStructure = 1e-9;   // zero pattern checks on entries
constexpr double kLine = 1e-6;        // distinct boundary lines

cd as_complex(const Quaternion& rep) { return {rep.w, rep.x}; }

double form_residual(const QuatMatrix& a, FormTag form) {
    const QuatMatrix j = form_matrix(form, a.rows());
    return max_abs_diff(a.adjoint() * j * a, j);
}

double vector_norm(const QuatMatrix& v) { return frobenius(v); }

double operator_norm(const QuatMatrix& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_adjoint(a));
    return svd.singularValues()(0);
}

struct ClassType {
    double min_gram = 0.0;
    double max_gram = 0.0;
    Eigen::MatrixXcd space;
    Eigen::VectorXd gram_eval;
    Eigen::MatrixXcd gram_evec;
};

ClassType class_type(const SpMatrix& a, const Quaternion& rep) {
    ClassType t;
    t.space = chi_eigenspace(a.A, as_complex(rep), 1e-6);
    if (t.space.cols() == 0) return t;
    const Eigen::MatrixXcd chi_j = complex_adjoint(form_matrix(a.form, a.size()));
    const Eigen::MatrixXcd gram = t.space.adjoint() * chi_j * t.space;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    t.gram_eval = es.eigenvalues();
    t.gram_evec = es.eigenvectors();
    t.min_gram = t.gram_eval(0);
    t.max_gram = t.gram_eval(t.gram_eval.size() - 1);
    return t;
}

std::string type_name(const ClassType& t, double tol) {
    if (t.min_gram < -tol) return "negative";
    if (t.max_gram > tol) return "positive";
    return "null";
}

// Representatives expanded by multiplicity, minus one copy of each excluded class.
std::vector<Quaternion> remaining(const std::vector<EigenClass>& classes, const std::vector<std::size_t>& drop) {
    std::vector<Quaternion> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const int skip = static_cast<int>(std::count(drop.begin(), drop.end(), i));
        for (int k = skip; k < classes[i].multiplicity; ++k) out.push_back(classes[i].rep);
    }
    return out;
}

SpMatrix require_form(const SpMatrix& x, FormTag form) { return x.form == form ? x : to_form(x, form); }

}  // namespace

std::string to_string(FormTag f) { return f == FormTag::J1 ? "J1" : "J2"; }

FormTag form_from_string(const std::string& s) {
    if (s == "J1") return FormTag::J1;
    if (s == "J2") return FormTag::J2;
    throw InputError("unknown Hermitian form: " + s);
}

QuatMatrix form_matrix(FormTag tag, int size) {
    QuatMatrix j = QuatMatrix::identity(size);
    if (tag == FormTag::J1) {
        j(0, 0) = Quaternion{-1.0};
    } else {
        if (size < 2) throw DimensionMismatch("J2 needs size >= 2");
        j(0, 0) = Quaternion{};
        j(1, 1) = Quaternion{};
        j(0, 1) = Quaternion{-1.0};
        j(1, 0) = Quaternion{-1.0};
    }
    return j;
}

SpMatrix operator*(const SpMatrix& x, const SpMatrix& y) {
    if (x.form != y.form) throw DimensionMismatch("product of matrices for different forms");
    return {x.A * y.A, x.form};
}

bool sp_validate(const QuatMatrix& a, FormTag form, double tol) {
    if (a.rows() != a.cols() || a.rows() < 2) return false;
    const double f = frobenius(a);
    return form_residual(a, form) <= tol * std::max(1.0, f * f);
}

SpMatrix sp_inverse_unchecked(const SpMatrix& a) {
    const QuatMatrix j = form_matrix(a.form, a.size());
    return {j * a.A.adjoint() * j, a.form};
}

SpMatrix sp_inverse(const SpMatrix& a) {
    if (!sp_validate(a, tol::kSp)) throw InvalidMatrix("not a member of Sp(n,1) for " + to_string(a.form));
    return sp_inverse_unchecked(a);
}

QuatMatrix form_change(int size) {
    QuatMatrix c = QuatMatrix::identity(size);
    const double r = 1.0 / std::sqrt(2.0);
    c(0, 0) = Quaternion{r};
    c(0, 1) = Quaternion{r};
    c(1, 0) = Quaternion{r};
    c(1, 1) = Quaternion{-r};
    return c;
}

SpMatrix to_form(const SpMatrix& a, FormTag target) {
    if (a.form == target) return a;
    const QuatMatrix c = form_change(a.size());
    return {c * a.A * c, target};
}

QuatMatrix point_o(int size) {
    QuatMatrix p(size, 1);
    p(1, 0) = Quaternion{1.0};
    return p;
}

QuatMatrix point_inf(int size) {
    QuatMatrix p(size, 1);
    p(0, 0) = Quaternion{1.0};
    return p;
}

SpMatrix heisenberg(const Quaternion& s, const std::vector<Quaternion>& zeta) {
    double z2 = 0.0;
    for (const Quaternion& q : zeta) z2 += q.norm_sq();
    if (std::abs(s.w - 0.5 * z2) > tol::kSp * std::max(1.0, z2))
        throw InvalidTranslation("Re(s) must equal |zeta|^2 / 2");
    const int size = static_cast<int>(zeta.size()) + 2;
    QuatMatrix t = QuatMatrix::identity(size);
    t(1, 0) = s;
    for (std::size_t k = 0; k < zeta.size(); ++k) {
        t(2 + static_cast<int>(k), 0) = zeta[k];
        t(1, 2 + static_cast<int>(k)) = zeta[k].conj();
    }
    return {t, FormTag::J2};
}

std::pair<Quaternion, std::vector<Quaternion>> heisenberg_params(const SpMatrix& t) {
    if (t.form != FormTag::J2) throw InvalidTranslation("Heisenberg translations are written for J2");
    const int size = t.size();
    std::vector<Quaternion> zeta;
    for (int k = 2; k < size; ++k) zeta.push_back(t.A(k, 0));
    const Quaternion s = t.A(1, 0);
    const SpMatrix rebuilt = heisenberg(s, zeta);
    if (max_abs_diff(rebuilt.A, t.A) > kStructure) throw InvalidTranslation("not of Heisenberg shape");
    return {s, zeta};
}

SpInvariants sp_classify(const SpMatrix& a) {
    if (!sp_validate(a, 1e-8)) throw InvalidMatrix("not a member of Sp(n,1) for " + to_string(a.form));
    SpInvariants inv;
    inv.classes = right_eigenvalues(a.A);
    const double f = frobenius(a.A);
    const double fro2 = std::max(1.0, f * f);
    const double rel = std::max(4 * kUnitRoundoff, form_residual(a.A, a.form) / fro2);
    const double eta = std::max(tol::kEig, 4.0 * std::cbrt(rel * fro2));

    const double log_rho = std::log(inv.classes.front().rep.norm());
    if (log_rho > 2.0 * eta) {
        inv.kind = IsometryKind::loxodromic;
        inv.lambda1 = inv.classes.front().rep;
        const cd l1 = as_complex(inv.lambda1);
        const cd partner = l1 / std::norm(l1);
        std::size_t pi = 1;
        for (std::size_t i = 1; i < inv.classes.size(); ++i)
            if (std::abs(as_complex(inv.classes[i].rep) - partner) <
                std::abs(as_complex(inv.classes[pi].rep) - partner))
                pi = i;
        for (const Quaternion& q : remaining(inv.classes, {0, pi}))
            inv.delta_cp = std::max(inv.delta_cp, std::abs(as_complex(q) - 1.0));
        inv.M = 2.0 * inv.delta_cp + std::abs(l1 - 1.0) + std::abs(as_complex(inv.classes[pi].rep) - 1.0);
        for (std::size_t i = 0; i < inv.classes.size(); ++i)
            inv.eigen_types.push_back(i == 0 || i == pi ? "null" : type_name(class_type(a, inv.classes[i].rep), eta));
        return inv;
    }
    if (log_rho > eta)
        throw AmbiguousClass({"loxodromic", "parabolic"},
                             "log spectral radius " + std::to_string(log_rho) + " inside noise band");

    std::size_t neg = inv.classes.size();
    for (std::size_t i = 0; i < inv.classes.size(); ++i) {
        const std::string t = type_name(class_type(a, inv.classes[i].rep), eta);
        inv.eigen_types.push_back(t);
        if (t != "negative") continue;
        const double ang = std::arg(as_complex(inv.classes[i].rep));
        if (neg == inv.classes.size() || ang < std::arg(as_complex(inv.classes[neg].rep))) neg = i;
    }
    // Elliptic elements are diagonalizable; a Jordan block on the unit circle means parabolic.
    bool defective = false;
    for (const EigenClass& c : inv.classes) {
        const Eigen::Index expected = (c.rep.x < 1e-6 ? 2 : 1) * c.multiplicity;
        defective = defective || chi_eigenspace(a.A, as_complex(c.rep), 1e-6).cols() < expected;
    }
    if (neg == inv.classes.size() || defective) {
        inv.kind = IsometryKind::parabolic;
        return inv;
    }
    inv.lambda1 = inv.classes[neg].rep;
    double spread = 0.0;
    for (const Quaternion& q : remaining(inv.classes, {neg})) spread = std::max(spread, std::abs(as_complex(q) - 1.0));
    inv.delta_ell = spread + std::abs(as_complex(inv.lambda1) - 1.0);
    const bool distinct = std::all_of(inv.classes.begin(), inv.classes.end(),
                                      [](const EigenClass& c) { return c.multiplicity == 1; });
    inv.kind = distinct ? IsometryKind::regular_elliptic : IsometryKind::elliptic;
    return inv;
}

double line_distance(const QuatMatrix& x, const QuatMatrix& y) {
    const double nx = frobenius(x), ny = frobenius(y);
    if (nx == 0.0 || ny == 0.0) throw DegenerateConfiguration("zero vector is not a line");
    const QuatMatrix px = x * x.adjoint();
    const QuatMatrix py = y * y.adjoint();
    double s = 0.0;
    for (int i = 0; i < px.rows(); ++i)
        for (int j = 0; j < px.cols(); ++j) s += (px(i, j) * (1.0 / (nx * nx)) - py(i, j) * (1.0 / (ny * ny))).norm_sq();
    return std::sqrt(s);
}

std::vector<QuatMatrix> sp_fixed_points(const SpMatrix& a, const SpInvariants& inv) {
    std::vector<QuatMatrix> out;
    if (inv.kind == IsometryKind::loxodromic) {
        const cd l1 = as_complex(inv.lambda1);
        out.push_back(eigvec_for(a.A, inv.lambda1));
        out.push_back(eigvec_for(a.A, Quaternion::from_complex(l1 / std::norm(l1))));
    } else if (inv.kind == IsometryKind::parabolic) {
        double best = -1.0;
        Eigen::VectorXcd chi;
        for (const EigenClass& c : inv.classes) {
            const ClassType t = class_type(a, c.rep);
            for (Eigen::Index k = 0; k < t.gram_eval.size(); ++k) {
                const double score = std::abs(t.gram_eval(k));
                if (best < 0.0 || score < best) {
                    best = score;
                    chi = t.space * t.gram_evec.col(k);
                }
            }
        }
        if (best >= 0.0) out.push_back(column_from_chi(chi));
    }
    return out;
}

int sp_distinct_limit_points(const SpMatrix& f, const SpMatrix& g) {
    std::vector<QuatMatrix> seeds;
    for (const SpMatrix* x : {&f, &g}) {
        try {
            const SpInvariants inv = sp_classify(*x);
            for (QuatMatrix& p : sp_fixed_points(*x, inv)) seeds.push_back(std::move(p));
        } catch (const Error&) {
        }
    }
    std::vector<QuatMatrix> maps{f.A, sp_inverse_unchecked(f).A, g.A, sp_inverse_unchecked(g).A};
    std::vector<QuatMatrix> points;
    auto add = [&](const QuatMatrix& p) {
        if (frobenius(p) == 0.0) return;
        for (const QuatMatrix& q : points)
            if (line_distance(p, q) < kLine) return;
        points.push_back(p);
    };
    for (const QuatMatrix& p : seeds) {
        add(p);
        for (const QuatMatrix& m : maps) add(m * p);
    }
    return static_cast<int>(points.size());
}

Certificate check_sp_elliptic(const SpMatrix& g_in, const SpMatrix& h_in) {
    if (g_in.size() != h_in.size()) throw DimensionMismatch("g and h have different sizes");
    const SpMatrix g = require_form(g_in, FormTag::J1);
    const SpMatrix h = require_form(h_in, FormTag::J1);
    Certificate cert;
    cert.inequality_id = InequalityId::sp_elliptic;
    cert.f_name = "g";
    cert.g_name = "h";

    double off = 0.0;
    for (int k = 1; k < g.size(); ++k) off = std::max({off, g.A(0, k).norm(), g.A(k, 0).norm()});
    if (off > kStructure) throw PreconditionFailed("g_fixes_0", "g is not block diagonal in J1 coordinates");
    cert.record("g_fixes_0", true, off);

    const SpInvariants inv = sp_classify(g);
    if (!is_elliptic(inv.kind)) throw PreconditionFailed("g_elliptic", "g is " + to_string(inv.kind));
    cert.record("g_regular_elliptic", inv.kind == IsometryKind::regular_elliptic);
    cert.record("delta_lt_1", inv.delta_ell < 1.0, inv.delta_ell);

    cert.lhs = h.A(0, 0).norm() * inv.delta_ell;
    cert.rhs = 1.0;
    cert.distinct_limit_points = sp_distinct_limit_points(g, h);
    cert.non_elementary = cert.distinct_limit_points >= 3;
    finalize(cert);
    return cert;
}

Certificate check_sp_shimizu(const SpMatrix& t_in, const SpMatrix& a_in) {
    if (t_in.size() != a_in.size()) throw DimensionMismatch("T and A have different sizes");
    const SpMatrix t = require_form(t_in, FormTag::J2);
    const SpMatrix a = require_form(a_in, FormTag::J2);
    if (!sp_validate(a, 1e-8)) throw InvalidMatrix("A is not a member of Sp(n,1)");
    Certificate cert;
    cert.inequality_id = InequalityId::sp_shimizu;
    cert.f_name = "T";
    cert.g_name = "A";

    std::pair<Quaternion, std::vector<Quaternion>> params;
    try {
        params = heisenberg_params(t);
    } catch (const InvalidTranslation& e) {
        throw PreconditionFailed("t_heisenberg", e.what());
    }
    cert.record("t_heisenberg", true);
    double zeta = 0.0;
    for (const Quaternion& q : params.second) zeta += q.norm_sq();
    zeta = std::sqrt(zeta);

    const QuatMatrix u = a.U();
    const double t_sup = std::max({a.b().norm(), vector_norm(a.beta()), vector_norm(a.gamma()),
                                   operator_norm(u - QuatMatrix::identity(u.rows()))});
    const double m = params.first.norm() + 2.0 * zeta;
    cert.record("t", true, t_sup);
    cert.record("M", true, m);
    cert.record("zeta_lt_half", zeta < 0.5, zeta);

    cert.lhs = m * t_sup + 2.0 * zeta;
    cert.rhs = 1.0;
    const double scale = std::max(1.0, frobenius(a.A));
    cert.fixes_o = a.b().norm() <= kStructure * scale && vector_norm(a.beta()) <= kStructure * scale;
    cert.distinct_limit_points = sp_distinct_limit_points(t, a);
    cert.non_elementary = cert.distinct_limit_points >= 3;
    finalize(cert);
    return cert;
}

Certificate check_cao_parker(const SpMatrix& g_in, const SpMatrix& h_in) {
    if (g_in.size() != h_in.size()) throw DimensionMismatch("g and h have different sizes");
    const SpMatrix g = require_form(g_in, FormTag::J2);
    const SpMatrix h = require_form(h_in, FormTag::J2);
    if (!sp_validate(h, 1e-8)) throw InvalidMatrix("h is not a member of Sp(n,1)");
    Certificate cert;
    cert.inequality_id = InequalityId::sp_cao_parker;

    double off = 0.0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (i != j) off = std::max(off, g.A(i, j).norm());
    if (off > kStructure) throw PreconditionFailed("g_diagonal", "g does not fix o and inf in diagonal form");
    cert.record("g_diagonal", true, off);

    const SpInvariants inv = sp_classify(g);
    if (inv.kind != IsometryKind::loxodromic) throw PreconditionFailed("g_loxodromic", "g is " + to_string(inv.kind));
    if (!(inv.M < 1.0)) throw PreconditionFailed("M_g_lt_1", "M_g = " + std::to_string(inv.M));
    cert.record("M_g_lt_1", true, inv.M);

    cert.lhs = std::sqrt(h.a().norm() * h.d().norm()) * std::sqrt(h.b().norm() * h.c().norm());
    cert.rhs = (1.0 - inv.M) / (inv.M * inv.M);

    const std::vector<QuatMatrix> fix_g{point_o(g.size()), point_inf(g.size())};
    bool disjoint = true;
    try {
        const SpInvariants hinv = sp_classify(h);
        for (const QuatMatrix& p : sp_fixed_points(h, hinv))
            for (const QuatMatrix& q : fix_g) disjoint = disjoint && line_distance(p, q) >= kLine;
    } catch (const Error&) {
    }
    cert.record("fixed_points_disjoint", disjoint);
    cert.distinct_limit_points = sp_distinct_limit_points(g, h);
    cert.non_elementary = cert.distinct_limit_points >= 3;
    finalize(cert);
    return cert;
}

}  // namespace hypdisc
