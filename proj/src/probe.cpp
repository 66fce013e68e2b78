#include "hypdisc/probe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <thread>
#include <unordered_set>

#include "hypdisc/errors.hpp"
#include "hypdisc/jorgensen.hpp"

namespace hypdisc {

namespace {

// ---------------------------------------------------------------- parallel helpers

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::max(1, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t hi = std::min(count, (w + 1) * chunk);
                for (std::size_t i = w * chunk; i < hi; ++i) body(i);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : failures)
        if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------- dedup keys

using Key = std::vector<double>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (double v : k) h = (h ^ std::hash<double>{}(v)) * 1099511628211ULL;
        return h;
    }
};

void push_rounded(Key& k, double v) {
    const double r = std::nearbyint(v / tol::kDedup);
    k.push_back(r == 0.0 ? 0.0 : r);
}

void canonical_sign(Key& k) {
    for (double v : k) {
        if (v == 0.0) continue;
        if (v < 0.0)
            for (double& w : k) w = w == 0.0 ? 0.0 : -w;
        return;
    }
}

template <class M>
struct Traits;

template <>
struct Traits<CliffordMatrix> {
    static CliffordMatrix mul(const CliffordMatrix& a, const CliffordMatrix& b) { return a * b; }
    static CliffordMatrix inverse(const CliffordMatrix& a) { return mat_inverse_unchecked(a); }
    static CliffordMatrix identity(const CliffordMatrix& like) { return CliffordMatrix::identity(like.n()); }
    static Key key(const CliffordMatrix& m) {
        Key k;
        k.reserve(4 * m.a.dim());
        for (const CliffordNumber* e : {&m.a, &m.b, &m.c, &m.d})
            for (double c : e->coeffs()) push_rounded(k, c);
        canonical_sign(k);
        return k;
    }
};

template <>
struct Traits<SpMatrix> {
    static SpMatrix mul(const SpMatrix& a, const SpMatrix& b) { return a * b; }
    static SpMatrix inverse(const SpMatrix& a) { return sp_inverse_unchecked(a); }
    static SpMatrix identity(const SpMatrix& like) { return {QuatMatrix::identity(like.size()), like.form}; }
    static Key key(const SpMatrix& m) {
        Key k;
        k.reserve(4 * static_cast<std::size_t>(m.size() * m.size()));
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) {
                const Quaternion& q = m.A(i, j);
                for (double c : {q.w, q.x, q.y, q.z}) push_rounded(k, c);
            }
        canonical_sign(k);
        return k;
    }
};

template <class M>
Ball<M> build_ball(const std::vector<M>& gens, const BallOptions& opt) {
    Ball<M> ball;
    if (gens.empty() || opt.depth < 1) return ball;
    using T = Traits<M>;
    std::vector<M> letters;
    for (const M& g : gens) {
        letters.push_back(g);
        letters.push_back(T::inverse(g));
    }
    std::unordered_set<Key, KeyHash> seen;
    seen.insert(T::key(T::identity(gens.front())));

    struct Node {
        Word word;
        M matrix;
    };
    std::vector<Node> frontier{{{}, T::identity(gens.front())}};
    const int nl = static_cast<int>(letters.size());

    for (int len = 1; len <= opt.depth && !frontier.empty(); ++len) {
        struct Child {
            int letter;
            M matrix;
            Key key;
        };
        std::vector<std::vector<Child>> children(frontier.size());
        parallel_for(frontier.size(), opt.threads, [&](std::size_t i) {
            const Node& p = frontier[i];
            for (int l = 0; l < nl; ++l) {
                if (!p.word.empty() && (p.word.back() ^ 1) == l) continue;
                M m = T::mul(p.matrix, letters[l]);
                Key k = T::key(m);
                children[i].push_back({l, std::move(m), std::move(k)});
            }
        });
        std::vector<Node> next;
        for (std::size_t i = 0; i < frontier.size() && !ball.truncated; ++i) {
            for (Child& c : children[i]) {
                ++ball.words_examined;
                if (!seen.insert(std::move(c.key)).second) continue;
                Word w = frontier[i].word;
                w.push_back(c.letter);
                ball.entries.push_back({w, c.matrix});
                next.push_back({std::move(w), std::move(c.matrix)});
                if (ball.entries.size() >= opt.budget) {
                    ball.truncated = true;
                    break;
                }
            }
        }
        if (ball.truncated) break;
        frontier = std::move(next);
    }
    return ball;
}

// ---------------------------------------------------------------- test-map bounds

double elliptic_beta_bound() {
    const double s = std::sin(std::numbers::pi / 10.0);
    return 4.0 * s * s;
}

double rho_of(const IsometryInvariants& inv) { return 2.0 * std::cosh(inv.tau / 2.0) * std::sqrt(inv.beta); }

void require_kind(bool ok, const std::string& detail) {
    if (!ok) throw PreconditionFailed("test_map_kind", detail);
}

bool sp_block_diagonal_j1(const SpMatrix& g) {
    for (int k = 1; k < g.size(); ++k)
        if (g.A(0, k).norm() > 1e-9 || g.A(k, 0).norm() > 1e-9) return false;
    return true;
}

bool sp_diagonal(const SpMatrix& g) {
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (i != j && g.A(i, j).norm() > 1e-9) return false;
    return true;
}

}  // namespace

std::string to_string(Algebra a) {
    switch (a) {
        case Algebra::clifford: return "clifford";
        case Algebra::sp: return "sp";
        case Algebra::su: return "su";
    }
    return "unknown";
}

Algebra algebra_from_string(const std::string& s) {
    if (s == "clifford") return Algebra::clifford;
    if (s == "sp") return Algebra::sp;
    if (s == "su") return Algebra::su;
    throw InputError("unknown algebra: " + s);
}

void validate_group(const GroupPresentation& g) {
    if (g.generators.empty()) throw InputError("group has no generators");
    for (const Generator& gen : g.generators) {
        const Element& e = gen.element;
        if (e.is_clifford() != (g.algebra == Algebra::clifford))
            throw DimensionMismatch("generator " + gen.name + " uses a different algebra");
        if (e.n() != g.n) throw DimensionMismatch("generator " + gen.name + " has the wrong dimension");
        if (e.is_clifford()) {
            if (!validate(e.clifford, tol::kAlg)) throw InvalidMatrix("generator " + gen.name + " is not a Clifford matrix");
        } else {
            if (!sp_validate(e.sp, tol::kSp)) throw InvalidMatrix("generator " + gen.name + " is not in Sp(n,1)");
            if (g.algebra == Algebra::su && !e.sp.A.is_complex(0.0))
                throw InvalidMatrix("generator " + gen.name + " has j or k components");
        }
    }
}

std::string word_string(const Word& w, const GroupPresentation& g) {
    if (w.empty()) return "e";
    std::string out;
    for (int l : w) {
        if (!out.empty()) out += ' ';
        out += g.generators.at(static_cast<std::size_t>(l / 2)).name;
        if (l & 1) out += "^-1";
    }
    return out;
}

Ball<CliffordMatrix> word_ball_clifford(const GroupPresentation& g, const BallOptions& opt) {
    std::vector<CliffordMatrix> gens;
    for (const Generator& gen : g.generators) {
        if (!gen.element.is_clifford()) throw DimensionMismatch("word_ball_clifford on a non-Clifford group");
        gens.push_back(gen.element.clifford);
    }
    return build_ball(gens, opt);
}

Ball<SpMatrix> word_ball_sp(const GroupPresentation& g, const BallOptions& opt) {
    std::vector<SpMatrix> gens;
    for (const Generator& gen : g.generators) {
        if (gen.element.is_clifford()) throw DimensionMismatch("word_ball_sp on a Clifford group");
        gens.push_back(gen.element.sp);
    }
    return build_ball(gens, opt);
}

std::string to_string(ProbeMode m) {
    switch (m) {
        case ProbeMode::thm1_lox: return "thm1_lox";
        case ProbeMode::thm1_nonelliptic: return "thm1_nonelliptic";
        case ProbeMode::thm1_elliptic: return "thm1_elliptic";
        case ProbeMode::thm2_conjugate: return "thm2_conjugate";
        case ProbeMode::thmq_lox: return "thmq_lox";
        case ProbeMode::thmq_heisenberg: return "thmq_heisenberg";
        case ProbeMode::thmq_elliptic: return "thmq_elliptic";
    }
    return "unknown";
}

ProbeMode probe_mode_from_string(const std::string& s) {
    for (ProbeMode m : {ProbeMode::thm1_lox, ProbeMode::thm1_nonelliptic, ProbeMode::thm1_elliptic,
                        ProbeMode::thm2_conjugate, ProbeMode::thmq_lox, ProbeMode::thmq_heisenberg,
                        ProbeMode::thmq_elliptic})
        if (s == to_string(m)) return m;
    throw InputError("unknown probe mode: " + s);
}

bool is_quaternionic(ProbeMode m) {
    return m == ProbeMode::thmq_lox || m == ProbeMode::thmq_heisenberg || m == ProbeMode::thmq_elliptic;
}

TestMapCheck validate_test_map(const Element& f, ProbeMode mode, std::uint64_t seed) {
    TestMapCheck check;
    check.mode = mode;
    if (is_quaternionic(mode) == f.is_clifford())
        throw PreconditionFailed("test_map_kind", "mode " + to_string(mode) + " does not match the test map algebra");

    if (f.is_clifford()) {
        const IsometryInvariants inv = classify(f.clifford, seed);
        check.kind = to_string(inv.kind);
        check.values = {{"beta", inv.beta}, {"tau", inv.tau}, {"theta_max", inv.theta_max}};
        const double bound = elliptic_beta_bound();
        auto lox_bound = [&] {
            check.hypothesis = "0 < beta(f) < 1";
            check.passed = inv.beta > 0.0 && inv.beta < 1.0;
        };
        auto nonelliptic_bound = [&] {
            const double rho = rho_of(inv);
            const double disc = (1.0 - rho) * (1.0 - rho) - 4.0 * inv.beta;
            check.values.emplace_back("rho", rho);
            check.values.emplace_back("discriminant", disc);
            check.hypothesis = "0 <= 2 cosh(tau/2) sqrt(beta(f)) < 1 and (1 - rho)^2 >= 4 beta(f)";
            check.passed = rho < 1.0 && disc >= 0.0;
        };
        auto elliptic_bound = [&](bool need_regular) {
            check.values.emplace_back("bound", bound);
            check.hypothesis = need_regular ? "f regular elliptic, 0 < beta(f) < 4 sin^2(pi/10)"
                                            : "0 < beta(f) < 4 sin^2(pi/10)";
            check.passed = inv.beta > 0.0 && inv.beta < bound &&
                           (!need_regular || inv.kind == IsometryKind::regular_elliptic);
        };
        switch (mode) {
            case ProbeMode::thm1_lox:
                require_kind(inv.kind == IsometryKind::loxodromic, "f must be loxodromic");
                lox_bound();
                break;
            case ProbeMode::thm1_nonelliptic:
                require_kind(!is_elliptic(inv.kind), "f must be non-elliptic");
                nonelliptic_bound();
                break;
            case ProbeMode::thm1_elliptic:
                require_kind(is_elliptic(inv.kind), "f must be elliptic");
                elliptic_bound(false);
                break;
            case ProbeMode::thm2_conjugate:
                if (inv.kind == IsometryKind::loxodromic) lox_bound();
                else if (inv.kind == IsometryKind::parabolic) nonelliptic_bound();
                else elliptic_bound(true);
                break;
            default: break;
        }
        return check;
    }

    const SpMatrix& g = f.sp;
    switch (mode) {
        case ProbeMode::thmq_lox: {
            const SpInvariants inv = sp_classify(g);
            check.kind = to_string(inv.kind);
            require_kind(inv.kind == IsometryKind::loxodromic, "f must be loxodromic");
            const bool diag = sp_diagonal(to_form(g, FormTag::J2));
            check.values = {{"M", inv.M}, {"delta_cp", inv.delta_cp}, {"diagonal", diag ? 1.0 : 0.0}};
            check.hypothesis = "M_f < 1, f diagonal in J2 coordinates";
            check.passed = inv.M < 1.0 && diag;
            break;
        }
        case ProbeMode::thmq_heisenberg: {
            std::pair<Quaternion, std::vector<Quaternion>> p;
            try {
                p = heisenberg_params(to_form(g, FormTag::J2));
            } catch (const InvalidTranslation& e) {
                throw PreconditionFailed("test_map_kind", e.what());
            }
            check.kind = "parabolic";
            double z2 = 0.0;
            for (const Quaternion& q : p.second) z2 += q.norm_sq();
            const double zeta = std::sqrt(z2);
            check.values = {{"zeta", zeta}, {"s", p.first.norm()}};
            check.hypothesis = "Heisenberg translation with |zeta| < 1/2";
            check.passed = zeta < 0.5 && (zeta > 0.0 || p.first.norm() > 0.0);
            break;
        }
        case ProbeMode::thmq_elliptic: {
            const SpInvariants inv = sp_classify(g);
            check.kind = to_string(inv.kind);
            require_kind(is_elliptic(inv.kind), "f must be elliptic");
            const bool block = sp_block_diagonal_j1(to_form(g, FormTag::J1));
            check.values = {{"delta", inv.delta_ell}, {"fixes_0", block ? 1.0 : 0.0}};
            check.hypothesis = "f regular elliptic fixing 0 in J1 coordinates, delta(f) < 1";
            check.passed = inv.kind == IsometryKind::regular_elliptic && inv.delta_ell < 1.0 && block;
            break;
        }
        default: break;
    }
    return check;
}

// ---------------------------------------------------------------- Zariski heuristic

namespace {

int numeric_rank(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& s = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-8 * s(0)) ++r;
    return r;
}

int numeric_rank(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const Eigen::VectorXd& s = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-8 * s(0)) ++r;
    return r;
}

}  // namespace

ZariskiEvidence zariski_heuristic(const GroupPresentation& g, std::uint64_t seed) {
    ZariskiEvidence ev;
    std::mt19937_64 rng(seed ^ 0x5A5A5A5AULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    BallOptions opt;
    opt.depth = 3;

    if (g.algebra == Algebra::clifford) {
        std::vector<BoundaryPoint> candidates;
        std::vector<CliffordMatrix> gens;
        for (const Generator& gen : g.generators) {
            gens.push_back(gen.element.clifford);
            try {
                const std::vector<BoundaryPoint> fp = fixed_points(gen.element.clifford, seed);
                candidates.insert(candidates.end(), fp.begin(), fp.end());
            } catch (const Error&) {
            }
        }
        for (const BoundaryPoint& p : candidates) {
            const bool all = std::all_of(gens.begin(), gens.end(), [&](const CliffordMatrix& m) {
                return same_point(mobius_apply(m, p), p, tol::kGeo);
            });
            ev.common_fixed_point = ev.common_fixed_point || all;
        }
        const int size = g.n + 3;
        ev.ambient_dim = size;
        const Ball<CliffordMatrix> ball = word_ball_clifford(g, opt);
        std::vector<Eigen::MatrixXd> mats{Eigen::MatrixXd::Identity(size, size)};
        for (const auto& e : ball.entries) mats.push_back(to_lorentz(e.matrix, seed).m);
        Eigen::VectorXd x(size);
        for (Eigen::Index i = 0; i < size; ++i) x(i) = normal(rng);
        Eigen::MatrixXd orbit(size, static_cast<Eigen::Index>(mats.size()));
        Eigen::MatrixXd algebra(size * size, static_cast<Eigen::Index>(mats.size()));
        for (std::size_t k = 0; k < mats.size(); ++k) {
            orbit.col(static_cast<Eigen::Index>(k)) = mats[k] * x;
            algebra.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXd>(mats[k].data(), size * size);
        }
        ev.orbit_rank = numeric_rank(orbit);
        ev.algebra_rank = numeric_rank(algebra);
    } else {
        std::vector<QuatMatrix> candidates;
        for (const Generator& gen : g.generators) {
            try {
                const SpInvariants inv = sp_classify(gen.element.sp);
                for (QuatMatrix& p : sp_fixed_points(gen.element.sp, inv)) candidates.push_back(std::move(p));
            } catch (const Error&) {
            }
        }
        for (const QuatMatrix& p : candidates) {
            const bool all = std::all_of(g.generators.begin(), g.generators.end(), [&](const Generator& gen) {
                return line_distance(gen.element.sp.A * p, p) < 1e-6;
            });
            ev.common_fixed_point = ev.common_fixed_point || all;
        }
        const int size = 2 * (g.n + 1);
        ev.ambient_dim = size;
        const Ball<SpMatrix> ball = word_ball_sp(g, opt);
        std::vector<Eigen::MatrixXcd> mats{Eigen::MatrixXcd::Identity(size, size)};
        for (const auto& e : ball.entries) mats.push_back(complex_adjoint(e.matrix.A));
        Eigen::VectorXcd x(size);
        for (Eigen::Index i = 0; i < size; ++i) x(i) = {normal(rng), normal(rng)};
        Eigen::MatrixXcd orbit(size, static_cast<Eigen::Index>(mats.size()));
        Eigen::MatrixXcd algebra(size * size, static_cast<Eigen::Index>(mats.size()));
        for (std::size_t k = 0; k < mats.size(); ++k) {
            orbit.col(static_cast<Eigen::Index>(k)) = mats[k] * x;
            algebra.col(static_cast<Eigen::Index>(k)) =
                Eigen::Map<const Eigen::VectorXcd>(mats[k].data(), size * size);
        }
        ev.orbit_rank = numeric_rank(orbit);
        ev.algebra_rank = numeric_rank(algebra);
    }
    ev.passed = !ev.common_fixed_point && ev.orbit_rank == ev.ambient_dim;
    return ev;
}

// ---------------------------------------------------------------- probe

namespace {

struct Outcome {
    enum class State { not_loxodromic, filtered, skipped, error, checked } state = State::not_loxodromic;
    std::string clause;
    Certificate cert;
};

Outcome probe_clifford(const CliffordMatrix& f, const Analysis& fa, const CliffordMatrix& h,
                       const CliffordMatrix& f_conj, const CliffordMatrix& g, ProbeMode mode, std::uint64_t seed) {
    Outcome out;
    try {
        const Analysis ga = analyze(g, seed);
        if (ga.inv.kind != IsometryKind::loxodromic) return out;
        if (shares_fixed_point(fa, g) || shares_fixed_point(ga, f)) {
            out.state = Outcome::State::filtered;
            return out;
        }
        ProbeMode effective = mode;
        CliffordMatrix partner = g;
        if (mode == ProbeMode::thm2_conjugate) {
            partner = g * f * mat_inverse_unchecked(g);
            effective = fa.inv.kind == IsometryKind::loxodromic ? ProbeMode::thm1_lox
                        : is_elliptic(fa.inv.kind)               ? ProbeMode::thm1_elliptic
                                                                 : ProbeMode::thm1_nonelliptic;
        }
        switch (effective) {
            case ProbeMode::thm1_lox: out.cert = check_lox(f, partner, seed); break;
            case ProbeMode::thm1_elliptic: out.cert = check_elliptic(f, partner, seed); break;
            default: out.cert = check_nonelliptic(f_conj, h * partner * mat_inverse_unchecked(h), seed); break;
        }
        out.state = Outcome::State::checked;
    } catch (const PreconditionFailed& e) {
        out.state = Outcome::State::skipped;
        out.clause = e.clause();
    } catch (const Error& e) {
        out.state = Outcome::State::error;
        out.clause = e.what();
    }
    return out;
}

bool sp_shares_fixed_point(const SpMatrix& a, const SpMatrix& b) {
    const SpInvariants inv = sp_classify(a);
    for (const QuatMatrix& p : sp_fixed_points(a, inv))
        if (line_distance(b.A * p, p) < 1e-6) return true;
    return false;
}

Outcome probe_sp(const SpMatrix& f, const SpMatrix& g, ProbeMode mode) {
    Outcome out;
    try {
        const SpInvariants gi = sp_classify(g);
        if (gi.kind != IsometryKind::loxodromic) return out;
        const SpMatrix fj = f.form == g.form ? f : to_form(f, g.form);
        if (sp_shares_fixed_point(g, fj) || (!is_elliptic(sp_classify(fj).kind) && sp_shares_fixed_point(fj, g))) {
            out.state = Outcome::State::filtered;
            return out;
        }
        switch (mode) {
            case ProbeMode::thmq_lox: out.cert = check_cao_parker(f, g); break;
            case ProbeMode::thmq_heisenberg: out.cert = check_sp_shimizu(f, g); break;
            default: out.cert = check_sp_elliptic(f, g); break;
        }
        out.state = Outcome::State::checked;
    } catch (const PreconditionFailed& e) {
        out.state = Outcome::State::skipped;
        out.clause = e.clause();
    } catch (const Error& e) {
        out.state = Outcome::State::error;
        out.clause = e.what();
    }
    return out;
}

template <class M>
void collect(ProbeReport& rep, const GroupPresentation& g, const Ball<M>& ball, std::vector<Outcome>& outcomes) {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        Outcome& o = outcomes[i];
        const std::string w = word_string(ball.entries[i].word, g);
        switch (o.state) {
            case Outcome::State::not_loxodromic: continue;
            case Outcome::State::filtered:
                ++rep.loxodromic_found;
                ++rep.filtered_shared_fixed_point;
                continue;
            case Outcome::State::skipped:
                ++rep.loxodromic_found;
                ++rep.skipped[o.clause];
                continue;
            case Outcome::State::error:
                rep.errors.emplace_back(w, o.clause);
                continue;
            case Outcome::State::checked: break;
        }
        ++rep.loxodromic_found;
        ++rep.checked;
        o.cert.g_name = w;
        ProbeItem item{w, static_cast<int>(ball.entries[i].word.size()), o.cert};
        if (o.cert.verdict != Verdict::consistent) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = item;
        }
        rep.certificates.push_back(std::move(item));
    }
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPDISC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

ProbeReport run_probe(const GroupPresentation& g, const Element& f, ProbeMode mode, const ProbeOptions& opt) {
    validate_group(g);
    if (f.n() != g.n || f.is_clifford() != (g.algebra == Algebra::clifford))
        throw DimensionMismatch("test map and group live in different groups");
    ProbeReport rep;
    rep.mode = mode;
    rep.depth = opt.depth;
    rep.seed = opt.seed;
    rep.test_map_check = validate_test_map(f, mode, opt.seed);
    if (!rep.test_map_check.passed)
        throw PreconditionFailed("test_map", "test map fails: " + rep.test_map_check.hypothesis);
    rep.zariski = zariski_heuristic(g, opt.seed);

    const BallOptions bopt{opt.depth, opt.budget, opt.threads};
    if (g.algebra == Algebra::clifford) {
        const Ball<CliffordMatrix> ball = word_ball_clifford(g, bopt);
        rep.words_examined = ball.words_examined;
        rep.distinct_elements = ball.entries.size();
        rep.truncated = ball.truncated;
        const CliffordMatrix& fm = f.clifford;
        const Analysis fa = analyze(fm, opt.seed);
        CliffordMatrix h = CliffordMatrix::identity(fm.n()), f_conj = fm;
        if (!is_elliptic(fa.inv.kind)) std::tie(h, f_conj) = conjugate_to_infinity(fm, opt.seed);
        std::vector<Outcome> outcomes(ball.entries.size());
        parallel_for(outcomes.size(), opt.threads, [&](std::size_t i) {
            outcomes[i] = probe_clifford(fm, fa, h, f_conj, ball.entries[i].matrix, mode, opt.seed);
        });
        collect(rep, g, ball, outcomes);
    } else {
        const Ball<SpMatrix> ball = word_ball_sp(g, bopt);
        rep.words_examined = ball.words_examined;
        rep.distinct_elements = ball.entries.size();
        rep.truncated = ball.truncated;
        std::vector<Outcome> outcomes(ball.entries.size());
        parallel_for(outcomes.size(), opt.threads,
                     [&](std::size_t i) { outcomes[i] = probe_sp(f.sp, ball.entries[i].matrix, mode); });
        collect(rep, g, ball, outcomes);
    }

    if (rep.first_violation) {
        rep.summary = "violation found at word " + rep.first_violation->word + " (length " +
                      std::to_string(rep.first_violation->length) + "): the pair with the test map is " +
                      (rep.first_violation->certificate.verdict == Verdict::violation_nondiscrete
                           ? "non-discrete"
                           : "non-discrete or elementary");
    } else if (rep.loxodromic_found == 0) {
        rep.summary = "no loxodromic words up to depth " + std::to_string(opt.depth);
    } else {
        rep.summary = "no violation up to depth " + std::to_string(opt.depth);
    }
    return rep;
}

}  // namespace hypdisc
